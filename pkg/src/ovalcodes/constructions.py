"""Code constructions from oval polynomials, and the hyperovals behind them.

Four generator matrices are built from a family member f over GF(q),
with alpha the context's generator and the q-1 powers alpha^i ordered
by exponent i = 0..q-2:

  hyperoval-mds  3 x (q+2): (0,0,1), graph columns (f(alpha^i), alpha^i, 1),
                 (1,0,0), (0,1,0) -- the classical MDS code of the hyperoval
  extended       3 x (q+3): hyperoval-mds plus the parity column (1,1,0)
  cf             3 x (q+1): graph columns over nonzero arguments plus
                 (0,1,1), (1,0,1); near-MDS for GF(2)-coefficient ovals, odd m
  cfbar          3 x (q+2): cf with the zero-argument column (0,0,1) restored

The first two require f to verify as an oval polynomial (their claims
are false otherwise); the last two only need the f(0)=0, f(1)=1
normalization, so non-theorem inputs can still be built and measured.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import FamilyError
from .gf2m import FieldCtx, field_new
from .lincode import GeneratorMatrix, weight_distribution
from .opoly import OvalPolySpec, eval_table, oval_check_table

CONSTRUCTIONS = ("hyperoval-mds", "extended", "cf", "cfbar")


def _context_for(spec: OvalPolySpec, ctx: FieldCtx | None) -> FieldCtx:
    if ctx is None:
        return field_new(spec.m)
    if ctx.m != spec.m:
        raise ValueError(f"context is GF(2^{ctx.m}) but the spec needs m={spec.m}")
    return ctx


def _label(tag: str, spec: OvalPolySpec) -> str:
    return f"{tag}/{spec.slug()}/m={spec.m}"


def _oval_table_or_raise(spec: OvalPolySpec, ctx: FieldCtx) -> list[int]:
    table = eval_table(spec, ctx)
    if not oval_check_table(table, ctx):
        raise FamilyError(
            f"{spec.display()} is not an oval polynomial over GF(2^{ctx.m}); "
            "the hyperoval constructions need one"
        )
    return table


def _normalized_table_or_raise(spec: OvalPolySpec, ctx: FieldCtx) -> list[int]:
    table = eval_table(spec, ctx)
    if table[0] != 0 or table[1] != 1:
        raise FamilyError(
            f"{spec.display()} violates f(0)=0, f(1)=1 over GF(2^{ctx.m})"
        )
    return table


def hyperoval_mds_matrix(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> GeneratorMatrix:
    """The [q+2, 3, q] MDS generator whose columns are the hyperoval points."""
    ctx = _context_for(spec, ctx)
    table = _oval_table_or_raise(spec, ctx)
    q = ctx.q
    cols = [(0, 0, 1)]
    cols += [(table[ctx.antilog_table[i]], ctx.antilog_table[i], 1) for i in range(q - 1)]
    cols += [(1, 0, 0), (0, 1, 0)]
    rows = [[c[r] for c in cols] for r in range(3)]
    return GeneratorMatrix(ctx, rows, label=_label("hyperoval-mds", spec))


def extended_mds_matrix(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> GeneratorMatrix:
    """The [q+3, 3, q] near-MDS extension: hyperoval columns plus (1,1,0)."""
    ctx = _context_for(spec, ctx)
    base = hyperoval_mds_matrix(spec, ctx)
    rows = [list(r) + [v] for r, v in zip(base.rows, (1, 1, 0))]
    g = GeneratorMatrix(ctx, rows, label=_label("extended", spec))
    return g


def cf_matrix(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> GeneratorMatrix:
    """The 3 x (q+1) shortened construction over nonzero arguments."""
    ctx = _context_for(spec, ctx)
    table = _normalized_table_or_raise(spec, ctx)
    q = ctx.q
    cols = [(table[ctx.antilog_table[i]], ctx.antilog_table[i], 1) for i in range(q - 1)]
    cols += [(0, 1, 1), (1, 0, 1)]
    rows = [[c[r] for c in cols] for r in range(3)]
    return GeneratorMatrix(ctx, rows, label=_label("cf", spec))


def cfbar_matrix(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> GeneratorMatrix:
    """The 3 x (q+2) variant: cf plus the zero-argument column (0,0,1)."""
    ctx = _context_for(spec, ctx)
    table = _normalized_table_or_raise(spec, ctx)
    q = ctx.q
    cols = [(0, 0, 1)]
    cols += [(table[ctx.antilog_table[i]], ctx.antilog_table[i], 1) for i in range(q - 1)]
    cols += [(0, 1, 1), (1, 0, 1)]
    rows = [[c[r] for c in cols] for r in range(3)]
    return GeneratorMatrix(ctx, rows, label=_label("cfbar", spec))


_BUILDERS = {
    "hyperoval-mds": hyperoval_mds_matrix,
    "extended": extended_mds_matrix,
    "cf": cf_matrix,
    "cfbar": cfbar_matrix,
}


def build_construction(
    name: str, spec: OvalPolySpec, ctx: FieldCtx | None = None
) -> GeneratorMatrix:
    """Dispatch on a construction name from CONSTRUCTIONS."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown construction {name!r}; known: {', '.join(CONSTRUCTIONS)}"
        ) from None
    return builder(spec, ctx)


# ---------------------------------------------------------------------------
# hyperovals as point sets


@dataclass(frozen=True)
class Hyperoval:
    """q+2 projective points no three of which are collinear."""

    ctx: FieldCtx
    points: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.points)


def normalize_point(ctx: FieldCtx, p: tuple[int, int, int]) -> tuple[int, int, int]:
    """Scale a projective point so its last nonzero coordinate is 1."""
    if p == (0, 0, 0):
        raise ValueError("(0,0,0) is not a projective point")
    lead = next(v for v in reversed(p) if v)
    s = ctx.inv(lead)
    return (ctx.mul(p[0], s), ctx.mul(p[1], s), ctx.mul(p[2], s))


def build_hyperoval(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> Hyperoval:
    """Point set {(f(c), c, 1)} + {(1,0,0), (0,1,0)} of a verified oval polynomial."""
    ctx = _context_for(spec, ctx)
    table = _oval_table_or_raise(spec, ctx)
    pts = [(table[c], c, 1) for c in range(ctx.q)] + [(1, 0, 0), (0, 1, 0)]
    return Hyperoval(ctx, tuple(pts))


def _det3(ctx: FieldCtx, p, r, s) -> int:
    return (
        ctx.mul(p[0], ctx.mul(r[1], s[2]) ^ ctx.mul(r[2], s[1]))
        ^ ctx.mul(p[1], ctx.mul(r[0], s[2]) ^ ctx.mul(r[2], s[0]))
        ^ ctx.mul(p[2], ctx.mul(r[0], s[1]) ^ ctx.mul(r[1], s[0]))
    )


def is_hyperoval(points, ctx: FieldCtx) -> bool:
    """Exhaustive check: q+2 distinct points, no three collinear."""
    pts = [normalize_point(ctx, p) for p in points]
    if len(set(pts)) != ctx.q + 2:
        return False
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                if _det3(ctx, pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


def all_projective_points(ctx: FieldCtx) -> list[tuple[int, int, int]]:
    """The q^2 + q + 1 points of the projective plane, normalized."""
    q = ctx.q
    pts = [(x, y, 1) for x in range(q) for y in range(q)]
    pts += [(x, 1, 0) for x in range(q)]
    pts += [(1, 0, 0)]
    return pts


def line_intersection_profile(h: Hyperoval) -> dict[int, int]:
    """How many lines meet the hyperoval in 0, 1, 2, ... points.

    Lines are identified with normalized dual vectors (a, b, c); a point
    lies on the line when a x + b y + c z = 0.
    """
    ctx = h.ctx
    pts = [normalize_point(ctx, p) for p in h.points]
    profile: dict[int, int] = {}
    for line in all_projective_points(ctx):
        a, b, c = line
        hits = sum(
            1
            for (x, y, z) in pts
            if ctx.mul(a, x) ^ ctx.mul(b, y) ^ ctx.mul(c, z) == 0
        )
        profile[hits] = profile.get(hits, 0) + 1
    return profile


def code_from_hyperoval(h: Hyperoval, label: str = "") -> GeneratorMatrix:
    """Generator matrix whose columns are the hyperoval's points."""
    rows = [[p[r] for p in h.points] for r in range(3)]
    return GeneratorMatrix(h.ctx, rows, label=label or "hyperoval")


def hyperoval_from_mds_code(g: GeneratorMatrix, budget: int | None = None) -> Hyperoval:
    """Columns of a [q+2, 3, q] MDS code, as a verified hyperoval."""
    ctx = g.ctx
    q = ctx.q
    if g.k != 3 or g.n != q + 2:
        raise ValueError(f"expected a 3 x (q+2) generator, got {g.k} x {g.n}")
    dist = weight_distribution(g, budget)
    if dist.min_distance != q:
        raise ValueError(
            f"code has minimum distance {dist.min_distance}, not q = {q}; not hyperoval-MDS"
        )
    pts = tuple(normalize_point(ctx, (g.rows[0][j], g.rows[1][j], g.rows[2][j])) for j in range(q + 2))
    if not is_hyperoval(pts, ctx):
        raise ValueError("columns of the MDS code do not form a hyperoval")
    return Hyperoval(ctx, pts)


# ---------------------------------------------------------------------------
# symbolic weight counts for the three near-MDS constructions


def extended_mds_expected_counts(q: int) -> dict[int, int]:
    """Predicted nonzero weights of the [q+3, 3, q] construction."""
    return {
        q: (q - 1) * (q + 2) // 2,
        q + 1: (q - 1) * q * (q + 2) // 2,
        q + 2: (q - 1) * q // 2,
        q + 3: (q - 2) * (q - 1) * q // 2,
    }


def cf_expected_counts(q: int) -> dict[int, int]:
    """Predicted nonzero weights of the [q+1, 3, q-2] construction."""
    return {
        q - 2: (q - 1) * (q - 2),
        q - 1: (q - 1) * (q * q - 5 * q + 12) // 2,
        q: (q - 1) * (4 * q - 5),
        q + 1: (q - 1) * (q * q - 3 * q + 4) // 2,
    }


def cfbar_expected_counts(q: int) -> dict[int, int]:
    """Predicted nonzero weights of the [q+2, 3, q-1] construction."""
    return {
        q - 1: (q - 1) * (q - 2),
        q: (q - 1) * (q * q - 3 * q + 14) // 2,
        q + 1: 3 * (q - 1) * (q - 2),
        q + 2: (q - 1) * (q * q - 3 * q + 4) // 2,
    }


def classical_mds_expected_counts(q: int) -> dict[int, int]:
    """Predicted nonzero weights of the [q+2, 3, q] hyperoval MDS code."""
    return {
        q: (q + 2) * (q * q - 1) // 2,
        q + 2: q * (q - 1) ** 2 // 2,
    }


EXPECTED_COUNTS = {
    "hyperoval-mds": classical_mds_expected_counts,
    "extended": extended_mds_expected_counts,
    "cf": cf_expected_counts,
    "cfbar": cfbar_expected_counts,
}


def expected_parameters(name: str, q: int) -> tuple[int, int, int]:
    """Predicted [n, k, d] of a construction at field size q."""
    if name == "hyperoval-mds":
        return (q + 2, 3, q)
    if name == "extended":
        return (q + 3, 3, q)
    if name == "cf":
        return (q + 1, 3, q - 2)
    if name == "cfbar":
        return (q + 2, 3, q - 1)
    raise ValueError(f"unknown construction {name!r}")


def secant_count(q: int) -> int:
    """Number of 2-point lines of a hyperoval: (q+2)(q+1)/2."""
    return comb(q + 2, 2)
