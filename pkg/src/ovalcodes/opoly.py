"""Oval polynomial families over GF(2^m) and the criteria that certify them.

An oval polynomial f is a permutation of GF(q) with f(0) = 0 and
f(1) = 1 such that for every a the map x -> (f(x+a) + f(a)) * x^(q-2)
is again a permutation.  The known infinite families are cataloged
here; each family knows the m it applies to and, where parameters are
involved (Translation's exponent, Subiaco's a, Adelaide's beta), the
canonical parameter choice is the smallest valid one in encoding order
so that catalogs are reproducible.

Polynomials are handled by value table, not by coefficient vector:
every criterion used here is a statement about f as a function on
GF(q), and tables make the exhaustive scans cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import BudgetExceededError, FamilyError
from .gf2m import ExtFieldCtx, FieldCtx, ext_field_new, field_new

TRANSLATION = "Translation"
SEGRE = "Segre"
GLYNN_A = "GlynnA"
GLYNN_B = "GlynnB"
GLYNN_C = "GlynnC"
CHEROWITZO = "Cherowitzo"
PAYNE = "Payne"
SUBIACO = "Subiaco"
ADELAIDE = "Adelaide"

FAMILIES = (
    TRANSLATION,
    SEGRE,
    GLYNN_A,
    GLYNN_B,
    GLYNN_C,
    CHEROWITZO,
    PAYNE,
    SUBIACO,
    ADELAIDE,
)

# families whose polynomial has all coefficients in GF(2); these admit the
# affine-root-freeness argument and the two shortened constructions
GF2_COEFF_FAMILIES = frozenset(
    {TRANSLATION, SEGRE, GLYNN_A, GLYNN_B, GLYNN_C, CHEROWITZO, PAYNE}
)

# largest m for which the O(q^2) slope scan runs without an explicit override
SLOPE_SCAN_MAX_M = 8


@dataclass(frozen=True)
class OvalPolySpec:
    """One concrete family member: family name, field degree, parameters."""

    family: str
    m: int
    h: int | None = None
    a: int | None = None
    beta: tuple[int, int] | None = None
    e: int | None = None

    @property
    def params(self) -> dict:
        """Parameter mapping as serialized in JSON."""
        out: dict = {}
        if self.h is not None:
            out["h"] = self.h
        if self.a is not None:
            out["a"] = self.a
        if self.beta is not None:
            out["beta"] = [self.beta[0], self.beta[1]]
        if self.e is not None:
            out["e"] = self.e
        return out

    @property
    def gf2_coefficients(self) -> bool:
        """True when the polynomial has all coefficients in GF(2)."""
        return self.family in GF2_COEFF_FAMILIES

    def display(self) -> str:
        """Human-readable name, e.g. 'Translation(h=2)'."""
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})" if inner else self.family

    def slug(self) -> str:
        """Filename/label-safe identifier, e.g. 'translation-h2'."""
        parts = [self.family.lower()]
        if self.h is not None:
            parts.append(f"h{self.h}")
        if self.a is not None:
            parts.append(f"a{self.a}")
        if self.beta is not None:
            parts.append(f"b{self.beta[1] * (1 << self.m) + self.beta[0]}")
        if self.e is not None:
            parts.append(f"e{self.e}")
        return "-".join(parts)

    def to_json(self) -> dict:
        return {"family": self.family, "m": self.m, "params": self.params}


def spec_from_json(doc: dict, ctx: FieldCtx | None = None) -> OvalPolySpec:
    """Rebuild and re-validate a spec from its JSON form."""
    try:
        family = doc["family"]
        m = doc["m"]
        params = dict(doc.get("params", {}))
    except (TypeError, KeyError) as exc:
        raise FamilyError(f"malformed polynomial spec document: {doc!r}") from exc
    beta = params.get("beta")
    if beta is not None:
        beta = (beta[0], beta[1])
    return make_spec(
        family, m, ctx=ctx,
        h=params.get("h"), a=params.get("a"), beta=beta, e=params.get("e"),
    )


# ---------------------------------------------------------------------------
# family construction


def _canonical_family(name: str) -> str:
    for fam in FAMILIES:
        if name.lower() == fam.lower():
            return fam
    raise FamilyError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")


def _payne_exponents(m: int) -> tuple[int, int, int]:
    # x^(1/6) + x^(1/2) + x^(5/6) written with explicit exponents; each
    # division must be exact or the member does not exist at this m
    half = 1 << (m - 1)
    lo, lo_rem = divmod(half + 2, 3)
    hi, hi_rem = divmod(5 * half - 2, 3)
    if lo_rem or hi_rem:
        raise FamilyError(
            f"Payne exponents ({half}+2)/3 and (5*{half}-2)/3 are not integral at m={m}"
        )
    return (lo, half, hi)


def _subiaco_valid_a(ctx: FieldCtx, a: int) -> bool:
    if a == 0:
        return False
    if ctx.trace(ctx.inv(a)) != 1:
        return False
    if ctx.m % 4 == 2 and ctx.pow(a, 4) == a:  # a in the GF(4) subfield
        return False
    return True


def _canonical_subiaco_a(ctx: FieldCtx) -> int:
    for a in ctx.units():
        if _subiaco_valid_a(ctx, a):
            return a
    raise FamilyError(f"no valid Subiaco parameter exists at m={ctx.m}")


def _canonical_adelaide_beta(ext: ExtFieldCtx) -> tuple[int, int]:
    for x in ext.norm_one_elements():
        if x != ext.one:
            return x
    raise AssertionError("norm-one subgroup always has more than one element")


def make_spec(
    family: str,
    m: int,
    *,
    ctx: FieldCtx | None = None,
    h: int | None = None,
    a: int | None = None,
    beta: tuple[int, int] | None = None,
    e: int | None = None,
    verify: bool = True,
) -> OvalPolySpec:
    """Build a validated family member at degree m.

    Monomial-style families validate arithmetically.  Subiaco and
    Adelaide additionally run the full oval check on the constructed
    table (verify=True), because their defining expressions leave more
    room for transcription error than a bare exponent; a failure raises
    FamilyError rather than returning a spec that would poison every
    construction downstream.

    verify=False is diagnostic mode: any member whose defining
    expression is computable is admitted, so callers can evaluate the
    oval criteria on it and exhibit the failure witness.  Segre's
    odd-m restriction, Subiaco's trace condition, and Adelaide's
    norm-1 condition are waived; constraints that make the expression
    itself meaningless (Translation's gcd, the integrality of the
    Glynn/Cherowitzo/Payne exponents, Adelaide's even m and nonzero
    relative trace) stay hard errors in both modes.
    """
    family = _canonical_family(family)
    if not 2 <= m <= 16:
        raise FamilyError(f"m must lie in [2, 16], got {m}")
    extra = {"h": h, "a": a, "beta": beta, "e": e}

    def reject_extras(*allowed: str) -> None:
        for key, val in extra.items():
            if val is not None and key not in allowed:
                raise FamilyError(f"{family} takes no parameter {key!r}")

    if family == TRANSLATION:
        reject_extras("h")
        if h is None:
            h = 1
        if not 1 <= h < m:
            raise FamilyError(f"Translation needs 1 <= h < m, got h={h}")
        if math.gcd(h, m) != 1:
            raise FamilyError(f"Translation needs gcd(h, m) = 1, got h={h}, m={m}")
        return OvalPolySpec(TRANSLATION, m, h=h)

    if family in (SEGRE, GLYNN_A, CHEROWITZO, PAYNE):
        reject_extras()
        if m % 2 == 0 and (verify or family != SEGRE):
            raise FamilyError(f"{family} requires odd m, got m={m}")
        if family == PAYNE:
            _payne_exponents(m)
        return OvalPolySpec(family, m)

    if family == GLYNN_B:
        reject_extras()
        if m % 4 != 3:
            raise FamilyError(f"GlynnB requires m = 3 (mod 4), got m={m}")
        return OvalPolySpec(GLYNN_B, m)

    if family == GLYNN_C:
        reject_extras()
        if m % 4 != 1:
            raise FamilyError(f"GlynnC requires m = 1 (mod 4), got m={m}")
        return OvalPolySpec(GLYNN_C, m)

    if family == SUBIACO:
        reject_extras("a")
        if ctx is None:
            ctx = field_new(m)
        if a is None:
            a = _canonical_subiaco_a(ctx)
        elif not 1 <= a < ctx.q:
            raise FamilyError(f"Subiaco parameter a={a} out of range at m={m}")
        elif verify and not _subiaco_valid_a(ctx, a):
            raise FamilyError(
                f"Subiaco parameter a={a} invalid at m={m}: need a != 0, "
                "trace(1/a) = 1, and a outside GF(4) when m = 2 (mod 4)"
            )
        spec = OvalPolySpec(SUBIACO, m, a=a)
        if verify and not is_oval_polynomial(spec, ctx):
            raise FamilyError(
                f"Subiaco instance a={a} fails oval verification at m={m}"
            )
        return spec

    if family == ADELAIDE:
        reject_extras("beta", "e")
        if m % 2 != 0 or m < 4:
            raise FamilyError(f"Adelaide requires even m >= 4, got m={m}")
        if ctx is None:
            ctx = field_new(m)
        q = ctx.q
        ext = ext_field_new(ctx)
        if e is None:
            e = (q - 1) // 3
        elif e < 1:
            raise FamilyError(f"Adelaide exponent must be positive, got e={e}")
        elif verify and e % (q + 1) not in ((q - 1) // 3 % (q + 1), (-(q - 1) // 3) % (q + 1)):
            raise FamilyError(
                f"Adelaide exponent must be +-(q-1)/3 modulo q+1, got e={e}"
            )
        if beta is None:
            beta = _canonical_adelaide_beta(ext)
        else:
            beta = (beta[0], beta[1])
            if not (0 <= beta[0] < q and 0 <= beta[1] < q):
                raise FamilyError(f"Adelaide parameter beta={beta} out of range at m={m}")
            if beta[1] == 0:
                raise FamilyError(
                    f"Adelaide parameter beta={beta} lies in the base field, "
                    "so the relative trace T(beta) vanishes"
                )
            if verify and (beta == ext.one or ext.norm(beta) != 1):
                raise FamilyError(
                    f"Adelaide parameter beta={beta} must have norm 1 and differ from 1"
                )
        spec = OvalPolySpec(ADELAIDE, m, beta=beta, e=e)
        if verify and not is_oval_polynomial(spec, ctx):
            raise FamilyError(
                f"Adelaide instance beta={beta}, e={e} fails oval verification at m={m}"
            )
        return spec

    raise AssertionError(f"unhandled family {family}")


def catalog(m: int, ctx: FieldCtx | None = None) -> list[OvalPolySpec]:
    """Every family member applicable at this m, in fixed family order.

    Translation appears once per valid exponent.  Subiaco and Adelaide
    appear only when their canonical instance passes the oval check.
    """
    if ctx is None:
        ctx = field_new(m)
    out: list[OvalPolySpec] = []
    for h in range(1, m):
        if math.gcd(h, m) == 1:
            out.append(make_spec(TRANSLATION, m, h=h))
    for fam in (SEGRE, GLYNN_A, GLYNN_B, GLYNN_C, CHEROWITZO, PAYNE, SUBIACO, ADELAIDE):
        try:
            out.append(make_spec(fam, m, ctx=ctx))
        except FamilyError:
            continue
    return out


# ---------------------------------------------------------------------------
# evaluation


def _exponent_list(spec: OvalPolySpec) -> list[int]:
    m = spec.m
    if spec.family == TRANSLATION:
        return [1 << spec.h]
    if spec.family == SEGRE:
        return [6]
    if spec.family == GLYNN_A:
        return [3 * (1 << ((m + 1) // 2)) + 4]
    if spec.family == GLYNN_B:
        return [(1 << ((m + 1) // 2)) + (1 << ((m + 1) // 4))]
    if spec.family == GLYNN_C:
        return [(1 << ((m + 1) // 2)) + (1 << ((3 * m + 1) // 4))]
    if spec.family == CHEROWITZO:
        e = (m + 1) // 2
        return [1 << e, (1 << e) + 2, 3 * (1 << e) + 4]
    if spec.family == PAYNE:
        return list(_payne_exponents(m))
    raise AssertionError(f"{spec.family} is not a sum of monomials with GF(2) coefficients")


def _subiaco_value(ctx: FieldCtx, a: int, x: int) -> int:
    q = ctx.q
    a2 = ctx.mul(a, a)
    coef = ctx.mul(a2, 1 ^ a ^ a2)
    x2 = ctx.mul(x, x)
    x3 = ctx.mul(x2, x)
    x4 = ctx.mul(x2, x2)
    num = ctx.mul(a2, x4 ^ x) ^ ctx.mul(coef, x3 ^ x2)
    den = x4 ^ ctx.mul(a2, x2) ^ 1
    return ctx.mul(num, ctx.pow(den, q - 2)) ^ ctx.sqrt(x)


def _subiaco_table(ctx: FieldCtx, a: int) -> list[int]:
    return [_subiaco_value(ctx, a, x) for x in ctx.elements()]


def _adelaide_table(ctx: FieldCtx, beta: tuple[int, int], e: int) -> list[int]:
    q = ctx.q
    ext = ext_field_new(ctx)
    beta_q = ext.frob(beta)
    t_beta = ext.tmap(beta)  # nonzero for every norm-1 beta != 1
    inv_t_beta = ctx.inv(t_beta)
    lead = ctx.mul(ext.tmap(ext.pow(beta, e)), inv_t_beta)
    out = []
    for x in range(q):
        u = ext.add((ctx.mul(beta[0], x), ctx.mul(beta[1], x)), beta_q)
        num = ext.tmap(ext.pow(u, e))
        den = ctx.pow(x ^ ctx.mul(t_beta, ctx.sqrt(x)) ^ 1, e - 1)
        term = ctx.mul(num, ctx.mul(inv_t_beta, ctx.pow(den, q - 2)))
        out.append(ctx.mul(lead, x ^ 1) ^ term ^ ctx.sqrt(x))
    return out


def eval_table(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> list[int]:
    """Value table [f(0), f(1), ..., f(q-1)] of the family member."""
    if ctx is None:
        ctx = field_new(spec.m)
    if ctx.m != spec.m:
        raise ValueError(f"context is GF(2^{ctx.m}) but the spec needs m={spec.m}")
    if spec.family == SUBIACO:
        return _subiaco_table(ctx, spec.a)
    if spec.family == ADELAIDE:
        return _adelaide_table(ctx, spec.beta, spec.e)
    exps = _exponent_list(spec)
    out = []
    for x in range(ctx.q):
        v = 0
        for ee in exps:
            v ^= ctx.pow(x, ee)
        out.append(v)
    return out


def opoly_eval(spec: OvalPolySpec, ctx: FieldCtx, x: int) -> int:
    """Evaluate the family member at one point."""
    if not 0 <= x < ctx.q:
        raise ValueError(f"point {x!r} outside GF(2^{ctx.m})")
    if spec.family == SUBIACO:
        return _subiaco_value(ctx, spec.a, x)
    if spec.family == ADELAIDE:
        return _adelaide_table(ctx, spec.beta, spec.e)[x]
    v = 0
    for ee in _exponent_list(spec):
        v ^= ctx.pow(x, ee)
    return v


def monomial_table(ctx: FieldCtx, e: int) -> list[int]:
    """Value table of x -> x^e; handy for criterion cross-checks."""
    return [ctx.pow(x, e) for x in ctx.elements()]


# ---------------------------------------------------------------------------
# criteria on value tables


def permutation_check(table: list[int]) -> bool:
    """True when the table hits every value exactly once."""
    return len(set(table)) == len(table)


def segre_failure_table(table: list[int], ctx: FieldCtx):
    """Witness (a, x) against the secant-bijection criterion, or None."""
    return kernels.segre_scan(table, ctx)


def two_to_one_failure_table(table: list[int], ctx: FieldCtx):
    """Witness (u, v) against the 0-or-2 preimage criterion, or None."""
    return kernels.two_to_one_scan(table, ctx)


def slope_failure_table(table: list[int], ctx: FieldCtx, allow_large: bool = False):
    """Witness (x, y, z) of a repeated secant slope, or None.

    The scan touches all q^2 point pairs, so by default it refuses
    beyond m = 8; pass allow_large=True to run it anyway.
    """
    if ctx.m > SLOPE_SCAN_MAX_M and not allow_large:
        raise BudgetExceededError(
            f"slope scan at m={ctx.m} needs {ctx.q}^2 = {ctx.q ** 2} slope "
            "computations; pass allow_large=True (CLI: --allow-large) to force it"
        )
    return kernels.slope_scan(table, ctx)


def oval_check_table(table: list[int], ctx: FieldCtx) -> bool:
    """Full oval-polynomial check on a value table."""
    return (
        table[0] == 0
        and table[1] == 1
        and permutation_check(table)
        and kernels.segre_scan(table, ctx) is None
    )


def affine_root_free_table(table: list[int]) -> bool:
    """True when f(x) + x + 1 never vanishes."""
    return all(v ^ x ^ 1 for x, v in enumerate(table))


# ---------------------------------------------------------------------------
# criteria on specs


def _table(spec: OvalPolySpec, ctx: FieldCtx | None) -> tuple[list[int], FieldCtx]:
    if ctx is None:
        ctx = field_new(spec.m)
    return eval_table(spec, ctx), ctx


def is_permutation(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> bool:
    """True when f permutes GF(q)."""
    table, _ = _table(spec, ctx)
    return permutation_check(table)


def segre_condition(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> bool:
    """True when x -> (f(x+a)+f(a)) x^(q-2) is bijective for every a."""
    table, ctx = _table(spec, ctx)
    return kernels.segre_scan(table, ctx) is None


def segre_failure(spec: OvalPolySpec, ctx: FieldCtx | None = None):
    """Witness (a, x) against the secant-bijection criterion, or None."""
    table, ctx = _table(spec, ctx)
    return kernels.segre_scan(table, ctx)


def is_two_to_one_criterion(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> bool:
    """True when every f(x) + ux (u != 0) takes each value 0 or 2 times."""
    table, ctx = _table(spec, ctx)
    return kernels.two_to_one_scan(table, ctx) is None


def two_to_one_failure(spec: OvalPolySpec, ctx: FieldCtx | None = None):
    """Witness (u, v) against the 0-or-2 preimage criterion, or None."""
    table, ctx = _table(spec, ctx)
    return kernels.two_to_one_scan(table, ctx)


def slope_condition(
    spec: OvalPolySpec, ctx: FieldCtx | None = None, allow_large: bool = False
) -> bool:
    """True when f is a permutation and no two secants from a point agree."""
    table, ctx = _table(spec, ctx)
    if not permutation_check(table):
        return False
    return slope_failure_table(table, ctx, allow_large) is None


def slope_failure(spec: OvalPolySpec, ctx: FieldCtx | None = None, allow_large: bool = False):
    """Witness (x, y, z) of a repeated secant slope, or None."""
    table, ctx = _table(spec, ctx)
    return slope_failure_table(table, ctx, allow_large)


def is_oval_polynomial(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> bool:
    """Permutation, f(0)=0, f(1)=1, and the secant-bijection criterion."""
    table, ctx = _table(spec, ctx)
    return oval_check_table(table, ctx)


def no_affine_root(spec: OvalPolySpec, ctx: FieldCtx | None = None) -> bool:
    """True when f(x) + x + 1 has no root; needed by the shortened codes."""
    table, _ = _table(spec, ctx)
    return affine_root_free_table(table)
