"""Linear codes over GF(2^m): exact weight distributions and classification.

A [n, k] code is held as a k x n generator matrix over a FieldCtx.  All
counting is exact (Python ints): the weight distribution comes from
exhaustive codeword enumeration (vectorized kernels), the dual
distribution from the MacWilliams transform, and both feed the
MDS/almost-MDS/near-MDS classification and the Griesmer-bound flags.

Enumeration cost is q^k codewords; anything above the work budget
(default 2^28, override via the budget argument or OVALCODES_BUDGET)
raises BudgetExceededError instead of silently grinding.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from math import comb

from . import kernels
from .errors import BudgetExceededError, CodeFormatError, PairingViolationError
from .gf2m import FieldCtx, field_new, is_irreducible, poly_degree

DEFAULT_BUDGET = 1 << 28


def resolve_budget(budget: int | None = None) -> int:
    """Effective work budget: explicit argument, else OVALCODES_BUDGET, else 2^28."""
    if budget is not None:
        if budget < 1:
            raise ValueError(f"budget must be positive, got {budget}")
        return budget
    env = os.environ.get("OVALCODES_BUDGET")
    if env:
        try:
            val = int(env)
        except ValueError as exc:
            raise ValueError(f"OVALCODES_BUDGET must be an integer, got {env!r}") from exc
        if val < 1:
            raise ValueError(f"OVALCODES_BUDGET must be positive, got {val}")
        return val
    return DEFAULT_BUDGET


@dataclass
class GeneratorMatrix:
    """A k x n generator matrix with its field context and an optional label."""

    ctx: FieldCtx
    rows: list[list[int]]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise CodeFormatError("generator matrix must have at least one row and column")
        n = len(self.rows[0])
        q = self.ctx.q
        for r in self.rows:
            if len(r) != n:
                raise CodeFormatError("generator matrix rows have unequal lengths")
            for v in r:
                if not isinstance(v, int) or not 0 <= v < q:
                    raise CodeFormatError(f"matrix entry {v!r} outside GF(2^{self.ctx.m})")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def rank(self) -> int:
        return matrix_rank(self.rows, self.ctx)

    def to_json(self) -> dict:
        return {
            "m": self.ctx.m,
            "modulus": self.ctx.modulus,
            "q": self.ctx.q,
            "k": self.k,
            "n": self.n,
            "generator": [list(r) for r in self.rows],
            "label": self.label,
        }


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords by Hamming weight; always exact ints."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise CodeFormatError(
                f"distribution for length {self.n} needs {self.n + 1} counts, "
                f"got {len(self.counts)}"
            )
        if self.counts[0] != 1:
            raise CodeFormatError("A_0 must be 1 (the zero word)")
        if any(c < 0 for c in self.counts):
            raise CodeFormatError("negative codeword count")

    @property
    def min_distance(self) -> int:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        raise CodeFormatError("distribution has no nonzero weight; not a code")

    def total(self) -> int:
        return sum(self.counts)

    def enumerator(self) -> str:
        """Weight enumerator as '1 + 35z^8 + ...'."""
        terms = ["1"] if self.counts[0] == 1 else []
        terms += [f"{c}z^{w}" for w, c in enumerate(self.counts) if w and c]
        return " + ".join(terms)

    def to_pairs(self) -> list[tuple[int, int]]:
        """(weight, count) pairs for the nonzero entries."""
        return [(w, c) for w, c in enumerate(self.counts) if c]


def distribution_from_counts(counts: dict[int, int], n: int) -> WeightDistribution:
    """Build a distribution from a sparse weight -> count mapping (A_0 defaults to 1)."""
    full = [0] * (n + 1)
    full[0] = 1
    for w, c in counts.items():
        if not 0 <= w <= n:
            raise CodeFormatError(f"weight {w} outside [0, {n}]")
        full[w] = c
    return WeightDistribution(n, tuple(full))


# ---------------------------------------------------------------------------
# row reduction


def rref(rows: list[list[int]], ctx: FieldCtx) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form and pivot columns, over the field."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if mat[i][c]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = ctx.inv(mat[r][c])
        mat[r] = [ctx.mul(inv, v) for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [vi ^ ctx.mul(f, vr) for vi, vr in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def matrix_rank(rows: list[list[int]], ctx: FieldCtx) -> int:
    return len(rref(rows, ctx)[1])


def dual_basis(g: GeneratorMatrix) -> GeneratorMatrix:
    """Generator of the dual code: an (n-k) x n matrix H with G H^T = 0."""
    ctx = g.ctx
    red, pivots = rref(g.rows, ctx)
    if len(pivots) != g.k:
        raise CodeFormatError(f"generator matrix is rank-deficient: rank {len(pivots)} < k {g.k}")
    free = [c for c in range(g.n) if c not in pivots]
    rows = []
    for fc in free:
        vec = [0] * g.n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = red[r][fc]  # negation is identity in characteristic 2
        rows.append(vec)
    if not rows:
        raise CodeFormatError("code is the full space; dual has dimension 0")
    return GeneratorMatrix(ctx, rows, label=f"dual({g.label})" if g.label else "dual")


# ---------------------------------------------------------------------------
# weight distribution


def weight_distribution(g: GeneratorMatrix, budget: int | None = None) -> WeightDistribution:
    """Exact weight distribution by enumerating all q^k codewords."""
    q = g.ctx.q
    work = q ** g.k
    cap = resolve_budget(budget)
    if work > cap:
        raise BudgetExceededError(
            f"enumerating q^k = {q}^{g.k} = {work} codewords exceeds the budget {cap}; "
            "raise it via the budget argument or OVALCODES_BUDGET"
        )
    if g.k == 3:
        counts = kernels.wdist_k3(g.rows, g.n, g.ctx)
    else:
        counts = kernels.wdist_generic(g.rows, g.n, g.ctx)
    dist = WeightDistribution(g.n, tuple(int(c) for c in counts))
    if dist.total() != work:
        raise AssertionError(f"enumeration mass {dist.total()} != q^k = {work}")
    return dist


# ---------------------------------------------------------------------------
# MacWilliams transform


def _krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
        for s in range(0, j + 1)
    )


def _krawtchouk_column(i: int, n: int, q: int) -> list[int]:
    """All K_j(i) for j = 0..n by the three-term recurrence in j.

    (j+1) K_{j+1}(i) = ((q-1)(n-j) + j - q i) K_j(i) - (q-1)(n-j+1) K_{j-1}(i)
    """
    col = [0] * (n + 1)
    col[0] = 1
    if n == 0:
        return col
    col[1] = (q - 1) * n - q * i
    for j in range(1, n):
        num = ((q - 1) * (n - j) + j - q * i) * col[j] - (q - 1) * (n - j + 1) * col[j - 1]
        val, rem = divmod(num, j + 1)
        if rem:
            raise AssertionError(f"Krawtchouk recurrence broke at j={j}, i={i}")
        col[j + 1] = val
    return col


def macwilliams_dual(dist: WeightDistribution, q: int, k: int) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams identity; exact division."""
    n = dist.n
    qk = q ** k
    acc = [0] * (n + 1)
    for i, a_i in enumerate(dist.counts):
        if a_i == 0:
            continue
        col = _krawtchouk_column(i, n, q)
        for j in range(n + 1):
            acc[j] += a_i * col[j]
    out = []
    for j, total in enumerate(acc):
        val, rem = divmod(total, qk)
        if rem or val < 0:
            raise CodeFormatError(
                f"MacWilliams transform gave a non-codeword count at weight {j}: {total}/{qk}"
            )
        out.append(val)
    return WeightDistribution(n, tuple(out))


def dual_min_distance(dist: WeightDistribution, q: int, k: int) -> int:
    """Minimum distance of the dual code, through the transform."""
    return macwilliams_dual(dist, q, k).min_distance


# ---------------------------------------------------------------------------
# classification


def griesmer_sum(k: int, d: int, q: int) -> int:
    """Griesmer lower bound on length: sum of ceil(d/q^i) for i in [0, k)."""
    out = 0
    for i in range(k):
        p = q ** i
        out += -(-d // p)
    return out


@dataclass(frozen=True)
class CodeReport:
    """Classification of one code: parameters, class, and optimality flags."""

    n: int
    k: int
    d: int
    d_dual: int
    code_class: str  # MDS | NMDS | AMDS-only | other
    singleton_defect: int
    griesmer_length: int
    griesmer_almost_optimal: bool
    # True: no [n, k, d+1] code exists (Griesmer); None: not determined here
    distance_optimal: bool | None

    def summary(self) -> str:
        parts = [f"[{self.n},{self.k},{self.d}] {self.code_class}"]
        if self.distance_optimal:
            parts.append("distance-optimal")
        if self.griesmer_almost_optimal:
            parts.append("Griesmer almost-optimal")
        return ", ".join(parts)


def classify_distribution(
    dist: WeightDistribution, q: int, k: int
) -> CodeReport:
    """Classify a code from its primal weight distribution."""
    n = dist.n
    d = dist.min_distance
    dual = macwilliams_dual(dist, q, k)
    d_dual = dual.min_distance
    defect = n - k + 1 - d
    if defect < 0:
        raise CodeFormatError(f"distribution violates the Singleton bound: d={d} > {n - k + 1}")
    if defect == 0:
        code_class = "MDS"
    elif d + d_dual == n:
        code_class = "NMDS"
    elif defect == 1:
        code_class = "AMDS-only"
    else:
        code_class = "other"
    glen = griesmer_sum(k, d, q)
    glen_next = griesmer_sum(k, d + 1, q)
    return CodeReport(
        n=n,
        k=k,
        d=d,
        d_dual=d_dual,
        code_class=code_class,
        singleton_defect=defect,
        griesmer_length=glen,
        griesmer_almost_optimal=(n - 1 == glen),
        distance_optimal=True if glen_next > n else None,
    )


def classify(g: GeneratorMatrix, budget: int | None = None) -> CodeReport:
    """Enumerate and classify a generator matrix."""
    return classify_distribution(weight_distribution(g, budget), g.ctx.q, g.k)


# ---------------------------------------------------------------------------
# near-MDS closed form


def nmds_closed_form(
    n: int, k: int, q: int, a_min: int
) -> tuple[WeightDistribution, WeightDistribution]:
    """Primal and dual weight distributions of an [n, k] NMDS code from A_{n-k}.

    For near-MDS codes the whole distribution is determined by the
    single count A_{n-k} (= the dual's A_k).  Intermediate sums may go
    negative; final counts must not.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if a_min < 0:
        raise ValueError(f"A_min must be nonnegative, got {a_min}")
    primal = [0] * (n + 1)
    primal[0] = 1
    primal[n - k] = a_min
    for s in range(1, k + 1):
        acc = comb(n, k - s) * sum(
            (-1) ** j * comb(n - k + s, j) * (q ** (s - j) - 1) for j in range(s)
        )
        acc += (-1) ** s * comb(k, s) * a_min
        if acc < 0:
            raise CodeFormatError(
                f"closed form gave negative count A_{n - k + s} = {acc}; "
                "the input is not a near-MDS parameter set"
            )
        primal[n - k + s] = acc
    dual = [0] * (n + 1)
    dual[0] = 1
    dual[k] = a_min
    for s in range(1, n - k + 1):
        acc = comb(n, k + s) * sum(
            (-1) ** j * comb(k + s, j) * (q ** (s - j) - 1) for j in range(s)
        )
        acc += (-1) ** s * comb(n - k, s) * a_min
        if acc < 0:
            raise CodeFormatError(
                f"closed form gave negative count A'_{k + s} = {acc}; "
                "the input is not a near-MDS parameter set"
            )
        dual[k + s] = acc
    p = WeightDistribution(n, tuple(primal))
    dl = WeightDistribution(n, tuple(dual))
    if p.total() != q ** k or dl.total() != q ** (n - k):
        raise CodeFormatError("closed-form distributions have the wrong total mass")
    return p, dl


# ---------------------------------------------------------------------------
# minimum-weight support pairing


@dataclass(frozen=True)
class PairingReport:
    """Outcome of the min-weight support pairing check on an NMDS code."""

    d: int
    primal_count: int  # codewords of weight d
    dual_count: int  # dual codewords of weight 3
    primal_classes: int  # projective classes, count/(q-1)
    dual_classes: int
    matched: bool  # every primal class has exactly one disjoint dual class


def min_weight_support_pairing(
    g: GeneratorMatrix, budget: int | None = None
) -> PairingReport:
    """Check the support pairing between min-weight words and dual min-weight words.

    For an NMDS code, every minimum-weight codeword is paired with
    exactly one minimum-weight dual codeword (up to scalars) whose
    support is disjoint from its own, and the two weight counts agree.
    Violations raise PairingViolationError since they would contradict
    the NMDS classification computed on the way in.
    """
    if g.k != 3:
        raise ValueError("support pairing is implemented for k = 3 codes")
    ctx = g.ctx
    q = ctx.q
    n = g.n
    cap = resolve_budget(budget)
    if n ** 3 > cap:
        raise BudgetExceededError(
            f"column-triple scan needs {n}^3 = {n ** 3} determinant tests, over budget {cap}"
        )
    dist = weight_distribution(g, budget)
    report = classify_distribution(dist, q, g.k)
    if report.code_class != "NMDS":
        raise PairingViolationError(
            f"support pairing expects an NMDS code, classification says {report.code_class}"
        )
    d = report.d

    messages = kernels.low_weight_messages_k3(g.rows, n, ctx, d)
    triples = kernels.dependent_triples_k3(g.rows, n, ctx)
    for (i, j, kk, vi, vj, vk) in triples:
        if vi == 0 or vj == 0 or vk == 0:
            raise PairingViolationError(
                f"columns {(i, j, kk)} carry a dual word of weight < 3; dual distance is wrong"
            )
    primal_count = dist.counts[d]
    dual_count = (q - 1) * len(triples)
    mw_dual = macwilliams_dual(dist, q, g.k)
    if dual_count != mw_dual.counts[3]:
        raise PairingViolationError(
            f"column-triple count {dual_count} disagrees with MacWilliams A'_3 = {mw_dual.counts[3]}"
        )
    if primal_count != (q - 1) * len(messages):
        raise AssertionError("projective min-weight enumeration missed codewords")

    supports = []
    for (a, b, c) in messages:
        word = [
            ctx.mul(a, g.rows[0][col]) ^ ctx.mul(b, g.rows[1][col]) ^ ctx.mul(c, g.rows[2][col])
            for col in range(n)
        ]
        supports.append(frozenset(col for col, v in enumerate(word) if v))
    matched = True
    for sup in supports:
        partners = sum(1 for (i, j, kk, *_r) in triples if not ({i, j, kk} & sup))
        if partners != 1:
            matched = False
            raise PairingViolationError(
                f"a weight-{d} codeword has {partners} disjoint dual partners, expected exactly 1"
            )
    if primal_count != dual_count:
        raise PairingViolationError(
            f"min-weight counts differ: primal {primal_count} vs dual {dual_count}"
        )
    return PairingReport(
        d=d,
        primal_count=primal_count,
        dual_count=dual_count,
        primal_classes=len(messages),
        dual_classes=len(triples),
        matched=matched,
    )


# ---------------------------------------------------------------------------
# code surgery and IO


def extend_code(g: GeneratorMatrix) -> GeneratorMatrix:
    """Append the all-row-sums column (the standard extension by one coordinate)."""
    ctx = g.ctx
    rows = []
    for r in g.rows:
        s = 0
        for v in r:
            s ^= v
        rows.append(list(r) + [s])
    label = f"{g.label}+ext" if g.label else "ext"
    return GeneratorMatrix(ctx, rows, label=label)


def save_code(g: GeneratorMatrix, path: str) -> None:
    """Write the canonical JSON form (sorted keys, stable separators)."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(g.to_json(), fh, sort_keys=True, separators=(",", ": "), indent=2)
        fh.write("\n")


def load_code(path: str) -> GeneratorMatrix:
    """Read and validate a code file written by save_code."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CodeFormatError(f"not valid JSON: {path}: {exc}") from exc
    return code_from_json(doc)


def code_from_json(doc: dict) -> GeneratorMatrix:
    """Validate a parsed code document and rebuild its GeneratorMatrix."""
    required = {"m", "modulus", "q", "k", "n", "generator"}
    if not isinstance(doc, dict) or not required <= set(doc):
        missing = required - set(doc) if isinstance(doc, dict) else required
        raise CodeFormatError(f"code document missing fields: {sorted(missing)}")
    m, modulus, q = doc["m"], doc["modulus"], doc["q"]
    if not isinstance(m, int) or q != 1 << m:
        raise CodeFormatError(f"inconsistent field size: m={m!r}, q={q!r}")
    if poly_degree(modulus) != m or not is_irreducible(modulus):
        raise CodeFormatError(f"modulus {modulus!r} is not an irreducible degree-{m} polynomial")
    gen = doc["generator"]
    if (
        not isinstance(gen, list)
        or len(gen) != doc["k"]
        or any(not isinstance(r, list) or len(r) != doc["n"] for r in gen)
    ):
        raise CodeFormatError("generator shape disagrees with the stated k and n")
    ctx = field_new(m, modulus=modulus)
    return GeneratorMatrix(ctx, [list(map(int, r)) for r in gen], label=str(doc.get("label", "")))


def distribution_csv(dist: WeightDistribution) -> str:
    """CSV form: header then one 'weight,count' row per weight 0..n."""
    lines = ["weight,count"]
    lines += [f"{w},{c}" for w, c in enumerate(dist.counts)]
    return "\n".join(lines) + "\n"
