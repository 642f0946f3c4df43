"""Exact arithmetic in GF(2^m), 2 <= m <= 16, plus the quadratic extension GF(q^2).

Field elements are plain Python ints in [0, q): bit i of the int is the
coefficient of x^i in the polynomial residue, so 0 and 1 are the field's
zero and one.  A FieldCtx pins down the representation (irreducible
modulus, multiplicative generator) and carries the log/antilog tables
that back multiplication.  Two contexts with equal parameters are
interchangeable; elements from contexts with different parameters must
never be mixed, and the Fe wrapper enforces that.

Defaults are canonical so results are reproducible: the modulus is the
smallest irreducible degree-m polynomial by integer encoding and the
generator is the smallest primitive element >= 2.  Both can be
overridden, which only changes the labelling of elements, not any field-
or code-theoretic fact.

Exponentiation follows the convention pow(0, 0) = 1 and pow(0, e) = 0
for e > 0, so x**(q-2) is a total function equal to 1/x for x != 0 and
0 at x = 0.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

MIN_M = 2
MAX_M = 16


# ---------------------------------------------------------------------------
# polynomial arithmetic on int-encoded GF(2)[x] (independent of any tables)


def poly_degree(p: int) -> int:
    """Degree of an int-encoded polynomial; -1 for the zero polynomial."""
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two int-encoded polynomials over GF(2)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(p: int, modulus: int) -> int:
    """Remainder of p modulo a nonzero polynomial."""
    if modulus == 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    dm = poly_degree(modulus)
    dp = poly_degree(p)
    while dp >= dm:
        p ^= modulus << (dp - dm)
        dp = poly_degree(p)
    return p


def mulmod(a: int, b: int, modulus: int) -> int:
    """Schoolbook product in GF(2)[x]/(modulus); the table-free oracle."""
    return poly_mod(clmul(a, b), modulus)


def powmod(a: int, e: int, modulus: int) -> int:
    """Square-and-multiply power in GF(2)[x]/(modulus), e >= 0."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    r = 1
    a = poly_mod(a, modulus)
    while e:
        if e & 1:
            r = mulmod(r, a, modulus)
        a = mulmod(a, a, modulus)
        e >>= 1
    return r


def is_irreducible(p: int) -> bool:
    """Trial-division irreducibility test for an int-encoded polynomial."""
    d = poly_degree(p)
    if d < 1:
        return False
    if d == 1:
        return True
    if p & 1 == 0:  # divisible by x
        return False
    for dd in range(1, d // 2 + 1):
        for div in range(1 << dd, 1 << (dd + 1)):
            if poly_mod(p, div) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(m: int) -> int:
    """Smallest (by int encoding) irreducible polynomial of degree m."""
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("irreducible polynomial of every degree exists")


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# base field


class FieldCtx:
    """GF(2^m) under a fixed modulus and generator, with log/antilog tables."""

    __slots__ = ("m", "q", "modulus", "alpha", "log_table", "antilog_table")

    def __init__(self, m: int, modulus: int | None = None, alpha: int | None = None):
        if not isinstance(m, int) or not MIN_M <= m <= MAX_M:
            raise ValueError(f"m must be an int in [{MIN_M}, {MAX_M}], got {m!r}")
        q = 1 << m
        if modulus is None:
            modulus = smallest_irreducible(m)
        else:
            if poly_degree(modulus) != m:
                raise ValueError(f"modulus {modulus:#b} does not have degree {m}")
            if not is_irreducible(modulus):
                raise ValueError(f"modulus {modulus:#b} is reducible")
        if alpha is None:
            alpha = self._smallest_primitive(q, modulus)
        else:
            if not 2 <= alpha < q:
                raise ValueError(f"alpha must lie in [2, {q}), got {alpha}")
            if not self._is_primitive(alpha, q, modulus):
                raise ValueError(f"alpha {alpha} does not generate the unit group")
        self.m = m
        self.q = q
        self.modulus = modulus
        self.alpha = alpha

        # antilog_table[i] = alpha^i; the final slot wraps back to 1 so the
        # table has q entries and index arithmetic mod (q-1) stays in range.
        log = [0] * q
        antilog = [0] * q
        x = 1
        for i in range(q - 1):
            if i > 0 and x == 1:
                raise AssertionError("generator order check failed during table build")
            antilog[i] = x
            log[x] = i
            x = mulmod(x, alpha, modulus)
        if x != 1:
            raise AssertionError("alpha^(q-1) != 1; modulus or generator is wrong")
        antilog[q - 1] = 1
        self.log_table = log
        self.antilog_table = antilog

    @staticmethod
    def _is_primitive(x: int, q: int, modulus: int) -> bool:
        n = q - 1
        return all(powmod(x, n // p, modulus) != 1 for p in prime_factors(n))

    @classmethod
    def _smallest_primitive(cls, q: int, modulus: int) -> int:
        for x in range(2, q):
            if cls._is_primitive(x, q, modulus):
                return x
        raise AssertionError("the unit group of a finite field is cyclic")

    # -- int-level operations ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Sum (= difference) of two elements."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Product of two elements via the log tables."""
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises on zero."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.antilog_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        """Quotient a / b."""
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e with e >= 0; pow(0, 0) = 1 and pow(0, e) = 0 for e > 0."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if a == 0:
            return 1 if e == 0 else 0
        return self.antilog_table[(self.log_table[a] * e) % (self.q - 1)]

    def trace(self, a: int) -> int:
        """Absolute trace down to GF(2); always 0 or 1."""
        t = 0
        x = a
        for _ in range(self.m):
            t ^= x
            x = self.mul(x, x)
        return t

    def sqrt(self, a: int) -> int:
        """Unique square root, a**(q/2)."""
        return self.pow(a, self.q >> 1)

    def elements(self) -> Iterator[int]:
        """All q elements in encoding order."""
        return iter(range(self.q))

    def units(self) -> Iterator[int]:
        """The q-1 nonzero elements in encoding order."""
        return iter(range(1, self.q))

    def fe(self, value: int) -> "Fe":
        """Wrap an int as a context-bound element."""
        return Fe(self, value)

    # -- comparison / repr ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.m, self.modulus, self.alpha) == (other.m, other.modulus, other.alpha)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus, self.alpha))

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x}, alpha={self.alpha})"


def field_new(m: int, modulus: int | None = None, alpha: int | None = None) -> FieldCtx:
    """Build a GF(2^m) context; canonical modulus and generator by default."""
    return FieldCtx(m, modulus, alpha)


class Fe:
    """A field element bound to its context; mixing contexts raises."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        if not isinstance(value, int) or not 0 <= value < ctx.q:
            raise ValueError(f"element {value!r} outside [0, {ctx.q})")
        self.ctx = ctx
        self.value = value

    def _check(self, other: "Fe") -> None:
        if not isinstance(other, Fe):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other: "Fe") -> "Fe":
        self._check(other)
        return Fe(self.ctx, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "Fe") -> "Fe":
        self._check(other)
        return Fe(self.ctx, self.ctx.mul(self.value, other.value))

    def __truediv__(self, other: "Fe") -> "Fe":
        self._check(other)
        return Fe(self.ctx, self.ctx.div(self.value, other.value))

    def __pow__(self, e: int) -> "Fe":
        return Fe(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> "Fe":
        return Fe(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fe):
            return NotImplemented
        return self.ctx == other.ctx and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.ctx, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Fe({self.value}, GF(2^{self.ctx.m}))"


# ---------------------------------------------------------------------------
# quadratic extension GF(q^2) = GF(q)[t] / (t^2 + t + c), trace(c) = 1


class ExtFieldCtx:
    """GF(q^2) over a base GF(2^m); elements are (lo, hi) pairs meaning lo + hi*t.

    The modulus t^2 + t + c is irreducible over GF(q) exactly when the
    absolute trace of c is 1, so the canonical c is the smallest element
    with trace 1.  In this basis Frobenius is (lo, hi) -> (lo + hi, hi)
    and the relative trace x + x^q is simply the hi coordinate.
    """

    __slots__ = ("base", "c", "q2", "_gen")

    def __init__(self, base: FieldCtx, c: int | None = None):
        if c is None:
            c = next(a for a in base.elements() if base.trace(a) == 1)
        else:
            if not 0 <= c < base.q:
                raise ValueError(f"c {c!r} outside base field")
            if base.trace(c) != 1:
                raise ValueError(f"t^2 + t + {c} is reducible over GF(2^{base.m})")
        self.base = base
        self.c = c
        self.q2 = base.q * base.q
        self._gen = None

    @property
    def ext_modulus(self) -> tuple[int, int, int]:
        """Coefficients (constant, linear, quadratic) of the extension modulus."""
        return (self.c, 1, 1)

    zero = (0, 0)
    one = (1, 0)

    def embed(self, a: int) -> tuple[int, int]:
        """Lift a base-field element into the extension."""
        return (a, 0)

    def in_base(self, x: tuple[int, int]) -> bool:
        return x[1] == 0

    def encode(self, x: tuple[int, int]) -> int:
        """Canonical int encoding hi*q + lo, used for ordering elements."""
        return x[1] * self.base.q + x[0]

    def decode(self, enc: int) -> tuple[int, int]:
        return (enc % self.base.q, enc // self.base.q)

    def add(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        return (x[0] ^ y[0], x[1] ^ y[1])

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        # (a0 + a1 t)(b0 + b1 t) with t^2 = t + c
        f = self.base
        a0, a1 = x
        b0, b1 = y
        hh = f.mul(a1, b1)
        lo = f.mul(a0, b0) ^ f.mul(hh, self.c)
        hi = f.mul(a0, b1) ^ f.mul(a1, b0) ^ hh
        return (lo, hi)

    def frob(self, x: tuple[int, int]) -> tuple[int, int]:
        """x -> x^q, the nontrivial automorphism over GF(q)."""
        return (x[0] ^ x[1], x[1])

    def tmap(self, x: tuple[int, int]) -> int:
        """Relative trace x + x^q; lands in the base field."""
        return x[1]

    def norm(self, x: tuple[int, int]) -> int:
        """Relative norm x * x^q; lands in the base field."""
        f = self.base
        a0, a1 = x
        return f.mul(a0, a0) ^ f.mul(a0, a1) ^ f.mul(self.c, f.mul(a1, a1))

    def inv(self, x: tuple[int, int]) -> tuple[int, int]:
        if x == (0, 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        conj = self.frob(x)
        ninv = self.base.inv(self.norm(x))
        return (self.base.mul(conj[0], ninv), self.base.mul(conj[1], ninv))

    def pow(self, x: tuple[int, int], e: int) -> tuple[int, int]:
        """x**e with e >= 0; pow(0, 0) = (1, 0)."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def generator(self) -> tuple[int, int]:
        """Smallest (by encoding) generator of the multiplicative group."""
        if self._gen is not None:
            return self._gen
        n = self.q2 - 1
        ps = prime_factors(n)
        for enc in range(2, self.q2):
            x = self.decode(enc)
            if all(self.pow(x, n // p) != self.one for p in ps):
                self._gen = x
                return x
        raise AssertionError("the unit group of a finite field is cyclic")

    def norm_one_elements(self) -> list[tuple[int, int]]:
        """The q+1 elements of norm 1 (the subgroup of order q+1), by encoding."""
        g = self.generator()
        h = self.pow(g, self.base.q - 1)
        out = []
        x = self.one
        for _ in range(self.base.q + 1):
            out.append(x)
            x = self.mul(x, h)
        if x != self.one or len(set(out)) != self.base.q + 1:
            raise AssertionError("norm-one subgroup enumeration failed")
        return sorted(out, key=self.encode)

    def __repr__(self) -> str:
        return f"ExtFieldCtx(base=GF(2^{self.base.m}), c={self.c})"


def ext_field_new(base: FieldCtx, c: int | None = None) -> ExtFieldCtx:
    """Build the quadratic extension of a base context."""
    return ExtFieldCtx(base, c)
