"""Field arithmetic tests: axioms, tables, canonical choices, extensions."""
import pytest

from ovalcodes.gf2m import (
    ExtFieldCtx,
    Fe,
    FieldCtx,
    clmul,
    ext_field_new,
    field_new,
    is_irreducible,
    mulmod,
    poly_degree,
    poly_mod,
    powmod,
    prime_factors,
    smallest_irreducible,
)


def test_poly_degree():
    assert poly_degree(1) == 0
    assert poly_degree(2) == 1
    assert poly_degree(0b1011) == 3
    assert poly_degree(0) == -1


def test_clmul_small():
    # (x+1)(x+1) = x^2+1 over GF(2)
    assert clmul(3, 3) == 5
    assert clmul(0, 7) == 0
    assert clmul(1, 9) == 9
    # (x^2+x)(x+1) = x^3+x
    assert clmul(6, 3) == 10


def test_poly_mod():
    # x^3 mod (x^3+x+1) = x+1
    assert poly_mod(8, 0b1011) == 3
    assert poly_mod(3, 0b1011) == 3


def test_irreducibility():
    assert is_irreducible(0b111)       # x^2+x+1
    assert is_irreducible(0b1011)      # x^3+x+1
    assert is_irreducible(0b1101)      # x^3+x^2+1
    assert not is_irreducible(0b1001)  # x^3+1 = (x+1)(x^2+x+1)
    assert not is_irreducible(0b101)   # x^2+1 = (x+1)^2


def test_smallest_irreducible_known_values():
    assert smallest_irreducible(2) == 0b111
    assert smallest_irreducible(3) == 0b1011
    assert smallest_irreducible(4) == 0b10011
    assert smallest_irreducible(8) == 0b100011011


def test_prime_factors():
    assert prime_factors(7) == [7]
    assert prime_factors(15) == [3, 5]
    assert prime_factors(255) == [3, 5, 17]
    assert prime_factors(1) == []


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_field_axioms_exhaustive(m):
    ctx = field_new(m)
    q = ctx.q
    for a in range(q):
        assert ctx.add(a, 0) == a
        assert ctx.add(a, a) == 0
        assert ctx.mul(a, 1) == a
        assert ctx.mul(a, 0) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
        for b in range(q):
            assert ctx.mul(a, b) == ctx.mul(b, a)
            assert ctx.mul(a, b) == mulmod(a, b, ctx.modulus)
            # distributivity over a sample of c
            for c in (0, 1, q - 1):
                lhs = ctx.mul(a, b ^ c)
                rhs = ctx.mul(a, b) ^ ctx.mul(a, c)
                assert lhs == rhs


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_log_tables_consistent(m):
    ctx = field_new(m)
    q = ctx.q
    assert len(ctx.antilog_table) == q
    assert ctx.antilog_table[0] == 1
    assert ctx.antilog_table[q - 1] == 1  # wrap slot
    seen = set(ctx.antilog_table[: q - 1])
    assert len(seen) == q - 1  # alpha really is primitive
    for i in range(q - 1):
        assert ctx.log_table[ctx.antilog_table[i]] == i
        assert ctx.antilog_table[i] == powmod(ctx.alpha, i, ctx.modulus)


def test_canonical_choices():
    assert field_new(3).modulus == 0b1011 and field_new(3).alpha == 2
    assert field_new(4).modulus == 0b10011 and field_new(4).alpha == 2
    assert field_new(8).modulus == 0b100011011 and field_new(8).alpha == 3


def test_gf8_spot_values():
    ctx = field_new(3)
    assert ctx.mul(3, 5) == 4
    assert ctx.inv(2) == 5
    assert ctx.pow(2, 7) == 1
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(0, 5) == 0


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_trace_and_sqrt(m):
    ctx = field_new(m)
    for a in range(ctx.q):
        t = ctx.trace(a)
        assert t in (0, 1)
        # trace is additive and Frobenius-invariant
        sq = ctx.mul(a, a)
        assert ctx.trace(sq) == t
        assert ctx.mul(ctx.sqrt(a), ctx.sqrt(a)) == a
    # trace takes both values equally often
    ones = sum(ctx.trace(a) for a in range(ctx.q))
    assert ones == ctx.q // 2


def test_pow_total_inverse_convention():
    ctx = field_new(4)
    for a in range(1, ctx.q):
        assert ctx.pow(a, ctx.q - 2) == ctx.inv(a)
    assert ctx.pow(0, ctx.q - 2) == 0


def test_alternative_representation_is_a_field():
    ctx = field_new(3, modulus=0b1101, alpha=3)
    for a in range(8):
        for b in range(8):
            assert ctx.mul(a, b) == mulmod(a, b, 0b1101)
    assert ctx.alpha == 3


def test_field_validation_errors():
    with pytest.raises(ValueError):
        field_new(1)
    with pytest.raises(ValueError):
        field_new(17)
    with pytest.raises(ValueError):
        field_new(3, modulus=0b1001)  # reducible
    with pytest.raises(ValueError):
        field_new(3, modulus=0b10011)  # wrong degree
    with pytest.raises(ValueError):
        field_new(4, alpha=1)  # not primitive
    with pytest.raises(ValueError):
        # 6 generates only the cube roots subgroup? pick a known non-generator:
        # in GF(16) with x^4+x+1, element 6 = alpha^5 has order 3
        field_new(4, alpha=6)


def test_fe_wrapper_arithmetic():
    ctx = field_new(3)
    a = ctx.fe(3)
    b = ctx.fe(5)
    assert int(a * b) == 4
    assert int(a + b) == 6
    assert int(a - b) == 6
    assert int(a / a) == 1
    assert int(a ** 7) == 1
    assert int(b.inverse() * b) == 1
    assert a.trace() in (0, 1)
    assert a == ctx.fe(3)
    assert hash(a) == hash(ctx.fe(3))


def test_fe_context_mismatch():
    a = field_new(3).fe(3)
    b = field_new(3, modulus=0b1101).fe(3)
    with pytest.raises(ValueError, match="context mismatch"):
        _ = a + b


def test_ext_field_basics():
    base = field_new(4)
    ext = ext_field_new(base)
    q = base.q
    one = ext.one
    zero = ext.zero
    assert ext.mul(one, one) == one
    assert ext.add(zero, one) == one
    # modulus constant has trace 1
    assert base.trace(ext.c) == 1
    # Frobenius x -> x^q fixes exactly the base field
    fixed = 0
    for enc in range(q * q):
        x = ext.decode(enc)
        if ext.frob(x) == x:
            fixed += 1
            assert ext.in_base(x)
    assert fixed == q


def test_ext_field_norm_and_inverse():
    base = field_new(4)
    ext = ext_field_new(base)
    for enc in range(1, base.q ** 2):
        x = ext.decode(enc)
        nx = ext.norm(x)
        # norm is multiplicative into the base field
        assert nx == base.mul(ext.norm(x), 1)
        inv = ext.inv(x)
        assert ext.mul(x, inv) == ext.one
    with pytest.raises(ZeroDivisionError):
        ext.inv(ext.zero)


def test_ext_field_norm_one_subgroup():
    base = field_new(4)
    ext = ext_field_new(base)
    ones = ext.norm_one_elements()
    assert len(ones) == base.q + 1
    for x in ones:
        assert ext.norm(x) == 1
    # closed under multiplication
    prod = ext.mul(ones[1], ones[2])
    assert ext.norm(prod) == 1
    # the known canonical element at m=4
    assert ones[0] == ext.one
    beta = next(x for x in ones if x != ext.one)
    assert beta == (13, 2)
    assert ext.tmap(beta) == 2


def test_ext_field_tmap_projection():
    base = field_new(4)
    ext = ext_field_new(base)
    for enc in range(base.q ** 2):
        x = ext.decode(enc)
        # T(x) = x + x^q lands in the base field as the high coordinate
        assert ext.add(x, ext.frob(x)) == (ext.tmap(x), 0)


def test_ext_generator_order():
    base = field_new(3)
    ext = ext_field_new(base)
    g = ext.generator()
    n = base.q ** 2 - 1
    assert ext.pow(g, n) == ext.one
    for p in prime_factors(n):
        assert ext.pow(g, n // p) != ext.one


def test_field_equality_and_hash():
    a = field_new(3)
    b = field_new(3)
    c = field_new(3, modulus=0b1101)
    assert a == b and hash(a) == hash(b)
    assert a != c
