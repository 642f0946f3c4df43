"""Linear code machinery: distributions, duality, classification, pairing, I/O."""
import json

import pytest

from ovalcodes import constructions as cx
from ovalcodes import lincode as lc
from ovalcodes import opoly
from ovalcodes.errors import BudgetExceededError, CodeFormatError, PairingViolationError
from ovalcodes.gf2m import field_new

from oracles import brute_weight_distribution

CTX3 = field_new(3)


def _gm(rows, ctx=CTX3, label=""):
    return lc.GeneratorMatrix(ctx, [list(r) for r in rows], label)


def _cf_segre():
    return cx.cf_matrix(opoly.make_spec("Segre", 3), CTX3)


# ---------------------------------------------------------------------------
# GeneratorMatrix basics


def test_generator_matrix_validation():
    with pytest.raises(CodeFormatError):
        _gm([[0, 1], [1]])  # ragged
    with pytest.raises(CodeFormatError):
        _gm([[0, 9]])  # out of field range
    with pytest.raises(CodeFormatError):
        _gm([])
    g = _gm([[1, 0, 3], [0, 1, 5]])
    assert (g.k, g.n) == (2, 3)
    assert g.rank() == 2


def test_rref_and_rank():
    mat, pivots = lc.rref([[0, 1, 2], [0, 2, 4], [1, 0, 0]], CTX3)
    assert pivots == [0, 1]
    assert lc.matrix_rank([[1, 2], [2, 4]], CTX3) == 1
    assert lc.matrix_rank([[1, 2], [2, 5]], CTX3) == 2


def test_dual_basis_orthogonality():
    g = _cf_segre()
    h = lc.dual_basis(g)
    assert (h.k, h.n) == (g.n - g.k, g.n)
    assert h.rank() == h.k
    for grow in g.rows:
        for hrow in h.rows:
            acc = 0
            for a, b in zip(grow, hrow):
                acc ^= CTX3.mul(a, b)
            assert acc == 0


def test_dual_basis_requires_full_rank():
    g = _gm([[1, 2, 3], [2, 4, 6]])
    with pytest.raises(CodeFormatError):
        lc.dual_basis(g)


# ---------------------------------------------------------------------------
# weight distributions


def test_weight_distribution_matches_brute_force_m3():
    ctx = CTX3
    for spec in (opoly.make_spec("Segre", 3), opoly.make_spec("Translation", 3, h=1)):
        for name in cx.CONSTRUCTIONS:
            g = cx.build_construction(name, spec, ctx)
            assert list(lc.weight_distribution(g).counts) == brute_weight_distribution(g)


def test_weight_distribution_matches_brute_force_k2_k4():
    rows4 = [
        [1, 0, 0, 0, 3, 5, 7],
        [0, 1, 0, 0, 6, 1, 4],
        [0, 0, 1, 0, 2, 7, 1],
        [0, 0, 0, 1, 5, 2, 6],
    ]
    for k in (1, 2, 4):
        g = _gm(rows4[:k])
        assert list(lc.weight_distribution(g).counts) == brute_weight_distribution(g)


def test_weight_distribution_m4_spot_check():
    ctx = field_new(4)
    g = cx.cf_matrix(opoly.make_spec("Translation", 4, h=1), ctx)
    dist = lc.weight_distribution(g)
    assert dist.total() == 16 ** 3
    assert dist.counts == tuple(brute_weight_distribution(g))


def test_distribution_object():
    d = lc.WeightDistribution(9, (1, 0, 0, 0, 0, 0, 42, 126, 189, 154))
    assert d.min_distance == 6
    assert d.total() == 512
    assert d.enumerator() == "1 + 42z^6 + 126z^7 + 189z^8 + 154z^9"
    assert d.to_pairs() == [(0, 1), (6, 42), (7, 126), (8, 189), (9, 154)]
    with pytest.raises(CodeFormatError):
        lc.WeightDistribution(3, (2, 0, 0, 0))  # A_0 != 1
    with pytest.raises(CodeFormatError):
        lc.WeightDistribution(3, (1, 0, 0))  # wrong length


def test_distribution_from_counts():
    d = lc.distribution_from_counts({6: 42, 7: 126, 8: 189, 9: 154}, 9)
    assert d.counts[6] == 42 and d.counts[0] == 1


def test_budget_gate():
    ctx = field_new(8)
    g = _gm([[1] * 4, [0, 1, 2, 3], [0, 0, 1, 2], [0, 0, 0, 1]], ctx)
    with pytest.raises(BudgetExceededError):
        lc.weight_distribution(g, budget=1 << 20)  # 256^4 > 2^20
    # a budget exactly equal to the codeword count admits the work
    small = _cf_segre()
    dist = lc.weight_distribution(small, budget=8 ** 3)
    assert dist.total() == 8 ** 3
    with pytest.raises(BudgetExceededError):
        lc.weight_distribution(small, budget=8 ** 3 - 1)


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("OVALCODES_BUDGET", str(1 << 8))
    assert lc.resolve_budget() == 1 << 8
    ctx = CTX3
    g = _cf_segre()
    with pytest.raises(BudgetExceededError):
        lc.weight_distribution(g)  # 8^3 = 512 > 256
    monkeypatch.delenv("OVALCODES_BUDGET")
    assert lc.resolve_budget() == lc.DEFAULT_BUDGET
    assert lc.resolve_budget(123) == 123
    with pytest.raises(ValueError):
        lc.resolve_budget(0)


# ---------------------------------------------------------------------------
# MacWilliams and classification


def test_macwilliams_identity_direct():
    g = _cf_segre()
    prim = lc.weight_distribution(g)
    dual = lc.macwilliams_dual(prim, 8, 3)
    h = lc.dual_basis(g)
    direct = lc.weight_distribution(h)
    assert dual.counts == direct.counts


def test_macwilliams_involution():
    g = _cf_segre()
    prim = lc.weight_distribution(g)
    dual = lc.macwilliams_dual(prim, 8, 3)
    back = lc.macwilliams_dual(dual, 8, 6)
    assert back.counts == prim.counts
    assert dual.total() == 8 ** 6


def test_krawtchouk_recurrence_matches_direct_sum():
    for n, q in ((9, 8), (11, 8), (17, 16), (6, 2), (1, 8), (30, 4)):
        for i in range(n + 1):
            col = lc._krawtchouk_column(i, n, q)
            assert col == [lc._krawtchouk(j, i, n, q) for j in range(n + 1)], (n, q, i)


def test_macwilliams_rejects_inconsistent_input():
    bogus = lc.WeightDistribution(9, (1, 5, 0, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(CodeFormatError):
        lc.macwilliams_dual(bogus, 8, 3)


def test_griesmer_sum():
    # sum_{i<k} ceil(d / q^i)
    assert lc.griesmer_sum(3, 6, 8) == 6 + 1 + 1
    assert lc.griesmer_sum(3, 8, 8) == 8 + 1 + 1
    assert lc.griesmer_sum(1, 5, 2) == 5
    assert lc.griesmer_sum(3, 9, 8) == 9 + 2 + 1


def test_classification_nmds():
    g = _cf_segre()
    rep = lc.classify(g)
    assert (rep.n, rep.k, rep.d) == (9, 3, 6)
    assert rep.code_class == "NMDS"
    assert rep.singleton_defect == 1
    assert rep.d_dual == 3
    assert rep.griesmer_almost_optimal is True
    assert rep.distance_optimal is None
    assert rep.summary() == "[9,3,6] NMDS, Griesmer almost-optimal"


def test_classification_extended_distance_optimal():
    g = cx.extended_mds_matrix(opoly.make_spec("Translation", 3, h=1), CTX3)
    rep = lc.classify(g)
    assert rep.summary() == "[11,3,8] NMDS, distance-optimal, Griesmer almost-optimal"


def test_classification_mds():
    # the full hyperoval code is MDS
    g = cx.hyperoval_mds_matrix(opoly.make_spec("Segre", 3), CTX3)
    rep = lc.classify(g)
    assert rep.code_class == "MDS"
    assert (rep.n, rep.k, rep.d) == (10, 3, 8)
    assert rep.singleton_defect == 0


def test_classification_other():
    # cf over an even-m translation member: d drops below the NMDS point
    ctx = field_new(4)
    g = cx.cf_matrix(opoly.make_spec("Translation", 4, h=1), ctx)
    rep = lc.classify(g)
    assert (rep.n, rep.k) == (17, 3)
    assert rep.d == 13
    assert rep.code_class == "other"


def test_classification_rejects_singleton_violation():
    fake = lc.WeightDistribution(4, (1, 0, 0, 0, 511))
    with pytest.raises(CodeFormatError):
        lc.classify_distribution(fake, 8, 3)


# ---------------------------------------------------------------------------
# closed-form distributions


def test_closed_form_matches_enumeration_m3():
    for name, spec in (
        ("extended", opoly.make_spec("Translation", 3, h=1)),
        ("cf", opoly.make_spec("Segre", 3)),
        ("cfbar", opoly.make_spec("Segre", 3)),
    ):
        g = cx.build_construction(name, spec, CTX3)
        dist = lc.weight_distribution(g)
        a_min = dist.counts[dist.min_distance]
        prim, dual = lc.nmds_closed_form(g.n, g.k, 8, a_min)
        assert prim.counts == dist.counts
        assert dual.counts == lc.macwilliams_dual(dist, 8, 3).counts


def test_closed_form_mass_checks():
    with pytest.raises(CodeFormatError):
        lc.nmds_closed_form(9, 3, 8, 10 ** 6)  # impossible A_min


# ---------------------------------------------------------------------------
# pairing


def test_pairing_on_m3_codes():
    for name, spec, want in (
        ("extended", opoly.make_spec("Translation", 3, h=1), 35),
        ("cf", opoly.make_spec("Segre", 3), 42),
        ("cfbar", opoly.make_spec("Segre", 3), 42),
    ):
        g = cx.build_construction(name, spec, CTX3)
        rep = lc.min_weight_support_pairing(g)
        assert rep.primal_count == want
        assert rep.dual_count == want
        assert rep.primal_count == (8 - 1) * rep.primal_classes
        assert rep.matched


def test_pairing_rejects_non_nmds():
    ctx = field_new(4)
    g = cx.cf_matrix(opoly.make_spec("Translation", 4, h=1), ctx)
    with pytest.raises(PairingViolationError):
        lc.min_weight_support_pairing(g)


def test_pairing_requires_k3():
    g = _gm([[1, 0, 3, 1], [0, 1, 5, 2]])
    with pytest.raises(ValueError):
        lc.min_weight_support_pairing(g)


# ---------------------------------------------------------------------------
# extension and serialization


def test_extend_code_appends_row_sums():
    g = _gm([[1, 0, 3], [0, 1, 5]])
    ext = lc.extend_code(g)
    assert ext.n == 4
    assert [r[-1] for r in ext.rows] == [1 ^ 0 ^ 3, 0 ^ 1 ^ 5]
    assert ext.label == "ext"
    named = lc.extend_code(_gm([[1, 2]], label="base"))
    assert named.label == "base+ext"


def test_extended_matrix_is_extension_of_base():
    spec = opoly.make_spec("Segre", 3)
    base = cx.hyperoval_mds_matrix(spec, CTX3)
    ext = cx.extended_mds_matrix(spec, CTX3)
    assert ext.n == base.n + 1
    assert [r[:-1] for r in ext.rows] == base.rows


def test_save_load_round_trip(tmp_path):
    g = _cf_segre()
    p = tmp_path / "code.json"
    lc.save_code(g, str(p))
    again = lc.load_code(str(p))
    assert again.rows == g.rows
    assert again.ctx == g.ctx
    assert again.label == g.label
    # canonical bytes: a rewrite is identical
    blob = p.read_bytes()
    lc.save_code(again, str(p))
    assert p.read_bytes() == blob
    assert blob.endswith(b"\n")


def test_load_rejects_bad_documents(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(CodeFormatError):
        lc.load_code(str(p))
    p.write_text(json.dumps({"m": 3, "q": 8}))
    with pytest.raises(CodeFormatError):
        lc.load_code(str(p))
    doc = _cf_segre().to_json()
    doc["q"] = 9
    p.write_text(json.dumps(doc))
    with pytest.raises(CodeFormatError):
        lc.load_code(str(p))
    doc = _cf_segre().to_json()
    doc["modulus"] = 0b1001  # reducible
    p.write_text(json.dumps(doc))
    with pytest.raises(CodeFormatError):
        lc.load_code(str(p))


def test_distribution_csv():
    d = lc.WeightDistribution(3, (1, 0, 0, 7))
    assert lc.distribution_csv(d) == "weight,count\n0,1\n1,0\n2,0\n3,7\n"
