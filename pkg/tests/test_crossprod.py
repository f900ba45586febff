import random

import pytest
from hypothesis import assume, given, strategies as st

from hopfforge import catalog, constructors as C, crossprod as cp
from hopfforge.errors import PreconditionFailed
from hopfforge.gvec import braiding, identity, tensor as T, then, zero_mor
from hopfforge.structures import TWO_SIDED, convolution_inverse

import datagen
import oracles

PAIRS = {fs: datagen.small_pairs(fs) for fs in (datagen.F2, datagen.F3)}
SETS = sorted(cp.CONDITION_SETS)


@st.composite
def small_data(draw):
    """A datum on a pool pair with ``psi`` and ``phi`` drawn from the unit-condition spaces."""
    fs = draw(st.sampled_from(sorted(PAIRS, key=str)))
    A, B, ps, ph = draw(st.sampled_from(PAIRS[fs]))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return cp.CrossDatum(A, B, ps.sample(rng), ph.sample(rng))


@st.composite
def cross_data(draw):
    d = draw(small_data())
    assume(cp.is_cross_product_datum(d))
    return d


def fixture_data():
    out = dict(catalog.corpus(include_s3=False))
    out["sweedler_h4_f3"] = catalog.sweedler(datagen.F3)
    return out


FIXTURES = fixture_data()


# -- the cross product maps against an index-loop oracle ------------------------------------

def oracle_cross_mul(d):
    fs = d.cat.field
    da, db = d.A.dim, d.B.dim
    mA, mB, psi = (oracles.factor_major(f) for f in (d.A.mul, d.B.mul, d.psi))
    n = da * db
    out = [[oracles.zero(fs)] * (n * n) for _ in range(n)]
    for a, b, a2, b2 in ((a, b, a2, b2) for a in range(da) for b in range(db)
                         for a2 in range(da) for b2 in range(db)):
        col = (a * db + b) * n + (a2 * db + b2)
        for a3 in range(da):
            for b3 in range(db):
                w = psi[a3 * db + b3][b * da + a2]
                if not w:
                    continue
                for a4 in range(da):
                    for b4 in range(db):
                        v = oracles.mul(fs, w, oracles.mul(fs, mA[a4][a * da + a3], mB[b4][b3 * db + b2]))
                        out[a4 * db + b4][col] = oracles.add(fs, out[a4 * db + b4][col], v)
    return out


def oracle_cross_comul(d):
    fs = d.cat.field
    da, db = d.A.dim, d.B.dim
    dA, dB, phi = (oracles.factor_major(f) for f in (d.A.comul, d.B.comul, d.phi))
    n = da * db
    out = [[oracles.zero(fs)] * n for _ in range(n * n)]
    for a in range(da):
        for b in range(db):
            for a1 in range(da):
                for a2 in range(da):
                    wa = dA[a1 * da + a2][a]
                    if not wa:
                        continue
                    for b1 in range(db):
                        for b2 in range(db):
                            wb = dB[b1 * db + b2][b]
                            if not wb:
                                continue
                            for b3 in range(db):
                                for a3 in range(da):
                                    w = phi[b3 * da + a3][a2 * db + b1]
                                    if w:
                                        row = (a1 * db + b3) * n + (a3 * db + b2)
                                        v = oracles.mul(fs, w, oracles.mul(fs, wa, wb))
                                        out[row][a * db + b] = oracles.add(fs, out[row][a * db + b], v)
    return out


@pytest.mark.parametrize("name", ["sweedler_h4", "drinfeld_Z3", "super_line_kZ2", "tensor_kZ2_kZ3dual"])
def test_cross_maps_match_index_oracle(name):
    d = FIXTURES[name]
    assert oracles.factor_major(cp.build_cross_mul(d)) == oracle_cross_mul(d)
    assert oracles.factor_major(cp.build_cross_comul(d)) == oracle_cross_comul(d)


@given(small_data())
def test_cross_maps_match_index_oracle_on_random_data(d):
    assert oracles.factor_major(cp.build_cross_mul(d)) == oracle_cross_mul(d)
    assert oracles.factor_major(cp.build_cross_comul(d)) == oracle_cross_comul(d)


def test_sweedler_datum_assembles_to_h4():
    d = FIXTURES["sweedler_h4"]
    h = cp.cross_bundle(d)
    ref = C.sweedler_h4(catalog.Q)
    for key in ("mul", "unit", "comul", "counit", "antipode"):
        assert getattr(h, key).matrix == getattr(ref, key).matrix, key


# -- equivalence and implication properties ---------------------------------------------

def verdicts(d):
    book = cp.EquationBook.for_datum(d)
    return [cp.check_bat_direct(d, book).passed] + [cp.check_condition_set(d, s, book).passed for s in SETS]


@given(cross_data())
def test_condition_sets_agree_with_direct_check(d):
    v = verdicts(d)
    assert len(set(v)) == 1, dict(zip(["direct"] + SETS, v))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_condition_sets_pass_on_fixtures(name):
    assert verdicts(FIXTURES[name]) == [True] * 7


def test_datum_sampler_respects_unit_conditions():
    rng = random.Random(0)
    for fs, pairs in PAIRS.items():
        for A, B, ps, ph in pairs:
            d = cp.CrossDatum(A, B, ps.sample(rng), ph.sample(rng))
            book = cp.EquationBook.for_datum(d)
            assert book.all_hold(["crossprodalg.c", "crossprodalg.d", "crossprodcoalg.c", "crossprodcoalg.d"])


@given(cross_data())
def test_bialgebra_datum_satisfies_necessary_conditions(d):
    book = cp.EquationBook.for_datum(d)
    if cp.check_bat_direct(d, book):
        assert cp.check_neccconds(d, book=book)
        assert cp.check_bespdrab(d, book=book)


@given(cross_data())
def test_first_four_necessary_conditions_give_multiplicativity(d):
    book = cp.EquationBook.for_datum(d)
    if book.all_hold(cp.UNIT_COUNIT + cp.NECCCONDS[:4]):
        assert book.holds("crossbialgcond.a")


@given(cross_data())
def test_necessary_conditions_split_into_compatibilities(d):
    book = cp.EquationBook.for_datum(d)
    assume(book.all_hold(cp.UNIT_COUNIT))
    h = book.holds
    if h("neccconds.g"):
        assert h("neccconds.a") == (h("BespDrabComp.a") and h("BespDrabComp.c"))
        assert h("neccconds.b") == (h("BespDrabComp.b") and h("BespDrabComp.d"))
    if h("neccconds.c"):
        assert h("neccconds.e") == (h("BespDrabComp.a") and h("BespDrabComp.e"))
        assert h("neccconds.f") == (h("BespDrabComp.b") and h("BespDrabComp.f"))


@given(small_data())
def test_auxiliary_lists_imply_associativity_conditions(d):
    book = cp.EquationBook.for_datum(d)
    assume(book.all_hold(cp.AUX_HYPOTHESES))
    h = book.all_hold
    alg2 = lambda s: [f"crossprodalg2.{x}" for x in s]
    coalg2 = lambda s: [f"crossprodcoalg2.{x}" for x in s]
    if h(["neccconds.g", "BespDrabComp.b", "BespDrabComp.e"] + alg2("abc")):
        assert book.holds("crossprodalg.a")
    if h(["neccconds.g", "BespDrabComp.a", "BespDrabComp.f"] + alg2("acd")):
        assert book.holds("crossprodalg.b")
    if h(["neccconds.c", "BespDrabComp.b", "BespDrabComp.c"] + coalg2("abc")):
        assert book.holds("crossprodcoalg.a")
    if h(["neccconds.c", "BespDrabComp.a", "BespDrabComp.d"] + coalg2("bcd")):
        assert book.holds("crossprodcoalg.b")


def sampled_bialgebra_data(count=3000, seed=11):
    """Bialgebra admissible data found among random small data, plus the fixtures."""
    rng = random.Random(seed)
    found = {}
    for _ in range(count):
        fs = rng.choice(sorted(PAIRS, key=str))
        A, B, ps, ph = rng.choice(PAIRS[fs])
        d = cp.CrossDatum(A, B, ps.sample(rng), ph.sample(rng))
        key = (id(A), id(B), tuple(d.psi.entries()), tuple(d.phi.entries()))
        if key not in found and cp.is_cross_product_datum(d) and cp.check_bat_direct(d):
            found[key] = d
    return list(found.values()) + list(FIXTURES.values())


BIALGEBRA_DATA = sampled_bialgebra_data()


def sampled_cross_data(count=400, seed=5):
    rng = random.Random(seed)
    for _ in range(count):
        fs = rng.choice(sorted(PAIRS, key=str))
        A, B, ps, ph = rng.choice(PAIRS[fs])
        d = cp.CrossDatum(A, B, ps.sample(rng), ph.sample(rng))
        if cp.is_cross_product_datum(d):
            yield d


def test_enough_bialgebra_data_were_found():
    assert len(BIALGEBRA_DATA) >= 20


@pytest.mark.parametrize("index", range(len(BIALGEBRA_DATA)))
def test_bilateral_conormality_means_braiding(index):
    d = BIALGEBRA_DATA[index]
    n = cp.normality(d)
    a, b = d.A.obj, d.B.obj
    assert (n["psi_left_conormal"] and n["psi_right_conormal"]) == (d.psi == braiding(b, a))
    assert (n["phi_left_normal"] and n["phi_right_normal"]) == (d.phi == braiding(a, b))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_cross_antipode_is_the_convolution_inverse(name):
    d = FIXTURES[name]
    S = cp.build_cross_antipode(d, d.A.antipode, d.B.antipode)
    h = cp.cross_bundle(d)
    s, side = convolution_inverse(identity(h.obj), h.coalgebra, h.algebra)
    assert side == TWO_SIDED and S == s


@given(cross_data())
def test_equation_book_is_order_independent(d):
    labels = cp.DIRECT + cp.NECCCONDS
    forward = cp.EquationBook.for_datum(d).report(labels)
    backward = cp.EquationBook.for_datum(d).report(list(reversed(labels)))
    assert {e.label: e.passed for e in forward.entries} == {e.label: e.passed for e in backward.entries}


def test_thread_count_does_not_change_reports(monkeypatch):
    d = FIXTURES["drinfeld_Z3"]
    serial = cp.check_condition_set(d, "vi").to_json()
    monkeypatch.setenv("HOPFFORGE_THREADS", "4")
    assert cp.worker_count() == 4
    assert cp.check_condition_set(d, "vi").to_json() == serial


# -- worked examples ----------------------------------------------------------------------

def test_zero_psi_breaks_the_unit_condition():
    d = FIXTURES["sweedler_h4"]
    bad = d.replace(psi=zero_mor(d.psi.dom, d.psi.cod), antipode=None)
    report = cp.check_cross_product_algebra(bad)
    assert not report.verdict("crossprodalg.c")
    with pytest.raises(PreconditionFailed) as err:
        cp.check_aux_lists(bad, "crossprodalg2")
    assert err.value.label == "crossprodalg.c"


def test_braiding_datum_is_a_cross_product():
    h = FIXTURES["tensor_kZ2_kZ3dual"]
    assert cp.check_cross_product_algebra(h) and cp.check_cross_product_coalgebra(h)
    assert cp.check_aux_lists(h, "crossprodalg2") and cp.check_aux_lists(h, "crossprodcoalg2")


def test_h4_actions():
    d = FIXTURES["sweedler_h4"]
    acts = cp.derive_actions(d)
    a, b = d.A.obj, d.B.obj
    # B (x) A basis: (1, g) (x) (1, x); g (x) x sits at index 3, x at index 1 of A
    assert oracles.factor_major(acts.lact)[1][3] == -1
    assert cp.reconstruct_psi_phi(acts, d.A, d.B) == (d.psi, d.phi)
    assert cp.check_aux_lists(d, "crossprodalg2") and cp.check_aux_lists(d, "crossprodcoalg2")
    assert cp.check_twoanothYD(d)


def test_trivial_actions_give_braidings():
    d = FIXTURES["tensor_kZ2_kZ3dual"]
    acts = cp.derive_actions(d)
    assert acts == cp.trivial_actions(d.A, d.B)
    psi, phi = cp.reconstruct_psi_phi(acts, d.A, d.B)
    assert psi == braiding(d.B.obj, d.A.obj) and phi == braiding(d.A.obj, d.B.obj)


def test_abelian_double_has_trivial_conjugation():
    d = C.drinfeld_double(C.GroupDatum.cyclic(2), catalog.Q)
    assert cp.derive_actions(d) == cp.trivial_actions(d.A, d.B)


def test_replacing_phi_by_the_braiding_breaks_h4():
    d = FIXTURES["sweedler_h4"]
    bad = d.replace(phi=braiding(d.A.obj, d.B.obj), antipode=None)
    report = cp.check_bat_direct(bad)
    assert report.first_failure.label == "crossbialgcond.a"
    assert verdicts(bad) == [False] * 7


def test_twoanothyd_needs_psi_recovered_from_actions():
    """A cross product datum on which ``neccconds.c`` fails is rejected before evaluation."""
    for d in sampled_cross_data():
        book = cp.EquationBook.for_datum(d)
        if not book.holds("neccconds.c"):
            with pytest.raises(PreconditionFailed) as err:
                cp.check_twoanothYD(d)
            assert err.value.label == "neccconds.c"
            return
    pytest.fail("no cross product datum violating neccconds.c was sampled")


@pytest.mark.parametrize("variant", sorted(cp.THM5_VARIANTS))
def test_theorem5_variants_on_h4(variant):
    d = FIXTURES["sweedler_h4"]
    assert cp.check_theorem5(cp.derive_actions(d), d.A, d.B, variant)


def test_theorem5_with_zero_right_coaction_fails_counit_clause():
    d = FIXTURES["tensor_kZ2_kZ3dual"]
    acts = cp.trivial_actions(d.A, d.B)
    acts = cp.ActionCoactionDatum(acts.lact, acts.ract, acts.lcoact, zero_mor(acts.rcoact.dom, acts.rcoact.cod))
    report = cp.check_theorem5(acts, d.A, d.B, "vii.1")
    assert not report.verdict(cp.THM5 + ".v.counit")


def test_normality_and_classification():
    h4 = FIXTURES["sweedler_h4"]
    n = cp.normality(h4)
    assert n["psi_left_conormal"] and not n["psi_right_conormal"]
    assert cp.classify(h4) == {"smash_left", "cosmash_left", "biproduct_left"}
    assert "double_cross_product" in cp.classify(FIXTURES["drinfeld_Z3"])
    assert cp.classify(FIXTURES["tensor_kZ2_kZ3dual"]) == set(cp.CLASSES) - {"plain"}


def test_smash_conditions_on_h4():
    d = FIXTURES["sweedler_h4"]
    acts = cp.derive_actions(d)
    assert cp.check_smash_conditions(acts, d.A, d.B, "product")
    assert cp.check_smash_conditions(acts, d.A, d.B, "coproduct")
    broken = cp.ActionCoactionDatum(acts.lact, acts.ract, zero_mor(acts.lcoact.dom, acts.lcoact.cod), acts.rcoact)
    report = cp.check_smash_conditions(broken, d.A, d.B, "coproduct")
    assert not report.verdict(cp.THM5 + ".iii.counit")
    assert not report.verdict("comodule_coalgebra.counit")
    assert not report.subset(cp.SMASH_LISTS["coproduct"])


def test_smash_conditions_require_a_trivial_right_action():
    d = C.opposite_drinfeld_double(C.GroupDatum.symmetric(3), catalog.F101)
    with pytest.raises(PreconditionFailed) as err:
        cp.check_smash_conditions(cp.derive_actions(d), d.A, d.B, "product")
    assert err.value.label == "normal.psi.left"


def test_smash_detection():
    assert cp.check_smash_detection(FIXTURES["sweedler_h4"]) == {"psi_smash": True, "phi_smash": True}
    assert cp.check_smash_detection(FIXTURES["tensor_kZ2_kZ3dual"])["psi_smash"]
    d = C.opposite_drinfeld_double(C.GroupDatum.symmetric(3), catalog.F101)
    assert not cp.normality(d)["psi_left_conormal"]
    assert cp.check_smash_detection(d)["psi_smash"] is False
