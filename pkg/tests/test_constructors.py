import pytest
from hypothesis import given, strategies as st

from hopfforge import catalog, constructors as C, crossprod as cp
from hopfforge.errors import CheckFailed, InvalidMatchedPair, PreconditionFailed
from hopfforge.field import FieldSpec
from hopfforge.gvec import GVec, braiding, identity
from hopfforge.structures import TWO_SIDED, check_hopf, convolution_inverse

import oracles

Q = catalog.Q
F101 = catalog.F101


def double_oracle(g: C.GroupDatum):
    """Structure constants of ``D(G)`` on ``delta_x g`` (index ``x n + g``) from the textbook formulas."""
    n = g.order
    N = n * n
    mul = [[0] * (N * N) for _ in range(N)]
    comul = [[0] * N for _ in range(N * N)]
    anti = [[0] * N for _ in range(N)]
    for x in range(n):
        for a in range(n):
            for y in range(n):
                for b in range(n):
                    if x == g.mul(g.mul(a, y), g.inv(a)):
                        mul[x * n + g.mul(a, b)][(x * n + a) * N + y * n + b] = 1
            for y in range(n):
                z = g.mul(g.inv(y), x)
                comul[(y * n + a) * N + z * n + a][x * n + a] = 1
            ai = g.inv(a)
            anti[g.mul(g.mul(ai, g.inv(x)), a) * n + ai][x * n + a] = 1
    return mul, comul, anti


@pytest.mark.parametrize("group", [C.GroupDatum.cyclic(3), C.GroupDatum.symmetric(3)])
def test_drinfeld_double_matches_textbook_formulas(group):
    d = C.drinfeld_double(group, F101)
    h = cp.cross_bundle(d)
    mul, comul, anti = double_oracle(group)
    assert oracles.factor_major(h.mul) == mul
    assert oracles.factor_major(h.comul) == comul
    assert oracles.factor_major(h.antipode) == anti
    assert d.phi == braiding(d.A.obj, d.B.obj)


def builder_outputs():
    h4 = catalog.sweedler()
    g = C.GroupDatum.symmetric(3)
    A, B = C.function_algebra(g, F101), C.group_algebra(g, F101)
    lact, _ = C.conjugation_actions(g, A, B)
    smash = cp.CrossDatum(A, B, C.build_smash_product(B, A.algebra, lact), braiding(A.obj, B.obj))
    dual = C.transpose_datum(smash)
    cosmash = cp.CrossDatum(dual.A, dual.B, braiding(dual.B.obj, dual.A.obj),
                            C.build_smash_coproduct(dual.B, dual.A.coalgebra, cp.derive_actions(dual).lcoact))
    dz3 = catalog.double("Z3")
    dual = C.transpose_datum(dz3)
    acts = cp.derive_actions(dual)
    dccp = C.build_double_cross_coproduct(dual.A, dual.B, acts.lcoact, acts.rcoact)
    return {
        "smash": (smash, {"smash_left"}),
        "cosmash": (cosmash, {"cosmash_left"}),
        "biproduct": (h4, {"biproduct_left"}),
        "dcp": (dz3, {"double_cross_product"}),
        "dccp": (dccp, {"double_cross_coproduct"}),
        "opposite_double": (C.opposite_drinfeld_double(C.GroupDatum.symmetric(3), F101),
                            {"double_cross_product", "smash_right"}),
    }


BUILT = builder_outputs()


@pytest.mark.parametrize("name", sorted(BUILT))
def test_builder_outputs_are_bialgebras_in_every_characterization(name):
    d, _ = BUILT[name]
    book = cp.EquationBook.for_datum(d)
    assert cp.check_bat_direct(d, book)
    for s in cp.CONDITION_SETS:
        assert cp.check_condition_set(d, s, book), s
    assert cp.is_cross_bialgebra(d)


@pytest.mark.parametrize("name", sorted(BUILT))
def test_builder_outputs_classify_as_expected(name):
    d, expected = BUILT[name]
    assert expected <= cp.classify(d)


def test_smash_builders_reproduce_h4_twists():
    si = C.sweedler_inputs(Q)
    h4 = catalog.sweedler()
    assert C.build_smash_product(si.B, si.A.algebra, si.lact) == h4.psi
    assert C.build_smash_coproduct(si.B, si.A.coalgebra, si.lcoact) == h4.phi


def test_smash_product_with_conjugation_is_the_double():
    smash, _ = BUILT["smash"]
    ref = C.drinfeld_double(C.GroupDatum.symmetric(3), F101)
    assert smash.psi == ref.psi


def test_double_cross_twists_are_braidings():
    dcp, _ = BUILT["dcp"]
    dccp, _ = BUILT["dccp"]
    assert dcp.phi == braiding(dcp.A.obj, dcp.B.obj)
    assert dccp.psi == braiding(dccp.B.obj, dccp.A.obj)
    assert dccp.phi == C.transpose_datum(dcp).phi


@pytest.mark.parametrize("name", sorted(BUILT))
def test_attached_antipodes_are_convolution_inverses(name):
    d, _ = BUILT[name]
    if d.antipode is None:  # the bare smash twists: assemble the antipode here
        d = d.replace(antipode=cp.build_cross_antipode(d, d.A.antipode, d.B.antipode))
    h = cp.cross_bundle(d)
    s, side = convolution_inverse(identity(h.obj), h.coalgebra, h.algebra)
    assert side == TWO_SIDED and s == d.antipode
    assert check_hopf(h)


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(PreconditionFailed):
        C.sweedler_inputs(FieldSpec.prime(2))


def test_biproduct_rejects_a_bad_action():
    si = C.sweedler_inputs(Q)
    with pytest.raises(PreconditionFailed):
        C.build_smash_product(si.B, si.A.algebra, si.lact.scale(2))


def test_double_cross_product_rejects_unmatched_actions():
    g = C.GroupDatum.symmetric(3)
    A, B = C.function_algebra(g, F101), C.group_algebra(g, F101)
    lact, ract = C.conjugation_actions(g, A, B)
    with pytest.raises(PreconditionFailed):
        C.build_double_cross_product(A, B, lact.scale(2), ract)


# -- groups ---------------------------------------------------------------------------------

def test_group_axioms_are_enforced():
    with pytest.raises(InvalidMatchedPair):
        C.GroupDatum(((0, 1), (0, 1)))
    g = C.GroupDatum.symmetric(3)
    assert g.order == 6
    assert any(g.mul(a, b) != g.mul(b, a) for a in range(6) for b in range(6))


@given(st.integers(1, 7), st.integers(1, 5))
def test_trivial_pair_gives_the_direct_product(n, m):
    G1, G2 = C.GroupDatum.cyclic(n), C.GroupDatum.cyclic(m)
    group, H = C.build_bicrossed_group(C.MatchedGroupPair.trivial(G1, G2), Q)
    assert group.table == C.GroupDatum.direct_product(G1, G2).table
    assert H.dim == n * m


def test_s3_factorization_gives_s3():
    group, H = C.build_bicrossed_group(C.s3_factorization(), Q)
    assert group.order == 6
    assert group.is_isomorphic_to(C.GroupDatum.symmetric(3)) is not None
    assert group.is_isomorphic_to(C.GroupDatum.cyclic(6)) is None


def test_linearized_double_cross_product_equals_group_algebra():
    mp = C.s3_factorization()
    A, B = C.group_algebra(mp.G1, Q), C.group_algebra(mp.G2, Q)
    d = C.build_double_cross_product(A, B, *C.linearized_actions(mp, A, B))
    K = cp.cross_bundle(d)
    H = C.group_algebra(C.bicrossed_group(mp), Q)
    for key in ("mul", "unit", "comul", "counit", "antipode"):
        assert getattr(K, key).matrix == getattr(H, key).matrix


def test_bad_actions_do_not_give_a_group():
    Z3, Z2 = C.GroupDatum.cyclic(3), C.GroupDatum.cyclic(2)
    # (a, h)(b, k) = (a + b + h, h + k) is not associative
    act12 = tuple(tuple(h for h in range(2)) for _ in range(3))
    act21 = tuple(tuple((a + h) % 3 for h in range(2)) for a in range(3))
    with pytest.raises(InvalidMatchedPair):
        C.bicrossed_group(C.MatchedGroupPair(Z3, Z2, act12, act21))


def test_super_tensor_bialgebra_uses_the_super_braiding():
    d = catalog.super_line_z2()
    assert d.cat == GVec.super(Q)
    assert cp.check_bat_direct(d)
