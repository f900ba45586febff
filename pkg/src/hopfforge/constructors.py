"""Builders for the standard families of cross product Hopf algebras.

Finite groups and their group and function algebras, Sweedler's four
dimensional Hopf algebra, the Drinfeld double, smash (co)products, Radford
biproducts, double cross (co)products and bicrossed products of groups.
Every builder verifies its output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence, Union

from . import crossprod as cp
from ._exact import ExactMatrix
from .crossprod import ActionCoactionDatum, CrossDatum, EquationBook
from .errors import CheckFailed, InvalidMatchedPair, PreconditionFailed
from .field import FieldSpec
from .gvec import GVec, Mor, Obj, braiding, identity, tensor as T, then
from .report import CheckReport
from .structures import (
    TWO_SIDED,
    AlgebraData,
    CoalgebraData,
    HopfBundle,
    check_antipode,
    check_bialgebra,
    check_left_comodule,
    check_left_module,
    convolution_inverse,
    verify_bialgebra,
)

c = braiding
CategoryLike = Union[GVec, FieldSpec]


def _category(cat: CategoryLike) -> GVec:
    return GVec.trivial(cat) if isinstance(cat, FieldSpec) else cat


def kron_map(dom: Obj, cod: Obj, entries) -> Mor:
    """Map from ``(row, col, value)`` triples indexed in factor-major tensor order.

    For a tensor word the factor-major index of ``x_i (x) y_j`` is
    ``i * dim(Y) + j``; it differs from the canonical (degree-sorted) order
    as soon as the grading is nontrivial.
    """
    field = dom.field
    canon = [(int(cod.rank[r]), int(dom.rank[col]), field.element(v)) for r, col, v in entries]
    return Mor(dom, cod, ExactMatrix.from_entries(field, cod.dim, dom.dim, canon))


def _require_report(report: CheckReport, why: str) -> None:
    if not report:
        raise PreconditionFailed(report.first_failure.label, why)


# -- groups -----------------------------------------------------------------------


@dataclass(frozen=True)
class GroupDatum:
    """A finite group given by its multiplication table on ``0 .. n-1``."""

    table: tuple
    names: tuple = ()

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise InvalidMatchedPair("a group table must be a nonempty square")
        if any(not 0 <= x < n for row in table for x in row):
            raise InvalidMatchedPair("group table entries out of range")
        ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
        if not ids:
            raise InvalidMatchedPair("group table has no identity")
        e = ids[0]
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for x in range(n):
                    if table[ab][x] != table[a][table[b][x]]:
                        raise InvalidMatchedPair(f"group table is not associative at ({a}, {b}, {x})")
        inverse = []
        for a in range(n):
            inv = [b for b in range(n) if table[a][b] == e]
            if not inv:
                raise InvalidMatchedPair(f"element {a} has no inverse")
            inverse.append(inv[0])
        object.__setattr__(self, "_identity", e)
        object.__setattr__(self, "_inverse", tuple(inverse))
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def inverse(self) -> tuple:
        return self._inverse

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    @classmethod
    def trivial(cls) -> "GroupDatum":
        return cls(((0,),), ("e",))

    @classmethod
    def cyclic(cls, n: int) -> "GroupDatum":
        return cls(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))

    @classmethod
    def symmetric(cls, n: int) -> "GroupDatum":
        """Permutations of ``0 .. n-1`` in lexicographic order; ``(p q)(i) = p(q(i))``."""
        perms = list(permutations(range(n)))
        index = {p: k for k, p in enumerate(perms)}
        table = tuple(tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms)
        return cls(table, tuple("".join(map(str, p)) for p in perms))

    @classmethod
    def direct_product(cls, g: "GroupDatum", h: "GroupDatum") -> "GroupDatum":
        """Elements ``(a, x)`` indexed ``a * |h| + x``."""
        m = h.order
        table = tuple(
            tuple(g.mul(a, b) * m + h.mul(x, y) for b in range(g.order) for y in range(m))
            for a in range(g.order) for x in range(m))
        return cls(table)

    def is_isomorphic_to(self, other: "GroupDatum") -> Optional[tuple]:
        """A bijection ``f`` with ``f(ab) = f(a) f(b)``, found by search, or ``None``."""
        n = self.order
        if other.order != n:
            return None
        for f in permutations(range(n)):
            if all(f[self.mul(a, b)] == other.mul(f[a], f[b]) for a in range(n) for b in range(n)):
                return f
        return None


def group_algebra(g: GroupDatum, cat: CategoryLike) -> HopfBundle:
    """``kG`` with grouplike basis, in degree zero."""
    cat = _category(cat)
    n, e = g.order, g.identity
    x = cat.atom(n)
    one = cat.unit
    mul = kron_map(x @ x, x, [(g.mul(a, b), a * n + b, 1) for a in range(n) for b in range(n)])
    unit = kron_map(one, x, [(e, 0, 1)])
    comul = kron_map(x, x @ x, [(a * n + a, a, 1) for a in range(n)])
    counit = kron_map(x, one, [(0, a, 1) for a in range(n)])
    antipode = kron_map(x, x, [(g.inv(a), a, 1) for a in range(n)])
    return _verified_hopf(HopfBundle(x, mul, unit, comul, counit, antipode), "group algebra")


def function_algebra(g: GroupDatum, cat: CategoryLike) -> HopfBundle:
    """``k^G`` in the basis of point indicators ``delta_a``."""
    cat = _category(cat)
    n, e = g.order, g.identity
    x = cat.atom(n)
    one = cat.unit
    mul = kron_map(x @ x, x, [(a, a * n + a, 1) for a in range(n)])
    unit = kron_map(one, x, [(a, 0, 1) for a in range(n)])
    comul = kron_map(x, x @ x, [(a * n + b, g.mul(a, b), 1) for a in range(n) for b in range(n)])
    counit = kron_map(x, one, [(0, e, 1)])
    antipode = kron_map(x, x, [(g.inv(a), a, 1) for a in range(n)])
    return _verified_hopf(HopfBundle(x, mul, unit, comul, counit, antipode), "function algebra")


def _verified_hopf(h: HopfBundle, what: str) -> HopfBundle:
    h = verify_bialgebra(h)
    if "hopf" not in h.flags:
        report = check_bialgebra(h)
        if report:
            report = check_antipode(h)
        raise CheckFailed(report.first_failure.label, f"{what} failed verification")
    return h


# -- Sweedler's example and the super line ----------------------------------------------

def _require_odd_characteristic(field: FieldSpec) -> None:
    if field.characteristic == 2:
        raise PreconditionFailed("characteristic", "Sweedler's algebra needs characteristic other than 2")


def dual_numbers(cat: CategoryLike, degree=None) -> HopfBundle:
    """``k[x]/x^2`` with ``x`` primitive, basis ``(1, x)``; ``x`` sits in ``degree``.

    In plain vector spaces this is an algebra and a coalgebra but not a
    bialgebra; with ``x`` odd in super vector spaces it is the super line,
    a Hopf algebra with ``S(x) = -x``.
    """
    cat = _category(cat)
    zero = cat.group.zero
    dims = {zero: 1}
    if degree is None or cat.group.normalize(degree) == zero:
        dims = {zero: 2}
    else:
        dims[degree] = 1
    x = cat.atom(dims)
    one = cat.unit
    # positions of 1 and x in the canonical basis of the atom
    i1, ix = 0, 1
    mul = kron_map(x @ x, x, [(i1, 0, 1), (ix, 1, 1), (ix, 2, 1)])
    unit = kron_map(one, x, [(i1, 0, 1)])
    comul = kron_map(x, x @ x, [(0, i1, 1), (1, ix, 1), (2, ix, 1)])
    counit = kron_map(x, one, [(0, i1, 1)])
    antipode = kron_map(x, x, [(i1, i1, 1), (ix, ix, -1)])
    return HopfBundle(x, mul, unit, comul, counit, antipode)


def super_line(field: FieldSpec) -> HopfBundle:
    """The odd line ``k[y]/y^2`` as a Hopf algebra in super vector spaces."""
    _require_odd_characteristic(field)
    cat = GVec.super(field)
    return _verified_hopf(dual_numbers(cat, degree=(1,)), "super line")


@dataclass(frozen=True)
class SweedlerInputs:
    """``B = kZ2``, ``A = k[x]/x^2``, ``g . x = -x`` and ``x -> g (x) x``."""

    B: HopfBundle
    A: HopfBundle
    lact: Mor
    lcoact: Mor


def sweedler_inputs(field: FieldSpec) -> SweedlerInputs:
    _require_odd_characteristic(field)
    cat = GVec.trivial(field)
    B = group_algebra(GroupDatum.cyclic(2), cat)
    A = dual_numbers(cat)
    a, b = A.obj, B.obj
    # basis of B (x) A in factor-major order: 1.1, 1.x, g.1, g.x
    lact = kron_map(b @ a, a, [(0, 0, 1), (1, 1, 1), (0, 2, 1), (1, 3, -1)])
    # basis of B (x) A as codomain: 1 (x) x -> index 1, g (x) x -> index 3
    lcoact = kron_map(a, b @ a, [(0, 0, 1), (3, 1, 1)])
    return SweedlerInputs(B, A, lact, lcoact)


def sweedler_h4(field: FieldSpec) -> HopfBundle:
    """H4 with basis ``(1, g, x, xg)`` from its defining relations.

    ``g^2 = 1``, ``x^2 = 0``, ``gx = -xg``, ``Delta g = g (x) g`` and
    ``Delta x = x (x) 1 + g (x) x``; ``x^j g^i`` has index ``2j + i``.
    """
    _require_odd_characteristic(field)
    cat = GVec.trivial(field)
    h = cat.atom(4)
    one = cat.unit
    mul = []
    for j in range(2):
        for i in range(2):
            for l in range(2):
                for k in range(2):
                    if j + l < 2:
                        sign = -1 if i * l else 1
                        mul.append((2 * (j + l) + (i + k) % 2, (2 * j + i) * 4 + 2 * l + k, sign))
    # Delta(g^i) = g^i (x) g^i; Delta(x g^i) = x g^i (x) g^i + g^(i+1) (x) x g^i
    comul = []
    for i in range(2):
        comul.append((i * 4 + i, i, 1))
        comul.append(((2 + i) * 4 + i, 2 + i, 1))
        comul.append((((i + 1) % 2) * 4 + 2 + i, 2 + i, 1))
    antipode = [(0, 0, 1), (1, 1, 1), (3, 2, 1), (2, 3, -1)]
    bundle = HopfBundle(h, kron_map(h @ h, h, mul), kron_map(one, h, [(0, 0, 1)]),
                        kron_map(h, h @ h, comul), kron_map(h, one, [(0, 0, 1), (0, 1, 1)]),
                        kron_map(h, h, antipode))
    return _verified_hopf(bundle, "Sweedler algebra")


# -- smash (co)products and biproducts ---------------------------------------------------

def smash_psi(B: HopfBundle, a: Obj, lact: Mor) -> Mor:
    """The twist ``b (x) a -> b1 . a (x) b2``."""
    b = B.obj
    return then(T(B.comul, a), T(b, c(b, a)), T(lact, b))


def smash_phi(B: HopfBundle, a: Obj, lcoact: Mor) -> Mor:
    """The twist ``a (x) b -> a_(-1) b (x) a_(0)``."""
    b = B.obj
    return then(T(lcoact, b), T(b, c(a, b)), T(B.mul, a))


def check_module_algebra(B: HopfBundle, A: AlgebraData, lact: Mor) -> CheckReport:
    """Module axioms of ``lact`` and its compatibility with ``m_A`` and ``eta_A``."""
    a, b = A.obj, B.obj
    r = check_left_module(B, a, lact, prefix="action1.a.")
    r.equation("module_algebra.mult", then(T(b, A.mul), lact),
               then(T(B.comul, a, a), T(b, c(b, a), a), T(lact, lact), A.mul))
    r.equation("module_algebra.unit", then(T(b, A.unit), lact), then(B.counit, A.unit))
    return r


def check_comodule_coalgebra(B: HopfBundle, A: CoalgebraData, lcoact: Mor) -> CheckReport:
    """Comodule axioms of ``lcoact`` and its compatibility with ``Delta_A`` and ``eps_A``."""
    a, b = A.obj, B.obj
    r = check_left_comodule(B, a, lcoact, prefix="coaction1.a.")
    r.equation("comodule_coalgebra.comult", then(lcoact, T(b, A.comul)),
               then(A.comul, T(lcoact, lcoact), T(b, c(a, b), a), T(B.mul, a, a)))
    r.equation("comodule_coalgebra.counit", then(lcoact, T(b, A.counit)), then(A.counit, B.unit))
    return r


def build_smash_product(B: HopfBundle, A: AlgebraData, lact: Mor) -> Mor:
    """The twist ``psi`` of the smash product algebra ``A # B``."""
    _require_report(check_bialgebra(B), "B must be a bialgebra")
    _require_report(check_module_algebra(B, A, lact), "A must be a left B-module algebra")
    return smash_psi(B, A.obj, lact)


def build_smash_coproduct(B: HopfBundle, A: CoalgebraData, lcoact: Mor) -> Mor:
    """The twist ``phi`` of the smash product coalgebra."""
    _require_report(check_bialgebra(B), "B must be a bialgebra")
    _require_report(check_comodule_coalgebra(B, A, lcoact), "A must be a left B-comodule coalgebra")
    return smash_phi(B, A.obj, lcoact)


def _identity_inverse(h: HopfBundle) -> Optional[Mor]:
    if h.antipode is not None:
        return h.antipode
    s, side = convolution_inverse(identity(h.obj), h.coalgebra, h.algebra)
    return s if side == TWO_SIDED else None


def _attach_antipode(d: CrossDatum, formula=None) -> CrossDatum:
    """Attach the cross antipode when both factors have convolution-invertible identities."""
    S_A, s_B = _identity_inverse(d.A), _identity_inverse(d.B)
    if S_A is None or s_B is None:
        return d
    if formula is None:
        return d.replace(antipode=cp.build_cross_antipode(d, S_A, s_B))
    S = formula(S_A, s_B)
    report = check_antipode(cp.cross_bundle(d, S))
    if not report:
        raise CheckFailed(report.first_failure.label, "antipode formula failed verification")
    return d.replace(antipode=S)


def _verified_bat(d: CrossDatum, label_set: str = "iv") -> CrossDatum:
    report = cp.check_condition_set(d, label_set)
    _require_report(report, "the assembled datum is not a cross product bialgebra")
    return d


def build_biproduct(B: HopfBundle, A: HopfBundle, lact: Mor, lcoact: Mor) -> CrossDatum:
    """Radford biproduct: smash product algebra and smash product coalgebra at once."""
    _require_report(check_bialgebra(B), "B must be a bialgebra")
    a, b = A.obj, B.obj
    psi = smash_psi(B, a, lact)
    phi = smash_phi(B, a, lcoact)
    book = EquationBook.for_datum(CrossDatum(A, B, psi, phi))
    for label in cp.CROSS_ALGEBRA + cp.CROSS_COALGEBRA:
        if not book.holds(label):
            raise PreconditionFailed(label, "smash twists do not form a cross product datum")
    d = _verified_bat(CrossDatum(A, B, psi, phi))
    return _attach_antipode(d)


def tensor_datum(A: HopfBundle, B: HopfBundle) -> CrossDatum:
    """Both twists equal to the braiding: the tensor product bialgebra."""
    a, b = A.obj, B.obj
    return CrossDatum(A, B, c(b, a), c(a, b))


def build_tensor_bialgebra(A: HopfBundle, B: HopfBundle) -> CrossDatum:
    _require_report(check_bialgebra(A), "A must be a bialgebra")
    _require_report(check_bialgebra(B), "B must be a bialgebra")
    return _attach_antipode(_verified_bat(tensor_datum(A, B)))


# -- double cross (co)products ---------------------------------------------------------------

DOUBLE_CROSS_COPRODUCT = "doublecrosscoprodbialg"

cp.EQUATIONS[DOUBLE_CROSS_COPRODUCT + ".a"] = cp.EQUATIONS[cp.THM5 + ".vi.2"]
cp.EQUATIONS[DOUBLE_CROSS_COPRODUCT + ".b"] = cp.EQUATIONS[cp.THM5 + ".vi.5"]
cp.EQUATIONS[DOUBLE_CROSS_COPRODUCT + ".c"] = lambda A, B, mA, mB, lcoact, rcoact, **_: (
    then(c(B, A), T(lcoact, rcoact), T(B, c(A, B), A), T(mB, mA)),
    then(T(rcoact, lcoact), T(B, c(A, B), A), T(mB, mA)))

MATCHED_PAIR = [cp.THM5 + "." + k for k in (
    "ii.assoc", "ii.unit", "ii.unit_A", "ii.counit",
    "iv.assoc", "iv.unit", "iv.unit_B", "iv.counit",
    "vi.1", "vi.2", "vi.3", "vi.4", "vi.5", "vi.6")]

COMATCHED_PAIR = [cp.THM5 + "." + k for k in (
    "iii.coassoc", "iii.counit", "iii.unit", "iii.counit_A",
    "v.coassoc", "v.counit", "v.unit", "v.counit_B")] + [
    f"{DOUBLE_CROSS_COPRODUCT}.{k}" for k in "abc"]


def build_double_cross_product(A: HopfBundle, B: HopfBundle, lact: Mor, ract: Mor) -> CrossDatum:
    """``A |><| B``: tensor coalgebra, multiplication twisted by a matched pair of actions."""
    triv = cp.trivial_actions(A, B)
    acts = ActionCoactionDatum(lact, ract, triv.lcoact, triv.rcoact)
    book = EquationBook.for_actions(acts, A, B)
    _require_report(book.report(MATCHED_PAIR), "the actions do not form a matched pair")
    psi, _ = cp.reconstruct_psi_phi(acts, A, B)
    d = _verified_bat(CrossDatum(A, B, psi, c(A.obj, B.obj)))
    return _attach_antipode(
        d, lambda S_A, s_B: cp.double_cross_product_antipode(acts, A, B, S_A, s_B))


def build_double_cross_coproduct(A: HopfBundle, B: HopfBundle, lcoact: Mor, rcoact: Mor) -> CrossDatum:
    """Tensor algebra, comultiplication twisted by a matched pair of coactions."""
    triv = cp.trivial_actions(A, B)
    acts = ActionCoactionDatum(triv.lact, triv.ract, lcoact, rcoact)
    book = EquationBook.for_actions(acts, A, B)
    _require_report(book.report(COMATCHED_PAIR), "the coactions do not form a matched pair")
    _, phi = cp.reconstruct_psi_phi(acts, A, B)
    d = _verified_bat(CrossDatum(A, B, c(B.obj, A.obj), phi))
    return _attach_antipode(
        d, lambda S_A, s_B: cp.double_cross_coproduct_antipode(acts, A, B, S_A, s_B))


def conjugation_actions(g: GroupDatum, A: HopfBundle, B: HopfBundle) -> tuple[Mor, Mor]:
    """``g . delta_y = delta_{g y g^-1}`` on ``k^G`` and the trivial action on ``kG``."""
    n = g.order
    a, b = A.obj, B.obj
    # B (x) A basis: g_h (x) delta_y at h * n + y
    lact = kron_map(b @ a, a, [(g.mul(g.mul(h, y), g.inv(h)), h * n + y, 1)
                               for h in range(n) for y in range(n)])
    ract = kron_map(b @ a, b, [(h, h * n + g.identity, 1) for h in range(n)])
    return lact, ract


def drinfeld_double(g: GroupDatum, cat: CategoryLike) -> CrossDatum:
    """``D(G) = k^G |><| kG`` with the conjugation action.

    Multiplication ``(delta_x g)(delta_y h) = [x = g y g^-1] delta_x gh`` and
    tensor product comultiplication.
    """
    cat = _category(cat)
    A = function_algebra(g, cat)
    B = group_algebra(g, cat)
    lact, ract = conjugation_actions(g, A, B)
    return build_double_cross_product(A, B, lact, ract)


def opposite_drinfeld_double(g: GroupDatum, cat: CategoryLike) -> CrossDatum:
    """``kG |><| k^G`` with ``delta_x < g = delta_{g^-1 x g}`` and the trivial left action.

    This is the double with its factors in the other order, so here ``psi``
    carries the conjugation through its right action.
    """
    cat = _category(cat)
    A = group_algebra(g, cat)
    B = function_algebra(g, cat)
    n = g.order
    a, b = A.obj, B.obj
    # B (x) A basis: delta_x (x) g_h at x * n + h
    lact = kron_map(b @ a, a, [(h, g.identity * n + h, 1) for h in range(n)])
    ract = kron_map(b @ a, b, [(g.mul(g.mul(g.inv(h), x), h), x * n + h, 1)
                               for x in range(n) for h in range(n)])
    return build_double_cross_product(A, B, lact, ract)


def transpose_datum(d: CrossDatum, cat: Optional[GVec] = None) -> CrossDatum:
    """Dual datum: products and coproducts exchanged, ``psi`` and ``phi`` exchanged."""
    cat = cat or d.cat.transposed()
    A, B = d.A.transposed(cat), d.B.transposed(cat)
    t = lambda f: None if f is None else f.transpose(cat)
    return CrossDatum(A, B, t(d.phi), t(d.psi), t(d.antipode))


# -- bicrossed products of groups ---------------------------------------------------------

@dataclass(frozen=True)
class MatchedGroupPair:
    """Groups ``G1``, ``G2`` with ``act12[a][h]`` in ``G2`` and ``act21[a][h]`` in ``G1``.

    For ``a`` in ``G1`` and ``h`` in ``G2``, ``act21[a][h]`` is ``h |> a`` and
    ``act12[a][h]`` is ``h <| a``.
    """

    G1: GroupDatum
    G2: GroupDatum
    act12: tuple
    act21: tuple

    def __post_init__(self):
        n1, n2 = self.G1.order, self.G2.order
        for name, tab, bound in (("act12", self.act12, n2), ("act21", self.act21, n1)):
            tab = tuple(tuple(int(v) for v in row) for row in tab)
            if len(tab) != n1 or any(len(row) != n2 for row in tab):
                raise InvalidMatchedPair(f"{name} must be a |G1| x |G2| table")
            if any(not 0 <= v < bound for row in tab for v in row):
                raise InvalidMatchedPair(f"{name} has entries out of range")
            object.__setattr__(self, name, tab)

    @classmethod
    def trivial(cls, G1: GroupDatum, G2: GroupDatum) -> "MatchedGroupPair":
        return cls(G1, G2,
                   tuple(tuple(h for h in range(G2.order)) for _ in range(G1.order)),
                   tuple(tuple(a for _ in range(G2.order)) for a in range(G1.order)))

    def left(self, h: int, a: int) -> int:
        """``h |> a`` in ``G1``."""
        return self.act21[a][h]

    def right(self, h: int, a: int) -> int:
        """``h <| a`` in ``G2``."""
        return self.act12[a][h]


def bicrossed_group(mp: MatchedGroupPair) -> GroupDatum:
    """``(a, h)(b, k) = (a (h |> b), (h <| b) k)`` on ``G1 x G2``, pairs indexed ``a |G2| + h``."""
    G1, G2 = mp.G1, mp.G2
    m = G2.order
    table = []
    for a in range(G1.order):
        for h in range(m):
            row = []
            for b in range(G1.order):
                for k in range(m):
                    first = G1.mul(a, mp.left(h, b))
                    second = G2.mul(mp.right(h, b), k)
                    row.append(first * m + second)
            table.append(tuple(row))
    try:
        return GroupDatum(tuple(table))
    except InvalidMatchedPair as exc:
        raise InvalidMatchedPair(f"the action tables do not give a group: {exc}") from None


def linearized_actions(mp: MatchedGroupPair, A: HopfBundle, B: HopfBundle) -> tuple[Mor, Mor]:
    """``lact(h (x) b) = h |> b`` on ``kG1`` and ``ract(h (x) b) = h <| b`` on ``kG2``."""
    n1 = mp.G1.order
    a, b = A.obj, B.obj
    lact = kron_map(b @ a, a, [(mp.left(h, x), h * n1 + x, 1)
                               for h in range(mp.G2.order) for x in range(n1)])
    ract = kron_map(b @ a, b, [(mp.right(h, x), h * n1 + x, 1)
                               for h in range(mp.G2.order) for x in range(n1)])
    return lact, ract


def build_bicrossed_group(mp: MatchedGroupPair, cat: CategoryLike) -> tuple[GroupDatum, HopfBundle]:
    """The bicrossed product group and its group algebra.

    The group algebra is checked to coincide, as matrices, with the double
    cross product ``kG1 |><| kG2`` of the linearized actions.
    """
    cat = _category(cat)
    group = bicrossed_group(mp)
    H = group_algebra(group, cat)
    A, B = group_algebra(mp.G1, cat), group_algebra(mp.G2, cat)
    lact, ract = linearized_actions(mp, A, B)
    d = build_double_cross_product(A, B, lact, ract)
    K = cp.cross_bundle(d)
    for name in ("mul", "unit", "comul", "counit", "antipode"):
        if getattr(K, name) != getattr(H, name):
            raise CheckFailed(f"bicrossed.{name}", "group algebra and double cross product disagree")
    return group, H


def s3_factorization() -> MatchedGroupPair:
    """``Z3`` and ``Z2`` with ``Z2`` inverting ``Z3``; the bicrossed product is ``S3``."""
    Z3, Z2 = GroupDatum.cyclic(3), GroupDatum.cyclic(2)
    act12 = tuple(tuple(h for h in range(2)) for _ in range(3))
    act21 = tuple(tuple(a if h == 0 else (-a) % 3 for h in range(2)) for a in range(3))
    return MatchedGroupPair(Z3, Z2, act12, act21)
