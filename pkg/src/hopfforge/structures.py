"""Algebras, coalgebras, bialgebras and Hopf algebras as bundles of morphisms.

Also the convolution product on ``Hom(C, A)``, convolution inverses obtained
by exact linear solves, and the tensor-product module and comodule
structures used by the builders.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from ._exact import ExactMatrix
from ._linalg import solve
from .errors import MissingStructure, ShapeMismatch
from .gvec import Mor, Obj, braiding, identity, tensor, then
from .report import CheckReport

#: Sidedness values reported by :func:`convolution_inverse`.
TWO_SIDED = "two-sided"
LEFT_ONLY = "left-only"
RIGHT_ONLY = "right-only"
NO_INVERSE = "none"


def _expect(f: Mor, dom: Obj, cod: Obj, what: str) -> None:
    if not (f.dom.same_dims(dom) and f.cod.same_dims(cod)):
        raise ShapeMismatch(f"{what} has shape {f.dom!r} -> {f.cod!r}")


@dataclass(frozen=True)
class AlgebraData:
    """An object with a multiplication ``A (x) A -> A`` and a unit ``1 -> A``."""

    obj: Obj
    mul: Mor
    unit: Mor

    def __post_init__(self):
        a = self.obj
        _expect(self.mul, a @ a, a, "multiplication")
        _expect(self.unit, a.cat.unit, a, "unit")


@dataclass(frozen=True)
class CoalgebraData:
    """An object with a comultiplication ``C -> C (x) C`` and a counit ``C -> 1``."""

    obj: Obj
    comul: Mor
    counit: Mor

    def __post_init__(self):
        c = self.obj
        _expect(self.comul, c, c @ c, "comultiplication")
        _expect(self.counit, c, c.cat.unit, "counit")


@dataclass(frozen=True)
class HopfBundle:
    """An object with any subset of the five Hopf structure maps.

    ``flags`` records which families of laws have been verified, drawn from
    ``{"algebra", "coalgebra", "bialgebra", "hopf"}``.
    """

    obj: Obj
    mul: Optional[Mor] = None
    unit: Optional[Mor] = None
    comul: Optional[Mor] = None
    counit: Optional[Mor] = None
    antipode: Optional[Mor] = None
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        x, one = self.obj, self.obj.cat.unit
        for name, dom, cod in (("mul", x @ x, x), ("unit", one, x), ("comul", x, x @ x),
                               ("counit", x, one), ("antipode", x, x)):
            f = getattr(self, name)
            if f is not None:
                _expect(f, dom, cod, name)
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def cat(self):
        return self.obj.cat

    @property
    def field(self):
        return self.obj.cat.field

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def algebra(self) -> AlgebraData:
        if self.mul is None or self.unit is None:
            raise MissingStructure("bundle has no multiplication or unit")
        return AlgebraData(self.obj, self.mul, self.unit)

    @property
    def coalgebra(self) -> CoalgebraData:
        if self.comul is None or self.counit is None:
            raise MissingStructure("bundle has no comultiplication or counit")
        return CoalgebraData(self.obj, self.comul, self.counit)

    @property
    def has_bialgebra_maps(self) -> bool:
        return None not in (self.mul, self.unit, self.comul, self.counit)

    def with_flags(self, *flags: str) -> "HopfBundle":
        return replace(self, flags=self.flags | set(flags))

    def with_antipode(self, s: Mor) -> "HopfBundle":
        return replace(self, antipode=s)

    def transposed(self, cat=None) -> "HopfBundle":
        """Dual bundle: every structure map transposed, roles of (co)products swapped.

        The result lives in ``cat`` (default: the category with transposed
        bicharacter), where it is again a bialgebra whenever this one is.
        """
        cat = cat or self.cat.transposed()
        t = lambda f: None if f is None else f.transpose(cat)
        obj = cat._word(self.obj.factors)
        return HopfBundle(obj, mul=t(self.comul), unit=t(self.counit), comul=t(self.mul),
                          counit=t(self.unit), antipode=t(self.antipode), flags=self.flags)

    @classmethod
    def from_parts(cls, alg: AlgebraData, coalg: CoalgebraData, antipode=None, flags=()):
        if alg.obj is not coalg.obj and not alg.obj.same_dims(coalg.obj):
            raise ShapeMismatch("algebra and coalgebra live on different objects")
        return cls(alg.obj, alg.mul, alg.unit, coalg.comul, coalg.counit, antipode, frozenset(flags))


# -- axiom checks ---------------------------------------------------------------

def check_algebra(a: AlgebraData, prefix: str = "braidedbialgebra.") -> CheckReport:
    """Associativity and the two unit laws."""
    x, m, u = a.obj, a.mul, a.unit
    r = CheckReport()
    r.equation(prefix + "assoc", then(m @ x, m), then(x @ m, m))
    r.equation(prefix + "unit.right", then(x @ u, m), identity(x))
    r.equation(prefix + "unit.left", then(u @ x, m), identity(x))
    return r


def check_coalgebra(c: CoalgebraData, prefix: str = "braidedbialgebra.") -> CheckReport:
    """Coassociativity and the two counit laws."""
    x, d, e = c.obj, c.comul, c.counit
    r = CheckReport()
    r.equation(prefix + "coassoc", then(d, d @ x), then(d, x @ d))
    r.equation(prefix + "counit.right", then(d, x @ e), identity(x))
    r.equation(prefix + "counit.left", then(d, e @ x), identity(x))
    return r


def _require(h: HopfBundle, *names: str) -> None:
    missing = [n for n in names if getattr(h, n) is None]
    if missing:
        raise MissingStructure("bundle lacks " + ", ".join(missing))


def check_bialgebra(h: HopfBundle) -> CheckReport:
    """All bialgebra axioms, the compatibility using the braiding ``c_{H,H}``."""
    _require(h, "mul", "unit", "comul", "counit")
    x = h.obj
    m, u, d, e = h.mul, h.unit, h.comul, h.counit
    r = check_algebra(h.algebra)
    r.extend(check_coalgebra(h.coalgebra))
    r.equation("braidedbialgebra.counit_mult", then(m, e), e @ e)
    r.equation("braidedbialgebra.comult_unit", then(u, d), u @ u)
    r.equation("braidedbialgebra.comult_mult", then(m, d),
               then(d @ d, tensor(x, braiding(x, x), x), m @ m))
    r.equation("counit_unit", then(u, e), identity(x.cat.unit))
    return r


def check_antipode(h: HopfBundle) -> CheckReport:
    """Both convolution identities ``S * id = eta eps = id * S``."""
    _require(h, "mul", "unit", "comul", "counit", "antipode")
    x, s = h.obj, h.antipode
    ue = then(h.counit, h.unit)
    r = CheckReport()
    r.equation("braidedantipode.left", then(h.comul, s @ x, h.mul), ue)
    r.equation("braidedantipode.right", then(h.comul, x @ s, h.mul), ue)
    return r


def check_hopf(h: HopfBundle) -> CheckReport:
    return check_bialgebra(h).extend(check_antipode(h))


def check_antipode_antimorphism(h: HopfBundle) -> CheckReport:
    """The antipode reverses products and coproducts up to the braiding."""
    _require(h, "mul", "unit", "comul", "counit", "antipode")
    x, s = h.obj, h.antipode
    r = CheckReport()
    r.equation("antiac.a.mult", then(h.mul, s), then(braiding(x, x), s @ s, h.mul))
    r.equation("antiac.a.unit", then(h.unit, s), h.unit)
    r.equation("antiac.b.comult", then(s, h.comul), then(h.comul, s @ s, braiding(x, x)))
    r.equation("antiac.b.counit", then(s, h.counit), h.counit)
    return r


# -- convolution ----------------------------------------------------------------

def convolution(f: Mor, g: Mor, c: CoalgebraData, a: AlgebraData) -> Mor:
    """``f * g = m_A (f (x) g) Delta_C``."""
    for h, name in ((f, "f"), (g, "g")):
        _expect(h, c.obj, a.obj, name)
    return then(c.comul, f @ g, a.mul)


def convolution_unit(c: CoalgebraData, a: AlgebraData) -> Mor:
    return then(c.counit, a.unit)


def _slice_columns(mat: ExactMatrix, cols) -> ExactMatrix:
    return mat.take(None, list(cols))


def _slice_rows(mat: ExactMatrix, rows) -> ExactMatrix:
    return mat.take(list(rows), None)


def _convolution_system(f: Mor, c: CoalgebraData, a: AlgebraData, side: str) -> ExactMatrix:
    """Matrix ``K`` with ``vec(f * g) = K vec(g)`` (side "right") or ``vec(g * f)``.

    Matrices are taken in the internal (Kronecker) bases.  ``vec`` flattens a
    ``dim A x dim C`` matrix row by row.  Writing ``f * g = M (C (x) g) Delta``
    with ``M = m (f (x) A)``, the coefficient of ``g[a, y]`` in entry
    ``(r, x)`` is ``sum_k M[r, (k, a)] Delta[(k, y), x]``; this is a sum of
    Kronecker products over ``k``.
    """
    dc, da = c.obj.dim, a.obj.dim
    delta = then(identity(c.obj), c.comul, identity(c.obj @ c.obj)).mat
    f = then(identity(c.obj), f, identity(a.obj))
    field = f.field
    total = ExactMatrix.zeros(field, da * dc, da * dc)
    if side == "right":
        mm = then(f @ a.obj, a.mul).mat  # C (x) A -> A, index k * da + a
        for k in range(dc):
            mk = _slice_columns(mm, range(k * da, (k + 1) * da))
            dk = _slice_rows(delta, range(k * dc, (k + 1) * dc))
            if mk.nnz and dk.nnz:
                total = total + mk.kron(dk.transpose())
    else:
        mm = then(a.obj @ f, a.mul).mat  # A (x) C -> A, index a * dc + k
        for k in range(dc):
            mk = _slice_columns(mm, range(k, da * dc, dc))
            dk = _slice_rows(delta, range(k, dc * dc, dc))
            if mk.nnz and dk.nnz:
                total = total + mk.kron(dk.transpose())
    return total


def _solve_convolution(f: Mor, c: CoalgebraData, a: AlgebraData, side: str) -> Optional[Mor]:
    system = _convolution_system(f, c, a, side)
    target = convolution_unit(c, a)
    dc, da = c.obj.dim, a.obj.dim
    rhs = ExactMatrix.from_entries(f.field, da * dc, 1,
                                   [(r * dc + cc, 0, v) for r, cc, v in target.mat.entries()])
    found = solve(f.field, system, rhs)
    if found is None:
        return None
    x, _unique = found
    entries = [(k // dc, k % dc, v) for k, _, v in x.entries()]
    mat = ExactMatrix.from_entries(f.field, da, dc, entries)
    return Mor._raw(c.obj, a.obj, mat)


def _homogeneous(g: Mor) -> bool:
    rows, cols, _ = g.mat.coo()
    return bool((g.cod.degs[rows] == g.dom.degs[cols]).all())


def convolution_inverse(f: Mor, c: CoalgebraData, a: AlgebraData):
    """Return ``(g, sidedness)`` for ``f`` in the convolution algebra ``Hom(C, A)``.

    ``sidedness`` is ``"two-sided"`` when ``f * g = eta eps = g * f``;
    ``"right-only"`` when only a right inverse (``f * g = eta eps``) exists,
    ``"left-only"`` when only a left inverse exists, and ``"none"`` otherwise.
    One-sided answers return the one-sided inverse found; they are reported
    as such and never promoted.
    """
    _expect(f, c.obj, a.obj, "f")
    unit = convolution_unit(c, a)
    g = _solve_convolution(f, c, a, "right")
    if g is not None and _homogeneous(g):
        if convolution(g, f, c, a) == unit:
            return g, TWO_SIDED
        return g, RIGHT_ONLY
    h = _solve_convolution(f, c, a, "left")
    if h is not None and _homogeneous(h):
        return h, LEFT_ONLY
    return None, NO_INVERSE


def antipode_of(h: HopfBundle) -> Optional[Mor]:
    """The convolution inverse of the identity, if it is two-sided."""
    _require(h, "mul", "unit", "comul", "counit")
    s, side = convolution_inverse(identity(h.obj), h.coalgebra, h.algebra)
    return s if side == TWO_SIDED else None


def verify_bialgebra(h: HopfBundle) -> HopfBundle:
    """Run the bialgebra (and antipode, if present) checks and set flags."""
    flags = set(h.flags)
    if check_algebra(h.algebra):
        flags.add("algebra")
    if check_coalgebra(h.coalgebra):
        flags.add("coalgebra")
    if check_bialgebra(h):
        flags.add("bialgebra")
        if h.antipode is not None and check_antipode(h):
            flags.add("hopf")
    return replace(h, flags=frozenset(flags))


def make_hopf(h: HopfBundle) -> HopfBundle:
    """Verify ``h`` as a bialgebra and attach the computed antipode when it exists."""
    h = verify_bialgebra(h)
    if "bialgebra" in h.flags and h.antipode is None:
        s = antipode_of(h)
        if s is not None:
            h = verify_bialgebra(replace(h, antipode=s))
    return h


# -- modules and comodules over a bialgebra -------------------------------------

def tensor_module_action(b: HopfBundle, m_obj: Obj, act_m: Mor, n_obj: Obj, act_n: Mor) -> Mor:
    """Left action of ``B`` on ``M (x) N``: ``(act_M (x) act_N)(B (x) c_{B,M} (x) N)(Delta_B (x) M (x) N)``."""
    bo = b.obj
    return then(tensor(b.comul, m_obj, n_obj), tensor(bo, braiding(bo, m_obj), n_obj), act_m @ act_n)


def tensor_comodule_coaction(b: HopfBundle, m_obj: Obj, co_m: Mor, n_obj: Obj, co_n: Mor) -> Mor:
    """Left coaction of ``B`` on ``M (x) N``: ``(m_B (x) M (x) N)(B (x) c_{M,B} (x) N)(co_M (x) co_N)``."""
    bo = b.obj
    return then(co_m @ co_n, tensor(bo, braiding(m_obj, bo), n_obj), tensor(b.mul, m_obj, n_obj))


def check_left_module(b: HopfBundle, obj: Obj, act: Mor, prefix: str = "module.") -> CheckReport:
    """``act (m_B (x) X) = act (B (x) act)`` and ``act (eta_B (x) X) = id``."""
    bo = b.obj
    r = CheckReport()
    r.equation(prefix + "assoc", then(b.mul @ obj, act), then(bo @ act, act))
    r.equation(prefix + "unit", then(b.unit @ obj, act), identity(obj))
    return r


def check_right_module(b: HopfBundle, obj: Obj, act: Mor, prefix: str = "module.") -> CheckReport:
    """Right action ``X (x) B -> X`` given here as a map with ``B`` on the right of ``X``."""
    bo = b.obj
    r = CheckReport()
    r.equation(prefix + "assoc", then(obj @ b.mul, act), then(act @ bo, act))
    r.equation(prefix + "unit", then(obj @ b.unit, act), identity(obj))
    return r


def check_left_comodule(b: HopfBundle, obj: Obj, co: Mor, prefix: str = "comodule.") -> CheckReport:
    """``(Delta_B (x) X) co = (B (x) co) co`` and ``(eps_B (x) X) co = id``."""
    bo = b.obj
    r = CheckReport()
    r.equation(prefix + "coassoc", then(co, b.comul @ obj), then(co, bo @ co))
    r.equation(prefix + "counit", then(co, b.counit @ obj), identity(obj))
    return r


def check_right_comodule(b: HopfBundle, obj: Obj, co: Mor, prefix: str = "comodule.") -> CheckReport:
    bo = b.obj
    r = CheckReport()
    r.equation(prefix + "coassoc", then(co, obj @ b.comul), then(co, co @ bo))
    r.equation(prefix + "counit", then(co, obj @ b.counit), identity(obj))
    return r
