"""Recovering a cross product from a Hopf algebra with a projection.

Given ``i: B -> H`` and ``pi: H -> B`` with ``pi i = id``, the complement
``A`` is carved out of ``H`` as an equalizer (a kernel here) or, dually, as a
coequalizer (a cokernel).  Its structure maps are obtained by exact
factorization through the inclusion ``j`` or the quotient ``p``, and
``zeta = m_H (j (x) i)`` identifies the resulting cross product with ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from . import crossprod as cp
from ._linalg import solve
from .crossprod import CrossDatum
from .errors import CheckFailed, FactorizationFailed, MissingStructure, PreconditionFailed
from .gvec import Mor, Obj, braiding, cokernel, identity, kernel, tensor as T, then
from .report import CheckReport
from .structures import HopfBundle, check_antipode, convolution, convolution_unit

c = braiding

EQUALIZER = "equalizer"
COEQUALIZER = "coequalizer"


@dataclass(frozen=True)
class ProjectionDatum:
    """``H`` and ``B`` with ``i: B -> H`` and ``pi: H -> B``.

    ``direction="equalizer"`` expects ``pi`` a bialgebra map and ``i`` an
    algebra map; ``direction="coequalizer"`` expects ``i`` a bialgebra map
    and ``pi`` a coalgebra map.  :func:`check_projection_conditions`
    verifies this.
    """

    H: HopfBundle
    B: HopfBundle
    i: Mor
    pi: Mor
    direction: str = EQUALIZER

    def __post_init__(self):
        if self.direction not in (EQUALIZER, COEQUALIZER):
            raise ValueError("direction must be 'equalizer' or 'coequalizer'")
        for name in ("H", "B"):
            if not getattr(self, name).has_bialgebra_maps:
                raise MissingStructure(f"{name} needs all four bialgebra structure maps")
        h, b = self.H.obj, self.B.obj
        cp._shape(self.i, b, h, "i")
        cp._shape(self.pi, h, b, "pi")

    def transposed(self, cat=None) -> "ProjectionDatum":
        """Dual datum: ``i`` and ``pi`` exchange roles, so does the direction."""
        cat = cat or self.H.cat.transposed()
        flip = COEQUALIZER if self.direction == EQUALIZER else EQUALIZER
        return ProjectionDatum(self.H.transposed(cat), self.B.transposed(cat),
                               self.pi.transpose(cat), self.i.transpose(cat), flip)


def projection_from_datum(d: CrossDatum) -> ProjectionDatum:
    """``i = eta_A (x) B`` and ``pi = eps_A (x) B`` on a cross product bialgebra."""
    H = cp.cross_bundle(d)
    return ProjectionDatum(H, d.B, T(d.A.unit, d.B.obj), T(d.A.counit, d.B.obj), EQUALIZER)


# -- the conditions ---------------------------------------------------------------------

def _maps(pd: ProjectionDatum) -> dict:
    H, B = pd.H, pd.B
    maps = dict(H=H.obj, B=B.obj, mH=H.mul, uH=H.unit, dH=H.comul, eH=H.counit,
                mB=B.mul, uB=B.unit, dB=B.comul, eB=B.counit, i=pd.i, pi=pd.pi)
    if B.antipode is not None:
        maps["s"] = B.antipode
    if H.antipode is not None:
        maps["SS"] = H.antipode
    return maps


def _algebra_map_report(f: Mor, X: HopfBundle, Y: HopfBundle, name: str) -> CheckReport:
    r = CheckReport()
    r.equation(f"morphism.{name}.mult", then(X.mul, f), then(T(f, f), Y.mul))
    r.equation(f"morphism.{name}.unit", then(X.unit, f), Y.unit)
    return r


def _coalgebra_map_report(f: Mor, X: HopfBundle, Y: HopfBundle, name: str) -> CheckReport:
    r = CheckReport()
    r.equation(f"morphism.{name}.comult", then(f, Y.comul), then(X.comul, T(f, f)))
    r.equation(f"morphism.{name}.counit", then(f, Y.counit), X.counit)
    return r


def _raise_on_failure(report: CheckReport, why: str) -> None:
    if not report:
        raise PreconditionFailed(report.first_failure.label, why)


SPLIT = "pi∘i=id"


def check_projection_conditions(pd: ProjectionDatum) -> CheckReport:
    """``pi i = id`` and the colinearity identities of the chosen direction.

    A failed split is reported on its own, before anything else is tried.
    Raises :class:`PreconditionFailed` when ``i`` or ``pi`` is not the kind
    of morphism the direction requires, or when ``B`` has no antipode.
    """
    H, B, i, pi = pd.H, pd.B, pd.i, pd.pi
    r = CheckReport()
    r.equation(SPLIT, then(i, pi), identity(B.obj))
    if not r:
        return r
    if B.antipode is None:
        raise PreconditionFailed("braidedantipode", "B must be a Hopf algebra")
    if pd.direction == EQUALIZER:
        _raise_on_failure(_algebra_map_report(pi, H, B, "pi"), "pi must be a bialgebra map")
        _raise_on_failure(_coalgebra_map_report(pi, H, B, "pi"), "pi must be a bialgebra map")
        _raise_on_failure(_algebra_map_report(i, B, H, "i"), "i must be an algebra map")
        labels = ["piiscpb.a", "piiscpb.b"] + (["antscpb.b"] if H.antipode is not None else [])
    else:
        _raise_on_failure(_algebra_map_report(i, B, H, "i"), "i must be a bialgebra map")
        _raise_on_failure(_coalgebra_map_report(i, B, H, "i"), "i must be a bialgebra map")
        _raise_on_failure(_coalgebra_map_report(pi, H, B, "pi"), "pi must be a coalgebra map")
        labels = ["carprofcccHa.a", "carprofcccHa.b"] + (
            ["carprofcccHaAnt"] if H.antipode is not None else [])
    m = _maps(pd)
    for label in labels:
        r.equation(label, *PROJECTION_EQUATIONS[label](**m))
    return r


PROJECTION_EQUATIONS = {
    "piiscpb.a": lambda i, pi, dH, dB, H, B, **_: (
        then(i, dH, T(H, pi)),
        then(dB, T(i, B))),
    "piiscpb.b": lambda i, pi, s, dH, dB, mH, H, B, **_: (
        then(dB, T(i, B), T(H, s), T(dH, i), T(H, mH)),
        then(i, dH, T(pi, dH), T(i, H, pi), T(H, H, s), T(H, H, i), T(H, mH))),
    "antscpb.b": lambda i, pi, SS, dH, mH, eB, uH, H, **_: (
        then(i, dH, T(pi, SS), T(i, H), mH),
        then(eB, uH)),
    "carprofcccHa.a": lambda i, pi, mH, mB, H, B, **_: (
        then(T(H, i), mH, pi),
        then(T(pi, B), mB)),
    "carprofcccHa.b": lambda i, pi, s, dH, mH, mB, H, B, **_: (
        then(T(H, dH), T(mH, pi), T(H, s), T(pi, B), mB),
        then(T(H, dH), T(pi, H, pi), T(i, H, s), T(H, H, i), T(H, mH), mH, pi)),
    "carprofcccHaAnt": lambda i, pi, SS, dH, mH, eH, uB, H, **_: (
        then(dH, T(pi, SS), T(i, H), mH, pi),
        then(eH, uB)),
    "doblecrosscoprproj": lambda i, pi, s, dB, dH, mH, eB, H, B, **_: (
        then(T(dB, dH), T(B, B, H, pi), T(B, s, H, s), T(i, i, H, i), T(H, H, mH),
             T(H, c(H, H)), T(mH, H), mH),
        then(T(eB, dH), T(H, pi), T(H, s), T(H, i), mH)),
    "wpdoublecrossprod": lambda i, pi, s, dH, mH, mB, uB, H, B, **_: (
        then(dH, T(dH, H), T(pi, c(H, H)), T(B, pi, H), T(B, s, dH), T(mB, H, pi),
             T(B, H, s), T(B, H, i), T(B, mH)),
        then(dH, T(H, pi), T(H, s), T(H, i), T(uB, mH))),
    "p2oftildep": lambda i, s, mH, mB, dB, H, B, **_: (
        then(dB, T(i, s), T(H, i), mH),
        then(dB, T(B, s), mB, i)),
}


# -- factorization ------------------------------------------------------------------------------

def factor_through_mono(j: Mor, f: Mor, what: str) -> Mor:
    """The unique ``g`` with ``j g = f`` for an injective ``j``."""
    found = solve(f.field, j.matrix, f.matrix)
    if found is None:
        raise FactorizationFailed(f"{what} does not factor through the equalizer")
    g, _ = found
    return Mor(f.dom, j.dom, g)


def factor_through_epi(p: Mor, f: Mor, what: str) -> Mor:
    """The unique ``g`` with ``g p = f`` for a surjective ``p``."""
    found = solve(f.field, p.matrix.transpose(), f.matrix.transpose())
    if found is None:
        raise FactorizationFailed(f"{what} does not factor through the coequalizer")
    g, _ = found
    return Mor(p.cod, f.cod, g.transpose())


# -- reconstruction ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Reconstruction:
    """Outcome of a reconstruction: ``A``, ``j``, ``p``, the bundle on ``A``, the datum and ``zeta``."""

    obj: Obj
    j: Mor
    p: Mor
    A: HopfBundle
    datum: CrossDatum
    zeta: Mor
    zeta_inv: Mor
    report: CheckReport

    def __iter__(self):
        return iter((self.obj, self.j, self.p, self.A, self.datum, self.zeta))


def _split_idempotent(pd: ProjectionDatum) -> Mor:
    """``m_H (H (x) i s pi) Delta_H``, written ``p-tilde`` or ``j-tilde`` by direction."""
    H, B = pd.H, pd.B
    return then(H.comul, T(H.obj, then(pd.pi, B.antipode, pd.i)), H.mul)


def _identity_inverse_map(pd: ProjectionDatum) -> Mor:
    """``m_H (i pi (x) S_H) Delta_H``."""
    H = pd.H
    return then(H.comul, T(then(pd.pi, pd.i), H.antipode), H.mul)


def _finish(pd: ProjectionDatum, a: Obj, j: Mor, p: Mor, A: HopfBundle, r: CheckReport,
            S_A: Optional[Mor]) -> Reconstruction:
    H, B, i, pi = pd.H, pd.B, pd.i, pd.pi
    r.equation("p∘j=id", then(j, p), identity(a))
    zeta = then(T(j, i), H.mul)
    zeta_inv = then(H.comul, T(p, pi))
    r.equation("zeta.right_inverse", then(zeta_inv, zeta), identity(H.obj))
    r.equation("zeta.left_inverse", then(zeta, zeta_inv), identity(a @ B.obj))
    psi = then(T(i, j), H.mul, H.comul, T(p, pi))
    phi = then(T(j, i), H.mul, H.comul, T(pi, p))
    d = CrossDatum(A, B, psi, phi)
    r.extend(cp.check_cross_product_algebra(d))
    r.extend(cp.check_cross_product_coalgebra(d))
    if not r:
        raise CheckFailed(r.first_failure.label, "reconstruction failed")
    r.extend(cp.check_bat_direct(d))
    n = cp.normality(d)
    if pd.direction == EQUALIZER:
        r.record("normal.psi.left", n["psi_left_conormal"])
    else:
        r.record("normal.phi.left", n["phi_left_normal"])
    K = cp.cross_bundle(d)
    r.equation("zeta.mult", then(K.mul, zeta), then(T(zeta, zeta), H.mul))
    r.equation("zeta.unit", then(K.unit, zeta), H.unit)
    r.equation("zeta.comult", then(zeta, H.comul), then(K.comul, T(zeta, zeta)))
    r.equation("zeta.counit", then(zeta, H.counit), K.counit)
    if S_A is not None:
        co, alg = A.coalgebra, A.algebra
        unit = convolution_unit(co, alg)
        r.equation("antipforA.left", convolution(S_A, identity(a), co, alg), unit)
        r.equation("antipforA.right", convolution(identity(a), S_A, co, alg), unit)
        A = A.with_antipode(S_A)
        S = then(zeta, H.antipode, zeta_inv)
        d = CrossDatum(A, B, psi, phi, S)
        r.extend(check_antipode(cp.cross_bundle(d)), prefix="cross.")
        r.equation("cross_antipode_formula", cp.cross_antipode_formula(d, S_A, B.antipode), S)
    if not r:
        raise CheckFailed(r.first_failure.label, "reconstruction failed verification")
    return Reconstruction(a, j, p, A, d, zeta, zeta_inv, r)


def _has_antipode_condition(pd: ProjectionDatum, report: CheckReport, label: str) -> bool:
    return pd.H.antipode is not None and label in report and report.verdict(label)


def reconstruct_equalizer(pd: ProjectionDatum) -> Reconstruction:
    """Carve ``A`` out of ``H`` as the equalizer of ``(H (x) pi) Delta_H`` and ``H (x) eta_B``."""
    if pd.direction != EQUALIZER:
        raise PreconditionFailed("direction", "reconstruct_equalizer needs an equalizer datum")
    pre = check_projection_conditions(pd)
    if not pre:
        raise PreconditionFailed(pre.first_failure.label, "projection conditions fail")
    H, B, i, pi = pd.H, pd.B, pd.i, pd.pi
    h = H.obj
    a, j = kernel(then(H.comul, T(h, pi)) - T(h, B.unit))
    r = CheckReport()
    ptilde = _split_idempotent(pd)
    r.equation("ptilde∘j=j", then(j, ptilde), j)
    r.equation("p2oftildep", then(i, ptilde), then(B.counit, H.unit))
    p = factor_through_mono(j, ptilde, "p-tilde")
    mul = factor_through_mono(j, then(T(j, j), H.mul), "m_H (j (x) j)")
    unit = factor_through_mono(j, H.unit, "eta_H")
    comul = then(j, H.comul, T(p, p))
    counit = then(j, H.counit)
    A = HopfBundle(a, mul, unit, comul, counit)
    S_A = None
    if _has_antipode_condition(pd, pre, "antscpb.b"):
        S_tilde = factor_through_mono(j, _identity_inverse_map(pd), "f-tilde")
        S_A = then(j, S_tilde)
    out = _finish(pd, a, j, p, A, r, S_A)
    return replace(out, report=CheckReport().extend(pre).extend(out.report))


def reconstruct_coequalizer(pd: ProjectionDatum) -> Reconstruction:
    """``A`` as the coequalizer of ``m_H (H (x) i)`` and ``H (x) eps_B``."""
    if pd.direction != COEQUALIZER:
        raise PreconditionFailed("direction", "reconstruct_coequalizer needs a coequalizer datum")
    pre = check_projection_conditions(pd)
    if not pre:
        raise PreconditionFailed(pre.first_failure.label, "projection conditions fail")
    H, B, i, pi = pd.H, pd.B, pd.i, pd.pi
    h = H.obj
    a, p = cokernel(then(T(h, i), H.mul) - T(h, B.counit))
    r = CheckReport()
    jtilde = _split_idempotent(pd)
    r.equation("p∘jtilde=p", then(jtilde, p), p)
    r.equation("jtilde∘i", then(i, jtilde), then(B.counit, H.unit))
    j = factor_through_epi(p, jtilde, "j-tilde")
    comul = factor_through_epi(p, then(H.comul, T(p, p)), "(p (x) p) Delta_H")
    counit = factor_through_epi(p, H.counit, "eps_H")
    mul = then(T(j, j), H.mul, p)
    unit = then(H.unit, p)
    A = HopfBundle(a, mul, unit, comul, counit)
    S_A = None
    if _has_antipode_condition(pd, pre, "carprofcccHaAnt"):
        S_tilde = factor_through_epi(p, _identity_inverse_map(pd), "f-tilde")
        S_A = then(S_tilde, p)
    out = _finish(pd, a, j, p, A, r, S_A)
    return replace(out, report=CheckReport().extend(pre).extend(out.report))


def reconstruct(pd: ProjectionDatum) -> Reconstruction:
    return reconstruct_equalizer(pd) if pd.direction == EQUALIZER else reconstruct_coequalizer(pd)


# -- special projections ------------------------------------------------------------------------

def check_special_projections(pd: ProjectionDatum) -> dict[str, bool]:
    """Which special kind of cross product the projection produces.

    Equalizer direction: biproduct when ``i`` is also a coalgebra map,
    double cross coproduct when the doblecrosscoprproj identity holds and
    double cross product when the wpdoublecrossprod identity holds.  A
    coequalizer datum is answered through its transpose, which exchanges
    the two double cross flags.
    """
    if pd.direction == COEQUALIZER:
        flags = check_special_projections(pd.transposed())
        return {"biproduct": flags["biproduct"],
                "double_cross_coproduct": flags["double_cross_product"],
                "double_cross_product": flags["double_cross_coproduct"]}
    pre = check_projection_conditions(pd)
    if not pre:
        raise PreconditionFailed(pre.first_failure.label, "projection conditions fail")
    m = _maps(pd)
    holds = lambda label: bool(CheckReport().equation(label, *PROJECTION_EQUATIONS[label](**m)).passed)
    return {
        "biproduct": bool(_coalgebra_map_report(pd.i, pd.B, pd.H, "i")),
        "double_cross_coproduct": holds("doblecrosscoprproj"),
        "double_cross_product": holds("wpdoublecrossprod"),
    }


def datum_flags(d: CrossDatum) -> dict[str, bool]:
    """The datum-level counterparts of :func:`check_special_projections`."""
    flags = cp.classify(d)
    return {
        "biproduct": "biproduct_left" in flags,
        "double_cross_coproduct": "double_cross_coproduct" in flags,
        "double_cross_product": "double_cross_product" in flags,
    }
