"""Cross product data ``(A, B, psi, phi)`` and their equation suites.

``psi: B (x) A -> A (x) B`` twists the multiplication of ``A (x) B`` and
``phi: A (x) B -> B (x) A`` twists its comultiplication.  Every named
identity below is an exact matrix equation; reports are keyed by the
equation labels used throughout the package (``"neccconds.d"`` and so on).

Equations are written in diagrammatic order with :func:`then`, so
``then(f, g)`` means "first ``f``, then ``g``", and ``T`` is the tensor
product of morphisms (an object standing for its identity).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import CheckFailed, MissingStructure, PreconditionFailed, ShapeMismatch
from .gvec import Mor, Obj, braiding, identity, tensor as T, then
from .report import CheckReport
from .structures import (
    HopfBundle,
    check_antipode,
    check_bialgebra,
    convolution,
    convolution_unit,
)

c = braiding

# -- data ---------------------------------------------------------------------


def _has_maps(h: HopfBundle, what: str) -> None:
    if not h.has_bialgebra_maps:
        raise MissingStructure(f"{what} needs a multiplication, unit, comultiplication and counit")


def _shape(f: Mor, dom: Obj, cod: Obj, what: str) -> None:
    if not (f.dom.same_dims(dom) and f.cod.same_dims(cod)):
        raise ShapeMismatch(f"{what} has shape {f.dom!r} -> {f.cod!r}, expected {dom!r} -> {cod!r}")


@dataclass(frozen=True)
class CrossDatum:
    """Two algebra-and-coalgebra bundles with the twisting maps ``psi`` and ``phi``.

    ``antipode`` is an optional antipode of ``A (x) B`` attached by builders.
    """

    A: HopfBundle
    B: HopfBundle
    psi: Mor
    phi: Mor
    antipode: Optional[Mor] = None

    def __post_init__(self):
        _has_maps(self.A, "A")
        _has_maps(self.B, "B")
        if self.A.cat != self.B.cat:
            raise ShapeMismatch("A and B live in different categories")
        a, b = self.A.obj, self.B.obj
        _shape(self.psi, b @ a, a @ b, "psi")
        _shape(self.phi, a @ b, b @ a, "phi")
        if self.antipode is not None:
            _shape(self.antipode, a @ b, a @ b, "antipode")

    @property
    def cat(self):
        return self.A.cat

    def replace(self, **changes) -> "CrossDatum":
        fields = dict(A=self.A, B=self.B, psi=self.psi, phi=self.phi, antipode=self.antipode)
        fields.update(changes)
        return CrossDatum(**fields)


@dataclass(frozen=True)
class ActionCoactionDatum:
    """``lact: B (x) A -> A``, ``ract: B (x) A -> B``, ``lcoact: A -> B (x) A``, ``rcoact: B -> B (x) A``."""

    lact: Mor
    ract: Mor
    lcoact: Mor
    rcoact: Mor

    def __post_init__(self):
        a, b = self.lact.cod, self.ract.cod
        _shape(self.lact, b @ a, a, "lact")
        _shape(self.ract, b @ a, b, "ract")
        _shape(self.lcoact, a, b @ a, "lcoact")
        _shape(self.rcoact, b, b @ a, "rcoact")


def trivial_actions(A: HopfBundle, B: HopfBundle) -> ActionCoactionDatum:
    """Actions through the counits and coactions through the units."""
    a, b = A.obj, B.obj
    return ActionCoactionDatum(
        lact=T(B.counit, a),
        ract=T(b, A.counit),
        lcoact=T(B.unit, a),
        rcoact=T(b, A.unit),
    )


# -- the cross product bundle ---------------------------------------------------

def build_cross_mul(d: CrossDatum) -> Mor:
    """``(m_A (x) m_B)(A (x) psi (x) B)`` on ``(A (x) B) (x) (A (x) B)``."""
    a, b = d.A.obj, d.B.obj
    return then(T(a, d.psi, b), T(d.A.mul, d.B.mul))


def build_cross_comul(d: CrossDatum) -> Mor:
    """``(A (x) phi (x) B)(Delta_A (x) Delta_B)``."""
    a, b = d.A.obj, d.B.obj
    return then(T(d.A.comul, d.B.comul), T(a, d.phi, b))


def cross_unit(d: CrossDatum) -> Mor:
    return T(d.A.unit, d.B.unit)


def cross_counit(d: CrossDatum) -> Mor:
    return T(d.A.counit, d.B.counit)


def cross_bundle(d: CrossDatum, antipode: Optional[Mor] = None) -> HopfBundle:
    """The object ``A (x) B`` with the twisted product and coproduct."""
    if antipode is None:
        antipode = d.antipode
    return HopfBundle(d.A.obj @ d.B.obj, build_cross_mul(d), cross_unit(d),
                      build_cross_comul(d), cross_counit(d), antipode)


# -- equation tables ------------------------------------------------------------
#
# Each entry maps a label to a function of keyword arguments naming the
# structure maps (A, B, mA, uA, dA, eA, mB, uB, dB, eB, psi, phi, lact, ract,
# lcoact, rcoact, S, s, SA, one) and returns the pair (lhs, rhs).
# Here u is a unit, e a counit, d a comultiplication and ``one`` the unit object.

Equation = Callable[..., tuple]

EQUATIONS: dict[str, Equation] = {}


def _equations(prefix: str, table: dict) -> None:
    for key, fn in table.items():
        EQUATIONS[prefix + key] = fn


_equations("crossprodalg.", {
    "a": lambda A, B, mB, psi, mA, **_: (
        then(T(mB, A), psi),
        then(T(B, psi), T(psi, B), T(A, mB))),
    "b": lambda A, B, mA, psi, **_: (
        then(T(B, mA), psi),
        then(T(psi, A), T(A, psi), T(mA, B))),
    "c": lambda B, uA, psi, **_: (
        then(T(B, uA), psi),
        T(uA, B)),
    "d": lambda A, uB, psi, **_: (
        then(T(uB, A), psi),
        T(A, uB)),
})

_equations("crossprodcoalg.", {
    "a": lambda A, B, dB, phi, **_: (
        then(phi, T(dB, A)),
        then(T(A, dB), T(phi, B), T(B, phi))),
    "b": lambda A, B, dA, phi, **_: (
        then(phi, T(B, dA)),
        then(T(dA, B), T(A, phi), T(phi, A))),
    "c": lambda B, eA, phi, **_: (
        then(phi, T(B, eA)),
        T(eA, B)),
    "d": lambda A, eB, phi, **_: (
        then(phi, T(eB, A)),
        T(A, eB)),
})

_equations("", {
    "counit_unit.A": lambda uA, eA, one, **_: (then(uA, eA), identity(one)),
    "counit_unit.B": lambda uB, eB, one, **_: (then(uB, eB), identity(one)),
})

_equations("crossbialgcond.", {
    "a": lambda A, B, mA, mB, dA, dB, psi, phi, **_: (
        then(T(A, psi, B), T(mA, mB), T(dA, dB), T(A, phi, B)),
        then(T(dA, dB, dA, dB),
             T(A, phi, B, A, phi, B),
             T(A, B, A, c(B, A), B, A, B),
             T(A, B, c(A, A), c(B, B), A, B),
             T(A, B, A, c(A, B), B, A, B),
             T(A, psi, B, A, psi, B),
             T(mA, mB, mA, mB))),
    "b": lambda A, B, uA, uB, dA, dB, phi, **_: (
        then(T(uA, uB), T(dA, dB), T(A, phi, B)),
        T(uA, uB, uA, uB)),
    "c": lambda A, B, mA, mB, eA, eB, psi, **_: (
        then(T(A, psi, B), T(mA, mB), T(eA, eB)),
        T(eA, eB, eA, eB)),
    "d": lambda uA, uB, eA, eB, one, **_: (
        then(T(uA, uB), T(eA, eB)),
        identity(one)),
})

_equations("comultunitcomp.", {
    "a": lambda uA, dA, **_: (then(uA, dA), T(uA, uA)),
    "b": lambda uB, dB, **_: (then(uB, dB), T(uB, uB)),
    "c": lambda uA, uB, phi, **_: (then(T(uA, uB), phi), T(uB, uA)),
})

_equations("multcounitcomp.", {
    "a": lambda mA, eA, **_: (then(mA, eA), T(eA, eA)),
    "b": lambda mB, eB, **_: (then(mB, eB), T(eB, eB)),
    "c": lambda eA, eB, psi, **_: (then(psi, T(eA, eB)), T(eB, eA)),
})

_equations("neccconds.", {
    "a": lambda A, B, mA, mB, dA, uB, psi, phi, **_: (
        then(mA, T(dA, uB), T(A, phi)),
        then(T(dA, uB, dA, uB),
             T(A, phi, A, phi),
             T(A, B, c(A, A), B, A),
             T(A, psi, c(A, B), A),
             T(mA, mB, mA))),
    "b": lambda A, B, mA, mB, dB, uA, psi, phi, **_: (
        then(mB, T(uA, dB), T(phi, B)),
        then(T(uA, dB, uA, dB),
             T(phi, B, phi, B),
             T(B, A, c(B, B), A, B),
             T(B, c(A, B), psi, B),
             T(mB, mA, mB))),
    "c": lambda A, B, mA, mB, uA, uB, phi, **_: (
        phi,
        then(T(A, uB, uA, B),
             T(phi, phi),
             T(B, c(A, B), A),
             T(mB, mA))),
    "d": lambda A, B, mA, mB, dA, dB, uA, uB, psi, phi, **_: (
        then(psi, T(dA, dB), T(A, phi, B)),
        then(T(uA, dB, dA, uB),
             T(phi, c(B, A), phi),
             T(B, c(A, A), c(B, B), A),
             T(psi, c(A, B), psi),
             T(A, mB, mA, B))),
    "e": lambda A, B, mA, dA, dB, eB, psi, phi, **_: (
        then(T(A, psi), T(mA, eB), dA),
        then(T(dA, dB, dA),
             T(A, phi, c(B, A), A),
             T(A, B, c(A, A), psi),
             T(A, psi, mA, eB),
             T(mA, eB, A))),
    "f": lambda A, B, mB, dA, dB, eA, psi, phi, **_: (
        then(T(psi, B), T(eA, mB), dB),
        then(T(dB, dA, dB),
             T(B, c(B, A), phi, B),
             T(psi, c(B, B), A, B),
             T(eA, mB, psi, B),
             T(B, eA, mB))),
    "g": lambda A, B, dA, dB, eA, eB, psi, **_: (
        psi,
        then(T(dB, dA),
             T(B, c(B, A), A),
             T(psi, psi),
             T(A, eB, eA, B))),
    "h": lambda A, B, mA, mB, dA, dB, eA, eB, psi, phi, **_: (
        then(T(A, psi, B), T(mA, mB), phi),
        then(T(A, dB, dA, B),
             T(phi, c(B, A), phi),
             T(B, c(A, A), c(B, B), A),
             T(psi, c(A, B), psi),
             T(eA, mB, mA, eB))),
})

_equations("BespDrabComp.", {
    "a": lambda A, B, mA, dA, uB, eB, psi, phi, **_: (
        then(mA, dA),
        then(T(dA, uB, dA),
             T(A, phi, A, A),
             T(A, B, c(A, A), A),
             T(A, psi, A, A),
             T(mA, eB, mA))),
    "b": lambda A, B, mB, dB, uA, eA, psi, phi, **_: (
        then(mB, dB),
        then(T(dB, uA, dB),
             T(B, B, phi, B),
             T(B, c(B, B), A, B),
             T(B, B, psi, B),
             T(mB, eA, mB))),
    "c": lambda A, B, mA, mB, dA, uB, eA, psi, phi, **_: (
        then(mA, T(A, uB), phi),
        then(T(A, uB, dA),
             T(phi, A, A, uB),
             T(B, c(A, A), phi),
             T(psi, c(A, B), A),
             T(eA, mB, mA))),
    "d": lambda A, B, mA, mB, dB, uA, eB, psi, phi, **_: (
        then(mB, T(uA, B), phi),
        then(T(uA, dB, uA, B),
             T(phi, B, phi),
             T(B, A, c(B, B), A),
             T(B, c(A, B), psi),
             T(mB, mA, eB))),
    "e": lambda A, B, mA, dA, dB, uA, eB, psi, phi, **_: (
        then(psi, T(A, eB), dA),
        then(T(uA, dB, dA),
             T(phi, c(B, A), A),
             T(B, c(A, A), psi),
             T(psi, A, A, eB),
             T(A, eB, mA))),
    "f": lambda A, B, mB, dA, dB, uB, eA, psi, phi, **_: (
        then(psi, T(eA, B), dB),
        then(T(dB, dA, uB),
             T(B, c(B, A), phi),
             T(psi, c(B, B), A),
             T(eA, B, B, psi),
             T(mB, eA, B))),
})

_equations("twoanothYDconds.", {
    "a": lambda A, B, mA, mB, dA, dB, uB, eA, psi, phi, **_: (
        then(T(A, psi), T(mA, B), T(A, dB), T(phi, B)),
        then(T(A, dB, dA, uB),
             T(phi, c(B, A), phi),
             T(B, c(A, A), c(B, B), A),
             T(psi, c(A, B), psi),
             T(eA, mB, mA, B))),
    "b": lambda A, B, mA, mB, dA, dB, uA, eB, psi, phi, **_: (
        then(T(psi, B), T(A, mB), T(dA, B), T(A, phi)),
        then(T(uA, dB, dA, B),
             T(phi, c(B, A), phi),
             T(B, c(A, A), c(B, B), A),
             T(psi, c(A, B), psi),
             T(A, mB, mA, eB))),
})

_equations("crossprodalg2.", {
    "a": lambda A, B, mB, eB, psi, **_: (
        then(T(mB, A), psi, T(A, eB)),
        then(T(B, psi), T(psi, eB), T(A, eB))),
    "b": lambda A, B, mB, eA, psi, **_: (
        then(T(mB, A), psi, T(eA, B)),
        then(T(B, psi), T(psi, B), T(eA, mB))),
    "c": lambda A, B, mA, eA, psi, **_: (
        then(T(B, mA), psi, T(eA, B)),
        then(T(psi, A), T(eA, psi), T(eA, B))),
    "d": lambda A, B, mA, eB, psi, **_: (
        then(T(B, mA), psi, T(A, eB)),
        then(T(psi, A), T(A, psi), T(mA, eB))),
})

_equations("crossprodcoalg2.", {
    "a": lambda A, B, dB, uA, phi, **_: (
        then(T(uA, B), phi, T(dB, A)),
        then(T(uA, dB), T(phi, B), T(B, phi))),
    "b": lambda A, B, dB, uB, phi, **_: (
        then(T(A, uB), phi, T(dB, A)),
        then(T(A, uB), T(phi, uB), T(B, phi))),
    "c": lambda A, B, dA, uA, phi, **_: (
        then(T(uA, B), phi, T(B, dA)),
        then(T(uA, B), T(uA, phi), T(phi, A))),
    "d": lambda A, B, dA, uB, phi, **_: (
        then(T(A, uB), phi, T(B, dA)),
        then(T(dA, uB), T(A, phi), T(phi, A))),
})

# The cross antipode S on A (x) B as a two-sided convolution inverse of the
# identity, spelled out through psi and phi, and the two identities obtained
# from it by composing with units and counits.
_equations("", {
    "defantcpHa.left": lambda A, B, mA, mB, dA, dB, uA, uB, eA, eB, psi, phi, S, **_: (
        then(T(dA, dB), T(A, phi, B), T(S, A, B), T(A, psi, B), T(mA, mB)),
        then(T(eA, eB), T(uA, uB))),
    "defantcpHa.right": lambda A, B, mA, mB, dA, dB, uA, uB, eA, eB, psi, phi, S, **_: (
        then(T(dA, dB), T(A, phi, B), T(A, B, S), T(A, psi, B), T(mA, mB)),
        then(T(eA, eB), T(uA, uB))),
    "deriveddefantcpHa.B": lambda A, B, mB, dB, uA, uB, eA, eB, psi, phi, S, **_: (
        then(T(uA, dB), T(uA, phi, B), T(S, A, B), T(eA, psi, B), T(eA, mB)),
        then(eB, uB)),
    "deriveddefantcpHa.A": lambda A, B, mA, dA, uA, uB, eA, eB, psi, phi, S, **_: (
        then(T(dA, uB), T(A, phi, uB), T(A, B, S), T(A, psi, eB), T(mA, eB)),
        then(eA, uA)),
})

# -- action/coaction characterization ---------------------------------------------

THM5 = "crossprobialasactandcoact"


def _psi_from_actions(A, B, dA, dB, lact, ract):
    return then(T(dB, dA), T(B, c(B, A), A), T(lact, ract))


def _phi_from_coactions(A, B, mA, mB, lcoact, rcoact):
    return then(T(lcoact, rcoact), T(B, c(A, B), A), T(mB, mA))


_equations(THM5 + ".", {
    # (i) units and counits of A and B
    "i.A.counit_unit": lambda uA, eA, one, **_: (then(uA, eA), identity(one)),
    "i.A.counit_mult": lambda mA, eA, **_: (then(mA, eA), T(eA, eA)),
    "i.A.comult_unit": lambda uA, dA, **_: (then(uA, dA), T(uA, uA)),
    "i.B.counit_unit": lambda uB, eB, one, **_: (then(uB, eB), identity(one)),
    "i.B.counit_mult": lambda mB, eB, **_: (then(mB, eB), T(eB, eB)),
    "i.B.comult_unit": lambda uB, dB, **_: (then(uB, dB), T(uB, uB)),
    # (ii) A is a left B-module
    "ii.assoc": lambda A, B, mB, lact, **_: (then(T(mB, A), lact), then(T(B, lact), lact)),
    "ii.unit": lambda A, uB, lact, **_: (then(T(uB, A), lact), identity(A)),
    "ii.unit_A": lambda B, uA, eB, lact, **_: (then(T(B, uA), lact), then(eB, uA)),
    "ii.counit": lambda eA, eB, lact, **_: (then(lact, eA), T(eB, eA)),
    # (iii) A is a left B-comodule
    "iii.coassoc": lambda A, B, dB, lcoact, **_: (then(lcoact, T(dB, A)), then(lcoact, T(B, lcoact))),
    "iii.counit": lambda A, eB, lcoact, **_: (then(lcoact, T(eB, A)), identity(A)),
    "iii.unit": lambda uA, uB, lcoact, **_: (then(uA, lcoact), T(uB, uA)),
    "iii.counit_A": lambda B, eA, uB, lcoact, **_: (then(lcoact, T(B, eA)), then(eA, uB)),
    # (iv) B is a right A-module
    "iv.assoc": lambda A, B, mA, ract, **_: (then(T(ract, A), ract), then(T(B, mA), ract)),
    "iv.unit": lambda B, uA, ract, **_: (then(T(B, uA), ract), identity(B)),
    "iv.unit_B": lambda A, uB, eA, ract, **_: (then(T(uB, A), ract), then(eA, uB)),
    "iv.counit": lambda eA, eB, ract, **_: (then(ract, eB), T(eB, eA)),
    # (v) B is a right A-comodule
    "v.coassoc": lambda A, B, dA, rcoact, **_: (then(rcoact, T(rcoact, A)), then(rcoact, T(B, dA))),
    "v.counit": lambda B, eA, rcoact, **_: (then(rcoact, T(B, eA)), identity(B)),
    "v.unit": lambda uA, uB, rcoact, **_: (then(uB, rcoact), T(uB, uA)),
    "v.counit_B": lambda A, eB, uA, rcoact, **_: (then(rcoact, T(eB, A)), then(eB, uA)),
    # (vi) the six compatibilities
    "vi.1": lambda A, B, mA, dA, dB, lact, ract, **_: (
        then(T(B, mA), lact),
        then(T(dB, dA, A), T(B, c(B, A), A, A), T(lact, ract, A), T(A, lact), mA)),
    "vi.2": lambda A, B, mA, mB, dA, lcoact, rcoact, **_: (
        then(lcoact, T(B, dA)),
        then(dA, T(lcoact, A), T(B, A, lcoact), T(B, A, rcoact, A), T(B, c(A, B), A, A),
             T(mB, mA, A))),
    "vi.3": lambda A, B, mA, dA, lact, lcoact, **_: (
        then(mA, dA),
        then(T(dA, dA), T(A, lcoact, A, A), T(A, B, c(A, A), A), T(A, lact, mA), T(mA, A))),
    "vi.4": lambda A, B, mB, dA, dB, lact, ract, **_: (
        then(T(mB, A), ract),
        then(T(B, dB, dA), T(B, B, c(B, A), A), T(B, lact, ract), T(ract, B), mB)),
    "vi.5": lambda A, B, mA, mB, dB, lcoact, rcoact, **_: (
        then(rcoact, T(dB, A)),
        then(dB, T(rcoact, rcoact), T(B, lcoact, B, A), T(B, B, c(A, B), A), T(B, mB, mA))),
    "vi.6": lambda A, B, mB, dB, ract, rcoact, **_: (
        then(mB, dB),
        then(T(dB, dB), T(B, B, rcoact, B), T(B, c(B, B), A, B), T(mB, ract, B), T(B, mB))),
})

_equations("", {
    "modulecomodule1": lambda A, B, mA, mB, dA, dB, lact, ract, lcoact, rcoact, **_: (
        then(T(dB, dA), T(B, c(B, A), A), T(lact, ract), T(dA, dB),
             T(A, lcoact, rcoact, B), T(A, B, c(A, B), A, B), T(A, mB, mA, B)),
        then(T(dB, dA),
             T(rcoact, c(B, A), lcoact),
             T(B, c(A, A), c(B, B), A),
             T(dB, A, c(A, B), B, dA),
             T(B, B, dA, B, A, dB, A, A),
             T(B, c(B, A), A, B, A, B, c(B, A), A),
             T(lact, ract, B, A, lact, ract),
             T(A, mB, mA, B))),
    "modulecomodule2": lambda A, B, mA, mB, dA, dB, lact, ract, lcoact, rcoact, **_: (
        then(T(A, dB, dA, B), T(A, B, c(B, A), A, B), T(A, lact, ract, B), T(mA, mB),
             T(lcoact, rcoact), T(B, c(A, B), A), T(mB, mA)),
        then(T(lcoact, dB, dA, rcoact),
             T(B, A, rcoact, B, A, lcoact, B, A),
             T(B, c(A, B), A, B, A, B, c(A, B), A),
             T(mB, mA, B, A, mB, mA),
             T(B, A, c(B, A), B, A),
             T(B, c(A, A), c(B, B), A),
             T(ract, c(A, B), lact),
             T(mB, mA))),
    "modulecomodule3": lambda A, B, mA, mB, dA, dB, lact, ract, lcoact, rcoact, **_: (
        then(T(A, dB, dA), T(A, B, c(B, A), A), T(A, lact, ract), T(mA, B), T(A, dB),
             T(lcoact, B, B), T(B, A, rcoact, B), T(B, c(A, B), A, B), T(mB, mA, B)),
        then(T(A, dB, dA),
             T(lcoact, B, B, A, A),
             T(B, A, rcoact, c(B, A), lcoact),
             T(B, c(A, B), A, A, c(B, B), A),
             T(mB, mA, A, B, B, A),
             T(B, A, A, B, dB, dA),
             T(B, c(A, A), B, B, c(B, A), A),
             T(ract, c(A, B), lact, ract),
             T(mB, mA, B))),
    "modulecomodule4": lambda A, B, mA, mB, dA, dB, lact, ract, lcoact, rcoact, **_: (
        then(T(dB, dA, B), T(B, c(B, A), A, B), T(lact, ract, B), T(A, mB), T(dA, B),
             T(A, A, rcoact), T(A, lcoact, B, A), T(A, B, c(A, B), A), T(A, mB, mA)),
        then(T(dB, dA, B),
             T(rcoact, c(B, A), lcoact, rcoact),
             T(B, c(A, A), B, B, c(A, B), A),
             T(B, A, A, B, mB, mA),
             T(dB, dA, A, B, B, A),
             T(B, c(B, A), A, A, c(B, B), A),
             T(lact, ract, c(A, B), lact),
             T(A, mB, mA))),
    "additional1.a": lambda A, B, mA, mB, dA, ract, lcoact, **_: (
        then(mA, lcoact),
        then(T(lcoact, dA), T(B, c(A, A), lcoact), T(ract, c(A, B), A), T(B, B, mA), T(mB, A))),
    "additional1.b": lambda A, B, mA, mB, dB, lact, rcoact, **_: (
        then(mB, rcoact),
        then(T(dB, rcoact), T(rcoact, B, B, A), T(B, A, c(B, B), A), T(B, c(A, B), lact),
             T(mB, A, A), T(B, mA))),
    "additional2.a": lambda A, B, mA, dA, dB, lact, rcoact, **_: (
        then(lact, dA),
        then(T(dB, dA), T(rcoact, B, A, A), T(B, A, c(B, A), A), T(B, c(A, A), lact),
             T(lact, A, A), T(A, mA))),
    "additional2.b": lambda A, B, mB, dA, dB, ract, lcoact, **_: (
        then(ract, dB),
        then(T(dB, dA), T(B, c(B, A), A), T(ract, B, lcoact), T(B, c(B, B), A), T(B, B, ract),
             T(mB, B))),
})

# -- smash cross (co)products ------------------------------------------------------

SMASH_PRODUCT = "strsmashcrossprodHa"
SMASH_COPRODUCT = "strsmashcrosscoprHa"

_equations(SMASH_PRODUCT + ".", {
    "1": EQUATIONS[THM5 + ".vi.2"],
    "2": EQUATIONS[THM5 + ".vi.3"],
    "3": lambda eA, eB, lact, **_: (then(lact, eA), T(eB, eA)),
    "4": EQUATIONS[THM5 + ".vi.5"],
    "5": EQUATIONS["additional2.a"],
    "6": lambda B, eA, uB, lcoact, **_: (then(lcoact, T(B, eA)), then(eA, uB)),
    "7": lambda A, B, mA, mB, dB, lact, rcoact, **_: (
        then(mB, rcoact),
        then(T(dB, rcoact), T(rcoact, B, B, A), T(B, A, c(B, B), A), T(B, A, B, lact),
             T(B, c(A, B), A), T(mB, mA))),
    "8": lambda A, B, mA, mB, dB, lact, lcoact, rcoact, **_: (
        then(T(dB, A), T(B, c(B, A)), T(lact, rcoact), T(lcoact, B, A), T(B, c(A, B), A),
             T(mB, mA)),
        then(T(dB, lcoact), T(rcoact, B, B, A), T(B, A, c(B, B), A), T(B, c(A, B), lact),
             T(mB, A, A), T(B, mA))),
})

_equations(SMASH_COPRODUCT + ".", {
    "1": EQUATIONS[THM5 + ".vi.1"],
    "2": EQUATIONS[THM5 + ".vi.3"],
    "3": lambda uA, uB, lcoact, **_: (then(uA, lcoact), T(uB, uA)),
    "4": EQUATIONS[THM5 + ".vi.4"],
    "5": EQUATIONS["additional1.a"],
    "6": lambda B, uA, eB, lact, **_: (then(T(B, uA), lact), then(eB, uA)),
    "7": lambda A, B, mB, dA, dB, ract, lcoact, **_: (
        then(ract, dB),
        then(T(dB, dA), T(B, B, A, lcoact), T(B, c(B, A), B, A), T(ract, c(B, B), A),
             T(B, B, ract), T(mB, B))),
    "8": lambda A, B, mB, dA, dB, lact, ract, lcoact, **_: (
        then(T(dB, dA), T(B, c(B, A), A), T(lact, ract), T(lcoact, B), T(B, c(A, B)), T(mB, A)),
        then(T(dB, dA), T(B, B, A, lcoact), T(B, c(B, A), B, A), T(ract, c(B, B), A),
             T(B, B, lact), T(mB, A))),
})

# -- label groups ----------------------------------------------------------------

def _labels(prefix: str, letters: str) -> list[str]:
    return [f"{prefix}.{x}" for x in letters]


CROSS_ALGEBRA = _labels("crossprodalg", "abcd")
CROSS_COALGEBRA = _labels("crossprodcoalg", "abcd")
UNIT_COUNIT = (["counit_unit.A", "counit_unit.B"] + _labels("comultunitcomp", "abc")
               + _labels("multcounitcomp", "abc"))
DIRECT = _labels("crossbialgcond", "abcd") + UNIT_COUNIT
NECCCONDS = _labels("neccconds", "abcdefgh")
BESPDRAB = _labels("BespDrabComp", "abcdef")
TWOANOTHYD = _labels("twoanothYDconds", "ab")
AUX_LISTS = {
    "crossprodalg2": _labels("crossprodalg2", "abcd"),
    "crossprodcoalg2": _labels("crossprodcoalg2", "abcd"),
}

#: Equation lists of the six equivalent characterizations of a cross product bialgebra.
CONDITION_SETS = {
    "ii": UNIT_COUNIT + _labels("neccconds", "abcd"),
    "iii": UNIT_COUNIT + _labels("neccconds", "efgh"),
    "iv": UNIT_COUNIT + _labels("neccconds", "cdg") + _labels("BespDrabComp", "abcd"),
    "v": UNIT_COUNIT + _labels("neccconds", "cgh") + _labels("BespDrabComp", "abef"),
    "vi": (UNIT_COUNIT + _labels("neccconds", "cg") + ["twoanothYDconds.a"]
           + _labels("BespDrabComp", "abde")),
    "vii": (UNIT_COUNIT + _labels("neccconds", "cg") + ["twoanothYDconds.b"]
            + _labels("BespDrabComp", "abcf")),
}

#: Names of the three compatibility families among the BespDrabComp identities.
BESPDRAB_GROUPS = {
    "BespDrabComp.a": "algebra-coalgebra",
    "BespDrabComp.b": "algebra-coalgebra",
    "BespDrabComp.c": "comodule-algebra",
    "BespDrabComp.d": "comodule-algebra",
    "BespDrabComp.e": "module-coalgebra",
    "BespDrabComp.f": "module-coalgebra",
}

THM5_BASE = [THM5 + "." + k for k in (
    "i.A.counit_unit", "i.A.counit_mult", "i.A.comult_unit",
    "i.B.counit_unit", "i.B.counit_mult", "i.B.comult_unit",
    "ii.assoc", "ii.unit", "ii.unit_A", "ii.counit",
    "iii.coassoc", "iii.counit", "iii.unit", "iii.counit_A",
    "iv.assoc", "iv.unit", "iv.unit_B", "iv.counit",
    "v.coassoc", "v.counit", "v.unit", "v.counit_B",
    "vi.1", "vi.2", "vi.3", "vi.4", "vi.5", "vi.6")]

THM5_VARIANTS = {
    "vii.1": ["modulecomodule1", "additional1.a", "additional1.b"],
    "vii.2": ["modulecomodule2", "additional2.a", "additional2.b"],
    "vii.3": ["modulecomodule3", "additional1.b", "additional2.a"],
    "vii.4": ["modulecomodule4", "additional1.a", "additional2.b"],
}

SMASH_LISTS = {
    "product": [f"{SMASH_PRODUCT}.{k}" for k in range(1, 9)],
    "coproduct": [f"{SMASH_COPRODUCT}.{k}" for k in range(1, 9)],
}

# -- evaluation --------------------------------------------------------------------


def _structure(A: HopfBundle, B: HopfBundle) -> dict:
    return dict(A=A.obj, B=B.obj, one=A.cat.unit,
                mA=A.mul, uA=A.unit, dA=A.comul, eA=A.counit,
                mB=B.mul, uB=B.unit, dB=B.comul, eB=B.counit)


def worker_count() -> int:
    """Worker cap from ``HOPFFORGE_THREADS``; one (sequential) when unset or invalid."""
    try:
        return max(1, int(os.environ.get("HOPFFORGE_THREADS", "1")))
    except ValueError:
        return 1


class EquationBook:
    """Evaluates labeled equations for one set of structure maps, with caching.

    The same book can serve several reports (for instance all condition
    sets of one datum), so each equation is evaluated at most once.
    """

    def __init__(self, maps: dict):
        self.maps = dict(maps)
        self._verdicts: dict = {}

    @classmethod
    def for_datum(cls, d: CrossDatum, antipode: Optional[Mor] = None) -> "EquationBook":
        maps = _structure(d.A, d.B)
        maps.update(psi=d.psi, phi=d.phi)
        maps.update(_derived_actions(d))
        if antipode is not None:
            maps["S"] = antipode
        return cls(maps)

    @classmethod
    def for_actions(cls, acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle) -> "EquationBook":
        maps = _structure(A, B)
        maps.update(lact=acts.lact, ract=acts.ract, lcoact=acts.lcoact, rcoact=acts.rcoact)
        return cls(maps)

    def sides(self, label: str) -> tuple[Mor, Mor]:
        return EQUATIONS[label](**self.maps)

    def entry(self, label: str):
        """``None`` when the equation holds, else ``(row, col, lhs, rhs)``."""
        if label not in self._verdicts:
            self._verdicts[label] = self._evaluate(label)
        return self._verdicts[label]

    def holds(self, label: str) -> bool:
        return self.entry(label) is None

    def prefetch(self, labels: Iterable[str]) -> None:
        """Evaluate the uncached ``labels`` on up to :func:`worker_count` threads."""
        todo = [label for label in dict.fromkeys(labels) if label not in self._verdicts]
        workers = min(worker_count(), len(todo))
        if workers <= 1:
            return
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(lambda label: self._evaluate(label), todo))
        self._verdicts.update(zip(todo, found))

    def _evaluate(self, label: str):
        lhs, rhs = self.sides(label)
        return lhs.first_difference(rhs)

    def report(self, labels: Iterable[str], notes: Optional[dict] = None) -> CheckReport:
        from .report import CheckEntry, Witness

        labels = list(labels)
        self.prefetch(labels)
        r = CheckReport()
        for label in labels:
            diff = self.entry(label)
            note = (notes or {}).get(label, "")
            witness = None if diff is None else Witness(*diff)
            r.add(CheckEntry(label, diff is None, witness, note))
        return r

    def all_hold(self, labels: Iterable[str]) -> bool:
        return all(self.holds(label) for label in labels)


def _derived_actions(d: CrossDatum) -> dict:
    a, b = d.A.obj, d.B.obj
    return dict(
        lact=then(d.psi, T(a, d.B.counit)),
        ract=then(d.psi, T(d.A.counit, b)),
        lcoact=then(T(a, d.B.unit), d.phi),
        rcoact=then(T(d.A.unit, b), d.phi),
    )


def _require_cross_product(book: EquationBook) -> None:
    for label in CROSS_ALGEBRA + CROSS_COALGEBRA:
        if not book.holds(label):
            raise PreconditionFailed(label, "not a cross product algebra-coalgebra datum")


# -- the two basic suites ------------------------------------------------------------

def check_cross_product_algebra(d: CrossDatum) -> CheckReport:
    """The four conditions making ``A (x) B`` with the twisted product an algebra."""
    return EquationBook.for_datum(d).report(CROSS_ALGEBRA)


def check_cross_product_coalgebra(d: CrossDatum) -> CheckReport:
    return EquationBook.for_datum(d).report(CROSS_COALGEBRA)


def is_cross_product_datum(d: CrossDatum) -> bool:
    return EquationBook.for_datum(d).all_hold(CROSS_ALGEBRA + CROSS_COALGEBRA)


# -- actions and coactions --------------------------------------------------------------

def _require(book: EquationBook, labels: Iterable[str], why: str) -> None:
    for label in labels:
        if not book.holds(label):
            raise PreconditionFailed(label, why)


def derive_actions(d: CrossDatum) -> ActionCoactionDatum:
    """Read off the four (co)actions from ``psi`` and ``phi`` and verify their axioms.

    ``A`` becomes a left ``B``-module and left ``B``-comodule, ``B`` a right
    ``A``-module and right ``A``-comodule.  Raises
    :class:`PreconditionFailed` naming the first violated law.
    """
    book = EquationBook.for_datum(d)
    _require_cross_product(book)
    _require(book, ["counit_unit.A", "counit_unit.B", "multcounitcomp.a", "multcounitcomp.b",
                    "comultunitcomp.a", "comultunitcomp.b"],
             "counits must be algebra maps and units coalgebra maps")
    m = book.maps
    acts = ActionCoactionDatum(m["lact"], m["ract"], m["lcoact"], m["rcoact"])
    axioms = EquationBook.for_actions(acts, d.A, d.B)
    names = {
        THM5 + ".ii.assoc": "action1.a.assoc", THM5 + ".ii.unit": "action1.a.unit",
        THM5 + ".iv.assoc": "action1.b.assoc", THM5 + ".iv.unit": "action1.b.unit",
        THM5 + ".iii.coassoc": "coaction1.a.coassoc", THM5 + ".iii.counit": "coaction1.a.counit",
        THM5 + ".v.coassoc": "coaction1.b.coassoc", THM5 + ".v.counit": "coaction1.b.counit",
    }
    for label, name in names.items():
        if not axioms.holds(label):
            raise PreconditionFailed(name, "derived (co)action violates its axiom")
    return acts


def reconstruct_psi_phi(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle) -> tuple[Mor, Mor]:
    """``psi`` and ``phi`` rebuilt from the four (co)actions."""
    a, b = A.obj, B.obj
    _shape(acts.lact, b @ a, a, "lact")
    psi = _psi_from_actions(a, b, A.comul, B.comul, acts.lact, acts.ract)
    phi = _phi_from_coactions(a, b, A.mul, B.mul, acts.lcoact, acts.rcoact)
    return psi, phi


def datum_from_actions(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle) -> CrossDatum:
    psi, phi = reconstruct_psi_phi(acts, A, B)
    return CrossDatum(A, B, psi, phi)


# -- bialgebra criteria ---------------------------------------------------------------

def check_bat_direct(d: CrossDatum, book: Optional[EquationBook] = None) -> CheckReport:
    """Multiplicativity of the twisted comultiplication and counit, plus unit/counit lists."""
    book = book or EquationBook.for_datum(d)
    _require_cross_product(book)
    return book.report(DIRECT)


def is_cross_bialgebra(d: CrossDatum) -> bool:
    """Whether ``A (x) B`` with the twisted structure satisfies every bialgebra axiom."""
    return bool(check_bialgebra(cross_bundle(d)))


def check_neccconds(d: CrossDatum, subset: str = "abcdefgh",
                    book: Optional[EquationBook] = None) -> CheckReport:
    book = book or EquationBook.for_datum(d)
    _require_cross_product(book)
    return book.report(_labels("neccconds", subset))


def check_bespdrab(d: CrossDatum, subset: str = "abcdef",
                   book: Optional[EquationBook] = None) -> CheckReport:
    """The six compatibilities, each annotated with its family name."""
    book = book or EquationBook.for_datum(d)
    _require_cross_product(book)
    return book.report(_labels("BespDrabComp", subset), notes=BESPDRAB_GROUPS)


def check_twoanothYD(d: CrossDatum, which: str = "ab",
                     book: Optional[EquationBook] = None) -> CheckReport:
    """Pre: a cross product datum on which ``neccconds.c`` and ``neccconds.g`` hold."""
    book = book or EquationBook.for_datum(d)
    _require_cross_product(book)
    _require(book, ["neccconds.c", "neccconds.g"], "psi and phi are not recovered from the (co)actions")
    return book.report(_labels("twoanothYDconds", which))


def check_condition_set(d: CrossDatum, name: str, book: Optional[EquationBook] = None) -> CheckReport:
    """Evaluate exactly the equation list of one characterization ``ii`` ... ``vii``."""
    if name not in CONDITION_SETS:
        raise ValueError(f"unknown condition set {name!r}; expected one of {sorted(CONDITION_SETS)}")
    book = book or EquationBook.for_datum(d)
    _require_cross_product(book)
    return book.report(CONDITION_SETS[name])


#: Hypotheses shared by the lemmas on the auxiliary lists.
AUX_HYPOTHESES = (["counit_unit.A", "counit_unit.B", "multcounitcomp.a", "multcounitcomp.b",
                   "comultunitcomp.a", "comultunitcomp.b"]
                  + _labels("crossprodalg", "cd") + _labels("crossprodcoalg", "cd"))


def check_aux_lists(d: CrossDatum, which: str, book: Optional[EquationBook] = None) -> CheckReport:
    if which not in AUX_LISTS:
        raise ValueError(f"unknown list {which!r}; expected one of {sorted(AUX_LISTS)}")
    book = book or EquationBook.for_datum(d)
    _require(book, AUX_HYPOTHESES, "hypothesis of the auxiliary-list lemmas")
    return book.report(AUX_LISTS[which])


def check_theorem5(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle, variant: str,
                   book: Optional[EquationBook] = None) -> CheckReport:
    """Clauses (i) to (vi) and the chosen three-equation variant of clause (vii)."""
    if variant not in THM5_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(THM5_VARIANTS)}")
    _has_maps(A, "A")
    _has_maps(B, "B")
    book = book or EquationBook.for_actions(acts, A, B)
    return book.report(THM5_BASE + THM5_VARIANTS[variant])


# -- antipode ----------------------------------------------------------------------------

def _is_two_sided_inverse(f: Mor, g: Mor, h: HopfBundle) -> bool:
    co, alg = h.coalgebra, h.algebra
    unit = convolution_unit(co, alg)
    return convolution(f, g, co, alg) == unit and convolution(g, f, co, alg) == unit


def cross_antipode_formula(d: CrossDatum, S_A: Mor, s_B: Mor) -> Mor:
    """``psi (s_B (x) S_A) phi``."""
    return then(d.phi, T(s_B, S_A), d.psi)


def cross_antipode_from_actions(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                                S_A: Mor, s_B: Mor) -> Mor:
    """The same antipode written entirely through the (co)actions."""
    a, b = A.obj, B.obj
    return then(T(acts.lcoact, acts.rcoact), T(b, c(a, b), a), T(B.mul, A.mul), T(s_B, S_A),
                T(B.comul, A.comul), T(b, c(b, a), a), T(acts.lact, acts.ract))


def check_cross_antipode(d: CrossDatum, S: Mor, S_A: Mor, s_B: Mor) -> CheckReport:
    """Antipode axioms on ``A (x) B`` plus the identities spelled through psi and phi."""
    r = check_antipode(cross_bundle(d, S))
    book = EquationBook.for_datum(d, antipode=S)
    r.extend(book.report(["defantcpHa.left", "defantcpHa.right",
                          "deriveddefantcpHa.B", "deriveddefantcpHa.A"]))
    m = book.maps
    acts = ActionCoactionDatum(m["lact"], m["ract"], m["lcoact"], m["rcoact"])
    r.equation(THM5 + ".antipode", cross_antipode_from_actions(acts, d.A, d.B, S_A, s_B), S)
    return r


def build_cross_antipode(d: CrossDatum, S_A: Mor, s_B: Mor) -> Mor:
    """The antipode ``psi (s_B (x) S_A) phi`` of a cross product Hopf algebra.

    Requires a cross product bialgebra and the two-sided convolution inverses
    of the identities of ``A`` and ``B``.  Raises :class:`CheckFailed` with
    the failing label if the result is not an antipode.
    """
    if not check_bat_direct(d):
        raise PreconditionFailed(check_bat_direct(d).first_failure.label, "not a cross product bialgebra")
    if not _is_two_sided_inverse(identity(d.A.obj), S_A, d.A):
        raise PreconditionFailed("braidedantipode.A", "S_A is not the convolution inverse of id_A")
    if not _is_two_sided_inverse(identity(d.B.obj), s_B, d.B):
        raise PreconditionFailed("braidedantipode.B", "s_B is not the convolution inverse of id_B")
    S = cross_antipode_formula(d, S_A, s_B)
    report = check_cross_antipode(d, S, S_A, s_B)
    if not report:
        raise CheckFailed(report.first_failure.label, "cross antipode verification failed")
    return S


def smash_product_antipode(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                           S_A: Mor, s_B: Mor) -> Mor:
    """Antipode of a smash cross product (right action trivial)."""
    a, b = A.obj, B.obj
    return then(T(acts.lcoact, acts.rcoact), T(b, c(a, b), a), T(B.mul, A.mul), T(s_B, S_A),
                T(B.comul, a), T(b, c(b, a)), T(acts.lact, b))


def smash_coproduct_antipode(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                             S_A: Mor, s_B: Mor) -> Mor:
    """Antipode of a smash cross coproduct (right coaction trivial)."""
    a, b = A.obj, B.obj
    return then(T(acts.lcoact, b), T(b, c(a, b)), T(B.mul, S_A), T(s_B, a), T(B.comul, A.comul),
                T(b, c(b, a), a), T(acts.lact, acts.ract))


def double_cross_coproduct_antipode(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                                    S_A: Mor, s_B: Mor) -> Mor:
    a, b = A.obj, B.obj
    return then(T(acts.lcoact, acts.rcoact), T(b, c(a, b), a), T(B.mul, A.mul), T(s_B, S_A), c(b, a))


def double_cross_product_antipode(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                                  S_A: Mor, s_B: Mor) -> Mor:
    a, b = A.obj, B.obj
    return then(c(a, b), T(s_B, S_A), T(B.comul, A.comul), T(b, c(b, a), a), T(acts.lact, acts.ract))


# -- normality and classification -----------------------------------------------------------

def normality(d: CrossDatum) -> dict[str, bool]:
    """Which of the four unit/counit collapse conditions ``psi`` and ``phi`` satisfy."""
    a, b = d.A.obj, d.B.obj
    eA, eB, uA, uB = d.A.counit, d.B.counit, d.A.unit, d.B.unit
    return {
        "psi_left_conormal": then(d.psi, T(eA, b)) == T(b, eA),
        "psi_right_conormal": then(d.psi, T(a, eB)) == T(eB, a),
        "phi_left_normal": then(T(uA, b), d.phi) == T(b, uA),
        "phi_right_normal": then(T(a, uB), d.phi) == T(uB, a),
    }


CLASSES = ("smash_left", "smash_right", "cosmash_left", "cosmash_right", "biproduct_left",
           "biproduct_right", "double_cross_coproduct", "double_cross_product", "plain")


def classify_normality(n: dict[str, bool]) -> frozenset:
    flags = set()
    if n["psi_left_conormal"]:
        flags.add("smash_left")
    if n["psi_right_conormal"]:
        flags.add("smash_right")
    if n["phi_left_normal"]:
        flags.add("cosmash_left")
    if n["phi_right_normal"]:
        flags.add("cosmash_right")
    if n["psi_left_conormal"] and n["phi_left_normal"]:
        flags.add("biproduct_left")
    if n["psi_right_conormal"] and n["phi_right_normal"]:
        flags.add("biproduct_right")
    if n["psi_left_conormal"] and n["psi_right_conormal"]:
        flags.add("double_cross_coproduct")
    if n["phi_left_normal"] and n["phi_right_normal"]:
        flags.add("double_cross_product")
    if not flags:
        flags.add("plain")
    return frozenset(flags)


def classify(d: CrossDatum) -> frozenset:
    """Smash, biproduct and double cross flags of a cross product bialgebra."""
    report = check_bat_direct(d)
    if not report:
        raise PreconditionFailed(report.first_failure.label, "not a cross product bialgebra")
    return classify_normality(normality(d))


def check_smash_detection(d: CrossDatum) -> dict[str, bool]:
    """Whether ``psi`` (``phi``) is the smash map of its own derived action (coaction)."""
    if not check_bialgebra(d.B):
        raise PreconditionFailed(check_bialgebra(d.B).first_failure.label, "B is not a bialgebra")
    book = EquationBook.for_datum(d)
    _require_cross_product(book)
    a, b = d.A.obj, d.B.obj
    m = book.maps
    smash_psi = then(T(d.B.comul, a), T(b, c(b, a)), T(m["lact"], b))
    smash_phi = then(T(m["lcoact"], b), T(b, c(a, b)), T(d.B.mul, a))
    return {"psi_smash": d.psi == smash_psi, "phi_smash": d.phi == smash_phi}


def _hypotheses_product(A: HopfBundle, B: HopfBundle, acts: ActionCoactionDatum) -> CheckReport:
    """``B`` a bialgebra, ``A`` a left ``B``-module algebra and comodule algebra, ``B`` a right ``A``-comodule."""
    a, b = A.obj, B.obj
    lact, lcoact = acts.lact, acts.lcoact
    r = CheckReport().extend(check_bialgebra(B), prefix="B.")
    book = EquationBook.for_actions(acts, A, B)
    r.extend(book.report([THM5 + ".ii.assoc", THM5 + ".ii.unit"]), prefix="")
    r.equation("module_algebra.mult", then(T(b, A.mul), lact),
               then(T(B.comul, a, a), T(b, c(b, a), a), T(lact, lact), A.mul))
    r.equation("module_algebra.unit", then(T(b, A.unit), lact), then(B.counit, A.unit))
    r.extend(book.report([THM5 + ".iii.coassoc", THM5 + ".iii.counit"]))
    r.equation("comodule_algebra.mult", then(A.mul, lcoact),
               then(T(lcoact, lcoact), T(b, c(a, b), a), T(B.mul, A.mul)))
    r.equation("comodule_algebra.unit", then(A.unit, lcoact), T(B.unit, A.unit))
    r.extend(book.report([THM5 + ".v.coassoc", THM5 + ".v.counit"]))
    return r


def _hypotheses_coproduct(A: HopfBundle, B: HopfBundle, acts: ActionCoactionDatum) -> CheckReport:
    """``B`` a bialgebra, ``A`` a left ``B``-comodule coalgebra and module coalgebra, ``B`` a right ``A``-module."""
    a, b = A.obj, B.obj
    lact, lcoact = acts.lact, acts.lcoact
    r = CheckReport().extend(check_bialgebra(B), prefix="B.")
    book = EquationBook.for_actions(acts, A, B)
    r.extend(book.report([THM5 + ".iii.coassoc", THM5 + ".iii.counit"]))
    r.equation("comodule_coalgebra.comult", then(lcoact, T(b, A.comul)),
               then(A.comul, T(lcoact, lcoact), T(b, c(a, b), a), T(B.mul, a, a)))
    r.equation("comodule_coalgebra.counit", then(lcoact, T(b, A.counit)), then(A.counit, B.unit))
    r.extend(book.report([THM5 + ".ii.assoc", THM5 + ".ii.unit"]))
    r.equation("module_coalgebra.comult", then(lact, A.comul),
               then(T(B.comul, A.comul), T(b, c(b, a), a), T(lact, lact)))
    r.equation("module_coalgebra.counit", then(lact, A.counit), T(B.counit, A.counit))
    r.extend(book.report([THM5 + ".iv.assoc", THM5 + ".iv.unit"]))
    return r


def check_smash_conditions(acts: ActionCoactionDatum, A: HopfBundle, B: HopfBundle,
                           side: str) -> CheckReport:
    """Hypotheses and the eight compatibilities characterizing smash cross (co)product bialgebras.

    ``side="product"`` requires the right action to be trivial (``psi`` left
    conormal); ``side="coproduct"`` requires the right coaction to be
    trivial (``phi`` left normal).
    """
    if side not in SMASH_LISTS:
        raise ValueError("side must be 'product' or 'coproduct'")
    _has_maps(A, "A")
    _has_maps(B, "B")
    triv = trivial_actions(A, B)
    if side == "product":
        if acts.ract != triv.ract:
            raise PreconditionFailed("normal.psi.left", "the right action is not trivial")
        r = _hypotheses_product(A, B, acts)
    else:
        if acts.rcoact != triv.rcoact:
            raise PreconditionFailed("normal.phi.left", "the right coaction is not trivial")
        r = _hypotheses_coproduct(A, B, acts)
    r.extend(EquationBook.for_actions(acts, A, B).report(SMASH_LISTS[side]))
    return r
