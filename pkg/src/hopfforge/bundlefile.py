"""JSON structure bundles: reading and writing objects, morphisms and roles.

A bundle file looks like::

    {
      "format": "hopfforge-bundle/1",
      "kind": "cross",
      "field": "rational",
      "grading": {"orders": [2], "bicharacter": [["-1"]]},
      "objects": {"A": {"dims": [[[0], 1], [[1], 1]]}},
      "morphisms": {"mA": {"dom": ["A", "A"], "cod": ["A"], "entries": [[0, 0, "1"]]}},
      "roles": {"A": {"obj": "A", "mul": "mA", ...}, "psi": "psi", ...}
    }

Morphism entries are sparse ``[row, col, scalar]`` triples in the canonical
(degree-sorted) bases of the listed tensor words; scalars are decimal
strings ``"n"`` or ``"n/d"``, so round trips are exact.  Object and
morphism order in the file is irrelevant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ._exact import ExactMatrix
from .crossprod import ActionCoactionDatum, CrossDatum
from .errors import BundleFormatError, HopfForgeError, NonHomogeneous
from .field import FieldSpec
from .gvec import GVec, Mor, Obj
from .projection import ProjectionDatum
from .structures import HopfBundle

FORMAT = "hopfforge-bundle/1"
KINDS = ("hopf", "cross", "projection", "inputs")
BUNDLE_MAPS = ("mul", "unit", "comul", "counit", "antipode")
FLAGS = ("algebra", "coalgebra", "bialgebra", "hopf")


# -- reading ------------------------------------------------------------------------


def _need(doc: dict, key: str, path: str, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise BundleFormatError(f"{path}.{key}" if path else key, "missing")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise BundleFormatError(f"{path}.{key}" if path else key, f"expected {kind.__name__}")
    return value


@dataclass
class Bundle:
    """A parsed bundle file: category, named objects and morphisms, roles."""

    kind: str
    cat: GVec
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    roles: dict = field(default_factory=dict)
    declares: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def field(self) -> FieldSpec:
        return self.cat.field

    def mor(self, name, path: str) -> Mor:
        if not isinstance(name, str) or name not in self.morphisms:
            raise BundleFormatError(path, f"unknown morphism {name!r}")
        return self.morphisms[name]

    def hopf(self, role: str) -> HopfBundle:
        spec = _need(self.roles, role, "roles", dict)
        path = f"roles.{role}"
        obj = _need(spec, "obj", path)
        if isinstance(obj, list):
            obj = _parse_word(self.cat, self.objects, obj, f"{path}.obj")
        elif obj in self.objects:
            obj = self.objects[obj]
        else:
            raise BundleFormatError(f"{path}.obj", f"unknown object {obj!r}")
        maps = {k: self.mor(spec[k], f"{path}.{k}") for k in BUNDLE_MAPS if spec.get(k) is not None}
        try:
            return HopfBundle(obj, **maps)
        except HopfForgeError as exc:
            raise BundleFormatError(path, str(exc)) from None

    def role_declares(self, role: str) -> list:
        return list(self.roles.get(role, {}).get("declares", []))

    def hopf_roles(self) -> list[str]:
        return [k for k, v in self.roles.items() if isinstance(v, dict) and "obj" in v]

    def cross(self) -> CrossDatum:
        self._expect_kind("cross")
        A, B = self.hopf("A"), self.hopf("B")
        psi = self.mor(_need(self.roles, "psi", "roles"), "roles.psi")
        phi = self.mor(_need(self.roles, "phi", "roles"), "roles.phi")
        antipode = self.roles.get("antipode")
        S = None if antipode is None else self.mor(antipode, "roles.antipode")
        try:
            return CrossDatum(A, B, psi, phi, S)
        except HopfForgeError as exc:
            raise BundleFormatError("roles", str(exc)) from None

    def projection(self) -> ProjectionDatum:
        self._expect_kind("projection")
        H, B = self.hopf("H"), self.hopf("B")
        i = self.mor(_need(self.roles, "i", "roles"), "roles.i")
        pi = self.mor(_need(self.roles, "pi", "roles"), "roles.pi")
        direction = self.roles.get("direction", "equalizer")
        try:
            return ProjectionDatum(H, B, i, pi, direction)
        except (HopfForgeError, ValueError) as exc:
            raise BundleFormatError("roles", str(exc)) from None

    def optional_mor(self, role: str) -> Optional[Mor]:
        name = self.roles.get(role)
        return None if name is None else self.mor(name, f"roles.{role}")

    def _expect_kind(self, kind: str) -> None:
        if self.kind != kind:
            raise BundleFormatError("kind", f"expected a {kind!r} bundle, found {self.kind!r}")


def _parse_category(doc: dict, field_override: Optional[FieldSpec]) -> GVec:
    try:
        fs = field_override or FieldSpec.parse(_need(doc, "field", "", str))
    except ValueError as exc:
        raise BundleFormatError("field", str(exc)) from None
    grading = doc.get("grading", {"orders": [], "bicharacter": []})
    orders = _need(grading, "orders", "grading", list)
    table = grading.get("bicharacter")
    try:
        if table is not None:
            table = [[fs.parse_scalar(str(v)) for v in row] for row in table]
        return GVec(fs, orders, table or None)
    except (HopfForgeError, ValueError) as exc:
        raise BundleFormatError("grading", str(exc)) from None


def _parse_word(cat: GVec, objects: dict, names, path: str) -> Obj:
    if not isinstance(names, list):
        raise BundleFormatError(path, "expected a list of object names")
    word = cat.unit
    for k, name in enumerate(names):
        if name not in objects:
            raise BundleFormatError(f"{path}[{k}]", f"unknown object {name!r}")
        word = word @ objects[name]
    return word


def parse_bundle(doc: dict, field_override: Optional[FieldSpec] = None) -> Bundle:
    if not isinstance(doc, dict):
        raise BundleFormatError("", "a bundle must be a JSON object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise BundleFormatError("format", f"unsupported format {fmt!r}")
    kind = _need(doc, "kind", "", str)
    if kind not in KINDS:
        raise BundleFormatError("kind", f"unknown kind {kind!r}; expected one of {list(KINDS)}")
    cat = _parse_category(doc, field_override)
    fs = cat.field
    objects = {}
    for name, spec in _need(doc, "objects", "", dict).items():
        path = f"objects.{name}"
        dims = _need(spec, "dims", path, list)
        table = {}
        try:
            for k, (deg, dim) in enumerate(dims):
                table[tuple(deg)] = table.get(tuple(deg), 0) + int(dim)
            objects[name] = cat.atom({cat.group.normalize(d): n for d, n in table.items()})
        except (TypeError, ValueError) as exc:
            raise BundleFormatError(f"{path}.dims", str(exc)) from None
    morphisms = {}
    for name, spec in _need(doc, "morphisms", "", dict).items():
        path = f"morphisms.{name}"
        dom = _parse_word(cat, objects, _need(spec, "dom", path), f"{path}.dom")
        cod = _parse_word(cat, objects, _need(spec, "cod", path), f"{path}.cod")
        entries = []
        for k, item in enumerate(_need(spec, "entries", path, list)):
            try:
                r, col, v = item
                r, col = int(r), int(col)
                if not (0 <= r < cod.dim and 0 <= col < dom.dim):
                    raise ValueError(f"entry ({r}, {col}) outside a {cod.dim} x {dom.dim} matrix")
                entries.append((r, col, fs.parse_scalar(str(v))))
            except (TypeError, ValueError, HopfForgeError) as exc:
                raise BundleFormatError(f"{path}.entries[{k}]", str(exc)) from None
        try:
            morphisms[name] = Mor(dom, cod, ExactMatrix.from_entries(fs, cod.dim, dom.dim, entries))
        except NonHomogeneous as exc:
            raise BundleFormatError(f"{path}.entries", f"non-homogeneous entry ({exc.row}, {exc.col}): {exc}") from None
        except HopfForgeError as exc:
            raise BundleFormatError(path, str(exc)) from None
    roles = _need(doc, "roles", "", dict)
    declares = doc.get("declares", [])
    bundle = Bundle(kind, cat, objects, morphisms, roles, list(declares),
                    {k: v for k, v in doc.items() if k in ("group", "notes")})
    for role in bundle.hopf_roles():
        for flag in bundle.role_declares(role):
            if flag not in FLAGS:
                raise BundleFormatError(f"roles.{role}.declares", f"unknown flag {flag!r}")
        bundle.hopf(role)
    return bundle


def load_bundle(path, field_override: Optional[FieldSpec] = None) -> Bundle:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BundleFormatError(str(path), f"cannot read: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleFormatError(str(path), f"invalid JSON: {exc}") from None
    return parse_bundle(doc, field_override)


# -- writing -------------------------------------------------------------------------------


class BundleWriter:
    """Accumulates named objects and morphisms for one category."""

    def __init__(self, cat: GVec, kind: str):
        self.cat = cat
        self.kind = kind
        self.objects: dict = {}
        self._atom_names: dict = {}
        self.morphisms: dict = {}
        self.roles: dict = {}
        self.declares: list = []
        self.extra: dict = {}

    def name_object(self, name: str, obj: Obj):
        """Register ``obj`` under ``name`` (atoms) and return its file spelling."""
        if len(obj.factors) == 1 and name not in self.objects:
            self.objects[name] = obj
            self._atom_names.setdefault(obj.factors[0], name)
            return name
        return self._word(obj)

    def _word(self, obj: Obj) -> list:
        names = []
        for factor in obj.factors:
            if factor not in self._atom_names:
                auto = f"X{len(self.objects)}"
                self.objects[auto] = self.cat._word((factor,))
                self._atom_names[factor] = auto
            names.append(self._atom_names[factor])
        return names

    def add_mor(self, name: str, f: Mor) -> str:
        base, k = name, 1
        while name in self.morphisms and self.morphisms[name] is not f:
            k += 1
            name = f"{base}{k}"
        self.morphisms[name] = f
        return name

    def add_hopf(self, role: str, h: HopfBundle, declares=()) -> dict:
        spec = {"obj": self.name_object(role, h.obj)}
        suffix = role
        for key, short in (("mul", "m"), ("unit", "u"), ("comul", "d"), ("counit", "e"), ("antipode", "S")):
            f = getattr(h, key)
            if f is not None:
                spec[key] = self.add_mor(f"{short}{suffix}", f)
        if declares:
            spec["declares"] = list(declares)
        self.roles[role] = spec
        return spec

    def add_role_mor(self, role: str, f: Mor) -> None:
        self.roles[role] = self.add_mor(role, f)

    def to_json(self) -> dict:
        fs = self.cat.field
        group = self.cat.group
        morphisms = {}
        for name, f in self.morphisms.items():
            entries = sorted((r, c, fs.format_scalar(v)) for r, c, v in f.matrix.entries())
            morphisms[name] = {"dom": self._word(f.dom), "cod": self._word(f.cod),
                               "entries": [list(e) for e in entries]}
        objects = {}
        for name, obj in self.objects.items():
            (factor,) = obj.factors
            objects[name] = {"dims": [[list(group.decode(code)), dim] for code, dim in factor]}
        doc = {
            "format": FORMAT,
            "kind": self.kind,
            "field": str(fs),
            "grading": {"orders": list(group.orders),
                        "bicharacter": [[fs.format_scalar(v) for v in row] for row in self.cat.chi.table]},
            "objects": objects,
            "morphisms": morphisms,
            "roles": self.roles,
        }
        if self.declares:
            doc["declares"] = list(self.declares)
        doc.update(self.extra)
        return doc


def _hopf_declares(h: HopfBundle) -> list:
    return [f for f in FLAGS if f in h.flags]


def hopf_document(h: HopfBundle, declares=None, extra=None) -> dict:
    w = BundleWriter(h.cat, "hopf")
    w.add_hopf("H", h, _hopf_declares(h) if declares is None else declares)
    w.extra.update(extra or {})
    return w.to_json()


def cross_document(d: CrossDatum, declares=(), extra=None) -> dict:
    w = BundleWriter(d.cat, "cross")
    w.add_hopf("A", d.A, _hopf_declares(d.A))
    w.add_hopf("B", d.B, _hopf_declares(d.B))
    w.add_role_mor("psi", d.psi)
    w.add_role_mor("phi", d.phi)
    if d.antipode is not None:
        w.add_role_mor("antipode", d.antipode)
    w.declares = list(declares)
    w.extra.update(extra or {})
    return w.to_json()


def projection_document(pd: ProjectionDatum, extra=None) -> dict:
    w = BundleWriter(pd.H.cat, "projection")
    w.add_hopf("H", pd.H, _hopf_declares(pd.H))
    w.add_hopf("B", pd.B, _hopf_declares(pd.B))
    w.add_role_mor("i", pd.i)
    w.add_role_mor("pi", pd.pi)
    w.roles["direction"] = pd.direction
    w.extra.update(extra or {})
    return w.to_json()


def inputs_document(A: HopfBundle, B: HopfBundle, acts: dict) -> dict:
    """Builder inputs: two bundles and any of ``lact``, ``ract``, ``lcoact``, ``rcoact``."""
    w = BundleWriter(A.cat, "inputs")
    w.add_hopf("A", A, _hopf_declares(A))
    w.add_hopf("B", B, _hopf_declares(B))
    for role, f in acts.items():
        if f is not None:
            w.add_role_mor(role, f)
    return w.to_json()


def write_bundle(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")
