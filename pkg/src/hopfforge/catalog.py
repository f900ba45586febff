"""The fixture corpus: named cross product data used by tests and shipped as JSON."""

from __future__ import annotations

from functools import lru_cache

from . import constructors as C
from .crossprod import CrossDatum
from .field import FieldSpec
from .gvec import GVec
from .projection import ProjectionDatum, projection_from_datum

Q = FieldSpec.rational()
F101 = FieldSpec.prime(101)


@lru_cache(maxsize=None)
def sweedler(field: FieldSpec = Q) -> CrossDatum:
    si = C.sweedler_inputs(field)
    return C.build_biproduct(si.B, si.A, si.lact, si.lcoact)


@lru_cache(maxsize=None)
def double(group: str, field: FieldSpec = Q) -> CrossDatum:
    g = {"Z3": C.GroupDatum.cyclic(3), "S3": C.GroupDatum.symmetric(3), "Z2": C.GroupDatum.cyclic(2)}[group]
    return C.drinfeld_double(g, field)


@lru_cache(maxsize=None)
def tensor_groups(field: FieldSpec = Q) -> CrossDatum:
    """``kZ2 (x) k^{Z3}``: tensor bialgebra of two group-type Hopf algebras."""
    cat = GVec.trivial(field)
    return C.build_tensor_bialgebra(C.group_algebra(C.GroupDatum.cyclic(2), cat),
                                    C.function_algebra(C.GroupDatum.cyclic(3), cat))


@lru_cache(maxsize=None)
def super_line_z2(field: FieldSpec = Q) -> CrossDatum:
    """Super line tensor ``kZ2`` in super vector spaces."""
    line = C.super_line(field)
    return C.build_tensor_bialgebra(line, C.group_algebra(C.GroupDatum.cyclic(2), line.cat))


def corpus(field: FieldSpec = Q, include_s3: bool = True) -> dict[str, CrossDatum]:
    out = {
        "tensor_kZ2_kZ3dual": tensor_groups(field),
        "sweedler_h4": sweedler(field),
        "drinfeld_Z3": double("Z3", field),
        "super_line_kZ2": super_line_z2(field),
    }
    if include_s3:
        out["drinfeld_S3"] = double("S3", field)
    return out


def projection(name: str, field: FieldSpec = Q) -> ProjectionDatum:
    return projection_from_datum(corpus(field, include_s3=(name == "drinfeld_S3"))[name])
