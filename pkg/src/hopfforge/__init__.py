"""Exact construction and verification of cross product Hopf algebras in graded vector spaces."""

from .field import FieldSpec
from .gvec import GVec, Mor, Obj, braiding, identity, tensor, then
from .structures import AlgebraData, CoalgebraData, HopfBundle
from .crossprod import ActionCoactionDatum, CrossDatum
from .projection import ProjectionDatum
from .report import CheckReport

__all__ = [
    "FieldSpec", "GVec", "Mor", "Obj", "braiding", "identity", "tensor", "then",
    "AlgebraData", "CoalgebraData", "HopfBundle", "ActionCoactionDatum", "CrossDatum",
    "ProjectionDatum", "CheckReport",
]
