"""Helicoidal surfaces in Lorentz-Minkowski 3-space: exact curvature and classification."""

from .catalog import CATALOG, SURFACES, CatalogEntry, check_catalog
from .classify import ClassificationReport, Status, Theorem, verify_theorem
from .minkowski import AxisKind, CausalCharacter, MinkVec3, lorentz_cross, minkowski_dot, motion
from .numeric import DegenerateMetric, eval_surface, numeric_curvatures, numeric_frame, weingarten
from .surface import (
    CircleLightlikeAxis,
    CircleSpacelikeAxis,
    CircleTimelikeAxis,
    HelicoidalSpec,
    HorizontalLine,
    PolyGraph,
    VerticalLine,
    curvature_bundle,
)
from .symbolic import ParamPoly, SymExpr

__all__ = [
    "AxisKind", "CATALOG", "CatalogEntry", "CausalCharacter", "CircleLightlikeAxis",
    "CircleSpacelikeAxis", "CircleTimelikeAxis", "ClassificationReport", "DegenerateMetric",
    "HelicoidalSpec", "HorizontalLine", "MinkVec3", "ParamPoly", "PolyGraph", "SURFACES",
    "Status", "SymExpr", "Theorem", "VerticalLine", "check_catalog", "curvature_bundle",
    "eval_surface", "lorentz_cross", "minkowski_dot", "motion", "numeric_curvatures",
    "numeric_frame", "verify_theorem", "weingarten",
]
