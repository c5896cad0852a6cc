"""Sweeps of point configurations, sweep oriented matroids and their relatives."""

from .signvec import GroundSet, Pair, Point, SignVector
from .orientedmatroid import CovectorSet, OrientedMatroid, verify_covector_axioms
from .sweep import OrderedPartition, SweepOrientedMatroid
from .pointconfig import PointConfiguration, VectorConfiguration

__all__ = [
    "CovectorSet", "GroundSet", "OrderedPartition", "OrientedMatroid", "Pair", "Point",
    "PointConfiguration", "SignVector", "SweepOrientedMatroid", "VectorConfiguration",
    "verify_covector_axioms",
]
