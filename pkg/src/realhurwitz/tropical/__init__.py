"""Tropical side: cover model, signed pair templates, sweep enumeration, export."""
from .covers import (
    BLUE, LEFT, RED, RIGHT, Edge, RealStructure, TropicalCover, ValidationReport,
    mult_enhanced, validate_cover,
)
from .enumerate import CoverClass, enumerate_enhanced_covers, real_hurwitz_tropical

__all__ = [
    "BLUE", "LEFT", "RED", "RIGHT", "Edge", "RealStructure", "TropicalCover", "ValidationReport",
    "mult_enhanced", "validate_cover", "CoverClass", "enumerate_enhanced_covers", "real_hurwitz_tropical",
]
