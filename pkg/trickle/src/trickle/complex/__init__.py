from trickle.specmat import LabeledMatrix

from .errors import ComplexError
from .faces import FaceClass, enumerate_faces, iter_face_levels
from .garland import GARLAND_TOLERANCE, garland_check, garland_suite
from .link import MIN_WALK_CODIM, FaceDistribution, LocalWalk, face_distribution, local_walk
from .profile import (
    GlobalGapBound,
    TrickleDownMargin,
    local_spectral_profile,
    local_to_global_gap,
    scalar_trickle_down,
    second_eigenvalue,
)
from .spectrum import WalkSpectrum, local_walk_spectrum

__all__ = [
    "GARLAND_TOLERANCE",
    "MIN_WALK_CODIM",
    "ComplexError",
    "FaceClass",
    "FaceDistribution",
    "GlobalGapBound",
    "LabeledMatrix",
    "LocalWalk",
    "TrickleDownMargin",
    "WalkSpectrum",
    "enumerate_faces",
    "face_distribution",
    "garland_check",
    "garland_suite",
    "iter_face_levels",
    "local_spectral_profile",
    "local_to_global_gap",
    "local_walk",
    "local_walk_spectrum",
    "scalar_trickle_down",
    "second_eigenvalue",
]
