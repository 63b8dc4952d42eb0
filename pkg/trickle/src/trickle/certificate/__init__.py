from .a_matrix import (
    AForm,
    ExpectationCheck,
    XiDecomposition,
    a_expectation,
    a_matrix,
    a_matrix_recursive,
    a_norm_bound,
    aggregate_bound,
    aggregate_cap,
    expectation_factor,
    expected_child_a,
    xi_decomposition,
    xi_sum_identity,
)
from .assemble import certificate_matrix, clear_cache, component_faces, product_assembly
from .b_matrix import b_matrix, b_value
from .base_case import base_case_matrix, pair_walk
from .blocks import CertificateKind, CertificateMatrices, ColorBlock, blockwise_leq
from .errors import CertificateError, ScheduleError
from .extensions import ChildGroup, child_groups
from .mtd import FlatLink, face_mtd_check, mtd_flat_check
from .schedule import MIN_SCHEDULE_BETA, CertificateSchedule, build_schedule
from .verify import (
    InductiveCheck,
    SpectralConclusion,
    normalized_certificate,
    spectral_conclusion,
    theorem_bounds,
    verify_all,
    verify_base,
    verify_inductive,
)

__all__ = [
    "MIN_SCHEDULE_BETA",
    "AForm",
    "CertificateError",
    "CertificateKind",
    "CertificateMatrices",
    "CertificateSchedule",
    "ChildGroup",
    "ColorBlock",
    "ExpectationCheck",
    "FlatLink",
    "InductiveCheck",
    "ScheduleError",
    "SpectralConclusion",
    "XiDecomposition",
    "a_expectation",
    "a_matrix",
    "a_matrix_recursive",
    "a_norm_bound",
    "aggregate_bound",
    "aggregate_cap",
    "b_matrix",
    "b_value",
    "base_case_matrix",
    "blockwise_leq",
    "build_schedule",
    "certificate_matrix",
    "child_groups",
    "clear_cache",
    "component_faces",
    "expectation_factor",
    "expected_child_a",
    "face_mtd_check",
    "mtd_flat_check",
    "normalized_certificate",
    "pair_walk",
    "product_assembly",
    "spectral_conclusion",
    "theorem_bounds",
    "verify_all",
    "verify_base",
    "verify_inductive",
    "xi_decomposition",
    "xi_sum_identity",
]
