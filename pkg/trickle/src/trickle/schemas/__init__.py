from .instance_file import InstanceDocument, UniformLists
from .reports import (
    ChainSummary,
    ConstraintReport,
    FaceVerification,
    GarlandReport,
    GarlandSuiteReport,
    InstanceSummary,
    JointSearchReport,
    LemmaFamilyReport,
    LemmaSuiteReport,
    LoewnerReport,
    MarginalEstimate,
    MinPRow,
    MixingReport,
    MtdReport,
    RuntimeInfo,
    ScheduleReport,
    SimulationReport,
    ThresholdRow,
    VerificationReport,
)

__all__ = [
    "ChainSummary",
    "ConstraintReport",
    "FaceVerification",
    "GarlandReport",
    "GarlandSuiteReport",
    "InstanceDocument",
    "InstanceSummary",
    "JointSearchReport",
    "LemmaFamilyReport",
    "LemmaSuiteReport",
    "LoewnerReport",
    "MarginalEstimate",
    "MinPRow",
    "MixingReport",
    "MtdReport",
    "RuntimeInfo",
    "ScheduleReport",
    "SimulationReport",
    "ThresholdRow",
    "UniformLists",
    "VerificationReport",
]
