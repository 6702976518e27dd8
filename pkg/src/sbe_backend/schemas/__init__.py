"""Schemas module for the supercritical biharmonic toolkit."""

from .branches import (
    Branch,
    BranchPoint,
    DerivativeVanishes,
    DirichletProfile,
    GammaBar,
    HitsZero,
    ShotClass,
    Undetermined,
)
from .params import ProblemParams, Regime, RegimeTag
from .reports import ConeReport, OscillationReport, PointwiseBoundReport, RegularityVerdict
from .spectra import Nu2Eigenvector, SpectrumData, WPoint, ZPoint
from .summaries import (
    BranchSummary,
    OscillateSummary,
    PcSummary,
    PlotSummary,
    RunConfig,
    ShotSummary,
    SpectrumSummary,
)
from .trajectories import (
    BlowUp,
    DenseOutput,
    EventHit,
    Orbit,
    RadialState,
    ReachedRMax,
    TerminalEvent,
    Trajectory,
    UCrossedZero,
    UPrimeVanished,
)

__all__ = [
    "ProblemParams",
    "Regime",
    "RegimeTag",
    "SpectrumData",
    "WPoint",
    "ZPoint",
    "Nu2Eigenvector",
    "RadialState",
    "TerminalEvent",
    "ReachedRMax",
    "UCrossedZero",
    "UPrimeVanished",
    "BlowUp",
    "DenseOutput",
    "EventHit",
    "Trajectory",
    "Orbit",
    "ShotClass",
    "HitsZero",
    "DerivativeVanishes",
    "Undetermined",
    "GammaBar",
    "BranchPoint",
    "Branch",
    "DirichletProfile",
    "ConeReport",
    "OscillationReport",
    "RegularityVerdict",
    "PointwiseBoundReport",
    "RunConfig",
    "PcSummary",
    "SpectrumSummary",
    "ShotSummary",
    "BranchSummary",
    "OscillateSummary",
    "PlotSummary",
]
