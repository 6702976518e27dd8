import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from sbe_backend.schemas import (
    BranchPoint,
    BranchSummary,
    ConeReport,
    DenseOutput,
    DerivativeVanishes,
    GammaBar,
    OscillateSummary,
    OscillationReport,
    PcSummary,
    PlotSummary,
    ProblemParams,
    RadialState,
    RegularityVerdict,
    RunConfig,
    ShotSummary,
    SpectrumSummary,
    Trajectory,
    UPrimeVanished,
    WPoint,
)
from sbe_backend.utils import load_defaults
from sbe_backend.utils.errors import DomainError, NumericalError, StiffnessError

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "schemas" / "v1"

PUBLISHED = {
    "pc": PcSummary,
    "spectrum": SpectrumSummary,
    "shoot": ShotSummary,
    "branch": BranchSummary,
    "oscillate": OscillateSummary,
    "verdict": RegularityVerdict,
    "plot": PlotSummary,
}


@pytest.mark.parametrize("command, model", sorted(PUBLISHED.items()))
def test_published_schema_matches_model(command, model):
    schema = json.loads((SCHEMA_DIR / f"{command}.schema.json").read_text(encoding="utf-8"))
    assert schema["title"] == model.__name__
    assert set(schema["properties"]) == set(model.model_fields)
    required = {name for name, info in model.model_fields.items() if info.is_required()}
    assert set(schema["required"]) == required


class TestProblemParams:
    def test_supercritical_only(self):
        with pytest.raises(ValidationError):
            ProblemParams(n=5, p=9)
        with pytest.raises(ValidationError):
            ProblemParams(n=4, p=10)
        assert ProblemParams(n=5, p=9.0001).a == pytest.approx(4 / 8.0001)

    def test_frozen(self):
        params = ProblemParams(n=5, p=10)
        with pytest.raises(ValidationError):
            params.p = 11


def test_value_types_reject_bad_entries():
    with pytest.raises(DomainError):
        RadialState(-1.0, 1.0, 0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        RadialState(1.0, float("nan"), 0.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        WPoint(0.0, float("inf"), 0.0, 0.0, 0.0)


def test_trajectory_invariants():
    states = [RadialState(0.1, 1.0, 0.0, -1.0, 0.0), RadialState(0.2, 0.99, -0.1, -1.0, 0.0)]
    Trajectory(states=states, terminal_event=UPrimeVanished(r=0.2))
    with pytest.raises(DomainError):
        Trajectory(states=states[::-1], terminal_event=UPrimeVanished(r=0.1))
    with pytest.raises(DomainError):
        Trajectory(states=states, terminal_event=UPrimeVanished(r=0.3))


def test_empty_dense_output():
    dense = DenseOutput.empty(4)
    assert len(dense) == 0
    assert not dense.covers(0.0)
    with pytest.raises(DomainError):
        dense(0.0)


def test_shot_class_bounds():
    with pytest.raises(ValidationError):
        DerivativeVanishes(R_gamma=1.0, U_at_R=1.5)
    assert DerivativeVanishes(R_gamma=2.0, U_at_R=0.5).tag == "DerivativeVanishes"


def test_gamma_bar_bracket():
    gb = GammaBar(lo=-2.0, hi=-1.0, value=-1.5)
    assert gb.width == 1.0
    assert gb.rel_width == pytest.approx(2 / 3)
    with pytest.raises(ValidationError):
        GammaBar(lo=-1.0, hi=-2.0, value=-1.5)


def test_branch_point_consistency():
    pt = BranchPoint(gamma=-1.0, R_gamma=2.0, U_at_R=0.25, lam=3.0, u0=3.0, offset=1e-3)
    assert pt.to_row() == (-1.0, 2.0, 0.25, 3.0, 3.0)
    assert pt.to_dict()["lambda"] == 3.0
    with pytest.raises(DomainError):
        BranchPoint(gamma=-1.0, R_gamma=2.0, U_at_R=0.25, lam=3.0, u0=2.0)


def test_report_validators():
    with pytest.raises(ValidationError):
        OscillationReport(sign_changes=2, crossing_radii=[1.0], final_ratio=1.0, reliable_r_max=5.0, closest_ratio=1.0)
    with pytest.raises(ValidationError):
        OscillationReport(sign_changes=2, crossing_radii=[2.0, 1.0], final_ratio=1.0, reliable_r_max=5.0, closest_ratio=1.0)
    with pytest.raises(ValidationError):
        ConeReport(direction="+", s_span=5.0, pattern_held=True, measured_growth_rate=None)
    assert ConeReport(direction="-", s_span=5.0, pattern_held=False).measured_growth_rate is None


class TestRunConfig:
    def test_required_fields_per_command(self):
        with pytest.raises(ValidationError):
            RunConfig(command="shoot", n=5, p=10)
        with pytest.raises(ValidationError):
            RunConfig(command="spectrum", n=5)
        with pytest.raises(ValidationError):
            RunConfig(command="plot", input="x.csv")
        assert RunConfig(command="pc", n=13).p is None

    def test_numeric_ranges(self):
        with pytest.raises(ValidationError):
            RunConfig(command="branch", n=5, p=10, epsilons=[1e-3])
        with pytest.raises(ValidationError):
            RunConfig(command="branch", n=5, p=10, offsets=[-1e-2])
        with pytest.raises(ValidationError):
            RunConfig(command="shoot", n=5, p=10, gamma=1.0)


def test_defaults_from_repository_yaml():
    d = load_defaults()
    assert d.tol == 1e-12
    assert d.r0 == 1e-4
    assert d.offsets == "1e-2..1e-8"
    assert d.epsilons == [1e-6, 1e-7, 1e-8]
    assert d.profile_points == 512


def test_defaults_from_custom_file(tmp_path):
    path = tmp_path / "defaults.yaml"
    path.write_text("tol: 1.0e-10\nworkers: 3\n", encoding="utf-8")
    d = load_defaults(path)
    assert d.tol == 1e-10
    assert d.workers == 3
    assert d.r_max == 1e3
    assert load_defaults(tmp_path / "missing.yaml").tol == 1e-12


def test_numerical_error_payload():
    err = StiffnessError("step size underflow", {"t": 1.5, "h": np.float64(1e-16)})
    assert isinstance(err, NumericalError)
    payload = err.to_dict()
    assert payload["error"] == "StiffnessError"
    assert payload["message"] == "step size underflow"
    assert payload["t"] == 1.5
