import pytest

from sesqc.grover import GroverPlan
from sesqc.resources import compare_resources, coupler_count
from sesqc.schedule import compile_grover_schedule
from sesqc.units import mhz_to_rad_ns

G = mhz_to_rad_ns(1.25)
DEPS = mhz_to_rad_ns(100)


def test_paper_constants():
    report = compare_resources(GroverPlan(256, 17, G, DEPS))
    gb = report.gate_based
    assert (gb.cnots_per_oracle, gb.cnots_per_inversion, gb.cnots_per_step) == (85, 73, 158)
    assert gb.total_cnots == 1896 == gb.iterations * gb.cnots_per_step
    assert (gb.input_qubits, gb.output_qubits, gb.ancillas, gb.total_qubits) == (8, 1, 7, 16)
    assert report.ses.couplers == 32640
    assert report.ses.qubits == 256


def test_runtime_matches_schedule():
    plan = GroverPlan(256, 17, G, DEPS)
    assert compare_resources(plan).ses.runtime_ns == compile_grover_schedule(plan).total_duration


def test_other_sizes_have_no_gate_model():
    report = compare_resources(GroverPlan(5, 1, G, DEPS))
    assert report.ses.couplers == 10
    assert report.gate_based is None
    assert "unavailable" in report.to_table()
    assert report.to_dict()["gate_based"] is None


@pytest.mark.parametrize("n", [1, 2, 3, 10, 256])
def test_coupler_count(n):
    assert coupler_count(n) == sum(1 for i in range(n) for j in range(i + 1, n))


def test_renderings():
    report = compare_resources(GroverPlan(256, 1, G, DEPS))
    table = report.to_table()
    for value in ("85", "73", "158", "1896", "32640", "nearly 2000"):
        assert value in table
    assert report.to_dict()["gate_based"]["total_qubits"] == 16
