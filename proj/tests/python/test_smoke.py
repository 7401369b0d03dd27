import pytest

import dcsit

GAMMA = [[1.0, 0.8], [0.8, 1.0]]
ALPHA = [[[0.5, 0.5], [0.5, 0.5]], [[0.0, 0.0], [0.0, 0.0]]]

CONFIG = {
    "gamma": GAMMA,
    "alpha": ALPHA,
    "schemes": ["apzf", "naive_zf"],
    "snr_db": [30, 40, 50, 60],
    "draws": 50,
    "seed": 2,
}


def test_closed_forms():
    assert dcsit.distributed_gdof(GAMMA, ALPHA)["value"] == 1.7
    assert dcsit.genie_outer_bound(GAMMA, ALPHA)["value"] == 1.7
    zero = [[[0.0] * 2] * 2] * 2
    assert dcsit.distributed_gdof(GAMMA, zero)["value"] == 1.2
    assert dcsit.centralized_gdof([[1, 1], [1, 1]], [[1, 1], [1, 1]])["value"] == 2.0


def test_layout():
    layout = dcsit.scheme_layout(GAMMA, ALPHA)
    assert layout["parallel"]
    assert layout["rho"] == pytest.approx(0.7)
    assert layout["layers"]["z1"]["rate"] == 0.0
    assert layout["total_rate"] == pytest.approx(1.7)


def test_invalid_instance_raises():
    with pytest.raises(dcsit.ValidationError):
        dcsit.distributed_gdof(GAMMA, [[[0.9, 0.5], [0.5, 0.5]], [[0.0, 0.9], [0.0, 0.0]]])


def test_sweep_is_deterministic():
    a = dcsit.sweep(CONFIG)
    b = dcsit.sweep(CONFIG, workers=3)
    assert a["csv"] == b["csv"]
    assert a["csv"].startswith("snr_db,scheme,sum_rate_mean,sum_rate_stderr\n")
    assert a["summary"]["gdof_closed_form"]["distributed"] == 1.7
    assert a["curves"]["apzf"]["slope"] is not None
    mean, stderr = dcsit.simulate_point(CONFIG, "apzf", 40)
    assert mean == a["curves"]["apzf"]["points"][1][1]
    assert stderr > 0


def test_bad_config():
    with pytest.raises(dcsit.ConfigError):
        dcsit.sweep("{ nope")
    with pytest.raises(ValueError):
        dcsit.simulate_point(CONFIG, "dpc", 40)


def test_validate_and_fits():
    names = {name: ok for name, ok, _ in dcsit.validate(CONFIG)}
    assert all(names.values())
    assert dcsit.fit_exponent([(1e4, 1e4 ** 0.4), (1e8, 1e8 ** 0.4)]) == pytest.approx(0.4)
    assert dcsit.estimate_slope([(40, 10.0), (60, 10.0)]) == 0.0
