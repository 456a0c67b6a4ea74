# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python module: every exposed operation runs and
returns sane values on a desk-scale scenario."""
import math

import rissim

SMALL = """
P = 4
Q = 5
M_x = 12
M_z = 12
n_L = 6
draws = 8
"""


def small_scenario():
    return rissim.Scenario.from_text(SMALL)


def test_defaults_and_partition():
    sc = rissim.Scenario()
    assert sc.wavelength == 0.0625
    assert sc.uav_antennas == 30
    assert sc.vehicle_antennas == 40
    assert sc.ris_elements == (50, 50)
    assert abs(rissim.fraunhofer_distance(sc) - 150.0625) < 1e-9
    assert rissim.max_subarray_side(sc, sc.time) == 5
    summary = rissim.partition_summary(sc, sc.time)
    assert summary["side"] == 5
    assert summary["num_x"] == 10 and summary["num_z"] == 10
    assert summary["count"] == 100
    assert summary["uav_distance_m"] > 0.0


def test_scenario_parsing_and_validation():
    sc = small_scenario()
    assert sc.uav_antennas == 4 and sc.vehicle_antennas == 5
    assert sc.ris_elements == (12, 12)
    try:
        rissim.Scenario.from_text("P = -1\n")
    except rissim.ConfigError as err:
        assert "P" in str(err)
    else:
        raise AssertionError("expected ConfigError for P = -1")
    sc.forced_max_side = 3
    sc.validate()
    assert rissim.max_subarray_side(sc, 0.0) == 3


def test_channel_matrices():
    sc = small_scenario()
    for model in rissim.model_names():
        h = rissim.channel_matrix(sc, sc.time, model=model, draw=0)
        assert h.shape == (5, 4)
        assert all(math.isfinite(abs(v)) for row in h.tolist() for v in row)
    again = rissim.channel_matrix(sc, sc.time, model="subarray", draw=0)
    first = rissim.channel_matrix(sc, sc.time, model="subarray", draw=0)
    assert (again == first).all()
    ris, nlos = rissim.component_matrices(sc, sc.time, model="subarray", draw=0)
    assert ris.shape == (5, 4) and nlos.shape == (5, 4)


def test_statistics():
    sc = small_scenario()
    value, se = rissim.spatial_temporal_correlation(
        sc, "subarray", (1, 1), (1, 1), sc.time, 0.0, draws=4)
    assert value == 1.0 + 0.0j
    assert se == 0.0
    acf = rissim.temporal_acf(sc, "beam", (1, 1), sc.time, [0.0, 0.002, 0.01], draws=8)
    assert len(acf) == 3
    assert abs(acf[0] - 1.0) < 1e-12
    assert all(v <= 1.0 + 1e-9 for v in acf)
    rho0 = rissim.frequency_cf(sc, (1, 1), sc.time, 0.0)
    assert abs(rho0 - 1.0) < 1e-12
    assert abs(rissim.frequency_cf(sc, (1, 1), sc.time, 1e6)) <= 1.0 + 1e-9


def test_capacity_and_error():
    sc = small_scenario()
    h = rissim.channel_matrix(sc, sc.time, model="planar")
    c = rissim.capacity(h, 10.0, sc.uav_antennas)
    assert c > 0.0 and math.isfinite(c)
    assert rissim.capacity(h, 0.0, sc.uav_antennas) == 0.0
    mean_c = rissim.mean_capacity(sc, "subarray", sc.time, 10.0, draws=4)
    assert mean_c > 0.0 and math.isfinite(mean_c)
    assert rissim.modeling_error_db(h, h) == -math.inf
    spherical = rissim.channel_matrix(sc, sc.time, model="spherical")
    assert math.isfinite(rissim.modeling_error_db(h, spherical))


def test_preset_names():
    names = rissim.preset_names()
    assert names == ["fig%d" % i for i in range(3, 12)]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print("PASS %s" % test.__name__)
    print("%d python smoke tests passed" % len(tests))


if __name__ == "__main__":
    main()
