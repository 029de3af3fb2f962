import cmath
import json

import pytest

import uniformize as u


def test_theta_at_i():
    t3 = u.theta3(1j)
    # theta3(i) = pi^(1/4)/Gamma(3/4)
    assert abs(t3 - 1.0864348112133080146) < 1e-14
    assert abs(u.klein_j(1j) - 1) < 1e-14


def test_jacobi_quartic():
    tau = 0.1 + 1.2j
    assert abs(u.theta3(tau) ** 4 - u.theta2(tau) ** 4 - u.theta4(tau) ** 4) < 1e-13


def test_domain_error():
    with pytest.raises(ValueError):
        u.theta3(-1j)


def test_inversion_round_trip():
    a = 0.3 + 0.2j
    r = u.invert_chi(a)
    assert r["marker"] == ""
    assert abs(u.chi_b(r["tau0"]) - a) < 1e-9
    assert u.invert_chi(1)["tau0"] is None


def test_quintic():
    s = u.quintic_solve(0.01)
    assert len(s["roots"]) == 5
    for x in s["roots"]:
        assert abs(x**5 - x + 0.01) < 1e-10


def test_suite_and_registry():
    rows = u.run_suite("curves", samples=5, seed=3)
    assert rows and all(r["pass"] for r in rows)
    assert len(u.curve_ids()) >= 12


def test_polygon_and_cli():
    p = u.polygon(2)
    assert len(p["arcs"]) == 10 and len(p["cycles"]) == 6
    status, out, err = u.run_cli(["eval", "j", "--tau", "0,1"])
    assert status == 0
    assert json.loads(out)["schema"] == 1
    assert u.run_cli(["nope"])[0] == 2


def test_discriminant():
    assert u.discriminant("y^2 - x^5 + x") == "x^5 - x"
