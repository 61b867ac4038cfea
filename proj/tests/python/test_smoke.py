import cmath
import math

import pytest

import lfock


def test_params():
    p = lfock.QuantParams(0.5)
    assert p.c == pytest.approx(1.0)
    assert p.hbar == pytest.approx(0.5)
    assert lfock.QuantParams.from_alpha_scale(p.alpha_scale).epsilon == pytest.approx(0.5)
    with pytest.raises(Exception):
        lfock.QuantParams(1.0)


def test_special_functions():
    assert lfock.eval_poly("laguerre", 1, 2.0) == pytest.approx(-1.0)
    assert lfock.eval_poly("hermite", 2, 0.0) == pytest.approx(-2.0)
    assert abs(lfock.bessel_i(0.0, 2.0) - 2.2795853023360673) < 1e-14
    assert lfock.asym_coeff(2) == pytest.approx(9 / 128)
    nodes, weights = lfock.gauss_rule("laguerre", 2)
    assert sum(w * x**3 for x, w in zip(nodes, weights)) == pytest.approx(6.0)


def test_kernels_and_norms():
    assert lfock.monomial_norm(0.5, 1) == pytest.approx(0.25)
    assert lfock.laguerre_kernel(0.5, 0, 0) == pytest.approx(2.0)
    eps = 0.4
    assert lfock.legendre_kernel(eps, 1, 1)["value"].real == pytest.approx((1 + eps) / (2 * (1 - eps) ** 2))
    h = lfock.hermite_kernel(0.6, 0.0, 0.0)["value"].real
    assert h == pytest.approx(1 / math.sqrt(1 - 0.36) / math.sqrt(math.pi))
    z, w = 1 + 0.5j, 0.3 - 1j
    assert abs(lfock.fock_kernel(0.5, z, w) - lfock.fock_kernel(0.5, w, z).conjugate()) < 1e-12


def test_toeplitz_and_squeeze():
    T = lfock.toeplitz_matrix(0.7, [1.0], "laguerre", 5)
    for n in range(5):
        assert abs(T[n, n] - 0.7**n) < 1e-13
    assert lfock.squeeze_check(0.25, 0, 80)["deviation"] < 1e-8


def test_berezin():
    assert abs(lfock.berezin(0.5, {(0, 0): 1.0}, 1 + 1j) - 1) < 1e-10
    assert abs(lfock.berezin(0.5, {(1, 1): 1.0}, 0) - 0.5) < 1e-10
    z = 0.3 - 0.7j
    assert abs(lfock.berezin(0.6, {(2, 0): 1.0}, z) - z * z) < 1e-10
    assert lfock.q_operator(1) == "4 |z|^1 d db"


def test_classify():
    assert lfock.classify("hermite", "power:-0.5")["rkhs"] is False
    v = lfock.classify("laguerre", "geometric:0.5")
    assert v["rkhs"] is True and v["entire_extension"] is True


def test_verify_suite():
    ids = [s[0] for s in lfock.suites()]
    assert "fock" in ids and "berezin-slopes" in ids
    rows = lfock.verify("norms")
    assert rows and all(r["pass"] for r in rows)
    rows = lfock.verify("fock", eps=[0.5], order=0.0)
    assert any(abs(r["computed"] - math.pi / 2) < 1e-7 for r in rows)
    with pytest.raises(ValueError):
        lfock.verify("no-such-suite")
