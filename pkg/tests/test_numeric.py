import math

import numpy as np
import pytest

from susy_pt import ModelParams
from susy_pt.numeric import (
    TridiagonalOperator,
    delta_eigenvalues_fd,
    discretize_delta,
    eigenvalues_lowest,
    interior_grid,
    log_gamma,
    quadrature,
    sturm_count,
)


class TestLogGamma:
    def test_known_values(self):
        assert log_gamma(1.0) == 0.0
        assert log_gamma(2.0) == 0.0
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)
        # Gamma(2.5) = (3/4) sqrt(pi)
        assert log_gamma(2.5) == pytest.approx(math.log(0.75 * math.sqrt(math.pi)), abs=1e-14)

    def test_against_stdlib_reference(self):
        zs = np.concatenate(
            [np.geomspace(1e-9, 0.5, 3000), np.linspace(0.5, 30.0, 6000), np.geomspace(30.0, 1e4, 4000)]
        )
        worst = max(
            abs(log_gamma(float(z)) - math.lgamma(float(z))) / max(1.0, abs(math.lgamma(float(z))))
            for z in zs
        )
        assert worst <= 1e-13

    def test_recurrence_consistency(self):
        # ln Gamma(z+1) = ln Gamma(z) + ln z
        for z in (0.1, 0.9, 3.3, 17.0, 123.456):
            assert log_gamma(z + 1.0) == pytest.approx(log_gamma(z) + math.log(z), rel=1e-13, abs=1e-13)

    @pytest.mark.parametrize("z", [0.0, -1.0, -0.5])
    def test_rejects_nonpositive(self, z):
        with pytest.raises(ValueError):
            log_gamma(z)


class TestQuadrature:
    def test_monomial(self):
        assert quadrature(lambda x: x**2, 0.0, 1.0, panels=4) == pytest.approx(1.0 / 3.0, abs=1e-15)

    def test_odd_integrand_vanishes(self):
        p = ModelParams(1.0, 1.0, 2.0)
        d = p.half_width
        val = quadrature(lambda x: x**3 * np.cos(x), -d, d, panels=32)
        assert abs(val) <= 1e-14

    @pytest.mark.parametrize("k,m", [(2.0, 0), (1.25, 4), (3.7, 32), (10.0, 22)])
    def test_envelope_moments(self, k, m):
        # int over D of cos^2k(wx) sin^2m(wx) dx
        #   = Gamma(k+1/2) Gamma(m+1/2) / (w Gamma(k+m+1))
        w = 2.0
        d = math.pi / (2.0 * w)
        exact = math.exp(math.lgamma(k + 0.5) + math.lgamma(m + 0.5) - math.lgamma(k + m + 1.0)) / w
        got = quadrature(
            lambda x: np.cos(w * x) ** (2.0 * k) * np.sin(w * x) ** (2 * m),
            -d,
            d,
            panels=48 + 2 * m,
        )
        assert abs(got - exact) <= 1e-12

    def test_rejects_bad_panels(self):
        with pytest.raises(ValueError):
            quadrature(lambda x: x, 0.0, 1.0, panels=0)


class TestGridAndOperator:
    def test_grid_layout(self):
        p = ModelParams(1.0, 1.0, 2.0)
        g = interior_grid(p, 31)
        d = p.half_width
        assert g.spacing == pytest.approx(2.0 * d / 32.0, rel=1e-15)
        assert g.points[0] == pytest.approx(-d + g.spacing, rel=1e-15)
        assert -d < g.points[0] and g.points[-1] < d
        assert np.allclose(np.diff(g.points), g.spacing, rtol=1e-12)

    def test_discretize_shape_and_symmetry(self):
        p = ModelParams(1.0, 1.0, 2.0)
        op = discretize_delta(p, "minus", 64)
        assert op.size == 64 and op.offdiag.shape == (63,)
        scale = 1.0 / (p.hat_omega * interior_grid(p, 64).spacing) ** 2
        assert np.allclose(op.offdiag, -scale, rtol=1e-15)
        # even potential on a symmetric grid
        assert np.allclose(op.diag, op.diag[::-1], rtol=1e-13)

    def test_discretize_rejects_small_grid(self):
        p = ModelParams(1.0, 1.0, 2.0)
        with pytest.raises(ValueError):
            discretize_delta(p, "minus", 15)
        with pytest.raises(ValueError):
            discretize_delta(p, "nonsense", 64)


class TestEigenvaluesLowest:
    def test_two_by_two_exact(self):
        op = TridiagonalOperator(np.array([2.0, 2.0]), np.array([-1.0]))
        # bisection bracket width 1e-10*(1+|lam|) bounds the midpoint error
        assert eigenvalues_lowest(op, 2) == pytest.approx([1.0, 3.0], abs=5e-10)

    def test_free_laplacian_exact_discrete_eigenvalues(self):
        # with V = 0 the discrete eigenvalues are known in closed form:
        # 4/(wh)^2 sin^2(j pi / (2(N+1)))
        p = ModelParams(1.0, 2.0, 2.0)
        n = 256
        op = discretize_delta(p, "zero", n)
        got = eigenvalues_lowest(op, 6)
        wh = p.hat_omega * interior_grid(p, n).spacing
        for j, lam in enumerate(got, start=1):
            exact = 4.0 / wh**2 * math.sin(j * math.pi / (2.0 * (n + 1))) ** 2
            assert abs(lam - exact) <= 2e-10 * (1.0 + exact)
            # and the continuum limit j^2 to discretization accuracy
            assert lam == pytest.approx(j * j, rel=5e-4)

    def test_pt_spectrum_cross_check(self):
        # eigenvalues of the discretized operator approach n(n+2k)
        for k in (1.5, 3.7):
            p = ModelParams(1.0, 1.0, k)
            got = eigenvalues_lowest(discretize_delta(p, "minus", 1024), 4)
            for n, lam in enumerate(got):
                exact = n * (n + 2.0 * k)
                assert abs(lam - exact) <= 1e-3 * (1.0 + exact)

    def test_lowest_minus_eigenvalue_tends_to_zero(self):
        p = ModelParams(1.0, 1.0, 2.0)
        lows = [
            eigenvalues_lowest(discretize_delta(p, "minus", n), 1)[0] for n in (128, 256, 512)
        ]
        assert all(abs(b) < abs(a) for a, b in zip(lows, lows[1:]))
        assert abs(lows[-1]) < 5e-5

    def test_sturm_count_matches_returned(self):
        p = ModelParams(1.0, 1.0, 2.0)
        op = discretize_delta(p, "minus", 256)
        lams = eigenvalues_lowest(op, 5)
        for probe in (-1.0, 2.5, 5.5, 20.0, 33.0):
            below = sum(1 for lam in lams if lam < probe)
            if below < 5:  # inside the computed range
                assert sturm_count(op, probe) == below

    def test_interlacing_and_partner_shift(self):
        # plus-potential eigenvalues interlace the minus ones and match
        # them shifted by one index
        # interlacing holds up to the discretization error of the
        # near-degenerate pair lam_plus[j] ~ lam_minus[j+1]
        p = ModelParams(1.0, 1.0, 2.0)
        minus = eigenvalues_lowest(discretize_delta(p, "minus", 1024), 5)
        plus = eigenvalues_lowest(discretize_delta(p, "plus", 1024), 4)
        for j, lam in enumerate(plus):
            gap = 1e-3 * (1.0 + minus[j + 1])
            assert minus[j] < lam < minus[j + 1] + gap
            assert abs(lam - minus[j + 1]) <= gap

    def test_second_order_convergence(self):
        # halving h divides the error of each of the lowest 4 levels by ~4
        p = ModelParams(1.0, 1.0, 2.0)
        errs = {}
        for n in (512, 1024):
            lams = eigenvalues_lowest(discretize_delta(p, "minus", n), 4)
            errs[n] = [abs(lam - j * (j + 4.0)) for j, lam in enumerate(lams)]
        for e_coarse, e_fine in zip(errs[512], errs[1024]):
            assert 3.6 <= e_coarse / e_fine <= 4.4

    def test_richardson_sharpens(self):
        p = ModelParams(1.0, 1.0, 2.0)
        plain = delta_eigenvalues_fd(p, "minus", 4, 1024)
        rich = delta_eigenvalues_fd(p, "minus", 4, 1024, richardson=True)
        for n, (a, b) in enumerate(zip(plain, rich)):
            exact = n * (n + 4.0)
            assert abs(b - exact) <= 1e-6 * (1.0 + exact)
            assert abs(b - exact) < abs(a - exact) or a == b

    def test_count_validation(self):
        op = TridiagonalOperator(np.array([2.0, 2.0]), np.array([-1.0]))
        with pytest.raises(ValueError):
            eigenvalues_lowest(op, 0)
        with pytest.raises(ValueError):
            eigenvalues_lowest(op, 3)
