import math

import numpy as np
import pytest

from nfedof import (ArrayConfig, CapacityParams, LinkGeometry, build_channel,
                    column_inner_product, column_orthogonality_range,
                    eigen_spectrum, equal_eigen_capacity, high_snr_capacity,
                    msmd, spectral_edof)


class TestEigenSpectrum:
    def test_matches_svd_oracle(self, lam29, rng):
        tx = ArrayConfig(6, lam29 / 2)
        rx = ArrayConfig(9, lam29 / 2)
        ch = build_channel(LinkGeometry(0.4), tx, rx, lam29)
        spec = eigen_spectrum(ch)
        s = np.linalg.svd(ch.entries, compute_uv=False)
        np.testing.assert_allclose(spec.eigenvalues, np.sort(s**2)[::-1],
                                   rtol=1e-12)
        assert spec.source_dims == (6, 9)

    def test_trace_equals_element_product(self, lam29):
        tx = ArrayConfig(11, lam29 / 2)
        rx = ArrayConfig(7, lam29 / 2)
        ch = build_channel(LinkGeometry(1.1, 0.3, -0.2), tx, rx, lam29)
        spec = eigen_spectrum(ch)
        assert spec.trace == pytest.approx(11 * 7, rel=1e-12)
        assert np.sum(spec.eigenvalues) == pytest.approx(spec.trace, rel=1e-12)

    def test_descending_order(self, lam29):
        ch = build_channel(LinkGeometry(0.2), ArrayConfig(8, lam29 / 2),
                           ArrayConfig(8, lam29 / 2), lam29)
        eig = eigen_spectrum(ch).eigenvalues
        assert np.all(np.diff(eig) <= 1e-12)


class TestSpectralEdof:
    def test_threshold_counting(self):
        from nfedof.spectral import EigenSpectrum
        spec = EigenSpectrum(np.array([4.0, 2.1, 2.0, 0.5]), 8.6, (4, 4))
        assert spectral_edof(spec) == 3  # ties at the threshold count in
        assert spectral_edof(spec, threshold_fraction=0.1) == 4

    @pytest.mark.parametrize("n,delta", [(4, 1), (4, 2), (4, 3),
                                         (8, 1), (8, 2), (8, 3)])
    def test_flat_spectrum_at_saturation_range(self, lam29, n, delta):
        # at the saturation range the quadratic-phase columns are exactly
        # orthogonal, so every eigenvalue equals the column norm
        d = delta * lam29 / 2
        tx = ArrayConfig(n, d)
        rx = ArrayConfig(n, d)
        r = msmd(tx.aperture, rx.aperture, lam29, n)
        ch = build_channel(LinkGeometry(r), tx, rx, lam29,
                           phase_model="fresnel")
        spec = eigen_spectrum(ch)
        assert spectral_edof(spec) == n
        assert spec.eigenvalues[0] / spec.eigenvalues[-1] < 1.05


class TestCapacity:
    @pytest.mark.parametrize("edof", range(1, 9))
    @pytest.mark.parametrize("rho", [1.0, 1e2, 1e4])
    def test_equal_allocation_identity(self, edof, rho):
        # per-eigenchannel sum with equal gains and power split
        direct = sum(math.log2(1 + rho / edof**2) for _ in range(edof))
        assert equal_eigen_capacity(edof, rho) == pytest.approx(direct,
                                                                rel=1e-12)

    @pytest.mark.parametrize("edof", range(1, 9))
    def test_high_snr_form(self, edof):
        rho = 1e6
        full = equal_eigen_capacity(edof, rho)
        approx = high_snr_capacity(edof, rho)
        assert approx == pytest.approx(edof * math.log2(rho / edof**2),
                                       rel=1e-15)
        assert abs(full - approx) / full < 0.01

    def test_snr_budget(self):
        params = CapacityParams.from_budget(total_power=2.0, noise_power=0.5,
                                            num_tx=16, num_rx=4)
        assert params.composite_snr == pytest.approx(2.0 * 16 * 4 / 0.5)
        assert equal_eigen_capacity(2, params) == \
            equal_eigen_capacity(2, params.composite_snr)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            equal_eigen_capacity(0, 10.0)
        with pytest.raises(ValueError):
            high_snr_capacity(4, 8.0)  # needs rho above edof^2


class TestColumnInnerProduct:
    def dirichlet(self, n_rx, u):
        if abs(math.sin(math.pi * u)) < 1e-15:
            return float(n_rx)
        return abs(math.sin(math.pi * n_rx * u) / math.sin(math.pi * u))

    @pytest.mark.parametrize("phi", [0.0, math.pi / 6])
    def test_matches_dirichlet_magnitude(self, lam29, phi):
        n = 8
        tx = ArrayConfig(4, lam29)
        rx = ArrayConfig(n, lam29 / 2)
        geom = LinkGeometry(0.21, phi, phi)
        cc = math.cos(phi) ** 2
        for k, l in ((0, 1), (0, 3), (2, 3), (3, 1)):
            got = abs(column_inner_product(geom, tx, rx, k, l, lam29))
            u = tx.spacing * rx.spacing * cc * (k - l) / (lam29 * geom.range_m)
            assert got == pytest.approx(self.dirichlet(n, u), rel=1e-8)

    def test_diagonal_is_column_norm(self, lam29):
        tx = ArrayConfig(4, lam29 / 2)
        rx = ArrayConfig(6, lam29 / 2)
        geom = LinkGeometry(0.5)
        assert column_inner_product(geom, tx, rx, 2, 2, lam29) == \
            pytest.approx(6.0, rel=1e-12)

    def test_zero_at_orthogonality_range(self, lam29):
        for n, delta in ((4, 2), (8, 3)):
            d = delta * lam29 / 2
            tx = ArrayConfig(n, d)
            rx = ArrayConfig(n, d)
            r0 = column_orthogonality_range(tx, rx, lam29)
            geom = LinkGeometry(r0)
            for k in range(n):
                for l in range(n):
                    if k != l:
                        assert abs(column_inner_product(
                            geom, tx, rx, k, l, lam29)) < 1e-8 * n

    def test_far_limit_magnitude(self, lam29):
        tx = ArrayConfig(4, lam29 / 2)
        rx = ArrayConfig(5, lam29 / 2)
        geom = LinkGeometry(1e9, 0.3, 0.0)
        assert abs(column_inner_product(geom, tx, rx, 0, 3, lam29)) == \
            pytest.approx(5.0, rel=1e-6)

    def test_index_bounds(self, lam29):
        tx = ArrayConfig(4, lam29 / 2)
        rx = ArrayConfig(5, lam29 / 2)
        with pytest.raises(ValueError):
            column_inner_product(LinkGeometry(1.0), tx, rx, 4, 0, lam29)
