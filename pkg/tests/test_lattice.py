import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dickeprobe.lattice import (
    LatticeSpec,
    Mode,
    adjacency_fourier,
    adjacency_fourier_grid,
    adjacency_matrix,
    canonical_mode,
    condensate_phase,
    dephasing_rates,
    hopping_phase,
    mode_add,
    mode_energy,
    mode_grid,
    mode_index,
    mode_neg,
    mode_sub,
    site_coordinates,
    validate_mode,
    wavevector,
)


class TestLatticeSpec:
    def test_sites(self):
        assert LatticeSpec(L=10).sites == 100

    @pytest.mark.parametrize("L", [0, 1, 3, 5, -2])
    def test_rejects_bad_L(self, L):
        with pytest.raises(ValueError):
            LatticeSpec(L=L)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            LatticeSpec(L=2, J=-1.0)
        with pytest.raises(ValueError):
            LatticeSpec(L=2, U=-0.5)
        with pytest.raises(ValueError):
            LatticeSpec(L=2, ell=0.0)
        with pytest.raises(ValueError):
            LatticeSpec(L=2, Z=6)

    def test_zero_tunneling_allowed(self):
        assert LatticeSpec(L=2, J=0.0).J == 0.0


class TestModeGrid:
    def test_L2_grid(self):
        modes = mode_grid(LatticeSpec(L=2))
        assert modes == [Mode(0, 0), Mode(0, 1), Mode(1, 0), Mode(1, 1)]

    def test_L4_grid(self):
        modes = mode_grid(LatticeSpec(L=4))
        assert len(modes) == 16
        ns = {mode.n for mode in modes}
        assert ns == {-1, 0, 1, 2}

    def test_L100_grid_endpoints(self):
        modes = mode_grid(LatticeSpec(L=100))
        assert len(modes) == 10_000
        indices = [mode.n for mode in modes] + [mode.m for mode in modes]
        assert min(indices) == -49
        assert max(indices) == 50

    def test_grid_is_duplicate_free(self):
        modes = mode_grid(LatticeSpec(L=6))
        assert len(set(modes)) == 36

    def test_validate_mode(self):
        assert validate_mode((1, -1), 4) == Mode(1, -1)
        with pytest.raises(ValueError):
            validate_mode((3, 0), 4)
        with pytest.raises(ValueError):
            validate_mode((0, -2), 4)

    @given(
        st.sampled_from([2, 4, 10]),
        st.tuples(st.integers(-30, 30), st.integers(-30, 30)),
        st.tuples(st.integers(-30, 30), st.integers(-30, 30)),
    )
    def test_wraparound_roundtrip(self, L, a, b):
        a_canon = canonical_mode(a, L)
        assert mode_sub(mode_add(a, b, L), b, L) == a_canon
        assert mode_add(mode_neg(a, L), a, L) == Mode(0, 0)

    def test_mode_index_inverts_grid_order(self):
        spec = LatticeSpec(L=6)
        grid = adjacency_fourier_grid(spec)
        for mode in mode_grid(spec):
            i, j = mode_index(mode, spec.L)
            assert grid[i, j] == pytest.approx(adjacency_fourier(mode, spec), abs=1e-14)


class TestDispersion:
    def test_values(self):
        spec = LatticeSpec(L=4)
        assert adjacency_fourier(Mode(0, 0), spec) == pytest.approx(4.0, abs=1e-15)
        assert adjacency_fourier(Mode(2, 2), spec) == pytest.approx(-4.0, abs=1e-15)
        assert adjacency_fourier(Mode(2, 0), spec) == pytest.approx(0.0, abs=1e-15)

    def test_range_and_parity(self):
        spec = LatticeSpec(L=10)
        for mode in mode_grid(spec):
            value = adjacency_fourier(mode, spec)
            assert -4.0 - 1e-12 <= value <= 4.0 + 1e-12
            assert value == pytest.approx(
                adjacency_fourier(mode_neg(mode, spec.L), spec), abs=1e-12
            )

    def test_grid_sum_is_zero(self):
        # each cosine sums to zero over a full period
        for L in (2, 4, 10, 100):
            spec = LatticeSpec(L=L)
            assert abs(adjacency_fourier_grid(spec).sum()) < 1e-12 * spec.sites

    def test_energy_sign(self):
        spec = LatticeSpec(L=4, J=2.0)
        assert mode_energy(Mode(0, 0), spec) == pytest.approx(-2.0)

    def test_wavevector(self):
        spec = LatticeSpec(L=4, ell=0.5)
        kx, ky = wavevector(Mode(1, 2), spec)
        assert kx == pytest.approx(2 * math.pi / 2.0 * 1)
        assert ky == pytest.approx(2 * math.pi / 2.0 * 2)


class TestHoppingPhase:
    def test_zero_for_zero_transfer(self):
        spec = LatticeSpec(L=4)
        for p in mode_grid(spec):
            assert hopping_phase(p, Mode(0, 0), 1.7, spec) == 0.0

    def test_hand_value(self):
        # L=4, k=(pi/2l, 0): T(k)=2, T(0)=4, so -(1/4)(2-4)*1 = +0.5
        spec = LatticeSpec(L=4, J=1.0)
        assert hopping_phase(Mode(1, 0), Mode(1, 0), 1.0, spec) == pytest.approx(0.5, abs=1e-15)

    @given(
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
        st.floats(-50, 50),
        st.floats(-3, 3),
    )
    def test_linearity(self, p, k, t, scale):
        spec = LatticeSpec(L=4)
        lhs = hopping_phase(p, k, scale * t, spec)
        rhs = scale * hopping_phase(p, k, t, spec)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    def test_condensate_phase(self):
        spec = LatticeSpec(L=4)
        kappa = Mode(1, 0)
        assert condensate_phase(kappa, 2.0, spec) == pytest.approx(
            -hopping_phase(kappa, kappa, 2.0, spec)
        )

    def test_dephasing_rates_match_phase(self):
        spec = LatticeSpec(L=6, J=1.3)
        kappa = Mode(2, -1)
        rates = dephasing_rates(spec, kappa)
        for p in mode_grid(spec):
            i, j = mode_index(p, spec.L)
            assert rates[i, j] * 0.9 == pytest.approx(
                -hopping_phase(p, kappa, 0.9, spec), abs=1e-12
            )


class TestRealSpace:
    def test_adjacency_row_sums(self):
        for L in (2, 4, 6):
            A = adjacency_matrix(LatticeSpec(L=L))
            assert (A.sum(axis=1) == 4).all()
            assert (A == A.T).all()
            assert (np.diag(A) == 0).all()

    def test_L2_double_bonds(self):
        A = adjacency_matrix(LatticeSpec(L=2))
        # site (0,0) couples twice to (1,0) and (0,1), never to (1,1)
        assert A[0, 2] == 2 and A[0, 1] == 2 and A[0, 3] == 0

    def test_single_particle_spectrum_matches_dispersion(self):
        # eigenvalues of -(J/Z) A must be the values -(J/Z) T(k)
        for L in (2, 4):
            spec = LatticeSpec(L=L)
            A = adjacency_matrix(spec)
            hop = -spec.J / spec.Z * A
            expected = sorted(mode_energy(k, spec) for k in mode_grid(spec))
            got = sorted(np.linalg.eigvalsh(hop))
            assert np.allclose(got, expected, atol=1e-12)

    def test_site_coordinates(self):
        coords = site_coordinates(LatticeSpec(L=2))
        assert coords.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
