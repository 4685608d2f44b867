import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dickeprobe.correlators import (
    CorrelatorQuery,
    bosonic_four_point,
    dicke_ladder_factor,
    fermionic_four_point,
    mott_correlator,
    neel_correlator,
)
from dickeprobe.distributions import (
    MomentumDistribution,
    Statistics,
    metallic,
    superfluid,
    uniform,
)
from dickeprobe.lattice import LatticeSpec, Mode, mode_grid


class TestBosonicFourPoint:
    def test_superfluid_coincidence(self):
        spec = LatticeSpec(L=4)
        dist = superfluid(spec)
        k = Mode(1, 1)
        query = CorrelatorQuery(k, k, k, k)
        N = spec.sites
        # N(N-1) from the coherent term plus N from the exchange term
        assert bosonic_four_point(dist, query) == pytest.approx(N * N)

    def test_uniform_all_deltas_vanish(self):
        dist = uniform(LatticeSpec(L=4))
        query = CorrelatorQuery(Mode(0, 0), Mode(1, 0), Mode(0, 1), Mode(1, 1))
        assert bosonic_four_point(dist, query) == 0.0

    def test_uniform_forward_distinct_modes(self):
        dist = uniform(LatticeSpec(L=4))
        query = CorrelatorQuery(Mode(0, 0), Mode(1, 0), Mode(1, 1), Mode(1, 1))
        assert bosonic_four_point(dist, query) == pytest.approx(1.0)

    def test_uniform_double_sum_enumeration(self):
        # brute-force sum over all (k, q): the delta pieces cancel exactly,
        # leaving N^2 (hand expansion: N^2 + N + N - 2N)
        spec = LatticeSpec(L=2)
        dist = uniform(spec)
        kappa = Mode(1, 0)
        total = sum(
            bosonic_four_point(dist, CorrelatorQuery(k, q, kappa, kappa))
            for k in mode_grid(spec)
            for q in mode_grid(spec)
        )
        assert total == pytest.approx(spec.sites**2, abs=1e-12)

    def test_statistics_mismatch(self):
        with pytest.raises(ValueError):
            bosonic_four_point(
                metallic(LatticeSpec(L=4)),
                CorrelatorQuery(Mode(0, 0), Mode(0, 0), Mode(0, 0), Mode(0, 0)),
            )

    def test_wrapping_queries(self):
        # off-range indices must reduce into the zone before the deltas fire:
        # k = (2,0) and q = (-2,0) coincide mod L = 4, so n n (0 + 1) + n = 2
        dist = uniform(LatticeSpec(L=4))
        q1 = CorrelatorQuery(Mode(2, 0), Mode(-2, 0), Mode(1, 1), Mode(0, 1))
        assert bosonic_four_point(dist, q1) == pytest.approx(2.0)
        # with x.in = x.out as well, the single-mode subtraction also fires
        q2 = CorrelatorQuery(Mode(2, 0), Mode(-2, 0), Mode(1, 1), Mode(1, 1))
        assert bosonic_four_point(dist, q2) == pytest.approx(1.0)


class TestFermionicFourPoint:
    def test_metallic_pauli_term(self):
        spec = LatticeSpec(L=100)
        dist = metallic(spec)
        k = Mode(0, 0)
        kappa = Mode(1, 1)
        query = CorrelatorQuery(k, k, kappa, kappa, s1=0, s2=0)
        # both shifted modes inside the diamond: 1*1*(1-1) + 1 = 1
        assert fermionic_four_point(dist, query) == pytest.approx(1.0)

    def test_unequal_spins_vanish(self):
        dist = metallic(LatticeSpec(L=4))
        query = CorrelatorQuery(Mode(0, 0), Mode(0, 0), Mode(1, 0), Mode(0, 1), s1=0, s2=1)
        assert fermionic_four_point(dist, query) == 0.0

    def test_vacuum(self):
        spec = LatticeSpec(L=4)
        empty = MomentumDistribution(Statistics.FERMI, np.zeros((2, 4, 4)), 0.0)
        for k in (Mode(0, 0), Mode(1, 1)):
            query = CorrelatorQuery(k, k, k, k, s1=0, s2=0)
            assert fermionic_four_point(empty, query) == 0.0

    def test_spin_relabeling_invariance(self):
        # equal channels: swapping up and down everywhere changes nothing
        dist = metallic(LatticeSpec(L=6))
        modes = [Mode(0, 0), Mode(1, 0), Mode(2, -1), Mode(3, 3)]
        for k in modes:
            for q in modes:
                for s1 in (0, 1):
                    for s2 in (0, 1):
                        query = CorrelatorQuery(k, q, Mode(0, 1), Mode(1, 1), s1=s1, s2=s2)
                        flipped = CorrelatorQuery(
                            k, q, Mode(0, 1), Mode(1, 1), s1=1 - s1, s2=1 - s2
                        )
                        assert fermionic_four_point(dist, query) == pytest.approx(
                            fermionic_four_point(dist, flipped)
                        )

    def test_requires_spins(self):
        dist = metallic(LatticeSpec(L=4))
        with pytest.raises(ValueError):
            fermionic_four_point(dist, CorrelatorQuery(Mode(0, 0), Mode(0, 0), Mode(0, 0), Mode(0, 0)))


class TestQuenchCorrelators:
    def test_mott_values(self):
        spec10 = LatticeSpec(L=10)  # N = 100
        coincident = CorrelatorQuery(Mode(0, 0), Mode(0, 0), Mode(1, 1), Mode(1, 1))
        assert mott_correlator(coincident, spec10) == pytest.approx(2.98)
        spec2 = LatticeSpec(L=2)  # N = 4
        distinct = CorrelatorQuery(Mode(0, 0), Mode(1, 0), Mode(1, 1), Mode(0, 1))
        assert mott_correlator(distinct, spec2) == pytest.approx(-0.5)

    def test_mott_large_N_limit(self):
        spec = LatticeSpec(L=1000)
        query = CorrelatorQuery(Mode(0, 0), Mode(1, 0), Mode(1, 1), Mode(1, 1))
        assert mott_correlator(query, spec) == pytest.approx(1.0, abs=1e-5)

    def test_neel_values(self):
        spec = LatticeSpec(L=10)
        both = CorrelatorQuery(Mode(0, 0), Mode(0, 0), Mode(1, 1), Mode(1, 1))
        assert neel_correlator(both, spec) == pytest.approx(1.5)
        neither = CorrelatorQuery(Mode(0, 0), Mode(1, 0), Mode(1, 1), Mode(0, 1))
        assert neel_correlator(neither, spec) == 0.0
        only_kq = CorrelatorQuery(Mode(2, 0), Mode(2, 0), Mode(1, 1), Mode(0, 1))
        assert neel_correlator(only_kq, spec) == pytest.approx(0.5)


class TestDickeLadder:
    def test_reference_values(self):
        assert dicke_ladder_factor(4, 0, "raise") == pytest.approx(2.0)
        assert dicke_ladder_factor(4, 1, "raise") == pytest.approx(math.sqrt(6.0))
        assert dicke_ladder_factor(4, 1, "lower") == pytest.approx(2.0)

    @given(st.integers(1, 500), st.data())
    def test_hermiticity_pairing(self, N, data):
        n = data.draw(st.integers(0, N - 1))
        assert dicke_ladder_factor(N, n, "raise") == pytest.approx(
            dicke_ladder_factor(N, n + 1, "lower"), rel=1e-12
        )

    def test_range_errors(self):
        with pytest.raises(ValueError):
            dicke_ladder_factor(4, 4, "raise")
        with pytest.raises(ValueError):
            dicke_ladder_factor(4, 0, "lower")
        with pytest.raises(ValueError):
            dicke_ladder_factor(4, -1, "raise")
        with pytest.raises(ValueError):
            dicke_ladder_factor(4, 2, "sideways")
