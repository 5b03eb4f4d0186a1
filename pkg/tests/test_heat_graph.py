import math

import numpy as np
import pytest

from heatzeta import graphs as G
from heatzeta.bessel import bessel_i
from heatzeta.heat_graph import (
    DENSE_EIGEN_CAP,
    b_coefficients,
    diagonal_tree_decomposition,
    heat_kernel_ode,
    heat_kernel_series,
    heat_kernel_spectral,
    laplacian,
    spectral_data,
)

GRAPH_NAMES = ["k4", "c5", "c8", "cube", "k33", "petersen"]


class TestLaplacian:
    def test_k4_matrix(self):
        g = G.builtin_graph("k4")
        lap = laplacian(g)
        expected = 3 * np.eye(4) - (np.ones((4, 4)) - np.eye(4))
        assert np.allclose(lap, expected)

    def test_cycle_circulant(self):
        lap = laplacian(G.builtin_graph("c5"))
        assert np.allclose(np.diag(lap), 2.0)
        for i in range(5):
            assert lap[i, (i + 1) % 5] == -1.0

    def test_row_sums_zero(self):
        for name in GRAPH_NAMES:
            lap = laplacian(G.builtin_graph(name))
            assert np.allclose(lap.sum(axis=1), 0.0)

    def test_eigenvalue_range(self):
        for name in GRAPH_NAMES:
            g = G.builtin_graph(name)
            q = g.regularity()
            sd = spectral_data(g)
            assert sd.eigenvalues[0] == pytest.approx(0.0, abs=1e-10)
            assert sd.eigenvalues[-1] <= 2 * (q + 1) + 1e-10

    def test_petersen_spectrum(self):
        sd = spectral_data(G.builtin_graph("petersen"))
        rounded = sorted(round(v, 8) for v in sd.eigenvalues)
        assert rounded == [0.0] + [2.0] * 5 + [5.0] * 4


class TestSpectralData:
    def test_eigen_residual(self):
        g = G.builtin_graph("cube")
        lap = laplacian(g)
        sd = spectral_data(g)
        residual = lap @ sd.eigenvectors - sd.eigenvectors * sd.eigenvalues
        assert np.abs(residual).max() <= 1e-10

    def test_completeness(self):
        g = G.builtin_graph("k33")
        sd = spectral_data(g)
        gram = sd.eigenvectors @ sd.eigenvectors.T
        assert np.allclose(gram, np.eye(g.n_vertices), atol=1e-12)

    def test_cap_enforced(self):
        n = DENSE_EIGEN_CAP + 2
        edges = "\n".join(f"{i} {(i + 1) % n}" for i in range(n))
        big = G.load_graph(edges)
        with pytest.raises(ValueError, match="cap"):
            spectral_data(big)


class TestBCoefficients:
    def test_base_cases(self):
        g = G.builtin_graph("k4")
        b = b_coefficients(g, 0, 4)
        c = G.geodesic_counts(g, 0, 4)
        assert b[0] == c[0]
        assert b[1] == c[1]

    def test_k4_negative_entry(self):
        b = b_coefficients(G.builtin_graph("k4"), 0, 2)
        # b_2(x0) = c_2(x0) - (q-1) c_0(x0) = 0 - 1
        assert b[2][0] == -1

    def test_diagonal_relates_to_closed_counts(self):
        # on the diagonal, b_m differs from N_m^0 by q-1 at even m
        # (the alternating tail reaches down to c_0 = 1)
        for name in ("k4", "petersen", "cube"):
            g = G.builtin_graph(name)
            q = g.regularity()
            b = b_coefficients(g, 0, 10)
            n0 = G.closed_geodesics_at_vertex(g, 0, 10)
            for m in range(1, 11):
                assert b[m][0] == n0[m] - (q - 1) * (1 - m % 2)

    def test_alternating_tail_definition(self):
        g = G.builtin_graph("petersen")
        q = g.regularity()
        c = G.geodesic_counts(g, 0, 9)
        b = b_coefficients(g, 0, 9)
        for m in range(2, 10):
            for x in range(g.n_vertices):
                tail = sum(c[j][x] for j in range(m - 2, -1, -2))
                assert b[m][x] == c[m][x] - (q - 1) * tail


class TestThreeWayAgreement:
    def test_t_zero_indicator(self):
        g = G.builtin_graph("cube")
        assert heat_kernel_series(g, 0, 0, 0.0) == 1.0
        assert heat_kernel_series(g, 0, 3, 0.0) == 0.0
        assert heat_kernel_spectral(g, 0, 0, 0.0) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("name", GRAPH_NAMES)
    @pytest.mark.parametrize("t", [0.1, 0.5, 1.0, 2.0])
    def test_series_vs_spectral_vs_ode(self, name, t):
        g = G.builtin_graph(name)
        ode_row = heat_kernel_ode(g, 0, t, 1e-11)
        for x in range(g.n_vertices):
            series = heat_kernel_series(g, 0, x, t, 1e-10)
            spectral = heat_kernel_spectral(g, 0, x, t)
            assert abs(series - spectral) <= 1e-7
            assert abs(series - ode_row[x]) <= 1e-6

    def test_k4_diagonal_closed_form(self):
        g = G.builtin_graph("k4")
        for t in (0.1, 0.7, 2.0):
            expected = 0.25 * (1.0 + 3.0 * math.exp(-4.0 * t))
            assert heat_kernel_spectral(g, 0, 0, t) == pytest.approx(expected, abs=1e-12)
            assert heat_kernel_series(g, 0, 0, t, 1e-11) == pytest.approx(expected, abs=1e-8)

    def test_c8_bessel_periodization(self):
        # on a cycle (q = 1), the kernel is a wrapped sum of e^{-2t} I_m(2t)
        g = G.builtin_graph("c8")
        t = 1.0
        for x in range(8):
            wrapped = math.fsum(
                math.exp(-2 * t) * bessel_i(abs(x + 8 * k), 2 * t)
                for k in range(-20, 21)
            )
            assert heat_kernel_series(g, 0, x, t, 1e-12) == pytest.approx(wrapped, abs=1e-9)


class TestGlobalProperties:
    @pytest.mark.parametrize("name", GRAPH_NAMES)
    def test_mass_conservation(self, name):
        g = G.builtin_graph(name)
        for t in (0.3, 1.0):
            total = math.fsum(
                heat_kernel_spectral(g, 0, x, t) for x in range(g.n_vertices)
            )
            assert total == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("name", ["k4", "petersen", "k33"])
    def test_symmetry(self, name):
        g = G.builtin_graph(name)
        for x0, x in ((0, 1), (0, g.n_vertices - 1), (1, 2)):
            a = heat_kernel_series(g, x0, x, 0.8, 1e-10)
            b = heat_kernel_series(g, x, x0, 0.8, 1e-10)
            assert a == pytest.approx(b, abs=1e-12)

    def test_automorphism_invariance(self):
        g = G.builtin_graph("petersen")
        _, witnesses = G.check_vertex_transitive(g)
        image = witnesses[3]
        for x in (0, 1, 5):
            original = heat_kernel_spectral(g, 0, x, 0.9)
            moved = heat_kernel_spectral(g, image[0], image[x], 0.9)
            assert original == pytest.approx(moved, abs=1e-12)

    @pytest.mark.parametrize("name", GRAPH_NAMES)
    def test_exponential_series_coefficients_are_path_counts(self, name):
        # n-th t-derivative of e^{(q+1)t} K at 0 equals a_n(x)
        g = G.builtin_graph(name)
        q = g.regularity()
        sd = spectral_data(g)
        a = G.path_counts(g, 0, 8)
        for n in range(9):
            moments = sd.eigenvectors @ (
                ((q + 1.0) - sd.eigenvalues) ** n * sd.eigenvectors[0, :]
            )
            for x in range(g.n_vertices):
                assert moments[x] == pytest.approx(a[n][x], rel=1e-10, abs=1e-8)


class TestDiagonalTreeDecomposition:
    def test_tree_reduction(self):
        # a large even cycle has girth > horizon: no closed-geodesic terms matter
        from heatzeta.heat_tree import tree_heat_kernel

        g = G.builtin_graph("c8")
        value = diagonal_tree_decomposition(g, 0, 0.2, 1e-12)
        tree = tree_heat_kernel(1, 0.2, 0, 1e-12).value
        # girth 8 corrections are ~ I_8(0.4), far below 1e-9
        assert value == pytest.approx(tree + 2 * math.exp(-0.4) * bessel_i(8, 0.4), rel=1e-9)

    @pytest.mark.parametrize("name,t", [("k4", 0.5), ("petersen", 1.0), ("cube", 0.7)])
    def test_matches_spectral_diagonal(self, name, t):
        g = G.builtin_graph(name)
        assert diagonal_tree_decomposition(g, 0, t, 1e-11) == pytest.approx(
            heat_kernel_spectral(g, 0, 0, t), abs=1e-8
        )


class TestOde:
    def test_initial_condition(self):
        g = G.builtin_graph("k33")
        row = heat_kernel_ode(g, 2, 0.0)
        assert row[2] == 1.0 and row.sum() == 1.0

    def test_matches_spectral(self):
        g = G.builtin_graph("petersen")
        row = heat_kernel_ode(g, 0, 1.3, 1e-11)
        for x in range(10):
            assert row[x] == pytest.approx(
                heat_kernel_spectral(g, 0, x, 1.3), abs=1e-8
            )
