// Copyright 2026 The entlife Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entlife/oracle.hpp"

#include <cmath>
#include <complex>
#include <doctest.h>
#include <random>

#include "entlife/errors.hpp"
#include "entlife/ghz.hpp"

using namespace entlife;
using oracle::BipartitionCut;
using oracle::DensityMatrix;

namespace {

Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd a;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) a(r, c) = {gauss(rng), gauss(rng)};
    }
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a);
    return qr.householderQ();
}

DensityMatrix random_single_qubit_state(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd a;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) a(r, c) = {gauss(rng), gauss(rng)};
    }
    Eigen::Matrix2cd herm = a * a.adjoint();
    herm /= herm.trace().real();
    DensityMatrix rho(1);
    rho.mat() = herm;
    return rho;
}

void check_state_invariants(const DensityMatrix& rho) {
    CHECK(std::abs(rho.trace_real() - 1.0) <= 1e-12);
    CHECK(rho.hermiticity_defect() <= 1e-12);
    CHECK(rho.min_eigenvalue() >= -1e-10);
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("graph state construction") {
    const Graph edge = make_custom({{0, 1}});
    const DensityMatrix bell_like = oracle::build_graph_state(edge);
    check_state_invariants(bell_like);
    CHECK(oracle::min_pt_eigenvalue(bell_like, BipartitionCut{{0}}) ==
          doctest::Approx(-0.5).epsilon(1e-12));

    const Graph star3 = make_lattice(LatticeKind::star, {3});
    const DensityMatrix s3 = oracle::build_graph_state(star3);
    for (int j = 0; j < 3; ++j) {
        CHECK(oracle::pauli_expectation(s3, correlation_operator(star3, j)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }

    const Graph lin4 = make_lattice(LatticeKind::linear, {4});
    CHECK(oracle::build_graph_state(lin4).purity() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(DensityMatrix(11), resource_error);
}

TEST_CASE("graph basis eigenvalue equations") {
    const Graph g = make_lattice(LatticeKind::ring, {5});
    const ZPattern flips = ZPattern::of({0, 2});
    GraphBasisIndex mu(5);
    mu.flip(flips);

    DensityMatrix rho = oracle::build_graph_state(g);
    PauliString zs = PauliString::identity(5);
    for (int v : flips.support) zs.letters[static_cast<std::size_t>(v)] = Pauli::Z;
    oracle::conjugate_pauli(rho, zs);
    for (int j = 0; j < 5; ++j) {
        const double expected = mu.mu[static_cast<std::size_t>(j)] ? -1.0 : 1.0;
        CHECK(oracle::pauli_expectation(rho, correlation_operator(g, j)) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("depolarizing channel basics") {
    const Graph lin4 = make_lattice(LatticeKind::linear, {4});
    DensityMatrix rho = oracle::build_graph_state(lin4);
    const Eigen::MatrixXcd before = rho.mat();
    oracle::apply_depolarizing_all(rho, noise_from_p(1.0));
    CHECK((rho.mat() - before).cwiseAbs().maxCoeff() <= 1e-14);

    oracle::apply_depolarizing_all(rho, noise_from_p(0.37));
    check_state_invariants(rho);
}

TEST_CASE("depolarized GHZ coefficients match the analytic spectrum") {
    DensityMatrix rho = oracle::ghz_state(3);
    oracle::apply_depolarizing_all(rho, noise_from_p(0.5));
    const auto coeffs = oracle::ghz_coefficients(rho);
    CHECK(coeffs.plus[0] == doctest::Approx(0.28125).epsilon(1e-12));
    CHECK(coeffs.minus[0] == doctest::Approx(0.15625).epsilon(1e-12));
    for (std::size_t kappa : {1u, 2u}) {
        CHECK(coeffs.plus[kappa] == doctest::Approx(0.09375).epsilon(1e-12));
        CHECK(coeffs.minus[kappa] == doctest::Approx(0.09375).epsilon(1e-12));
    }
    CHECK(coeffs.normalization() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle::ghz_offdiag_max(rho) <= 1e-12);

    const DensityMatrix pure = oracle::ghz_state(4);
    const auto pure_coeffs = oracle::ghz_coefficients(pure);
    CHECK(pure_coeffs.plus[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pure_coeffs.minus[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dephasing composition reproduces depolarizing") {
    std::mt19937 rng(99);
    for (double p : {0.25, 0.717, 0.93}) {
        const auto dec = dephasing_decomposition(noise_from_p(p));
        for (int rep = 0; rep < 8; ++rep) {
            DensityMatrix direct = random_single_qubit_state(rng);
            DensityMatrix composed = direct;
            oracle::depolarize_qubit(direct, 0, p);
            oracle::dephase_qubit(composed, 0, Pauli::X, dec.p_x);
            oracle::dephase_qubit(composed, 0, Pauli::Y, dec.p_y);
            oracle::dephase_qubit(composed, 0, Pauli::Z, dec.p_z);
            CHECK((direct.mat() - composed.mat()).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("depolarizing commutes with local unitaries") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 6; ++rep) {
        const Eigen::Matrix2cd u = random_unitary(rng);
        DensityMatrix a = random_single_qubit_state(rng);
        DensityMatrix b = a;

        oracle::depolarize_qubit(a, 0, 0.6);
        a.mat() = u * a.mat() * u.adjoint();

        b.mat() = u * b.mat() * u.adjoint();
        oracle::depolarize_qubit(b, 0, 0.6);

        CHECK((a.mat() - b.mat()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("partial transpose reference values") {
    DensityMatrix product(2);
    Eigen::VectorXcd psi(4);
    psi << 0.5, 0.5, 0.5, 0.5;  // |+>|+>
    product = DensityMatrix::pure(2, psi);
    CHECK(oracle::min_pt_eigenvalue(product, BipartitionCut{{1}}) >= -1e-12);

    const DensityMatrix bell = oracle::ghz_state(2);
    CHECK(oracle::min_pt_eigenvalue(bell, BipartitionCut{{0}}) ==
          doctest::Approx(-0.5).epsilon(1e-12));

    DensityMatrix boundary = oracle::ghz_state(2);
    oracle::apply_depolarizing_all(boundary, noise_from_p(1.0 / std::sqrt(3.0)));
    CHECK(std::abs(oracle::min_pt_eigenvalue(boundary, BipartitionCut{{1}})) <= 1e-10);

    DensityMatrix mixed = oracle::ghz_state(4);
    oracle::apply_depolarizing_all(mixed, noise_from_p(0.7));
    const double one_side = oracle::min_pt_eigenvalue(mixed, BipartitionCut{{0, 2}});
    const double other = oracle::min_pt_eigenvalue(mixed, BipartitionCut{{1, 3}});
    CHECK(one_side == doctest::Approx(other).epsilon(1e-11));
}

TEST_CASE("pt sign agreement with the analytic condition") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n / 2; ++k) {
            std::vector<int> side(static_cast<std::size_t>(k));
            for (int q = 0; q < k; ++q) side[static_cast<std::size_t>(q)] = q;
            for (int i = 0; i < 10; ++i) {
                const double p = 0.05 + i * 0.1;
                DensityMatrix rho = oracle::ghz_state(n);
                oracle::apply_depolarizing_all(rho, noise_from_p(p));
                const double eig = oracle::min_pt_eigenvalue(rho, BipartitionCut{side});
                CHECK((eig >= -oracle::kEigSignTol) == ppt_positive(n, noise_from_p(p), k));
            }
        }
    }
}

TEST_CASE("star graph cuts agree with the GHZ condition") {
    for (int n : {4, 5, 6}) {
        const Graph star = make_lattice(LatticeKind::star, {n});
        for (double p : {0.3, 0.55, 0.62, 0.8, 0.95}) {
            DensityMatrix rho = oracle::build_graph_state(star);
            oracle::apply_depolarizing_all(rho, noise_from_p(p));
            for (int cut_vertex : {0, 1}) {
                const double eig =
                    oracle::min_pt_eigenvalue(rho, BipartitionCut{{cut_vertex}});
                CHECK((eig >= -oracle::kEigSignTol) == ppt_positive(n, noise_from_p(p), 1));
            }
        }
    }
}

TEST_CASE("pauli conjugation equals its z-pattern on graph states") {
    const Graph graphs[] = {make_lattice(LatticeKind::linear, {4}),
                            make_lattice(LatticeKind::star, {4}),
                            make_custom({{0, 1}, {1, 2}, {0, 2}}),
                            make_lattice(LatticeKind::ring, {5}),
                            make_lattice(LatticeKind::grid2d, {2, 4})};
    for (const Graph& g : graphs) {
        const DensityMatrix rho = oracle::build_graph_state(g);
        for (int j = 0; j < g.n(); ++j) {
            for (Pauli letter : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
                DensityMatrix lhs = rho;
                oracle::conjugate_pauli(lhs, PauliString::single(g.n(), j, letter));
                DensityMatrix rhs = rho;
                PauliString zprod = PauliString::identity(g.n());
                for (int v : pauli_to_zpattern(g, j, letter).support) {
                    zprod.letters[static_cast<std::size_t>(v)] = Pauli::Z;
                }
                oracle::conjugate_pauli(rhs, zprod);
                CHECK((lhs.mat() - rhs.mat()).cwiseAbs().maxCoeff() <= 1e-12);
            }
        }
    }
}

TEST_CASE("measurement reduction of the noiseless chain") {
    const Graph lin4 = make_lattice(LatticeKind::linear, {4});
    const DensityMatrix rho = oracle::build_graph_state(lin4);
    const auto q = oracle::bell_coefficients(oracle::measure_and_reduce(rho, lin4, 1, 2));
    CHECK(q.q00 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.q01 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q.q10 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(q.q11 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("measurement reduction matches the pair calculus") {
    const Graph lin6 = make_lattice(LatticeKind::linear, {6});
    DensityMatrix rho = oracle::build_graph_state(lin6);
    oracle::apply_depolarizing_all(rho, noise_from_p(0.8));
    const DensityMatrix reduced = oracle::measure_and_reduce(rho, lin6, 2, 3);
    check_state_invariants(reduced);
    const auto meas = oracle::bell_coefficients(reduced);
    const auto calc = reduced_pair_state(lin6, noise_from_p(0.8), 2, 3);
    CHECK(meas.q00 == doctest::Approx(calc.q00).epsilon(1e-10));
    CHECK(meas.q01 == doctest::Approx(calc.q01).epsilon(1e-10));
    CHECK(meas.q10 == doctest::Approx(calc.q10).epsilon(1e-10));
    CHECK(meas.q11 == doctest::Approx(calc.q11).epsilon(1e-10));
}

TEST_CASE("every corrected branch yields the same pair state") {
    const Graph lin5 = make_lattice(LatticeKind::linear, {5});
    DensityMatrix rho = oracle::build_graph_state(lin5);
    oracle::apply_depolarizing_all(rho, noise_from_p(0.8));
    const DensityMatrix first = oracle::measure_branch(rho, lin5, 1, 2, 0);
    for (unsigned m = 1; m < 8; ++m) {
        const DensityMatrix branch = oracle::measure_branch(rho, lin5, 1, 2, m);
        CHECK((branch.mat() - first.mat()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("common-neighbor reduction matches the convolution") {
    const Graph triangle = make_custom({{0, 1}, {1, 2}, {0, 2}});
    DensityMatrix rho = oracle::build_graph_state(triangle);
    oracle::apply_depolarizing_all(rho, noise_from_p(0.9));
    const auto meas =
        oracle::bell_coefficients(oracle::measure_and_reduce(rho, triangle, 0, 1));
    const auto calc = reduced_pair_state(triangle, noise_from_p(0.9), 0, 1);
    CHECK(meas.q00 == doctest::Approx(calc.q00).epsilon(1e-10));
    CHECK(meas.q01 == doctest::Approx(calc.q01).epsilon(1e-10));
    CHECK(meas.q10 == doctest::Approx(calc.q10).epsilon(1e-10));
    CHECK(meas.q11 == doctest::Approx(calc.q11).epsilon(1e-10));
}

TEST_CASE("guaranteed partition really is all-cut npt") {
    const auto lower = lower_bound_m(noise_from_p(0.9));
    CHECK(lower.guaranteed);
    const int n = 6;
    const int m_groups = std::min<long>(lower.m, n);
    const PartitionSpec part = PartitionSpec::equal(n, static_cast<int>(m_groups));
    DensityMatrix rho = oracle::ghz_state(n);
    oracle::apply_depolarizing_all(rho, noise_from_p(0.9));
    // every cut that respects the partition must be npt
    const int groups = part.group_count();
    for (unsigned mask = 1; mask < (1u << groups) - 1; ++mask) {
        std::vector<int> side;
        for (int g = 0; g < groups; ++g) {
            if ((mask >> g) & 1u) {
                const auto members = part.group_members(g);
                side.insert(side.end(), members.begin(), members.end());
            }
        }
        CHECK(oracle::min_pt_eigenvalue(rho, BipartitionCut{side}) < -oracle::kEigSignTol);
    }
}

TEST_CASE("choi partial transpose of the dephased edge map") {
    CHECK(oracle::choi_min_pt_eigenvalue(1.0) < -1e-3);
    CHECK(oracle::choi_min_pt_eigenvalue(0.1) >= -1e-10);

    std::vector<double> grid;
    for (double p = 0.40; p <= 0.43 + 1e-9; p += 1e-3) grid.push_back(p);
    const auto crossing = oracle::choi_pt_crossing(grid);
    REQUIRE(crossing.has_value());
    CHECK(crossing->p_lo >= 0.40);
    CHECK(crossing->p_hi <= 0.43);
    MESSAGE("choi ppt crossing estimate: ", crossing->estimate);

    std::vector<double> flat = {0.1, 0.15, 0.2};
    CHECK_FALSE(oracle::choi_pt_crossing(flat).has_value());
}

TEST_SUITE_END();
