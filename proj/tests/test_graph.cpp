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

#include "entlife/graph.hpp"

#include <cmath>
#include <doctest.h>
#include <random>
#include <sstream>
#include <stdexcept>

#include "entlife/bisect.hpp"

using namespace entlife;

namespace {

bool pauli_commute(const PauliString& a, const PauliString& b) {
    int anti = 0;
    for (int i = 0; i < a.n(); ++i) {
        const Pauli x = a.at(i), y = b.at(i);
        if (x != Pauli::I && y != Pauli::I && x != y) ++anti;
    }
    return (anti % 2) == 0;
}

Graph random_graph(int n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.4);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng)) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("lattice constructions") {
    const Graph lin = make_lattice(LatticeKind::linear, {4});
    CHECK(lin.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    const Graph star = make_lattice(LatticeKind::star, {4});
    CHECK(star.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.degree(0) == 3);

    const Graph grid = make_lattice(LatticeKind::grid2d, {3, 3});
    CHECK(grid.edges().size() == 12);
    CHECK(grid.degree(4) == 4);  // center of a 3x3 grid

    const Graph ring = make_lattice(LatticeKind::ring, {5});
    CHECK(ring.edges().size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(ring.degree(v) == 2);

    const Graph cube = make_lattice(LatticeKind::grid3d, {2, 2, 2});
    CHECK(cube.edges().size() == 12);
    for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);

    CHECK_THROWS_AS(make_lattice(LatticeKind::grid2d, {3}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("graph file format") {
    std::istringstream in("# a comment\nn 5\n0 1\n1 2\n\n3 1\n");
    const Graph g = parse_graph_file(in);
    CHECK(g.n() == 5);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});

    std::istringstream inferred("0 1\n1 4\n");
    CHECK(parse_graph_file(inferred).n() == 5);

    std::istringstream round(write_graph_file(g));
    const Graph back = parse_graph_file(round);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());

    std::istringstream bad("0 zero\n");
    CHECK_THROWS_AS(parse_graph_file(bad), std::invalid_argument);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_graph_file(empty), std::invalid_argument);
}

TEST_CASE("correlation operators") {
    const Graph lin = make_lattice(LatticeKind::linear, {3});
    CHECK(correlation_operator(lin, 1).str() == "ZXZ");

    const Graph star = make_lattice(LatticeKind::star, {4});
    CHECK(correlation_operator(star, 0).str() == "XZZZ");
    CHECK(correlation_operator(star, 2).str() == "ZIXI");

    CHECK_THROWS_AS(correlation_operator(lin, 3), std::domain_error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(3 + trial % 10, rng);
        for (int i = 0; i < g.n(); ++i) {
            for (int j = i + 1; j < g.n(); ++j) {
                CHECK(pauli_commute(correlation_operator(g, i), correlation_operator(g, j)));
            }
        }
    }
}

TEST_CASE("pauli letters map to z patterns") {
    const Graph lin = make_lattice(LatticeKind::linear, {5});
    CHECK(pauli_to_zpattern(lin, 2, Pauli::X).support == std::vector<int>{1, 3});
    CHECK(pauli_to_zpattern(lin, 2, Pauli::Z).support == std::vector<int>{2});
    CHECK(pauli_to_zpattern(lin, 2, Pauli::I).support.empty());
    CHECK(pauli_to_zpattern(lin, 2, Pauli::Y).support == std::vector<int>{1, 2, 3});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(4 + trial, rng);
        for (int j = 0; j < g.n(); ++j) {
            const ZPattern y = pauli_to_zpattern(g, j, Pauli::Y);
            const ZPattern xz = pauli_to_zpattern(g, j, Pauli::X)
                                    .compose(pauli_to_zpattern(g, j, Pauli::Z));
            CHECK(y == xz);
        }
    }
}

TEST_CASE("depolarizing z-map weights") {
    const Graph lin = make_lattice(LatticeKind::linear, {5});

    const ZPatternMap noiseless = depolarizing_zmap(lin, 2, noise_from_p(1.0));
    REQUIRE(noiseless.terms.size() == 4);
    CHECK(noiseless.terms.at(ZPattern{}) == doctest::Approx(1.0).epsilon(1e-15));

    const ZPatternMap mid = depolarizing_zmap(lin, 2, noise_from_p(0.6));
    CHECK(mid.terms.at(ZPattern{}) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(mid.terms.at(ZPattern::of({2})) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(mid.terms.at(ZPattern::of({1, 3})) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(mid.terms.at(ZPattern::of({1, 2, 3})) == doctest::Approx(0.1).epsilon(1e-14));

    // isolated vertex: the X pattern collapses onto the identity
    const Graph lonely = make_custom({{1, 2}}, 3);
    const ZPatternMap iso = depolarizing_zmap(lonely, 0, noise_from_p(0.6));
    REQUIRE(iso.terms.size() == 2);
    CHECK(iso.terms.at(ZPattern{}) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(iso.terms.at(ZPattern::of({0})) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("channel to z-map conversion") {
    const Graph lin = make_lattice(LatticeKind::linear, {4});

    // single-site depolarizing embedded at vertex 1 agrees with the direct map
    std::vector<std::pair<PauliString, double>> raw;
    const double p = 0.55, b = (1.0 - p) / 4.0;
    raw.emplace_back(PauliString::identity(4), p + b);
    for (Pauli letter : {Pauli::X, Pauli::Y, Pauli::Z}) {
        raw.emplace_back(PauliString::single(4, 1, letter), b);
    }
    const ZPatternMap from_chan = channel_to_zmap(lin, normalize_channel(raw));
    const ZPatternMap direct = depolarizing_zmap(lin, 1, noise_from_p(p));
    REQUIRE(from_chan.terms.size() == direct.terms.size());
    for (const auto& [z, w] : direct.terms) {
        CHECK(from_chan.terms.at(z) == doctest::Approx(w).epsilon(1e-13));
    }

    const auto zz = normalize_channel(
        {{PauliString::parse("II"), 0.9}, {PauliString::parse("ZZ"), 0.1}});
    const Graph two = make_lattice(LatticeKind::linear, {2});
    const ZPatternMap corr = channel_to_zmap(two, zz);
    CHECK(corr.terms.at(ZPattern{}) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(corr.terms.at(ZPattern::of({0, 1})) == doctest::Approx(0.1).epsilon(1e-14));

    const auto xx = normalize_channel(
        {{PauliString::parse("IIII"), 0.75}, {PauliString::parse("XXII"), 0.25}});
    const ZPatternMap moved = channel_to_zmap(lin, xx);
    CHECK(moved.terms.at(ZPattern::of({0, 1, 2})) == doctest::Approx(0.25).epsilon(1e-14));

    CHECK_THROWS_AS(channel_to_zmap(two, xx), std::invalid_argument);
}

TEST_CASE("z-pattern map composition") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    const Graph g = random_graph(20, rng);
    std::vector<ZPatternMap> maps;
    for (int v = 0; v < 6; ++v) {
        maps.push_back(depolarizing_zmap(g, v * 3, noise_from_p(unif(rng))));
    }
    const ZPatternMap ab = maps[0].compose(maps[1]);
    const ZPatternMap ba = maps[1].compose(maps[0]);
    REQUIRE(ab.terms.size() == ba.terms.size());
    for (const auto& [z, w] : ab.terms) {
        CHECK(ba.terms.at(z) == doctest::Approx(w).epsilon(1e-12));
    }

    const ZPatternMap left = ab.compose(maps[2]);
    const ZPatternMap right = maps[0].compose(maps[1].compose(maps[2]));
    REQUIRE(left.terms.size() == right.terms.size());
    for (const auto& [z, w] : left.terms) {
        CHECK(right.terms.at(z) == doctest::Approx(w).epsilon(1e-12));
    }

    ZPatternMap chain = maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i) chain = chain.compose(maps[i]);
    CHECK(std::abs(chain.weight_sum() - 1.0) <= 1e-12);
}

TEST_CASE("character transform round trip") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<double, 4> w{unif(rng), unif(rng), unif(rng), unif(rng)};
        const auto back = inverse_character_transform4(character_transform4(w));
        for (int i = 0; i < 4; ++i) CHECK(std::abs(back[static_cast<std::size_t>(i)] -
                                                   w[static_cast<std::size_t>(i)]) <= 1e-14);
    }
}

TEST_CASE("reduced pair state on a chain") {
    const Graph lin = make_lattice(LatticeKind::linear, {6});

    const PairCoefficients clean = reduced_pair_state(lin, noise_from_p(1.0), 2, 3);
    CHECK(clean.q00 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(clean.q01 == doctest::Approx(0.0).epsilon(1e-14));

    for (double p : {0.3, 0.717, 0.95}) {
        const PairCoefficients q = reduced_pair_state(lin, noise_from_p(p), 2, 3);
        const double closed = (1.0 + 2.0 * p * p * p + p * p * p * p) / 4.0;
        CHECK(q.q00 == doctest::Approx(closed).epsilon(1e-13));
        CHECK(std::abs(q.q00 + q.q01 + q.q10 + q.q11 - 1.0) <= 1e-14);
    }

    CHECK_THROWS_AS(reduced_pair_state(lin, noise_from_p(0.5), 0, 2), std::domain_error);
}

TEST_CASE("interior pair coefficients do not depend on the chain length") {
    for (double p : {0.5, 0.717, 0.9}) {
        const auto np = noise_from_p(p);
        const Graph base = make_lattice(LatticeKind::linear, {4});
        const PairCoefficients ref = reduced_pair_state(base, np, 1, 2);
        for (int n : {6, 10, 20}) {
            const Graph g = make_lattice(LatticeKind::linear, {n});
            const PairCoefficients q = reduced_pair_state(g, np, n / 2 - 1, n / 2);
            CHECK(q.q00 == ref.q00);
            CHECK(q.q01 == ref.q01);
            CHECK(q.q10 == ref.q10);
            CHECK(q.q11 == ref.q11);
        }
    }
}

TEST_CASE("pair reduction only sees the closed neighborhoods") {
    const Graph g1 = make_lattice(LatticeKind::linear, {8});
    std::vector<std::pair<int, int>> edges = g1.edges();
    edges.emplace_back(6, 0);  // far from the pair (2,3) and its neighbors
    const Graph g2 = Graph::from_edges(8, edges);
    const auto np = noise_from_p(0.73);
    const PairCoefficients a = reduced_pair_state(g1, np, 2, 3);
    const PairCoefficients b = reduced_pair_state(g2, np, 2, 3);
    CHECK(a.q00 == b.q00);
    CHECK(a.q01 == b.q01);
    CHECK(a.q10 == b.q10);
    CHECK(a.q11 == b.q11);
}

TEST_CASE("pair entanglement criterion") {
    CHECK(pair_entangled(PairCoefficients{1.0, 0.0, 0.0, 0.0}));
    CHECK_FALSE(pair_entangled(PairCoefficients{0.25, 0.25, 0.25, 0.25}));
    CHECK_FALSE(pair_entangled(PairCoefficients{0.5, 0.3, 0.1, 0.1}));  // boundary

    const Graph lin = make_lattice(LatticeKind::linear, {6});
    const PairCoefficients at_paper = reduced_pair_state(lin, noise_from_p(0.717), 2, 3);
    CHECK(at_paper.q00 == doctest::Approx(0.50037).epsilon(1e-4));
    CHECK(pair_entangled(at_paper));
}

TEST_CASE("pair thresholds against independent polynomial roots") {
    const Graph lin = make_lattice(LatticeKind::linear, {10});
    const Threshold tl = pair_threshold(lin, 4, 5);
    const double root_lin =
        bisect([](double p) { return 2.0 * std::pow(p, 3) + std::pow(p, 4) - 1.0; }, 0.1,
               0.999, 1e-13);
    CHECK(tl.p == doctest::Approx(root_lin).epsilon(1e-9));
    CHECK(tl.p == doctest::Approx(0.717).epsilon(7.1e-4));
    CHECK(tl.kappa_t == doctest::Approx(0.3327).epsilon(1.6e-3));

    const Graph grid = make_lattice(LatticeKind::grid2d, {5, 5});
    const Threshold t2 = pair_threshold(grid, 11, 12);
    const double root_2d =
        bisect([](double p) { return 2.0 * std::pow(p, 5) + std::pow(p, 8) - 1.0; }, 0.1,
               0.999, 1e-13);
    CHECK(t2.p == doctest::Approx(root_2d).epsilon(1e-9));

    const Graph cube = make_lattice(LatticeKind::grid3d, {4, 3, 3});
    const auto pair3 = interior_pair(cube);
    CHECK(cube.degree(pair3.first) == 6);
    CHECK(cube.degree(pair3.second) == 6);
    const Threshold t3 = pair_threshold(cube, pair3.first, pair3.second);
    const double root_3d =
        bisect([](double p) { return 2.0 * std::pow(p, 7) + std::pow(p, 12) - 1.0; }, 0.1,
               0.999, 1e-13);
    CHECK(t3.p == doctest::Approx(root_3d).epsilon(1e-9));
}

TEST_CASE("disjoint-neighborhood closed form") {
    CHECK(disjoint_pair_coefficient(1, 1, noise_from_p(0.717)) ==
          doctest::Approx(0.50037).epsilon(1e-4));
    CHECK(disjoint_pair_coefficient(3, 3, noise_from_p(1.0)) == doctest::Approx(1.0));
    CHECK(disjoint_pair_coefficient(0, 0, noise_from_p(0.4)) ==
          doctest::Approx((1.0 + 3.0 * 0.16) / 4.0).epsilon(1e-13));

    // threshold of the n=3 case solves p^5 (2 + p^3) = 1
    const double root = bisect(
        [](double p) { return std::pow(p, 5) * (2.0 + std::pow(p, 3)) - 1.0; }, 0.1, 0.999,
        1e-12);
    CHECK(root == doctest::Approx(0.8281).epsilon(1e-4));
    CHECK(disjoint_pair_coefficient(3, 3, noise_from_p(root)) ==
          doctest::Approx(0.5).epsilon(1e-10));

    // closed form tracks the convolution across a p grid
    const Graph lin = make_lattice(LatticeKind::linear, {8});
    for (int i = 1; i <= 100; ++i) {
        const double p = i / 101.0;
        CHECK(std::abs(reduced_pair_state(lin, noise_from_p(p), 3, 4).q00 -
                       disjoint_pair_coefficient(1, 1, noise_from_p(p))) <= 1e-12);
    }
}

TEST_CASE("degree bound values and ordering") {
    CHECK(degree_bound(2, 2) == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-14));
    CHECK(degree_bound(4, 4) == doctest::Approx(std::log(2.0) / 5.0).epsilon(1e-14));
    CHECK(degree_bound(6, 6) == doctest::Approx(std::log(2.0) / 7.0).epsilon(1e-14));

    const Graph lin = make_lattice(LatticeKind::linear, {10});
    CHECK(degree_bound(2, 2) <= pair_threshold(lin, 4, 5).kappa_t);
}

TEST_CASE("separability bound") {
    CHECK(separability_bound(2) == doctest::Approx(3.52549).epsilon(1e-5));
    CHECK(separability_bound(4) == doctest::Approx(7.05099).epsilon(1e-5));

    const Graph lin = make_lattice(LatticeKind::linear, {10});
    CHECK(separability_bound(2) > pair_threshold(lin, 4, 5).kappa_t);
}

TEST_SUITE_END();
