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

#ifndef ENTLIFE_GRAPH_HPP
#define ENTLIFE_GRAPH_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entlife/noise.hpp"

namespace entlife {

// Simple undirected interaction graph: no self-loops, no duplicate edges,
// vertex indices in [0, n).
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes the edge list (i < j, sorted).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int a, int b) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class LatticeKind { linear, ring, grid2d, grid3d, star };

// Canonical lattice graphs. dims: {n} for linear/ring/star, {rows, cols} for
// grid2d, {nx, ny, nz} for grid3d; grid vertices are indexed row-major.
Graph make_lattice(LatticeKind kind, const std::vector<int>& dims);
// Custom graph from an explicit edge list; vertex count inferred as
// max index + 1 unless n_hint is larger.
Graph make_custom(const std::vector<std::pair<int, int>>& edges, int n_hint = 0);

LatticeKind lattice_kind_from_name(const std::string& name);

// Plain-text graph format: one edge per line as "i j"; lines starting with
// '#' are ignored; an optional "n <count>" line pins the vertex count.
Graph parse_graph_file(std::istream& in);
std::string write_graph_file(const Graph& g);

// An adjacent pair with the most interior (highest minimum-degree) vertices;
// ties broken toward higher total degree, then lowest indices.
std::pair<int, int> interior_pair(const Graph& g);

// Correlation operator of vertex j: X at j, Z at each neighbor, I elsewhere.
// Graph states are the joint +-1 eigenstates of these.
PauliString correlation_operator(const Graph& g, int j);

// A product of sigma_z operators over a vertex subset. Composition is
// symmetric difference: order independent and self inverse.
struct ZPattern {
    std::vector<int> support;  // sorted, unique

    static ZPattern of(std::vector<int> vertices);  // sorts and dedups
    bool contains(int v) const;
    ZPattern compose(const ZPattern& other) const;  // symmetric difference

    auto operator<=>(const ZPattern&) const = default;
};

// Label of a graph-basis state; a Z-pattern flips exactly the labels in its
// support.
struct GraphBasisIndex {
    std::vector<std::uint8_t> mu;

    explicit GraphBasisIndex(int n) : mu(static_cast<std::size_t>(n), 0) {}
    void flip(const ZPattern& z);
};

// Probability distribution over Z-patterns: the action of Pauli-diagonal
// noise on states diagonal in the graph basis. Composition of two maps is
// the XOR-convolution of their term distributions.
struct ZPatternMap {
    int n = 0;
    std::map<ZPattern, double> terms;

    double weight_sum() const;
    ZPatternMap compose(const ZPatternMap& other) const;
};

// The Z-pattern equivalent of one Pauli letter acting at vertex j on a
// graph-diagonal state: I -> {}, Z -> {j}, X -> N(j), Y -> {j} u N(j).
ZPattern pauli_to_zpattern(const Graph& g, int j, Pauli letter);

// The depolarizing channel at vertex j as a Z-pattern map: {} with weight
// p + (1-p)/4 and each of {j}, N(j), {j} u N(j) with weight (1-p)/4,
// duplicate patterns merged.
ZPatternMap depolarizing_zmap(const Graph& g, int j, NoiseParameter np);

// Site-wise conversion of a Pauli-diagonal channel, patterns composed by
// symmetric difference. Throws std::invalid_argument on a dimension mismatch.
ZPatternMap channel_to_zmap(const Graph& g, const PauliDiagonalChannel& chan);

// Coefficients of the Bell-diagonal two-qubit state left on a neighboring
// pair after measuring out the rest: probabilities of (Z^a x Z^b) applied to
// the reference pair state. Nonnegative, sum 1.
struct PairCoefficients {
    double q00 = 0, q01 = 0, q10 = 0, q11 = 0;

    double max_coefficient() const;
    std::array<double, 4> as_array() const { return {q00, q01, q10, q11}; }
};

// 4-point character transform over Z2 x Z2, distributions indexed a*2 + b.
// Involutive up to a factor 4; the transform of an XOR-convolution is the
// componentwise product of transforms.
std::array<double, 4> character_transform4(const std::array<double, 4>& w);
std::array<double, 4> inverse_character_transform4(const std::array<double, 4>& wh);

// Reduced state of the pair (k,l) in E after measuring all other particles:
// collects the depolarizing Z-maps of {k,l} u N(k) u N(l), restricts each
// pattern to (hits k, hits l) and XOR-convolves over Z2 x Z2 via the
// character transform. Handles common neighbors; cost is O(local degree),
// independent of the total vertex count.
PairCoefficients reduced_pair_state(const Graph& g, NoiseParameter np, int k, int l);

// Bell-diagonal distillability: true iff the largest coefficient exceeds 1/2
// strictly (equality is the positive-partial-transpose boundary).
bool pair_entangled(const PairCoefficients& q);

// Noise threshold below which the pair (k,l) stops being distillable:
// bisection on the largest coefficient crossing 1/2, to 1e-10 in p.
// For p above the threshold maximally entangled pairs can be distilled
// between arbitrary neighbors, so the whole graph state stays N-party
// distillable.
Threshold pair_threshold(const Graph& g, int k, int l);

// Closed form of the largest pair coefficient when the two vertices have
// disjoint neighborhoods with n_k (resp. n_j) neighbors besides each other:
// p^2/4 [(1+p^n_k)(1+p^n_j)] + (1-p^2)/4.
double disjoint_pair_coefficient(int n_k, int n_j, NoiseParameter np);

// Sufficient distillability bound: for kappa_t <= ln2 / (floor(m/2) + 2)
// with m = d_k + d_j - 2 the pair is certainly distillable.
double degree_bound(int d_k, int d_j);

// For a graph of vertex degree at most m, the state is fully separable on
// every partition once kappa_t >= -2 m ln(sqrt2 - 1).
double separability_bound(int m);

}  // namespace entlife

#endif
