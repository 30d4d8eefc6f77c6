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

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "entlife/bisect.hpp"

namespace entlife {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("Graph: vertex index out of range");
        }
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) {
            throw std::invalid_argument("Graph: duplicate edge");
        }
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(seen.begin(), seen.end());
    g.adj_.resize(static_cast<std::size_t>(n));
    for (const auto& [a, b] : g.edges_) {
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("Graph::neighbors: vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
    int m = 0;
    for (const auto& nb : adj_) m = std::max(m, static_cast<int>(nb.size()));
    return m;
}

bool Graph::has_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

Graph make_lattice(LatticeKind kind, const std::vector<int>& dims) {
    const auto need = [&](std::size_t count) {
        if (dims.size() != count) {
            throw std::invalid_argument("make_lattice: wrong number of dimensions");
        }
        for (int d : dims) {
            if (d < 1) throw std::invalid_argument("make_lattice: dimensions must be positive");
        }
    };
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case LatticeKind::linear: {
            need(1);
            const int n = dims[0];
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(n, std::move(edges));
        }
        case LatticeKind::ring: {
            need(1);
            const int n = dims[0];
            if (n < 3) throw std::invalid_argument("make_lattice: ring needs >= 3 vertices");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            return Graph::from_edges(n, std::move(edges));
        }
        case LatticeKind::star: {
            need(1);
            const int n = dims[0];
            if (n < 2) throw std::invalid_argument("make_lattice: star needs >= 2 vertices");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return Graph::from_edges(n, std::move(edges));
        }
        case LatticeKind::grid2d: {
            need(2);
            const int rows = dims[0], cols = dims[1];
            const auto at = [cols](int r, int c) { return r * cols + c; };
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c) {
                    if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
                    if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
                }
            }
            return Graph::from_edges(rows * cols, std::move(edges));
        }
        case LatticeKind::grid3d: {
            need(3);
            const int nx = dims[0], ny = dims[1], nz = dims[2];
            const auto at = [ny, nz](int x, int y, int z) { return (x * ny + y) * nz + z; };
            for (int x = 0; x < nx; ++x) {
                for (int y = 0; y < ny; ++y) {
                    for (int z = 0; z < nz; ++z) {
                        if (x + 1 < nx) edges.emplace_back(at(x, y, z), at(x + 1, y, z));
                        if (y + 1 < ny) edges.emplace_back(at(x, y, z), at(x, y + 1, z));
                        if (z + 1 < nz) edges.emplace_back(at(x, y, z), at(x, y, z + 1));
                    }
                }
            }
            return Graph::from_edges(nx * ny * nz, std::move(edges));
        }
    }
    throw std::invalid_argument("make_lattice: unknown lattice kind");
}

Graph make_custom(const std::vector<std::pair<int, int>>& edges, int n_hint) {
    int n = n_hint;
    for (const auto& [a, b] : edges) n = std::max({n, a + 1, b + 1});
    if (n < 1) throw std::invalid_argument("make_custom: empty graph");
    return Graph::from_edges(n, edges);
}

LatticeKind lattice_kind_from_name(const std::string& name) {
    if (name == "linear") return LatticeKind::linear;
    if (name == "ring") return LatticeKind::ring;
    if (name == "grid2d") return LatticeKind::grid2d;
    if (name == "grid3d") return LatticeKind::grid3d;
    if (name == "star") return LatticeKind::star;
    throw std::invalid_argument("unknown lattice kind: " + name);
}

Graph parse_graph_file(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n_hint = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "n") {
            if (!(ls >> n_hint) || n_hint < 1) {
                throw std::invalid_argument("graph file: bad vertex count at line " +
                                            std::to_string(lineno));
            }
            continue;
        }
        int a = 0, b = 0;
        std::istringstream es(line);
        if (!(es >> a >> b)) {
            throw std::invalid_argument("graph file: expected \"i j\" at line " +
                                        std::to_string(lineno));
        }
        edges.emplace_back(a, b);
    }
    if (edges.empty() && n_hint == 0) {
        throw std::invalid_argument("graph file: no edges and no vertex count");
    }
    return make_custom(edges, n_hint);
}

std::string write_graph_file(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& [a, b] : g.edges()) out << a << " " << b << "\n";
    return out.str();
}

std::pair<int, int> interior_pair(const Graph& g) {
    if (g.edges().empty()) throw std::invalid_argument("interior_pair: graph has no edges");
    std::pair<int, int> best = g.edges().front();
    int best_min = -1, best_sum = -1;
    for (const auto& [a, b] : g.edges()) {
        const int lo = std::min(g.degree(a), g.degree(b));
        const int sum = g.degree(a) + g.degree(b);
        if (lo > best_min || (lo == best_min && sum > best_sum)) {
            best = {a, b};
            best_min = lo;
            best_sum = sum;
        }
    }
    return best;
}

PauliString correlation_operator(const Graph& g, int j) {
    if (j < 0 || j >= g.n()) throw std::domain_error("correlation_operator: vertex out of range");
    PauliString s = PauliString::identity(g.n());
    s.letters[static_cast<std::size_t>(j)] = Pauli::X;
    for (int nb : g.neighbors(j)) s.letters[static_cast<std::size_t>(nb)] = Pauli::Z;
    return s;
}

ZPattern ZPattern::of(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return ZPattern{std::move(vertices)};
}

bool ZPattern::contains(int v) const {
    return std::binary_search(support.begin(), support.end(), v);
}

ZPattern ZPattern::compose(const ZPattern& other) const {
    std::vector<int> out;
    std::set_symmetric_difference(support.begin(), support.end(), other.support.begin(),
                                  other.support.end(), std::back_inserter(out));
    return ZPattern{std::move(out)};
}

void GraphBasisIndex::flip(const ZPattern& z) {
    for (int v : z.support) {
        mu.at(static_cast<std::size_t>(v)) ^= 1;
    }
}

double ZPatternMap::weight_sum() const {
    double s = 0.0;
    for (const auto& [z, w] : terms) s += w;
    return s;
}

ZPatternMap ZPatternMap::compose(const ZPatternMap& other) const {
    if (n != other.n) throw std::invalid_argument("ZPatternMap::compose: size mismatch");
    ZPatternMap out;
    out.n = n;
    for (const auto& [za, wa] : terms) {
        for (const auto& [zb, wb] : other.terms) {
            out.terms[za.compose(zb)] += wa * wb;
        }
    }
    return out;
}

ZPattern pauli_to_zpattern(const Graph& g, int j, Pauli letter) {
    if (j < 0 || j >= g.n()) throw std::domain_error("pauli_to_zpattern: vertex out of range");
    switch (letter) {
        case Pauli::I: return ZPattern{};
        case Pauli::Z: return ZPattern::of({j});
        case Pauli::X: return ZPattern{g.neighbors(j)};
        case Pauli::Y: {
            std::vector<int> s = g.neighbors(j);
            s.push_back(j);
            return ZPattern::of(std::move(s));
        }
    }
    throw std::invalid_argument("pauli_to_zpattern: bad letter");
}

ZPatternMap depolarizing_zmap(const Graph& g, int j, NoiseParameter np) {
    const double b = (1.0 - np.p) / 4.0;
    ZPatternMap out;
    out.n = g.n();
    out.terms[ZPattern{}] += np.p + b;
    out.terms[pauli_to_zpattern(g, j, Pauli::Z)] += b;
    out.terms[pauli_to_zpattern(g, j, Pauli::X)] += b;
    out.terms[pauli_to_zpattern(g, j, Pauli::Y)] += b;
    return out;
}

ZPatternMap channel_to_zmap(const Graph& g, const PauliDiagonalChannel& chan) {
    if (chan.n != g.n()) throw std::invalid_argument("channel_to_zmap: dimension mismatch");
    ZPatternMap out;
    out.n = g.n();
    for (const auto& [ps, w] : chan.terms) {
        ZPattern z;
        for (int site = 0; site < ps.n(); ++site) {
            z = z.compose(pauli_to_zpattern(g, site, ps.at(site)));
        }
        out.terms[z] += w;
    }
    return out;
}

double PairCoefficients::max_coefficient() const {
    return std::max({q00, q01, q10, q11});
}

std::array<double, 4> character_transform4(const std::array<double, 4>& w) {
    // Characters of Z2 x Z2: chi_s(a) = (-1)^popcount(s & a).
    return {w[0] + w[1] + w[2] + w[3], w[0] - w[1] + w[2] - w[3],
            w[0] + w[1] - w[2] - w[3], w[0] - w[1] - w[2] + w[3]};
}

std::array<double, 4> inverse_character_transform4(const std::array<double, 4>& wh) {
    auto w = character_transform4(wh);
    for (double& x : w) x *= 0.25;
    return w;
}

namespace {

// Depolarizing map of vertex v, restricted to the pair (k, l): weights over
// (pattern hits k, pattern hits l) with index a*2 + b.
std::array<double, 4> restricted_vertex_map(const Graph& g, int v, int k, int l, double p) {
    const double b = (1.0 - p) / 4.0;
    const auto restrict_to_pair = [&](const ZPattern& z) {
        return (z.contains(k) ? 2 : 0) | (z.contains(l) ? 1 : 0);
    };
    std::array<double, 4> w{0.0, 0.0, 0.0, 0.0};
    w[0] += p + b;
    w[static_cast<std::size_t>(restrict_to_pair(pauli_to_zpattern(g, v, Pauli::Z)))] += b;
    w[static_cast<std::size_t>(restrict_to_pair(pauli_to_zpattern(g, v, Pauli::X)))] += b;
    w[static_cast<std::size_t>(restrict_to_pair(pauli_to_zpattern(g, v, Pauli::Y)))] += b;
    return w;
}

PairCoefficients reduced_pair_at(const Graph& g, double p, int k, int l) {
    // Only k, l and their neighbors can produce patterns touching the pair.
    std::vector<int> region = {k, l};
    region.insert(region.end(), g.neighbors(k).begin(), g.neighbors(k).end());
    region.insert(region.end(), g.neighbors(l).begin(), g.neighbors(l).end());
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());

    std::array<double, 4> prod{1.0, 1.0, 1.0, 1.0};
    for (int v : region) {
        const auto wh = character_transform4(restricted_vertex_map(g, v, k, l, p));
        for (std::size_t s = 0; s < 4; ++s) prod[s] *= wh[s];
    }
    const auto q = inverse_character_transform4(prod);
    return PairCoefficients{q[0], q[1], q[2], q[3]};
}

}  // namespace

PairCoefficients reduced_pair_state(const Graph& g, NoiseParameter np, int k, int l) {
    if (!g.has_edge(k, l)) {
        throw std::domain_error("reduced_pair_state: (k, l) must be an edge");
    }
    return reduced_pair_at(g, np.p, k, l);
}

bool pair_entangled(const PairCoefficients& q) { return q.max_coefficient() > 0.5; }

Threshold pair_threshold(const Graph& g, int k, int l) {
    if (!g.has_edge(k, l)) {
        throw std::domain_error("pair_threshold: (k, l) must be an edge");
    }
    const auto f = [&](double p) {
        return reduced_pair_at(g, p, k, l).max_coefficient() - 0.5;
    };
    const double root = bisect(f, 1e-6, 1.0 - 1e-12, 1e-10);
    return Threshold{root, -std::log(root)};
}

double disjoint_pair_coefficient(int n_k, int n_j, NoiseParameter np) {
    if (n_k < 0 || n_j < 0) {
        throw std::domain_error("disjoint_pair_coefficient: neighbor counts must be >= 0");
    }
    const double p = np.p;
    return p * p / 4.0 * (1.0 + std::pow(p, n_k)) * (1.0 + std::pow(p, n_j)) +
           (1.0 - p * p) / 4.0;
}

double degree_bound(int d_k, int d_j) {
    if (d_k < 1 || d_j < 1) throw std::domain_error("degree_bound: degrees must be >= 1");
    const int m = d_k + d_j - 2;
    return kLn2 / (m / 2 + 2);
}

double separability_bound(int m) {
    if (m < 1) throw std::domain_error("separability_bound: degree must be >= 1");
    return -2.0 * m * std::log(std::numbers::sqrt2 - 1.0);
}

}  // namespace entlife
