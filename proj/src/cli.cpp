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

#include "entlife/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "entlife/errors.hpp"
#include "entlife/ghz.hpp"
#include "entlife/graph.hpp"
#include "entlife/noise.hpp"
#include "entlife/oracle.hpp"
#include "entlife/table.hpp"

namespace entlife::cli {

namespace {

constexpr double kMinP = 1e-12;

// Deterministic data-parallel map: each index writes its own slot, so the
// output order never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw ? hw : 1, count / 64);
    if (workers < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct NoiseOpts {
    double p = 0.0;
    double kt = 0.0;
    CLI::Option* p_opt = nullptr;
    CLI::Option* kt_opt = nullptr;

    void attach(CLI::App* cmd) {
        p_opt = cmd->add_option("--p", p, "survival parameter in (0,1]");
        kt_opt = cmd->add_option("--kt", kt, "dimensionless time kappa*t");
        p_opt->excludes(kt_opt);
        kt_opt->excludes(p_opt);
    }

    NoiseParameter resolve(std::ostream& err) const {
        double pv;
        if (p_opt->count()) {
            pv = p;
        } else if (kt_opt->count()) {
            if (kt < 0.0 || !std::isfinite(kt)) {
                throw std::domain_error("--kt must be finite and >= 0");
            }
            pv = std::exp(-kt);
        } else {
            throw std::invalid_argument("one of --p or --kt is required");
        }
        if (!std::isfinite(pv) || pv < 0.0 || pv > 1.0) {
            throw std::domain_error("--p must lie in [0, 1]");
        }
        if (pv < kMinP) {
            err << "note: p clamped to " << kMinP << " (requested " << pv << ")\n";
            pv = kMinP;
        }
        return noise_from_p(pv);
    }

    std::pair<std::string, std::string> param() const {
        if (p_opt->count()) return {"p", format_number(p)};
        return {"kt", format_number(kt)};
    }
};

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, 'x')) {
        dims.push_back(std::stoi(token));
    }
    return dims;
}

struct GraphOpts {
    std::string lattice;
    std::string dims_text;
    int length = 0;
    std::string file;
    std::vector<int> pair;
    CLI::Option* lattice_opt = nullptr;
    CLI::Option* dims_opt = nullptr;
    CLI::Option* length_opt = nullptr;
    CLI::Option* file_opt = nullptr;
    CLI::Option* pair_opt = nullptr;

    void attach(CLI::App* cmd, bool with_pair) {
        lattice_opt = cmd->add_option("--lattice", lattice,
                                      "lattice kind: linear|ring|grid2d|grid3d|star");
        dims_opt = cmd->add_option("--dims", dims_text, "dimensions, e.g. 10 or 5x5 or 4x3x3");
        length_opt = cmd->add_option("--length", length, "vertex count for 1-d lattices");
        file_opt = cmd->add_option("--graph-file", file, "edge-list graph file");
        file_opt->excludes(lattice_opt);
        if (with_pair) {
            pair_opt = cmd->add_option("--pair", pair, "pair of adjacent vertices k l")
                           ->expected(2);
        }
    }

    Graph build() const {
        if (file_opt->count()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open graph file: " + file);
            return parse_graph_file(in);
        }
        if (!lattice_opt->count()) {
            throw std::invalid_argument("one of --lattice or --graph-file is required");
        }
        std::vector<int> dims;
        if (length_opt->count()) dims.push_back(length);
        if (dims_opt->count()) {
            if (!dims.empty()) throw std::invalid_argument("--dims and --length are exclusive");
            dims = parse_dims(dims_text);
        }
        if (dims.empty()) throw std::invalid_argument("lattice dimensions are required");
        return make_lattice(lattice_kind_from_name(lattice), dims);
    }

    std::pair<int, int> resolve_pair(const Graph& g) const {
        if (pair_opt != nullptr && pair_opt->count()) return {pair.at(0), pair.at(1)};
        return interior_pair(g);
    }

    void describe(std::vector<std::pair<std::string, std::string>>& params) const {
        if (file_opt->count()) {
            params.emplace_back("graph-file", file);
        } else if (lattice_opt->count()) {
            params.emplace_back("lattice", lattice);
            if (length_opt->count()) params.emplace_back("length", std::to_string(length));
            if (dims_opt->count()) params.emplace_back("dims", dims_text);
        }
    }
};

void emit(std::ostream& out, const ResultTable& t, const std::string& format) {
    out << emit_table(t, format_from_name(format));
}

// ---------------------------------------------------------------------------
// oracle verify suites

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

void add_check(std::vector<Check>& cs, std::string name, bool pass, std::string detail) {
    cs.push_back(Check{std::move(name), pass, std::move(detail)});
}

std::vector<Check> verify_ghz() {
    std::vector<Check> cs;

    double worst_coeff = 0.0;
    double worst_offdiag = 0.0;
    for (int n = 2; n <= 5; ++n) {
        for (double p : {0.3, 0.6, 0.9}) {
            oracle::DensityMatrix rho = oracle::ghz_state(n);
            oracle::apply_depolarizing_all(rho, noise_from_p(p));
            const auto coeffs = oracle::ghz_coefficients(rho);
            const GhzSpectrum spec(n, noise_from_p(p));
            for (std::size_t kappa = 0; kappa < coeffs.plus.size(); ++kappa) {
                const int k = std::popcount(kappa);
                const double lp = (k == 0) ? spec.lambda0_plus() : spec.lambda(k);
                const double lm = (k == 0) ? spec.lambda0_minus() : spec.lambda(k);
                worst_coeff = std::max(worst_coeff, std::abs(coeffs.plus[kappa] - lp));
                worst_coeff = std::max(worst_coeff, std::abs(coeffs.minus[kappa] - lm));
            }
            worst_offdiag = std::max(worst_offdiag, oracle::ghz_offdiag_max(rho));
        }
    }
    add_check(cs, "ghz basis coefficients match analytic (n<=5)", worst_coeff <= 1e-12,
              "max dev " + format_number(worst_coeff));
    add_check(cs, "state is diagonal in ghz basis", worst_offdiag <= 1e-12,
              "max offdiag " + format_number(worst_offdiag));

    int mismatches = 0;
    int checked = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n / 2; ++k) {
            for (int i = 0; i < 25; ++i) {
                const double p = 0.02 + i * (0.96 / 24.0);
                oracle::DensityMatrix rho = oracle::ghz_state(n);
                oracle::apply_depolarizing_all(rho, noise_from_p(p));
                std::vector<int> side(static_cast<std::size_t>(k));
                for (int q = 0; q < k; ++q) side[static_cast<std::size_t>(q)] = q;
                const double eig = oracle::min_pt_eigenvalue(rho, oracle::BipartitionCut{side});
                const bool oracle_positive = eig >= -oracle::kEigSignTol;
                if (oracle_positive != ppt_positive(n, noise_from_p(p), k)) ++mismatches;
                ++checked;
            }
        }
    }
    add_check(cs, "pt sign agrees with analytic condition (n<=6)", mismatches == 0,
              std::to_string(mismatches) + "/" + std::to_string(checked) + " mismatches");

    oracle::DensityMatrix rho2 = oracle::ghz_state(2);
    oracle::apply_depolarizing_all(rho2, noise_from_p(1.0 / std::sqrt(3.0)));
    const double boundary = oracle::min_pt_eigenvalue(rho2, oracle::BipartitionCut{{0}});
    add_check(cs, "two-qubit pt boundary sits at p = 3^(-1/2)", std::abs(boundary) <= 1e-10,
              "min pt eigenvalue " + format_number(boundary));
    return cs;
}

std::vector<Check> verify_cluster() {
    std::vector<Check> cs;

    double worst_stab = 0.0;
    const Graph graphs[] = {make_lattice(LatticeKind::linear, {6}),
                            make_lattice(LatticeKind::star, {5}),
                            make_lattice(LatticeKind::grid2d, {2, 3})};
    for (const Graph& g : graphs) {
        const oracle::DensityMatrix rho = oracle::build_graph_state(g);
        for (int j = 0; j < g.n(); ++j) {
            const double ev = oracle::pauli_expectation(rho, correlation_operator(g, j));
            worst_stab = std::max(worst_stab, std::abs(ev - 1.0));
        }
    }
    add_check(cs, "graph states satisfy their eigenvalue equations", worst_stab <= 1e-12,
              "max |<K_j> - 1| " + format_number(worst_stab));

    double worst_conj = 0.0;
    const Graph small[] = {make_lattice(LatticeKind::linear, {4}),
                           make_lattice(LatticeKind::star, {4}),
                           make_custom({{0, 1}, {1, 2}, {0, 2}})};
    for (const Graph& g : small) {
        const oracle::DensityMatrix rho = oracle::build_graph_state(g);
        for (int j = 0; j < g.n(); ++j) {
            for (Pauli letter : {Pauli::X, Pauli::Y, Pauli::Z}) {
                oracle::DensityMatrix lhs = rho;
                oracle::conjugate_pauli(lhs, PauliString::single(g.n(), j, letter));
                oracle::DensityMatrix rhs = rho;
                PauliString zprod = PauliString::identity(g.n());
                for (int v : pauli_to_zpattern(g, j, letter).support) {
                    zprod.letters[static_cast<std::size_t>(v)] = Pauli::Z;
                }
                oracle::conjugate_pauli(rhs, zprod);
                worst_conj = std::max(worst_conj,
                                      (lhs.mat() - rhs.mat()).cwiseAbs().maxCoeff());
            }
        }
    }
    add_check(cs, "pauli action equals its z-pattern on graph states", worst_conj <= 1e-12,
              "max operator dev " + format_number(worst_conj));

    double worst_pair = 0.0;
    for (int n : {4, 6}) {
        const Graph g = make_lattice(LatticeKind::linear, {n});
        const int k = n / 2 - 1, l = n / 2;
        for (double p : {0.5, 0.8}) {
            oracle::DensityMatrix rho = oracle::build_graph_state(g);
            oracle::apply_depolarizing_all(rho, noise_from_p(p));
            const auto meas = oracle::bell_coefficients(oracle::measure_and_reduce(rho, g, k, l));
            const auto calc = reduced_pair_state(g, noise_from_p(p), k, l);
            for (int i = 0; i < 4; ++i) {
                worst_pair = std::max(worst_pair,
                                      std::abs(meas.as_array()[static_cast<std::size_t>(i)] -
                                               calc.as_array()[static_cast<std::size_t>(i)]));
            }
        }
    }
    add_check(cs, "measurement reduction matches the pair calculus", worst_pair <= 1e-10,
              "max coefficient dev " + format_number(worst_pair));
    return cs;
}

std::vector<Check> verify_pair() {
    std::vector<Check> cs;

    const Graph chain5 = make_lattice(LatticeKind::linear, {5});
    oracle::DensityMatrix rho5 = oracle::build_graph_state(chain5);
    oracle::apply_depolarizing_all(rho5, noise_from_p(0.8));
    double worst_branch = 0.0;
    oracle::DensityMatrix ref = oracle::measure_branch(rho5, chain5, 1, 2, 0);
    for (unsigned m = 1; m < 8; ++m) {
        const oracle::DensityMatrix b = oracle::measure_branch(rho5, chain5, 1, 2, m);
        worst_branch = std::max(worst_branch, (b.mat() - ref.mat()).cwiseAbs().maxCoeff());
    }
    add_check(cs, "all corrected measurement branches coincide", worst_branch <= 1e-10,
              "max branch dev " + format_number(worst_branch));

    const Graph triangle = make_custom({{0, 1}, {1, 2}, {0, 2}});
    oracle::DensityMatrix rho3 = oracle::build_graph_state(triangle);
    oracle::apply_depolarizing_all(rho3, noise_from_p(0.9));
    const auto meas = oracle::bell_coefficients(oracle::measure_and_reduce(rho3, triangle, 0, 1));
    const auto calc = reduced_pair_state(triangle, noise_from_p(0.9), 0, 1);
    double tri_dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        tri_dev = std::max(tri_dev, std::abs(meas.as_array()[i] - calc.as_array()[i]));
    }
    add_check(cs, "common-neighbor pair matches dense reduction", tri_dev <= 1e-10,
              "max coefficient dev " + format_number(tri_dev));

    double worst_closed = 0.0;
    const Graph chain = make_lattice(LatticeKind::linear, {8});
    const Graph grid = make_lattice(LatticeKind::grid2d, {5, 5});
    const auto gpair = interior_pair(grid);
    for (int i = 1; i <= 50; ++i) {
        const double p = i / 51.0;
        const auto np = noise_from_p(p);
        worst_closed = std::max(worst_closed,
                                std::abs(reduced_pair_state(chain, np, 3, 4).q00 -
                                         disjoint_pair_coefficient(1, 1, np)));
        worst_closed = std::max(
            worst_closed, std::abs(reduced_pair_state(grid, np, gpair.first, gpair.second).q00 -
                                   disjoint_pair_coefficient(3, 3, np)));
    }
    add_check(cs, "closed form matches the pair calculus", worst_closed <= 1e-12,
              "max dev " + format_number(worst_closed));
    return cs;
}

std::vector<Check> verify_choi(double lo, double hi, double step) {
    std::vector<Check> cs;

    const double at_low = oracle::choi_min_pt_eigenvalue(0.1);
    const double at_one = oracle::choi_min_pt_eigenvalue(1.0);
    add_check(cs, "weak dephasing leaves the edge map ppt", at_low >= -1e-10,
              "min pt eigenvalue " + format_number(at_low));
    add_check(cs, "undamped edge map is npt", at_one < -1e-3,
              "min pt eigenvalue " + format_number(at_one));

    std::vector<double> grid;
    for (double p = lo; p <= hi + 0.5 * step; p += step) grid.push_back(p);
    const auto crossing = oracle::choi_pt_crossing(grid);
    if (crossing) {
        add_check(cs, "ppt crossing located on the grid", true,
                  "estimate " + format_number(crossing->estimate) + " in [" +
                      format_number(crossing->p_lo) + ", " + format_number(crossing->p_hi) +
                      "]");
    } else {
        add_check(cs, "ppt crossing located on the grid", false, "no sign change on grid");
    }

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst_compose = 0.0;
    for (double p : {0.25, 0.717}) {
        for (int rep = 0; rep < 5; ++rep) {
            Eigen::Matrix2cd a;
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) a(r, c) = {unif(rng), unif(rng)};
            }
            Eigen::Matrix2cd herm = a * a.adjoint();
            herm /= herm.trace().real();
            oracle::DensityMatrix direct(1);
            direct.mat() = herm;
            oracle::DensityMatrix composed = direct;
            oracle::depolarize_qubit(direct, 0, p);
            const auto dec = dephasing_decomposition(noise_from_p(p));
            oracle::dephase_qubit(composed, 0, Pauli::X, dec.p_x);
            oracle::dephase_qubit(composed, 0, Pauli::Y, dec.p_y);
            oracle::dephase_qubit(composed, 0, Pauli::Z, dec.p_z);
            worst_compose = std::max(worst_compose,
                                     (direct.mat() - composed.mat()).cwiseAbs().maxCoeff());
        }
    }
    add_check(cs, "three dephasings compose to depolarizing", worst_compose <= 1e-12,
              "max channel dev " + format_number(worst_compose));
    return cs;
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entanglement lifetimes of noisy GHZ and graph states"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- ghz ----
    auto* ghz_cmd = app.add_subcommand("ghz", "GHZ-state lifetime analysis");
    ghz_cmd->require_subcommand(1);

    {
        auto* c = ghz_cmd->add_subcommand("spectrum", "GHZ-basis spectrum after noise");
        auto n = std::make_shared<int>(0);
        auto max_k = std::make_shared<int>(32);
        auto fmt = std::make_shared<std::string>("plain");
        auto noise = std::make_shared<NoiseOpts>();
        c->add_option("--n", *n, "particle count")->required();
        noise->attach(c);
        c->add_option("--max-k", *max_k, "largest weight to list");
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out, &err] {
            const auto np = noise->resolve(err);
            const GhzSpectrum spec(*n, np);
            ResultTable t;
            t.command = "ghz spectrum";
            t.params = {{"n", std::to_string(*n)}, noise->param()};
            t.columns = {"k", "lambda", "log_lambda"};
            t.add_row({std::string("0+"), spec.lambda0_plus(), spec.log_lambda0_plus()});
            t.add_row({std::string("0-"), spec.lambda0_minus(), spec.log_lambda0_minus()});
            const int hi = std::min(*n - 1, *max_k);
            for (int k = 1; k <= hi; ++k) {
                t.add_row({std::to_string(k), spec.lambda(k), spec.log_lambda(k)});
            }
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = ghz_cmd->add_subcommand("lifetime", "critical noise for an m-particle group");
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(1);
        auto fmt = std::make_shared<std::string>("plain");
        c->add_option("--n", *n, "particle count")->required();
        c->add_option("--m", *m, "smallest group size (default 1)");
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            const Threshold th = group_lifetime(*n, *m);
            ResultTable t;
            t.command = "ghz lifetime";
            t.params = {{"n", std::to_string(*n)}, {"m", std::to_string(*m)}};
            t.columns = {"N", "m", "p_crit", "kappa_t_crit"};
            t.add_row({static_cast<long>(*n), static_cast<long>(*m), th.p, th.kappa_t});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = ghz_cmd->add_subcommand("mbound", "party-count bounds at fixed noise");
        auto fmt = std::make_shared<std::string>("plain");
        auto noise = std::make_shared<NoiseOpts>();
        noise->attach(c);
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out, &err] {
            const auto np = noise->resolve(err);
            ResultTable t;
            t.command = "ghz mbound";
            t.params = {noise->param()};
            t.columns = {"p", "kappa_t", "m_upper", "m_lower", "lower_guaranteed"};
            const auto upper = upper_bound_m(np);
            const auto lower = lower_bound_m(np);
            const Cell upper_cell = upper.unbounded ? Cell(std::string("inf")) : Cell(upper.m);
            const Cell lower_cell = lower.unbounded ? Cell(std::string("inf")) : Cell(lower.m);
            t.add_row({np.p, np.kappa_t, upper_cell, lower_cell,
                       std::string(lower.guaranteed ? "yes" : "no")});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = ghz_cmd->add_subcommand("mlifetime", "lifetime of M-party entanglement");
        auto m = std::make_shared<long>(0);
        auto fmt = std::make_shared<std::string>("plain");
        c->add_option("--m", *m, "group count M >= 2")->required();
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            ResultTable t;
            t.command = "ghz mlifetime";
            t.params = {{"m", std::to_string(*m)}};
            t.columns = {"M", "kappa_tau"};
            t.add_row({*m, upper_bound_lifetime(*m)});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = ghz_cmd->add_subcommand("scan", "lifetime table over a range of M");
        auto m_from = std::make_shared<long>(2);
        auto m_to = std::make_shared<long>(0);
        auto fmt = std::make_shared<std::string>("plain");
        c->add_option("--m-from", *m_from, "first group count (default 2)");
        c->add_option("--m-to", *m_to, "last group count")->required();
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            if (*m_from < 2 || *m_to < *m_from) {
                throw std::domain_error("scan range must satisfy 2 <= m-from <= m-to");
            }
            const std::size_t count = static_cast<std::size_t>(*m_to - *m_from + 1);
            std::vector<double> kt(count);
            parallel_for(count, [&](std::size_t i) {
                kt[i] = upper_bound_lifetime(*m_from + static_cast<long>(i));
            });
            ResultTable t;
            t.command = "ghz scan";
            t.params = {{"m-from", std::to_string(*m_from)}, {"m-to", std::to_string(*m_to)}};
            t.columns = {"M", "kappa_tau"};
            for (std::size_t i = 0; i < count; ++i) {
                t.add_row({*m_from + static_cast<long>(i), kt[i]});
            }
            emit(out, t, *fmt);
        });
    }

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "graph-state pair analysis");
    graph_cmd->require_subcommand(1);

    {
        auto* c = graph_cmd->add_subcommand("pair-threshold",
                                            "distillability threshold of a neighboring pair");
        auto gopts = std::make_shared<GraphOpts>();
        auto fmt = std::make_shared<std::string>("plain");
        gopts->attach(c, true);
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            const Graph g = gopts->build();
            const auto [k, l] = gopts->resolve_pair(g);
            const Threshold th = pair_threshold(g, k, l);
            ResultTable t;
            t.command = "graph pair-threshold";
            gopts->describe(t.params);
            t.params.emplace_back("pair", std::to_string(k) + " " + std::to_string(l));
            t.columns = {"k", "l", "d_k", "d_l", "p_less", "kappa_t_less"};
            t.add_row({static_cast<long>(k), static_cast<long>(l),
                       static_cast<long>(g.degree(k)), static_cast<long>(g.degree(l)), th.p,
                       th.kappa_t});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = graph_cmd->add_subcommand("reduced-pair",
                                            "Bell-diagonal coefficients of a reduced pair");
        auto gopts = std::make_shared<GraphOpts>();
        auto noise = std::make_shared<NoiseOpts>();
        auto fmt = std::make_shared<std::string>("plain");
        gopts->attach(c, true);
        noise->attach(c);
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out, &err] {
            const Graph g = gopts->build();
            const auto np = noise->resolve(err);
            const auto [k, l] = gopts->resolve_pair(g);
            const PairCoefficients q = reduced_pair_state(g, np, k, l);
            ResultTable t;
            t.command = "graph reduced-pair";
            gopts->describe(t.params);
            t.params.emplace_back("pair", std::to_string(k) + " " + std::to_string(l));
            t.params.push_back(noise->param());
            t.columns = {"k", "l", "q00", "q01", "q10", "q11", "entangled"};
            t.add_row({static_cast<long>(k), static_cast<long>(l), q.q00, q.q01, q.q10, q.q11,
                       std::string(pair_entangled(q) ? "yes" : "no")});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = graph_cmd->add_subcommand("degree-bound",
                                            "guaranteed-distillability time from pair degrees");
        auto dk = std::make_shared<int>(0);
        auto dj = std::make_shared<int>(0);
        auto fmt = std::make_shared<std::string>("plain");
        auto dk_opt = c->add_option("--dk", *dk, "degree of the first vertex");
        auto dj_opt = c->add_option("--dj", *dj, "degree of the second vertex");
        dk_opt->needs(dj_opt);
        dj_opt->needs(dk_opt);
        auto gopts = std::make_shared<GraphOpts>();
        gopts->attach(c, true);
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            int a = *dk, b = *dj;
            if (!dk_opt->count()) {
                const Graph g = gopts->build();
                const auto [k, l] = gopts->resolve_pair(g);
                a = g.degree(k);
                b = g.degree(l);
            }
            ResultTable t;
            t.command = "graph degree-bound";
            t.params = {{"dk", std::to_string(a)}, {"dj", std::to_string(b)}};
            t.columns = {"d_k", "d_j", "kappa_t_bound"};
            t.add_row({static_cast<long>(a), static_cast<long>(b), degree_bound(a, b)});
            emit(out, t, *fmt);
        });
    }
    {
        auto* c = graph_cmd->add_subcommand("sep-bound",
                                            "full-separability time from the vertex degree");
        auto m = std::make_shared<int>(0);
        auto fmt = std::make_shared<std::string>("plain");
        auto m_opt = c->add_option("--m", *m, "vertex degree of the lattice");
        auto gopts = std::make_shared<GraphOpts>();
        gopts->attach(c, false);
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out] {
            int deg = *m;
            if (!m_opt->count()) deg = gopts->build().max_degree();
            ResultTable t;
            t.command = "graph sep-bound";
            t.params = {{"m", std::to_string(deg)}};
            t.columns = {"m", "kappa_t_greater"};
            t.add_row({static_cast<long>(deg), separability_bound(deg)});
            emit(out, t, *fmt);
        });
    }

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "dense brute-force verification");
    oracle_cmd->require_subcommand(1);
    {
        auto* c = oracle_cmd->add_subcommand("verify", "run a verification suite");
        auto suite = std::make_shared<std::string>();
        auto fmt = std::make_shared<std::string>("plain");
        auto pz_min = std::make_shared<double>(0.40);
        auto pz_max = std::make_shared<double>(0.43);
        auto pz_step = std::make_shared<double>(1e-3);
        c->add_option("--suite", *suite, "ghz|cluster|pair|choi")->required();
        c->add_option("--pz-min", *pz_min, "choi scan start");
        c->add_option("--pz-max", *pz_max, "choi scan end");
        c->add_option("--pz-step", *pz_step, "choi scan step");
        c->add_option("--format", *fmt, "plain|csv|json");
        c->callback([=, &out, &exit_code] {
            std::vector<Check> checks;
            if (*suite == "ghz") {
                checks = verify_ghz();
            } else if (*suite == "cluster") {
                checks = verify_cluster();
            } else if (*suite == "pair") {
                checks = verify_pair();
            } else if (*suite == "choi") {
                checks = verify_choi(*pz_min, *pz_max, *pz_step);
            } else {
                throw std::invalid_argument("unknown suite: " + *suite);
            }
            ResultTable t;
            t.command = "oracle verify";
            t.params = {{"suite", *suite}};
            t.columns = {"check", "status", "detail"};
            bool all_pass = true;
            for (const auto& ck : checks) {
                all_pass = all_pass && ck.pass;
                t.add_row({ck.name, std::string(ck.pass ? "pass" : "fail"), ck.detail});
            }
            emit(out, t, *fmt);
            if (!all_pass) exit_code = 2;
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }
    return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const numeric_error& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace entlife::cli
