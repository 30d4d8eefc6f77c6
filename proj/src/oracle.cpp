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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "entlife/errors.hpp"

namespace entlife::oracle {

namespace {

using cd = std::complex<double>;

// Qubit q owns bit (n-1-q) of a basis index.
std::uint64_t qubit_bit(int n, int q) { return 1ULL << (n - 1 - q); }

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

void check_qubit(const DensityMatrix& rho, int q, const char* who) {
    if (q < 0 || q >= rho.n()) {
        throw std::domain_error(std::string(who) + ": qubit index out of range");
    }
}

// Masks describing conjugation by a Pauli string: indices flip by xflip and
// pick up (-1)^popcount(index & zsign); the i factors of Y cancel between
// ket and bra.
struct PauliMasks {
    std::uint64_t xflip = 0;
    std::uint64_t zsign = 0;
    int y_count = 0;
};

PauliMasks masks_of(const PauliString& ps) {
    PauliMasks m;
    const int n = ps.n();
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_bit(n, q);
        switch (ps.at(q)) {
            case Pauli::I: break;
            case Pauli::X: m.xflip |= bit; break;
            case Pauli::Z: m.zsign |= bit; break;
            case Pauli::Y:
                m.xflip |= bit;
                m.zsign |= bit;
                ++m.y_count;
                break;
        }
    }
    return m;
}

}  // namespace

DensityMatrix::DensityMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw resource_error("DensityMatrix: qubit count outside [1, " +
                             std::to_string(kMaxQubits) + "]");
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    mat_ = Eigen::MatrixXcd::Zero(dim, dim);
}

DensityMatrix DensityMatrix::pure(int n, const Eigen::VectorXcd& state) {
    DensityMatrix rho(n);
    if (state.size() != rho.dim()) {
        throw std::invalid_argument("DensityMatrix::pure: state dimension mismatch");
    }
    rho.mat_ = state * state.adjoint();
    return rho;
}

double DensityMatrix::trace_real() const { return mat_.trace().real(); }

double DensityMatrix::hermiticity_defect() const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd sym = 0.5 * (mat_ + mat_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

Eigen::VectorXcd graph_state_vector(const Graph& g) {
    const int n = g.n();
    if (n > kMaxQubits) throw resource_error("graph_state_vector: too many qubits");
    const Eigen::Index dim = Eigen::Index(1) << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        int sign = 0;
        for (const auto& [a, b] : g.edges()) {
            const auto ia = static_cast<std::uint64_t>(i);
            sign ^= ((ia >> (n - 1 - a)) & (ia >> (n - 1 - b))) & 1;
        }
        psi(i) = sign ? -amp : amp;
    }
    return psi;
}

DensityMatrix build_graph_state(const Graph& g) {
    return DensityMatrix::pure(g.n(), graph_state_vector(g));
}

DensityMatrix ghz_state(int n) {
    DensityMatrix rho(n);
    const Eigen::Index dim = rho.dim();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = psi(dim - 1) = 1.0 / std::numbers::sqrt2;
    return DensityMatrix::pure(n, psi);
}

void depolarize_qubit(DensityMatrix& rho, int qubit, double p) {
    check_qubit(rho, qubit, "depolarize_qubit");
    const std::uint64_t m = qubit_bit(rho.n(), qubit);
    const double w = (1.0 - p) / 4.0;
    const Eigen::Index dim = rho.dim();
    const Eigen::MatrixXcd src = rho.mat();
    Eigen::MatrixXcd& dst = rho.mat();
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            const int zpar = parity((static_cast<std::uint64_t>(a) ^
                                     static_cast<std::uint64_t>(b)) & m);
            const double zsign = zpar ? -1.0 : 1.0;
            const Eigen::Index af = static_cast<Eigen::Index>(static_cast<std::uint64_t>(a) ^ m);
            const Eigen::Index bf = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ m);
            dst(a, b) = (p + w + w * zsign) * src(a, b) + w * (1.0 + zsign) * src(af, bf);
        }
    }
}

void dephase_qubit(DensityMatrix& rho, int qubit, Pauli axis, double p_axis) {
    check_qubit(rho, qubit, "dephase_qubit");
    if (axis == Pauli::I) throw std::invalid_argument("dephase_qubit: axis must be X, Y or Z");
    const std::uint64_t m = qubit_bit(rho.n(), qubit);
    const double keep = (1.0 + p_axis) / 2.0;
    const double mix = (1.0 - p_axis) / 2.0;
    const Eigen::Index dim = rho.dim();
    const Eigen::MatrixXcd src = rho.mat();
    Eigen::MatrixXcd& dst = rho.mat();
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            const std::uint64_t ab = static_cast<std::uint64_t>(a) ^ static_cast<std::uint64_t>(b);
            const double zsign = parity(ab & m) ? -1.0 : 1.0;
            cd conj_term;
            switch (axis) {
                case Pauli::Z: conj_term = zsign * src(a, b); break;
                case Pauli::X:
                    conj_term = src(static_cast<Eigen::Index>(a ^ m),
                                    static_cast<Eigen::Index>(b ^ m));
                    break;
                default:  // Y
                    conj_term = zsign * src(static_cast<Eigen::Index>(a ^ m),
                                            static_cast<Eigen::Index>(b ^ m));
                    break;
            }
            dst(a, b) = keep * src(a, b) + mix * conj_term;
        }
    }
}

void apply_depolarizing_all(DensityMatrix& rho, NoiseParameter np) {
    for (int q = 0; q < rho.n(); ++q) depolarize_qubit(rho, q, np.p);
}

void conjugate_pauli(DensityMatrix& rho, const PauliString& pauli) {
    if (pauli.n() != rho.n()) throw std::invalid_argument("conjugate_pauli: size mismatch");
    const PauliMasks m = masks_of(pauli);
    const Eigen::Index dim = rho.dim();
    const Eigen::MatrixXcd src = rho.mat();
    Eigen::MatrixXcd& dst = rho.mat();
    for (Eigen::Index a = 0; a < dim; ++a) {
        const std::uint64_t af = static_cast<std::uint64_t>(a) ^ m.xflip;
        const int sa = parity(af & m.zsign);
        for (Eigen::Index b = 0; b < dim; ++b) {
            const std::uint64_t bf = static_cast<std::uint64_t>(b) ^ m.xflip;
            const double sign = (sa ^ parity(bf & m.zsign)) ? -1.0 : 1.0;
            dst(a, b) = sign * src(static_cast<Eigen::Index>(af), static_cast<Eigen::Index>(bf));
        }
    }
}

void apply_channel(DensityMatrix& rho, const PauliDiagonalChannel& chan) {
    if (chan.n != rho.n()) throw std::invalid_argument("apply_channel: dimension mismatch");
    const Eigen::Index dim = rho.dim();
    const Eigen::MatrixXcd src = rho.mat();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [ps, w] : chan.terms) {
        const PauliMasks m = masks_of(ps);
        for (Eigen::Index a = 0; a < dim; ++a) {
            const std::uint64_t af = static_cast<std::uint64_t>(a) ^ m.xflip;
            const int sa = parity(af & m.zsign);
            for (Eigen::Index b = 0; b < dim; ++b) {
                const std::uint64_t bf = static_cast<std::uint64_t>(b) ^ m.xflip;
                const double sign = (sa ^ parity(bf & m.zsign)) ? -1.0 : 1.0;
                out(a, b) += w * sign *
                             src(static_cast<Eigen::Index>(af), static_cast<Eigen::Index>(bf));
            }
        }
    }
    rho.mat() = std::move(out);
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& pauli) {
    if (pauli.n() != rho.n()) throw std::invalid_argument("pauli_expectation: size mismatch");
    const PauliMasks m = masks_of(pauli);
    const Eigen::Index dim = rho.dim();
    cd acc = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
        const std::uint64_t c = static_cast<std::uint64_t>(j) ^ m.xflip;
        const double sign = parity(c & m.zsign) ? -1.0 : 1.0;
        acc += sign * rho.mat()(static_cast<Eigen::Index>(c), j);
    }
    // i^y from each sigma_y in the string
    static constexpr cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return (kIPow[m.y_count & 3] * acc).real();
}

namespace {

std::uint64_t cut_mask(const DensityMatrix& rho, const BipartitionCut& cut) {
    if (cut.side_b.empty() || static_cast<int>(cut.side_b.size()) >= rho.n()) {
        throw std::invalid_argument("BipartitionCut: need a proper nonempty subset");
    }
    std::uint64_t m = 0;
    for (int q : cut.side_b) {
        check_qubit(rho, q, "BipartitionCut");
        const std::uint64_t bit = qubit_bit(rho.n(), q);
        if (m & bit) throw std::invalid_argument("BipartitionCut: duplicate qubit");
        m |= bit;
    }
    return m;
}

}  // namespace

DensityMatrix partial_transpose(const DensityMatrix& rho, const BipartitionCut& cut) {
    const std::uint64_t m = cut_mask(rho, cut);
    DensityMatrix out(rho.n());
    const Eigen::Index dim = rho.dim();
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            const std::uint64_t ru = static_cast<std::uint64_t>(r);
            const std::uint64_t cu = static_cast<std::uint64_t>(c);
            const auto rr = static_cast<Eigen::Index>((ru & ~m) | (cu & m));
            const auto cc = static_cast<Eigen::Index>((cu & ~m) | (ru & m));
            out.mat()(r, c) = rho.mat()(rr, cc);
        }
    }
    return out;
}

double min_pt_eigenvalue(const DensityMatrix& rho, const BipartitionCut& cut) {
    return partial_transpose(rho, cut).min_eigenvalue();
}

namespace {

// Shared branch extraction: the corrected, unnormalized 4x4 block of one
// measurement outcome. Qubit k maps to the first (most significant) bit of
// the two-qubit index.
Eigen::Matrix4cd branch_block(const DensityMatrix& rho, const Graph& g, int k, int l,
                              unsigned outcome_bits, const std::vector<int>& measured) {
    const int n = rho.n();
    std::uint64_t base = 0;
    for (std::size_t t = 0; t < measured.size(); ++t) {
        if ((outcome_bits >> t) & 1u) base |= qubit_bit(n, measured[t]);
    }
    // Byproduct corrections: parity of the outcomes at measured neighbors.
    int ck = 0, cl = 0;
    for (std::size_t t = 0; t < measured.size(); ++t) {
        const int s = (outcome_bits >> t) & 1;
        if (g.has_edge(measured[t], k)) ck ^= s;
        if (g.has_edge(measured[t], l)) cl ^= s;
    }
    const std::uint64_t kb = qubit_bit(n, k);
    const std::uint64_t lb = qubit_bit(n, l);
    Eigen::Matrix4cd block;
    for (int ab = 0; ab < 4; ++ab) {
        const std::uint64_t row = base | ((ab & 2) ? kb : 0) | ((ab & 1) ? lb : 0);
        const int srow = (ck & (ab >> 1)) ^ (cl & ab & 1);
        for (int ab2 = 0; ab2 < 4; ++ab2) {
            const std::uint64_t col = base | ((ab2 & 2) ? kb : 0) | ((ab2 & 1) ? lb : 0);
            const int scol = (ck & (ab2 >> 1)) ^ (cl & ab2 & 1);
            const double sign = (srow ^ scol) ? -1.0 : 1.0;
            block(ab, ab2) = sign * rho.mat()(static_cast<Eigen::Index>(row),
                                              static_cast<Eigen::Index>(col));
        }
    }
    return block;
}

std::vector<int> measured_qubits(int n, int k, int l) {
    std::vector<int> measured;
    for (int q = 0; q < n; ++q) {
        if (q != k && q != l) measured.push_back(q);
    }
    return measured;
}

}  // namespace

DensityMatrix measure_and_reduce(const DensityMatrix& rho, const Graph& g, int k, int l) {
    const int n = rho.n();
    if (g.n() != n) throw std::invalid_argument("measure_and_reduce: graph size mismatch");
    if (k == l) throw std::invalid_argument("measure_and_reduce: k and l must differ");
    check_qubit(rho, k, "measure_and_reduce");
    check_qubit(rho, l, "measure_and_reduce");
    const std::vector<int> measured = measured_qubits(n, k, l);
    Eigen::Matrix4cd total = Eigen::Matrix4cd::Zero();
    const unsigned branches = 1u << measured.size();
    for (unsigned m = 0; m < branches; ++m) {
        total += branch_block(rho, g, k, l, m, measured);
    }
    DensityMatrix out(2);
    out.mat() = total;
    return out;
}

DensityMatrix measure_branch(const DensityMatrix& rho, const Graph& g, int k, int l,
                             unsigned outcome_bits) {
    const std::vector<int> measured = measured_qubits(rho.n(), k, l);
    Eigen::Matrix4cd block = branch_block(rho, g, k, l, outcome_bits, measured);
    const double tr = block.trace().real();
    if (tr < 1e-300) throw numeric_error("measure_branch: outcome has zero probability");
    DensityMatrix out(2);
    out.mat() = block / tr;
    return out;
}

PairCoefficients bell_coefficients(const DensityMatrix& pair_rho) {
    if (pair_rho.n() != 2) throw std::invalid_argument("bell_coefficients: need 2 qubits");
    Eigen::Vector4cd phi;
    phi << 0.5, 0.5, 0.5, -0.5;  // CZ |++>
    double q[4];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            Eigen::Vector4cd v = phi;
            for (int i = 0; i < 4; ++i) {
                const int sign = (a & (i >> 1)) ^ (b & i & 1);
                if (sign) v(i) = -v(i);
            }
            q[2 * a + b] = (v.adjoint() * pair_rho.mat() * v)(0).real();
        }
    }
    return PairCoefficients{q[0], q[1], q[2], q[3]};
}

GhzCoefficients ghz_coefficients(const DensityMatrix& rho) {
    const int n = rho.n();
    if (n < 2) throw std::invalid_argument("ghz_coefficients: need >= 2 qubits");
    const std::uint64_t half = 1ULL << (n - 1);
    GhzCoefficients out;
    out.n = n;
    out.plus.resize(half);
    out.minus.resize(half);
    for (std::uint64_t kappa = 0; kappa < half; ++kappa) {
        const auto i0 = static_cast<Eigen::Index>(kappa << 1);
        const auto i1 = static_cast<Eigen::Index>(((~kappa & (half - 1)) << 1) | 1);
        const double diag = 0.5 * (rho.mat()(i0, i0).real() + rho.mat()(i1, i1).real());
        const double coh = rho.mat()(i0, i1).real();
        out.plus[kappa] = diag + coh;
        out.minus[kappa] = diag - coh;
    }
    return out;
}

double GhzCoefficients::normalization() const {
    double s = 0.0;
    for (double v : plus) s += v;
    for (double v : minus) s += v;
    return s;
}

double ghz_offdiag_max(const DensityMatrix& rho) {
    const int n = rho.n();
    const std::uint64_t half = 1ULL << (n - 1);
    double worst = 0.0;
    for (std::uint64_t ka = 0; ka < half; ++ka) {
        const auto a0 = static_cast<Eigen::Index>(ka << 1);
        const auto a1 = static_cast<Eigen::Index>(((~ka & (half - 1)) << 1) | 1);
        for (std::uint64_t kb = 0; kb < half; ++kb) {
            const auto b0 = static_cast<Eigen::Index>(kb << 1);
            const auto b1 = static_cast<Eigen::Index>(((~kb & (half - 1)) << 1) | 1);
            for (int sa = 0; sa < 2; ++sa) {
                for (int sb = 0; sb < 2; ++sb) {
                    if (ka == kb && sa == sb) continue;
                    const double fa = sa ? -1.0 : 1.0;
                    const double fb = sb ? -1.0 : 1.0;
                    const cd elem = 0.5 * (rho.mat()(a0, b0) + fb * rho.mat()(a0, b1) +
                                           fa * rho.mat()(a1, b0) + fa * fb * rho.mat()(a1, b1));
                    worst = std::max(worst, std::abs(elem));
                }
            }
        }
    }
    return worst;
}

double choi_min_pt_eigenvalue(double p_z) {
    // Qubits (k, k', l, l'); the edge unitary multiplies |b_k b_l> = |01> by
    // -1, and the dephasing acts on the map outputs k and l.
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(16);
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b2 = 0; b2 < 2; ++b2) {
            const int idx = (b0 << 3) | (b0 << 2) | (b2 << 1) | b2;
            const double sign = (b0 == 0 && b2 == 1) ? -1.0 : 1.0;
            psi(idx) = 0.5 * sign;
        }
    }
    DensityMatrix rho = DensityMatrix::pure(4, psi);
    dephase_qubit(rho, 0, Pauli::Z, p_z);
    dephase_qubit(rho, 2, Pauli::Z, p_z);
    return min_pt_eigenvalue(rho, BipartitionCut{{2, 3}});
}

std::optional<ChoiCrossing> choi_pt_crossing(std::span<const double> p_z_grid) {
    if (p_z_grid.size() < 2) return std::nullopt;
    double prev = choi_min_pt_eigenvalue(p_z_grid[0]);
    for (std::size_t i = 1; i < p_z_grid.size(); ++i) {
        const double cur = choi_min_pt_eigenvalue(p_z_grid[i]);
        const bool prev_nonneg = prev >= -kEigSignTol;
        const bool cur_nonneg = cur >= -kEigSignTol;
        if (prev_nonneg != cur_nonneg) {
            const double p0 = p_z_grid[i - 1], p1 = p_z_grid[i];
            const double est = p0 + (0.0 - prev) * (p1 - p0) / (cur - prev);
            return ChoiCrossing{p0, p1, est};
        }
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace entlife::oracle
