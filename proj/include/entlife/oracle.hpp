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

#ifndef ENTLIFE_ORACLE_HPP
#define ENTLIFE_ORACLE_HPP

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "entlife/graph.hpp"
#include "entlife/noise.hpp"

// Brute-force dense density-matrix engine. Everything here is exponential in
// the qubit count by construction; it exists to verify the analytic modules
// independently, not to scale. Qubit 0 owns the most significant bit of a
// basis index, matching the site-0-leftmost Pauli string convention.
namespace entlife::oracle {

inline constexpr int kMaxQubits = 10;
inline constexpr double kEigSignTol = 1e-10;

class DensityMatrix {
public:
    // Zero matrix of dimension 2^n; throws resource_error for n > kMaxQubits.
    explicit DensityMatrix(int n);
    static DensityMatrix pure(int n, const Eigen::VectorXcd& state);

    int n() const { return n_; }
    Eigen::Index dim() const { return mat_.rows(); }
    Eigen::MatrixXcd& mat() { return mat_; }
    const Eigen::MatrixXcd& mat() const { return mat_; }

    double trace_real() const;
    double hermiticity_defect() const;  // max |rho - rho^dagger|
    double min_eigenvalue() const;
    double purity() const;  // tr rho^2

private:
    int n_;
    Eigen::MatrixXcd mat_;
};

// Group of qubit indices whose side of a bipartition gets transposed.
// Must be a proper nonempty subset of [0, n).
struct BipartitionCut {
    std::vector<int> side_b;
};

Eigen::VectorXcd graph_state_vector(const Graph& g);
// Pure graph state: product of controlled-Z gates over the edges acting on
// |+>^n. Stabilized by every correlation operator with eigenvalue +1.
DensityMatrix build_graph_state(const Graph& g);
// (|0...0> + |1...1>)/sqrt2 as a density matrix.
DensityMatrix ghz_state(int n);

// In-place channel applications; all are trace preserving.
void depolarize_qubit(DensityMatrix& rho, int qubit, double p);
void dephase_qubit(DensityMatrix& rho, int qubit, Pauli axis, double p_axis);
void apply_depolarizing_all(DensityMatrix& rho, NoiseParameter np);
void apply_channel(DensityMatrix& rho, const PauliDiagonalChannel& chan);
// rho -> P rho P (conjugation by a Pauli string; phases cancel).
void conjugate_pauli(DensityMatrix& rho, const PauliString& pauli);

double pauli_expectation(const DensityMatrix& rho, const PauliString& pauli);

DensityMatrix partial_transpose(const DensityMatrix& rho, const BipartitionCut& cut);
double min_pt_eigenvalue(const DensityMatrix& rho, const BipartitionCut& cut);

// Measures every qubit but k and l in the z basis, applies the
// outcome-dependent z corrections that return the byproduct to the canonical
// pair frame (parity of the measured-neighbor outcomes), averages over all
// 2^(n-2) branches exactly and traces out the measured qubits. The graph
// supplies the neighborhoods that the corrections depend on.
DensityMatrix measure_and_reduce(const DensityMatrix& rho, const Graph& g, int k, int l);

// As above but postselected on one outcome bit-vector (qubit order, k and l
// skipped), normalized; used to check outcome invariance branch by branch.
DensityMatrix measure_branch(const DensityMatrix& rho, const Graph& g, int k, int l,
                             unsigned outcome_bits);

// Diagonal of a two-qubit state in the Bell-like basis (Z^a x Z^b) CZ |++>.
PairCoefficients bell_coefficients(const DensityMatrix& pair_rho);

// Diagonal of rho in the GHZ basis, indexed by the (N-1)-bit pattern.
struct GhzCoefficients {
    int n = 0;
    std::vector<double> plus, minus;  // size 2^(n-1)

    double normalization() const;
};

GhzCoefficients ghz_coefficients(const DensityMatrix& rho);
// Largest off-diagonal magnitude in the GHZ basis (0 for GHZ-diagonal input).
double ghz_offdiag_max(const DensityMatrix& rho);

// Choi-matrix check of the edge map: two-qubit phase gate followed by
// z-dephasing at p_z on both outputs, acting on halves of two maximally
// entangled pairs. Returns the minimum partial-transpose eigenvalue across
// the (input k, reference k') | (input l, reference l') cut.
double choi_min_pt_eigenvalue(double p_z);

struct ChoiCrossing {
    double p_lo = 0, p_hi = 0;  // adjacent grid points bracketing the sign change
    double estimate = 0;        // linear interpolation of the crossing
};

// Scans the grid for the positive-to-negative sign change of the Choi
// partial-transpose spectrum; nullopt when every grid point has one sign.
std::optional<ChoiCrossing> choi_pt_crossing(std::span<const double> p_z_grid);

}  // namespace entlife::oracle

#endif
