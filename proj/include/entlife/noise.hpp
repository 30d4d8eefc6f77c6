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

#ifndef ENTLIFE_NOISE_HPP
#define ENTLIFE_NOISE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace entlife {

// Tolerance for channel-weight normalization; weights below it are pruned.
inline constexpr double kWeightTol = 1e-12;

// Strength of a single-qubit depolarizing channel. The survival parameter p
// and the dimensionless time kappa_t are linked by p = exp(-kappa_t);
// p in (0, 1], kappa_t in [0, inf).
struct NoiseParameter {
    double p;
    double kappa_t;
};

// kappa_t >= 0 and finite, otherwise throws std::domain_error.
NoiseParameter noise_from_time(double kappa_t);
// p in (0, 1], otherwise throws std::domain_error.
NoiseParameter noise_from_p(double p);

// A critical noise strength, as returned by the threshold solvers.
struct Threshold {
    double p;
    double kappa_t;
};

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_letter(Pauli p);
Pauli pauli_from_letter(char c);

// A tensor product of single-qubit Pauli operators, site 0 leftmost.
// The global phase is not tracked (irrelevant under conjugation).
struct PauliString {
    std::vector<Pauli> letters;

    PauliString() = default;
    explicit PauliString(std::vector<Pauli> ls) : letters(std::move(ls)) {}

    int n() const { return static_cast<int>(letters.size()); }
    Pauli at(int site) const { return letters.at(static_cast<std::size_t>(site)); }

    static PauliString identity(int n);
    // One non-identity letter at `site`, identity elsewhere.
    static PauliString single(int n, int site, Pauli p);
    // Parses text such as "IXZY"; throws std::invalid_argument on bad letters.
    static PauliString parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const PauliString&) const = default;
};

// A mixture of Pauli conjugations: rho -> sum_k w_k P_k rho P_k.
// Weights are nonnegative and sum to 1 within kWeightTol.
struct PauliDiagonalChannel {
    int n = 0;
    std::map<PauliString, double> terms;

    double weight_sum() const;
    std::string to_json() const;
    static PauliDiagonalChannel from_json(const std::string& text);
};

// Merges duplicate strings, rescales weights to sum 1, prunes weights below
// kWeightTol. Throws std::invalid_argument on an empty list, a negative
// weight, or inconsistent qubit counts.
PauliDiagonalChannel normalize_channel(
    const std::vector<std::pair<PauliString, double>>& raw_terms);

// The single-qubit depolarizing channel at survival parameter p:
// weight p + (1-p)/4 on I and (1-p)/4 on each of X, Y, Z.
PauliDiagonalChannel depolarizing_channel(const NoiseParameter& np);

// Axis-wise dephasing strengths whose x-, y-, z-composition reproduces the
// depolarizing channel. For depolarizing at p this is (sqrt p, sqrt p, sqrt p).
struct DephasingDecomposition {
    double p_x;
    double p_y;
    double p_z;
};

DephasingDecomposition dephasing_decomposition(const NoiseParameter& np);

}  // namespace entlife

#endif
