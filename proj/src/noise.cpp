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

#include "entlife/noise.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace entlife {

NoiseParameter noise_from_time(double kappa_t) {
    if (!std::isfinite(kappa_t) || kappa_t < 0.0) {
        throw std::domain_error("noise_from_time: kappa_t must be finite and >= 0");
    }
    return NoiseParameter{std::exp(-kappa_t), kappa_t};
}

NoiseParameter noise_from_p(double p) {
    if (!std::isfinite(p) || p <= 0.0 || p > 1.0) {
        throw std::domain_error("noise_from_p: p must lie in (0, 1]");
    }
    return NoiseParameter{p, -std::log(p)};
}

char pauli_letter(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    throw std::invalid_argument("pauli_letter: bad enum value");
}

Pauli pauli_from_letter(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("pauli_from_letter: bad letter '") + c + "'");
    }
}

PauliString PauliString::identity(int n) {
    if (n < 0) throw std::invalid_argument("PauliString::identity: negative n");
    return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
}

PauliString PauliString::single(int n, int site, Pauli p) {
    PauliString s = identity(n);
    s.letters.at(static_cast<std::size_t>(site)) = p;
    return s;
}

PauliString PauliString::parse(const std::string& text) {
    std::vector<Pauli> ls;
    ls.reserve(text.size());
    for (char c : text) ls.push_back(pauli_from_letter(c));
    return PauliString(std::move(ls));
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters.size());
    for (Pauli p : letters) out.push_back(pauli_letter(p));
    return out;
}

double PauliDiagonalChannel::weight_sum() const {
    double s = 0.0;
    for (const auto& [ps, w] : terms) s += w;
    return s;
}

std::string PauliDiagonalChannel::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [ps, w] : terms) {
        j["terms"].push_back({{"pauli", ps.str()}, {"w", w}});
    }
    return j.dump();
}

PauliDiagonalChannel PauliDiagonalChannel::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::pair<PauliString, double>> raw;
    const int n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
        PauliString ps = PauliString::parse(t.at("pauli").get<std::string>());
        if (ps.n() != n) {
            throw std::invalid_argument("channel json: term length differs from n");
        }
        raw.emplace_back(std::move(ps), t.at("w").get<double>());
    }
    return normalize_channel(raw);
}

PauliDiagonalChannel normalize_channel(
    const std::vector<std::pair<PauliString, double>>& raw_terms) {
    if (raw_terms.empty()) {
        throw std::invalid_argument("normalize_channel: empty term list");
    }
    const int n = raw_terms.front().first.n();
    std::map<PauliString, double> merged;
    double total = 0.0;
    for (const auto& [ps, w] : raw_terms) {
        if (ps.n() != n) {
            throw std::invalid_argument("normalize_channel: inconsistent qubit counts");
        }
        if (w < -kWeightTol || !std::isfinite(w)) {
            throw std::invalid_argument("normalize_channel: negative or non-finite weight");
        }
        const double wc = (w < 0.0) ? 0.0 : w;
        merged[ps] += wc;
        total += wc;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("normalize_channel: weights sum to zero");
    }
    double kept = 0.0;
    for (auto it = merged.begin(); it != merged.end();) {
        if (it->second / total <= kWeightTol) {
            it = merged.erase(it);
        } else {
            kept += it->second;
            ++it;
        }
    }
    PauliDiagonalChannel chan;
    chan.n = n;
    for (const auto& [ps, w] : merged) chan.terms.emplace(ps, w / kept);
    return chan;
}

PauliDiagonalChannel depolarizing_channel(const NoiseParameter& np) {
    const double b = (1.0 - np.p) / 4.0;
    std::vector<std::pair<PauliString, double>> raw;
    raw.emplace_back(PauliString::identity(1), np.p + b);
    raw.emplace_back(PauliString::single(1, 0, Pauli::X), b);
    raw.emplace_back(PauliString::single(1, 0, Pauli::Y), b);
    raw.emplace_back(PauliString::single(1, 0, Pauli::Z), b);
    return normalize_channel(raw);
}

DephasingDecomposition dephasing_decomposition(const NoiseParameter& np) {
    const double r = std::sqrt(np.p);
    return DephasingDecomposition{r, r, r};
}

}  // namespace entlife
