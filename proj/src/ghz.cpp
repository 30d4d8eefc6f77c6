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

#include "entlife/ghz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entlife/bisect.hpp"
#include "entlife/logspace.hpp"

namespace entlife {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kBracketLo = 1e-6;
constexpr double kBracketHi = 1.0 - 1e-12;
constexpr double kRootTol = 1e-12;
// Exact-integer boundaries count as satisfying either party bound.
constexpr double kTieEps = 1e-9;

// c * logv with the 0 * (-inf) = 0 convention for absent factors.
double weighted_log(int c, double logv) {
    return c == 0 ? 0.0 : c * logv;
}

}  // namespace

GhzSpectrum::GhzSpectrum(int n, NoiseParameter np)
    : n_(n),
      p_(np.p),
      log_1p_(std::log1p(np.p)),
      log_1m_(std::log1p(-np.p)),
      log_p_(std::log(np.p)) {
    if (n < 2) throw std::domain_error("GhzSpectrum: particle count must be >= 2");
}

double GhzSpectrum::log_lambda(int k) const {
    if (k < 0 || k >= n_) throw std::domain_error("GhzSpectrum::log_lambda: k out of range");
    const double t1 = weighted_log(k, log_1p_) + weighted_log(n_ - k, log_1m_);
    const double t2 = weighted_log(n_ - k, log_1p_) + weighted_log(k, log_1m_);
    return log_sum_exp(t1, t2) - (n_ + 1) * kLn2;
}

double GhzSpectrum::lambda(int k) const { return std::exp(log_lambda(k)); }

double GhzSpectrum::log_lambda0_plus() const {
    return log_sum_exp(log_lambda(0), n_ * log_p_ - kLn2);
}

double GhzSpectrum::log_lambda0_minus() const {
    // lambda_0 >= p^N / 2 always, with equality only at p = 1.
    return log_diff_exp(log_lambda(0), n_ * log_p_ - kLn2);
}

double GhzSpectrum::lambda0_plus() const { return std::exp(log_lambda0_plus()); }
double GhzSpectrum::lambda0_minus() const { return std::exp(log_lambda0_minus()); }

double GhzSpectrum::log_normalization() const {
    // Online log-sum-exp of log[C(N-1,k) * 2 lambda_k] in extended precision;
    // the incremental binomial keeps the error per term near machine epsilon
    // even at N = 10^6.
    const long double l1p = log1pl(static_cast<long double>(p_));
    const long double l1m = log1pl(-static_cast<long double>(p_));
    const long double ln2l = logl(2.0L);
    long double log_binom = 0.0L;
    long double hi = -std::numeric_limits<long double>::infinity();
    long double acc = 0.0L;
    for (int k = 0; k < n_; ++k) {
        if (k > 0) log_binom += logl(static_cast<long double>(n_ - k) / k);
        const long double t1 =
            (k == 0 ? 0.0L : k * l1p) + (k == n_ ? 0.0L : (n_ - k) * l1m);
        const long double t2 =
            (k == n_ ? 0.0L : (n_ - k) * l1p) + (k == 0 ? 0.0L : k * l1m);
        long double lg2lam;
        if (t1 == -std::numeric_limits<long double>::infinity() &&
            t2 == -std::numeric_limits<long double>::infinity()) {
            continue;
        } else if (t1 >= t2) {
            lg2lam = t1 + log1pl(expl(t2 - t1)) - n_ * ln2l;
        } else {
            lg2lam = t2 + log1pl(expl(t1 - t2)) - n_ * ln2l;
        }
        const long double term = log_binom + lg2lam;
        if (term > hi) {
            acc = acc * expl(hi - term) + 1.0L;
            hi = term;
        } else {
            acc += expl(term - hi);
        }
    }
    return static_cast<double>(hi + logl(acc));
}

GhzSpectrum ghz_spectrum(int n, NoiseParameter np) { return GhzSpectrum(n, np); }

bool ppt_positive(int n, NoiseParameter np, int k) {
    if (k < 1 || k > n - 1) throw std::domain_error("ppt_positive: k must lie in [1, N-1]");
    const GhzSpectrum spec(n, np);
    return n * std::log(np.p) <= kLn2 + spec.log_lambda(k);
}

Threshold group_lifetime(int n, int m) {
    if (n < 2) throw std::domain_error("group_lifetime: particle count must be >= 2");
    if (m < 1 || m > n / 2) throw std::domain_error("group_lifetime: m must lie in [1, N/2]");
    const auto f = [n, m](double p) {
        const GhzSpectrum spec(n, noise_from_p(p));
        return n * std::log(p) - (kLn2 + spec.log_lambda(m));
    };
    const double root = bisect(f, kBracketLo, kBracketHi, kRootTol);
    return Threshold{root, -std::log(root)};
}

double critical_group_count(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("critical_group_count: p must lie in (0, 1)");
    }
    // ln((1-p)/(1+p)) / ln(2p/(1+p)), in log1p form so the denominator stays
    // accurate as p -> 1.
    const double num = std::log1p(-2.0 * p / (1.0 + p));
    const double den = std::log1p((p - 1.0) / (1.0 + p));
    return num / den;
}

double guaranteed_group_count(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("guaranteed_group_count: p must lie in (0, 1)");
    }
    const double num = std::log(2.0 * (1.0 - p) / (1.0 + p));
    const double den = std::log1p((p - 1.0) / (1.0 + p));
    return num / den;
}

UpperPartyBound upper_bound_m(NoiseParameter np) {
    if (np.p >= 1.0) return UpperPartyBound{0, true};
    const double ratio = critical_group_count(np.p);
    long m = static_cast<long>(std::ceil(ratio - kTieEps));
    if (m < 2) m = 2;
    return UpperPartyBound{m, false};
}

LowerPartyBound lower_bound_m(NoiseParameter np) {
    if (np.p >= 1.0) return LowerPartyBound{0, true, true};
    const double ratio = guaranteed_group_count(np.p);
    if (!(ratio >= 2.0 - kTieEps)) return LowerPartyBound{1, false, false};
    const long m = static_cast<long>(std::floor(ratio + kTieEps));
    return LowerPartyBound{m, true, false};
}

double upper_bound_lifetime(long m_groups) {
    if (m_groups < 2) throw std::domain_error("upper_bound_lifetime: M must be >= 2");
    const auto f = [m_groups](double p) {
        return critical_group_count(p) - static_cast<double>(m_groups);
    };
    const double root = bisect(f, kBracketLo, kBracketHi, kRootTol);
    return -std::log(root);
}

double asymptotic_m(double kappa_t) {
    if (!(kappa_t > 0.0 && kappa_t < 1.0)) {
        throw std::domain_error("asymptotic_m: valid only for kappa_t in (0, 1)");
    }
    return -2.0 * std::log(kappa_t) / kappa_t;
}

PartitionSpec PartitionSpec::from_groups(int n, std::vector<int> groups) {
    if (n < 1 || static_cast<int>(groups.size()) != n) {
        throw std::invalid_argument("PartitionSpec: group list must assign every particle");
    }
    const int m = *std::max_element(groups.begin(), groups.end()) + 1;
    if (m > n) throw std::invalid_argument("PartitionSpec: more groups than particles");
    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    for (int g : groups) {
        if (g < 0) throw std::invalid_argument("PartitionSpec: negative group label");
        ++sizes[static_cast<std::size_t>(g)];
    }
    for (int s : sizes) {
        if (s == 0) throw std::invalid_argument("PartitionSpec: empty group");
    }
    PartitionSpec spec;
    spec.n = n;
    spec.groups = std::move(groups);
    return spec;
}

PartitionSpec PartitionSpec::equal(int n, int m_groups) {
    if (m_groups < 1 || m_groups > n) {
        throw std::invalid_argument("PartitionSpec::equal: need 1 <= M <= N");
    }
    std::vector<int> groups(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) groups[static_cast<std::size_t>(i)] = i % m_groups;
    return from_groups(n, std::move(groups));
}

int PartitionSpec::group_count() const {
    return *std::max_element(groups.begin(), groups.end()) + 1;
}

int PartitionSpec::min_group_size() const {
    const int m = group_count();
    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    for (int g : groups) ++sizes[static_cast<std::size_t>(g)];
    return *std::min_element(sizes.begin(), sizes.end());
}

std::vector<int> PartitionSpec::group_members(int label) const {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
        if (groups[static_cast<std::size_t>(i)] == label) members.push_back(i);
    }
    return members;
}

}  // namespace entlife
