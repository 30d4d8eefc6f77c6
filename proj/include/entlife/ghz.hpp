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

#ifndef ENTLIFE_GHZ_HPP
#define ENTLIFE_GHZ_HPP

#include <vector>

#include "entlife/noise.hpp"

namespace entlife {

// Spectrum of an N-qubit GHZ state after independent depolarizing noise at
// survival parameter p. The state is diagonal in the GHZ basis
// {(|k,0> +- |kbar,1>)/sqrt2 : k an (N-1)-bit pattern} and the coefficient of
// a basis vector depends only on the pattern weight k:
//
//   lambda_k = [(1+p)^k (1-p)^(N-k) + (1+p)^(N-k) (1-p)^k] / 2^(N+1),
//
// except that the weight-0 pair splits as lambda_0 +- p^N / 2.
// All arithmetic is kept in the natural-log domain so that macroscopic N
// (10^6 and beyond) evaluates without underflow.
class GhzSpectrum {
public:
    GhzSpectrum(int n, NoiseParameter np);

    int n() const { return n_; }
    double p() const { return p_; }

    // log lambda_k for k in [0, n); -inf is a valid value (p = 1, k != 0).
    double log_lambda(int k) const;
    double lambda(int k) const;

    double log_lambda0_plus() const;
    double log_lambda0_minus() const;
    double lambda0_plus() const;
    double lambda0_minus() const;

    // log of sum_k C(N-1,k) * 2 lambda_k, the trace of the state; exactly 0
    // in exact arithmetic. Evaluated in extended precision.
    double log_normalization() const;

private:
    int n_;
    double p_;
    double log_1p_;   // ln(1+p)
    double log_1m_;   // ln(1-p), -inf at p = 1
    double log_p_;    // ln p
};

GhzSpectrum ghz_spectrum(int n, NoiseParameter np);

// Whether the partial transpose with respect to a group of k parties
// (1 <= k <= N-1) is positive: p^N <= 2 lambda_k, compared in log domain.
// Equality classifies as positive.
bool ppt_positive(int n, NoiseParameter np, int k);

// Critical noise for a partition whose smallest group holds m particles
// (1 <= m <= N/2): the unique root in (0,1) of p^N = 2 lambda_m, found by
// bisection to 1e-12 in p. For m = 1 this is the lifetime of genuine
// N-party distillable entanglement.
Threshold group_lifetime(int n, int m);

// The real-valued group count at which M-party entanglement certainly
// vanishes, [ln(1-p) - ln(1+p)] / [ln(2p) - ln(1+p)]; increasing in p.
double critical_group_count(double p);

// The real-valued group count below which every partial transpose of the
// partition is certainly non-positive, ln[2(1-p)/(1+p)] / ln[2p/(1+p)].
double guaranteed_group_count(double p);

struct UpperPartyBound {
    long m = 0;
    bool unbounded = false;  // p = 1: entanglement never certainly vanishes
};

// Smallest integer M >= critical_group_count(p) (never below 2): with this
// many or more equal-size groups the state is certainly not M-party
// entangled. Requires p in (0,1]; p = 1 reports unbounded.
UpperPartyBound upper_bound_m(NoiseParameter np);

struct LowerPartyBound {
    long m = 1;
    bool guaranteed = false;  // false: the bound is vacuous (< 2)
    bool unbounded = false;   // p = 1: every partition stays distillable
};

// Largest integer M <= guaranteed_group_count(p): partitions into that many
// equal groups have all partial transposes non-positive, hence the state is
// M-party distillable.
LowerPartyBound lower_bound_m(NoiseParameter np);

// Lifetime kappa_tau at which M-party entanglement (M >= 2) certainly
// vanishes: solves critical_group_count(p) = M and returns -ln p.
// Strictly decreasing in M.
double upper_bound_lifetime(long m_groups);

// Small-time approximation -2 ln(kappa_t)/kappa_t of the vanishing group
// count; valid for 0 < kappa_t < 1, throws std::domain_error otherwise.
double asymptotic_m(double kappa_t);

// Assignment of N particles to M nonempty groups.
struct PartitionSpec {
    int n = 0;
    std::vector<int> groups;  // size n, values in [0, M)

    // Throws std::invalid_argument unless every label in [0, max+1) occurs.
    static PartitionSpec from_groups(int n, std::vector<int> groups);
    // Round-robin equal partition of n particles into m_groups groups.
    static PartitionSpec equal(int n, int m_groups);

    int group_count() const;
    int min_group_size() const;
    std::vector<int> group_members(int label) const;
};

}  // namespace entlife

#endif
