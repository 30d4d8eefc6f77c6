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

#ifndef ENTLIFE_LOGSPACE_HPP
#define ENTLIFE_LOGSPACE_HPP

#include <cmath>
#include <limits>

namespace entlife {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), safe for -inf arguments.
inline double log_sum_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = (a > b) ? a : b;
    const double lo = (a > b) ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// log(exp(a) - exp(b)); requires a >= b.
inline double log_diff_exp(double a, double b) {
    if (b == kNegInf) return a;
    if (a == b) return kNegInf;
    return a + std::log1p(-std::exp(b - a));
}

}  // namespace entlife

#endif
