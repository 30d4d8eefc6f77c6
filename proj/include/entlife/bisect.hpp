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

#ifndef ENTLIFE_BISECT_HPP
#define ENTLIFE_BISECT_HPP

#include <cmath>
#include <sstream>

#include "entlife/errors.hpp"

namespace entlife {

// Bisect f on [lo, hi] down to an interval of width tol_x and return its
// midpoint. f(lo) and f(hi) must have opposite signs (a zero endpoint counts
// as a root). All threshold functions in this library are monotone on their
// brackets, so derivative-free bisection is sufficient.
template <class F>
double bisect(F&& f, double lo, double hi, double tol_x) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream msg;
        msg << "bisect: no sign change in bracket [" << lo << ", " << hi
            << "], f(lo)=" << flo << ", f(hi)=" << fhi;
        throw numeric_error(msg.str());
    }
    for (int it = 0; it < 200 && (hi - lo) > tol_x; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace entlife

#endif
