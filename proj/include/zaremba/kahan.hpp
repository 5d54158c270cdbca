#pragma once

#include <cmath>

namespace zaremba {

// Neumaier-compensated accumulator. Divisor sums reach ~10^5 terms and the
// record table is compared at 1e-9 absolute, so plain += is not enough.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace zaremba
