#pragma once

#include <cmath>

namespace avgsearch {

// Neumaier compensated accumulator.  Keeps long sums accurate to ~1 ulp and
// makes the result a fixed function of the addition order, which the
// reproducibility contracts of the energy sums rely on.
class CompensatedSum {
public:
    void add(double x) noexcept {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace avgsearch
