#pragma once

namespace itlab {

// Kahan compensated accumulator. All statistics in this library sum with it
// so results agree to ~1e-9 regardless of how callers chunk their input.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace itlab
