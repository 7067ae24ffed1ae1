#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fdclutter {

inline constexpr double kSpeedOfLight = 299792458.0;

using cxd = std::complex<double>;

/// Closed interval [lo, hi]; lo == hi denotes a point mass.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

}  // namespace fdclutter
