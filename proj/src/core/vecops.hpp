#ifndef LPBOX_CORE_VECOPS_HPP
#define LPBOX_CORE_VECOPS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace lpbox {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm1(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += std::abs(v);
    return s;
}

inline double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

// y += alpha * x
inline void axpy(double alpha, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline Vec ones(std::size_t n) { return Vec(n, 1.0); }

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

// largest distance from any component to its nearest integer in {0, 1}
inline double binariness_inf(const Vec& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v - std::round(v)));
    return m;
}

}  // namespace lpbox

#endif
