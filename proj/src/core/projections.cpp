#include "core/projections.hpp"

#include <cmath>
#include <stdexcept>

namespace lpbox {

namespace {

constexpr double kDegenerateTol = 1e-12;

void reject_nan(const Vec& v, const char* op) {
    for (double x : v)
        if (std::isnan(x)) throw std::invalid_argument(std::string(op) + ": NaN input");
}

}  // namespace

double sphere_radius(std::size_t n) { return std::sqrt(static_cast<double>(n)) / 2.0; }

Vec project_box(const Vec& v) {
    reject_nan(v, "project_box");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::min(1.0, std::max(0.0, v[i]));
    return out;
}

Vec project_sphere(const Vec& v, double p) {
    if (p != 2.0)
        throw std::invalid_argument("project_sphere: only p=2 is implemented (got p=" +
                                    std::to_string(p) + ")");
    const std::size_t n = v.size();
    const double r = sphere_radius(n);

    double dist2 = 0.0;
    for (double x : v) {
        const double d = x - 0.5;
        dist2 += d * d;
    }
    const double dist = std::sqrt(dist2);

    Vec out(n, 0.5);
    if (dist < kDegenerateTol) {
        // direction undefined at the center: pick the first coordinate axis
        if (n > 0) out[0] = 0.5 + r;
        return out;
    }
    const double scale = r / dist;
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 + (v[i] - 0.5) * scale;
    return out;
}

Vec project_nonneg(const Vec& v) {
    reject_nan(v, "project_nonneg");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(0.0, v[i]);
    return out;
}

bool is_binary_by_intersection(const Vec& v, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_binary_by_intersection: tol must be >= 0");
    const std::size_t n = v.size();
    double dist2 = 0.0;
    for (double x : v) {
        if (x < -tol || x > 1.0 + tol) return false;
        const double d = x - 0.5;
        dist2 += d * d;
    }
    const double target = static_cast<double>(n) / 4.0;
    return std::abs(dist2 - target) <= tol * static_cast<double>(n);
}

}  // namespace lpbox
