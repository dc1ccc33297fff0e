#ifndef LPBOX_CORE_PROJECTIONS_HPP
#define LPBOX_CORE_PROJECTIONS_HPP

#include "core/vecops.hpp"

namespace lpbox {

/// Radius of the shifted binary-equivalence sphere for p=2: sqrt(n)/2.
double sphere_radius(std::size_t n);

/// Euclidean projection onto the box [0,1]^n (component-wise clamp).
Vec project_box(const Vec& v);

/// Projection onto the sphere centered at (1/2)·1 with radius n^(1/p)/2.
/// Only p=2 is implemented; other values are rejected. A point within 1e-12
/// of the center maps deterministically to center + radius * e_1.
Vec project_sphere(const Vec& v, double p = 2.0);

/// Projection onto the nonnegative orthant (component-wise truncation at 0).
Vec project_nonneg(const Vec& v);

/// Membership test for box ∩ sphere: with tol=0 this is exactly v ∈ {0,1}^n.
/// Box check allows [-tol, 1+tol] per component; the squared sphere residual
/// | ||v - (1/2)1||^2 - n/4 | is allowed up to tol*n.
bool is_binary_by_intersection(const Vec& v, double tol);

}  // namespace lpbox

#endif
