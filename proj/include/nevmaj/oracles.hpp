#pragma once

#include <vector>

#include "nevmaj/hypgeo.hpp"
#include "nevmaj/majorant.hpp"

namespace nevmaj::oracle {

/// Harmonic measure of an arc by adaptive Gauss-Kronrod integration of the Poisson kernel, split at
/// the kernel peak when it lies inside the arc.
double harmonic_measure_quadrature(const DiskPoint& z, const BoundaryArc& arc, double tol = 1e-12);

/// Optimum of the covering LP by enumerating every vertex of the dual polytope
/// {y >= 0 : sum_i y_i P(z_i, xi_j) <= 1}. Exponential; intended for <= 4 constraints and a few
/// dozen angles.
double min_mass_by_vertices(const ConstraintSet& constraints, const std::vector<double>& grid);

/// Points at exact pseudohyperbolic distance t from z0, by pushing a circle of radius t through the
/// automorphism that moves 0 to z0.
std::vector<DiskPoint> pseudo_circle(const DiskPoint& z0, double t, int count);

}  // namespace nevmaj::oracle
