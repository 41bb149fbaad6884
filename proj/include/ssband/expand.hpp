#pragma once

#include <vector>

#include "ssband/field.hpp"
#include "ssband/wavelet.hpp"

namespace ssband {

// Values of the expansion on the closed grid t_i = i 2^-grid_depth,
// i = 0..2^grid_depth (out.front() == out.back() by periodicity).
// Runs the periodized synthesis filter bank to the finest stored level and
// gathers scaling-function samples, which are exact at dyadic points.
std::vector<double> expand_on_grid(const CoefficientField& f,
                                   const ScalingProfile& profile,
                                   int grid_depth);

// Point values at arbitrary locations (linear interpolation inside the
// scaling-function tables).  Used by the fixed-design regression model.
std::vector<double> expand_at_points(const CoefficientField& f,
                                     const ScalingProfile& profile,
                                     const std::vector<double>& points);

// max_i |f(t_i) - g(t_i)| on the dyadic grid.
double sup_norm_distance(const CoefficientField& f, const CoefficientField& g,
                         const ScalingProfile& profile, int grid_depth);

}  // namespace ssband
