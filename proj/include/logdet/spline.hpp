#pragma once

#include <span>
#include <string>
#include <vector>

#include "logdet/errors.hpp"

namespace logdet {

// Edge-weight rule for the path-graph Laplacian.
//
// InverseSymmetric weights each edge by the inverse of the gap between its
// endpoints (symmetric adjacency). PseudocodeRaw assigns the raw gaps
// asymmetrically (forward gap above the diagonal, previous gap below) and
// exists for comparison runs.
enum class WeightRule {
    InverseSymmetric,
    PseudocodeRaw,
};

std::string to_string(WeightRule rule);
WeightRule weight_rule_from_string(const std::string& name);

// Path graph over coordinates x_1..x_{k}, last vertex unknown.
struct SplineProblem {
    std::vector<double> coords;
    std::vector<double> edge_weights;  // forward weight per edge
    std::vector<double> laplacian;     // row-major, k x k
    std::vector<double> known;         // g_k, filled by extrapolate
    WeightRule rule = WeightRule::InverseSymmetric;
};

// x_{j+1} = x_j + 1.5 (x_j - x_{j-1}).
// Throws NeedTwoPointsError (fewer than two coordinates) and
// SaturatedPatternError (zero last gap).
double extrapolation_point(std::span<const double> x);

// Builds the adjacency/degree/Laplacian for the given vertex coordinates.
// Requires at least three coordinates, strictly increasing.
SplineProblem build_path_laplacian(std::vector<double> x, WeightRule rule);

// Places (x_j, D^j) on a path graph, extends it by one extrapolated vertex
// and returns the value there that minimizes the squared norm of the
// Laplacian applied to the full vertex function. A saturated density
// sequence (zero last gap) returns the last known value directly, which is
// exact for a full pattern.
double extrapolate(std::span<const double> known, std::span<const double> x, WeightRule rule);

// S^j for j = 2..m, where S^j extrapolates from the first j data points.
struct SplineSeries {
    std::vector<double> values;  // S^2..S^m
};

SplineSeries spline_series(std::span<const double> known, std::span<const double> x,
                           WeightRule rule);

}  // namespace logdet
