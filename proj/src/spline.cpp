#include "logdet/spline.hpp"

#include <cmath>

namespace logdet {

std::string to_string(WeightRule rule) {
    return rule == WeightRule::InverseSymmetric ? "inverse-symmetric" : "pseudocode-raw";
}

WeightRule weight_rule_from_string(const std::string& name) {
    if (name == "inverse-symmetric") {
        return WeightRule::InverseSymmetric;
    }
    if (name == "pseudocode-raw") {
        return WeightRule::PseudocodeRaw;
    }
    throw DomainError("unknown weight rule '" + name + "'");
}

double extrapolation_point(std::span<const double> x) {
    if (x.size() < 2) {
        throw NeedTwoPointsError("extrapolation needs at least two coordinates");
    }
    const double last = x[x.size() - 1];
    const double prev = x[x.size() - 2];
    if (last == prev) {
        throw SaturatedPatternError("zero gap between the last two coordinates");
    }
    return last + 1.5 * (last - prev);
}

SplineProblem build_path_laplacian(std::vector<double> x, WeightRule rule) {
    const std::size_t k = x.size();
    if (k < 3) {
        throw NeedTwoPointsError("a path Laplacian needs at least three vertices");
    }
    for (std::size_t i = 1; i < k; ++i) {
        if (!(x[i] > x[i - 1])) {
            throw NonIncreasingCoordinatesError("coordinates must be strictly increasing");
        }
    }

    SplineProblem problem;
    problem.rule = rule;
    problem.coords = std::move(x);
    problem.edge_weights.resize(k - 1);

    std::vector<double> adjacency(k * k, 0.0);
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const double gap = problem.coords[j + 1] - problem.coords[j];
        if (rule == WeightRule::InverseSymmetric) {
            const double w = 1.0 / gap;
            problem.edge_weights[j] = w;
            adjacency[j * k + (j + 1)] = w;
            adjacency[(j + 1) * k + j] = w;
        } else {
            // Raw gaps, asymmetric: the forward gap above the diagonal, the
            // previous gap below it. The first edge has no previous gap and
            // falls back to its own.
            const double back = j == 0 ? gap : problem.coords[j] - problem.coords[j - 1];
            problem.edge_weights[j] = gap;
            adjacency[j * k + (j + 1)] = gap;
            adjacency[(j + 1) * k + j] = back;
        }
    }

    // Laplacian = degree - adjacency, degree = row sums.
    problem.laplacian.assign(k * k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        double degree = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            degree += adjacency[r * k + c];
        }
        for (std::size_t c = 0; c < k; ++c) {
            problem.laplacian[r * k + c] = -adjacency[r * k + c];
        }
        problem.laplacian[r * k + r] = degree;
    }
    return problem;
}

double extrapolate(std::span<const double> known, std::span<const double> x, WeightRule rule) {
    if (known.size() < 2 || x.size() != known.size()) {
        throw NeedTwoPointsError("extrapolation needs at least two data points");
    }
    // A saturated pattern cannot be extended; its last estimate is already
    // exact, so report it as the spline value.
    if (x[x.size() - 1] == x[x.size() - 2]) {
        return known[known.size() - 1];
    }

    std::vector<double> coords(x.begin(), x.end());
    coords.push_back(extrapolation_point(x));
    SplineProblem problem = build_path_laplacian(std::move(coords), rule);
    problem.known.assign(known.begin(), known.end());

    // Normal equations of min_f || L_u f + L_k g_k ||^2 for the single
    // unknown: f = -(L_u . L_k g_k) / (L_u . L_u).
    const std::size_t k = problem.coords.size();
    const std::size_t m = known.size();
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
        const double* row = problem.laplacian.data() + r * k;
        double v = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            v += row[c] * known[c];
        }
        numerator += row[m] * v;
        denominator += row[m] * row[m];
    }
    if (denominator == 0.0) {
        throw ZeroNormColumnError("the unknown vertex column of the Laplacian is zero");
    }
    return -numerator / denominator;
}

SplineSeries spline_series(std::span<const double> known, std::span<const double> x,
                           WeightRule rule) {
    if (known.size() < 2 || x.size() != known.size()) {
        throw NeedTwoPointsError("a spline series needs at least two data points");
    }
    SplineSeries series;
    series.values.reserve(known.size() - 1);
    for (std::size_t j = 2; j <= known.size(); ++j) {
        series.values.push_back(extrapolate(known.first(j), x.first(j), rule));
    }
    return series;
}

}  // namespace logdet
