#pragma once

// Grid numerics shared by the reconstruction modules: finite-difference stencils on
// arbitrary grids, cumulative quadrature, compensated and pairwise summation.

#include <cstddef>
#include <span>
#include <vector>

#include "curvrec/geometry.hpp"

namespace curvrec::numerics {

/// Fornberg weights: row d holds the weights of the d-th derivative at `x0` using
/// the given nodes, for d = 0..max_order.
[[nodiscard]] std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> nodes, int max_order);

/// Derivative of `order` at every node, using a stencil of `stencil` consecutive nodes
/// centered where possible and shifted (one-sided) near the ends.
[[nodiscard]] std::vector<double> derivative(std::span<const double> grid, std::span<const double> values, int order,
                                             int stencil);
[[nodiscard]] std::vector<Point2> derivative(std::span<const double> grid, std::span<const Point2> values, int order,
                                             int stencil);

/// Running integral from grid[0] to every node. Each step integrates the quadratic
/// through three neighbouring nodes, which is composite Simpson on uniform grids with
/// a third-order half-step correction at odd nodes.
[[nodiscard]] std::vector<double> cumulative_integral(std::span<const double> grid, std::span<const double> values);
[[nodiscard]] std::vector<Point2> cumulative_integral(std::span<const double> grid, std::span<const Point2> values);

/// Same as above for a uniform grid with spacing h (no grid storage needed).
void cumulative_simpson_uniform(double h, std::span<const double> values, std::span<double> out);

/// Definite integral over the whole grid (last entry of cumulative_integral).
[[nodiscard]] double integral(std::span<const double> grid, std::span<const double> values);

/// Deterministic pairwise (cascade) summation.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double v);
    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_{0.0};
    double comp_{0.0};
};

[[nodiscard]] std::vector<double> linspace(double a, double b, std::size_t n);

/// Cubic Hermite segment on [t0, t1] with end values and end derivatives.
struct HermiteSegment {
    double t0;
    double t1;
    Point2 p0;
    Point2 p1;
    Point2 d0;
    Point2 d1;

    [[nodiscard]] Point2 value(double t) const;
    [[nodiscard]] Point2 tangent(double t) const;
};

/// Node derivatives and cumulative Euclidean arc length of a sampled curve,
/// computed from Hermite segments integrated by Gauss-Legendre.
struct ArcLengthTable {
    std::vector<Point2> velocity;
    std::vector<double> arclength;
};
[[nodiscard]] ArcLengthTable arclength_table(const SampledCurve& curve);

/// Monotone (Fritsch-Carlson limited) cubic Hermite interpolation of an increasing
/// table x -> y with suggested node slopes. Evaluates at each query point.
[[nodiscard]] std::vector<double> monotone_hermite(std::span<const double> x, std::span<const double> y,
                                                   std::span<const double> slopes, std::span<const double> queries);

/// Evaluates the Hermite interpolant of a curve (with given node velocities) at parameter t.
[[nodiscard]] Point2 hermite_curve_at(const SampledCurve& curve, std::span<const Point2> velocity, double t);

}  // namespace curvrec::numerics
