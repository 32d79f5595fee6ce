#pragma once

// Power-series frames for affine curvature mu(alpha) = c alpha^k. With K = k + 2,
// T(alpha) = T0 sum_i p_i alpha^{iK} + N0 sum_i q_i alpha^{iK+1}, where
//   p_i = p_{i-1} (-c) / (iK (iK - 1)),  q_i = q_{i-1} (-c) / (iK (iK + 1)),  p_0 = q_0 = 1.

#include <cstddef>
#include <vector>

#include "curvrec/geometry.hpp"

namespace curvrec {

inline constexpr double kSeriesTermTolerance = 1e-14;
inline constexpr std::size_t kSeriesTermCap = 100'000;

class MonomialSeries {
public:
    /// Throws std::invalid_argument when k < 0 or det[T0, N0] differs from 1 by more than
    /// 1e-12; SolverError when `term_tol` needs more than 1e5 terms on [0, alpha_max].
    MonomialSeries(double c, int k, Point2 T0 = {1.0, 0.0}, Point2 N0 = {0.0, 1.0}, double alpha_max = 1.0,
                   double term_tol = kSeriesTermTolerance);

    [[nodiscard]] double c() const { return c_; }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int K() const { return k_ + 2; }
    [[nodiscard]] const Point2& T0() const { return T0_; }
    [[nodiscard]] const Point2& N0() const { return N0_; }
    [[nodiscard]] double alpha_max() const { return alpha_max_; }
    [[nodiscard]] double term_tol() const { return term_tol_; }
    /// Retained i-terms for |alpha| <= alpha_max.
    [[nodiscard]] std::size_t truncation() const { return truncation_; }

    /// T(alpha), summed until the terms fall below term_tol past their peak.
    [[nodiscard]] Point2 tangent(double alpha) const;
    /// N(alpha) = T'(alpha), termwise.
    [[nodiscard]] Point2 normal(double alpha) const;
    /// gamma(alpha) with gamma(0) = 0, termwise integral of T.
    [[nodiscard]] Point2 position(double alpha) const;

private:
    double c_;
    int k_;
    Point2 T0_;
    Point2 N0_;
    double alpha_max_;
    double term_tol_;
    std::size_t truncation_{0};
};

[[nodiscard]] inline Point2 series_tangent(const MonomialSeries& ms, double alpha) { return ms.tangent(alpha); }

/// gamma on n uniform samples of [0, L], starting at the origin.
[[nodiscard]] SampledCurve series_curve(const MonomialSeries& ms, double L, std::size_t n);

/// Scalar b_0..b_{n_max} from n (n - 1) b_n = -c b_{n-K}, b_n = 0 for 2 <= n <= k + 1.
[[nodiscard]] std::vector<double> recurrence_coefficients(double c, int k, std::size_t n_max, double b0 = 1.0,
                                                          double b1 = 1.0);

struct GammaRatios {
    double psi_minus;        ///< prod_{j=1..i} 1 / (jK - 1)
    double psi_plus;         ///< prod_{j=1..i} 1 / (jK + 1)
    double gamma_form_minus; ///< -Gamma(-1/K) / (K^{i+1} Gamma(i + 1 - 1/K))
    double gamma_form_plus;  ///< Gamma(1/K) / (K^{i+1} Gamma(i + 1 + 1/K))
};

/// Both products directly and through log-Gamma. Requires K >= 2, i >= 1.
[[nodiscard]] GammaRatios gamma_ratio_check(int K, int i);

}  // namespace curvrec
