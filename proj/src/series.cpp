#include "curvrec/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "curvrec/errors.hpp"
#include "curvrec/numerics.hpp"

namespace curvrec {

namespace {

// |c|^i a^{Ki+1} / (i! K^{2i}) in the log domain.
double term_bound(double c, int K, std::size_t i, double a) {
    if (i == 0) {
        return a;
    }
    if (c == 0.0 || a == 0.0) {
        return 0.0;
    }
    const double di = static_cast<double>(i);
    return std::exp(di * std::log(std::abs(c)) + (static_cast<double>(K) * di + 1.0) * std::log(a) -
                    std::lgamma(di + 1.0) - 2.0 * di * std::log(static_cast<double>(K)));
}

// Walks the two coefficient chains at |alpha| = a and reports how many i-terms are needed.
std::size_t terms_needed(double c, int K, double a, double tol) {
    if (c == 0.0 || a == 0.0) {
        return 1;
    }
    const double x = std::abs(c) * std::pow(a, K);
    double t0 = 1.0;
    double t1 = a;
    for (std::size_t i = 1; i <= kSeriesTermCap; ++i) {
        const double iK = static_cast<double>(i) * K;
        t0 *= x / (iK * (iK - 1.0));
        t1 *= x / (iK * (iK + 1.0));
        const bool past_peak = x < iK * (iK - 1.0);
        if (past_peak && std::max({term_bound(c, K, i, a), t0, t1}) < tol) {
            return i;
        }
    }
    throw SolverError("series: term tolerance unreachable within " + std::to_string(kSeriesTermCap) + " terms",
                      std::max(t0, t1));
}

struct SeriesSums {
    double s0;  // sum p_i a^{m(i)} for the T0 chain
    double s1;  // same for the N0 chain
};

// Sums the two chains, with each monomial a^m mapped by `shape(m)` (a weight
// multiplying the plain term) and an overall power shift.
template <typename Shape>
SeriesSums sum_chains(double c, int K, double alpha, double tol, Shape shape) {
    const double z = -c * std::pow(alpha, K);
    const double a = std::abs(alpha);
    const std::size_t n = terms_needed(c, K, a, tol);
    double t0 = 1.0;
    double t1 = alpha;
    numerics::CompensatedSum s0;
    numerics::CompensatedSum s1;
    s0.add(t0 * shape(0));
    s1.add(t1 * shape(1));
    for (std::size_t i = 1; i <= n; ++i) {
        const double iK = static_cast<double>(i) * K;
        t0 *= z / (iK * (iK - 1.0));
        t1 *= z / (iK * (iK + 1.0));
        const int m = static_cast<int>(i) * K;
        s0.add(t0 * shape(m));
        s1.add(t1 * shape(m + 1));
    }
    return {s0.value(), s1.value()};
}

}  // namespace

MonomialSeries::MonomialSeries(double c, int k, Point2 T0, Point2 N0, double alpha_max, double term_tol)
    : c_(c), k_(k), T0_(T0), N0_(N0), alpha_max_(alpha_max), term_tol_(term_tol) {
    if (k < 0) {
        throw std::invalid_argument("MonomialSeries: k must be non-negative");
    }
    if (!std::isfinite(c) || !(alpha_max >= 0.0) || !std::isfinite(alpha_max) || !(term_tol > 0.0)) {
        throw std::invalid_argument("MonomialSeries: need finite c, alpha_max >= 0 and term_tol > 0");
    }
    if (!(std::abs(cross(T0, N0) - 1.0) <= 1e-12)) {
        throw std::invalid_argument("MonomialSeries: det[T0, N0] must be 1");
    }
    truncation_ = terms_needed(c, K(), alpha_max, term_tol) + 1;
    for (int i = 1; i <= 5; ++i) {
        const GammaRatios g = gamma_ratio_check(K(), i);
        if (std::abs(g.psi_minus - g.gamma_form_minus) > 1e-10 * g.psi_minus ||
            std::abs(g.psi_plus - g.gamma_form_plus) > 1e-10 * g.psi_plus) {
            throw std::logic_error("MonomialSeries: Gamma-form cross-check failed at i = " + std::to_string(i));
        }
    }
}

Point2 MonomialSeries::tangent(double alpha) const {
    const SeriesSums s = sum_chains(c_, K(), alpha, term_tol_, [](int) { return 1.0; });
    return s.s0 * T0_ + s.s1 * N0_;
}

Point2 MonomialSeries::normal(double alpha) const {
    if (alpha == 0.0) {
        return N0_;
    }
    // d/da a^m = m a^{m-1}: weight m / a.
    const SeriesSums s = sum_chains(c_, K(), alpha, term_tol_, [alpha](int m) { return m / alpha; });
    return s.s0 * T0_ + s.s1 * N0_;
}

Point2 MonomialSeries::position(double alpha) const {
    // integral of a^m = a^{m+1} / (m + 1): weight a / (m + 1).
    const SeriesSums s =
        sum_chains(c_, K(), alpha, term_tol_, [alpha](int m) { return alpha / static_cast<double>(m + 1); });
    return s.s0 * T0_ + s.s1 * N0_;
}

SampledCurve series_curve(const MonomialSeries& ms, double L, std::size_t n) {
    if (!(L > 0.0) || n < 2) {
        throw std::invalid_argument("series_curve: need L > 0 and n >= 2");
    }
    std::vector<double> grid = numerics::linspace(0.0, L, n);
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = ms.position(grid[i]);
    }
    return SampledCurve(std::move(grid), std::move(pts));
}

std::vector<double> recurrence_coefficients(double c, int k, std::size_t n_max, double b0, double b1) {
    if (k < 0) {
        throw std::invalid_argument("recurrence_coefficients: k must be non-negative");
    }
    const std::size_t K = static_cast<std::size_t>(k) + 2;
    std::vector<double> b(n_max + 1, 0.0);
    b[0] = b0;
    if (n_max >= 1) {
        b[1] = b1;
    }
    for (std::size_t n = K; n <= n_max; ++n) {
        const double dn = static_cast<double>(n);
        b[n] = -c * b[n - K] / (dn * (dn - 1.0));
    }
    return b;
}

GammaRatios gamma_ratio_check(int K, int i) {
    if (K < 2 || i < 1) {
        throw std::invalid_argument("gamma_ratio_check: need K >= 2 and i >= 1");
    }
    GammaRatios g{1.0, 1.0, 0.0, 0.0};
    for (int j = 1; j <= i; ++j) {
        g.psi_minus /= static_cast<double>(j * K - 1);
        g.psi_plus /= static_cast<double>(j * K + 1);
    }
    const double dK = static_cast<double>(K);
    const double di = static_cast<double>(i);
    const double scale = (di + 1.0) * std::log(dK);
    // Gamma(-1/K) < 0 for K >= 2, so -Gamma(-1/K) = |Gamma(-1/K)|.
    g.gamma_form_minus = std::exp(std::lgamma(-1.0 / dK) - scale - std::lgamma(di + 1.0 - 1.0 / dK));
    g.gamma_form_plus = std::exp(std::lgamma(1.0 / dK) - scale - std::lgamma(di + 1.0 + 1.0 / dK));
    return g;
}

}  // namespace curvrec
