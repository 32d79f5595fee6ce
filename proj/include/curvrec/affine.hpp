#pragma once

// Equi-affine arc length and curvature, constant-curvature conics, and reconstruction
// of a curve from its affine curvature mu by Picard iteration of A' = C A with
// C = [[0, 1], [-mu, 0]].

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "curvrec/curvespec.hpp"
#include "curvrec/geometry.hpp"
#include "curvrec/report.hpp"

namespace curvrec {

inline constexpr double kDefaultPicardTolerance = 1e-10;
inline constexpr int kPicardIterationCap = 10'000;

struct PicardOptions {
    std::size_t n_grid{0};              ///< grid nodes; 0 picks h with h^4 c L <= 0.01 tol
    std::optional<int> iterations;      ///< fixed sweep count; otherwise run to `tolerance`
    double tolerance{kDefaultPicardTolerance};
    int max_iterations{kPicardIterationCap};
    FrameMatrix A0{};                   ///< initial frame, det 1
    Point2 origin{};
    std::size_t segments{0};            ///< windows; 0 picks the fewest with c * window <= 8
};

struct PicardResult {
    std::vector<double> grid;
    std::vector<FrameMatrix> frames;
    int iterations{0};
    double c{1.0};            ///< max{1, grid sup |mu|}
    double tail_bound{0.0};   ///< certified max-entry distance to the exact frame
    std::size_t segments{1};
};

struct PicardBounds {
    double bound_n;     ///< |A0| sum_{i<=n} (c a)^i / i!   (bound on |A_n|)
    double bound_a;     ///< |A0| e^{c a}                   (bound on |A|)
    double bound_step;  ///< |A0| (c a)^n / n!              (bound on |A_n - A_{n-1}|)
    double bound_tail;  ///< |A0| e^{c a} (c a)^{n+1} / (n+1)!  (bound on |A_n - A|)
};

/// Picard sweeps on one uniform grid: A_n = A0 + cumulative integral of C A_{n-1}.
class PicardSolver {
public:
    /// `mu` holds mu at every node of the uniform grid starting at `start` with spacing `h`.
    PicardSolver(double start, double h, std::vector<double> mu, const Mat2& A0);

    void step();

    [[nodiscard]] int iterations() const { return iterations_; }
    [[nodiscard]] std::size_t size() const { return mu_.size(); }
    [[nodiscard]] Mat2 frame(std::size_t i) const { return {a11_[i], a12_[i], a21_[i], a22_[i]}; }
    [[nodiscard]] std::vector<FrameMatrix> frames() const;
    /// Grid sup of max-entry(A_n - A_{n-1}) for the latest sweep.
    [[nodiscard]] double last_step_gap() const { return last_gap_; }

private:
    double start_;
    double h_;
    std::vector<double> mu_;
    Mat2 A0_;
    std::vector<double> a11_, a12_, a21_, a22_;
    std::vector<double> f_, g_;
    int iterations_{0};
    double last_gap_{0.0};
};

/// Reconstruct on [a, b] with frame A0 and origin at a. Throws SolverError carrying the
/// best bound when the tolerance needs more than max_iterations sweeps.
[[nodiscard]] std::pair<SampledCurve, PicardResult> picard_reconstruct(const CurvatureSpec& mu, double a, double b,
                                                                       const PicardOptions& options = {});
[[nodiscard]] inline std::pair<SampledCurve, PicardResult> picard_reconstruct(const CurvatureSpec& mu, double L,
                                                                              const PicardOptions& options = {}) {
    return picard_reconstruct(mu, 0.0, L, options);
}

/// Closed-form bounds, with factorials in the log domain. Requires c >= 1, alpha >= 0, n >= 0.
[[nodiscard]] PicardBounds picard_bounds(double c, double alpha, int n, double a0_norm);

/// Re-parametrize by affine arc length (uniform in alpha from 0). Throws RegularityError
/// where det(g', g'') <= 0.
[[nodiscard]] SampledCurve affine_arclength(const SampledCurve& curve);

/// mu from kappa(s) on the alpha grid alpha(s) = integral of kappa^{1/3}.
/// Throws RegularityError where kappa <= 0.
[[nodiscard]] SampledFunction affine_curvature_from_euclidean(const SampledFunction& kappa);

/// Affine curvature of a convex, counterclockwise sampled curve (via its Euclidean curvature).
[[nodiscard]] SampledFunction affine_curvature(const SampledCurve& curve);

/// The conic with constant affine curvature mu through the origin with T = (1, 0),
/// N = (0, 1), sampled at n uniform alpha values on [0, L].
[[nodiscard]] SampledCurve conic_closed_form(double mu, double L, std::size_t n);
[[nodiscard]] FrameMatrix conic_frame(double mu, double alpha);

/// |A0| delta L e^{c_hat L}, delta and c_hat from grid sups on [a, b].
[[nodiscard]] double frame_divergence_bound(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double a, double b,
                                            const FrameMatrix& A0 = {}, std::size_t n = 4097);
[[nodiscard]] inline double frame_divergence_bound(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double L) {
    return frame_divergence_bound(mu1, mu2, 0.0, L);
}

/// Reconstruct both from the canonical frame with Picard tolerance min(1e-10, 1% of the
/// bound) and compare against sqrt(2) (delta L / c_hat)(e^{c_hat L} - 1).
[[nodiscard]] BoundReport affine_bound_check(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double a, double b,
                                             std::size_t n_grid = 0);
[[nodiscard]] inline BoundReport affine_bound_check(const CurvatureSpec& mu1, const CurvatureSpec& mu2, double L) {
    return affine_bound_check(mu1, mu2, 0.0, L);
}

}  // namespace curvrec
