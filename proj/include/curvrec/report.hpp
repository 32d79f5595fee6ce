#pragma once

#include <optional>
#include <string>

namespace curvrec {

enum class NormKind { linf, l1 };

[[nodiscard]] inline const char* to_string(NormKind n) { return n == NormKind::linf ? "linf" : "l1"; }

/// Outcome of comparing two reconstructions against a distance estimate.
struct BoundReport {
    std::string mode;                ///< "euclid" or "affine"
    NormKind norm{NormKind::linf};   ///< norm used for delta
    double delta{0.0};               ///< grid norm of the curvature difference
    double L{0.0};                   ///< interval length
    std::optional<double> c_hat;     ///< max{1, sup|mu1|, sup|mu2|} (affine only)
    double bound{0.0};               ///< certified bound; `satisfied` tests against it
    double bound_stated{0.0};        ///< the tighter uncertified bound (equals `bound` in affine mode)
    double measured{0.0};            ///< Hausdorff distance of the registered reconstructions
    bool satisfied{false};
    bool stated_satisfied{false};
};

}  // namespace curvrec
