#pragma once

// Named plot sets reproducing the reference figure classes: closed and open
// Euclidean reconstructions, the bump families, conics, Picard loops and the
// monomial series curves.

#include <string>
#include <vector>

#include "curvrec/svg.hpp"

namespace curvrec {

struct FigurePanel {
    std::string file;  ///< file name, e.g. "closed-kn-10.svg"
    PlotSpec plot;
};

[[nodiscard]] const std::vector<std::string>& figure_names();

/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] std::vector<FigurePanel> build_figure(const std::string& name);

}  // namespace curvrec
