#include "curvrec/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "curvrec/affine.hpp"
#include "curvrec/euclidean.hpp"
#include "curvrec/series.hpp"

namespace curvrec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kSamples = 16385;

PlotCurve euclid(const std::string& spec, double L, const std::string& label) {
    return {reconstruct_euclidean(parse_spec(spec), L, kSamples), label};
}

PlotCurve picard(const std::string& spec, double L, std::optional<int> iterations, const std::string& label) {
    PicardOptions opt;
    opt.iterations = iterations;
    return {picard_reconstruct(parse_spec(spec), L, opt).first, label};
}

PlotCurve series(double c, int k, double L, const std::string& label) {
    return {series_curve(MonomialSeries(c, k, {1.0, 0.0}, {0.0, 1.0}, L), L, 2049), label};
}

FigurePanel panel(std::string file, std::string title, std::vector<PlotCurve> curves) {
    FigurePanel p;
    p.file = std::move(file);
    p.plot.title = std::move(title);
    p.plot.curves = std::move(curves);
    return p;
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"mn-ex",    "recon-kn", "closed-kn", "k-fraction",
                                                   "mu-const", "picard",   "mu-alpha"};
    return names;
}

std::vector<FigurePanel> build_figure(const std::string& name) {
    std::vector<FigurePanel> out;
    if (name == "mn-ex") {
        out.push_back(panel("mn-ex-kappa1.svg", "kappa = sin s + cos s + 1/3, s in [0, 6 pi]",
                            {euclid("sinusoid:1,1,1/3", 6 * kPi, "")}));
        out.push_back(panel("mn-ex-kappa2.svg", "kappa = sin s + cos s + 1, s in [0, 6 pi]",
                            {euclid("sinusoid:1,1,1", 6 * kPi, "")}));
    } else if (name == "recon-kn") {
        out.push_back(panel("recon-kn.svg", "kappa_n and sin on [0, 2 pi]",
                            {euclid("kn:10", 2 * kPi, "n = 10"), euclid("kn:20", 2 * kPi, "n = 20"),
                             euclid("kn:40", 2 * kPi, "n = 40"), euclid("sin", 2 * kPi, "sin")}));
    } else if (name == "closed-kn") {
        out.push_back(panel("closed-kn-10.svg", "kappa_10, s in [0, 20 pi]", {euclid("kn:10", 20 * kPi, "")}));
        out.push_back(panel("closed-kn-20.svg", "kappa_20, s in [0, 40 pi]", {euclid("kn:20", 40 * kPi, "")}));
        out.push_back(panel("closed-kn-40.svg", "kappa_40, s in [0, 80 pi]", {euclid("kn:40", 80 * kPi, "")}));
        out.push_back(panel("closed-kn-sin.svg", "sin, s in [0, 20 pi]", {euclid("sin", 20 * kPi, "")}));
    } else if (name == "k-fraction") {
        out.push_back(panel("k-fraction-5_3.svg", "kappa_5/3, s in [0, 10 pi]", {euclid("kn:5/3", 10 * kPi, "")}));
        out.push_back(panel("k-fraction-3_5.svg", "kappa_3/5, s in [0, 6 pi]", {euclid("kn:3/5", 6 * kPi, "")}));
        out.push_back(panel("k-fraction-7_3.svg", "kappa_7/3, s in [0, 14 pi]", {euclid("kn:7/3", 14 * kPi, "")}));
        out.push_back(
            panel("k-fraction-m5_3.svg", "kappa_-5/3, s in [0, 10 pi]", {euclid("kn:-5/3", 10 * kPi, "")}));
    } else if (name == "mu-const") {
        out.push_back(panel("mu-const-parabola.svg", "mu = 0", {picard("const:0", 4.0, std::nullopt, "")}));
        out.push_back(panel("mu-const-ellipse.svg", "mu = 2",
                            {picard("const:2", 2 * kPi / std::numbers::sqrt2, std::nullopt, "")}));
        out.push_back(panel("mu-const-hyperbola.svg", "mu = -3", {picard("const:-3", 2.0, std::nullopt, "")}));
    } else if (name == "picard") {
        out.push_back(panel("picard-2_5.svg", "mu_2/5 on [0, 22], 200 iterations", {picard("mun:2/5", 22.0, 200, "")}));
        out.push_back(panel("picard-3_5.svg", "mu_3/5 on [0, 20], 200 iterations", {picard("mun:3/5", 20.0, 200, "")}));
        out.push_back(panel("picard-2_3.svg", "mu_2/3 on [0, 10], 200 iterations", {picard("mun:2/3", 10.0, 200, "")}));
        out.push_back(panel("picard-3_8.svg", "mu_3/8 on [0, 8], 200 iterations", {picard("mun:3/8", 8.0, 200, "")}));
    } else if (name == "mu-alpha") {
        out.push_back(panel("mu-alpha.svg", "mu = alpha on [0, 3]", {series(1.0, 1, 3.0, "")}));
        out.push_back(panel("mu-alpha2.svg", "mu = alpha^2 on [0, 3]", {series(1.0, 2, 3.0, "")}));
    } else {
        throw std::invalid_argument("unknown figure '" + name + "'");
    }
    return out;
}

}  // namespace curvrec
