#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "curvrec/errors.hpp"
#include "curvrec/figures.hpp"
#include "curvrec/svg.hpp"
#include "support.hpp"

using namespace curvrec;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (std::size_t at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("equal aspect circle") {
    PlotSpec spec;
    spec.curves.push_back({testing::circle(1.0, 2000, {5, -3}), ""});
    spec.width = 800;
    spec.height = 500;
    const std::string svg = render_svg(spec);
    const std::regex num(R"((-?\d+\.\d+),(-?\d+\.\d+))");
    double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator(); ++it) {
        const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    CHECK(std::abs((xmax - xmin) - (ymax - ymin)) <= 1.0);
    const PlotTransform t = plot_transform(spec);
    CHECK(std::abs(t.scale_x + t.scale_y) <= 1e-12 * t.scale_x);
}

TEST_CASE("legend and paths") {
    PlotSpec spec;
    spec.curves.push_back({testing::circle(1.0, 100), "first"});
    spec.curves.push_back({testing::circle(2.0, 100), "second & more"});
    const std::string svg = render_svg(spec);
    CHECK(count(svg, "<path ") == 2);
    CHECK(count(svg, "<g class=\"legend\"") == 1);
    CHECK(svg.find("second &amp; more") != std::string::npos);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);

    PlotSpec bare;
    bare.curves.push_back({testing::circle(1.0, 100), ""});
    CHECK(render_svg(bare).find("legend") == std::string::npos);
}

TEST_CASE("deterministic output") {
    const auto dir = testing::scratch_dir("svg");
    PlotSpec spec;
    spec.curves.push_back({testing::circle(1.0, 500), "c"});
    spec.title = "circle";
    emit_svg(spec, (dir / "a.svg").string());
    emit_svg(spec, (dir / "b.svg").string());
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
    CHECK(slurp(dir / "a.svg") == render_svg(spec));
}

TEST_CASE("degenerate plots") {
    PlotSpec empty;
    CHECK_THROWS_AS(render_svg(empty), std::invalid_argument);
    PlotSpec flat;
    flat.curves.push_back({testing::sample([](double t) { return Point2{t, 0}; }, 0.0, 1.0, 5), ""});
    CHECK_THROWS_AS(render_svg(flat), IoError);
}

TEST_CASE("figures") {
    CHECK(figure_names().size() == 7);
    CHECK_THROWS_AS(build_figure("nope"), std::invalid_argument);
    const auto panels = build_figure("mu-alpha");
    REQUIRE_FALSE(panels.empty());
    for (const auto& p : panels) {
        CHECK(p.file.size() > 4);
        CHECK(p.file.substr(p.file.size() - 4) == ".svg");
        CHECK(p.plot.equal_aspect);
    }
}
