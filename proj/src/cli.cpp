#include "curvrec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "curvrec/affine.hpp"
#include "curvrec/curvespec.hpp"
#include "curvrec/errors.hpp"
#include "curvrec/euclidean.hpp"
#include "curvrec/figures.hpp"
#include "curvrec/io.hpp"
#include "curvrec/series.hpp"
#include "curvrec/svg.hpp"

namespace curvrec::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Domain {
    double a;
    double b;
};

double parse_real(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw UsageError(what + ": '" + text + "' is not a finite number");
    }
    return v;
}

Domain parse_domain(const std::string& text) {
    const std::size_t colon = text.find(':', 1);
    if (colon == std::string::npos) {
        throw UsageError("--domain: expected <a>:<b>, got '" + text + "'");
    }
    const Domain d{parse_real(text.substr(0, colon), "--domain"), parse_real(text.substr(colon + 1), "--domain")};
    if (!(d.b > d.a)) {
        throw UsageError("--domain: need b > a");
    }
    return d;
}

Domain domain_or_period(const std::string& text, const CurvatureSpec& spec) {
    if (!text.empty()) {
        return parse_domain(text);
    }
    if (const auto p = spec.period()) {
        return {0.0, *p};
    }
    throw UsageError("--domain is required for non-periodic curvature");
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct ReconstructArgs {
    std::string mode;
    std::string curvature;
    std::string domain;
    std::size_t samples{0};
    std::optional<int> iterations;
    std::optional<double> tol;
    std::string out;
    std::string svg;
};

int cmd_reconstruct(const ReconstructArgs& args, std::ostream& out) {
    const CurvatureSpec spec = parse_spec(args.curvature);
    const Domain dom = domain_or_period(args.domain, spec);
    if (args.samples != 0 && args.samples < 16) {
        throw UsageError("--samples must be at least 16");
    }
    Json j;
    j["mode"] = args.mode;
    j["curvature"] = spec.to_string();
    j["domain"] = {dom.a, dom.b};

    std::optional<SampledCurve> curve;
    Json extra;
    std::string param = "s";
    if (args.mode == "euclid") {
        if (args.iterations || args.tol) {
            throw UsageError("--iterations/--tol apply to affine reconstruction only");
        }
        curve = reconstruct_euclidean(spec, dom.a, dom.b, args.samples == 0 ? 4097 : args.samples);
    } else if (args.mode == "affine") {
        PicardOptions opt;
        opt.n_grid = args.samples;
        opt.iterations = args.iterations;
        if (args.tol) {
            opt.tolerance = *args.tol;
        }
        auto [c, res] = picard_reconstruct(spec, dom.a, dom.b, opt);
        curve = std::move(c);
        extra = to_json(res);
        extra["segments"] = res.segments;
        param = "alpha";
    } else {
        const auto* mono = std::get_if<CurvatureSpec::Monomial>(&spec.kind());
        if (mono == nullptr || spec.bump_amplitude() != 0.0) {
            throw UsageError("series reconstruction needs a monomial:<c>,<k> curvature");
        }
        if (dom.a != 0.0) {
            throw UsageError("series reconstruction starts at alpha = 0 (use --domain 0:<L>)");
        }
        if (args.iterations || args.tol) {
            throw UsageError("--iterations/--tol apply to affine reconstruction only");
        }
        const MonomialSeries ms(mono->c.value, mono->k, {1.0, 0.0}, {0.0, 1.0}, dom.b);
        curve = series_curve(ms, dom.b, args.samples == 0 ? 2049 : args.samples);
        extra["truncation"] = ms.truncation();
        param = "alpha";
    }
    j["samples"] = curve->size();
    j["length"] = dom.b - dom.a;
    j["endpoint_gap"] = curve->endpoint_gap();
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        j[it.key()] = it.value();
    }
    if (!args.out.empty()) {
        write_curve_csv(*curve, args.out, param);
        j["out"] = args.out;
    }
    if (!args.svg.empty()) {
        PlotSpec plot;
        plot.curves.push_back({*curve, ""});
        plot.title = spec.to_string();
        emit_svg(plot, args.svg);
        j["svg"] = args.svg;
    }
    print(out, j);
    return kExitOk;
}

int cmd_classify(const std::string& curvature, const std::string& period, std::ostream& out) {
    const CurvatureSpec spec = parse_spec(curvature);
    std::optional<double> l;
    if (!period.empty()) {
        l = parse_real(period, "--period");
        if (!(*l > 0.0)) {
            throw UsageError("--period must be positive");
        }
    }
    Json j;
    j["curvature"] = spec.to_string();
    const Json rep = to_json(classify_closure(spec, l));
    for (auto it = rep.begin(); it != rep.end(); ++it) {
        j[it.key()] = it.value();
    }
    print(out, j);
    return kExitOk;
}

int cmd_compare(const std::string& mode, const std::string& s1, const std::string& s2, const std::string& domain,
                const std::string& norm, std::size_t samples, std::ostream& out) {
    const CurvatureSpec k1 = parse_spec(s1);
    const CurvatureSpec k2 = parse_spec(s2);
    const Domain dom = domain.empty() ? domain_or_period(domain, k1) : parse_domain(domain);
    if (samples != 0 && samples < 16) {
        throw UsageError("--samples must be at least 16");
    }
    BoundReport rep;
    if (mode == "euclid") {
        rep = euclidean_bound_check(k1, k2, dom.a, dom.b, norm == "l1" ? NormKind::l1 : NormKind::linf,
                                    samples == 0 ? 8193 : samples);
    } else {
        if (norm == "l1") {
            throw UsageError("--norm l1 applies to Euclidean comparison only");
        }
        rep = affine_bound_check(k1, k2, dom.a, dom.b, samples);
    }
    Json j;
    j["curvature1"] = k1.to_string();
    j["curvature2"] = k2.to_string();
    const Json r = to_json(rep);
    for (auto it = r.begin(); it != r.end(); ++it) {
        j[it.key()] = it.value();
    }
    print(out, j);
    return rep.satisfied ? kExitOk : kExitBound;
}

int cmd_figure(const std::string& name, const std::string& outdir, const std::string& svg, std::ostream& out) {
    std::vector<std::string> names;
    if (name == "all") {
        names = figure_names();
    } else {
        names.push_back(name);
    }
    Json written = Json::array();
    for (const auto& n : names) {
        std::vector<FigurePanel> panels;
        try {
            panels = build_figure(n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!svg.empty()) {
            if (names.size() != 1 || panels.size() != 1) {
                throw UsageError("--svg needs a single-panel figure; use --outdir");
            }
            emit_svg(panels.front().plot, svg);
            written.push_back(svg);
            continue;
        }
        std::filesystem::create_directories(outdir);
        for (const auto& p : panels) {
            const std::string path = (std::filesystem::path(outdir) / p.file).string();
            emit_svg(p.plot, path);
            written.push_back(path);
        }
    }
    Json j;
    j["figures"] = names;
    j["written"] = written;
    print(out, j);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reconstruct planar curves from Euclidean or equi-affine curvature", "curvrec"};
    app.require_subcommand(1);

    ReconstructArgs rec;
    auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a curve and write it as CSV/SVG");
    reconstruct->add_option("mode", rec.mode, "euclid | affine | series")
        ->required()
        ->check(CLI::IsMember({"euclid", "affine", "series"}));
    reconstruct->add_option("--curvature", rec.curvature, "Curvature spec")->required();
    reconstruct->add_option("--domain", rec.domain, "Parameter interval <a>:<b>");
    reconstruct->add_option("--samples", rec.samples, "Sample count (affine: grid size, 0 = automatic)");
    auto* iters = reconstruct->add_option("--iterations", rec.iterations, "Fixed Picard sweep count");
    auto* tol = reconstruct->add_option("--tol", rec.tol, "Certified Picard tail tolerance (default 1e-10)");
    iters->excludes(tol);
    reconstruct->add_option("--out", rec.out, "Curve CSV path");
    reconstruct->add_option("--svg", rec.svg, "SVG plot path");

    std::string cls_curvature;
    std::string cls_period;
    auto* classify = app.add_subcommand("classify", "Predict closedness from a periodic curvature");
    classify->add_option("--curvature", cls_curvature, "Curvature spec")->required();
    classify->add_option("--period", cls_period, "Period of the curvature (default: natural period)");

    std::string cmp_mode;
    std::string cmp_s1;
    std::string cmp_s2;
    std::string cmp_domain;
    std::string cmp_norm = "linf";
    std::size_t cmp_samples = 0;
    auto* compare = app.add_subcommand("compare", "Check the reconstruction distance estimate");
    compare->add_option("mode", cmp_mode, "euclid | affine")->required()->check(CLI::IsMember({"euclid", "affine"}));
    compare->add_option("spec1", cmp_s1, "First curvature")->required();
    compare->add_option("spec2", cmp_s2, "Second curvature")->required();
    compare->add_option("--domain", cmp_domain, "Parameter interval <a>:<b>");
    compare->add_option("--norm", cmp_norm, "linf | l1")->check(CLI::IsMember({"linf", "l1"}));
    compare->add_option("--samples", cmp_samples, "Sample count");

    std::string fig_name;
    std::string fig_outdir = ".";
    std::string fig_svg;
    auto* figure = app.add_subcommand("figure", "Write the SVG panels of a named figure");
    figure->add_option("name", fig_name, "Figure name or 'all'")->required();
    figure->add_option("--outdir", fig_outdir, "Output directory");
    figure->add_option("--svg", fig_svg, "Output path for a single-panel figure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reconstruct->parsed()) {
            return cmd_reconstruct(rec, out);
        }
        if (classify->parsed()) {
            return cmd_classify(cls_curvature, cls_period, out);
        }
        if (compare->parsed()) {
            return cmd_compare(cmp_mode, cmp_s1, cmp_s2, cmp_domain, cmp_norm, cmp_samples, out);
        }
        return cmd_figure(fig_name, fig_outdir, fig_svg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << " (best bound " << e.best_bound() << ")\n";
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitOther;
    }
}

}  // namespace curvrec::cli
