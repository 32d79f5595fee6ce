#pragma once

// Curvature functions addressable from the command line.
//
// Grammar (one line, case-sensitive):
//   const:<c> | sinusoid:<a>,<b>,<c> | sin | kn:<p>/<q> | mun:<p>/<q>
//   | monomial:<c>,<k> | table:<path.csv>[,periodic]
// optionally followed by `+bump:<amp>`, which adds amp * f(t) (the bump on (0, 2),
// not periodically extended). Numbers are decimals or <int>/<int>; fractions must be
// reduced. kn and mun take an integer or a reduced fraction, never a decimal.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvrec/rational.hpp"

namespace curvrec {

/// A real parameter, remembering its exact rational value when it was written as one.
struct Number {
    double value{0.0};
    std::optional<Rational> exact;

    [[nodiscard]] static Number of(double v) { return {v, std::nullopt}; }
    [[nodiscard]] static Number of(Rational r) { return {r.value(), r}; }
    [[nodiscard]] std::string to_string() const;

    /// Numbers are equal when their values are; `exact` only records how the value was written.
    friend bool operator==(const Number& a, const Number& b) { return a.value == b.value; }
};

enum class Interpolation { linear, cubic };

/// The smooth bump: 0 outside (0, 2), 1 at s = 1, unit integral.
[[nodiscard]] double bump(double s);

class CurvatureSpec {
public:
    struct Constant {
        Number c;
        friend bool operator==(const Constant&, const Constant&) = default;
    };
    /// a sin t + b cos t + c
    struct Sinusoid {
        Number a;
        Number b;
        Number c;
        friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
    };
    /// sin t + (2 pi / r) f(t), periodic with period 2 pi.
    struct BumpKappa {
        Rational r;
        friend bool operator==(const BumpKappa&, const BumpKappa&) = default;
    };
    /// r^2 pi^2 (f(t) + 1)^2, periodic with period 2.
    struct BumpMu {
        Rational r;
        friend bool operator==(const BumpMu&, const BumpMu&) = default;
    };
    /// c t^k
    struct Monomial {
        Number c;
        int k{0};
        friend bool operator==(const Monomial&, const Monomial&) = default;
    };
    struct Table {
        std::string path;
        std::vector<double> grid;
        std::vector<double> values;
        bool periodic{false};
        Interpolation interpolation{Interpolation::linear};
        /// Natural-spline second derivatives at the nodes (cubic only).
        std::vector<double> spline_second;
        friend bool operator==(const Table&, const Table&) = default;
    };
    using Kind = std::variant<Constant, Sinusoid, BumpKappa, BumpMu, Monomial, Table>;

    CurvatureSpec() : kind_(Constant{}) {}
    explicit CurvatureSpec(Kind kind, double bump_amplitude = 0.0);

    [[nodiscard]] static CurvatureSpec constant(double c) { return CurvatureSpec(Constant{Number::of(c)}); }
    [[nodiscard]] static CurvatureSpec sinusoid(double a, double b, double c) {
        return CurvatureSpec(Sinusoid{Number::of(a), Number::of(b), Number::of(c)});
    }
    [[nodiscard]] static CurvatureSpec bump_kappa(Rational r);
    [[nodiscard]] static CurvatureSpec bump_mu(Rational r) { return CurvatureSpec(BumpMu{r}); }
    [[nodiscard]] static CurvatureSpec monomial(double c, int k);
    /// Throws std::invalid_argument unless the grid is strictly increasing with matching values.
    [[nodiscard]] static CurvatureSpec table(std::vector<double> grid, std::vector<double> values, bool periodic,
                                             Interpolation interpolation = Interpolation::linear,
                                             std::string path = {});

    /// Copy with amp * bump(t) added.
    [[nodiscard]] CurvatureSpec with_bump(double amplitude) const;

    [[nodiscard]] const Kind& kind() const { return kind_; }
    [[nodiscard]] double bump_amplitude() const { return bump_amplitude_; }

    /// Throws curvrec::Error when a non-periodic table is evaluated outside its grid.
    [[nodiscard]] double operator()(double t) const;

    /// Natural period of the periodic kinds (ignores any +bump term, which is not periodic).
    [[nodiscard]] std::optional<double> period() const;

    /// Canonical text; parse_spec(to_string()) reproduces this curvature.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CurvatureSpec&, const CurvatureSpec&) = default;

private:
    Kind kind_;
    double bump_amplitude_{0.0};
};

/// Throws ParseError (with byte offset) on malformed text, unknown kinds and
/// non-reduced fractions; IoError when a table file cannot be read.
[[nodiscard]] CurvatureSpec parse_spec(std::string_view text);

[[nodiscard]] inline double eval_spec(const CurvatureSpec& spec, double t) { return spec(t); }

}  // namespace curvrec
