#include "curvrec/curvespec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "curvrec/errors.hpp"
#include "curvrec/io.hpp"

namespace curvrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shortest %.{15,16,17}g text that reads back to the same double.
std::string shortest(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

// p/q with q | 10^k prints as a plain decimal, anything else as a fraction.
std::string rational_text(const Rational& r) {
    if (r.den == 1) {
        return std::to_string(r.num);
    }
    std::uint64_t den = static_cast<std::uint64_t>(r.den);
    for (std::uint64_t rest = den; rest != 1;) {
        if (rest % 2 == 0) {
            rest /= 2;
        } else if (rest % 5 == 0) {
            rest /= 5;
        } else {
            return r.to_string();
        }
    }
    // Long division; remainders stay below den <= 10^18, so 10 * rem fits in 64 bits.
    const std::uint64_t mag = r.num < 0 ? 0 - static_cast<std::uint64_t>(r.num) : static_cast<std::uint64_t>(r.num);
    std::string text = (r.num < 0 ? "-" : "") + std::to_string(mag / den) + ".";
    std::uint64_t rem = mag % den;
    while (rem != 0) {
        rem *= 10;
        text += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    return text;
}

double wrap(double t, double t0, double period) {
    const double shift = std::floor((t - t0) / period);
    double w = t - shift * period;
    // Rounding can land exactly on the right end; fold it back.
    if (w >= t0 + period) {
        w -= period;
    }
    return std::max(w, t0);
}

std::vector<double> natural_spline_second_derivatives(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) {
        return m;
    }
    // Thomas algorithm on the interior equations.
    std::vector<double> c(n, 0.0);
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1];
        const double h1 = x[i + 1] - x[i];
        const double a = h0 / 6.0;
        const double b = (h0 + h1) / 3.0;
        const double cc = h1 / 6.0;
        const double rhs = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
        const double denom = b - a * c[i - 1];
        c[i] = cc / denom;
        d[i] = (rhs - a * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = d[i] - c[i] * m[i + 1];
    }
    return m;
}

double table_eval(const CurvatureSpec::Table& tab, double t) {
    const auto& second = tab.spline_second;
    const auto& x = tab.grid;
    const auto& y = tab.values;
    if (tab.periodic) {
        t = wrap(t, x.front(), x.back() - x.front());
    } else if (t < x.front() || t > x.back()) {
        throw Error("table curvature evaluated at t = " + shortest(t) + " outside [" + shortest(x.front()) + ", " +
                    shortest(x.back()) + "] (mark the table periodic to extend it)");
    }
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    i = std::min(i, x.size() - 2);
    const double h = x[i + 1] - x[i];
    const double u = (t - x[i]) / h;
    const double lin = (1.0 - u) * y[i] + u * y[i + 1];
    if (tab.interpolation == Interpolation::linear || second.empty()) {
        return lin;
    }
    return lin - h * h / 6.0 * u * (1.0 - u) * ((2.0 - u) * second[i] + (1.0 + u) * second[i + 1]);
}

}  // namespace

std::string Number::to_string() const { return exact ? rational_text(*exact) : shortest(value); }

double bump(double s) {
    if (!(s > 0.0) || !(s < 2.0)) {
        return 0.0;
    }
    if (s == 1.0) {
        return 1.0;
    }
    const double e = s < 1.0 ? 1.0 / s - 1.0 / (1.0 - s) : 1.0 / (2.0 - s) - 1.0 / (s - 1.0);
    if (e > 700.0) {
        return 0.0;
    }
    if (e < -700.0) {
        return 1.0;
    }
    return 1.0 / (1.0 + std::exp(e));
}

CurvatureSpec::CurvatureSpec(Kind kind, double bump_amplitude) : kind_(std::move(kind)), bump_amplitude_(bump_amplitude) {
    if (!std::isfinite(bump_amplitude)) {
        throw std::invalid_argument("CurvatureSpec: non-finite bump amplitude");
    }
    if (const auto* m = std::get_if<Monomial>(&kind_); m && m->k < 0) {
        throw std::invalid_argument("CurvatureSpec: monomial exponent must be non-negative");
    }
    if (const auto* b = std::get_if<BumpKappa>(&kind_); b && b->r.num == 0) {
        throw std::invalid_argument("CurvatureSpec: kn needs r != 0");
    }
}

CurvatureSpec CurvatureSpec::bump_kappa(Rational r) { return CurvatureSpec(BumpKappa{r}); }

CurvatureSpec CurvatureSpec::monomial(double c, int k) { return CurvatureSpec(Monomial{Number::of(c), k}); }

CurvatureSpec CurvatureSpec::table(std::vector<double> grid, std::vector<double> values, bool periodic,
                                   Interpolation interpolation, std::string path) {
    if (grid.size() != values.size() || grid.size() < 2) {
        throw std::invalid_argument("table: need at least two (t, value) rows of equal length");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) {
            throw std::invalid_argument("table: non-finite entry at row " + std::to_string(i + 1));
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("table: grid not strictly increasing at row " + std::to_string(i + 1));
        }
    }
    std::vector<double> second;
    if (interpolation == Interpolation::cubic) {
        second = natural_spline_second_derivatives(grid, values);
    }
    return CurvatureSpec(
        Table{std::move(path), std::move(grid), std::move(values), periodic, interpolation, std::move(second)});
}

CurvatureSpec CurvatureSpec::with_bump(double amplitude) const { return CurvatureSpec(kind_, amplitude); }

double CurvatureSpec::operator()(double t) const {
    double v = std::visit(
        [t](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Constant>) {
                return k.c.value;
            } else if constexpr (std::is_same_v<K, Sinusoid>) {
                return k.a.value * std::sin(t) + k.b.value * std::cos(t) + k.c.value;
            } else if constexpr (std::is_same_v<K, BumpKappa>) {
                return std::sin(t) + kTwoPi / k.r.value() * bump(wrap(t, 0.0, kTwoPi));
            } else if constexpr (std::is_same_v<K, BumpMu>) {
                const double r = k.r.value();
                const double g = bump(wrap(t, 0.0, 2.0)) + 1.0;
                return r * r * std::numbers::pi * std::numbers::pi * g * g;
            } else if constexpr (std::is_same_v<K, Monomial>) {
                return k.k == 0 ? k.c.value : k.c.value * std::pow(t, k.k);
            } else {
                return table_eval(k, t);
            }
        },
        kind_);
    if (bump_amplitude_ != 0.0) {
        v += bump_amplitude_ * bump(t);
    }
    return v;
}

std::optional<double> CurvatureSpec::period() const {
    return std::visit(
        [](const auto& k) -> std::optional<double> {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Constant>) {
                return std::nullopt;
            } else if constexpr (std::is_same_v<K, Sinusoid>) {
                if (k.a.value == 0.0 && k.b.value == 0.0) {
                    return std::nullopt;
                }
                return kTwoPi;
            } else if constexpr (std::is_same_v<K, BumpKappa>) {
                return kTwoPi;
            } else if constexpr (std::is_same_v<K, BumpMu>) {
                return 2.0;
            } else if constexpr (std::is_same_v<K, Monomial>) {
                return std::nullopt;
            } else {
                if (!k.periodic) {
                    return std::nullopt;
                }
                return k.grid.back() - k.grid.front();
            }
        },
        kind_);
}

std::string CurvatureSpec::to_string() const {
    std::string s = std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Constant>) {
                return "const:" + k.c.to_string();
            } else if constexpr (std::is_same_v<K, Sinusoid>) {
                return "sinusoid:" + k.a.to_string() + "," + k.b.to_string() + "," + k.c.to_string();
            } else if constexpr (std::is_same_v<K, BumpKappa>) {
                return "kn:" + (k.r.den == 1 ? std::to_string(k.r.num) : k.r.to_string());
            } else if constexpr (std::is_same_v<K, BumpMu>) {
                return "mun:" + (k.r.den == 1 ? std::to_string(k.r.num) : k.r.to_string());
            } else if constexpr (std::is_same_v<K, Monomial>) {
                return "monomial:" + k.c.to_string() + "," + std::to_string(k.k);
            } else {
                std::string t = "table:" + k.path;
                if (k.periodic) {
                    t += ",periodic";
                }
                if (k.interpolation == Interpolation::cubic) {
                    t += ",cubic";
                }
                return t;
            }
        },
        kind_);
    if (bump_amplitude_ != 0.0) {
        s += "+bump:" + shortest(bump_amplitude_);
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
    [[nodiscard]] std::size_t offset() const { return base_ + pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset()); }

    void expect(char c) {
        if (done() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void expect_end() {
        if (!done()) {
            fail("unexpected trailing text '" + std::string(text_.substr(pos_)) + "'");
        }
    }

    // [+-]digits
    std::int64_t integer() {
        const std::size_t start = pos_;
        if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        std::int64_t v = 0;
        const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
        const auto res = std::from_chars(first, text_.data() + pos_, v);
        if (res.ec != std::errc{}) {
            pos_ = start;
            fail("integer out of range");
        }
        return v;
    }

    // <int>/<int>, rejecting non-reduced fractions and zero denominators.
    Rational fraction_tail(std::int64_t num, std::size_t start) {
        expect('/');
        const std::size_t den_at = pos_;
        if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            fail("denominator must be an unsigned integer");
        }
        const std::int64_t den = integer();
        if (den == 0) {
            pos_ = den_at;
            fail("zero denominator");
        }
        const Rational r = Rational::make(num, den);
        if (r.num != num || r.den != den) {
            pos_ = start;
            fail("non-reduced rational " + std::to_string(num) + "/" + std::to_string(den) + " (write " +
                 r.to_string() + ")");
        }
        return r;
    }

    // Integer or reduced fraction; decimals rejected.
    Rational rational() {
        const std::size_t start = pos_;
        const std::int64_t num = integer();
        if (!done() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            pos_ = start;
            fail("expected an integer or reduced fraction p/q (decimals are not accepted here)");
        }
        if (!done() && text_[pos_] == '/') {
            return fraction_tail(num, start);
        }
        return Rational::make(num, 1);
    }

    // Decimal (optionally with exponent) or <int>/<int>.
    Number number() {
        const std::size_t start = pos_;
        if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            ++pos_;
        }
        std::size_t int_digits = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++int_digits;
        }
        std::size_t frac_digits = 0;
        bool dot = false;
        if (!done() && text_[pos_] == '.') {
            dot = true;
            ++pos_;
            while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++frac_digits;
            }
        }
        if (int_digits + frac_digits == 0) {
            pos_ = start;
            fail("expected a number");
        }
        bool exponent = false;
        if (!done() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            exponent = true;
            ++pos_;
            if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            const std::size_t exp_digits = pos_;
            while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ == exp_digits) {
                fail("malformed exponent");
            }
        }
        if (!dot && !exponent && !done() && text_[pos_] == '/') {
            pos_ = start;
            const std::int64_t num = integer();
            return Number::of(fraction_tail(num, start));
        }
        const std::string lexeme(text_.substr(start, pos_ - start));
        const double v = std::strtod(lexeme.c_str(), nullptr);
        if (!std::isfinite(v)) {
            pos_ = start;
            fail("number out of range");
        }
        // Short decimals are exact rationals: keep them so closure arithmetic stays exact.
        if (!exponent && int_digits + frac_digits <= 17) {
            std::string digits;
            for (char ch : lexeme) {
                if (std::isdigit(static_cast<unsigned char>(ch))) {
                    digits += ch;
                }
            }
            std::int64_t num = 0;
            std::from_chars(digits.data(), digits.data() + digits.size(), num);
            if (lexeme[0] == '-') {
                num = -num;
            }
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac_digits; ++i) {
                den *= 10;
            }
            const Rational r = Rational::make(num, den);
            if (r.value() == v) {
                return Number::of(r);
            }
        }
        return Number::of(v);
    }

    std::string_view rest() {
        const std::string_view r = text_.substr(pos_);
        pos_ = text_.size();
        return r;
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_{0};
};

CurvatureSpec parse_table(std::string_view body, std::size_t base) {
    std::vector<std::string_view> parts;
    std::size_t from = 0;
    while (true) {
        const std::size_t comma = body.find(',', from);
        parts.push_back(body.substr(from, comma == std::string_view::npos ? std::string_view::npos : comma - from));
        if (comma == std::string_view::npos) {
            break;
        }
        from = comma + 1;
    }
    if (parts.front().empty()) {
        throw ParseError("table needs a CSV path", base);
    }
    bool periodic = false;
    Interpolation interp = Interpolation::linear;
    std::size_t at = base + parts.front().size() + 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == "periodic") {
            periodic = true;
        } else if (parts[i] == "cubic") {
            interp = Interpolation::cubic;
        } else if (parts[i] == "linear") {
            interp = Interpolation::linear;
        } else {
            throw ParseError("unknown table option '" + std::string(parts[i]) + "'", at);
        }
        at += parts[i].size() + 1;
    }
    const std::string path(parts.front());
    auto [grid, values] = read_table_csv(path);
    try {
        return CurvatureSpec::table(std::move(grid), std::move(values), periodic, interp, path);
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
}

}  // namespace

CurvatureSpec parse_spec(std::string_view text) {
    double amplitude = 0.0;
    const std::size_t bump_at = text.rfind("+bump:");
    std::string_view head = text;
    if (bump_at != std::string_view::npos) {
        Parser p(text.substr(bump_at + 6), bump_at + 6);
        const Number amp = p.number();
        p.expect_end();
        amplitude = amp.value;
        head = text.substr(0, bump_at);
    }

    const std::size_t colon = head.find(':');
    const std::string_view name = head.substr(0, colon);
    if (colon == std::string_view::npos) {
        if (name == "sin") {
            return CurvatureSpec(CurvatureSpec::Sinusoid{Number::of(Rational::make(1, 1)),
                                                         Number::of(Rational::make(0, 1)),
                                                         Number::of(Rational::make(0, 1))},
                                 amplitude);
        }
        if (name.empty()) {
            throw ParseError("empty curvature spec", 0);
        }
        throw ParseError("expected '<kind>:<parameters>'", head.size());
    }
    const std::size_t base = colon + 1;
    Parser p(head.substr(base), base);

    if (name == "const") {
        const Number c = p.number();
        p.expect_end();
        return CurvatureSpec(CurvatureSpec::Constant{c}, amplitude);
    }
    if (name == "sinusoid") {
        const Number a = p.number();
        p.expect(',');
        const Number b = p.number();
        p.expect(',');
        const Number c = p.number();
        p.expect_end();
        return CurvatureSpec(CurvatureSpec::Sinusoid{a, b, c}, amplitude);
    }
    if (name == "kn" || name == "mun") {
        const std::size_t at = p.offset();
        const Rational r = p.rational();
        p.expect_end();
        if (name == "kn") {
            if (r.num == 0) {
                throw ParseError("kn needs a non-zero r", at);
            }
            return CurvatureSpec(CurvatureSpec::BumpKappa{r}, amplitude);
        }
        return CurvatureSpec(CurvatureSpec::BumpMu{r}, amplitude);
    }
    if (name == "monomial") {
        const Number c = p.number();
        p.expect(',');
        const std::size_t at = p.offset();
        const std::int64_t k = p.integer();
        p.expect_end();
        if (k < 0 || k > 1000) {
            throw ParseError("monomial exponent must be an integer in [0, 1000]", at);
        }
        return CurvatureSpec(CurvatureSpec::Monomial{c, static_cast<int>(k)}, amplitude);
    }
    if (name == "table") {
        CurvatureSpec t = parse_table(p.rest(), base);
        return t.with_bump(amplitude);
    }
    throw ParseError("unknown curvature kind '" + std::string(name) + "'", 0);
}

}  // namespace curvrec
