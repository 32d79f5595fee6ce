#include "curvrec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "curvrec/errors.hpp"

namespace curvrec {

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
    std::vector<std::size_t> lines;  // source line of each row
};

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t from = 0;
    while (true) {
        const std::size_t comma = line.find(',', from);
        out.push_back(line.substr(from, comma == std::string_view::npos ? std::string_view::npos : comma - from));
        if (comma == std::string_view::npos) {
            return out;
        }
        from = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTable read_csv(const std::string& path) {
    const std::string text = read_file(path);
    std::string_view rest(text);
    if (rest.substr(0, 3) == "\xEF\xBB\xBF") {
        rest.remove_prefix(3);
    }
    CsvTable table;
    std::size_t line_no = 0;
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        const std::string_view line = trim(rest.substr(0, nl));
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line);
        if (table.header.empty()) {
            for (auto f : fields) {
                table.header.emplace_back(trim(f));
            }
            table.columns.resize(table.header.size());
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw CsvError(path, line_no,
                           "expected " + std::to_string(table.header.size()) + " fields, found " +
                               std::to_string(fields.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const std::string cell(trim(fields[j]));
            char* end = nullptr;
            const double v = cell.empty() ? NAN : std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v)) {
                throw CsvError(path, line_no, "column '" + table.header[j] + "': not a finite number '" + cell + "'");
            }
            table.columns[j].push_back(v);
        }
        table.lines.push_back(line_no);
    }
    if (table.header.empty()) {
        throw CsvError(path, 1, "empty file (missing header)");
    }
    return table;
}

std::optional<std::size_t> column(const CsvTable& t, std::string_view name) {
    for (std::size_t j = 0; j < t.header.size(); ++j) {
        if (t.header[j] == name) {
            return j;
        }
    }
    return std::nullopt;
}

std::size_t require(const CsvTable& t, const std::string& path, std::string_view name) {
    const auto j = column(t, name);
    if (!j) {
        throw CsvError(path, 1, "missing column '" + std::string(name) + "'");
    }
    return *j;
}

void check_increasing(const CsvTable& t, const std::string& path, std::size_t col, std::size_t min_rows) {
    const auto& v = t.columns[col];
    if (v.size() < min_rows) {
        throw CsvError(path, t.lines.empty() ? 1 : t.lines.back(),
                       "need at least " + std::to_string(min_rows) + " data rows");
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            throw CsvError(path, t.lines[i], "column '" + t.header[col] + "' is not strictly increasing");
        }
    }
}

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

SampledCurve read_curve_csv(const std::string& path) {
    const CsvTable t = read_csv(path);
    std::optional<std::size_t> p = column(t, "s");
    for (const char* name : {"t", "alpha"}) {
        if (!p) {
            p = column(t, name);
        }
    }
    if (!p) {
        throw CsvError(path, 1, "missing column 's' (or 't', 'alpha')");
    }
    const std::size_t x = require(t, path, "x");
    const std::size_t y = require(t, path, "y");
    check_increasing(t, path, *p, 2);
    std::vector<Point2> pts(t.columns[x].size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        pts[i] = {t.columns[x][i], t.columns[y][i]};
    }
    return SampledCurve(t.columns[*p], std::move(pts));
}

std::string curve_csv(const SampledCurve& curve, std::string_view param) {
    std::string out;
    out.reserve(curve.size() * 72);
    out += param;
    out += ",x,y\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        append_number(out, curve.params()[i]);
        out += ',';
        append_number(out, curve.points()[i].x);
        out += ',';
        append_number(out, curve.points()[i].y);
        out += '\n';
    }
    return out;
}

void write_curve_csv(const SampledCurve& curve, const std::string& path, std::string_view param) {
    write_text_file(path, curve_csv(curve, param));
}

void write_function_csv(const SampledFunction& f, const std::string& path, std::string_view param,
                        std::string_view value) {
    if (f.grid.size() != f.values.size()) {
        throw std::invalid_argument("write_function_csv: grid/value size mismatch");
    }
    std::string out;
    out += param;
    out += ',';
    out += value;
    out += '\n';
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        append_number(out, f.grid[i]);
        out += ',';
        append_number(out, f.values[i]);
        out += '\n';
    }
    write_text_file(path, out);
}

SampledFunction read_function_csv(const std::string& path, std::string_view param, std::string_view value) {
    const CsvTable t = read_csv(path);
    const std::size_t p = require(t, path, param);
    const std::size_t v = require(t, path, value);
    check_increasing(t, path, p, 1);
    return {t.columns[p], t.columns[v]};
}

std::pair<std::vector<double>, std::vector<double>> read_table_csv(const std::string& path) {
    const CsvTable t = read_csv(path);
    const std::size_t p = require(t, path, "t");
    const std::size_t v = require(t, path, "value");
    check_increasing(t, path, p, 2);
    return {t.columns[p], t.columns[v]};
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed for " + path);
    }
}

Json to_json(const PicardResult& r) {
    Json j;
    j["iterations"] = r.iterations;
    j["c"] = r.c;
    j["tail_bound"] = number_or_null(r.tail_bound);
    j["grid_size"] = r.grid.size();
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["mode"] = r.mode;
    j["norm"] = to_string(r.norm);
    j["delta"] = r.delta;
    j["L"] = r.L;
    j["c_hat"] = r.c_hat ? Json(*r.c_hat) : Json(nullptr);
    j["bound"] = number_or_null(r.bound);
    j["bound_stated"] = number_or_null(r.bound_stated);
    j["measured"] = r.measured;
    j["satisfied"] = r.satisfied;
    j["stated_satisfied"] = r.stated_satisfied;
    return j;
}

Json to_json(const ClosureReport& r) {
    Json j;
    j["ratio"] = r.ratio ? Json(r.ratio->to_string()) : Json(nullptr);
    j["closed"] = r.predicted_closed;
    j["turning"] = r.turning_number;
    j["symmetry"] = r.symmetry_index;
    j["period"] = r.period;
    j["minimal_period"] = r.minimal_period;
    j["mean_turn"] = r.mean_turn;
    j["exact"] = r.exact;
    j["note"] = r.note;
    return j;
}

}  // namespace curvrec
