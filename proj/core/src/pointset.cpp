#include "avgsearch/pointset.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "avgsearch/errors.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/rng.hpp"
#include "avgsearch/torus.hpp"

namespace avgsearch {

PointSet::PointSet(int dim, std::vector<double> coords, Provenance provenance)
    : dim_(dim), coords_(std::move(coords)), provenance_(std::move(provenance)) {
    if (dim_ < 1) throw std::invalid_argument("point set: dim must be >= 1");
    if (coords_.empty() || coords_.size() % static_cast<std::size_t>(dim_) != 0)
        throw std::invalid_argument("point set: coordinate count must be a positive multiple of dim");
    for (double& c : coords_) {
        if (!std::isfinite(c)) throw std::invalid_argument("point set: non-finite coordinate");
        c = reduce_unit(c);
    }
}

std::span<const double> PointSet::point(std::size_t j) const {
    auto d = static_cast<std::size_t>(dim_);
    if (j >= size()) throw std::out_of_range("point set: index past m");
    return {coords_.data() + j * d, d};
}

std::string PointSet::provenance_value(const std::string& key) const {
    for (const auto& [k, v] : provenance_)
        if (k == key) return v;
    return {};
}

PointSet PointSet::prefix(std::size_t n) const {
    if (n < 1 || n > size()) throw std::out_of_range("point set: prefix length out of range");
    auto d = static_cast<std::size_t>(dim_);
    return PointSet(dim_, std::vector<double>(coords_.begin(),
                                              coords_.begin() + static_cast<std::ptrdiff_t>(n * d)),
                    provenance_);
}

void write_points(const PointSet& set, std::ostream& out) {
    out << "avgsearch-points v1 d=" << set.dim() << " m=" << set.size();
    for (const auto& [key, value] : set.provenance()) out << ' ' << key << '=' << value;
    out << '\n';
    auto d = static_cast<std::size_t>(set.dim());
    for (std::size_t j = 0; j < set.size(); ++j) {
        auto p = set.point(j);
        for (std::size_t i = 0; i < d; ++i) {
            if (i > 0) out << ' ';
            out << format_hex_double(p[i]);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed while emitting points");
}

void write_points(const PointSet& set, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        write_points(set, out);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// strict nonnegative integer parse
bool parse_size(const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    out = v;
    return true;
}

} // namespace

PointSet read_points(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ParseError(source_name, 1, "empty file, expected avgsearch-points header");
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.size() < 4 || tokens[0] != "avgsearch-points" || tokens[1] != "v1")
        throw ParseError(source_name, line_no,
                         "malformed header, expected 'avgsearch-points v1 d=<d> m=<m> ...'");

    std::size_t d = 0, m = 0;
    bool have_d = false, have_m = false;
    Provenance provenance;
    for (std::size_t t = 2; t < tokens.size(); ++t) {
        auto eq = tokens[t].find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(source_name, line_no, "malformed header token '" + tokens[t] + "'");
        std::string key = tokens[t].substr(0, eq);
        std::string value = tokens[t].substr(eq + 1);
        if (key == "d") {
            if (!parse_size(value, d) || d < 1)
                throw ParseError(source_name, line_no, "bad dimension '" + value + "'");
            have_d = true;
        } else if (key == "m") {
            if (!parse_size(value, m) || m < 1)
                throw ParseError(source_name, line_no, "bad point count '" + value + "'");
            have_m = true;
        } else {
            provenance.emplace_back(key, value);
        }
    }
    if (!have_d || !have_m)
        throw ParseError(source_name, line_no, "header must carry d= and m=");
    if (provenance.empty()) provenance.emplace_back("source", "external");

    std::vector<double> coords;
    coords.reserve(m * d);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto row = split_ws(line);
        if (row.empty()) continue;  // blank lines between/after rows are ignored
        if (rows == m)
            throw ParseError(source_name, line_no,
                             "row count mismatch at line " + std::to_string(line_no) +
                                 " (expected " + std::to_string(m) + " rows)");
        if (row.size() != d)
            throw ParseError(source_name, line_no,
                             "row arity mismatch at line " + std::to_string(line_no) +
                                 " (expected " + std::to_string(d) + " coordinates, got " +
                                 std::to_string(row.size()) + ")");
        for (const auto& tok : row) {
            const char* begin = tok.c_str();
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end != begin + tok.size())
                throw ParseError(source_name, line_no,
                                 "malformed coordinate '" + tok + "' at line " +
                                     std::to_string(line_no));
            if (!std::isfinite(v))
                throw ParseError(source_name, line_no,
                                 "non-finite coordinate at line " + std::to_string(line_no));
            coords.push_back(v);
        }
        ++rows;
    }
    if (rows != m)
        throw ParseError(source_name, line_no + 1,
                         "row count mismatch at line " + std::to_string(line_no + 1) +
                             " (expected " + std::to_string(m) + " rows, found " +
                             std::to_string(rows) + ")");

    return PointSet(static_cast<int>(d), std::move(coords), std::move(provenance));
}

PointSet read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return read_points(in, path);
}

PointSet equispaced_points(int dim, std::size_t m) {
    if (dim != 1)
        throw std::invalid_argument("equispaced points are defined for d = 1 only");
    if (m < 1) throw std::invalid_argument("equispaced points: m must be >= 1");
    std::vector<double> coords(m);
    for (std::size_t j = 0; j < m; ++j)
        coords[j] = static_cast<double>(j) / static_cast<double>(m);
    return PointSet(1, std::move(coords), {{"algorithm", "equispaced"}});
}

PointSet random_points(int dim, std::size_t m, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random points: dim must be >= 1");
    if (m < 1) throw std::invalid_argument("random points: m must be >= 1");
    SplitMix64 rng(seed);
    std::vector<double> coords(m * static_cast<std::size_t>(dim));
    for (double& c : coords) c = rng.next_double();
    return PointSet(dim, std::move(coords),
                    {{"algorithm", "random"}, {"seed", std::to_string(seed)}});
}

} // namespace avgsearch
