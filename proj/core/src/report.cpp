#include "avgsearch/report.hpp"

#include <cstdlib>
#include <sstream>

#include "avgsearch/errors.hpp"
#include "avgsearch/numfmt.hpp"

namespace avgsearch {

const char* const report_csv_header =
    "m,d,pair_energy,spectral_energy,wce_grid,grid_G,cs_bound,theorem_bound";

std::string report_csv_row(const ErrorReport& r) {
    std::string out;
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.dim);
    out += ',';
    out += format_double(r.pair_energy);
    out += ',';
    out += format_double(r.spectral_energy);
    out += ',';
    out += format_double(r.wce_grid);
    out += ',';
    out += std::to_string(r.grid_G);
    out += ',';
    out += format_double(r.cs_bound);
    out += ',';
    out += format_double(r.theorem_bound);
    return out;
}

std::vector<std::string> split_report_csv_row(const std::string& line,
                                              const std::string& source,
                                              std::size_t line_number) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() != 8)
        throw ParseError(source, line_number,
                         "expected 8 CSV fields, got " + std::to_string(fields.size()));
    for (const auto& f : fields) {
        const char* begin = f.c_str();
        char* end = nullptr;
        (void)std::strtod(begin, &end);
        if (f.empty() || end != begin + f.size())
            throw ParseError(source, line_number, "non-numeric CSV field '" + f + "'");
    }
    return fields;
}

std::string report_json(const ErrorReport& r) {
    std::string out = "{";
    out += "\"m\":" + std::to_string(r.m);
    out += ",\"d\":" + std::to_string(r.dim);
    out += ",\"pair_energy\":" + format_double(r.pair_energy);
    out += ",\"spectral_energy\":" + format_double(r.spectral_energy);
    out += ",\"wce_grid\":" + format_double(r.wce_grid);
    out += ",\"grid_G\":" + std::to_string(r.grid_G);
    out += ",\"cs_bound\":" + format_double(r.cs_bound);
    out += ",\"theorem_bound\":" + format_double(r.theorem_bound);
    out += "}";
    return out;
}

std::string report_text(const ErrorReport& r) {
    std::ostringstream out;
    out << "m               = " << r.m << "\n";
    out << "d               = " << r.dim << "\n";
    out << "pair_energy     = " << format_double(r.pair_energy) << "\n";
    out << "spectral_energy = " << format_double(r.spectral_energy) << "\n";
    out << "wce_grid        = " << format_double(r.wce_grid) << "  (G=" << r.grid_G
        << ", argmax =";
    for (double c : r.wce_argmax) out << ' ' << format_double(c);
    out << ")\n";
    out << "cs_bound        = " << format_double(r.cs_bound) << "\n";
    out << "theorem_bound   = " << format_double(r.theorem_bound) << "\n";
    return out.str();
}

} // namespace avgsearch
