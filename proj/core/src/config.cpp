#include "avgsearch/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "avgsearch/analysis.hpp"
#include "avgsearch/errors.hpp"

namespace avgsearch {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const IniDocument& doc, const IniEntry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    long long v = std::strtoll(begin, &end, 10);
    if (end != begin + e.value.size() || e.value.empty())
        throw ConfigError(doc.source(), e.line, "key '" + e.key + "': expected integer, got '" +
                                                    e.value + "'");
    return v;
}

std::uint64_t parse_u64(const IniDocument& doc, const IniEntry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    unsigned long long v = std::strtoull(begin, &end, 10);
    if (end != begin + e.value.size() || e.value.empty() || e.value[0] == '-')
        throw ConfigError(doc.source(), e.line, "key '" + e.key +
                                                    "': expected unsigned integer, got '" +
                                                    e.value + "'");
    return v;
}

double parse_real(const IniDocument& doc, const IniEntry& e, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + text.size() || text.empty() || !std::isfinite(v))
        throw ConfigError(doc.source(), e.line, "key '" + e.key + "': expected finite real, got '" +
                                                    text + "'");
    return v;
}

double parse_real(const IniDocument& doc, const IniEntry& e) {
    return parse_real(doc, e, e.value);
}

// Single-valued key lookup within a section; repeats are an error.
const IniEntry* find_unique(const IniDocument& doc, const IniSection& section,
                            const std::string& key) {
    const IniEntry* found = nullptr;
    for (const auto& e : section.entries) {
        if (e.key != key) continue;
        if (found)
            throw ConfigError(doc.source(), e.line, "key '" + key + "' given more than once");
        found = &e;
    }
    return found;
}

void reject_unknown_keys(const IniDocument& doc, const IniSection& section,
                         const std::set<std::string>& known) {
    for (const auto& e : section.entries)
        if (!known.contains(e.key))
            throw ConfigError(doc.source(), e.line,
                              "unknown key '" + e.key + "' in section [" + section.name + "]");
}

} // namespace

IniDocument IniDocument::parse_string(const std::string& text, const std::string& source_name) {
    IniDocument doc;
    doc.source_ = source_name;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    IniSection* current = nullptr;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(source_name, line_no, "unterminated section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty())
                throw ConfigError(source_name, line_no, "empty section name");
            for (const auto& s : doc.sections_)
                if (s.name == name)
                    throw ConfigError(source_name, line_no, "duplicate section [" + name + "]");
            doc.sections_.push_back({name, line_no, {}});
            current = &doc.sections_.back();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source_name, line_no, "expected 'key = value' or '[section]'");
        if (!current)
            throw ConfigError(source_name, line_no, "key=value before any [section]");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(source_name, line_no, "empty key");
        current->entries.push_back({key, value, line_no});
    }
    return doc;
}

IniDocument IniDocument::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

const IniSection* IniDocument::find(const std::string& name) const noexcept {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

FourierKernel KernelSpec::build() const {
    if (type == Type::Korobov) return FourierKernel::korobov(dim, r, K);
    return FourierKernel::from_spectrum(dim, mean, entries);
}

KernelSpec parse_kernel_section(const IniDocument& doc) {
    const IniSection* section = doc.find("kernel");
    if (!section)
        throw ConfigError(doc.source(), 0, "missing [kernel] section");

    const IniEntry* type = find_unique(doc, *section, "type");
    if (!type)
        throw ConfigError(doc.source(), section->line, "[kernel] needs a 'type' key");

    KernelSpec spec;
    if (type->value == "korobov") {
        reject_unknown_keys(doc, *section, {"type", "dim", "r", "K"});
        const IniEntry* dim = find_unique(doc, *section, "dim");
        const IniEntry* r = find_unique(doc, *section, "r");
        const IniEntry* K = find_unique(doc, *section, "K");
        if (!dim || !r || !K)
            throw ConfigError(doc.source(), section->line,
                              "korobov kernel needs keys dim, r, K");
        spec.type = KernelSpec::Type::Korobov;
        spec.dim = static_cast<int>(parse_int(doc, *dim));
        spec.r = parse_real(doc, *r);
        spec.K = static_cast<int>(parse_int(doc, *K));
        if (spec.dim < 1) throw ConfigError(doc.source(), dim->line, "dim must be >= 1");
        if (!(spec.r > 1.0)) throw ConfigError(doc.source(), r->line, "r must be > 1");
        if (spec.K < 1) throw ConfigError(doc.source(), K->line, "K must be >= 1");
    } else if (type->value == "explicit") {
        reject_unknown_keys(doc, *section, {"type", "dim", "mean", "coeff"});
        const IniEntry* dim = find_unique(doc, *section, "dim");
        const IniEntry* mean = find_unique(doc, *section, "mean");
        if (!dim || !mean)
            throw ConfigError(doc.source(), section->line,
                              "explicit kernel needs keys dim and mean");
        spec.type = KernelSpec::Type::Explicit;
        spec.dim = static_cast<int>(parse_int(doc, *dim));
        if (spec.dim < 1) throw ConfigError(doc.source(), dim->line, "dim must be >= 1");
        spec.mean = parse_real(doc, *mean);
        for (const auto& e : section->entries) {
            if (e.key != "coeff") continue;
            auto tokens = split_ws(e.value);
            if (tokens.size() != static_cast<std::size_t>(spec.dim) + 1)
                throw ConfigError(doc.source(), e.line,
                                  "coeff needs " + std::to_string(spec.dim) +
                                      " frequency components plus a value");
            SpectrumEntry entry;
            entry.k.resize(static_cast<std::size_t>(spec.dim));
            for (int i = 0; i < spec.dim; ++i) {
                IniEntry fake{e.key, tokens[static_cast<std::size_t>(i)], e.line};
                entry.k[static_cast<std::size_t>(i)] =
                    static_cast<int>(parse_int(doc, fake));
            }
            entry.coefficient = parse_real(doc, e, tokens.back());
            spec.entries.push_back(std::move(entry));
        }
    } else {
        throw ConfigError(doc.source(), type->line,
                          "kernel type must be 'korobov' or 'explicit', got '" + type->value + "'");
    }
    return spec;
}

namespace {

SearchConfig parse_algorithm_section(const IniDocument& doc, const IniSection* section,
                                     const KernelSpec& kernel) {
    SearchConfig config;
    if (!section) return config;
    reject_unknown_keys(doc, *section,
                        {"variant", "seed", "first_point", "candidate_budget",
                         "grid_resolution", "refinement_steps"});
    if (const IniEntry* e = find_unique(doc, *section, "variant")) {
        if (e->value == "averaging") config.variant = SearchVariant::Averaging;
        else if (e->value == "greedy") config.variant = SearchVariant::Greedy;
        else
            throw ConfigError(doc.source(), e->line,
                              "variant must be 'averaging' or 'greedy', got '" + e->value + "'");
    }
    if (const IniEntry* e = find_unique(doc, *section, "seed"))
        config.seed = parse_u64(doc, *e);
    if (const IniEntry* e = find_unique(doc, *section, "first_point")) {
        auto tokens = split_ws(e->value);
        if (tokens.size() != static_cast<std::size_t>(kernel.dim))
            throw ConfigError(doc.source(), e->line,
                              "first_point needs " + std::to_string(kernel.dim) +
                                  " coordinates");
        for (const auto& tok : tokens)
            config.first_point.push_back(parse_real(doc, *e, tok));
    }
    if (const IniEntry* e = find_unique(doc, *section, "candidate_budget")) {
        long long v = parse_int(doc, *e);
        if (v < 1) throw ConfigError(doc.source(), e->line, "candidate_budget must be positive");
        config.candidate_budget = static_cast<long>(v);
    }
    if (const IniEntry* e = find_unique(doc, *section, "grid_resolution")) {
        long long v = parse_int(doc, *e);
        if (v < 1) throw ConfigError(doc.source(), e->line, "grid_resolution must be positive");
        config.grid_resolution = static_cast<int>(v);
    }
    if (const IniEntry* e = find_unique(doc, *section, "refinement_steps")) {
        long long v = parse_int(doc, *e);
        if (v < 0) throw ConfigError(doc.source(), e->line, "refinement_steps must be >= 0");
        config.refinement_steps = static_cast<int>(v);
    }
    return config;
}

SweepSpec parse_sweep_section(const IniDocument& doc, const IniSection* section) {
    SweepSpec sweep;
    if (!section) return sweep;
    reject_unknown_keys(doc, *section, {"m", "m_min", "m_max", "factor"});
    const IniEntry* m_list = find_unique(doc, *section, "m");
    const IniEntry* m_min = find_unique(doc, *section, "m_min");
    const IniEntry* m_max = find_unique(doc, *section, "m_max");
    const IniEntry* factor = find_unique(doc, *section, "factor");

    if (m_list && (m_min || m_max || factor))
        throw ConfigError(doc.source(), m_list->line,
                          "give either 'm' or the m_min/m_max/factor schedule, not both");
    if (m_list) {
        for (const auto& tok : split_ws(m_list->value)) {
            IniEntry fake{"m", tok, m_list->line};
            long long v = parse_int(doc, fake);
            if (v < 1) throw ConfigError(doc.source(), m_list->line, "sweep m values must be >= 1");
            sweep.m_values.push_back(static_cast<std::size_t>(v));
        }
        if (sweep.m_values.empty())
            throw ConfigError(doc.source(), m_list->line, "sweep 'm' list is empty");
        for (std::size_t i = 1; i < sweep.m_values.size(); ++i)
            if (sweep.m_values[i] <= sweep.m_values[i - 1])
                throw ConfigError(doc.source(), m_list->line,
                                  "sweep m values must be strictly increasing");
        return sweep;
    }
    if (!(m_min && m_max && factor))
        throw ConfigError(doc.source(), section->line,
                          "[sweep] needs 'm' or all of m_min, m_max, factor");
    long long lo = parse_int(doc, *m_min);
    long long hi = parse_int(doc, *m_max);
    double f = parse_real(doc, *factor);
    if (lo < 1) throw ConfigError(doc.source(), m_min->line, "m_min must be >= 1");
    if (hi < lo) throw ConfigError(doc.source(), m_max->line, "m_max must be >= m_min");
    if (!(f > 1.0)) throw ConfigError(doc.source(), factor->line, "factor must be > 1");
    for (double v = static_cast<double>(lo); v <= static_cast<double>(hi);) {
        auto m = static_cast<std::size_t>(v);
        sweep.m_values.push_back(m);
        double next = std::round(v * f);
        v = next > v ? next : v + 1.0;
    }
    return sweep;
}

AnalysisConfig parse_analysis_section(const IniDocument& doc, const IniSection* section,
                                      const KernelSpec& kernel) {
    AnalysisConfig analysis;
    if (!section) return analysis;
    reject_unknown_keys(doc, *section, {"grid_G", "baselines"});
    if (const IniEntry* e = find_unique(doc, *section, "grid_G")) {
        long long v = parse_int(doc, *e);
        if (v < 1) throw ConfigError(doc.source(), e->line, "grid_G must be positive");
        analysis.grid_G = static_cast<int>(v);
    }
    if (const IniEntry* e = find_unique(doc, *section, "baselines")) {
        for (const auto& tok : split_ws(e->value)) {
            if (tok == "random") analysis.baseline_random = true;
            else if (tok == "equispaced") analysis.baseline_equispaced = true;
            else
                throw ConfigError(doc.source(), e->line,
                                  "baselines may list 'random' and 'equispaced', got '" + tok + "'");
        }
        if (analysis.baseline_equispaced && kernel.dim != 1)
            throw ConfigError(doc.source(), e->line,
                              "equispaced baseline is defined for d = 1 only");
    }
    return analysis;
}

OutputConfig parse_output_section(const IniDocument& doc, const IniSection* section) {
    OutputConfig output;
    if (!section) return output;
    reject_unknown_keys(doc, *section, {"directory", "formats"});
    if (const IniEntry* e = find_unique(doc, *section, "directory")) {
        if (e->value.empty())
            throw ConfigError(doc.source(), e->line, "output directory must not be empty");
        output.directory = e->value;
    }
    if (const IniEntry* e = find_unique(doc, *section, "formats")) {
        output.csv = output.json = false;
        for (const auto& tok : split_ws(e->value)) {
            if (tok == "csv") output.csv = true;
            else if (tok == "json") output.json = true;
            else
                throw ConfigError(doc.source(), e->line,
                                  "formats may list 'csv' and 'json', got '" + tok + "'");
        }
        if (!output.csv && !output.json)
            throw ConfigError(doc.source(), e->line, "formats list is empty");
    }
    return output;
}

} // namespace

int ExperimentConfig::resolved_grid_G() const noexcept {
    return analysis.grid_G > 0 ? analysis.grid_G : default_analysis_grid(kernel.dim);
}

ExperimentConfig parse_experiment_config(const IniDocument& doc) {
    for (const auto& section : doc.sections()) {
        if (section.name != "kernel" && section.name != "algorithm" &&
            section.name != "sweep" && section.name != "analysis" && section.name != "output")
            throw ConfigError(doc.source(), section.line,
                              "unknown section [" + section.name + "]");
    }
    ExperimentConfig config;
    config.kernel = parse_kernel_section(doc);
    config.search = parse_algorithm_section(doc, doc.find("algorithm"), config.kernel);
    config.sweep = parse_sweep_section(doc, doc.find("sweep"));
    config.analysis = parse_analysis_section(doc, doc.find("analysis"), config.kernel);
    config.output = parse_output_section(doc, doc.find("output"));
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    return parse_experiment_config(IniDocument::parse_file(path));
}

KernelSpec load_kernel_spec(const std::string& path) {
    return parse_kernel_section(IniDocument::parse_file(path));
}

} // namespace avgsearch
