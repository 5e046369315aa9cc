#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "avgsearch/kernel.hpp"
#include "avgsearch/search.hpp"

namespace avgsearch {

struct IniEntry {
    std::string key;
    std::string value;
    std::size_t line;
};

struct IniSection {
    std::string name;
    std::size_t line;
    std::vector<IniEntry> entries;
};

// Flat sectioned key=value text: [section] headers, key = value lines,
// # or ; comments, blank lines ignored.  Keys may repeat within a section.
class IniDocument {
public:
    static IniDocument parse_file(const std::string& path);
    static IniDocument parse_string(const std::string& text,
                                    const std::string& source_name = "<string>");

    const IniSection* find(const std::string& name) const noexcept;
    const std::vector<IniSection>& sections() const noexcept { return sections_; }
    const std::string& source() const noexcept { return source_; }

private:
    std::string source_;
    std::vector<IniSection> sections_;
};

// Declarative kernel description; build() materializes the FourierKernel.
struct KernelSpec {
    enum class Type { Korobov, Explicit };
    Type type = Type::Korobov;
    int dim = 1;
    double r = 2.0;                     // korobov
    int K = 1;                          // korobov
    double mean = 0.0;                  // explicit
    std::vector<SpectrumEntry> entries; // explicit

    FourierKernel build() const;
};

struct SweepSpec {
    std::vector<std::size_t> m_values;  // strictly increasing, all >= 1
};

struct AnalysisConfig {
    int grid_G = 0;  // 0 = default_analysis_grid(dim)
    bool baseline_random = false;
    bool baseline_equispaced = false;
};

struct OutputConfig {
    std::string directory = ".";
    bool csv = true;
    bool json = false;
};

// One experiment: kernel, algorithm settings, m sweep, analysis and output
// options.  Sections [kernel] (required), [algorithm], [sweep], [analysis],
// [output]; unknown sections or keys are errors.
struct ExperimentConfig {
    KernelSpec kernel;
    SearchConfig search;
    SweepSpec sweep;          // empty when no [sweep] section was given
    AnalysisConfig analysis;
    OutputConfig output;

    int resolved_grid_G() const noexcept;  // grid_G or the d-scaled default
};

KernelSpec parse_kernel_section(const IniDocument& doc);
ExperimentConfig parse_experiment_config(const IniDocument& doc);
ExperimentConfig load_experiment_config(const std::string& path);
KernelSpec load_kernel_spec(const std::string& path);

} // namespace avgsearch
