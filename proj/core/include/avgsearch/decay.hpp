#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "avgsearch/config.hpp"

namespace avgsearch {

struct DecaySeriesResult {
    std::string series;                  // "averaging", "greedy", "random", "equispaced"
    std::vector<std::string> csv_rows;   // one formatted row per sweep m, in order
    double empirical_exponent;           // NaN when fewer than 2 usable rows
    std::size_t rows_computed = 0;
    std::size_t rows_reused = 0;
    std::string csv_path;
};

struct DecayOutcome {
    std::vector<DecaySeriesResult> series;
};

// Runs the configured m sweep for the search variant plus any requested
// baselines.  One CSV (and optional JSON) file per series lands in the
// output directory; the file is flushed after every computed row via
// write-temp-then-rename.  Rows already present in an existing file are
// reused verbatim, so a rerun skips their cost and reproduces them byte for
// byte.  The fitted decay exponent is descriptive output only.
DecayOutcome run_decay(const ExperimentConfig& config, std::ostream& log);

// Least-squares slope of log(wce) versus log(m); rows with wce <= 0 are
// skipped.  NaN when fewer than two usable rows remain.
double fit_decay_exponent(const std::vector<std::size_t>& m_values,
                          const std::vector<double>& wce_values);

} // namespace avgsearch
