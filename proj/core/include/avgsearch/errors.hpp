#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avgsearch {

// File could not be opened, written or renamed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed data file (points file); carries source name and 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

// Problem in an experiment or kernel config file; line 0 means the error is
// semantic rather than tied to a single line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, std::size_t line, const std::string& message)
        : std::runtime_error(line > 0
              ? source + ":" + std::to_string(line) + ": " + message
              : source + ": " + message),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

// Averaging search exhausted its candidate budget at some step without
// finding a nonpositive partial sum.  With an admissible kernel the
// acceptance region has positive measure, so this signals a broken kernel
// or a budget set far too low; a positive-sum point is never accepted
// silently.
class CandidateBudgetExhausted : public std::runtime_error {
public:
    CandidateBudgetExhausted(std::size_t step, long budget)
        : std::runtime_error("averaging search: candidate budget (" +
                             std::to_string(budget) + ") exhausted at step " +
                             std::to_string(step)),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

// Spectral pair energy below -1e-9: the spectrum is corrupted (a sum of
// nonnegative terms cannot be negative).
class NegativeEnergy : public std::runtime_error {
public:
    explicit NegativeEnergy(double value)
        : std::runtime_error("negative pair energy " + std::to_string(value)) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace avgsearch
