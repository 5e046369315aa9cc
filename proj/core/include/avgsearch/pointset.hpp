#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace avgsearch {

// key=value pairs recording how a point set was produced.  Keys and values
// must be free of whitespace (they live on the header line of the file
// format).
using Provenance = std::vector<std::pair<std::string, std::string>>;

// Ordered list of m knots in [0,1)^d.  Coordinates are reduced mod 1 on
// ingest.  Order is meaningful (the construction algorithms are sequential)
// and survives serialization.  Immutable.
class PointSet {
public:
    PointSet(int dim, std::vector<double> coords, Provenance provenance = {});

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size() / static_cast<std::size_t>(dim_); }
    std::span<const double> point(std::size_t j) const;
    std::span<const double> coords() const noexcept { return coords_; }
    const Provenance& provenance() const noexcept { return provenance_; }
    std::string provenance_value(const std::string& key) const;  // "" if absent

    // First n points, provenance carried over.
    PointSet prefix(std::size_t n) const;

private:
    int dim_;
    std::vector<double> coords_;  // row-major, m*d
    Provenance provenance_;
};

// `avgsearch-points v1` text format:
//   avgsearch-points v1 d=<d> m=<m> [key=value ...]
// followed by m lines of d hex-float coordinates separated by single spaces.
// Hex floats round-trip bit-exactly.
void write_points(const PointSet& set, std::ostream& out);
// Atomic: writes <path>.tmp then renames.
void write_points(const PointSet& set, const std::string& path);

PointSet read_points(std::istream& in, const std::string& source_name = "<stream>");
PointSet read_points(const std::string& path);

// {j/m : j = 0..m-1}.  Defined for d = 1 only.
PointSet equispaced_points(int dim, std::size_t m);

// m i.i.d. uniform points, coordinates drawn row-major from SplitMix64(seed).
PointSet random_points(int dim, std::size_t m, std::uint64_t seed);

} // namespace avgsearch
