#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "pmp/operators.hpp"

namespace pmp {

/// Settings shared by every CLI command. The JSON form is
///
///     {"radius": 1.0, "n_radial": 64, "n_angular": 128, "contour_n": 256,
///      "tolerances": {"name": 1e-8}, "output": "", "seed": 0}
///
/// with every key optional; unknown keys are rejected.
struct RunConfig {
    double radius = 1.0;
    int n_radial = 64;
    int n_angular = 128;
    int contour_n = 256;
    std::map<std::string, double> tolerances;
    std::string output;
    std::uint64_t seed = 0;

    /// Throws DomainError for a non-positive radius or tolerance and
    /// ResolutionTooLow below the quadrature minima.
    void validate() const;

    OperatorOptions operator_options() const;

    /// Tolerance override `name`, or `fallback` if none was given.
    double tolerance(const std::string& name, double fallback) const;

    std::string to_json() const;
    static RunConfig from_json(std::string_view text);
    static RunConfig load(const std::string& path);
};

}  // namespace pmp
