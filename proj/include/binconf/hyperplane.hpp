#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binconf/incidence.hpp"

namespace binconf {

/// A hyperplane of a host structure together with its deep lines and the
/// map sending every non-deep line to its unique hyperplane point.
struct HyperplaneView {
  std::vector<std::string> points;      // sorted by host point order
  std::vector<std::string> deep_lines;  // lines entirely inside the hyperplane
  std::vector<std::pair<std::string, std::string>> infinity;  // non-deep line -> point
};

/// True iff every line through two distinct members lies wholly inside.
bool is_subspace(const IncidenceStructure& k, const std::vector<std::string>& h);

/// Proper subspace met by every line. The empty set in a line-free structure
/// counts only when `allow_empty_in_linefree` is set.
bool is_hyperplane(const IncidenceStructure& k, const std::vector<std::string>& h,
                   bool allow_empty_in_linefree = false);

std::vector<std::string> deep_lines(const IncidenceStructure& k,
                                    const std::vector<std::string>& h);

/// Induced structure on the subspace and its deep lines.
IncidenceStructure restriction(const IncidenceStructure& k,
                               const std::vector<std::string>& h);

/// Structure on the complement with the non-deep lines, each shortened by
/// exactly its one hyperplane point.
IncidenceStructure reduct(const IncidenceStructure& k, const std::vector<std::string>& h);

/// The map A -> A^inf from non-deep lines to their hyperplane points.
std::vector<std::pair<std::string, std::string>> extract_infinity(
    const IncidenceStructure& k, const std::vector<std::string>& h);

HyperplaneView hyperplane_view(const IncidenceStructure& k, const std::vector<std::string>& h);

/// Exhaustive hyperplane search: depth-first over points with subspace
/// closure propagation and line-cover pruning. Agrees with the naive 2^nu
/// filter; results sorted by point set.
std::vector<HyperplaneView> enumerate_hyperplanes(const IncidenceStructure& k,
                                                  std::size_t max_points = 24);

/// configuration_type of the restriction, or nullopt.
std::optional<ConfigurationType> hyperplane_is_configuration(
    const IncidenceStructure& k, const std::vector<std::string>& h);

}  // namespace binconf
