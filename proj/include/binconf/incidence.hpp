#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace binconf {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient; throws on uint64 overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Binomial coefficient clamped at `limit` (no overflow possible).
std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t r, std::uint64_t limit);

/// The (nu_rho beta_kappa) parameters of a configuration.
struct ConfigurationType {
  std::uint64_t nu = 0;
  std::uint64_t rho = 0;
  std::uint64_t beta = 0;
  std::uint64_t kappa = 0;
  bool operator==(const ConfigurationType&) const = default;
};

/// The (k,m) parameters of a binomial configuration: nu = C(k+m-1,k),
/// rho = k, beta = C(k+m-1,m), kappa = m.
struct BinomialSignature {
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t ground_size() const { return k + m - 1; }
  bool operator==(const BinomialSignature&) const = default;
};

std::optional<BinomialSignature> binomial_signature(const ConfigurationType& t);

struct LineSpec {
  std::string id;
  std::vector<std::string> points;
};

struct PlsViolation {
  std::string point_a, point_b;
  std::string line_a, line_b;
};

/// Finite incidence structure <U, L, |->. Immutable after construction;
/// points and lines are opaque string identifiers with disjoint namespaces.
class IncidenceStructure {
public:
  IncidenceStructure() = default;

  /// Canonical constructor. Incidence fibers are normalized to declaration
  /// order of points/lines, so structural equality is well defined.
  static IncidenceStructure build(std::vector<std::string> points,
                                  std::vector<LineSpec> lines);

  std::size_t point_count() const { return points_.size(); }
  std::size_t line_count() const { return lines_.size(); }
  std::size_t incidence_count() const { return incidence_count_; }

  const std::vector<std::string>& point_ids() const { return points_; }
  const std::vector<std::string>& line_ids() const { return lines_; }

  bool has_point(const std::string& id) const { return point_index_.count(id) != 0; }
  bool has_line(const std::string& id) const { return line_index_.count(id) != 0; }

  int point_index(const std::string& id) const;
  int line_index(const std::string& id) const;

  std::size_t point_rank(const std::string& point) const;
  std::size_t line_size(const std::string& line) const;

  std::vector<std::string> lines_through(const std::string& point) const;
  std::vector<std::string> points_on(const std::string& line) const;

  const std::vector<int>& line_fiber(int line_idx) const { return line_points_[line_idx]; }
  const std::vector<int>& point_fiber(int point_idx) const { return point_lines_[point_idx]; }

  bool incident(const std::string& point, const std::string& line) const;
  bool incident_index(int point_idx, int line_idx) const;

  /// Swaps the roles of points and lines, inverting the incidence.
  IncidenceStructure dual() const;

  std::optional<PlsViolation> pls_violation() const;
  bool is_partial_linear_space() const { return !pls_violation().has_value(); }

  /// The (nu,rho,beta,kappa) tuple if the structure is a partial linear
  /// space with constant point rank and constant line size; nullopt otherwise.
  std::optional<ConfigurationType> configuration_type() const;

  bool operator==(const IncidenceStructure& other) const;

private:
  std::vector<std::string> points_;
  std::vector<std::string> lines_;
  std::unordered_map<std::string, int> point_index_;
  std::unordered_map<std::string, int> line_index_;
  std::vector<std::vector<int>> line_points_;  // sorted by point index
  std::vector<std::vector<int>> point_lines_;  // sorted by line index
  std::size_t incidence_count_ = 0;
};

std::optional<BinomialSignature> binomial_signature(const IncidenceStructure& k);

/// Equality of point/line sets and incidence, ignoring declaration order.
bool equal_up_to_order(const IncidenceStructure& a, const IncidenceStructure& b);

/// Rebuilds the structure with identifiers renamed pointwise.
IncidenceStructure rename_structure(
    const IncidenceStructure& k,
    const std::unordered_map<std::string, std::string>& point_names,
    const std::unordered_map<std::string, std::string>& line_names);

/// Checks that (point_map, line_map) is an incidence-preserving bijection
/// pair from `a` onto `b` (both directions).
bool verify_witness(const IncidenceStructure& a, const IncidenceStructure& b,
                    const std::unordered_map<std::string, std::string>& point_map,
                    const std::unordered_map<std::string, std::string>& line_map);

}  // namespace binconf
