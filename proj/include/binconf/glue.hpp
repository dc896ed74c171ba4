#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binconf/incidence.hpp"

namespace binconf {

inline constexpr const char* kLeftPrefix = "L.";
inline constexpr const char* kRightPrefix = "R.";

/// Total map from the lines of K1 to the points of K2, valid for gluing:
/// two distinct lines through a common point never share an image.
struct GluingMap {
  std::vector<std::pair<std::string, std::string>> entries;  // sorted by line id
  bool bijective = false;

  const std::string* target_of(const std::string& line) const;
  GluingMap inverse() const;  // requires bijective
};

class GlueValidityError : public Error {
public:
  GlueValidityError(std::string point, std::string line_a, std::string line_b);
  std::string point, line_a, line_b;
};

GluingMap validate_gluing(const IncidenceStructure& k1, const IncidenceStructure& k2,
                          const std::map<std::string, std::string>& raw);

/// K1 |x|_inf K2: disjoint union where every K1 line additionally picks up
/// its image point in K2. Identifiers are prefixed "L."/"R." to enforce
/// namespace disjointness. The result is always a partial linear space and
/// the K2 points form a hyperplane of it whose deep lines are the K2 lines.
IncidenceStructure glue(const IncidenceStructure& k1, const IncidenceStructure& k2,
                        const GluingMap& inf);

class DecomposeError : public Error {
public:
  enum class Reason { NotBinomial, NotHyperplane, RestrictionNotConfiguration, ReductNotBinomial };
  DecomposeError(Reason r, const std::string& what);
  Reason reason;
};

/// Witnessed decomposition K ~= reduct |x|_inf restriction at a hyperplane.
struct Decomposition {
  IncidenceStructure reduct_part;       // K1
  IncidenceStructure hyperplane_part;   // K2
  GluingMap infinity;
  // Verified isomorphism from glue(reduct_part, hyperplane_part, infinity)
  // onto the original structure.
  std::unordered_map<std::string, std::string> witness_points;
  std::unordered_map<std::string, std::string> witness_lines;
};

Decomposition decompose(const IncidenceStructure& k, const std::vector<std::string>& hyperplane);

/// dual(glue(K1,K2,inf)) equals glue(dual K2, dual K1, inf^-1) after the
/// canonical left/right prefix swap; requires a bijective map.
bool verify_duality(const IncidenceStructure& k1, const IncidenceStructure& k2,
                    const GluingMap& inf);

/// All valid bijections lines(K1) -> points(K2) in lexicographic order.
/// Errors when the candidate count |points(K2)|! exceeds `cap`.
std::vector<GluingMap> enumerate_gluings(const IncidenceStructure& k1,
                                         const IncidenceStructure& k2,
                                         std::uint64_t cap = 362880);

struct GluingClass {
  GluingMap representative;  // lexicographically first member
  std::size_t size = 0;
  std::string certificate_hex;
};

/// Valid gluings partitioned by isomorphism type of the glued structure,
/// ordered by certificate.
std::vector<GluingClass> classify_gluings(const IncidenceStructure& k1,
                                          const IncidenceStructure& k2,
                                          std::uint64_t cap = 362880);

}  // namespace binconf
