#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "binconf/incidence.hpp"

namespace binconf {

/// Isomorphism-class certificate: points and lines are separate color
/// classes, the certificate is the lexicographically minimal incidence
/// bit-matrix over the refinement/backtracking search tree.
struct CanonicalForm {
  std::vector<std::uint8_t> certificate;
  std::unordered_map<std::string, int> point_labels;  // id -> canonical index
  std::unordered_map<std::string, int> line_labels;

  std::string hex() const;
  bool operator==(const CanonicalForm& other) const { return certificate == other.certificate; }
};

CanonicalForm canonical_form(const IncidenceStructure& k, std::size_t max_elements = 64);

struct IsoWitness {
  std::unordered_map<std::string, std::string> points;
  std::unordered_map<std::string, std::string> lines;
};

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    std::size_t max_elements = 64, IsoWitness* witness = nullptr);

/// Partition by certificate; classes ordered lexicographically by
/// certificate, members keep input order.
std::vector<std::vector<std::size_t>> classify(std::span<const IncidenceStructure> structures,
                                               std::size_t max_elements = 64);

}  // namespace binconf
