#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "binconf/incidence.hpp"

namespace binconf {

using Ground = std::shared_ptr<const std::vector<std::string>>;

/// Ground set of single-letter atoms a, b, c, ... (m <= 26).
Ground letter_ground(int m);

/// Finite multiset over an ordered ground set of atom labels. Written
/// multiplicatively: a^2bc is the map {a:2, b:1, c:1}; the empty multiset
/// prints as "1".
class Multiset {
public:
  Multiset(Ground ground, std::vector<std::uint32_t> counts);
  static Multiset empty(Ground ground);

  const Ground& ground() const { return ground_; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  std::size_t cardinality() const;
  std::vector<int> support() const;
  std::uint32_t count(int atom_idx) const { return counts_[atom_idx]; }

  /// Multiplicity of the named atom; errors when the atom is not in the ground set.
  std::uint32_t degree(const std::string& atom) const;

  Multiset mul(const Multiset& other) const;
  Multiset divide(const Multiset& other) const;

  /// The multiset with `times` copies of one atom added.
  Multiset times_atom(int atom_idx, std::uint32_t times) const;
  /// The multiset with `times` copies of one atom removed.
  Multiset divide_atom(int atom_idx, std::uint32_t times) const;

  std::string to_string() const;

  bool same_ground(const Multiset& other) const;
  bool operator==(const Multiset& other) const;

private:
  Ground ground_;
  std::vector<std::uint32_t> counts_;
};

Multiset mul(const Multiset& f, const Multiset& g);
Multiset divide(const Multiset& f, const Multiset& g);
std::uint32_t degree(const std::string& atom, const Multiset& f);

/// All multisets of cardinality exactly k, ascending in the repeated-atom
/// word order (x^2 < xy < y^2). Count is C(|X|+k-1, k).
std::vector<Multiset> enumerate_multisets(const Ground& ground, int k);

/// Duplicate-free sorted k-subset of the integer ground set {1..ground_size}.
struct KSubset {
  int ground_size = 0;
  std::vector<int> members;  // sorted ascending

  std::string to_string() const;
  bool operator==(const KSubset&) const = default;
};

/// All k-subsets of {1..n} in lexicographic order; count is C(n,k).
std::vector<KSubset> enumerate_subsets(int n, int k);

std::string subset_id(const std::vector<int>& members);

}  // namespace binconf
