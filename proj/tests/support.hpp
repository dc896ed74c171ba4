#pragma once

// Shared test fixtures and independent oracles. Everything here must stay
// independent of the library code paths it checks: hyperplane and
// isomorphism oracles are brute force, counting oracles are factorial or
// recursive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "binconf/incidence.hpp"

namespace binconf_test {

using binconf::IncidenceStructure;
using binconf::LineSpec;

inline IncidenceStructure fano() {
  std::vector<std::string> points{"1", "2", "3", "4", "5", "6", "7"};
  std::vector<std::vector<std::string>> lines{{"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"},
                                              {"2", "4", "6"}, {"2", "5", "7"}, {"3", "4", "7"},
                                              {"3", "5", "6"}};
  std::vector<LineSpec> specs;
  for (std::size_t i = 0; i < lines.size(); ++i)
    specs.push_back({"l" + std::to_string(i + 1), lines[i]});
  return IncidenceStructure::build(points, specs);
}

// Factorial-based binomial coefficient, independent of the library version.
inline std::uint64_t oracle_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  auto fact = [](unsigned v) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= v; ++i) f *= i;
    return f;
  };
  return fact(n) / (fact(k) * fact(n - k));
}

// Recursive count of k-multisets over an n-atom ground set.
inline std::uint64_t oracle_multiset_count(unsigned n, unsigned k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return oracle_multiset_count(n - 1, k) + oracle_multiset_count(n, k - 1);
}

// Naive 2^nu hyperplane filter: proper subsets that are subspaces and meet
// every line. Reported as sorted point-index lists in sorted order.
inline std::vector<std::vector<int>> oracle_hyperplanes(const IncidenceStructure& k) {
  std::size_t nu = k.point_count();
  std::vector<std::vector<int>> fibers;
  for (const auto& line : k.line_ids()) {
    std::vector<int> fiber;
    for (const auto& p : k.points_on(line)) fiber.push_back(k.point_index(p));
    fibers.push_back(fiber);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nu); ++mask) {
    if (mask + 1 == (std::uint64_t{1} << nu)) continue;  // improper
    bool ok = true;
    for (const auto& fiber : fibers) {
      std::size_t in = 0;
      for (int pi : fiber) in += (mask >> pi) & 1;
      if (in == 0 || (in >= 2 && in != fiber.size())) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (mask == 0 && k.line_count() == 0) continue;  // empty set needs the explicit flag
    std::vector<int> members;
    for (std::size_t pi = 0; pi < nu; ++pi)
      if ((mask >> pi) & 1) members.push_back(static_cast<int>(pi));
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force isomorphism over all point bijections; line identifiers are
// matched as a multiset of point-index sets.
inline bool oracle_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return false;
  std::size_t nu = a.point_count();
  auto line_sets = [](const IncidenceStructure& k, const std::vector<int>& point_image) {
    std::vector<std::vector<int>> sets;
    for (const auto& line : k.line_ids()) {
      std::vector<int> s;
      for (const auto& p : k.points_on(line)) {
        int pi = k.point_index(p);
        s.push_back(point_image.empty() ? pi : point_image[pi]);
      }
      std::sort(s.begin(), s.end());
      sets.push_back(s);
    }
    std::sort(sets.begin(), sets.end());
    return sets;
  };
  auto target = line_sets(b, {});
  std::vector<int> perm(nu);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (line_sets(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return nu == 0 && a.line_count() == b.line_count() && line_sets(a, {}) == target;
}

// Random partial linear space: up to `attempts` random small lines are
// added whenever they keep every pairwise intersection below two points.
inline IncidenceStructure random_pls(std::uint64_t seed, int npoints, int attempts) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> points;
  for (int i = 1; i <= npoints; ++i) points.push_back("p" + std::to_string(i));
  std::vector<std::vector<int>> fibers;
  std::vector<LineSpec> lines;
  if (npoints < 2) attempts = 0;
  std::uniform_int_distribution<int> size_dist(2, std::max(2, std::min(4, npoints)));
  for (int t = 0; t < attempts; ++t) {
    int size = size_dist(rng);
    std::vector<int> candidate(npoints);
    std::iota(candidate.begin(), candidate.end(), 0);
    std::shuffle(candidate.begin(), candidate.end(), rng);
    candidate.resize(size);
    std::sort(candidate.begin(), candidate.end());
    bool ok = true;
    for (const auto& fiber : fibers) {
      std::vector<int> common;
      std::set_intersection(fiber.begin(), fiber.end(), candidate.begin(), candidate.end(),
                            std::back_inserter(common));
      if (common.size() >= 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    LineSpec spec;
    spec.id = "l" + std::to_string(lines.size() + 1);
    for (int pi : candidate) spec.points.push_back(points[pi]);
    lines.push_back(spec);
    fibers.push_back(candidate);
  }
  return IncidenceStructure::build(points, lines);
}

// Relabeled copy with shuffled identifiers and shuffled declaration order.
inline IncidenceStructure random_relabel(const IncidenceStructure& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> point_names(k.point_count()), line_names(k.line_count());
  for (std::size_t i = 0; i < point_names.size(); ++i) point_names[i] = "x" + std::to_string(i);
  for (std::size_t i = 0; i < line_names.size(); ++i) line_names[i] = "y" + std::to_string(i);
  std::shuffle(point_names.begin(), point_names.end(), rng);
  std::shuffle(line_names.begin(), line_names.end(), rng);

  std::vector<int> point_order(k.point_count()), line_order(k.line_count());
  std::iota(point_order.begin(), point_order.end(), 0);
  std::iota(line_order.begin(), line_order.end(), 0);
  std::shuffle(point_order.begin(), point_order.end(), rng);
  std::shuffle(line_order.begin(), line_order.end(), rng);

  std::vector<std::string> points;
  for (int pi : point_order) points.push_back(point_names[pi]);
  std::vector<LineSpec> lines;
  for (int li : line_order) {
    LineSpec spec;
    spec.id = line_names[li];
    for (const auto& p : k.points_on(k.line_ids()[li]))
      spec.points.push_back(point_names[k.point_index(p)]);
    lines.push_back(spec);
  }
  return IncidenceStructure::build(points, lines);
}

}  // namespace binconf_test
