#include "binconf/triangle.hpp"

#include <algorithm>
#include <random>

#include "binconf/families.hpp"
#include "binconf/hyperplane.hpp"
#include "binconf/multiset.hpp"

namespace binconf {

namespace {

constexpr int kMaxDepth = 6;

BinomialSignature cell_signature(int m, int k) {
  return BinomialSignature{static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)};
}

IncidenceStructure family_cell(TriangleFamily family, int m, int k) {
  switch (family) {
    case TriangleFamily::Grassmannian: return dcd(m + k - 1, m);
    case TriangleFamily::Veronesian: return veronesian(k, m);
    case TriangleFamily::DualVeronesian: return dual_veronesian(m, k);
  }
  throw Error("unreachable family");
}

// Gluing from the lines of cell(m,k-1) to the points of cell(m-1,k), plus
// the renaming that carries glue(cell(m,k-1), cell(m-1,k), inf) onto
// cell(m,k). Everything is computed from the subset/multiset content that
// the identifiers encode.
struct CellRecipe {
  std::map<std::string, std::string> raw_gluing;
  CellWitness witness;
};

CellRecipe grassmannian_recipe(int m, int k) {
  CellRecipe r;
  int n = m + k - 1;
  // Reduct lines and hyperplane points are the same (m-1)-subsets of the
  // smaller ground set; infinity is the identity on identifiers.
  for (const auto& e : enumerate_subsets(n - 1, m - 1))
    r.raw_gluing.emplace(e.to_string(), e.to_string());
  r.witness.identity = false;
  auto with_last = [n](const KSubset& s) {
    auto members = s.members;
    members.push_back(n);
    return subset_id(members);
  };
  for (const auto& p : enumerate_subsets(n - 1, m))
    r.witness.points.emplace(kLeftPrefix + p.to_string(), p.to_string());
  for (const auto& q : enumerate_subsets(n - 1, m - 1))
    r.witness.points.emplace(kRightPrefix + q.to_string(), with_last(q));
  for (const auto& e : enumerate_subsets(n - 1, m - 1))
    r.witness.lines.emplace(kLeftPrefix + e.to_string(), e.to_string());
  for (const auto& f : enumerate_subsets(n - 1, m - 2))
    r.witness.lines.emplace(kRightPrefix + f.to_string(), with_last(f));
  return r;
}

CellRecipe veronesian_recipe(int m, int k) {
  CellRecipe r;
  Ground ground = letter_ground(k);
  int a = k - 1;  // last atom
  for (int len = 0; len < m; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      if (e.count(a) == 0)
        r.raw_gluing.emplace(
            e.to_string(),
            e.times_atom(a, static_cast<std::uint32_t>(m - 1 - len)).to_string());
  r.witness.identity = false;
  for (const auto& f : enumerate_multisets(ground, m))
    if (f.count(a) == 0) r.witness.points.emplace(kLeftPrefix + f.to_string(), f.to_string());
  for (const auto& g : enumerate_multisets(ground, m - 1))
    r.witness.points.emplace(kRightPrefix + g.to_string(), g.times_atom(a, 1).to_string());
  for (int len = 0; len < m; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      if (e.count(a) == 0) r.witness.lines.emplace(kLeftPrefix + e.to_string(), e.to_string());
  for (int len = 0; len + 1 < m; ++len)
    for (const auto& h : enumerate_multisets(ground, len))
      r.witness.lines.emplace(kRightPrefix + h.to_string(), h.times_atom(a, 1).to_string());
  return r;
}

CellRecipe dual_veronesian_recipe(int m, int k) {
  CellRecipe r;
  Ground ground = letter_ground(m);
  int a = m - 1;
  for (const auto& g : enumerate_multisets(ground, k - 1))
    r.raw_gluing.emplace(g.to_string(), g.divide_atom(a, g.count(a)).to_string());
  r.witness.identity = false;
  for (int len = 0; len + 1 < k; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      r.witness.points.emplace(kLeftPrefix + e.to_string(), e.times_atom(a, 1).to_string());
  for (int len = 0; len < k; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      if (e.count(a) == 0) r.witness.points.emplace(kRightPrefix + e.to_string(), e.to_string());
  for (const auto& f : enumerate_multisets(ground, k - 1))
    r.witness.lines.emplace(kLeftPrefix + f.to_string(), f.times_atom(a, 1).to_string());
  for (const auto& f : enumerate_multisets(ground, k))
    if (f.count(a) == 0) r.witness.lines.emplace(kRightPrefix + f.to_string(), f.to_string());
  return r;
}

CellRecipe family_recipe(TriangleFamily family, int m, int k) {
  switch (family) {
    case TriangleFamily::Grassmannian: return grassmannian_recipe(m, k);
    case TriangleFamily::Veronesian: return veronesian_recipe(m, k);
    case TriangleFamily::DualVeronesian: return dual_veronesian_recipe(m, k);
  }
  throw Error("unreachable family");
}

void check_depth(int depth) {
  if (depth < 1 || depth > kMaxDepth)
    throw Error("triangle depth must be in 1.." + std::to_string(kMaxDepth));
}

}  // namespace

TriangleFamily triangle_family_from_name(const std::string& name) {
  if (name == "grassmannian") return TriangleFamily::Grassmannian;
  if (name == "veronesian") return TriangleFamily::Veronesian;
  if (name == "dual-veronesian") return TriangleFamily::DualVeronesian;
  throw Error("unknown triangle family '" + name + "'");
}

std::string triangle_family_name(TriangleFamily family) {
  switch (family) {
    case TriangleFamily::Grassmannian: return "grassmannian";
    case TriangleFamily::Veronesian: return "veronesian";
    case TriangleFamily::DualVeronesian: return "dual-veronesian";
  }
  throw Error("unreachable family");
}

ConfigTriangle build_family_triangle(TriangleFamily family, int depth) {
  check_depth(depth);
  ConfigTriangle t;
  t.depth = depth;
  t.provenance = triangle_family_name(family);
  for (int m = 1; m <= depth; ++m)
    for (int k = 1; k <= depth; ++k)
      t.entries.emplace(CellIndex{m, k}, family_cell(family, m, k));
  for (int m = 2; m <= depth; ++m)
    for (int k = 2; k <= depth; ++k) {
      auto recipe = family_recipe(family, m, k);
      const auto& left = t.entries.at({m, k - 1});
      const auto& right = t.entries.at({m - 1, k});
      GluingMap inf = validate_gluing(left, right, recipe.raw_gluing);
      t.gluings.emplace(CellIndex{m, k}, std::move(inf));
      t.witnesses.emplace(CellIndex{m, k}, std::move(recipe.witness));
    }
  auto report = verify_triangle(t);
  if (!report.all_pass) {
    for (const auto& cell : report.cells)
      if (!cell.pass())
        throw Error("family triangle failed verification at cell (" +
                    std::to_string(cell.m) + "," + std::to_string(cell.k) + "): " +
                    cell.message);
  }
  return t;
}

ConfigTriangle build_custom_triangle(const std::vector<IncidenceStructure>& boundary_column,
                                     const std::vector<IncidenceStructure>& boundary_row,
                                     const GluingChooser& chooser) {
  int depth = static_cast<int>(boundary_column.size());
  check_depth(depth);
  if (static_cast<int>(boundary_row.size()) != depth)
    throw Error("boundary row and column must have equal length");

  ConfigTriangle t;
  t.depth = depth;
  t.provenance = "custom";
  for (int m = 1; m <= depth; ++m) {
    const auto& entry = boundary_column[m - 1];
    if (binomial_signature(entry) != std::optional{cell_signature(m, 1)})
      throw Error("boundary column entry " + std::to_string(m) +
                  " does not have signature (" + std::to_string(m) + ",1)");
    t.entries.emplace(CellIndex{m, 1}, entry);
  }
  for (int k = 2; k <= depth; ++k) {
    const auto& entry = boundary_row[k - 1];
    if (binomial_signature(entry) != std::optional{cell_signature(1, k)})
      throw Error("boundary row entry " + std::to_string(k) +
                  " does not have signature (1," + std::to_string(k) + ")");
    t.entries.emplace(CellIndex{1, k}, entry);
  }
  if (!(boundary_row[0] == boundary_column[0]))
    throw Error("boundary row and column disagree at the shared corner cell");

  for (int diag = 4; diag <= 2 * depth; ++diag) {
    for (int m = 2; m <= depth; ++m) {
      int k = diag - m;
      if (k < 2 || k > depth) continue;
      if (!t.entries.count({m, k - 1}) || !t.entries.count({m - 1, k})) {
        t.unresolved.push_back({m, k});
        continue;
      }
      const auto& left = t.entries.at({m, k - 1});
      const auto& right = t.entries.at({m - 1, k});
      std::vector<std::string> lines = left.line_ids();
      std::sort(lines.begin(), lines.end());
      std::vector<std::string> points = right.point_ids();
      std::sort(points.begin(), points.end());
      if (lines.size() != points.size()) {
        t.unresolved.push_back({m, k});
        continue;
      }

      std::map<std::string, std::string> raw;
      if (chooser.kind == GluingChooser::Kind::Explicit) {
        auto it = chooser.explicit_maps.find({m, k});
        if (it == chooser.explicit_maps.end()) {
          t.unresolved.push_back({m, k});
          continue;
        }
        raw.insert(it->second.entries.begin(), it->second.entries.end());
      } else {
        if (chooser.kind == GluingChooser::Kind::RandomSeeded) {
          std::mt19937_64 rng(chooser.seed ^ (static_cast<std::uint64_t>(m) << 32) ^
                              static_cast<std::uint64_t>(k));
          std::shuffle(points.begin(), points.end(), rng);
        }
        for (std::size_t i = 0; i < lines.size(); ++i) raw.emplace(lines[i], points[i]);
      }

      GluingMap inf;
      try {
        inf = validate_gluing(left, right, raw);
      } catch (const Error&) {
        t.unresolved.push_back({m, k});
        continue;
      }
      t.entries.emplace(CellIndex{m, k}, glue(left, right, inf));
      t.gluings.emplace(CellIndex{m, k}, std::move(inf));
      t.witnesses.emplace(CellIndex{m, k}, CellWitness{});
    }
  }
  return t;
}

TriangleReport verify_triangle(const ConfigTriangle& t) {
  TriangleReport report;
  for (int m = 1; m <= t.depth; ++m)
    for (int k = 1; k <= t.depth; ++k) {
      TriangleCellReport cell;
      cell.m = m;
      cell.k = k;
      auto entry_it = t.entries.find({m, k});
      if (entry_it == t.entries.end()) {
        cell.message = "cell missing";
        cell.signature_ok = false;
        report.cells.push_back(cell);
        report.all_pass = false;
        continue;
      }
      const auto& entry = entry_it->second;
      cell.signature_ok = binomial_signature(entry) == std::optional{cell_signature(m, k)};
      if (!cell.signature_ok) cell.message += "signature mismatch; ";

      auto glue_it = t.gluings.find({m, k});
      auto left_it = t.entries.find({m, k - 1});
      auto right_it = t.entries.find({m - 1, k});
      if (glue_it != t.gluings.end() &&
          (left_it == t.entries.end() || right_it == t.entries.end())) {
        cell.decomposition_ok = false;
        cell.message += "neighbour cell missing; ";
      } else if (glue_it != t.gluings.end()) {
        const auto& left = left_it->second;
        const auto& right = right_it->second;
        IncidenceStructure reglued;
        bool glued_ok = true;
        try {
          reglued = glue(left, right, glue_it->second);
        } catch (const Error& e) {
          glued_ok = false;
          cell.decomposition_ok = false;
          cell.message += std::string("gluing invalid: ") + e.what() + "; ";
        }
        if (glued_ok) {
          const auto& witness = t.witnesses.at({m, k});
          std::unordered_map<std::string, std::string> pw, lw;
          if (witness.identity) {
            for (const auto& p : reglued.point_ids()) pw.emplace(p, p);
            for (const auto& l : reglued.line_ids()) lw.emplace(l, l);
          }
          const auto& point_map = witness.identity ? pw : witness.points;
          const auto& line_map = witness.identity ? lw : witness.lines;
          cell.decomposition_ok = verify_witness(reglued, entry, point_map, line_map);
          if (!cell.decomposition_ok) cell.message += "glued parts do not match the cell; ";

          std::vector<std::string> right_points;
          for (const auto& p : right.point_ids()) right_points.push_back(kRightPrefix + p);
          cell.hyperplane_law_ok = is_hyperplane(reglued, right_points);
          if (cell.hyperplane_law_ok) {
            auto deep = deep_lines(reglued, right_points);
            std::sort(deep.begin(), deep.end());
            std::vector<std::string> right_lines;
            for (const auto& l : right.line_ids()) right_lines.push_back(kRightPrefix + l);
            std::sort(right_lines.begin(), right_lines.end());
            cell.hyperplane_law_ok = deep == right_lines;
          }
          if (!cell.hyperplane_law_ok) cell.message += "hyperplane law fails; ";

          cell.pascal_ok =
              entry.point_count() == left.point_count() + right.point_count();
          if (!cell.pascal_ok) cell.message += "point-count recursion fails; ";
        }
      }
      if (!cell.pass()) report.all_pass = false;
      report.cells.push_back(cell);
    }
  for (const auto& [m, k] : t.unresolved) {
    TriangleCellReport cell;
    cell.m = m;
    cell.k = k;
    cell.signature_ok = false;
    cell.message = "no valid gluing recorded";
    report.cells.push_back(cell);
    report.all_pass = false;
  }
  return report;
}

}  // namespace binconf
