#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binconf/glue.hpp"
#include "binconf/incidence.hpp"

namespace binconf {

using CellIndex = std::pair<int, int>;  // (m, k)

/// Identifier renaming witnessing glue(entry(m,k-1), entry(m-1,k), inf)
/// ~= entry(m,k). Empty maps mean the identity.
struct CellWitness {
  std::unordered_map<std::string, std::string> points;
  std::unordered_map<std::string, std::string> lines;
  bool identity = true;
};

/// Array K(m,k), 1 <= m,k <= depth, with K(m,k) in the class B(m,k) and
/// K(m,k) = K(m,k-1) |x| K(m-1,k) along the recorded gluings.
struct ConfigTriangle {
  int depth = 0;
  std::string provenance;  // family name or "custom"
  std::map<CellIndex, IncidenceStructure> entries;
  std::map<CellIndex, GluingMap> gluings;     // non-boundary cells only
  std::map<CellIndex, CellWitness> witnesses; // parallel to gluings
  // Cells where no valid gluing could be chosen (custom builds only).
  std::vector<CellIndex> unresolved;
};

enum class TriangleFamily { Grassmannian, Veronesian, DualVeronesian };

TriangleFamily triangle_family_from_name(const std::string& name);
std::string triangle_family_name(TriangleFamily family);

/// Family triangle entries with their canonical hyperplane gluings; every cell
/// is verified during the build.
ConfigTriangle build_family_triangle(TriangleFamily family, int depth);

struct GluingChooser {
  enum class Kind { FirstValid, RandomSeeded, Explicit };
  Kind kind = Kind::FirstValid;
  std::uint64_t seed = 0;
  std::map<CellIndex, GluingMap> explicit_maps;
};

/// Fills the triangle from the k=1 column and m=1 row boundaries; interior
/// cells are glue outputs of their two neighbours.
ConfigTriangle build_custom_triangle(const std::vector<IncidenceStructure>& boundary_column,
                                     const std::vector<IncidenceStructure>& boundary_row,
                                     const GluingChooser& chooser = {});

struct TriangleCellReport {
  int m = 0, k = 0;
  bool signature_ok = false;
  bool decomposition_ok = true;   // witnessed glue == cell
  bool hyperplane_law_ok = true;  // right part is a hyperplane with the right deep lines
  bool pascal_ok = true;          // point-count recursion
  std::string message;
  bool pass() const { return signature_ok && decomposition_ok && hyperplane_law_ok && pascal_ok; }
};

struct TriangleReport {
  std::vector<TriangleCellReport> cells;
  bool all_pass = true;
};

TriangleReport verify_triangle(const ConfigTriangle& triangle);

}  // namespace binconf
