#include "binconf/families.hpp"

#include <algorithm>

#include "binconf/multiset.hpp"

namespace binconf {

namespace {

constexpr int kMaxGroundInts = 16;   // subset families
constexpr int kMaxGroundAtoms = 12;  // multiset families
constexpr std::uint64_t kMaxElements = 100000;

void check_subset_ground(int n) {
  if (n < 1 || n > kMaxGroundInts)
    throw Error("ground set size must be in 1.." + std::to_string(kMaxGroundInts));
}

std::size_t count_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t c = 0;
  auto it = b.begin();
  for (int x : a) {
    it = std::lower_bound(it, b.end(), x);
    if (it != b.end() && *it == x) ++c;
  }
  return c;
}

std::uint64_t multiset_family_size(int m, int k) {
  return binomial_clamped(static_cast<std::uint64_t>(m) + k - 1, k, kMaxElements + 1);
}

}  // namespace

IncidenceStructure grassmannian_g(int k, int m) {
  if (k < 1 || m < 1) throw Error("G(k,m) requires k,m >= 1");
  int n = m + k - 1;
  check_subset_ground(n);
  auto pts = enumerate_subsets(n, k);
  auto lns = enumerate_subsets(n, m);
  // With k == m the two subset families coincide; a '*' suffix keeps the
  // point and line namespaces disjoint.
  const std::string line_suffix = (k == m) ? "*" : "";
  std::vector<std::string> points;
  points.reserve(pts.size());
  for (const auto& s : pts) points.push_back(s.to_string());
  std::vector<LineSpec> lines;
  lines.reserve(lns.size());
  for (const auto& l : lns) {
    LineSpec spec;
    spec.id = l.to_string() + line_suffix;
    for (const auto& p : pts)
      if (count_intersection(p.members, l.members) == 1) spec.points.push_back(p.to_string());
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure gras_space(int n, int k) {
  check_subset_ground(n);
  if (k < 1 || k > n - 1) throw Error("GrasSpace(n,k) requires 1 <= k <= n-1");
  auto pts = enumerate_subsets(n, k);
  auto lns = enumerate_subsets(n, k + 1);
  std::vector<std::string> points;
  for (const auto& s : pts) points.push_back(s.to_string());
  std::vector<LineSpec> lines;
  for (const auto& l : lns) {
    LineSpec spec;
    spec.id = l.to_string();
    for (const auto& p : pts)
      if (std::includes(l.members.begin(), l.members.end(), p.members.begin(), p.members.end()))
        spec.points.push_back(p.to_string());
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure dcd(int n, int k) {
  check_subset_ground(n);
  if (k < 1 || k > n) throw Error("DCD(n,k) requires 1 <= k <= n");
  auto pts = enumerate_subsets(n, k);
  auto lns = enumerate_subsets(n, k - 1);
  std::vector<std::string> points;
  for (const auto& s : pts) points.push_back(s.to_string());
  std::vector<LineSpec> lines;
  for (const auto& l : lns) {
    LineSpec spec;
    spec.id = l.to_string();
    for (const auto& p : pts)
      if (std::includes(p.members.begin(), p.members.end(), l.members.begin(), l.members.end()))
        spec.points.push_back(p.to_string());
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure veronesian(int m, int k) {
  if (m < 1 || k < 1) throw Error("V(m,k) requires m,k >= 1");
  if (m > kMaxGroundAtoms) throw Error("V(m,k) ground set capped at " +
                                       std::to_string(kMaxGroundAtoms) + " atoms");
  if (multiset_family_size(m, k) > kMaxElements)
    throw Error("V(m,k) would enumerate too many multisets");
  Ground ground = letter_ground(m);
  auto pts = enumerate_multisets(ground, k);
  std::vector<std::string> points;
  points.reserve(pts.size());
  for (const auto& f : pts) points.push_back(f.to_string());
  std::vector<LineSpec> lines;
  for (int len = 0; len < k; ++len) {
    for (const auto& e : enumerate_multisets(ground, len)) {
      LineSpec spec;
      spec.id = e.to_string();
      // Points on e are exactly e x^(k-len), one per atom x, all distinct.
      for (int a = 0; a < m; ++a)
        spec.points.push_back(e.times_atom(a, static_cast<std::uint32_t>(k - len)).to_string());
      std::sort(spec.points.begin(), spec.points.end());
      lines.push_back(std::move(spec));
    }
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure dual_veronesian(int m, int k) { return veronesian(m, k).dual(); }

IncidenceStructure complete_graph(int n) {
  if (n < 2) throw Error("K_n requires n >= 2");
  if (n > 40) throw Error("K_n capped at n = 40");
  std::vector<std::string> points;
  for (int i = 1; i <= n; ++i) points.push_back(std::to_string(i));
  std::vector<LineSpec> lines;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      lines.push_back({subset_id({i, j}), {std::to_string(i), std::to_string(j)}});
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure dual_complete_graph(int n) { return complete_graph(n).dual(); }

IncidenceStructure veblen() { return gras_space(4, 2); }

namespace {

GluingMap finish_map(std::vector<std::pair<std::string, std::string>> entries,
                     std::size_t hyperplane_size) {
  GluingMap map;
  map.entries = std::move(entries);
  std::sort(map.entries.begin(), map.entries.end());
  std::vector<std::string> targets;
  targets.reserve(map.entries.size());
  for (const auto& [line, point] : map.entries) targets.push_back(point);
  std::sort(targets.begin(), targets.end());
  bool injective = std::adjacent_find(targets.begin(), targets.end()) == targets.end();
  map.bijective = injective && targets.size() == hyperplane_size;
  return map;
}

}  // namespace

CanonicalHyperplane grassmannian_hyperplane(int n, int k, int atom) {
  check_subset_ground(n);
  if (k < 1 || k > n - 1) throw Error("GrasSpace(n,k) requires 1 <= k <= n-1");
  if (atom < 1 || atom > n) throw Error("atom outside the ground set");
  CanonicalHyperplane out;
  for (const auto& p : enumerate_subsets(n, k))
    if (!std::binary_search(p.members.begin(), p.members.end(), atom))
      out.points.push_back(p.to_string());
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& l : enumerate_subsets(n, k + 1)) {
    if (!std::binary_search(l.members.begin(), l.members.end(), atom)) continue;
    std::vector<int> shrunk;
    for (int x : l.members)
      if (x != atom) shrunk.push_back(x);
    entries.emplace_back(l.to_string(), subset_id(shrunk));
  }
  out.infinity = finish_map(std::move(entries), out.points.size());
  return out;
}

namespace {

int atom_index(const Ground& ground, const std::string& atom) {
  auto it = std::find(ground->begin(), ground->end(), atom);
  if (it == ground->end()) throw Error("atom '" + atom + "' outside the ground set");
  return static_cast<int>(it - ground->begin());
}

}  // namespace

CanonicalHyperplane veronesian_hyperplane(int m, int k, const std::string& atom) {
  if (m < 1 || k < 1) throw Error("V(m,k) requires m,k >= 1");
  Ground ground = letter_ground(m);
  int a = atom_index(ground, atom);
  CanonicalHyperplane out;
  for (const auto& f : enumerate_multisets(ground, k))
    if (f.count(a) > 0) out.points.push_back(f.to_string());
  std::vector<std::pair<std::string, std::string>> entries;
  for (int len = 0; len < k; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      if (e.count(a) == 0)
        entries.emplace_back(e.to_string(),
                             e.times_atom(a, static_cast<std::uint32_t>(k - len)).to_string());
  out.infinity = finish_map(std::move(entries), out.points.size());
  return out;
}

CanonicalHyperplane dual_veronesian_hyperplane(int m, int k, const std::string& atom) {
  if (m < 1 || k < 1) throw Error("V(m,k) requires m,k >= 1");
  Ground ground = letter_ground(m);
  int a = atom_index(ground, atom);
  CanonicalHyperplane out;
  // Points of the dual are the short multisets; the hyperplane keeps the
  // atom-free ones.
  for (int len = 0; len < k; ++len)
    for (const auto& e : enumerate_multisets(ground, len))
      if (e.count(a) == 0) out.points.push_back(e.to_string());
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& f : enumerate_multisets(ground, k))
    if (f.count(a) > 0)
      entries.emplace_back(f.to_string(), f.divide_atom(a, f.count(a)).to_string());
  out.infinity = finish_map(std::move(entries), out.points.size());
  return out;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  if (text == "veblen") {
    spec.family = Family::Veblen;
    return spec;
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("malformed family spec '" + text + "'");
  std::string name = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("malformed family parameter '" + s + "' in '" + text + "'");
    return std::stoi(s);
  };
  auto comma = params.find(',');
  if (name == "K" || name == "K*") {
    if (comma != std::string::npos) throw Error("family '" + name + "' takes one parameter");
    spec.family = (name == "K") ? Family::CompleteGraph : Family::DualCompleteGraph;
    spec.p1 = parse_int(params);
    return spec;
  }
  if (comma == std::string::npos) throw Error("family '" + name + "' takes two parameters");
  spec.p1 = parse_int(params.substr(0, comma));
  spec.p2 = parse_int(params.substr(comma + 1));
  if (name == "G") spec.family = Family::GrassmannianG;
  else if (name == "GS") spec.family = Family::GrasSpace;
  else if (name == "DCD") spec.family = Family::Dcd;
  else if (name == "V") spec.family = Family::Veronesian;
  else if (name == "V*") spec.family = Family::DualVeronesian;
  else throw Error("unknown family '" + name + "'");
  return spec;
}

std::string FamilySpec::to_string() const {
  auto two = [&](const char* n) {
    return std::string(n) + ":" + std::to_string(p1) + "," + std::to_string(p2);
  };
  switch (family) {
    case Family::GrassmannianG: return two("G");
    case Family::GrasSpace: return two("GS");
    case Family::Dcd: return two("DCD");
    case Family::Veronesian: return two("V");
    case Family::DualVeronesian: return two("V*");
    case Family::CompleteGraph: return "K:" + std::to_string(p1);
    case Family::DualCompleteGraph: return "K*:" + std::to_string(p1);
    case Family::Veblen: return "veblen";
  }
  throw Error("unreachable family");
}

IncidenceStructure make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case FamilySpec::Family::GrassmannianG: return grassmannian_g(spec.p1, spec.p2);
    case FamilySpec::Family::GrasSpace: return gras_space(spec.p1, spec.p2);
    case FamilySpec::Family::Dcd: return dcd(spec.p1, spec.p2);
    case FamilySpec::Family::Veronesian: return veronesian(spec.p1, spec.p2);
    case FamilySpec::Family::DualVeronesian: return dual_veronesian(spec.p1, spec.p2);
    case FamilySpec::Family::CompleteGraph: return complete_graph(spec.p1);
    case FamilySpec::Family::DualCompleteGraph: return dual_complete_graph(spec.p1);
    case FamilySpec::Family::Veblen: return veblen();
  }
  throw Error("unreachable family");
}

}  // namespace binconf
