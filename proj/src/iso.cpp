#include "binconf/iso.hpp"

#include <algorithm>
#include <map>

namespace binconf {

namespace {

// Bipartite graph view: vertices 0..nu-1 are points, nu..nu+beta-1 lines.
struct Graph {
  int nu = 0, beta = 0;
  std::vector<std::vector<int>> adj;

  int size() const { return nu + beta; }
};

Graph make_graph(const IncidenceStructure& k) {
  Graph g;
  g.nu = static_cast<int>(k.point_count());
  g.beta = static_cast<int>(k.line_count());
  g.adj.assign(g.size(), {});
  for (int li = 0; li < g.beta; ++li) {
    for (int pi : k.line_fiber(li)) {
      g.adj[pi].push_back(g.nu + li);
      g.adj[g.nu + li].push_back(pi);
    }
  }
  return g;
}

// Iterated degree refinement of a vertex coloring. New color ids are
// assigned by sorting (old color, neighbor color multiset) signatures, so
// the result is invariant under relabeling.
void refine(const Graph& g, std::vector<int>& color) {
  int n = g.size();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> order;
    for (int v = 0; v < n; ++v) order.emplace(sig[v].first, 0);
    int next = 0;
    for (auto& [key, id] : order) id = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = order[sig[v].first];
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed || next == n) return;
  }
}

bool discrete(const std::vector<int>& color, int n) {
  std::vector<char> used(n, 0);
  for (int c : color) {
    if (used[c]) return false;
    used[c] = 1;
  }
  return true;
}

// Certificate for a discrete coloring: header + incidence bit matrix with
// points and lines ordered by their canonical colors.
std::vector<std::uint8_t> leaf_certificate(const Graph& g, const std::vector<int>& color,
                                           std::vector<int>& point_label,
                                           std::vector<int>& line_label) {
  std::vector<std::pair<int, int>> pts, lns;
  for (int v = 0; v < g.nu; ++v) pts.push_back({color[v], v});
  for (int v = g.nu; v < g.size(); ++v) lns.push_back({color[v], v - g.nu});
  std::sort(pts.begin(), pts.end());
  std::sort(lns.begin(), lns.end());
  point_label.assign(g.nu, 0);
  line_label.assign(g.beta, 0);
  for (int i = 0; i < g.nu; ++i) point_label[pts[i].second] = i;
  for (int i = 0; i < g.beta; ++i) line_label[lns[i].second] = i;

  std::size_t row_bytes = (static_cast<std::size_t>(g.beta) + 7) / 8;
  std::vector<std::uint8_t> cert(8 + static_cast<std::size_t>(g.nu) * row_bytes, 0);
  for (int i = 0; i < 4; ++i) {
    cert[i] = static_cast<std::uint8_t>((g.nu >> (24 - 8 * i)) & 0xff);
    cert[4 + i] = static_cast<std::uint8_t>((g.beta >> (24 - 8 * i)) & 0xff);
  }
  for (int pi = 0; pi < g.nu; ++pi) {
    for (int v : g.adj[pi]) {
      int lj = line_label[v - g.nu];
      std::size_t bit = static_cast<std::size_t>(point_label[pi]) * row_bytes * 8 + lj;
      cert[8 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    }
  }
  return cert;
}

struct Canonizer {
  const Graph& g;
  std::vector<std::uint8_t> best;
  std::vector<int> best_point_label, best_line_label;
  bool have_best = false;

  explicit Canonizer(const Graph& graph) : g(graph) {}

  void search(std::vector<int> color) {
    refine(g, color);
    if (discrete(color, g.size())) {
      std::vector<int> pl, ll;
      auto cert = leaf_certificate(g, color, pl, ll);
      if (!have_best || cert < best) {
        best = std::move(cert);
        best_point_label = std::move(pl);
        best_line_label = std::move(ll);
        have_best = true;
      }
      return;
    }
    // First smallest non-singleton color class is the branching cell.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < g.size(); ++v) cells[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() < 2) continue;
      if (!target || members.size() < target->size()) target = &members;
    }
    int fresh = g.size() + 1;
    for (int v : *target) {
      std::vector<int> child(color);
      child[v] = fresh;  // individualize v, refinement renormalizes colors
      search(std::move(child));
    }
  }
};

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(certificate.size() * 2);
  for (std::uint8_t b : certificate) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

CanonicalForm canonical_form(const IncidenceStructure& k, std::size_t max_elements) {
  if (k.point_count() + k.line_count() > max_elements)
    throw Error("structure exceeds the canonical-form size guard of " +
                std::to_string(max_elements) + " elements");
  Graph g = make_graph(k);
  std::vector<int> color(g.size(), 0);
  for (int v = g.nu; v < g.size(); ++v) color[v] = 1;  // lines never mix with points
  Canonizer canon(g);
  canon.search(std::move(color));

  CanonicalForm form;
  if (!canon.have_best) {  // empty structure
    std::vector<int> pl, ll;
    form.certificate = leaf_certificate(g, {}, pl, ll);
    return form;
  }
  form.certificate = std::move(canon.best);
  for (int pi = 0; pi < g.nu; ++pi)
    form.point_labels.emplace(k.point_ids()[pi], canon.best_point_label[pi]);
  for (int li = 0; li < g.beta; ++li)
    form.line_labels.emplace(k.line_ids()[li], canon.best_line_label[li]);
  return form;
}

bool are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                    std::size_t max_elements, IsoWitness* witness) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return false;
  if (a.incidence_count() != b.incidence_count()) return false;
  auto degrees = [](const IncidenceStructure& k) {
    std::vector<std::size_t> ranks, sizes;
    for (const auto& p : k.point_ids()) ranks.push_back(k.point_rank(p));
    for (const auto& l : k.line_ids()) sizes.push_back(k.line_size(l));
    std::sort(ranks.begin(), ranks.end());
    std::sort(sizes.begin(), sizes.end());
    return std::pair{ranks, sizes};
  };
  if (degrees(a) != degrees(b)) return false;

  auto fa = canonical_form(a, max_elements);
  auto fb = canonical_form(b, max_elements);
  if (!(fa == fb)) return false;
  if (witness) {
    std::vector<std::string> inv_points(b.point_count()), inv_lines(b.line_count());
    for (const auto& [id, idx] : fb.point_labels) inv_points[idx] = id;
    for (const auto& [id, idx] : fb.line_labels) inv_lines[idx] = id;
    witness->points.clear();
    witness->lines.clear();
    for (const auto& [id, idx] : fa.point_labels) witness->points.emplace(id, inv_points[idx]);
    for (const auto& [id, idx] : fa.line_labels) witness->lines.emplace(id, inv_lines[idx]);
    if (!verify_witness(a, b, witness->points, witness->lines))
      throw Error("internal error: canonical labeling produced an invalid witness");
  }
  return true;
}

std::vector<std::vector<std::size_t>> classify(std::span<const IncidenceStructure> structures,
                                               std::size_t max_elements) {
  std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < structures.size(); ++i)
    buckets[canonical_form(structures[i], max_elements).certificate].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(buckets.size());
  for (auto& [cert, members] : buckets) out.push_back(std::move(members));
  return out;
}

}  // namespace binconf
