#include "binconf/hyperplane.hpp"

#include <algorithm>

namespace binconf {

namespace {

std::vector<char> membership(const IncidenceStructure& k, const std::vector<std::string>& h) {
  std::vector<char> in(k.point_count(), 0);
  for (const auto& id : h) {
    int idx = k.point_index(id);
    if (in[idx]) throw Error("hyperplane set repeats point '" + id + "'");
    in[idx] = 1;
  }
  return in;
}

std::size_t in_count(const IncidenceStructure& k, int line_idx, const std::vector<char>& in) {
  std::size_t c = 0;
  for (int pi : k.line_fiber(line_idx)) c += in[pi];
  return c;
}

}  // namespace

bool is_subspace(const IncidenceStructure& k, const std::vector<std::string>& h) {
  auto in = membership(k, h);
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    std::size_t c = in_count(k, static_cast<int>(li), in);
    if (c >= 2 && c != fiber.size()) return false;
  }
  return true;
}

bool is_hyperplane(const IncidenceStructure& k, const std::vector<std::string>& h,
                   bool allow_empty_in_linefree) {
  auto in = membership(k, h);
  if (h.size() == k.point_count()) return false;  // proper only
  if (h.empty() && k.line_count() == 0 && !allow_empty_in_linefree) return false;
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    std::size_t c = in_count(k, static_cast<int>(li), in);
    if (c == 0) return false;  // line misses H
    if (c >= 2 && c != fiber.size()) return false;
  }
  return true;
}

std::vector<std::string> deep_lines(const IncidenceStructure& k,
                                    const std::vector<std::string>& h) {
  auto in = membership(k, h);
  if (!is_subspace(k, h)) throw Error("point set is not a subspace");
  std::vector<std::string> out;
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    if (in_count(k, static_cast<int>(li), in) == fiber.size())
      out.push_back(k.line_ids()[li]);
  }
  return out;
}

IncidenceStructure restriction(const IncidenceStructure& k,
                               const std::vector<std::string>& h) {
  auto in = membership(k, h);
  if (!is_subspace(k, h)) throw Error("point set is not a subspace");
  std::vector<std::string> points;
  for (std::size_t pi = 0; pi < k.point_count(); ++pi)
    if (in[pi]) points.push_back(k.point_ids()[pi]);
  std::vector<LineSpec> lines;
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    // Empty lines are vacuously deep.
    if (in_count(k, static_cast<int>(li), in) != fiber.size()) continue;
    LineSpec spec;
    spec.id = k.line_ids()[li];
    for (int pi : fiber) spec.points.push_back(k.point_ids()[pi]);
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

IncidenceStructure reduct(const IncidenceStructure& k, const std::vector<std::string>& h) {
  auto in = membership(k, h);
  if (!is_hyperplane(k, h)) throw Error("point set is not a hyperplane");
  std::vector<std::string> points;
  for (std::size_t pi = 0; pi < k.point_count(); ++pi)
    if (!in[pi]) points.push_back(k.point_ids()[pi]);
  std::vector<LineSpec> lines;
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    if (in_count(k, static_cast<int>(li), in) == fiber.size()) continue;  // deep
    LineSpec spec;
    spec.id = k.line_ids()[li];
    for (int pi : fiber)
      if (!in[pi]) spec.points.push_back(k.point_ids()[pi]);
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

std::vector<std::pair<std::string, std::string>> extract_infinity(
    const IncidenceStructure& k, const std::vector<std::string>& h) {
  auto in = membership(k, h);
  if (!is_hyperplane(k, h)) throw Error("point set is not a hyperplane");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t li = 0; li < k.line_count(); ++li) {
    const auto& fiber = k.line_fiber(static_cast<int>(li));
    std::size_t c = in_count(k, static_cast<int>(li), in);
    if (c == fiber.size()) continue;  // deep line, no point at infinity
    for (int pi : fiber)
      if (in[pi]) {
        out.emplace_back(k.line_ids()[li], k.point_ids()[pi]);
        break;
      }
  }
  return out;
}

HyperplaneView hyperplane_view(const IncidenceStructure& k, const std::vector<std::string>& h) {
  HyperplaneView view;
  auto in = membership(k, h);
  for (std::size_t pi = 0; pi < k.point_count(); ++pi)
    if (in[pi]) view.points.push_back(k.point_ids()[pi]);
  view.deep_lines = deep_lines(k, h);
  view.infinity = extract_infinity(k, h);
  return view;
}

namespace {

// Depth-first assignment over points. IN/IN forces the rest of a line IN
// (subspace closure); a line with every point OUT can never be covered.
struct HyperplaneSearch {
  const IncidenceStructure& k;
  std::size_t nu, nl;
  std::vector<std::vector<int>> result;

  explicit HyperplaneSearch(const IncidenceStructure& structure)
      : k(structure), nu(structure.point_count()), nl(structure.line_count()) {}

  enum : char { kUndecided = 0, kIn = 1, kOut = 2 };

  bool assign(std::vector<char>& state, std::vector<int>& in_cnt, std::vector<int>& out_cnt,
              int point, char value) {
    std::vector<int> queue = {point};
    std::vector<char> queued_value = {value};
    std::size_t head = 0;
    while (head < queue.size()) {
      int p = queue[head];
      char v = queued_value[head];
      ++head;
      if (state[p] == v) continue;
      if (state[p] != kUndecided) return false;
      state[p] = v;
      for (int li : k.point_fiber(p)) {
        const auto& fiber = k.line_fiber(li);
        if (v == kIn) ++in_cnt[li]; else ++out_cnt[li];
        if (in_cnt[li] >= 2 && out_cnt[li] > 0) return false;
        if (out_cnt[li] == static_cast<int>(fiber.size())) return false;  // uncoverable
        if (in_cnt[li] == 2) {
          for (int q : fiber)
            if (state[q] == kUndecided) {
              queue.push_back(q);
              queued_value.push_back(kIn);
            }
        }
      }
    }
    return true;
  }

  void run() {
    std::vector<char> state(nu, kUndecided);
    std::vector<int> in_cnt(nl, 0), out_cnt(nl, 0);
    recurse(state, in_cnt, out_cnt, 0);
    std::sort(result.begin(), result.end());
  }

  void recurse(const std::vector<char>& state, const std::vector<int>& in_cnt,
               const std::vector<int>& out_cnt, std::size_t next) {
    while (next < nu && state[next] != kUndecided) ++next;
    if (next == nu) {
      for (std::size_t li = 0; li < nl; ++li)
        if (in_cnt[li] == 0 && !k.line_fiber(static_cast<int>(li)).empty()) return;
      std::vector<int> members;
      for (std::size_t pi = 0; pi < nu; ++pi)
        if (state[pi] == kIn) members.push_back(static_cast<int>(pi));
      if (members.size() == nu) return;  // proper only
      if (members.empty() && nl == 0) return;  // empty-in-linefree off by default
      // Lines without points are never met; they rule every candidate out.
      for (std::size_t li = 0; li < nl; ++li)
        if (k.line_fiber(static_cast<int>(li)).empty()) return;
      result.push_back(std::move(members));
      return;
    }
    for (char value : {kIn, kOut}) {
      auto s = state;
      auto ic = in_cnt;
      auto oc = out_cnt;
      if (assign(s, ic, oc, static_cast<int>(next), value))
        recurse(s, ic, oc, next + 1);
    }
  }
};

}  // namespace

std::vector<HyperplaneView> enumerate_hyperplanes(const IncidenceStructure& k,
                                                  std::size_t max_points) {
  if (k.point_count() > max_points)
    throw Error("structure exceeds the hyperplane enumeration cap of " +
                std::to_string(max_points) + " points");
  HyperplaneSearch search(k);
  search.run();
  std::vector<HyperplaneView> out;
  out.reserve(search.result.size());
  for (const auto& members : search.result) {
    std::vector<std::string> ids;
    ids.reserve(members.size());
    for (int pi : members) ids.push_back(k.point_ids()[pi]);
    out.push_back(hyperplane_view(k, ids));
  }
  return out;
}

std::optional<ConfigurationType> hyperplane_is_configuration(
    const IncidenceStructure& k, const std::vector<std::string>& h) {
  if (!is_hyperplane(k, h)) throw Error("point set is not a hyperplane");
  return restriction(k, h).configuration_type();
}

}  // namespace binconf
