#include "binconf/incidence.hpp"

#include <algorithm>
#include <unordered_set>

namespace binconf {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t v = binomial_clamped(n, r, UINT64_MAX);
  if (v == UINT64_MAX) throw Error("binomial coefficient overflows uint64");
  return v;
}

std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t r, std::uint64_t limit) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > limit) return limit;
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<BinomialSignature> binomial_signature(const ConfigurationType& t) {
  if (t.rho < 1 || t.kappa < 1) return std::nullopt;
  std::uint64_t n = t.rho + t.kappa - 1;
  std::uint64_t limit = std::max(t.nu, t.beta) + 1;
  if (binomial_clamped(n, t.rho, limit) != t.nu) return std::nullopt;
  if (binomial_clamped(n, t.kappa, limit) != t.beta) return std::nullopt;
  return BinomialSignature{t.rho, t.kappa};
}

std::optional<BinomialSignature> binomial_signature(const IncidenceStructure& k) {
  auto t = k.configuration_type();
  if (!t) return std::nullopt;
  return binomial_signature(*t);
}

IncidenceStructure IncidenceStructure::build(std::vector<std::string> points,
                                             std::vector<LineSpec> lines) {
  IncidenceStructure k;
  k.points_ = std::move(points);
  for (std::size_t i = 0; i < k.points_.size(); ++i) {
    const auto& id = k.points_[i];
    if (id.empty()) throw Error("empty point identifier");
    if (!k.point_index_.emplace(id, static_cast<int>(i)).second)
      throw Error("duplicate point identifier '" + id + "'");
  }
  k.lines_.reserve(lines.size());
  k.line_points_.reserve(lines.size());
  k.point_lines_.assign(k.points_.size(), {});
  for (auto& spec : lines) {
    if (spec.id.empty()) throw Error("empty line identifier");
    if (k.point_index_.count(spec.id))
      throw Error("identifier '" + spec.id + "' used as both point and line");
    int li = static_cast<int>(k.lines_.size());
    if (!k.line_index_.emplace(spec.id, li).second)
      throw Error("duplicate line identifier '" + spec.id + "'");
    k.lines_.push_back(spec.id);
    std::vector<int> fiber;
    fiber.reserve(spec.points.size());
    for (const auto& pid : spec.points) {
      auto it = k.point_index_.find(pid);
      if (it == k.point_index_.end())
        throw Error("line '" + spec.id + "' references unknown point '" + pid + "'");
      fiber.push_back(it->second);
    }
    std::sort(fiber.begin(), fiber.end());
    if (std::adjacent_find(fiber.begin(), fiber.end()) != fiber.end())
      throw Error("line '" + spec.id + "' repeats a point");
    for (int pi : fiber) k.point_lines_[pi].push_back(li);
    k.incidence_count_ += fiber.size();
    k.line_points_.push_back(std::move(fiber));
  }
  return k;
}

int IncidenceStructure::point_index(const std::string& id) const {
  auto it = point_index_.find(id);
  if (it == point_index_.end()) throw Error("unknown point '" + id + "'");
  return it->second;
}

int IncidenceStructure::line_index(const std::string& id) const {
  auto it = line_index_.find(id);
  if (it == line_index_.end()) throw Error("unknown line '" + id + "'");
  return it->second;
}

std::size_t IncidenceStructure::point_rank(const std::string& point) const {
  return point_lines_[point_index(point)].size();
}

std::size_t IncidenceStructure::line_size(const std::string& line) const {
  return line_points_[line_index(line)].size();
}

std::vector<std::string> IncidenceStructure::lines_through(const std::string& point) const {
  std::vector<std::string> out;
  for (int li : point_lines_[point_index(point)]) out.push_back(lines_[li]);
  return out;
}

std::vector<std::string> IncidenceStructure::points_on(const std::string& line) const {
  std::vector<std::string> out;
  for (int pi : line_points_[line_index(line)]) out.push_back(points_[pi]);
  return out;
}

bool IncidenceStructure::incident(const std::string& point, const std::string& line) const {
  return incident_index(point_index(point), line_index(line));
}

bool IncidenceStructure::incident_index(int point_idx, int line_idx) const {
  const auto& fiber = line_points_[line_idx];
  return std::binary_search(fiber.begin(), fiber.end(), point_idx);
}

IncidenceStructure IncidenceStructure::dual() const {
  std::vector<LineSpec> lines;
  lines.reserve(points_.size());
  for (std::size_t pi = 0; pi < points_.size(); ++pi) {
    LineSpec spec;
    spec.id = points_[pi];
    for (int li : point_lines_[pi]) spec.points.push_back(lines_[li]);
    lines.push_back(std::move(spec));
  }
  return build(lines_, std::move(lines));
}

std::optional<PlsViolation> IncidenceStructure::pls_violation() const {
  // Mark each collinear point pair; a pair seen from two lines is a violation.
  std::unordered_map<std::uint64_t, int> seen;
  for (std::size_t li = 0; li < line_points_.size(); ++li) {
    const auto& fiber = line_points_[li];
    for (std::size_t a = 0; a < fiber.size(); ++a)
      for (std::size_t b = a + 1; b < fiber.size(); ++b) {
        std::uint64_t key = static_cast<std::uint64_t>(fiber[a]) * points_.size() + fiber[b];
        auto [it, inserted] = seen.emplace(key, static_cast<int>(li));
        if (!inserted)
          return PlsViolation{points_[fiber[a]], points_[fiber[b]],
                              lines_[it->second], lines_[li]};
      }
  }
  return std::nullopt;
}

std::optional<ConfigurationType> IncidenceStructure::configuration_type() const {
  if (pls_violation()) return std::nullopt;
  std::uint64_t rho = points_.empty() ? 0 : point_lines_[0].size();
  for (const auto& fiber : point_lines_)
    if (fiber.size() != rho) return std::nullopt;
  std::uint64_t kappa = lines_.empty() ? 0 : line_points_[0].size();
  for (const auto& fiber : line_points_)
    if (fiber.size() != kappa) return std::nullopt;
  return ConfigurationType{points_.size(), rho, lines_.size(), kappa};
}

bool IncidenceStructure::operator==(const IncidenceStructure& other) const {
  return points_ == other.points_ && lines_ == other.lines_ &&
         line_points_ == other.line_points_;
}

bool equal_up_to_order(const IncidenceStructure& a, const IncidenceStructure& b) {
  auto pa = a.point_ids(), pb = b.point_ids();
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;
  auto la = a.line_ids(), lb = b.line_ids();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  for (const auto& line : la) {
    auto fa = a.points_on(line), fb = b.points_on(line);
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return false;
  }
  return true;
}

IncidenceStructure rename_structure(
    const IncidenceStructure& k,
    const std::unordered_map<std::string, std::string>& point_names,
    const std::unordered_map<std::string, std::string>& line_names) {
  auto renamed = [](const std::unordered_map<std::string, std::string>& names,
                    const std::string& id) {
    auto it = names.find(id);
    return it == names.end() ? id : it->second;
  };
  std::vector<std::string> points;
  for (const auto& p : k.point_ids()) points.push_back(renamed(point_names, p));
  std::vector<LineSpec> lines;
  for (const auto& l : k.line_ids()) {
    LineSpec spec;
    spec.id = renamed(line_names, l);
    for (const auto& p : k.points_on(l)) spec.points.push_back(renamed(point_names, p));
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

bool verify_witness(const IncidenceStructure& a, const IncidenceStructure& b,
                    const std::unordered_map<std::string, std::string>& point_map,
                    const std::unordered_map<std::string, std::string>& line_map) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return false;
  if (point_map.size() != a.point_count() || line_map.size() != a.line_count()) return false;
  std::unordered_set<std::string> hit;
  for (const auto& [from, to] : point_map) {
    if (!a.has_point(from) || !b.has_point(to)) return false;
    if (!hit.insert(to).second) return false;
  }
  hit.clear();
  for (const auto& [from, to] : line_map) {
    if (!a.has_line(from) || !b.has_line(to)) return false;
    if (!hit.insert(to).second) return false;
  }
  if (a.incidence_count() != b.incidence_count()) return false;
  for (const auto& line : a.line_ids()) {
    const auto& image = line_map.at(line);
    auto pts = a.points_on(line);
    if (pts.size() != b.line_size(image)) return false;
    for (const auto& p : pts)
      if (!b.incident(point_map.at(p), image)) return false;
  }
  return true;
}

}  // namespace binconf
