#include "binconf/glue.hpp"

#include <algorithm>
#include <numeric>

#include "binconf/hyperplane.hpp"
#include "binconf/iso.hpp"

namespace binconf {

const std::string* GluingMap::target_of(const std::string& line) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), line,
                             [](const auto& e, const std::string& l) { return e.first < l; });
  if (it == entries.end() || it->first != line) return nullptr;
  return &it->second;
}

GluingMap GluingMap::inverse() const {
  if (!bijective) throw Error("gluing map inverse requires a bijective map");
  GluingMap inv;
  inv.bijective = true;
  inv.entries.reserve(entries.size());
  for (const auto& [line, point] : entries) inv.entries.emplace_back(point, line);
  std::sort(inv.entries.begin(), inv.entries.end());
  return inv;
}

GlueValidityError::GlueValidityError(std::string p, std::string a, std::string b)
    : Error("lines '" + a + "' and '" + b + "' through point '" + p +
            "' share their image under the gluing map"),
      point(std::move(p)), line_a(std::move(a)), line_b(std::move(b)) {}

GluingMap validate_gluing(const IncidenceStructure& k1, const IncidenceStructure& k2,
                          const std::map<std::string, std::string>& raw) {
  GluingMap out;
  out.entries.reserve(raw.size());
  for (const auto& [line, point] : raw) {
    if (!k1.has_line(line)) throw Error("gluing map names unknown line '" + line + "'");
    if (!k2.has_point(point)) throw Error("gluing map names unknown point '" + point + "'");
    out.entries.emplace_back(line, point);
  }
  if (out.entries.size() != k1.line_count())
    throw Error("gluing map must be total on the lines of the left structure");
  std::sort(out.entries.begin(), out.entries.end());

  // Validity: two distinct lines through a common point get distinct images.
  for (const auto& point : k1.point_ids()) {
    std::map<std::string, std::string> images;
    for (const auto& line : k1.lines_through(point)) {
      const std::string& image = *out.target_of(line);
      auto [it, inserted] = images.emplace(image, line);
      if (!inserted) throw GlueValidityError(point, it->second, line);
    }
  }

  std::vector<std::string> targets;
  targets.reserve(out.entries.size());
  for (const auto& [line, point] : out.entries) targets.push_back(point);
  std::sort(targets.begin(), targets.end());
  bool injective = std::adjacent_find(targets.begin(), targets.end()) == targets.end();
  out.bijective = injective && targets.size() == k2.point_count();
  return out;
}

IncidenceStructure glue(const IncidenceStructure& k1, const IncidenceStructure& k2,
                        const GluingMap& inf) {
  // Revalidate cheaply; a stale map would corrupt the output silently.
  std::map<std::string, std::string> raw(inf.entries.begin(), inf.entries.end());
  GluingMap checked = validate_gluing(k1, k2, raw);

  std::vector<std::string> points;
  points.reserve(k1.point_count() + k2.point_count());
  for (const auto& p : k1.point_ids()) points.push_back(kLeftPrefix + p);
  for (const auto& p : k2.point_ids()) points.push_back(kRightPrefix + p);

  std::vector<LineSpec> lines;
  lines.reserve(k1.line_count() + k2.line_count());
  for (const auto& l : k1.line_ids()) {
    LineSpec spec;
    spec.id = kLeftPrefix + l;
    for (const auto& p : k1.points_on(l)) spec.points.push_back(kLeftPrefix + p);
    spec.points.push_back(kRightPrefix + *checked.target_of(l));
    lines.push_back(std::move(spec));
  }
  for (const auto& l : k2.line_ids()) {
    LineSpec spec;
    spec.id = kRightPrefix + l;
    for (const auto& p : k2.points_on(l)) spec.points.push_back(kRightPrefix + p);
    lines.push_back(std::move(spec));
  }
  return IncidenceStructure::build(std::move(points), std::move(lines));
}

DecomposeError::DecomposeError(Reason r, const std::string& what) : Error(what), reason(r) {}

Decomposition decompose(const IncidenceStructure& k, const std::vector<std::string>& h) {
  auto type = k.configuration_type();
  auto signature = type ? binomial_signature(*type) : std::nullopt;
  if (!signature)
    throw DecomposeError(DecomposeError::Reason::NotBinomial,
                         "structure is not a binomial configuration");
  if (!is_hyperplane(k, h))
    throw DecomposeError(DecomposeError::Reason::NotHyperplane,
                         "point set is not a hyperplane");
  IncidenceStructure k2 = restriction(k, h);
  if (!k2.configuration_type())
    throw DecomposeError(DecomposeError::Reason::RestrictionNotConfiguration,
                         "hyperplane restriction does not have constant point rank");
  IncidenceStructure k1 = reduct(k, h);
  auto reduct_type = k1.configuration_type();
  auto reduct_sig = reduct_type ? binomial_signature(*reduct_type) : std::nullopt;
  if (!reduct_sig)
    throw DecomposeError(DecomposeError::Reason::ReductNotBinomial,
                         "reduct is not a binomial configuration");

  std::uint64_t sig_k = signature->k, sig_m = signature->m;
  if (!(reduct_sig->k == sig_k && reduct_sig->m == sig_m - 1))
    throw Error("internal error: reduct signature inconsistent with the binomial decomposition");
  if (sig_k >= 2) {
    auto rest_sig = binomial_signature(k2);
    if (!rest_sig || !(rest_sig->k == sig_k - 1 && rest_sig->m == sig_m))
      throw Error("internal error: restriction signature inconsistent with the binomial decomposition");
  } else {
    // k = 1: the hyperplane part degenerates to one isolated point.
    if (k2.point_count() != 1 || k2.line_count() != 0)
      throw Error("internal error: degenerate restriction is not an isolated point");
  }

  Decomposition d;
  d.reduct_part = std::move(k1);
  d.hyperplane_part = std::move(k2);
  auto inf_pairs = extract_infinity(k, h);
  std::map<std::string, std::string> raw(inf_pairs.begin(), inf_pairs.end());
  d.infinity = validate_gluing(d.reduct_part, d.hyperplane_part, raw);
  if (!d.infinity.bijective)
    throw Error("internal error: infinity map is not bijective on a binomial decomposition");

  for (const auto& p : d.reduct_part.point_ids()) d.witness_points.emplace(kLeftPrefix + p, p);
  for (const auto& p : d.hyperplane_part.point_ids())
    d.witness_points.emplace(kRightPrefix + p, p);
  for (const auto& l : d.reduct_part.line_ids()) d.witness_lines.emplace(kLeftPrefix + l, l);
  for (const auto& l : d.hyperplane_part.line_ids())
    d.witness_lines.emplace(kRightPrefix + l, l);
  IncidenceStructure reglued = glue(d.reduct_part, d.hyperplane_part, d.infinity);
  if (!verify_witness(reglued, k, d.witness_points, d.witness_lines))
    throw Error("internal error: decomposition witness failed verification");
  return d;
}

bool verify_duality(const IncidenceStructure& k1, const IncidenceStructure& k2,
                    const GluingMap& inf) {
  if (!inf.bijective) throw Error("verify_duality requires a bijective gluing map");
  IncidenceStructure lhs = glue(k1, k2, inf).dual();
  IncidenceStructure rhs = glue(k2.dual(), k1.dual(), inf.inverse());

  // The two sides agree up to swapping the left/right prefixes.
  auto swap_prefix = [](const std::string& id) {
    if (id.rfind(kLeftPrefix, 0) == 0) return kRightPrefix + id.substr(2);
    return kLeftPrefix + id.substr(2);
  };
  std::unordered_map<std::string, std::string> point_names, line_names;
  for (const auto& p : lhs.point_ids()) point_names.emplace(p, swap_prefix(p));
  for (const auto& l : lhs.line_ids()) line_names.emplace(l, swap_prefix(l));
  return equal_up_to_order(rename_structure(lhs, point_names, line_names), rhs);
}

std::vector<GluingMap> enumerate_gluings(const IncidenceStructure& k1,
                                         const IncidenceStructure& k2,
                                         std::uint64_t cap) {
  std::size_t t = k1.line_count();
  if (t != k2.point_count())
    throw Error("bijective gluings require |lines(K1)| = |points(K2)|");
  std::uint64_t candidates = 1;
  for (std::size_t i = 2; i <= t; ++i) {
    candidates *= i;
    if (candidates > cap)
      throw Error("gluing enumeration would visit " + std::to_string(t) +
                  "! candidates, above the cap of " + std::to_string(cap));
  }

  std::vector<std::string> lines = k1.line_ids();
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> points = k2.point_ids();
  std::sort(points.begin(), points.end());

  std::vector<GluingMap> out;
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<std::string, std::string> raw;
    for (std::size_t i = 0; i < t; ++i) raw.emplace(lines[i], points[perm[i]]);
    try {
      out.push_back(validate_gluing(k1, k2, raw));
    } catch (const GlueValidityError&) {
      // concurrent lines collide; skip this bijection
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<GluingClass> classify_gluings(const IncidenceStructure& k1,
                                          const IncidenceStructure& k2,
                                          std::uint64_t cap) {
  auto gluings = enumerate_gluings(k1, k2, cap);
  std::map<std::string, GluingClass> classes;
  for (const auto& g : gluings) {
    auto cert = canonical_form(glue(k1, k2, g)).hex();
    auto [it, inserted] = classes.emplace(cert, GluingClass{});
    if (inserted) {
      it->second.representative = g;
      it->second.certificate_hex = cert;
    }
    ++it->second.size;
  }
  std::vector<GluingClass> out;
  out.reserve(classes.size());
  for (auto& [cert, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace binconf
