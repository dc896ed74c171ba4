#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "binconf/families.hpp"
#include "binconf/glue.hpp"
#include "binconf/hyperplane.hpp"
#include "binconf/iso.hpp"
#include "binconf/multiset.hpp"
#include "support.hpp"

using namespace binconf;
using binconf_test::fano;
using binconf_test::oracle_hyperplanes;
using binconf_test::random_pls;

namespace {

std::vector<std::vector<int>> as_index_sets(const IncidenceStructure& k,
                                            const std::vector<HyperplaneView>& views) {
  std::vector<std::vector<int>> out;
  for (const auto& v : views) {
    std::vector<int> members;
    for (const auto& p : v.points) members.push_back(k.point_index(p));
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Remark-style hyperplane of the Desargues presentation GrasSpace(5,2):
// the points of one line plus the unique point joinable to none of them.
std::vector<std::string> line_plus_far_point() {
  return {"{1,2}", "{1,3}", "{2,3}", "{4,5}"};
}

}  // namespace

TEST_CASE("subspace predicate") {
  auto desargues = gras_space(5, 2);
  CHECK(is_subspace(desargues, {}));
  CHECK(is_subspace(desargues, {"{1,2}"}));
  CHECK(is_subspace(desargues, line_plus_far_point()));
  CHECK_FALSE(is_subspace(desargues, {"{1,2}", "{1,3}"}));
  CHECK_THROWS_AS(is_subspace(desargues, {"bogus"}), Error);
}

TEST_CASE("hyperplane predicate") {
  auto desargues = gras_space(5, 2);
  CHECK_FALSE(is_hyperplane(desargues, desargues.point_ids()));
  CHECK(is_hyperplane(desargues, grassmannian_hyperplane(5, 2, 5).points));
  CHECK_FALSE(is_hyperplane(desargues, {}));
  CHECK(is_hyperplane(desargues, line_plus_far_point()));

  auto line_free = IncidenceStructure::build({"a", "b"}, {});
  CHECK_FALSE(is_hyperplane(line_free, {}));
  CHECK(is_hyperplane(line_free, {}, /*allow_empty_in_linefree=*/true));
  CHECK(is_hyperplane(line_free, {"a"}));
}

TEST_CASE("deep lines") {
  auto k4 = complete_graph(4);
  auto deep = deep_lines(k4, {"1", "2", "3"});
  std::sort(deep.begin(), deep.end());
  CHECK(deep == std::vector<std::string>{"{1,2}", "{1,3}", "{2,3}"});

  auto desargues = gras_space(5, 2);
  auto h = grassmannian_hyperplane(5, 2, 5);
  auto grass_deep = deep_lines(desargues, h.points);
  std::vector<std::string> expected;
  for (const auto& s : enumerate_subsets(4, 3)) expected.push_back(s.to_string());
  std::sort(grass_deep.begin(), grass_deep.end());
  std::sort(expected.begin(), expected.end());
  CHECK(grass_deep == expected);

  CHECK(deep_lines(veblen(), {"{1,2}"}).empty());
  CHECK_THROWS_AS(deep_lines(desargues, {"{1,2}", "{1,3}"}), Error);
}

TEST_CASE("restriction") {
  auto desargues = gras_space(5, 2);
  auto h = grassmannian_hyperplane(5, 2, 5);
  CHECK(restriction(desargues, h.points) == gras_space(4, 2));

  auto v33 = veronesian(3, 3);
  auto hv = veronesian_hyperplane(3, 3, "a");
  CHECK(are_isomorphic(restriction(v33, hv.points), veronesian(3, 2)));

  auto vb = veblen();
  CHECK(restriction(vb, vb.point_ids()) == vb);
}

TEST_CASE("reduct") {
  auto desargues = gras_space(5, 2);
  auto h = grassmannian_hyperplane(5, 2, 5);
  auto red = reduct(desargues, h.points);
  CHECK(are_isomorphic(red, gras_space(4, 1)));
  for (const auto& l : red.line_ids()) CHECK(red.line_size(l) == 2);

  auto v33 = veronesian(3, 3);
  auto hv = veronesian_hyperplane(3, 3, "a");
  CHECK(are_isomorphic(reduct(v33, hv.points), veronesian(2, 3)));

  CHECK_THROWS_AS(reduct(desargues, {"{1,2}"}), Error);
}

TEST_CASE("extract infinity matches the closed forms") {
  auto desargues = gras_space(5, 2);
  auto h = grassmannian_hyperplane(5, 2, 5);
  auto inf = extract_infinity(desargues, h.points);
  std::sort(inf.begin(), inf.end());
  CHECK(inf == h.infinity.entries);

  auto v33 = veronesian(3, 3);
  auto hv = veronesian_hyperplane(3, 3, "a");
  auto vinf = extract_infinity(v33, hv.points);
  std::sort(vinf.begin(), vinf.end());
  CHECK(vinf == hv.infinity.entries);

  // Binomial host with a configuration restriction: the map is one-to-one.
  CHECK(hv.infinity.bijective);
}

TEST_CASE("hyperplane enumeration matches the naive filter") {
  auto check_against_oracle = [](const IncidenceStructure& k) {
    auto views = enumerate_hyperplanes(k);
    CHECK(as_index_sets(k, views) == oracle_hyperplanes(k));
  };
  check_against_oracle(complete_graph(4));
  check_against_oracle(veblen());
  check_against_oracle(fano());
  check_against_oracle(grassmannian_g(2, 2));
  check_against_oracle(gras_space(5, 2));
  check_against_oracle(veronesian(3, 3));
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    check_against_oracle(random_pls(seed, 5 + static_cast<int>(seed % 4), 20));
}

TEST_CASE("hyperplane census facts") {
  auto k4 = complete_graph(4);
  auto k4_views = enumerate_hyperplanes(k4);
  CHECK(k4_views.size() == 4);
  for (const auto& v : k4_views) CHECK(v.points.size() == 3);

  auto f = fano();
  auto fano_views = enumerate_hyperplanes(f);
  CHECK(fano_views.size() == 7);
  for (const auto& v : fano_views) {
    REQUIRE(v.deep_lines.size() == 1);
    auto pts = f.points_on(v.deep_lines[0]);
    std::sort(pts.begin(), pts.end());
    auto hp = v.points;
    std::sort(hp.begin(), hp.end());
    CHECK(pts == hp);
  }
}

TEST_CASE("line plus far point is a non-configuration hyperplane") {
  auto desargues = gras_space(5, 2);
  auto h = line_plus_far_point();
  REQUIRE(is_hyperplane(desargues, h));
  auto rest = restriction(desargues, h);
  std::multiset<std::size_t> ranks;
  for (const auto& p : rest.point_ids()) ranks.insert(rest.point_rank(p));
  CHECK(ranks == std::multiset<std::size_t>{0, 1, 1, 1});
  CHECK_FALSE(hyperplane_is_configuration(desargues, h).has_value());
}

TEST_CASE("hyperplane_is_configuration") {
  auto desargues = gras_space(5, 2);
  auto h = grassmannian_hyperplane(5, 2, 5);
  CHECK(hyperplane_is_configuration(desargues, h.points) ==
        std::optional{ConfigurationType{6, 2, 4, 3}});

  // A single Veblen line is a hyperplane whose restriction is a (3_1 1_3).
  auto vb = veblen();
  std::vector<std::string> line_points = vb.points_on("{1,2,3}");
  REQUIRE(is_hyperplane(vb, line_points));
  CHECK(hyperplane_is_configuration(vb, line_points) ==
        std::optional{ConfigurationType{3, 1, 1, 3}});
}

TEST_CASE("incidence partition and glue round trip over all hyperplanes") {
  auto corpus = {complete_graph(4), veblen(), fano(), gras_space(5, 2)};
  for (const auto& k : corpus) {
    for (const auto& view : enumerate_hyperplanes(k)) {
      auto rest = restriction(k, view.points);
      auto red = reduct(k, view.points);
      CHECK(k.incidence_count() ==
            rest.incidence_count() + red.incidence_count() + view.infinity.size());
      // Non-deep lines meet the hyperplane in exactly one point.
      CHECK(view.infinity.size() + view.deep_lines.size() == k.line_count());

      std::map<std::string, std::string> raw(view.infinity.begin(), view.infinity.end());
      auto inf = validate_gluing(red, rest, raw);
      auto reglued = glue(red, rest, inf);
      std::unordered_map<std::string, std::string> pw, lw;
      for (const auto& p : red.point_ids()) pw.emplace(kLeftPrefix + p, p);
      for (const auto& p : rest.point_ids()) pw.emplace(kRightPrefix + p, p);
      for (const auto& l : red.line_ids()) lw.emplace(kLeftPrefix + l, l);
      for (const auto& l : rest.line_ids()) lw.emplace(kRightPrefix + l, l);
      CHECK(verify_witness(reglued, k, pw, lw));
    }
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_hyperplanes(complete_graph(25)), Error);
  CHECK_THROWS_AS(enumerate_hyperplanes(complete_graph(5), 4), Error);
  CHECK(enumerate_hyperplanes(complete_graph(5), 5).size() == 5);
}
