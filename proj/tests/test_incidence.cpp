#include <doctest.h>

#include "binconf/families.hpp"
#include "binconf/incidence.hpp"
#include "support.hpp"

using namespace binconf;
using binconf_test::fano;
using binconf_test::oracle_binomial;
using binconf_test::random_pls;

namespace {

IncidenceStructure triangle3() {
  return IncidenceStructure::build({"a", "b", "c"},
                                   {{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ca", {"c", "a"}}});
}

}  // namespace

TEST_CASE("build constructs the triangle") {
  auto k = triangle3();
  CHECK(k.point_count() == 3);
  CHECK(k.line_count() == 3);
  CHECK(k.incidence_count() == 6);
  CHECK(k.incident("a", "ab"));
  CHECK_FALSE(k.incident("c", "ab"));
}

TEST_CASE("build accepts the empty structure") {
  auto k = IncidenceStructure::build({}, {});
  CHECK(k.point_count() == 0);
  CHECK(k.line_count() == 0);
  CHECK(k.is_partial_linear_space());
}

TEST_CASE("build rejects malformed input") {
  CHECK_THROWS_AS(IncidenceStructure::build({"a"}, {{"l", {"z"}}}), Error);
  CHECK_THROWS_AS(IncidenceStructure::build({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(IncidenceStructure::build({"a"}, {{"l", {"a"}}, {"l", {"a"}}}), Error);
  CHECK_THROWS_AS(IncidenceStructure::build({"a"}, {{"a", {"a"}}}), Error);
  CHECK_THROWS_AS(IncidenceStructure::build({"a", "b"}, {{"l", {"a", "a"}}}), Error);
}

TEST_CASE("point rank and line size") {
  auto k4 = complete_graph(4);
  for (const auto& p : k4.point_ids()) CHECK(k4.point_rank(p) == 3);
  for (const auto& l : k4.line_ids()) CHECK(k4.line_size(l) == 2);

  auto lonely = IncidenceStructure::build({"p"}, {});
  CHECK(lonely.point_rank("p") == 0);

  auto empty_line = IncidenceStructure::build({"p"}, {{"l", {}}});
  CHECK(empty_line.line_size("l") == 0);

  auto desargues = gras_space(5, 2);
  for (const auto& p : desargues.point_ids()) CHECK(desargues.point_rank(p) == 3);
  CHECK_THROWS_AS(desargues.point_rank("nope"), Error);
}

TEST_CASE("partial linear space predicate") {
  CHECK(complete_graph(5).is_partial_linear_space());
  CHECK(veronesian(3, 3).is_partial_linear_space());
  auto bad = IncidenceStructure::build(
      {"a", "b", "c", "d"}, {{"l1", {"a", "b", "c"}}, {"l2", {"a", "b", "d"}}});
  auto violation = bad.pls_violation();
  REQUIRE(violation.has_value());
  CHECK(violation->point_a == "a");
  CHECK(violation->point_b == "b");
}

TEST_CASE("configuration type") {
  auto t = complete_graph(4).configuration_type();
  REQUIRE(t.has_value());
  CHECK(*t == ConfigurationType{4, 3, 6, 2});

  auto veblen_t = veblen().configuration_type();
  REQUIRE(veblen_t.has_value());
  CHECK(*veblen_t == ConfigurationType{6, 2, 4, 3});

  auto uneven = IncidenceStructure::build(
      {"a", "b", "c", "d", "e", "f", "g"},
      {{"l1", {"a", "b", "c"}}, {"l2", {"d", "e", "f", "g"}}});
  CHECK_FALSE(uneven.configuration_type().has_value());
}

TEST_CASE("binomial signatures") {
  auto sig = binomial_signature(ConfigurationType{10, 3, 10, 3});
  REQUIRE(sig.has_value());
  CHECK(*sig == BinomialSignature{3, 3});

  auto k4_sig = binomial_signature(ConfigurationType{4, 3, 6, 2});
  REQUIRE(k4_sig.has_value());
  CHECK(*k4_sig == BinomialSignature{3, 2});

  // Fano is (7_3 7_3) but C(5,3) = 10 != 7, checked against the factorial oracle.
  CHECK(oracle_binomial(5, 3) == 10);
  CHECK_FALSE(binomial_signature(ConfigurationType{7, 3, 7, 3}).has_value());
  CHECK_FALSE(binomial_signature(ConfigurationType{2, 0, 0, 0}).has_value());
}

TEST_CASE("binomial coefficients agree with the factorial oracle") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle_binomial(n, k));
}

TEST_CASE("dual is an involution and swaps the type") {
  auto k4 = complete_graph(4);
  CHECK(k4.dual().dual() == k4);
  auto dual_t = k4.dual().configuration_type();
  REQUIRE(dual_t.has_value());
  CHECK(*dual_t == ConfigurationType{6, 2, 4, 3});

  auto fano_dual = fano().dual();
  CHECK(fano_dual.dual() == fano());

  auto sig = binomial_signature(veronesian(4, 2));
  auto dual_sig = binomial_signature(dual_veronesian(4, 2));
  REQUIRE(sig.has_value());
  REQUIRE(dual_sig.has_value());
  CHECK(sig->k == dual_sig->m);
  CHECK(sig->m == dual_sig->k);
}

TEST_CASE("incidence fibers are deterministic") {
  auto k4 = complete_graph(4);
  CHECK(k4.lines_through("1") ==
        std::vector<std::string>{"{1,2}", "{1,3}", "{1,4}"});
  CHECK(k4.points_on("{1,2}") == std::vector<std::string>{"1", "2"});
  auto empty_line = IncidenceStructure::build({"p"}, {{"l", {}}});
  CHECK(empty_line.points_on("l").empty());
  CHECK_THROWS_AS(k4.points_on("{9,9}"), Error);
}

TEST_CASE("double counting holds on random structures") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto k = random_pls(seed, 4 + static_cast<int>(seed % 7), 25);
    std::size_t rank_sum = 0, size_sum = 0;
    for (const auto& p : k.point_ids()) rank_sum += k.point_rank(p);
    for (const auto& l : k.line_ids()) size_sum += k.line_size(l);
    CHECK(rank_sum == k.incidence_count());
    CHECK(size_sum == k.incidence_count());
    CHECK(k.dual().dual() == k);
    auto t = k.configuration_type();
    if (t) CHECK(t->nu * t->rho == t->beta * t->kappa);
  }
}

TEST_CASE("configuration fundamental equation on families") {
  for (int k = 2; k <= 4; ++k)
    for (int m = 2; m <= 4; ++m) {
      auto t = grassmannian_g(k, m).configuration_type();
      REQUIRE(t.has_value());
      CHECK(t->nu * t->rho == t->beta * t->kappa);
    }
}
