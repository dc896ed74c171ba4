#include <doctest.h>

#include <algorithm>

#include "binconf/families.hpp"
#include "binconf/hyperplane.hpp"
#include "binconf/iso.hpp"
#include "support.hpp"

using namespace binconf;

TEST_CASE("grassmannian G parameters") {
  auto g33 = grassmannian_g(3, 3);
  CHECK(g33.configuration_type() == std::optional{ConfigurationType{10, 3, 10, 3}});

  auto g22 = grassmannian_g(2, 2);
  CHECK(g22.configuration_type() == std::optional{ConfigurationType{3, 2, 3, 2}});

  auto g14 = grassmannian_g(1, 4);
  CHECK(g14.configuration_type() == std::optional{ConfigurationType{4, 1, 1, 4}});
}

TEST_CASE("gras_space parameters and degenerate cases") {
  CHECK(gras_space(5, 2).configuration_type() ==
        std::optional{ConfigurationType{10, 3, 10, 3}});
  CHECK(gras_space(4, 2).configuration_type() ==
        std::optional{ConfigurationType{6, 2, 4, 3}});
  for (int n = 4; n <= 6; ++n)
    CHECK(are_isomorphic(gras_space(n, 1), complete_graph(n)));
  CHECK_THROWS_AS(gras_space(4, 4), Error);
}

TEST_CASE("dcd parameters and correspondences") {
  CHECK(are_isomorphic(dcd(5, 3), grassmannian_g(3, 3)));
  CHECK(dcd(4, 2).configuration_type() == std::optional{ConfigurationType{6, 2, 4, 3}});

  auto d41 = dcd(4, 1);
  CHECK(d41.point_count() == 4);
  CHECK(d41.line_count() == 1);
  CHECK(d41.line_size("{}") == 4);

  // DCD(n,k) is literally the dual of GrasSpace(n,k-1).
  for (int n = 4; n <= 6; ++n)
    for (int k = 2; k <= n - 1; ++k) CHECK(dcd(n, k) == gras_space(n, k - 1).dual());
  for (int k = 2; k <= 4; ++k)
    for (int m = 2; m <= 4; ++m)
      CHECK(are_isomorphic(grassmannian_g(k, m), dcd(m + k - 1, k), 128));
}

TEST_CASE("veronesian parameters") {
  CHECK(veronesian(3, 3).configuration_type() ==
        std::optional{ConfigurationType{10, 3, 10, 3}});
  for (int k = 2; k <= 4; ++k)
    CHECK(are_isomorphic(veronesian(2, k), complete_graph(k + 1)));
  CHECK(veronesian(4, 2).configuration_type() ==
        std::optional{ConfigurationType{10, 2, 5, 4}});
}

TEST_CASE("dual veronesian parameters") {
  CHECK(are_isomorphic(dual_veronesian(3, 3), veronesian(3, 3)));
  CHECK(dual_veronesian(4, 2).configuration_type() ==
        std::optional{ConfigurationType{5, 4, 10, 2}});
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(4).configuration_type() ==
        std::optional{ConfigurationType{4, 3, 6, 2}});
  CHECK(dual_complete_graph(4).configuration_type() ==
        std::optional{ConfigurationType{6, 2, 4, 3}});
  CHECK(are_isomorphic(dual_complete_graph(4), veblen()));
  CHECK(complete_graph(2).configuration_type() ==
        std::optional{ConfigurationType{2, 1, 1, 2}});
}

TEST_CASE("signature table across the families") {
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      auto km = BinomialSignature{static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m)};
      auto mk = BinomialSignature{static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k)};
      CHECK(binomial_signature(grassmannian_g(k, m)) == std::optional{km});
      CHECK(binomial_signature(veronesian(m, k)) == std::optional{km});
      CHECK(binomial_signature(dual_veronesian(m, k)) == std::optional{mk});
      CHECK(grassmannian_g(k, m).is_partial_linear_space());
      CHECK(veronesian(m, k).is_partial_linear_space());
    }
}

TEST_CASE("generators are deterministic") {
  CHECK(gras_space(5, 2) == gras_space(5, 2));
  CHECK(veronesian(3, 3) == veronesian(3, 3));
  CHECK(grassmannian_g(3, 3) == grassmannian_g(3, 3));
}

TEST_CASE("dualizing a combinatorial Grassmannian shifts the index by complement") {
  // dual(GrasSpace(n,k)) is GrasSpace(n, n-k-1): complementation swaps the
  // two subset layers.
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(are_isomorphic(gras_space(n, k).dual(), gras_space(n, n - k - 1)));
    }
}

TEST_CASE("veronesians are not grassmannians off the boundary") {
  CHECK_FALSE(are_isomorphic(veronesian(3, 3), gras_space(5, 2)));
  // V(3,4) and GrasSpace(6,2) share the signature B(4,3) but not the class.
  CHECK(binomial_signature(veronesian(3, 4)) == binomial_signature(gras_space(6, 2)));
  CHECK_FALSE(are_isomorphic(veronesian(3, 4), gras_space(6, 2)));
  // On the k=2 boundary the classes coincide.
  CHECK(are_isomorphic(veronesian(3, 2), gras_space(4, 2)));
}

TEST_CASE("grassmannian canonical hyperplane") {
  auto h = grassmannian_hyperplane(5, 2, 5);
  CHECK(h.points.size() == 6);
  auto host = gras_space(5, 2);
  CHECK(is_hyperplane(host, h.points));
  CHECK(h.infinity.bijective);

  // The closed-form identifier map agrees with the extracted infinity map.
  auto extracted = extract_infinity(host, h.points);
  std::sort(extracted.begin(), extracted.end());
  CHECK(extracted == h.infinity.entries);

  CHECK(restriction(host, h.points) == gras_space(4, 2));
  CHECK(are_isomorphic(reduct(host, h.points), gras_space(4, 1)));
  CHECK(are_isomorphic(reduct(host, h.points), complete_graph(4)));
}

TEST_CASE("veronesian canonical hyperplane") {
  auto h = veronesian_hyperplane(3, 3, "a");
  CHECK(h.points.size() == 6);
  auto host = veronesian(3, 3);
  CHECK(is_hyperplane(host, h.points));
  CHECK(h.infinity.bijective);

  auto extracted = extract_infinity(host, h.points);
  std::sort(extracted.begin(), extracted.end());
  CHECK(extracted == h.infinity.entries);

  CHECK(are_isomorphic(restriction(host, h.points), veronesian(3, 2)));
  CHECK(are_isomorphic(reduct(host, h.points), veronesian(2, 3)));
}

TEST_CASE("dual veronesian canonical hyperplane") {
  auto h = dual_veronesian_hyperplane(3, 3, "a");
  auto host = dual_veronesian(3, 3);
  CHECK(is_hyperplane(host, h.points));
  CHECK(h.infinity.bijective);
  auto extracted = extract_infinity(host, h.points);
  std::sort(extracted.begin(), extracted.end());
  CHECK(extracted == h.infinity.entries);

  // Parts carry signatures (3,2) and (2,3).
  CHECK(binomial_signature(reduct(host, h.points)) ==
        std::optional{BinomialSignature{3, 2}});
  CHECK(binomial_signature(restriction(host, h.points)) ==
        std::optional{BinomialSignature{2, 3}});

  // Dividing out the full atom power: a^2bc maps to bc.
  auto h34 = dual_veronesian_hyperplane(3, 4, "a");
  bool found = false;
  for (const auto& [line, point] : h34.infinity.entries)
    if (line == "a^2bc") {
      CHECK(point == "bc");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("family spec grammar") {
  CHECK(FamilySpec::parse("GS:5,2").to_string() == "GS:5,2");
  CHECK(FamilySpec::parse("V*:4,2").to_string() == "V*:4,2");
  CHECK(FamilySpec::parse("K:5").to_string() == "K:5");
  CHECK(FamilySpec::parse("veblen").to_string() == "veblen");
  CHECK(make_family(FamilySpec::parse("veblen")) == veblen());
  CHECK(make_family(FamilySpec::parse("G:3,3")) == grassmannian_g(3, 3));
  CHECK_THROWS_AS(FamilySpec::parse("Q:1,2"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("GS:5"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("GS:a,b"), Error);
}

TEST_CASE("parameter range errors") {
  CHECK_THROWS_AS(grassmannian_g(0, 2), Error);
  CHECK_THROWS_AS(dcd(3, 4), Error);
  CHECK_THROWS_AS(veronesian(0, 1), Error);
  CHECK_THROWS_AS(complete_graph(1), Error);
  CHECK_THROWS_AS(grassmannian_hyperplane(5, 2, 6), Error);
  CHECK_THROWS_AS(veronesian_hyperplane(3, 3, "z"), Error);
}
