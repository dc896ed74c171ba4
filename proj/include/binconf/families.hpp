#pragma once

#include <string>
#include <vector>

#include "binconf/glue.hpp"
#include "binconf/incidence.hpp"

namespace binconf {

/// Named generator with its integer parameters. CLI grammar:
/// G:k,m  GS:n,k  DCD:n,k  V:m,k  V*:m,k  K:n  K*:n  veblen
struct FamilySpec {
  enum class Family { GrassmannianG, GrasSpace, Dcd, Veronesian, DualVeronesian,
                      CompleteGraph, DualCompleteGraph, Veblen };
  Family family = Family::Veblen;
  int p1 = 0, p2 = 0;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

IncidenceStructure make_family(const FamilySpec& spec);

/// G(k,m): points are the k-subsets, lines the m-subsets of an (m+k-1)-set,
/// a point lies on a line when they meet in exactly one element. When k == m
/// line identifiers carry a trailing '*' to keep the namespaces disjoint.
IncidenceStructure grassmannian_g(int k, int m);

/// GrasSpace(n,k): k-subsets vs (k+1)-subsets of {1..n} under inclusion.
IncidenceStructure gras_space(int n, int k);

/// DCD(n,k): k-subsets vs (k-1)-subsets of {1..n} under reverse inclusion.
IncidenceStructure dcd(int n, int k);

/// V(m,k): k-multisets over m atoms vs shorter multisets; f lies on e when
/// f = e x^(k-|e|) for some atom x.
IncidenceStructure veronesian(int m, int k);

IncidenceStructure dual_veronesian(int m, int k);

IncidenceStructure complete_graph(int n);
IncidenceStructure dual_complete_graph(int n);
IncidenceStructure veblen();

/// Canonical hyperplane of a family structure plus the induced infinity map
/// (non-deep host lines to their unique hyperplane points).
struct CanonicalHyperplane {
  std::vector<std::string> points;
  GluingMap infinity;
};

/// Hyperplane {a : atom not in a} of GrasSpace(n,k); infinity is A -> A\{atom}.
CanonicalHyperplane grassmannian_hyperplane(int n, int k, int atom);

/// Hyperplane {f : atom in supp f} of V(m,k); infinity is e -> e atom^(k-|e|).
CanonicalHyperplane veronesian_hyperplane(int m, int k, const std::string& atom);

/// Hyperplane of dual V(m,k) consisting of the atom-free short multisets;
/// infinity is f -> f / atom^deg(atom,f).
CanonicalHyperplane dual_veronesian_hyperplane(int m, int k, const std::string& atom);

}  // namespace binconf
