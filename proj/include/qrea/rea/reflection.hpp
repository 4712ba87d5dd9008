#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrea/qmatrix/rewrite.hpp"

namespace qrea {

/// Which tensor leg carries Z in R12 Z R12 Z = Z R12 Z R12.
enum class ReflectionLeg { Z23, Z13 };

const char* leg_name(ReflectionLeg leg);
ReflectionLeg parse_leg(const std::string& s);

using PolyProduct = std::function<NCPoly(const NCPoly&, const NCPoly&)>;

/// Entries of R12 Z R12 Z - Z R12 Z R12 (row-major over (a,b),(c,d)) with the given
/// product on entries. Z_ij is the generator monomial with index (i-1) N + (j-1).
std::vector<NCPoly> reflection_defect(int N, ReflectionLeg leg, const PolyProduct& mul);

/// Defining relations of the reflection equation algebra as free polynomials in the Z_ij.
std::vector<NCPoly> rea_relations(int N, ReflectionLeg leg);

struct ReflectionReport {
  ReflectionLeg leg = ReflectionLeg::Z23;
  int N = 0;
  std::size_t nonzero_entries = 0;
  std::string first_nonzero;
  bool holds() const { return nonzero_entries == 0; }
};

/// Evaluates the reflection equation for X in the star model.
ReflectionReport reflection_check_star(int N, ReflectionLeg leg);

struct ReaRewrite {
  RewriteSystem rs;
  ConfluenceReport confluence;
  DimensionReport dimension;
  std::size_t star_failures = 0;
  bool star_consistent() const { return star_failures == 0; }
};

/// Orients the reflection equation relations, checks degree-3 confluence and the
/// degree-3 dimension, and checks that every rule holds in the star model.
/// Throws FlatnessCheckFailed if the system is not flat.
ReaRewrite derive_rea_rewrite(int N, ReflectionLeg leg);

/// Cached rewriting system of the reflection equation algebra (leg Z23).
const ReaRewrite& rea_rewrite(int N);

}  // namespace qrea
