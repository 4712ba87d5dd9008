#pragma once

#include "qrea/qmatrix/identities.hpp"

namespace qrea {

/// Identity families of the reflection equation algebra, evaluated in the star model:
///   gencomm               sets I, J, I', J'
///   laplexp1, laplexp2    sets I, J, K
///   muirbr, muirbr2       sets I, J, F, G, K, K'
///   revbraid              sets I, J, I', J' (ordinary product against star products)
const std::vector<std::string>& rea_identity_families();

/// coeff * Z_{A,B} Z_{C,D}
struct MinorProductTerm {
  IndexSet A, B, C, D;
  RatFunc coeff;
};

struct GencommTerms {
  std::vector<MinorProductTerm> lhs, rhs;
};

/// The two sides of the general commutation relation for Z_{I,J} and Z_{I',J'}
/// as lists of minor products, before any evaluation.
GencommTerms gencomm_terms(int N, IndexSet I, IndexSet J, IndexSet Ip, IndexSet Jp);

IdentitySides rea_identity_sides(const IdentityInstance& inst);
Certificate verify_rea_identity(const IdentityInstance& inst);

/// Every instance at N with minor sizes up to max_k; muirbr and muirbr2 also cap r at max_r.
std::vector<IdentityInstance> rea_identity_sweep(const std::string& family, int N, int max_k, int max_r = 2);

}  // namespace qrea
