#pragma once

#include "qrea/certificate.hpp"

namespace qrea {

/// The star commutator X_ij * X_kl - X_kl * X_ij expanded at q = 1: its
/// constant term must vanish and its first-order term, read as a commutative
/// polynomial, must equal i{Z_ij, Z_kl} from the classical bivector.
Certificate semiclassical_bracket_check(int N, int i, int j, int k, int l);

/// All ordered generator pairs at N.
std::vector<Certificate> semiclassical_sweep(int N);

}  // namespace qrea
