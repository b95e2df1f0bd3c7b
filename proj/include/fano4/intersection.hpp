// Intersection numbers on the Grassmannian models: Porteous classes, the
// H-part of the intersection table of X4 = Z(U^v (x) L2 V^v) in
// G(2,4) x G(3,5), and a few integrals on G(2,5).
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fano4/schubert.hpp"

namespace fano {

// Porteous class of {rank <= r} for a map source -> target on G(k, n).
ChowElement porteous_class(int k, int n, const KClass& source, const KClass& target, int r);

struct PorteousResult {
  ChowElement cls;             // labels on G(3,5)
  ChowElement cls_transposed;  // same class, labels read on G(2,5)
  Rational degree;             // integral against sigma_1^4
  int rank1_codimension = 0;
};
// Rank <= 2 locus of L2 V -> V4^v (x) O on G(3,5).
PorteousResult porteous_c4();

struct X4Numbers {
  std::array<Rational, 5> h;  // H1^4, H1^3 H2, ..., H2^4
  Rational k4;                // (H1 + H2)^4
  Rational k4_binomial;       // sum binom(4,k) H1^k H2^(4-k)
  Rational chi_top;
  std::string x8p_minus_k;    // first Chern class of X8' in (h1, h2)
  bool x8p_index_three = false;
};
X4Numbers x4_h_numbers();

// c(Q) on G(2,5) as a Chow element.
ChowElement chern_quotient_g25();
// s_2(Q) sigma_1^4 on G(2,5).
Rational weak_fano_integral();
// s_2(W ^ V5) sigma_1^4 on G(2,5), s(W ^ V5) = c(Q)^5 c(S^2 U).
Rational octic_integral();

// c(a + b) = c(a) c(b) and rank additivity on random virtual bundles over
// G(2,4) x G(3,5).
bool whitney_holds(int trials, std::uint64_t seed, std::string* why = nullptr);
// Poincare duality pairing on G(k, n) is a permutation matrix.
bool pairing_unimodular(int k, int n);
// Littlewood-Richardson coefficients of all pairs are non-negative integers.
bool structure_constants_nonnegative(int k, int n);

}  // namespace fano
