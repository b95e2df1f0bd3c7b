// F_p-point counts of the zero-locus models and their images.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano4/modp.hpp"
#include "fano4/models.hpp"
#include "fano4/multilinear.hpp"

namespace fano {

using modp::u32;
using modp::u64;

// theta over F_p as raw residues, c[i][a][b].
struct RawTheta {
  u32 p = 0;
  u32 c[4][5][5] = {};
};
RawTheta raw_theta(const ThetaTensor& t);

// Reduction of a rational or cyclotomic tensor to F_p; cyclotomic entries
// need p = 1 mod 12 and use the smallest primitive 12th root.
ThetaTensor theta_mod_p(const ThetaTensor& t, u64 p);

// Both routes (Gaussian binomial, echelon cells) must agree; throws if not.
u64 count_grassmannian(int k, int n, u64 p);

// Integer polynomial in L = p.
struct CountPolynomial {
  std::vector<long long> c;  // c[0] + c[1] L + ...
  long long eval(long long p) const;
  std::string str() const;
};
std::optional<CountPolynomial> expected_polynomial(ModelId m);

// Sweeps. Counters are exact; results do not depend on the thread count.
struct G35Sweep {
  u64 X4 = 0, X6 = 0, C4 = 0;
  std::map<int, u64> rank_histogram;
};
G35Sweep sweep_g35(const RawTheta& t, int threads);
struct G25Sweep {
  u64 X8 = 0, X8p = 0, X2 = 0;
};
G25Sweep sweep_g25(const RawTheta& t, int threads);
struct P4Sweep {
  u64 X0 = 0, X3 = 0, C3 = 0, flags = 0;
};
P4Sweep sweep_p4(const RawTheta& t, int threads);
u64 count_x1(const RawTheta& t);
// sum over w of the number of 2-planes through w inside L_w
u64 count_x2_fast(const RawTheta& t, int threads);
// all pairs (U, V) in G(2,4) x G(3,5); quadratic cost
u64 x4_double_sweep(const RawTheta& t, int threads);
// zeros of a form over F_p in P^{n-1}(F_p)
u64 count_projective_zeros(const MultiPoly& f, int threads);

struct CountResult {
  ModelId model;
  u64 p = 0;
  u64 measured = 0;
  std::optional<CountPolynomial> expected;
  enum class Status { Match, Mismatch, NoExpectation } status = Status::NoExpectation;
};
std::string to_string(CountResult::Status s);
// Every model at once; heavy = include the G(3,5) and G(2,5) sweeps.
struct PrimeCounts {
  u64 p = 0;
  std::map<ModelId, u64> models;
  u64 C3 = 0, C4 = 0, flags = 0;
  u64 X2_fast = 0;
  bool heavy = false;
};
PrimeCounts count_all(const ThetaTensor& t_mod_p, int threads, bool heavy = true);
CountResult count_model(ModelId m, const ThetaTensor& t_mod_p, int threads);
CountResult make_result(ModelId m, u64 p, u64 measured);

// True iff the reduction has five rank-two points, ten distinct e_pq and
// |X2| = 1 + 5p + p^2.
bool good_reduction_probe(const ThetaTensor& t, u64 p, std::string* why = nullptr);

// Lagrange interpolation through (p_i, value_i); exact rational coefficients.
std::vector<Rational> fit_polynomial(const std::vector<u64>& primes, const std::vector<u64>& values);

struct GrothendieckRow {
  u64 p = 0;
  long long lhs = 0, rhs = 0;  // [X6] + 5 L^3, [G(3,5)] + L [X4]
  Rational c;                  // coefficient making the relation hold
};
struct GrothendieckAudit {
  std::vector<GrothendieckRow> rows;
  bool constant_c = false;
  Rational c;
  // lhs - rhs = (5 - c) L^3 when c is constant
  Rational discrepancy_l3;
};
GrothendieckAudit audit_grothendieck(const std::vector<PrimeCounts>& counts);

}  // namespace fano
