// The two normal forms of theta and the objects derived from them: rank-two
// locus, Segre cubic, Igusa quartic, lifts of the S5 symmetry, the p_ijk
// configuration, apolar quadrics and the C4 quadric battery.
#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fano4/multilinear.hpp"
#include "fano4/poly.hpp"

namespace fano {

struct DegenerateSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using PairIndex = std::pair<int, int>;  // 1-indexed, first < second

// Small random scalars (integers in [-lim, lim] for Q and Q(zeta12), uniform
// residues for F_p).
Scalar random_scalar(Field f, std::mt19937_64& rng, int lim = 9);
Vec random_vec(int n, Field f, std::mt19937_64& rng, int lim = 9);
// Two independent random vectors of V4.
std::vector<Vec> random_plane(Field f, std::mt19937_64& rng);

struct RankTwoLocus {
  Field field = Field::rationals();
  std::vector<Vec> points;                // p_k in V4
  std::vector<Matrix> omega;              // theta(p_k), scaled
  std::vector<std::vector<Vec>> planes;   // P_k = ker omega_k in V5
  std::map<PairIndex, Vec> e;             // e_pq spanning P_p cap P_q
};

// Scale a nonzero alternating form so that its first nonzero entry above
// the diagonal is 1.
Matrix normalize_form(const Matrix& w);
bool forms_proportional(const Matrix& a, const Matrix& b);

// Exhaustive sweep of P^3(F_p) for points where theta has rank <= 2.
std::vector<Vec> rank2_points_mod_p(const ThetaTensor& t);
// Builds and validates the locus from candidate points (required over Q and
// Q(zeta12); found by sweeping over F_p when empty).
RankTwoLocus rank2_locus(const ThetaTensor& t, std::vector<Vec> candidates = {});
// Rescales the omega_k so that they sum to zero and returns the matching
// u_k with theta = sum u_k (x) omega_k.
FiveTerm five_term(const ThetaTensor& t, const RankTwoLocus& loc);

// ---- Ozeki representative, over Q(zeta12)

ThetaTensor ozeki_theta();
struct OzekiTables {
  std::vector<Vec> p;                 // printed p_k
  std::vector<Matrix> omega;          // printed omega_k
  std::map<PairIndex, Vec> e;         // printed e_pq
  Matrix sign_lift;                   // f_i -> eps_i f_i
  Matrix cycle_lift;                  // column c = image of f_{c+1}
};
OzekiTables ozeki_tables();

// Permutation of {1..5} induced on the omega lines by a 5x5 matrix g under
// one of four conventions; entries are 0 when the image is not an omega.
enum class FormAction { PushForward, PullBack, InversePushForward, InversePullBack };
std::string to_string(FormAction a);
Matrix act_on_form(const Matrix& g, const Matrix& w, FormAction a);
std::vector<int> induced_permutation(const Matrix& g, const std::vector<Matrix>& omega, FormAction a);
std::string cycle_string(const std::vector<int>& perm);
// Solves g.theta_i = sum_j A_ij theta_j; returns false if no such A.
bool theta_transform(const ThetaTensor& t, const Matrix& g, FormAction a, Matrix* A);

struct PijkReport {
  std::map<std::tuple<int, int, int>, Vec> points;   // p_ijk, j < k
  bool all_single_points = true;
  bool coincidence = true;                 // p_ijk = p_ilm
  std::vector<Vec> distinct;
  std::vector<int> distinct_label;         // the i of p_ijk
  std::vector<PairIndex> hyperplanes;      // pi_ij
  std::vector<std::vector<bool>> incidence;        // point in pi_ij
  std::vector<std::vector<bool>> label_incidence;  // label of point in {i, j}
  bool hyperplanes_contain_iab_jcd = true;
};
PijkReport pijk_configuration(const std::vector<Matrix>& omega);

struct CremonaPlanes {
  std::map<PairIndex, std::vector<Vec>> P_pq;  // spanned by e_ij, e_jk, e_ik
  std::map<int, std::vector<Vec>> P_p;         // spanned by e_ip
  std::map<int, int> P_p_rank;
  std::map<PairIndex, int> P_p_meet_dim;
};
CremonaPlanes cremona_planes(const std::map<PairIndex, Vec>& e);

// ---- S5-symmetric form, over Q

// Quadric sum a_ab x_a x_b (a < b) as a vector on the ten pair monomials.
Vec pair_quadric(int i, int j, int k, int l);  // (x_i - x_j)(x_k - x_l)
int pair_index(int a, int b);                   // 0-based a != b
Matrix apolar_system();                         // 5 x 10

struct S5Form {
  ThetaTensor theta;                     // basis e_i - e_5 of the sum-zero V4
  Matrix basis;                          // 10 x 5, columns span U5
  Matrix metric;                         // invariant inner product on U5 coords
  std::vector<Matrix> Q;                 // Q_1..Q_5 in U5 coordinates
  std::map<PairIndex, Matrix> Qij;      // ordered pairs, Q_{j,i} = -Q_{i,j}
  Vec coords(const Vec& quadric) const;  // U5 coordinates of an apolar quadric
  // Action of a permutation of {0..4} on U5 coordinates.
  Matrix perm_action(const std::vector<int>& sigma) const;
};
S5Form s5_theta();
// theta for the literal reading with e_5 (x) Q_1 as last term.
ThetaTensor s5_theta_literal(const S5Form& s);
std::vector<Vec> s5_rank2_candidates();
int sign_of(const std::vector<int>& sigma);

// Quadratic forms on Lambda^2 U5 (10 Plucker coordinates N_ab, a < b).
struct QuadricBattery {
  std::vector<MultiPoly> CQ;
  int span_dim = 0;
};
// <M, N> = tr(M^T G N G) / 2 as a linear form in the N_ab.
MultiPoly pairing_form(const Matrix& M, const Matrix& G);
QuadricBattery c4_quadrics(const S5Form& s);
// Plucker coordinates of the annihilator of a 3-space of V5 (V5 dual to U5).
Vec c4_point(const std::vector<Vec>& V);

// ---- hypersurfaces

std::vector<Exponent> monomials(int nvars, int degree);

struct SegreCubic {
  MultiPoly f;
  int samples = 0;
  int corank = 0;
};
SegreCubic segre_cubic(const ThetaTensor& t, uint64_t seed, int nsamples = 60);
std::vector<MultiPoly> gradient(const MultiPoly& f);
bool singular_at(const MultiPoly& f, const Vec& x);
// f restricted to span(basis) vanishes identically
bool contains_linear_space(const MultiPoly& f, const std::vector<Vec>& basis);

struct IgusaForm {
  std::vector<std::vector<MultiPoly>> gram;  // 4x4 linear forms in h1..h5
  MultiPoly det;
};
IgusaForm igusa_quartic(const ThetaTensor& t);
std::vector<std::vector<MultiPoly>> printed_igusa_matrix(Field f);
MultiPoly printed_igusa_quartic(Field f);
MultiPoly det4(const std::vector<std::vector<MultiPoly>>& m);
// a = c * b for a nonzero scalar c.
bool poly_proportional(const MultiPoly& a, const MultiPoly& b, Scalar* c = nullptr);

// ---- flags A1 in A3 with theta(A1, A3) = 0 over F_p

struct Flag {
  Vec a1;
  std::vector<Vec> a3;
};
std::vector<Flag> dp5_flags(const ThetaTensor& t);

}  // namespace fano
