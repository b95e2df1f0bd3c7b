// Blow-up route to the divisor intersection table of X4 (basis H1, F1..F5),
// the K3 lattice of a codimension-two linear section, and the square map
// S^2 A^1 -> A^2.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fano4/characters.hpp"
#include "fano4/scalar.hpp"

namespace fano {

// Chow ring of the quintic del Pezzo surface Sigma_p presented with h and four
// disjoint lines l_1..l_4: h^2 = 1, l_i^2 = -1, h l_i = 0, l_i l_j = 0.
struct Dp5Class {
  Rational c0, h;
  std::array<Rational, 4> l{};
  Rational pt;
  static Dp5Class one();
  static Dp5Class hyperplane();
  static Dp5Class line(int i);
  Dp5Class operator+(const Dp5Class& o) const;
  Dp5Class operator-(const Dp5Class& o) const;
  Dp5Class operator*(const Dp5Class& o) const;
  Dp5Class operator*(const Rational& r) const;
  bool operator==(const Dp5Class& o) const;
  Dp5Class inverse() const;  // needs c0 != 0
  std::string str() const;
};

struct SegreReading {
  std::string name;
  Dp5Class s;
  Rational alpha;  // s_2 = alpha * sum l_q^2
};
// Segre class of the normal bundle N_p of Sigma_p in G0 read three ways: the
// printed formula, the literal product of the displayed factors, and the
// exact sequence N_p = Q (x) O(-sum l).
std::vector<SegreReading> segre_readings();

// Symmetric degree-4 form on the basis {H1, F1, .., F5} (index 0 is H1).
struct DivisorTable {
  std::map<std::array<int, 4>, Rational> v;
  Rational at(int a, int b, int c, int d) const;
  void set(int a, int b, int c, int d, const Rational& x);
  // Multilinear evaluation on four divisors given by coordinates.
  Rational eval(const std::array<std::array<Rational, 6>, 4>& d) const;
  // Entries depend only on the index pattern.
  bool s5_invariant() const;
  // H1^4, H1^3 H2, ..., H2^4 with H2 = 3 H1 - sum F_p.
  std::array<Rational, 5> h_numbers() const;
  bool operator==(const DivisorTable& o) const { return v == o.v; }
};
DivisorTable printed_table();
// Name such as "F_p^3 F_q" for a basis monomial.
std::string monomial_name(const std::array<int, 4>& m);

// Push-pull evaluation on G1 with (F^1_p)^4 = -s_2(N_p) = 4 alpha, and the
// table of X4 obtained by pulling back along c*F_p = F^1_p + sum E^1_pq.
struct BlowupModel {
  Rational alpha;
  // Monomials of degree 4 in generators: -1 = H, 0..4 = F^1_p, 10 + 5p + q = E_pq.
  Rational g1(const std::vector<int>& mono) const;
  DivisorTable x4_table() const;
};
int gen_E(int p, int q);

struct LedgerEntry {
  std::string name;
  Rational printed;
  Rational recomputed;
  bool agrees() const { return printed == recomputed; }
};

struct AlternativeReading {
  std::string name;
  Rational alpha;
  Rational h2_4;
  int gram_rank = 0;
};

struct LedgerAudit {
  Rational alpha;
  std::vector<SegreReading> readings;
  std::vector<LedgerEntry> g1_numbers;      // numbers on G1
  std::vector<LedgerEntry> table;       // numbers on X4
  DivisorTable recomputed;
  std::array<Rational, 5> h_numbers{};  // from the recomputed table
  std::array<Rational, 5> h_expected{};
  bool h_match = false;
  bool s5_invariant = false;
  bool projection_formula = false;  // (c*D)^3 E^1_pq = 0
  bool vanishing_rules = false;     // H F_p F_q = 0, F_p F_q F_r = 0
  Rational f4_sum;                  // (sum F_p)^4 recomputed
  Rational f4_sum_printed;          // the same from the printed table
  Rational f4_sum_forced;           // forced by H2^4 = h_expected[4]
  Rational pullback_fp4;            // (c*F_p)^4 on G1
  std::vector<AlternativeReading> alternatives;
  bool self_consistent() const { return h_match && s5_invariant && projection_formula && vanishing_rules; }
};
LedgerAudit blowup_ledger_audit(const std::array<Rational, 5>& h_expected);

struct SquareMapReport {
  std::vector<std::vector<Rational>> k3;  // A.B.H1.H2 on h1, h2, f1..f5
  int gram_rank = 0;
  int kernel_dim = 0;
  std::string sym2_type, kernel_type, image_type, pic_type;
};
SquareMapReport k3_and_square_map(const DivisorTable& t);

}  // namespace fano
