// Borel-Weil-Bott on Grassmannians G(k, n) and on G(2,4) x G(3,5), GL
// tensor products by Littlewood-Richardson, and the Koszul computations for
// X4 = zero locus of E = U^v [x] Lambda^2 V^v.
#pragma once

#include <map>
#include <tuple>
#include <string>
#include <vector>

namespace fano {

// Weight (alpha | beta) of S_alpha U^v (x) S_beta Q^v on G(k, n); alpha has
// length k, beta length n - k, both non-increasing.
struct GrassWeight {
  int k = 0, n = 0;
  std::vector<int> w;
  bool operator<(const GrassWeight& o) const { return std::tie(k, n, w) < std::tie(o.k, o.n, o.w); }
  bool operator==(const GrassWeight& o) const { return k == o.k && n == o.n && w == o.w; }
  std::string str() const;
};

struct BottResult {
  bool zero = true;
  int degree = 0;
  long long dim = 0;
  std::vector<int> dominant;
};
long long weyl_dimension(const std::vector<int>& lambda);  // GL_m, non-increasing
BottResult bott(const GrassWeight& w);
GrassWeight dual(const GrassWeight& w);
GrassWeight canonical_weight(int k, int n);  // O(-n)

// Littlewood-Richardson for GL_m on arbitrary integer weights.
std::map<std::vector<int>, long long> gl_tensor(const std::vector<int>& a, const std::vector<int>& b);

// Homogeneous bundles on G(2,4) x G(3,5) as multisets of irreducibles.
struct ProductWeight {
  GrassWeight a, b;
  bool operator<(const ProductWeight& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  bool operator==(const ProductWeight& o) const { return a == o.a && b == o.b; }
  std::string str() const;
};
using Bundle = std::map<ProductWeight, long long>;

ProductWeight product_weight(std::vector<int> a, std::vector<int> b);
Bundle irreducible_bundle(std::vector<int> a, std::vector<int> b);
Bundle operator+(const Bundle& x, const Bundle& y);
Bundle tensor(const Bundle& x, const Bundle& y);
Bundle dual(const Bundle& x);
long long rank(const Bundle& x);
// cohomology degree -> dimension; also the per-summand Bott results
std::map<int, long long> cohomology(const Bundle& x);
long long euler_characteristic(const Bundle& x);

Bundle bundle_O(int a, int b);
Bundle bundle_E();
Bundle bundle_E_dual();
// Cauchy formula: Lambda^k (U (x) Lambda^2 V)
Bundle lambda_E_dual(int k);
Bundle lambda_E(int k);
Bundle tangent_bundle();  // T(G(2,4) x G(3,5))
Bundle end0_E();

struct KoszulReport {
  // h^0(-K) via the twisted Koszul complex
  std::vector<std::map<int, long long>> twisted;  // H^*(Lambda^k E^v(1,1)), k = 0..6
  long long h0_anticanonical = 0;
  bool twisted_vanishing = false;  // Lambda^k E^v(1,1) acyclic for k >= 2
  long long chi_anticanonical = 0;
  // rigidity
  std::vector<std::map<int, long long>> tg;        // H^*(TG (x) Lambda^i E^v)
  bool tg_vanishing = false;                       // H^{i+1} = 0 for all i
  std::map<int, long long> end0;
  bool end0_acyclic = false;
  std::vector<std::map<int, long long>> e_terms;   // H^*(E (x) Lambda^k E^v)
  bool e_required = false;                         // H^i(E (x) Lambda^{i+1} E^v) = 0, i > 0
  bool e_acyclic = false;                          // E (x) Lambda^{i+1} E^v acyclic, i > 0
  long long h0_E_restricted = 0;                   // 40 - 1
  long long chi_TX = 0;
};
KoszulReport koszul_sections_and_rigidity();
std::string format_cohomology(const std::map<int, long long>& h);

}  // namespace fano
