// Characters of symmetric groups (Murnaghan-Nakayama) and decompositions.
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano4/configurations.hpp"
#include "fano4/scalar.hpp"

namespace fano {

using Partition = std::vector<int>;

struct NotACharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Partition> partitions(int n);  // reverse lexicographic
Partition conjugate(const Partition& p);
long long factorial(int n);
long long centralizer_order(const Partition& mu);
// cycle type of g^k for g of type mu
Partition power_type(const Partition& mu, int k);
Perm class_representative(const Partition& mu);
long long mn_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> classes;  // cycle types
  std::vector<long long> sizes;
  std::vector<Partition> irreps;   // same order as classes
  std::vector<std::vector<long long>> chi;  // chi[irrep][class]
  int class_index(const Partition& mu) const;
  int irrep_index(const Partition& lambda) const;
};
const CharacterTable& character_table(int n);
bool orthogonality_holds(const CharacterTable& t);

// Class function on the classes of a table.
struct ClassFunction {
  int n = 0;
  std::vector<Rational> v;
};
ClassFunction irreducible(int n, const Partition& lambda);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction scaled(const ClassFunction& a, long c);
Rational inner(const ClassFunction& a, const ClassFunction& b);
// multiplicities indexed like the table's irreps
std::vector<long long> decompose(const ClassFunction& ch);
ClassFunction sym_square(const ClassFunction& ch);
ClassFunction alt_square(const ClassFunction& ch);
ClassFunction permutation_character(int n);  // on n letters
// character of a representation given by g -> matrix (evaluated on class
// representatives)
ClassFunction character_of(int n, const std::function<Rational(const Perm&)>& trace);

// S5 labels: U1 trivial, U1- sign, U4 standard, U4- = U4 (x) sign,
// U5 = (3,2), U5- = (2,2,1), U6 = (3,1,1).
Partition s5_partition(const std::string& label);
std::string s5_label(const Partition& p);
ClassFunction s5_irrep(const std::string& label);
// e.g. "4U1+2U4+U5"; S6 irreps are printed as partitions
std::string format_decomposition(int n, const std::vector<long long>& mult);
std::map<std::string, long long> s5_multiplicities(const ClassFunction& ch);

}  // namespace fano
