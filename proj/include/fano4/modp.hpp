// Small fixed-size linear algebra over F_p on raw words, and enumeration of
// F_p-points of Grassmannians by echelon cells.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace fano::modp {

using u32 = uint32_t;
using u64 = uint64_t;

inline u32 add(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
inline u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 mul(u32 a, u32 b, u32 p) { return static_cast<u32>(static_cast<u64>(a) * b % p); }
u32 inv(u32 a, u32 p);
u32 from_int(long x, u32 p);

// Rank of a rows x cols row-major matrix; destroys the input.
int rank_inplace(u32* m, int rows, int cols, u32 p);
int rank(std::vector<u32> m, int rows, int cols, u32 p);
// Right kernel basis (vectors of length cols).
std::vector<std::vector<u32>> kernel(std::vector<u32> m, int rows, int cols, u32 p);

// Number of k-dimensional subspaces of F_q^n.
u64 gaussian_binomial(int n, int k, u64 q);
// |P^{n-1}(F_q)|, zero for n <= 0.
u64 projective_count(int n, u64 q);

// Points of G(k, n)(F_p) as k x n reduced echelon matrices, grouped in cells
// by pivot set. Elements are addressed by a global index in [0, size()).
class Grassmannian {
 public:
  Grassmannian(int k, int n, u32 p);

  int k() const { return k_; }
  int n() const { return n_; }
  u32 p() const { return p_; }
  u64 size() const { return total_; }

  // Writes the k x n basis (row-major) of element idx.
  void decode(u64 idx, u32* out) const;
  // Calls f(basis) for idx in [begin, end).
  void for_range(u64 begin, u64 end, const std::function<void(const u32*)>& f) const;

 private:
  struct Cell {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free;  // (row, col)
    u64 offset = 0, size = 0;
  };
  int k_, n_;
  u32 p_;
  std::vector<Cell> cells_;
  u64 total_ = 0;
};

// Deterministic parallel reduction: [0, total) is cut into a fixed number of
// blocks independent of the thread count; block sums are added in order.
u64 parallel_sum(u64 total, int threads, const std::function<u64(u64, u64)>& block);

// Same with several counters per block.
std::vector<u64> parallel_sums(u64 total, int threads, int width,
                               const std::function<void(u64, u64, u64*)>& block);
// Sum of f over all points of G(k, n)(F_p).
u64 sum_over_grassmannian(const Grassmannian& g, int threads, const std::function<u64(const u32*)>& f);

}  // namespace fano::modp
