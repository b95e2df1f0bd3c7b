#include "fano4/modp.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace fano::modp {

u32 inv(u32 a, u32 p) {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  u64 r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 from_int(long x, u32 p) {
  long r = x % static_cast<long>(p);
  return static_cast<u32>(r < 0 ? r + p : r);
}

int rank_inplace(u32* m, int rows, int cols, u32 p) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i * cols + c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    u32 iv = inv(m[r * cols + c], p);
    for (int i = r + 1; i < rows; ++i) {
      u32 f = m[i * cols + c];
      if (!f) continue;
      f = mul(f, iv, p);
      for (int j = c; j < cols; ++j) m[i * cols + j] = sub(m[i * cols + j], mul(f, m[r * cols + j], p), p);
    }
    ++r;
  }
  return r;
}

int rank(std::vector<u32> m, int rows, int cols, u32 p) { return rank_inplace(m.data(), rows, cols, p); }

std::vector<std::vector<u32>> kernel(std::vector<u32> m, int rows, int cols, u32 p) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i * cols + c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    u32 iv = inv(m[r * cols + c], p);
    for (int j = 0; j < cols; ++j) m[r * cols + j] = mul(m[r * cols + j], iv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i * cols + c]) continue;
      u32 f = m[i * cols + c];
      for (int j = 0; j < cols; ++j) m[i * cols + j] = sub(m[i * cols + j], mul(f, m[r * cols + j], p), p);
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<std::vector<u32>> out;
  for (int fc = 0; fc < cols; ++fc) {
    if (std::find(piv.begin(), piv.end(), fc) != piv.end()) continue;
    std::vector<u32> v(cols, 0);
    v[fc] = 1;
    for (size_t t = 0; t < piv.size(); ++t) v[piv[t]] = sub(0, m[t * cols + fc], p);
    out.push_back(v);
  }
  return out;
}

u64 gaussian_binomial(int n, int k, u64 q) {
  if (k < 0 || k > n) return 0;
  // product formula with exact division at each step
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (int t = 0; t < n - i; ++t) a *= q;
    for (int t = 0; t < i + 1; ++t) b *= q;
    num *= (a - 1);
    den *= (b - 1);
  }
  return static_cast<u64>(num / den);
}

u64 projective_count(int n, u64 q) { return n <= 0 ? 0 : gaussian_binomial(n, 1, q); }

Grassmannian::Grassmannian(int k, int n, u32 p) : k_(k), n_(n), p_(p) {
  if (k < 0 || k > n) throw std::invalid_argument("bad Grassmannian dimensions");
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + k, true);
  do {
    Cell c;
    for (int j = 0; j < n; ++j)
      if (sel[j]) c.pivots.push_back(j);
    for (int r = 0; r < k; ++r)
      for (int j = c.pivots[r] + 1; j < n; ++j)
        if (!sel[j]) c.free.emplace_back(r, j);
    c.size = 1;
    for (size_t t = 0; t < c.free.size(); ++t) c.size *= p;
    c.offset = total_;
    total_ += c.size;
    cells_.push_back(c);
  } while (std::prev_permutation(sel.begin(), sel.end()));
}

void Grassmannian::decode(u64 idx, u32* out) const {
  auto it = std::upper_bound(cells_.begin(), cells_.end(), idx, [](u64 x, const Cell& c) { return x < c.offset; });
  const Cell& c = *(it - 1);
  u64 local = idx - c.offset;
  std::fill(out, out + k_ * n_, 0u);
  for (int r = 0; r < k_; ++r) out[r * n_ + c.pivots[r]] = 1;
  for (const auto& [r, j] : c.free) {
    out[r * n_ + j] = static_cast<u32>(local % p_);
    local /= p_;
  }
}

void Grassmannian::for_range(u64 begin, u64 end, const std::function<void(const u32*)>& f) const {
  std::vector<u32> buf(static_cast<size_t>(k_) * n_);
  u64 i = begin;
  while (i < end) {
    auto it = std::upper_bound(cells_.begin(), cells_.end(), i, [](u64 x, const Cell& c) { return x < c.offset; });
    const Cell& c = *(it - 1);
    decode(i, buf.data());
    u64 stop = std::min(end, c.offset + c.size);
    for (;;) {
      f(buf.data());
      if (++i == stop) break;
      // odometer step over the free entries
      for (const auto& [r, j] : c.free) {
        u32& x = buf[r * n_ + j];
        if (++x < p_) break;
        x = 0;
      }
    }
  }
}

std::vector<u64> parallel_sums(u64 total, int threads, int width,
                               const std::function<void(u64, u64, u64*)>& block) {
  const u64 nblocks = std::min<u64>(total, 256);
  std::vector<u64> out(width, 0);
  if (nblocks == 0) return out;
  std::vector<u64> part(nblocks * width, 0);
  auto run = [&](u64 b) { block(total * b / nblocks, total * (b + 1) / nblocks, &part[b * width]); };
  threads = std::max(1, threads);
  if (threads == 1) {
    for (u64 b = 0; b < nblocks; ++b) run(b);
  } else {
    std::atomic<u64> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (u64 b; (b = next.fetch_add(1)) < nblocks;) run(b);
      });
    for (auto& th : pool) th.join();
  }
  for (u64 b = 0; b < nblocks; ++b)
    for (int w = 0; w < width; ++w) out[w] += part[b * width + w];
  return out;
}

u64 parallel_sum(u64 total, int threads, const std::function<u64(u64, u64)>& block) {
  return parallel_sums(total, threads, 1, [&](u64 lo, u64 hi, u64* acc) { acc[0] = block(lo, hi); })[0];
}

u64 sum_over_grassmannian(const Grassmannian& g, int threads, const std::function<u64(const u32*)>& f) {
  return parallel_sum(g.size(), threads, [&](u64 lo, u64 hi) {
    u64 s = 0;
    g.for_range(lo, hi, [&](const u32* b) { s += f(b); });
    return s;
  });
}

}  // namespace fano::modp
