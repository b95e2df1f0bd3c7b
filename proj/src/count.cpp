#include "fano4/count.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

using namespace modp;

RawTheta raw_theta(const ThetaTensor& t) {
  if (t.field.kind != FieldKind::Fp) throw FieldMismatch("raw_theta needs a prime field");
  RawTheta r;
  r.p = static_cast<u32>(t.field.p);
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) r.c[i][a][b] = static_cast<u32>(t.comp[i](a, b).fp().v);
  return r;
}

ThetaTensor theta_mod_p(const ThetaTensor& t, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  switch (t.field.kind) {
    case FieldKind::Fp:
      if (t.field.p != p) throw FieldMismatch("tensor already lives over " + t.field.name());
      return t;
    case FieldKind::Q:
      return reduce_theta(t, p);
    case FieldKind::Cyclo12:
      if (p % 12 != 1) throw BadReduction("Q(zeta12) needs p = 1 mod 12, got " + std::to_string(p));
      return reduce_theta(t, p, primitive_12th_root(p));
  }
  throw std::logic_error("unreachable");
}

u64 count_grassmannian(int k, int n, u64 p) {
  u64 g = gaussian_binomial(n, k, p);
  Grassmannian cells(k, n, static_cast<u32>(p));
  if (cells.size() != g) throw std::logic_error("Grassmannian cell count disagrees with the Gaussian binomial");
  return g;
}

long long CountPolynomial::eval(long long p) const {
  long long r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * p + *it;
  return r;
}

std::string CountPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << (c[k] < 0 ? " - " : " + ");
    else if (c[k] < 0) os << "-";
    long long a = std::llabs(c[k]);
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "L";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

std::optional<CountPolynomial> expected_polynomial(ModelId m) {
  switch (m) {
    case ModelId::X0: return CountPolynomial{{10}};
    case ModelId::X1: return CountPolynomial{{5, 5}};
    case ModelId::X2: return CountPolynomial{{1, 5, 1}};
    case ModelId::X4: return CountPolynomial{{1, 6, 17, 6, 1}};
    case ModelId::X6: return CountPolynomial{{1, 2, 8, 9, 8, 2, 1}};
    case ModelId::X8: return CountPolynomial{{1, 2, 4, 6, 11, 6, 4, 2, 1}};
    case ModelId::X8p: return CountPolynomial{{1, 2, 5, 11, 13, 11, 5, 2, 1}};
    case ModelId::X3: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

inline int small_rank(u32* m, int rows, int cols, u32 p) { return rank_inplace(m, rows, cols, p); }

// y = theta_i v
inline void apply(const RawTheta& t, int i, const u32* v, u32* y) {
  for (int a = 0; a < 5; ++a) {
    u64 s = 0;
    for (int b = 0; b < 5; ++b) s += static_cast<u64>(t.c[i][a][b]) * v[b];
    y[a] = static_cast<u32>(s % t.p);
  }
}

inline u32 dot5(const u32* a, const u32* b, u32 p) {
  u64 s = 0;
  for (int k = 0; k < 5; ++k) s += static_cast<u64>(a[k]) * b[k];
  return static_cast<u32>(s % p);
}

// M[i][pair] = theta_i(v_a, v_b) over the pairs (0,1), (0,2), (1,2)
inline void restrict3(const RawTheta& t, const u32* V, u32* M) {
  u32 y1[5], y2[5];
  for (int i = 0; i < 4; ++i) {
    apply(t, i, V + 5, y1);
    apply(t, i, V + 10, y2);
    M[i * 3 + 0] = dot5(V, y1, t.p);
    M[i * 3 + 1] = dot5(V, y2, t.p);
    M[i * 3 + 2] = dot5(V + 5, y2, t.p);
  }
}

// rows r_i = w^T theta_i, as a 4 x 5 matrix
inline void linear_forms(const RawTheta& t, const u32* w, u32* R) {
  for (int i = 0; i < 4; ++i)
    for (int b = 0; b < 5; ++b) {
      u64 s = 0;
      for (int a = 0; a < 5; ++a) s += static_cast<u64>(w[a]) * t.c[i][a][b];
      R[i * 5 + b] = static_cast<u32>(s % t.p);
    }
}

}  // namespace

G35Sweep sweep_g35(const RawTheta& t, int threads) {
  Grassmannian g(3, 5, t.p);
  const u64 P = t.p;
  u64 g2[5], p_[5];
  for (int d = 0; d <= 4; ++d) {
    g2[d] = gaussian_binomial(d, 2, P);
    p_[d] = projective_count(d, P);
  }
  // counters: X4, X6, C4, rank 0..3 histogram
  auto sums = parallel_sums(g.size(), threads, 7, [&](u64 lo, u64 hi, u64* acc) {
    u32 M[12];
    g.for_range(lo, hi, [&](const u32* V) {
      restrict3(t, V, M);
      int r = small_rank(M, 4, 3, t.p);
      int d = 4 - r;
      acc[0] += g2[d];
      acc[1] += p_[d];
      acc[2] += (r <= 2);
      acc[3 + r] += 1;
    });
  });
  G35Sweep s;
  s.X4 = sums[0];
  s.X6 = sums[1];
  s.C4 = sums[2];
  for (int r = 0; r <= 3; ++r)
    if (sums[3 + r]) s.rank_histogram[r] = sums[3 + r];
  return s;
}

G25Sweep sweep_g25(const RawTheta& t, int threads) {
  Grassmannian g(2, 5, t.p);
  const u64 P = t.p;
  auto sums = parallel_sums(g.size(), threads, 3, [&](u64 lo, u64 hi, u64* acc) {
    u32 y[5];
    g.for_range(lo, hi, [&](const u32* W) {
      bool zero = true;
      for (int i = 0; i < 4 && zero; ++i) {
        apply(t, i, W + 5, y);
        zero = dot5(W, y, t.p) == 0;
      }
      // kernel of v -> theta(v)(w1, w2) has dimension 4 or 3
      if (zero) {
        acc[0] += projective_count(4, P);
        acc[1] += gaussian_binomial(4, 2, P);
        acc[2] += 1;
      } else {
        acc[0] += projective_count(3, P);
        acc[1] += gaussian_binomial(3, 2, P);
      }
    });
  });
  return {sums[0], sums[1], sums[2]};
}

P4Sweep sweep_p4(const RawTheta& t, int threads) {
  Grassmannian g(1, 5, t.p);
  const u64 P = t.p;
  auto sums = parallel_sums(g.size(), threads, 3, [&](u64 lo, u64 hi, u64* acc) {
    u32 R[20];
    g.for_range(lo, hi, [&](const u32* w) {
      linear_forms(t, w, R);
      int r = small_rank(R, 4, 5, t.p);
      int d = 4 - r;  // dim K_w, and dim L_w / w
      acc[0] += gaussian_binomial(d, 2, P);
      acc[1] += projective_count(d, P);
      acc[2] += (r < 4);
    });
  });
  P4Sweep s;
  s.X0 = sums[0];
  s.X3 = sums[1];
  s.C3 = sums[2];
  s.flags = sums[0];
  return s;
}

u64 count_x2_fast(const RawTheta& t, int threads) {
  Grassmannian g(1, 5, t.p);
  const u64 P = t.p;
  u64 pairs = sum_over_grassmannian(g, threads, [&](const u32* w) {
    u32 R[20];
    linear_forms(t, w, R);
    return projective_count(4 - small_rank(R, 4, 5, t.p), P);
  });
  if (pairs % (P + 1)) throw Inconsistent("point-plane incidences of X2 not divisible by p + 1");
  return pairs / (P + 1);
}

u64 count_x1(const RawTheta& t) {
  const u32 p = t.p;
  Grassmannian P3(1, 4, p), hyper(4, 5, p);
  u64 total = 0;
  P3.for_range(0, P3.size(), [&](const u32* v) {
    u32 w[25];
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        u64 s = 0;
        for (int i = 0; i < 4; ++i) s += static_cast<u64>(v[i]) * t.c[i][a][b];
        w[a * 5 + b] = static_cast<u32>(s % p);
      }
    u32 tmp[25];
    std::copy(w, w + 25, tmp);
    if (rank_inplace(tmp, 5, 5, p) > 2) return;
    hyper.for_range(0, hyper.size(), [&](const u32* B) {
      u32 y[5];
      for (int c = 1; c < 4; ++c) {
        for (int a = 0; a < 5; ++a) {
          u64 s = 0;
          for (int b = 0; b < 5; ++b) s += static_cast<u64>(w[a * 5 + b]) * B[c * 5 + b];
          y[a] = static_cast<u32>(s % p);
        }
        for (int r = 0; r < c; ++r)
          if (dot5(B + r * 5, y, p)) return;
      }
      ++total;
    });
  });
  return total;
}

u64 x4_double_sweep(const RawTheta& t, int threads) {
  Grassmannian g35(3, 5, t.p), g24(2, 4, t.p);
  std::vector<u32> U(g24.size() * 8);
  for (u64 i = 0; i < g24.size(); ++i) g24.decode(i, &U[i * 8]);
  return sum_over_grassmannian(g35, threads, [&](const u32* V) {
    u32 M[12];
    restrict3(t, V, M);
    u64 n = 0;
    for (u64 i = 0; i < g24.size(); ++i) {
      bool ok = true;
      for (int r = 0; r < 2 && ok; ++r)
        for (int c = 0; c < 3 && ok; ++c) {
          u64 s = 0;
          for (int k = 0; k < 4; ++k) s += static_cast<u64>(U[i * 8 + r * 4 + k]) * M[k * 3 + c];
          ok = s % t.p == 0;
        }
      n += ok;
    }
    return n;
  });
}

u64 count_projective_zeros(const MultiPoly& f, int threads) {
  if (f.field().kind != FieldKind::Fp) throw FieldMismatch("count_projective_zeros needs a prime field");
  const u32 p = static_cast<u32>(f.field().p);
  const int n = f.nvars();
  std::vector<std::pair<Exponent, u32>> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, static_cast<u32>(c.fp().v));
  Grassmannian g(1, n, p);
  return sum_over_grassmannian(g, threads, [&](const u32* x) -> u64 {
    u32 s = 0;
    for (const auto& [e, c] : terms) {
      u32 m = c;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < e[i]; ++k) m = mul(m, x[i], p);
      s = add(s, m, p);
    }
    return s == 0;
  });
}

std::string to_string(CountResult::Status s) {
  switch (s) {
    case CountResult::Status::Match: return "match";
    case CountResult::Status::Mismatch: return "mismatch";
    case CountResult::Status::NoExpectation: return "no_expectation";
  }
  return "?";
}

CountResult make_result(ModelId m, u64 p, u64 measured) {
  CountResult r;
  r.model = m;
  r.p = p;
  r.measured = measured;
  r.expected = expected_polynomial(m);
  if (r.expected)
    r.status = static_cast<u64>(r.expected->eval(static_cast<long long>(p))) == measured ? CountResult::Status::Match
                                                                                        : CountResult::Status::Mismatch;
  return r;
}

PrimeCounts count_all(const ThetaTensor& t, int threads, bool heavy) {
  RawTheta r = raw_theta(t);
  PrimeCounts c;
  c.p = r.p;
  c.heavy = heavy;
  P4Sweep s = sweep_p4(r, threads);
  c.models[ModelId::X0] = s.X0;
  c.models[ModelId::X3] = s.X3;
  c.C3 = s.C3;
  c.flags = s.flags;
  c.X2_fast = count_x2_fast(r, threads);
  c.models[ModelId::X2] = c.X2_fast;
  c.models[ModelId::X1] = count_x1(r);
  if (heavy) {
    G35Sweep a = sweep_g35(r, threads);
    c.models[ModelId::X4] = a.X4;
    c.models[ModelId::X6] = a.X6;
    c.C4 = a.C4;
    G25Sweep b = sweep_g25(r, threads);
    c.models[ModelId::X8] = b.X8;
    c.models[ModelId::X8p] = b.X8p;
    c.models[ModelId::X2] = b.X2;
  }
  return c;
}

CountResult count_model(ModelId m, const ThetaTensor& t, int threads) {
  RawTheta r = raw_theta(t);
  u64 n = 0;
  switch (m) {
    case ModelId::X0: n = sweep_p4(r, threads).X0; break;
    case ModelId::X3: n = sweep_p4(r, threads).X3; break;
    case ModelId::X1: n = count_x1(r); break;
    case ModelId::X2: n = sweep_g25(r, threads).X2; break;
    case ModelId::X4: n = sweep_g35(r, threads).X4; break;
    case ModelId::X6: n = sweep_g35(r, threads).X6; break;
    case ModelId::X8: n = sweep_g25(r, threads).X8; break;
    case ModelId::X8p: n = sweep_g25(r, threads).X8p; break;
  }
  return make_result(m, r.p, n);
}

bool good_reduction_probe(const ThetaTensor& t, u64 p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    ThetaTensor tp = theta_mod_p(t, p);
    RankTwoLocus loc = rank2_locus(tp);
    (void)loc;
    u64 x2 = count_x2_fast(raw_theta(tp), 1);
    if (x2 != 1 + 5 * p + p * p) return fail("|X2| = " + std::to_string(x2));
  } catch (const NotGeneric& e) {
    return fail(e.what());
  } catch (const BadReduction& e) {
    return fail(e.what());
  } catch (const DivisionByZero& e) {
    return fail(e.what());
  } catch (const Inconsistent& e) {
    return fail(e.what());
  }
  if (why) why->clear();
  return true;
}

std::vector<Rational> fit_polynomial(const std::vector<u64>& primes, const std::vector<u64>& values) {
  const int n = static_cast<int>(primes.size());
  Field q = Field::rationals();
  Matrix A(n, n, q);
  Vec b;
  for (int i = 0; i < n; ++i) {
    Rational x(static_cast<unsigned long>(primes[i]));
    Rational pw(1);
    for (int j = 0; j < n; ++j) {
      A(i, j) = Scalar(pw);
      pw *= x;
    }
    b.push_back(Scalar(Rational(std::to_string(values[i]))));
  }
  Vec x;
  if (!A.solve(b, &x)) throw std::invalid_argument("fit_polynomial: repeated primes");
  std::vector<Rational> out;
  for (const auto& s : x) out.push_back(s.rational());
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

GrothendieckAudit audit_grothendieck(const std::vector<PrimeCounts>& counts) {
  GrothendieckAudit a;
  for (const auto& c : counts) {
    if (!c.heavy) continue;
    GrothendieckRow r;
    r.p = c.p;
    long long p = static_cast<long long>(c.p), p3 = p * p * p;
    long long g = static_cast<long long>(count_grassmannian(3, 5, c.p));
    long long x4 = static_cast<long long>(c.models.at(ModelId::X4));
    long long x6 = static_cast<long long>(c.models.at(ModelId::X6));
    r.lhs = x6 + 5 * p3;
    r.rhs = g + p * x4;
    r.c = Rational(std::to_string(g + p * x4 - x6)) / Rational(std::to_string(p3));
    a.rows.push_back(r);
  }
  a.constant_c = !a.rows.empty();
  for (const auto& r : a.rows) a.constant_c = a.constant_c && r.c == a.rows.front().c;
  if (a.constant_c) {
    a.c = a.rows.front().c;
    a.discrepancy_l3 = Rational(5) - a.c;
  }
  return a;
}

std::vector<Flag> dp5_flags(const ThetaTensor& t) {
  RawTheta r = raw_theta(t);
  const u32 p = r.p;
  Field f = t.field;
  auto to_vec = [&](const u32* x) {
    Vec v;
    for (int k = 0; k < 5; ++k) v.push_back(Scalar(Fp::raw(x[k], p)));
    return v;
  };
  std::vector<Flag> out;
  Grassmannian g(1, 5, p);
  g.for_range(0, g.size(), [&](const u32* w) {
    u32 R[20];
    linear_forms(r, w, R);
    std::vector<u32> Rv(R, R + 20);
    if (rank(Rv, 4, 5, p) > 2) return;
    auto L = kernel(Rv, 4, 5, p);
    const int d = static_cast<int>(L.size());
    Grassmannian sub(3, d, p);
    Vec wv = to_vec(w);
    sub.for_range(0, sub.size(), [&](const u32* c) {
      std::vector<Vec> A3;
      for (int i = 0; i < 3; ++i) {
        Vec v(5, Scalar::zero(f));
        for (int j = 0; j < d; ++j) v = vec_add(v, vec_scale(to_vec(L[j].data()), Scalar(Fp::raw(c[i * d + j], p))));
        A3.push_back(v);
      }
      auto with_w = A3;
      with_w.push_back(wv);
      if (span_rank(with_w) == 3) out.push_back({wv, A3});
    });
  });
  return out;
}

}  // namespace fano
