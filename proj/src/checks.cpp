#include "fano4/checks.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "fano4/bott.hpp"
#include "fano4/characters.hpp"
#include "fano4/configurations.hpp"
#include "fano4/count.hpp"
#include "fano4/intersection.hpp"
#include "fano4/ledger.hpp"
#include "fano4/models.hpp"
#include "fano4/tensor_io.hpp"
#include "json.hpp"

namespace fano {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"models", "count", "chow", "rep", "config", "audit"};
  return s;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
  }
  RunConfig c;
  try {
    if (j.contains("theta")) c.theta = j["theta"].get<std::string>();
    if (j.contains("primes")) c.primes = j["primes"].get<std::vector<std::uint64_t>>();
    if (j.contains("only")) c.only = j["only"].get<std::vector<std::string>>();
    if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("report")) c.report_path = j["report"].get<std::string>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  for (auto p : c.primes)
    if (p < 7 || !is_prime(p)) throw ConfigError("bad prime " + std::to_string(p) + " (need a prime >= 7)");
  if (c.threads < 1) throw ConfigError("thread count must be positive");
  if (c.theta != "default" && c.theta != "s5" && c.theta != "ozeki") {
    if (c.theta.rfind("file:", 0) != 0) throw ConfigError("unknown theta source '" + c.theta + "'");
    try {
      read_theta_file(c.theta.substr(5));
    } catch (const TensorFileError& e) {
      throw ConfigError(e.what());
    }
  }
  for (const auto& s : c.suites)
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
      throw ConfigError("unknown suite '" + s + "'");
}

namespace {

constexpr std::uint64_t kHeavyLimit = 19;  // G(3,5) and G(2,5) sweeps only up to here

std::string str(const Rational& q) { return to_string(q); }
std::string str(long long x) { return std::to_string(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

// Literal prefix of a glob, up to the first wildcard.
std::string glob_prefix(const std::string& g) { return g.substr(0, g.find_first_of("*?")); }

struct Outcome {
  bool ok = false;
  std::string computed;
  std::string note;
};

class Runner {
 public:
  explicit Runner(const RunConfig& c) : cfg(c) {}

  const RunConfig& cfg;
  Report report;

  bool selected(const std::string& id) const {
    if (cfg.only.empty()) return true;
    for (const auto& g : cfg.only)
      if (glob_match(g, id)) return true;
    return false;
  }

  bool suite_selected(const std::string& suite) const {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), suite) == cfg.suites.end()) return false;
    if (cfg.only.empty()) return true;
    const std::string head = suite + ".";
    for (const auto& g : cfg.only) {
      std::string p = glob_prefix(g);
      if (p.size() <= head.size() ? head.compare(0, p.size(), p) == 0 : p.compare(0, head.size(), head) == 0)
        return true;
    }
    return false;
  }

  void add(CheckRecord r) {
    if (selected(r.id)) report.records.push_back(std::move(r));
  }

  // Runs fn if id is selected; exceptions become failures.
  void check(const std::string& id, Source src, const std::string& expected, const std::function<Outcome()>& fn,
             CheckStatus on_false = CheckStatus::Fail) {
    if (!selected(id)) return;
    CheckRecord r{id, CheckStatus::Pass, src, expected, "", ""};
    try {
      Outcome o = fn();
      r.computed = o.computed;
      r.note = o.note;
      r.status = o.ok ? CheckStatus::Pass : on_false;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.computed = std::string("error: ") + e.what();
    }
    report.records.push_back(r);
  }

  void equal(const std::string& id, Source src, const std::string& expected, const std::function<std::string()>& fn,
             CheckStatus on_false = CheckStatus::Fail) {
    check(id, src, expected, [&] {
      std::string c = fn();
      return Outcome{c == expected, c, ""};
    }, on_false);
  }

  void skip(const std::string& id, Source src, const std::string& expected, const std::string& why) {
    add({id, CheckStatus::Skipped, src, expected, "not run", why});
  }
};

// ---------------------------------------------------------------- shared data

struct OzekiData {
  ThetaTensor t;
  OzekiTables tables;
  RankTwoLocus loc;
};

struct CountTheta {
  std::string label;
  ThetaTensor t;
  std::vector<std::uint64_t> primes;
};

class Shared {
 public:
  explicit Shared(const RunConfig& c) : cfg(c) {}

  const OzekiData& ozeki() {
    if (!oz_) {
      auto d = std::make_unique<OzekiData>();
      d->t = ozeki_theta();
      d->tables = ozeki_tables();
      d->loc = rank2_locus(d->t, d->tables.p);
      oz_ = std::move(d);
    }
    return *oz_;
  }

  const S5Form& s5() {
    if (!s5_) s5_ = std::make_unique<S5Form>(s5_theta());
    return *s5_;
  }

  const X4Numbers& x4() {
    if (!x4_) x4_ = x4_h_numbers();
    return *x4_;
  }

  const PrimeCounts& counts(const std::string& label, const ThetaTensor& t, std::uint64_t p, bool heavy) {
    auto key = std::make_pair(label, p);
    auto it = counts_.find(key);
    if (it != counts_.end() && (it->second.heavy || !heavy)) return it->second;
    counts_[key] = count_all(theta_mod_p(t, p), cfg.threads, heavy);
    return counts_[key];
  }

  bool probe(const std::string& label, const ThetaTensor& t, std::uint64_t p, std::string* why) {
    auto key = std::make_pair(label, p);
    auto it = probes_.find(key);
    if (it == probes_.end()) {
      std::string w;
      bool g = good_reduction_probe(t, p, &w);
      it = probes_.emplace(key, std::make_pair(g, w)).first;
    }
    if (why) *why = it->second.second;
    return it->second.first;
  }

  std::vector<CountTheta> count_thetas() {
    std::vector<CountTheta> out;
    auto pick = [&](std::vector<std::uint64_t> defaults) { return cfg.primes.empty() ? defaults : cfg.primes; };
    if (cfg.theta == "default" || cfg.theta == "s5") out.push_back({"s5", s5().theta, pick({7, 11, 13})});
    if (cfg.theta == "default" || cfg.theta == "ozeki") out.push_back({"ozeki", ozeki().t, pick({13, 37})});
    if (cfg.theta.rfind("file:", 0) == 0) {
      ThetaTensor t = read_theta_file(cfg.theta.substr(5));
      std::vector<std::uint64_t> d = t.field.kind == FieldKind::Q ? std::vector<std::uint64_t>{7, 11, 13}
                                                                  : std::vector<std::uint64_t>{13, 37};
      out.push_back({"custom", t, pick(d)});
    }
    return out;
  }

  const RunConfig& cfg;

 private:
  std::unique_ptr<OzekiData> oz_;
  std::unique_ptr<S5Form> s5_;
  std::optional<X4Numbers> x4_;
  std::map<std::pair<std::string, std::uint64_t>, PrimeCounts> counts_;
  std::map<std::pair<std::string, std::uint64_t>, std::pair<bool, std::string>> probes_;
};

std::string perm_string(const std::vector<int>& perm) {
  for (int x : perm)
    if (x == 0) return "not a permutation";
  return cycle_string(perm);
}

bool projective_equal(const Vec& a, const Vec& b) { return proportional(a, b); }

MultiPoly var(int n, int i, Field f) { return MultiPoly::var(n, i, f); }

// Entries of a proportional to entries of b with one global scalar.
bool grams_proportional(const std::vector<std::vector<MultiPoly>>& a, const std::vector<std::vector<MultiPoly>>& b) {
  std::optional<Scalar> c;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j].is_zero() != b[i][j].is_zero()) return false;
      if (a[i][j].is_zero()) continue;
      Scalar k;
      if (!poly_proportional(a[i][j], b[i][j], &k)) return false;
      if (c && *c != k) return false;
      c = k;
    }
  return true;
}

std::vector<std::vector<MultiPoly>> substitute(const std::vector<std::vector<MultiPoly>>& m,
                                               const std::vector<MultiPoly>& subs) {
  auto out = m;
  for (auto& row : out)
    for (auto& x : row) x = x.compose(subs);
  return out;
}

// Theta in the S5 form acts on V4 = sum-zero vectors in the basis e_i - e_5.
Vec permute_v4(const std::vector<int>& sigma, const Vec& v) {
  Field f = v[0].field();
  Vec full(5, Scalar::zero(f));
  for (int i = 0; i < 4; ++i) {
    full[i] += v[i];
    full[4] -= v[i];
  }
  Vec moved(5, Scalar::zero(f));
  for (int i = 0; i < 5; ++i) moved[sigma[i]] = full[i];
  return Vec(moved.begin(), moved.begin() + 4);
}

// ---------------------------------------------------------------- models

void models_ozeki(Runner& R, Shared& S) {
  const auto& d = S.ozeki();
  const auto& t = d.t;
  const auto& T = d.tables;
  const Field F = t.field;

  R.equal("models.ozeki.theta4_component", Source::Printed, "true",
          [&] { return str(t.comp[3] == f_wedge(4, 5, F) - f_wedge(1, 2, F)); });
  R.equal("models.ozeki.rank_theta_e1", Source::Derived, "4", [&] {
    Vec e1(4, Scalar::zero(F));
    e1[0] = Scalar::one(F);
    return str(pfaffian_rank(t(e1)));
  });
  R.equal("models.ozeki.rank2_locus", Source::Printed, "5 points in general position",
          [&] { return std::to_string(d.loc.points.size()) + " points in general position"; });
  R.equal("models.ozeki.omega", Source::Printed, "5/5", [&] {
    int ok = 0;
    for (int k = 0; k < 5; ++k) ok += forms_proportional(T.omega[k], t(T.p[k]));
    return ratio(ok, 5);
  });
  R.equal("models.ozeki.e_pq", Source::Printed, "10/10", [&] {
    int ok = 0;
    for (const auto& [k, v] : T.e) ok += projective_equal(v, d.loc.e.at(k));
    return ratio(ok, static_cast<int>(T.e.size()));
  });
  R.check("models.ozeki.five_term", Source::Derived, "sum u = 0, sum omega = 0, theta = sum u (x) omega", [&] {
    FiveTerm ft = five_term(t, d.loc);
    Vec su(4, Scalar::zero(F));
    Matrix so(5, 5, F);
    for (int k = 0; k < 5; ++k) {
      su = vec_add(su, ft.u[k]);
      so = so + ft.omega[k];
    }
    bool rebuild = true;
    for (int i = 0; i < 4; ++i) {
      Matrix m(5, 5, F);
      for (int k = 0; k < 5; ++k) m = m + ft.omega[k] * ft.u[k][i];
      rebuild = rebuild && m == t.comp[i];
    }
    bool ok = vec_is_zero(su) && so.is_zero() && rebuild;
    return Outcome{ok, ok ? "sum u = 0, sum omega = 0, theta = sum u (x) omega" : "presentation does not close", ""};
  });

  const std::vector<FormAction> acts = {FormAction::PushForward, FormAction::PullBack, FormAction::InversePushForward,
                                        FormAction::InversePullBack};
  auto lift_report = [&](const Matrix& g) {
    std::vector<std::string> parts;
    for (auto a : acts) parts.push_back(to_string(a) + ": " + perm_string(induced_permutation(g, T.omega, a)));
    return parts;
  };
  R.check("models.lift.sign", Source::Printed, "(1 2)", [&] {
    bool ok = true;
    for (auto a : acts) ok = ok && perm_string(induced_permutation(T.sign_lift, T.omega, a)) == "(1 2)";
    return Outcome{ok, join(lift_report(T.sign_lift), "; "), ""};
  });
  R.check("models.lift.cycle", Source::Printed, "(1 2 3 4 5)", [&] {
    bool ok = false;
    for (auto a : acts) ok = ok || perm_string(induced_permutation(T.cycle_lift, T.omega, a)) == "(1 2 3 4 5)";
    return Outcome{ok, join(lift_report(T.cycle_lift), "; "),
                   "the printed matrix permutes the five forms by a 5-cycle, but not by the printed one"};
  });
  R.check("models.lift.theta_preserved", Source::Derived, "both lifts preserve <theta> under g W g^T", [&] {
    Matrix A;
    bool s = theta_transform(t, T.sign_lift, FormAction::PushForward, &A);
    bool c = theta_transform(t, T.cycle_lift, FormAction::PushForward, &A);
    return Outcome{s && c, "sign: " + str(s) + ", cycle: " + str(c), ""};
  });
  R.equal("models.lift.cycle_order", Source::Derived, "g^5 is scalar", [&] {
    Matrix g = T.cycle_lift, p = g;
    for (int i = 0; i < 4; ++i) p = p * g;
    bool scalar = true;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) scalar = scalar && (i == j ? p(i, j) == p(0, 0) : p(i, j).is_zero());
    return scalar && !p(0, 0).is_zero() ? std::string("g^5 is scalar") : "g^5 = " + p.str();
  });

  PijkReport pr = pijk_configuration(T.omega);
  R.equal("models.pijk.single_points", Source::Printed, "true", [&] { return str(pr.all_single_points); });
  R.equal("models.pijk.coincidence", Source::Printed, "true", [&] { return str(pr.coincidence); });
  R.equal("models.pijk.count", Source::Printed, "15", [&] { return str(static_cast<int>(pr.distinct.size())); });
  R.check("models.pijk.configuration", Source::Printed, "(15_4,10_6)", [&] {
    std::set<int> rows, cols;
    for (const auto& r : pr.incidence) rows.insert(static_cast<int>(std::count(r.begin(), r.end(), true)));
    for (size_t h = 0; h < pr.hyperplanes.size(); ++h) {
      int c = 0;
      for (const auto& r : pr.incidence) c += r[h];
      cols.insert(c);
    }
    std::string s;
    if (rows.size() == 1 && cols.size() == 1)
      s = "(" + str(static_cast<int>(pr.incidence.size())) + "_" + str(*rows.begin()) + "," +
          str(static_cast<int>(pr.hyperplanes.size())) + "_" + str(*cols.begin()) + ")";
    else
      s = "not a configuration";
    return Outcome{s == "(15_4,10_6)", s, "incidence of p_ijk with the hyperplanes pi_i + pi_j"};
  });
  R.equal("models.pijk.hyperplane_points", Source::Printed, "true",
          [&] { return str(pr.hyperplanes_contain_iab_jcd); });

  // Segre cubic
  std::optional<SegreCubic> cub;
  auto cubic = [&]() -> const SegreCubic& {
    if (!cub) cub = segre_cubic(t, R.cfg.seed);
    return *cub;
  };
  R.equal("models.segre.corank", Source::Derived, "1", [&] { return str(cubic().corank); });
  R.equal("models.segre.singular_points", Source::Printed, "10/10", [&] {
    int ok = 0;
    for (const auto& [k, v] : d.loc.e) ok += singular_at(cubic().f, v);
    return ratio(ok, 10);
  });
  R.equal("models.segre.planes", Source::Printed, "15/15", [&] {
    auto cp = cremona_planes(d.loc.e);
    int ok = 0;
    for (const auto& [k, v] : cp.P_pq) ok += contains_linear_space(cubic().f, v);
    for (const auto& [k, v] : cp.P_p) ok += contains_linear_space(cubic().f, v);
    return ratio(ok, static_cast<int>(cp.P_pq.size() + cp.P_p.size()));
  });
  R.equal("models.segre.cremona_ranks", Source::Derived, "rank P_p = 3 and dim(P_p cap P_q) = 1 for all p, q", [&] {
    auto cp = cremona_planes(d.loc.e);
    bool ok = true;
    for (const auto& [k, r] : cp.P_p_rank) ok = ok && r == 3;
    for (const auto& [k, m] : cp.P_p_meet_dim) ok = ok && m == 1;
    return ok ? std::string("rank P_p = 3 and dim(P_p cap P_q) = 1 for all p, q") : std::string("rank or meet mismatch");
  });
  R.equal("models.segre.vanishes_on_image", Source::Trivial, "100/100", [&] {
    std::mt19937_64 rng(R.cfg.seed + 1);
    int ok = 0;
    for (int k = 0; k < 100; ++k) ok += cubic().f.eval(wedge_square(t(random_vec(4, F, rng)))).is_zero();
    return ratio(ok, 100);
  });
  R.equal("models.segre.resample_stable", Source::Derived, "5/5", [&] {
    int ok = 0;
    for (int s = 0; s < 5; ++s) ok += poly_proportional(segre_cubic(t, R.cfg.seed + 100 + s).f, cubic().f);
    return ratio(ok, 5);
  });

  // Igusa quartic
  std::optional<IgusaForm> ig;
  auto igusa = [&]() -> const IgusaForm& {
    if (!ig) ig = igusa_quartic(t);
    return *ig;
  };
  R.equal("models.igusa.symmetric", Source::Trivial, "true", [&] {
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ok = ok && igusa().gram[i][j] == igusa().gram[j][i];
    return str(ok);
  });
  R.check("models.igusa.printed_quartic", Source::Printed, "det(Q_h) proportional to the printed quartic", [&] {
    bool ok = poly_proportional(igusa().det, printed_igusa_quartic(F));
    std::mt19937_64 rng(R.cfg.seed + 2);
    auto grad = gradient(cubic().f);
    int on_printed = 0;
    for (int k = 0; k < 100; ++k) {
      Vec w = wedge_square(t(random_vec(4, F, rng)));
      Vec h;
      for (const auto& g : grad) h.push_back(g.eval(w));
      on_printed += printed_igusa_quartic(F).eval(h).is_zero();
    }
    return Outcome{ok, ok ? "proportional" : "not proportional",
                   "the printed quartic vanishes on " + ratio(on_printed, 100) + " tangent covectors of the cubic"};
  });
  R.check("models.igusa.printed_matrix", Source::Printed, "Q_h proportional to the printed matrix", [&] {
    bool ok = grams_proportional(igusa().gram, printed_igusa_matrix(F));
    return Outcome{ok, ok ? "proportional" : "not proportional", ""};
  });
  R.check("models.igusa.sign_convention", Source::Derived, "Q_h proportional to the printed matrix after h4 -> -h4", [&] {
    std::vector<MultiPoly> subs;
    for (int i = 0; i < 5; ++i) subs.push_back(i == 3 ? -var(5, i, F) : var(5, i, F));
    bool ok = grams_proportional(substitute(igusa().gram, subs), printed_igusa_matrix(F));
    return Outcome{ok, ok ? "proportional after h4 -> -h4" : "not proportional", ""};
  });
  R.check("models.igusa.printed_internal", Source::Derived, "printed quartic = +-det(printed matrix) + c h3^4", [&] {
    MultiPoly pq = printed_igusa_quartic(F), pd = det4(printed_igusa_matrix(F));
    for (const MultiPoly& diff : {pq - pd, pq + pd})
      if (diff.size() == 1) {
        Exponent e = diff.terms().begin()->first;
        const Scalar& c = diff.terms().begin()->second;
        if (e == Exponent{0, 0, 4, 0, 0} && (c.field().kind != FieldKind::Cyclo12 || c.cyclo().is_rational()))
          return Outcome{true, "printed quartic - (+-det(printed matrix)) = " +
                                   str(c.field().kind == FieldKind::Cyclo12 ? c.cyclo().c[0] : c.rational()) + " h3^4",
                         "the printed quartic is not the determinant of the printed matrix"};
      }
    return Outcome{false, "no such relation", ""};
  });
  R.equal("models.igusa.duality", Source::Printed, "100/100", [&] {
    std::mt19937_64 rng(R.cfg.seed + 3);
    auto grad = gradient(cubic().f);
    int ok = 0;
    for (int k = 0; k < 100; ++k) {
      Vec w = wedge_square(t(random_vec(4, F, rng)));
      Vec h;
      for (const auto& g : grad) h.push_back(g.eval(w));
      ok += igusa().det.eval(h).is_zero();
    }
    return ratio(ok, 100);
  });
}

void models_s5(Runner& R, Shared& S) {
  const S5Form& s = S.s5();
  const Field Q = Field::rationals();
  R.equal("models.s5.Q1", Source::Printed, "true", [&] {
    return str(wedge_forms(s.coords(pair_quadric(2, 3, 4, 5)), s.coords(pair_quadric(2, 4, 3, 5))) == s.Q[0]);
  });
  R.equal("models.s5.equivariance", Source::Printed, "50/50", [&] {
    int ok = 0, tot = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        std::vector<int> sg = {0, 1, 2, 3, 4};
        std::swap(sg[a], sg[b]);
        Matrix M = s.perm_action(sg);
        for (int i = 0; i < 5; ++i) {
          Matrix img = M * s.Q[i] * M.transpose();
          ++tot;
          ok += img == s.Q[sg[i]] || img == s.Q[sg[i]] * Scalar(Rational(-1));
        }
      }
    return ratio(ok, tot);
  });
  R.check("models.s5.printed_last_term", Source::Printed, "theta = e_1 Q_1 + ... + e_4 Q_4 + e_5 Q_1 is S5-symmetric", [&] {
    ThetaTensor lit = s5_theta_literal(s);
    int rank2 = 0;
    for (const auto& v : s5_rank2_candidates()) rank2 += pfaffian_rank(lit(v)) <= 2;
    return Outcome{rank2 == 5, "literal reading: " + ratio(rank2, 5) + " of the symmetric rank-2 points survive",
                   "e_5 (x) Q_5 is used instead"};
  }, CheckStatus::PaperDiscrepancy);
  R.equal("models.s5.rank2_locus", Source::Derived, "5", [&] {
    return str(static_cast<int>(rank2_locus(s.theta, s5_rank2_candidates()).points.size()));
  });
  R.equal("models.s5.rank2_mod_p", Source::Derived, "p=7: 5, p=11: 5, p=13: 5, p=17: 5, p=19: 5", [&] {
    std::vector<std::string> parts;
    for (std::uint64_t p : {7, 11, 13, 17, 19})
      parts.push_back("p=" + str(p) + ": " + str(static_cast<int>(rank2_points_mod_p(reduce_theta(s.theta, p)).size())));
    return join(parts);
  });
  R.equal("models.s5.cycle_transitive_mod7", Source::Derived, "true", [&] {
    auto pts = rank2_points_mod_p(reduce_theta(s.theta, 7));
    std::vector<int> cyc = {1, 2, 3, 4, 0};
    Vec x = pts.at(0);
    int found = 0;
    for (int k = 0; k < 5; ++k) {
      for (const auto& q : pts) found += projective_equal(x, q);
      x = permute_v4(cyc, x);
    }
    return str(pts.size() == 5 && found == 5 && projective_equal(x, pts[0]));
  });
  std::optional<QuadricBattery> qb;
  auto battery = [&]() -> const QuadricBattery& {
    if (!qb) qb = c4_quadrics(s);
    return *qb;
  };
  R.equal("models.s5.cq_span", Source::Printed, "4", [&] { return str(battery().span_dim); });
  R.equal("models.s5.cq_isotype", Source::Printed, "U4-", [&] {
    auto coeffs = [](const MultiPoly& q) {
      Vec v;
      for (const auto& e : monomials(10, 2)) v.push_back(q.coeff(e));
      return v;
    };
    std::vector<Vec> basis;
    std::vector<MultiPoly> bpoly;
    for (const auto& q : battery().CQ) {
      auto b = basis;
      b.push_back(coeffs(q));
      if (span_rank(b) > static_cast<int>(basis.size())) {
        basis = b;
        bpoly.push_back(q);
      }
    }
    Matrix B = Matrix::from_cols(basis, Q);
    ClassFunction ch = character_of(5, [&](const Perm& g) {
      // CQ lives on Plucker coordinates of Lambda^2 of the dual of U5
      Matrix M = s.perm_action(g).inverse().transpose();
      std::vector<MultiPoly> subs;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
          MultiPoly p(10, Q);
          for (int c = 0; c < 5; ++c)
            for (int e = c + 1; e < 5; ++e) {
              Scalar x = M(c, a) * M(e, b) - M(e, a) * M(c, b);
              if (x.is_zero()) continue;
              Exponent ex(10, 0);
              ex[pair_index(c, e)] = 1;
              p.add_term(ex, x);
            }
          subs.push_back(p);
        }
      Rational tr = 0;
      for (size_t j = 0; j < bpoly.size(); ++j) {
        Vec x;
        if (!B.solve(coeffs(bpoly[j].compose(subs)), &x)) throw Inconsistent("span of CQ_i is not S5-stable");
        tr += x[j].rational();
      }
      return tr;
    });
    return format_decomposition(5, decompose(ch));
  });
  R.check("models.s5.cq_vanish_c4", Source::Printed, "CQ_i vanish on 100/100 sampled points of C4", [&] {
    std::mt19937_64 rng(R.cfg.seed + 4);
    int n = 0, van = 0;
    while (n < 100) {
      auto U = random_plane(Q, rng);
      if (classify_pencil(s.theta, U) != PencilClass::O7) continue;
      Vec x = c4_point(isotropic_3space(s.theta, U));
      ++n;
      bool all = true;
      for (const auto& q : battery().CQ) all = all && q.eval(x).is_zero();
      van += all;
    }
    return Outcome{van == n, "CQ_i vanish on " + ratio(van, n) + " sampled points of C4",
                   "span and S5-type agree with the printed quadrics; the vanishing does not"};
  }, CheckStatus::PaperDiscrepancy);
  R.equal("models.multilinear.x3_member", Source::Trivial, "20/20", [&] {
    std::mt19937_64 rng(R.cfg.seed + 5);
    int ok = 0;
    for (int k = 0; k < 20; ++k) {
      Vec v = random_vec(4, Q, rng);
      ok += model_member(ModelId::X3, s.theta, {v}, {wedge_square(s.theta(v))});
    }
    return ratio(ok, 20);
  });
  R.equal("models.multilinear.det_s2u", Source::Derived, "det(S^2 U) = det(U)^3", [&] {
    MultiPoly a = var(4, 0, Q), b = var(4, 1, Q), c = var(4, 2, Q), dd = var(4, 3, Q);
    Scalar two(Rational(2));
    // columns: images of x^2, xy, y^2 under x -> a x + c y, y -> b x + d y
    std::vector<std::vector<MultiPoly>> m = {{a * a, a * b, b * b}, {a * c * two, a * dd + b * c, b * dd * two},
                                             {c * c, c * dd, dd * dd}};
    MultiPoly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    MultiPoly du = a * dd - b * c;
    return det == du.pow(3) ? std::string("det(S^2 U) = det(U)^3") : "det(S^2 U) = " + det.str();
  });
}

void models_properties(Runner& R, Shared& S) {
  const std::uint64_t seed = R.cfg.seed;
  const std::vector<Field> fields = {Field::rationals(), Field::cyclo12(), Field::prime(101)};
  R.equal("models.prop.field_axioms", Source::Trivial, "600/600", [&] {
    std::mt19937_64 rng(seed + 10);
    int ok = 0, tot = 0;
    for (const auto& f : fields)
      for (int k = 0; k < 200; ++k) {
        Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        bool good = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                    a + b == b + a && a * b == b * a && (a.is_zero() || a * a.inverse() == Scalar::one(f));
        ok += good;
        ++tot;
      }
    return ratio(ok, tot);
  });
  R.equal("models.prop.rank_mod_p", Source::Trivial, "90/90", [&] {
    std::mt19937_64 rng(seed + 11);
    std::uniform_int_distribution<long> d(-9, 9);
    std::uniform_int_distribution<int> rk(1, 4);
    int ok = 0, tot = 0;
    for (int k = 0; k < 30; ++k) {
      int r = rk(rng);
      std::vector<std::vector<long>> A(4, std::vector<long>(r)), B(r, std::vector<long>(6));
      for (auto& row : A)
        for (auto& x : row) x = d(rng);
      for (auto& row : B)
        for (auto& x : row) x = d(rng);
      Matrix M = Matrix::from_ints(A, Field::rationals()) * Matrix::from_ints(B, Field::rationals());
      int rq = M.rank();
      for (std::uint64_t p : {7, 11, 13}) {
        ok += M.promote(Field::prime(p)).rank() <= rq;
        ++tot;
      }
    }
    return ratio(ok, tot);
  });
  R.equal("models.prop.promotion", Source::Trivial, "50/50", [&] {
    std::mt19937_64 rng(seed + 12);
    int ok = 0;
    for (int k = 0; k < 50; ++k) {
      MultiPoly f(3, Field::rationals());
      for (const auto& e : monomials(3, 3)) f.add_term(e, random_scalar(Field::rationals(), rng));
      Vec x = random_vec(3, Field::rationals(), rng);
      Field fp = Field::prime(k % 2 ? 101 : 103);
      Vec xp;
      for (const auto& c : x) xp.push_back(promote(c, fp));
      ok += f.promote(fp).eval(xp) == promote(f.eval(x), fp);
    }
    return ratio(ok, 50);
  });
  R.equal("models.prop.wedge_square_rank", Source::Derived, "3000/3000", [&] {
    std::mt19937_64 rng(seed + 13);
    int ok = 0;
    for (const auto& f : fields)
      for (int k = 0; k < 1000; ++k) {
        Matrix w(5, 5, f);
        if (k % 3 == 0) {
          w = wedge_forms(random_vec(5, f, rng), random_vec(5, f, rng));
        } else if (k % 3 == 1) {
          w = wedge_forms(random_vec(5, f, rng), random_vec(5, f, rng)) + wedge_forms(random_vec(5, f, rng), random_vec(5, f, rng));
        } else if (k % 30 == 2) {
          // zero form
        } else {
          for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) {
              w(a, b) = random_scalar(f, rng);
              w(b, a) = -w(a, b);
            }
        }
        ok += (w.rank() <= 2) == vec_is_zero(wedge_square(w));
      }
    return ratio(ok, 3000);
  });
  R.check("models.prop.pencil_gl_invariance", Source::Derived, "class unchanged under 40 re-basings", [&] {
    const auto& s = S.s5();
    std::mt19937_64 rng(seed + 14);
    const Field Q = Field::rationals();
    auto cands = s5_rank2_candidates();
    int ok = 0;
    std::map<std::string, int> seen;
    for (int k = 0; k < 40; ++k) {
      std::vector<Vec> U = random_plane(Q, rng);
      if (k % 4 == 0) U[0] = cands[k / 4 % 5];  // through a rank-two point
      Scalar a = random_scalar(Q, rng), b = random_scalar(Q, rng), c = random_scalar(Q, rng), d = random_scalar(Q, rng);
      if ((a * d - b * c).is_zero()) a = a + Scalar::one(Q);
      if ((a * d - b * c).is_zero()) d = d + Scalar::one(Q);
      std::vector<Vec> V = {vec_add(vec_scale(U[0], a), vec_scale(U[1], b)), vec_add(vec_scale(U[0], c), vec_scale(U[1], d))};
      PencilClass x = classify_pencil(s.theta, U), y = classify_pencil(s.theta, V);
      ok += x == y;
      ++seen[to_string(x)];
    }
    std::vector<std::string> parts;
    for (const auto& [n, c] : seen) parts.push_back(n + " x" + str(c));
    return Outcome{ok == 40, "class unchanged under " + str(ok) + " re-basings", "classes seen: " + join(parts)};
  });
  R.equal("models.prop.isotropic_member", Source::Trivial, "30/30", [&] {
    const auto& s = S.s5();
    std::mt19937_64 rng(seed + 15);
    int ok = 0, n = 0;
    while (n < 30) {
      auto U = random_plane(Field::rationals(), rng);
      if (classify_pencil(s.theta, U) != PencilClass::O7) continue;
      ++n;
      ok += model_member(ModelId::X4, s.theta, U, isotropic_3space(s.theta, U));
    }
    return ratio(ok, n);
  });
}

void models_custom(Runner& R, const ThetaTensor& t, const std::vector<std::uint64_t>& primes) {
  for (auto p : primes) {
    if (t.field.kind == FieldKind::Cyclo12 && p % 12 != 1) {
      R.skip("models.custom.rank2_locus.p" + str(p), Source::Derived, "5", "p does not split Q(zeta12)");
      continue;
    }
    R.equal("models.custom.rank2_locus.p" + str(p), Source::Derived, "5",
            [&] { return str(static_cast<int>(rank2_points_mod_p(theta_mod_p(t, p)).size())); });
  }
  R.equal("models.custom.segre.corank", Source::Derived, "1", [&] { return str(segre_cubic(t, R.cfg.seed).corank); });
}

void run_models(Runner& R, Shared& S) {
  const std::string& th = R.cfg.theta;
  if (th == "default" || th == "ozeki") models_ozeki(R, S);
  if (th == "default" || th == "s5") models_s5(R, S);
  if (th.rfind("file:", 0) == 0) {
    ThetaTensor t = read_theta_file(th.substr(5));
    std::vector<std::uint64_t> primes = R.cfg.primes;
    if (primes.empty()) primes = t.field.kind == FieldKind::Q ? std::vector<std::uint64_t>{7} : std::vector<std::uint64_t>{13};
    models_custom(R, t, primes);
  }
  models_properties(R, S);
}

// ---------------------------------------------------------------- count

void count_prime(Runner& R, Shared& S, const CountTheta& ct, std::uint64_t p) {
  const std::string base = "count." + ct.label + ".p" + str(p) + ".";
  const std::vector<ModelId> cheap = {ModelId::X0, ModelId::X1, ModelId::X2, ModelId::X3};
  const std::vector<ModelId> heavy = {ModelId::X4, ModelId::X6, ModelId::X8, ModelId::X8p};
  auto all_ids = [&] {
    std::vector<std::string> ids = {"probe", "X2_fast", "X3_minus_C3", "X4_minus_C4", "flags"};
    for (auto m : cheap) ids.push_back(to_string(m));
    for (auto m : heavy) ids.push_back(to_string(m));
    return ids;
  };
  bool any = false;
  for (const auto& n : all_ids()) any = any || R.selected(base + n);
  if (!any) return;

  if (ct.t.field.kind == FieldKind::Cyclo12 && p % 12 != 1) {
    for (const auto& n : all_ids()) R.skip(base + n, Source::Derived, "", "p does not split Q(zeta12)");
    return;
  }
  std::string why;
  bool good = false;
  try {
    good = S.probe(ct.label, ct.t, p, &why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  R.add({base + "probe", good ? CheckStatus::Pass : CheckStatus::Skipped, Source::Derived, "good reduction",
         good ? "good reduction" : "bad reduction", good ? "" : why});
  if (!good) {
    for (const auto& n : all_ids())
      if (n != "probe") R.skip(base + n, Source::Derived, "", "prime excluded by the reduction probe");
    return;
  }
  const bool run_heavy = p <= kHeavyLimit;
  const PrimeCounts& c = S.counts(ct.label, ct.t, p, run_heavy);
  for (auto m : cheap) {
    if (m == ModelId::X3) continue;
    auto r = make_result(m, p, c.models.at(m));
    R.check(base + to_string(m), Source::Printed, r.expected ? str(static_cast<long long>(r.expected->eval(p))) : "",
            [&] { return Outcome{r.status == CountResult::Status::Match, str(r.measured), ""}; });
  }
  R.check(base + "X3_minus_C3", Source::Derived, str(10 * p), [&] {
    long long d = static_cast<long long>(c.models.at(ModelId::X3)) - static_cast<long long>(c.C3);
    return Outcome{d == static_cast<long long>(10 * p), str(d),
                   "|X3| = " + str(c.models.at(ModelId::X3)) + ", |C3| = " + str(c.C3)};
  });
  R.check(base + "X2_fast", Source::Derived, str(c.models.at(ModelId::X2)),
          [&] { return Outcome{c.X2_fast == c.models.at(ModelId::X2), str(c.X2_fast), ""}; });
  R.equal(base + "flags", Source::Printed, "10", [&] { return str(c.flags); });
  for (auto m : heavy) {
    auto exp = expected_polynomial(m);
    std::string e = exp ? str(static_cast<long long>(exp->eval(p))) : "";
    if (!run_heavy) {
      R.skip(base + to_string(m), Source::Printed, e, "sweeps over G(3,5) and G(2,5) run only for p <= 19");
      continue;
    }
    auto r = make_result(m, p, c.models.at(m));
    R.check(base + to_string(m), Source::Printed, e,
            [&] { return Outcome{r.status == CountResult::Status::Match, str(r.measured), ""}; });
  }
  if (run_heavy)
    R.check(base + "X4_minus_C4", Source::Derived, str(10 * (p * p + p)), [&] {
      long long d = static_cast<long long>(c.models.at(ModelId::X4)) - static_cast<long long>(c.C4);
      return Outcome{d == static_cast<long long>(10 * (p * p + p)), str(d), ""};
    });
  else
    R.skip(base + "X4_minus_C4", Source::Derived, str(10 * (p * p + p)), "needs the G(3,5) sweep");
}

void run_count(Runner& R, Shared& S) {
  R.equal("count.grassmannian.g24_f2", Source::Trivial, "35", [] { return str(count_grassmannian(2, 4, 2)); });
  R.equal("count.grassmannian.g35_f2", Source::Trivial, "155", [] { return str(count_grassmannian(3, 5, 2)); });
  R.equal("count.grassmannian.g25_f7", Source::Derived, str(modp::gaussian_binomial(5, 2, 7)),
          [] { return str(count_grassmannian(2, 5, 7)); });

  for (const auto& ct : S.count_thetas()) {
    for (auto p : ct.primes) count_prime(R, S, ct, p);

    if (ct.t.field.kind == FieldKind::Q) {
      std::uint64_t p = ct.primes.front();
      R.check("count." + ct.label + ".cubic_zeros_p" + str(p), Source::Derived, "|C3|", [&] {
        std::string why;
        if (!S.probe(ct.label, ct.t, p, &why)) return Outcome{false, "bad reduction", why};
        const auto& c = S.counts(ct.label, ct.t, p, false);
        SegreCubic cub = segre_cubic(ct.t, R.cfg.seed);
        u64 z = count_projective_zeros(cub.f.promote(Field::prime(p)), R.cfg.threads);
        return Outcome{z == c.C3, str(z), "|C3| = " + str(c.C3)};
      });
    }
    if (ct.label == "ozeki") {
      for (auto p : ct.primes) {
        if (p % 12 != 1) continue;
        R.equal("count.ozeki.p" + str(p) + ".flag_points", Source::Printed, "A1 = e_pq mod p", [&] {
          ThetaTensor tp = theta_mod_p(ct.t, p);
          auto flags = dp5_flags(tp);
          const auto& loc = S.ozeki().loc;
          std::uint64_t z = primitive_12th_root(p);
          int hit = 0;
          for (const auto& [k, e] : loc.e) {
            Vec r = reduce_vec(e, p, z);
            for (const auto& f : flags) hit += projective_equal(f.a1, r);
          }
          return hit == 10 && flags.size() == 10 ? std::string("A1 = e_pq mod p")
                                                 : "matched " + str(hit) + " of " + str(static_cast<int>(flags.size()));
        });
      }
    }
  }

  const bool s5_active = R.cfg.theta == "default" || R.cfg.theta == "s5";
  if (s5_active) {
    const ThetaTensor& t = S.s5().theta;
    if (R.cfg.primes.empty()) {
      R.check("count.s5.fit_X4", Source::Printed, "1 + 6L + 17L^2 + 6L^3 + L^4", [&] {
        std::vector<u64> ps = {7, 11, 13, 17, 19}, vals;
        for (auto p : ps) {
          std::string why;
          if (!S.probe("s5", t, p, &why)) throw std::runtime_error("bad reduction at " + str(p));
          vals.push_back(p <= 13 ? S.counts("s5", t, p, true).models.at(ModelId::X4)
                                 : sweep_g35(raw_theta(theta_mod_p(t, p)), R.cfg.threads).X4);
        }
        auto c = fit_polynomial(ps, vals);
        std::vector<std::string> parts;
        Rational sum = 0;
        for (size_t i = 0; i < c.size(); ++i) {
          parts.push_back(str(c[i]));
          sum += c[i];
        }
        bool ok = c.size() == 5 && c[0] == 1 && c[1] == 6 && c[2] == 17 && c[3] == 6 && c[4] == 1;
        return Outcome{ok, "coefficients " + join(parts), "Betti sum " + str(sum) + " from primes 7, 11, 13, 17, 19"};
      });
    } else {
      R.skip("count.s5.fit_X4", Source::Printed, "1 + 6L + 17L^2 + 6L^3 + L^4", "needs the default prime set");
    }
    R.check("count.s5.fibration_sanity_p5", Source::Derived, "double sweep = fibration count", [&] {
      RawTheta r = raw_theta(theta_mod_p(t, 5));
      u64 a = x4_double_sweep(r, R.cfg.threads), b = sweep_g35(r, R.cfg.threads).X4;
      return Outcome{a == b, "double sweep " + str(a) + ", fibration " + str(b), "p = 5 has bad reduction; the identity is purely combinatorial"};
    });
    R.check("count.prop.thread_determinism", Source::Trivial, "identical counts with 1 and 4 threads at p = 7", [&] {
      ThetaTensor tp = theta_mod_p(t, 7);
      PrimeCounts a = count_all(tp, 1, true), b = count_all(tp, 4, true);
      bool ok = a.models == b.models && a.C3 == b.C3 && a.C4 == b.C4 && a.flags == b.flags && a.X2_fast == b.X2_fast;
      return Outcome{ok, ok ? "identical counts with 1 and 4 threads at p = 7" : "counts differ", ""};
    });
  }
}

// ---------------------------------------------------------------- chow

void run_chow(Runner& R, Shared& S) {
  R.equal("chow.schubert.g24_sigma1_squared", Source::Trivial, "s11 + s2",
          [] { return schubert_product(sigma(2, 4, {1}), sigma(2, 4, {1})).str(); });
  R.equal("chow.schubert.g24_sigma1_4", Source::Derived, "2", [] {
    ChowElement s = sigma(2, 4, {});
    for (int i = 0; i < 4; ++i) s = schubert_product(s, sigma(2, 4, {1}));
    return str(integrate(s));
  });
  auto g25 = [](const Partition& l) {
    ChowElement s = sigma(2, 5, l);
    for (int i = 0; i < 4; ++i) s = schubert_product(s, sigma(2, 5, {1}));
    return str(integrate(s));
  };
  R.equal("chow.schubert.g25_sigma2_sigma1_4", Source::Printed, "3", [&] { return g25({2}); });
  R.equal("chow.schubert.g25_sigma11_sigma1_4", Source::Printed, "2", [&] { return g25({1, 1}); });
  R.equal("chow.chern.c_Q_g25", Source::Printed, "1 + s1 + s2 + s3", [] { return chern_quotient_g25().str(); });
  R.equal("chow.chern.c_U_g25", Source::Printed, "1 - s1 + s11", [] {
    Ambient a = Ambient::grassmannian(2, 5);
    return to_chow(2, 5, chern(a, taut(a, 0))).str();
  });
  R.equal("chow.weak_fano_integral", Source::Printed, "2", [] { return str(weak_fano_integral()); });
  R.equal("chow.octic_integral", Source::Printed, "8", [] { return str(octic_integral()); });

  std::optional<PorteousResult> por;
  auto porteous = [&]() -> const PorteousResult& {
    if (!por) por = porteous_c4();
    return *por;
  };
  R.check("chow.porteous.class", Source::Printed, "3s11 + 2s2", [&] {
    std::string c = porteous().cls_transposed.str();
    return Outcome{c == "3s11 + 2s2", c, "labels read on G(2,5); on G(3,5) the class is " + porteous().cls.str()};
  });
  R.equal("chow.porteous.degree", Source::Printed, "12", [&] { return str(porteous().degree); });
  R.equal("chow.porteous.rank1_codimension", Source::Printed, "6", [&] { return str(porteous().rank1_codimension); });

  static const char* hnames[5] = {"H1^4", "H1^3H2", "H1^2H2^2", "H1H2^3", "H2^4"};
  static const int hexp[5] = {2, 6, 13, 14, 12};
  for (int i = 0; i < 5; ++i)
    R.equal(std::string("chow.x4.") + hnames[i], Source::Printed, str(hexp[i]), [&] { return str(S.x4().h[i]); });
  R.equal("chow.x4.K4", Source::Printed, "172", [&] { return str(S.x4().k4); });
  R.equal("chow.x4.chi_top", Source::Derived, "31", [&] { return str(S.x4().chi_top); });
  R.equal("chow.x4.degree_crosscheck", Source::Derived, "H2^4 = deg C4", [&] {
    return S.x4().h[4] == porteous().degree ? std::string("H2^4 = deg C4")
                                             : "H2^4 = " + str(S.x4().h[4]) + ", deg C4 = " + str(porteous().degree);
  });
  R.equal("chow.x8p.anticanonical", Source::Derived, "3*h1 + 3*h2", [&] { return S.x4().x8p_minus_k; });
  R.equal("chow.prop.k4_binomial", Source::Trivial, "172", [&] { return str(S.x4().k4_binomial); });
  R.equal("chow.prop.whitney", Source::Trivial, "true", [&] {
    std::string why;
    bool ok = whitney_holds(50, R.cfg.seed + 20, &why);
    return ok ? std::string("true") : why;
  });
  R.equal("chow.prop.pairing_unimodular", Source::Trivial, "true", [] {
    return str(pairing_unimodular(2, 4) && pairing_unimodular(2, 5) && pairing_unimodular(3, 5));
  });
  R.equal("chow.prop.lr_nonnegative", Source::Trivial, "true", [] {
    return str(structure_constants_nonnegative(2, 4) && structure_constants_nonnegative(2, 5) &&
                structure_constants_nonnegative(3, 5));
  });

  // blow-up route
  std::optional<LedgerAudit> la;
  auto audit = [&]() -> const LedgerAudit& {
    if (!la) la = blowup_ledger_audit(S.x4().h);
    return *la;
  };
  R.check("chow.ledger.segre_class", Source::Derived, "s_2(N_p) = 3 sum l^2", [&] {
    const auto& r = audit().readings.back();
    return Outcome{r.alpha == 3, "s_2(N_p) = " + str(r.alpha) + " sum l^2", "s(N_p) = " + r.s.str()};
  });
  R.equal("chow.ledger.h_numbers", Source::Derived, "2, 6, 13, 14, 12", [&] {
    std::vector<std::string> v;
    for (const auto& x : audit().h_numbers) v.push_back(str(x));
    return join(v);
  });
  R.equal("chow.ledger.s5_invariant", Source::Derived, "true", [&] { return str(audit().s5_invariant); });
  R.equal("chow.ledger.projection_formula", Source::Derived, "true", [&] { return str(audit().projection_formula); });
  R.equal("chow.ledger.vanishing", Source::Printed, "true", [&] { return str(audit().vanishing_rules); });
  R.equal("chow.ledger.f4_sum", Source::Printed, "60", [&] { return str(audit().f4_sum); });
  R.equal("chow.ledger.self_consistent", Source::Derived, "true", [&] { return str(audit().self_consistent()); });
  R.equal("chow.prop.ledger_determinism", Source::Trivial, "true", [&] {
    LedgerAudit b = blowup_ledger_audit(S.x4().h);
    return str(b.recomputed == audit().recomputed && b.h_numbers == audit().h_numbers);
  });

  // K3 lattice from the printed table; the square map on the recomputed one
  std::optional<SquareMapReport> k3;
  auto k3p = [&]() -> const SquareMapReport& {
    if (!k3) k3 = k3_and_square_map(printed_table());
    return *k3;
  };
  R.equal("chow.k3.lattice", Source::Printed, "h1^2=6, h2^2=14, h1h2=13, h1f=1, h2f=5, f_if_j=-2delta", [&] {
    const auto& g = k3p().k3;
    bool ff = true;
    for (int i = 2; i < 7; ++i)
      for (int j = 2; j < 7; ++j) ff = ff && g[i][j] == (i == j ? -2 : 0);
    bool hf = true;
    for (int i = 2; i < 7; ++i) hf = hf && g[0][i] == 1 && g[1][i] == 5;
    std::ostringstream s;
    s << "h1^2=" << g[0][0] << ", h2^2=" << g[1][1] << ", h1h2=" << g[0][1] << ", h1f="
      << (hf ? "1" : "?") << ", h2f=" << (hf ? "5" : "?") << ", f_if_j=" << (ff ? "-2delta" : "?");
    return s.str();
  });
  R.equal("chow.square.recomputed_rank", Source::Derived, "17",
          [&] { return str(k3_and_square_map(audit().recomputed).gram_rank); });
  R.equal("chow.square.recomputed_kernel", Source::Derived, "U4",
          [&] { return k3_and_square_map(audit().recomputed).kernel_type; });
}

// ---------------------------------------------------------------- rep

void run_rep(Runner& R, Shared&) {
  auto dec = [](const ClassFunction& c) { return format_decomposition(5, decompose(c)); };
  R.equal("rep.s5.sym2_U4", Source::Printed, "U1+U4+U5", [&] { return dec(sym_square(s5_irrep("U4"))); });
  R.equal("rep.s5.alt2_U5", Source::Printed, "U4-+U6", [&] { return dec(alt_square(s5_irrep("U5"))); });
  R.equal("rep.s5.alt2_U4", Source::Printed, "U6", [&] { return dec(alt_square(s5_irrep("U4"))); });
  R.equal("rep.s5.mult_U4m_in_S2L2U5", Source::Printed, "1",
          [&] { return str(s5_multiplicities(sym_square(alt_square(s5_irrep("U5")))).at("U4-")); });
  R.equal("rep.s5.sym_plus_alt", Source::Trivial, "true", [&] {
    bool ok = true;
    for (const auto& l : {"U4", "U5", "U6"}) {
      ClassFunction c = s5_irrep(l);
      ok = ok && (sym_square(c) + alt_square(c)).v == (c * c).v;
    }
    return str(ok);
  });
  R.equal("rep.s5.permutation_5", Source::Trivial, "U1+U4", [&] { return dec(permutation_character(5)); });

  std::optional<SquareMapReport> sq;
  auto square = [&]() -> const SquareMapReport& {
    if (!sq) sq = k3_and_square_map(printed_table());
    return *sq;
  };
  R.equal("rep.pic_type", Source::Printed, "2U1+U4", [&] { return square().pic_type; });
  R.equal("rep.sym2_pic_type", Source::Printed, "4U1+3U4+U5", [&] { return square().sym2_type; });
  R.equal("rep.square.image_dim", Source::Printed, "17", [&] { return str(square().gram_rank); });
  R.equal("rep.square.kernel", Source::Printed, "U4", [&] { return square().kernel_type; });
  R.equal("rep.a2_type", Source::Printed, "4U1+2U4+U5", [&] { return square().image_type; });

  R.equal("rep.prop.orthogonality", Source::Trivial, "true",
          [] { return str(orthogonality_holds(character_table(5)) && orthogonality_holds(character_table(6))); });

  R.equal("rep.bott.U_dual_g24", Source::Trivial, "h0=4", [] {
    BottResult b = bott(GrassWeight{2, 4, {1, 0, 0, 0}});
    return b.zero ? std::string("acyclic") : "h" + str(b.degree) + "=" + str(b.dim);
  });
  R.equal("rep.bott.O11", Source::Printed, "h0=60", [] { return format_cohomology(cohomology(bundle_O(1, 1))); });
  R.equal("rep.bott.E_dual_11", Source::Printed, "h0=20",
          [] { return format_cohomology(cohomology(tensor(bundle_E_dual(), bundle_O(1, 1)))); });
  R.equal("rep.koszul.cauchy_ranks", Source::Trivial, "1, 6, 15, 20, 15, 6, 1", [] {
    std::vector<std::string> v;
    for (int k = 0; k <= 6; ++k) v.push_back(str(rank(lambda_E_dual(k))));
    return join(v);
  });

  std::optional<KoszulReport> kr;
  auto kos = [&]() -> const KoszulReport& {
    if (!kr) kr = koszul_sections_and_rigidity();
    return *kr;
  };
  R.equal("rep.koszul.h0_anticanonical", Source::Printed, "40", [&] { return str(kos().h0_anticanonical); });
  R.check("rep.koszul.twisted_vanishing", Source::Printed, "Lambda^k E^v(1,1) acyclic for k >= 2", [&] {
    std::vector<std::string> v;
    for (size_t k = 0; k < kos().twisted.size(); ++k) v.push_back("k=" + str(static_cast<int>(k)) + ": " + format_cohomology(kos().twisted[k]));
    return Outcome{kos().twisted_vanishing, join(v, "; "), ""};
  });
  R.equal("rep.koszul.chi_anticanonical", Source::Derived, "40", [&] { return str(kos().chi_anticanonical); });
  R.check("rep.rigidity.tangent_terms", Source::Printed, "H^{i+1}(TG (x) Lambda^i E^v) = 0 for all i", [&] {
    std::vector<std::string> v;
    for (size_t k = 0; k < kos().tg.size(); ++k) v.push_back("i=" + str(static_cast<int>(k)) + ": " + format_cohomology(kos().tg[k]));
    return Outcome{kos().tg_vanishing, join(v, "; "), ""};
  });
  R.check("rep.rigidity.end0_acyclic", Source::Printed, "acyclic",
          [&] { return Outcome{kos().end0_acyclic, format_cohomology(kos().end0), ""}; });
  R.check("rep.rigidity.e_terms", Source::Printed, "H^i(E (x) Lambda^{i+1} E^v) = 0 for i > 0", [&] {
    std::vector<std::string> v;
    for (size_t k = 0; k < kos().e_terms.size(); ++k) v.push_back("k=" + str(static_cast<int>(k)) + ": " + format_cohomology(kos().e_terms[k]));
    return Outcome{kos().e_required, join(v, "; "), kos().e_acyclic ? "every term with k >= 2 is acyclic" : ""};
  });
  R.equal("rep.rigidity.chi_TX", Source::Printed, "0", [&] { return str(kos().chi_TX); });
  R.equal("rep.rigidity.h0_E_restricted", Source::Derived, "39", [&] { return str(kos().h0_E_restricted); });

  R.equal("rep.prop.serre_duality", Source::Trivial, "40/40", [&] {
    std::mt19937_64 rng(R.cfg.seed + 30);
    std::uniform_int_distribution<int> d(-4, 4);
    int ok = 0, tot = 0;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}})
      for (int t = 0; t < 20; ++t) {
        GrassWeight w{k, n, std::vector<int>(n)};
        for (int& x : w.w) x = d(rng);
        std::sort(w.w.begin(), w.w.begin() + k, std::greater<int>());
        std::sort(w.w.begin() + k, w.w.end(), std::greater<int>());
        GrassWeight v = dual(w), kc = canonical_weight(k, n);
        for (int i = 0; i < n; ++i) v.w[i] += kc.w[i];
        BottResult a = bott(w), b = bott(v);
        const int dim = k * (n - k);
        ok += a.zero ? b.zero : (!b.zero && b.degree == dim - a.degree && b.dim == a.dim);
        ++tot;
      }
    return ratio(ok, tot);
  });
}

// ---------------------------------------------------------------- config

void run_config(Runner& R, Shared& S) {
  R.equal("config.matchings.count", Source::Trivial, "15", [] { return str(static_cast<int>(all_matchings().size())); });
  R.equal("config.matchings.shared_pairs", Source::Trivial, "0 or 1", [] {
    auto ms = all_matchings();
    bool ok = true;
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j) ok = ok && shared_pairs(ms[i], ms[j]) <= 1;
    return ok ? std::string("0 or 1") : std::string("some pair of matchings shares two pairs");
  });
  R.equal("config.cremona.configuration", Source::Printed, "(15_3,15_3)",
          [] { return cremona_richmond().is_configuration(3, 3) ? std::string("(15_3,15_3)") : std::string("not (15_3,15_3)"); });
  R.equal("config.cremona.examples", Source::Printed, "0, 1", [] {
    return str(shared_pairs(parse_matching("(12|34|56)"), parse_matching("(13|25|46)"))) + ", " +
           str(shared_pairs(parse_matching("(12|34|56)"), parse_matching("(12|35|46)")));
  });
  R.check("config.cremona.self_dual", Source::Printed, "explicit isomorphism with the dual", [] {
    auto cr = cremona_richmond();
    auto iso = find_isomorphism(cr, cr.transpose());
    bool ok = iso && verify_isomorphism(cr, cr.transpose(), *iso);
    return Outcome{ok, ok ? "explicit isomorphism with the dual" : "none found", ""};
  });

  std::vector<Pentad> pentads = enumerate_pentads();
  R.equal("config.pentads.count", Source::Printed, "6", [&] { return str(static_cast<int>(pentads.size())); });
  R.check("config.pentads.printed_table", Source::Printed, "all 6 printed columns found", [&] {
    auto pos = match_printed(pentads, printed_pentads());
    std::vector<std::string> v;
    bool ok = pos.size() == 6;
    for (int x : pos) {
      v.push_back(str(x));
      ok = ok && x >= 0;
    }
    return Outcome{ok, ok ? "all 6 printed columns found" : "missing columns", "positions " + join(v)};
  });
  R.equal("config.pentads.first_column", Source::Printed, "(12|34|56) (13|25|46) (14|26|35) (15|24|36) (16|23|45)", [] {
    Pentad p = printed_pentads().at(0);
    std::vector<std::string> v;
    for (const auto& m : p) v.push_back(m.str());
    auto found = enumerate_pentads();
    bool in = std::find(found.begin(), found.end(), p) != found.end();
    return in ? join(v, " ") : std::string("first printed column is not a pentad");
  });
  R.equal("config.prop.matching_in_two_pentads", Source::Derived, "true", [&] {
    std::map<Matching, int> c;
    for (const auto& p : pentads)
      for (const auto& m : p) ++c[m];
    bool ok = c.size() == 15;
    for (const auto& [m, n] : c) ok = ok && n == 2;
    return str(ok);
  });

  std::optional<OuterReport> orp;
  auto outer = [&]() -> const OuterReport& {
    if (!orp) orp = s6_outer_check(pentads, R.cfg.seed + 40);
    return *orp;
  };
  R.equal("config.s6.image_of_12", Source::Printed, "2,2,2", [&] {
    std::vector<std::string> v;
    for (int x : outer().image_of_12_type) v.push_back(str(x));
    return join(v, ",");
  });
  R.equal("config.s6.bijective", Source::Derived, "true", [&] { return str(outer().bijective); });
  R.equal("config.prop.homomorphism", Source::Derived, "true", [&] { return str(outer().homomorphism); });
  R.equal("config.s6.outer", Source::Printed, "true", [&] { return str(outer().transpositions_to_triple); });
  R.equal("config.s6.transitive", Source::Printed, "true", [&] { return str(outer().transitive); });
  R.equal("config.s6.stabilizer_orders", Source::Printed, "120", [&] {
    std::set<int> s(outer().stabilizer_orders.begin(), outer().stabilizer_orders.end());
    std::vector<std::string> v;
    for (int x : s) v.push_back(str(x));
    return join(v);
  });
  R.equal("config.s6.stabilizer_no_transposition", Source::Derived, "true",
          [&] { return str(outer().stabilizers_without_transpositions); });
  R.equal("config.s6.six_cycle_order", Source::Derived, "6", [&] {
    return str(perm_order(pentad_action(Perm{1, 2, 3, 4, 5, 0}, pentads)));
  });
  R.equal("config.s6.identity", Source::Trivial, "true", [&] {
    Perm id = {0, 1, 2, 3, 4, 5};
    return str(pentad_action(id, pentads) == id);
  });

  R.equal("config.ten_five.abstract", Source::Printed, "(10_3,5_6)", [] {
    auto tf = abstract_ten_five();
    // incidence is points x hyperplanes: each point on 6 hyperplanes, each hyperplane through 3 points
    return tf.incidence.is_configuration(6, 3) ? std::string("(10_3,5_6)") : std::string("not (10_3,5_6)");
  });
  R.equal("config.petersen", Source::Printed, "10 vertices, 15 edges, 3-regular, girth 5", [] {
    auto g = petersen(abstract_ten_five());
    return str(g.vertices) + " vertices, " + str(g.edges) + " edges, " + (g.regular3 ? "3-regular" : "irregular") +
           ", girth " + str(g.girth);
  });
  if (R.cfg.theta == "default" || R.cfg.theta == "ozeki")
    R.equal("config.ten_five.ozeki", Source::Derived, "equal to the abstract incidence", [&] {
      const auto& d = S.ozeki();
      auto tz = ozeki_ten_five(d.t, d.loc);
      return tz.incidence.in == abstract_ten_five().incidence.in ? std::string("equal to the abstract incidence")
                                                                   : std::string("differs");
    });
}

// ---------------------------------------------------------------- audit

void run_audit(Runner& R, Shared& S) {
  std::optional<LedgerAudit> la;
  auto audit = [&]() -> const LedgerAudit& {
    if (!la) la = blowup_ledger_audit(S.x4().h);
    return *la;
  };
  auto disc = [](bool agree) { return agree ? CheckStatus::Pass : CheckStatus::PaperDiscrepancy; };

  {
    // hard failure when the recomputed table is not self-consistent
    R.check("audit.ledger.self_consistent", Source::Derived,
            "S5-invariant, projection formula, vanishing rules, H-numbers reproduced", [&] {
              const auto& a = audit();
              std::vector<std::string> v;
              v.push_back("s5 " + str(a.s5_invariant));
              v.push_back("projection " + str(a.projection_formula));
              v.push_back("vanishing " + str(a.vanishing_rules));
              v.push_back("h-numbers " + str(a.h_match));
              return Outcome{a.self_consistent(), join(v), "alpha = " + str(a.alpha)};
            });
  }
  auto segre_s2 = [](const SegreReading& r) { return str(r.alpha) + " sum l^2"; };
  R.check("audit.ledger.segre_printed", Source::Printed, "s_2(N_p) = 2 sum l^2", [&] {
    const auto& r = audit().readings;
    return Outcome{r[0].alpha == r.back().alpha, "s_2(N_p) = " + segre_s2(r.back()),
                   "from N_p = Q (x) O(-sum l): " + r.back().s.str()};
  }, CheckStatus::PaperDiscrepancy);
  R.check("audit.ledger.segre_displayed_product", Source::Printed, "displayed product gives s_2(N_p) = 2 sum l^2", [&] {
    const auto& r = audit().readings;
    return Outcome{r[1].alpha == r[0].alpha, "displayed product gives s_2(N_p) = " + segre_s2(r[1]), r[1].s.str()};
  }, CheckStatus::PaperDiscrepancy);

  auto slug = [](std::string s) {
    std::string o;
    for (char c : s) {
      if (std::isalnum(static_cast<unsigned char>(c))) o += c;
      else if (c == '^') o += "";
      else if (!o.empty() && o.back() != '_') o += '_';
    }
    while (!o.empty() && o.back() == '_') o.pop_back();
    return o;
  };
  {
    for (const auto& e : audit().g1_numbers)
      R.add({"audit.ledger.g1." + slug(e.name), disc(e.agrees()), Source::Printed, str(e.printed), str(e.recomputed),
             e.agrees() ? "" : "push-pull with s_2(N_p) = " + str(audit().alpha) + " sum l^2"});
    for (const auto& e : audit().table)
      R.add({"audit.ledger.x4." + slug(e.name), disc(e.agrees()), Source::Printed, str(e.printed), str(e.recomputed),
             e.agrees() ? "" : "recomputed through c*F_p = F1_p + sum E1_pq"});
  }
  R.check("audit.ledger.f4_forced", Source::Printed, "(sum F)^4 = 60 forced by H2^4 = 12", [&] {
    const auto& a = audit();
    bool ok = a.f4_sum_forced == 60 && a.f4_sum == 60;
    return Outcome{ok, "forced " + str(a.f4_sum_forced) + ", recomputed " + str(a.f4_sum), ""};
  });
  R.check("audit.ledger.printed_table_consistency", Source::Printed, "(sum F)^4 = 60 from the printed F-numbers", [&] {
    const auto& a = audit();
    return Outcome{a.f4_sum_printed == 60, "(sum F)^4 = " + str(a.f4_sum_printed) + " from the printed F-numbers",
                   "F_p^4 = 12, F_p^3F_q = -2, F_p^2F_q^2 = 1 give 60 - 160 + 60"};
  }, CheckStatus::PaperDiscrepancy);
  R.check("audit.ledger.pullback_fp4", Source::Printed, "(c*F_p)^4 = -4", [&] {
    const auto& a = audit();
    return Outcome{a.pullback_fp4 == -4, "(c*F_p)^4 = " + str(a.pullback_fp4),
                   "top self-intersections of pullbacks are birational invariants, so (c*F_p)^4 = F_p^4"};
  }, CheckStatus::PaperDiscrepancy);
  R.check("audit.ledger.readings", Source::Derived, "only the exact-sequence reading gives H2^4 = 12", [&] {
    std::vector<std::string> v;
    int hits = 0;
    bool exact_ok = false;
    for (const auto& r : audit().alternatives) {
      v.push_back(r.name + ": H2^4 = " + str(r.h2_4) + ", rank " + str(r.gram_rank));
      if (r.h2_4 == 12) {
        ++hits;
        exact_ok = r.name == "exact_sequence";
      }
    }
    return Outcome{hits == 1 && exact_ok, join(v, "; "), ""};
  });

  // Grothendieck relation on the S5 form
  R.check("audit.grothendieck.constant_c", Source::Derived, "c constant across p = 7, 11, 13", [&] {
    const ThetaTensor& t = S.s5().theta;
    std::vector<PrimeCounts> pcs;
    for (std::uint64_t p : {7, 11, 13}) pcs.push_back(S.counts("s5", t, p, true));
    GrothendieckAudit g = audit_grothendieck(pcs);
    std::vector<std::string> v;
    for (const auto& r : g.rows) v.push_back("p=" + str(r.p) + ": c=" + str(r.c));
    return Outcome{g.constant_c, join(v), ""};
  });
  R.check("audit.grothendieck.printed_relation", Source::Printed, "[X6] + 5 L^3 = [G(3,5)] + L [X4]", [&] {
    const ThetaTensor& t = S.s5().theta;
    std::vector<PrimeCounts> pcs;
    for (std::uint64_t p : {7, 11, 13}) pcs.push_back(S.counts("s5", t, p, true));
    GrothendieckAudit g = audit_grothendieck(pcs);
    bool ok = g.constant_c && g.c == 5;
    return Outcome{ok, g.constant_c ? "[X6] + " + str(g.c) + " L^3 = [G(3,5)] + L [X4]" : "no constant coefficient",
                   "lhs - rhs with [Y0] = 5 equals " + str(g.discrepancy_l3) + " L^3"};
  }, CheckStatus::PaperDiscrepancy);
  R.equal("audit.grothendieck.g35_term", Source::Trivial, "true", [] {
    bool ok = true;
    for (std::uint64_t p : {7, 11, 13}) ok = ok && count_grassmannian(3, 5, p) == modp::gaussian_binomial(5, 3, p);
    return str(ok);
  });
}

}  // namespace

Report run_checks(const RunConfig& cfg) {
  validate(cfg);
  Runner R(cfg);
  Shared S(cfg);
  std::vector<std::string> primes;
  for (auto p : cfg.primes) primes.push_back(str(p));
  R.report.config["theta"] = cfg.theta;
  R.report.config["primes"] = primes.empty() ? "default" : join(primes, ",");
  R.report.config["only"] = cfg.only.empty() ? "*" : join(cfg.only, ",");
  R.report.config["suites"] = join(cfg.suites, ",");
  R.report.config["seed"] = str(cfg.seed);

  const std::vector<std::pair<std::string, std::function<void(Runner&, Shared&)>>> suites = {
      {"config", run_config}, {"rep", run_rep}, {"chow", run_chow},
      {"models", run_models}, {"count", run_count}, {"audit", run_audit}};
  for (const auto& [name, fn] : suites) {
    if (!R.suite_selected(name)) continue;
    try {
      fn(R, S);
    } catch (const std::exception& e) {
      R.add({name + ".suite", CheckStatus::Fail, Source::Derived, "suite completes", std::string("error: ") + e.what(), ""});
    }
  }
  std::stable_sort(R.report.records.begin(), R.report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return R.report;
}

}  // namespace fano
