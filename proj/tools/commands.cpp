#include "commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "hyperspec/charpoly.hpp"
#include "hyperspec/enumeration.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/labeling.hpp"
#include "hyperspec/lift.hpp"
#include "hyperspec/roots.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/tns.hpp"
#include "hyperspec/trace.hpp"
#include "hyperspec/witness.hpp"

namespace hyperspec::cli {

Json CommandReport::to_json() const {
  Json j;
  j["command"] = command;
  j["digest"] = digest;
  j["exit_code"] = exit_code;
  j["warnings"] = warnings;
  j["payload"] = payload;
  return j;
}

CommandReport CommandReport::from_json(const Json& j) {
  CommandReport r;
  r.command = j.at("command").get<std::string>();
  r.digest = j.at("digest").get<std::string>();
  r.exit_code = j.at("exit_code").get<int>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.payload = j.at("payload");
  return r;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

namespace {

struct Options {
  bool json = false;
  double tol = 1e-10;
  int max_iter = 100000;
  std::uint64_t seed = 1;
  std::string file;
  std::string format = "auto";
  std::string tensor = "adj";
  int d = 0;
  bool formula = false;
  int t = 0;
  bool n2 = false;
  bool regular = false;
  bool witness = false;
  int k = 0;
  int nmax = 0;
  int degree = -1;
  std::string out;
  std::vector<std::string> files;
};

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json rational_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

Json complex_list(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(format_complex(z));
  return a;
}

Json one_based(const std::vector<Vertex>& v) {
  Json a = Json::array();
  for (Vertex x : v) a.push_back(x + 1);
  return a;
}

Json eigenpair_json(const EigenPair& p) {
  return Json{{"lambda", format_complex(p.lambda)}, {"residual", format_real(p.residual)}, {"x", complex_list(p.x)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Input = std::variant<Hypergraph, Tensor<Rational>, Tensor<Complex>>;

bool wants_tns(const Options& o, const std::string& path) {
  if (o.format == "tns") return true;
  if (o.format == "hgf") return false;
  if (o.format != "auto") throw PreconditionError("unknown format " + o.format);
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".tns") == 0;
}

Input load(const Options& o, const std::string& path, CommandReport& r) {
  const std::string text = read_file(path);
  r.digest = fnv1a_hex(text);
  if (!wants_tns(o, path)) return parse_hgf(text);
  auto t = parse_tns(text);
  if (auto* q = std::get_if<Tensor<Rational>>(&t)) return std::move(*q);
  return std::get<Tensor<Complex>>(std::move(t));
}

Hypergraph load_hypergraph(const Options& o, const std::string& path, CommandReport& r) {
  auto in = load(o, path, r);
  if (auto* h = std::get_if<Hypergraph>(&in)) return std::move(*h);
  throw PreconditionError(r.command + " needs a hypergraph (HGF) input");
}

TensorKind parse_kind(const std::string& s) {
  if (s == "adj") return TensorKind::Adjacency;
  if (s == "lap") return TensorKind::Laplacian;
  if (s == "slap") return TensorKind::SignlessLaplacian;
  throw PreconditionError("unknown tensor kind " + s + " (expected adj, lap or slap)");
}

Tensor<Rational> exact_tensor(const Input& in, TensorKind kind) {
  if (auto* h = std::get_if<Hypergraph>(&in)) return hypergraph_tensor(*h, kind);
  if (auto* t = std::get_if<Tensor<Rational>>(&in)) return *t;
  throw PreconditionError("command needs an exact rational tensor");
}

// Tr_d of A_H: zero below k, k^(k-1) (k-1)^(n-k) |E| at d = k.
Rational adjacency_trace_formula(const Hypergraph& h, int d) {
  if (d < 1 || d > h.k()) throw PreconditionError("trace formula holds for 1 <= d <= k");
  if (d < h.k()) return 0;
  return rational_pow(Rational(h.k()), h.k() - 1) * rational_pow(Rational(h.k() - 1), h.n() - h.k()) *
         Rational(static_cast<long>(h.m()));
}

Rational trace_formula(const Hypergraph& h, TensorKind kind, int d) {
  if (kind == TensorKind::Adjacency) return adjacency_trace_formula(h, d);
  return laplacian_trace_formula(h, d, kind == TensorKind::SignlessLaplacian);
}

void cmd_info(const Options& o, CommandReport& r) {
  auto in = load(o, o.file, r);
  if (auto* h = std::get_if<Hypergraph>(&in)) {
    const auto deg = degrees(*h);
    r.payload["format"] = "hgf";
    r.payload["k"] = h->k();
    r.payload["n"] = h->n();
    r.payload["m"] = h->m();
    r.payload["degrees"] = deg.values();
    r.payload["connected"] = is_connected(*h);
    r.payload["components"] = connected_components(*h).size();
    r.payload["core_vertices"] = one_based(core_vertices(*h));
    return;
  }
  auto describe = [&](const auto& t, const char* field) {
    r.payload["format"] = "tns";
    r.payload["order"] = t.order();
    r.payload["dim"] = t.dim();
    r.payload["nonzeros"] = t.nonzeros().size();
    r.payload["field"] = field;
    r.payload["symmetric"] = t.is_symmetric();
  };
  if (auto* q = std::get_if<Tensor<Rational>>(&in)) {
    describe(*q, "rational");
  } else {
    describe(std::get<Tensor<Complex>>(in), "complex");
  }
}

void cmd_trace(const Options& o, CommandReport& r) {
  auto in = load(o, o.file, r);
  const TensorKind kind = parse_kind(o.tensor);
  const auto* h = std::get_if<Hypergraph>(&in);
  if (o.formula) {
    if (h == nullptr) throw PreconditionError("--formula needs a hypergraph input");
    if (o.d > h->k()) throw PreconditionError("--formula holds only for d <= k");
  }
  if (h != nullptr) {
    if (h->n() > TraceBudget{}.max_dim || o.d * (h->k() - 1) > TraceBudget{}.max_arcs) {
      throw BudgetExceeded("trace enumeration limited to n <= " + std::to_string(TraceBudget{}.max_dim) +
                           " and d(k-1) <= " + std::to_string(TraceBudget{}.max_arcs));
    }
  }
  const Tensor<Rational> t = exact_tensor(in, kind);
  const Rational tr = trace_d(t, o.d);
  r.payload["tensor"] = h ? to_string(kind) : "tns";
  r.payload["d"] = o.d;
  r.payload["trace"] = format_rational(tr);
  if (o.formula) {
    const Rational f = trace_formula(*h, kind, o.d);
    r.payload["formula"] = format_rational(f);
    r.payload["verdict"] = f == tr ? "EQUAL" : "DIFFER";
    if (f != tr) r.exit_code = 1;
  }
}

void cmd_charpoly(const Options& o, CommandReport& r) {
  auto in = load(o, o.file, r);
  if (o.n2) {
    const Tensor<Rational> t = exact_tensor(in, parse_kind(o.tensor));
    const auto p = charpoly_n2(t);
    std::vector<Rational> desc(p.coefficients().rbegin(), p.coefficients().rend());
    r.payload["degree"] = p.degree();
    r.payload["coefficients"] = rational_list(desc);
    r.payload["roots"] = complex_list(poly_roots(p));
    return;
  }
  if (o.t < 1) throw PreconditionError("charpoly needs --t T >= 1 or --n2");
  const TensorKind kind = parse_kind(o.tensor);
  const Tensor<Rational> t = exact_tensor(in, kind);
  if (o.t > t.order()) throw PreconditionError("coefficients beyond t = k need traces past the closed forms");
  std::vector<Rational> traces;
  for (int d = 1; d <= o.t; ++d) traces.push_back(trace_d(t, d));
  const auto p = charpoly_coefficients(traces);
  r.payload["tensor"] = std::holds_alternative<Hypergraph>(in) ? to_string(kind) : "tns";
  r.payload["t"] = o.t;
  r.payload["traces"] = rational_list(traces);
  r.payload["coefficients"] = rational_list(p);
  if (!o.regular) return;
  const auto* h = std::get_if<Hypergraph>(&in);
  const auto reg = h ? degrees(*h).regular_degree() : std::nullopt;
  if (!reg || kind == TensorKind::Adjacency) {
    r.warnings.push_back("--regular applies to regular hypergraphs with lap or slap; skipped");
    return;
  }
  std::vector<Rational> expected;
  for (int s = 1; s <= o.t; ++s) {
    const auto c = regular_coefficient_formula(h->n(), h->k(), *reg, s);
    expected.push_back(kind == TensorKind::Laplacian ? c.laplacian : c.signless);
  }
  r.payload["regular_degree"] = *reg;
  r.payload["formula"] = rational_list(expected);
  r.payload["verdict"] = expected == p ? "EQUAL" : "DIFFER";
  if (expected != p) r.exit_code = 1;
}

std::unique_ptr<TensorOperator> make_operator(const Input& in, TensorKind kind) {
  if (auto* h = std::get_if<Hypergraph>(&in)) return std::make_unique<HypergraphTensor>(*h, kind);
  if (auto* t = std::get_if<Tensor<Rational>>(&in)) return std::make_unique<DenseTensorOperator>(*t);
  throw PreconditionError("power iteration needs a real nonnegative tensor");
}

void cmd_rho(const Options& o, CommandReport& r) {
  auto in = load(o, o.file, r);
  const TensorKind kind = parse_kind(o.tensor);
  if (kind == TensorKind::Laplacian) throw PreconditionError("the Laplacian tensor is not nonnegative");
  const auto op = make_operator(in, kind);
  const auto res = spectral_radius_power(*op, {o.tol, o.max_iter});
  r.payload["tensor"] = std::holds_alternative<Hypergraph>(in) ? to_string(kind) : "tns";
  r.payload["rho"] = format_real(res.pair.lambda.real());
  r.payload["residual"] = format_real(res.pair.residual);
  r.payload["iterations"] = res.iterations;
  r.payload["components"] = res.components;
  Json x = Json::array();
  for (const auto& v : res.pair.x) x.push_back(format_real(v.real()));
  r.payload["vector"] = x;
  r.warnings.insert(r.warnings.end(), res.warnings.begin(), res.warnings.end());
}

void cmd_oddbip(const Options& o, CommandReport& r) {
  const Hypergraph h = load_hypergraph(o, o.file, r);
  const auto f = find_odd_bipartition(h);
  r.payload["odd_bipartite"] = f.has_value();
  if (!f) {
    r.payload["v1"] = "none";
    return;
  }
  const auto v1 = odd_part(*f);
  r.payload["v1"] = one_based(v1);
  if (o.witness) {
    if (h.k() % 2 != 0) {
      r.warnings.push_back("signless null witness needs even k");
      return;
    }
    const auto w = slap_null_witness(h, v1);
    r.payload["witness"] = Json{{"lambda", format_rational(w.lambda)}, {"x", rational_list(w.x)},
                                {"residual", format_rational(w.residual)}};
    if (!is_zero(w.residual)) r.exit_code = 1;
  }
}

void cmd_labeling(const Options& o, CommandReport& r) {
  const Hypergraph h = load_hypergraph(o, o.file, r);
  if (h.k() % 2 != 0) {
    r.payload["labeling"] = "none (k odd)";
    return;
  }
  const auto f = find_half_sum_labeling(h);
  if (!f) {
    r.payload["labeling"] = "none";
    return;
  }
  r.payload["labeling"] = f->values;
  if (o.witness) {
    const auto null = phase_null_witness(h, *f);
    const auto neg = neg_rho_witness(h, *f, {o.tol, o.max_iter});
    r.payload["null_witness"] = eigenpair_json(null);
    r.payload["neg_rho_witness"] = eigenpair_json(neg);
    if (null.residual > kEigenTol || neg.residual > kEigenTol) r.exit_code = 1;
  }
}

void cmd_power(const Options& o, CommandReport& r) {
  const Hypergraph g = load_hypergraph(o, o.file, r);
  if (g.k() != 2) throw PreconditionError("power needs a 2-uniform input");
  const Hypergraph gk = power_hypergraph(g, o.k);
  const std::string text = to_hgf(gk);
  r.payload["k"] = gk.k();
  r.payload["n"] = gk.n();
  r.payload["m"] = gk.m();
  r.payload["hgf"] = text;
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + o.out);
    out << text;
    r.payload["written"] = o.out;
  }
}

void cmd_lift(const Options& o, CommandReport& r) {
  const Hypergraph g = load_hypergraph(o, o.file, r);
  if (g.k() != 2) throw PreconditionError("lift needs a 2-uniform input");
  const TensorKind kind = parse_kind(o.tensor);
  int d = 0;
  if (kind != TensorKind::Adjacency) {
    const auto reg = degrees(g).regular_degree();
    if (!reg) throw PreconditionError("Laplacian lifts need a regular graph");
    if (o.degree >= 0 && o.degree != *reg) {
      throw PreconditionError("graph is " + std::to_string(*reg) + "-regular, not " + std::to_string(o.degree));
    }
    d = *reg;
  }
  r.payload["tensor"] = to_string(kind);
  r.payload["k"] = o.k;
  Json sources = Json::array();
  bool all_ok = true;
  for (const auto& gp : graph_adjacency_eigenpairs(g)) {
    Json s;
    s["alpha"] = format_real(gp.value);
    if (std::abs(gp.value) < 1e-9) {
      s["status"] = "skipped (alpha = 0)";
      sources.push_back(s);
      continue;
    }
    std::vector<Complex> x(gp.vector.begin(), gp.vector.end());
    Json lifted = Json::array();
    auto record = [&](const EigenPair& p) {
      const bool ok = p.residual <= kEigenTol;
      all_ok = all_ok && ok;
      lifted.push_back(Json{{"lambda", format_complex(p.lambda)},
                            {"residual", format_real(p.residual)},
                            {"status", ok ? "verified" : "failed"}});
    };
    if (kind == TensorKind::Adjacency) {
      record(lift_adjacency_eigenpair(g, gp.value, x, o.k));
    } else {
      const auto rep = kind == TensorKind::SignlessLaplacian ? lift_regular_slap(d, gp.value, x, g, o.k)
                                                             : lift_regular_lap(d, gp.value, x, g, o.k);
      for (const auto& p : rep.witnesses) record(p);
      if (rep.perron) s["perron_root"] = format_real(*rep.perron);
    }
    s["lifted"] = lifted;
    sources.push_back(s);
  }
  r.payload["sources"] = sources;
  if (!all_ok) r.exit_code = 1;
}

Json probe_json(const ProbeReport& p) {
  Json j;
  j["cond1_odd_bipartite"] = p.odd_bipartite;
  j["cond4_half_sum"] = p.half_sum;
  j["cond2_witnessed"] = p.null_verified;
  j["cond3_witnessed"] = p.neg_rho_verified;
  j["specimen"] = p.specimen();
  if (p.bipartition) j["v1"] = one_based(odd_part(*p.bipartition));
  if (p.labeling) j["labeling"] = p.labeling->values;
  if (p.null_witness) j["null_residual"] = format_real(p.null_witness->residual);
  if (p.neg_rho) {
    j["neg_rho"] = format_complex(p.neg_rho->lambda);
    j["neg_rho_residual"] = format_real(p.neg_rho->residual);
  }
  return j;
}

void cmd_conjecture(const Options& o, CommandReport& r) {
  const PowerOptions popts{o.tol, o.max_iter};
  if (!o.file.empty()) {
    const Hypergraph h = load_hypergraph(o, o.file, r);
    r.payload["mode"] = "file";
    r.payload["k"] = h.k();
    r.payload["n"] = h.n();
    r.payload["probe"] = probe_json(conjecture_probe(h, popts));
    return;
  }
  if (o.k < 1 || o.nmax < 1) throw PreconditionError("conjecture needs a file or --k K --nmax N");
  r.digest = fnv1a_hex("conjecture k=" + std::to_string(o.k) + " nmax=" + std::to_string(o.nmax));
  const auto s = conjecture_survey(o.k, o.nmax, popts);
  r.payload["mode"] = "enumeration";
  r.payload["k"] = o.k;
  r.payload["nmax"] = o.nmax;
  r.payload["classes"] = s.stats.classes;
  r.payload["expected_classes"] = s.expected_classes.get_str();
  r.payload["exhaustive"] = s.exhaustive;
  Json by = Json::object();
  for (const auto& [n, c] : s.instances_by_order) by[std::to_string(n)] = c;
  r.payload["instances"] = s.instances;
  r.payload["instances_by_order"] = by;
  r.payload["implications"] = Json{{"cond1", s.cond1},
                                   {"cond4", s.cond4},
                                   {"cond2_witnessed", s.cond2_witnessed},
                                   {"cond3_witnessed", s.cond3_witnessed},
                                   {"cond1_without_cond4", s.one_not_four},
                                   {"cond4_without_cond1", s.specimens.size()}};
  Json spec = Json::array();
  for (const auto& h : s.specimens) spec.push_back(to_hgf(h));
  r.payload["specimens"] = spec;
  if (!s.exhaustive) {
    r.warnings.push_back("enumeration failed its exhaustiveness certificate");
    r.exit_code = 1;
  }
  if (s.one_not_four != 0) r.exit_code = 1;
}

// Invariant battery over hypergraphs.
struct Battery {
  Json results = Json::array();
  int failures = 0;
  int checks = 0;

  void add(const std::string& instance, const std::string& check, bool ok, const std::string& detail = {}) {
    ++checks;
    failures += ok ? 0 : 1;
    Json j{{"instance", instance}, {"check", check}, {"status", ok ? "ok" : "fail"}};
    if (!detail.empty()) j["detail"] = detail;
    results.push_back(j);
  }
  void skip(const std::string& instance, const std::string& check, const std::string& why) {
    results.push_back(Json{{"instance", instance}, {"check", check}, {"status", "skipped"}, {"detail", why}});
  }
};

std::vector<std::pair<std::string, Hypergraph>> builtin_corpus() {
  std::vector<std::pair<std::string, Hypergraph>> c;
  c.emplace_back("edge3", Hypergraph(3, 3, {{0, 1, 2}}));
  c.emplace_back("edge4", Hypergraph(4, 4, {{0, 1, 2, 3}}));
  c.emplace_back("two-edges3", Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}));
  c.emplace_back("K4-3", Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  c.emplace_back("C3", Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}));
  c.emplace_back("P3", Hypergraph(2, 3, {{0, 1}, {1, 2}}));
  c.emplace_back("loose-path4", Hypergraph(4, 7, {{0, 1, 2, 3}, {3, 4, 5, 6}}));
  c.emplace_back("C3^4", power_hypergraph(Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}}), 4));
  c.emplace_back("edge6", Hypergraph(6, 6, {{0, 1, 2, 3, 4, 5}}));
  return c;
}

void battery_for(Battery& b, const std::string& name, const Hypergraph& h, const Options& o) {
  const auto deg = degrees(h);
  const int k = h.k();
  b.add(name, "handshake", deg.sum() == static_cast<long long>(k) * static_cast<long long>(h.m()));
  b.add(name, "hgf-roundtrip", parse_hgf(to_hgf(h)) == h);

  const std::vector<Rational> ones(h.n(), Rational(1));
  const auto l1 = HypergraphTensor(h, TensorKind::Laplacian).apply(std::span<const Rational>(ones));
  const auto q1 = HypergraphTensor(h, TensorKind::SignlessLaplacian).apply(std::span<const Rational>(ones));
  bool lok = true, qok = true;
  for (int i = 0; i < h.n(); ++i) {
    lok = lok && is_zero(l1[i]);
    qok = qok && q1[i] == Rational(2 * deg[i]);
  }
  b.add(name, "laplacian-kills-ones", lok);
  b.add(name, "signless-ones-is-2d", qok);

  const TraceBudget budget;
  if (h.n() <= budget.max_dim && k * (k - 1) <= budget.max_arcs) {
    const auto a = adjacency_tensor(h), l = laplacian_tensor(h), q = signless_laplacian_tensor(h);
    std::vector<Rational> lt;
    for (int t = 1; t <= k; ++t) {
      const Rational ta = trace_d(a, t);
      b.add(name, "adjacency-trace-" + std::to_string(t), ta == adjacency_trace_formula(h, t), format_rational(ta));
      const Rational tl = trace_d(l, t), tq = trace_d(q, t);
      b.add(name, "laplacian-trace-" + std::to_string(t), tl == laplacian_trace_formula(h, t, false),
            format_rational(tl));
      b.add(name, "signless-trace-" + std::to_string(t), tq == laplacian_trace_formula(h, t, true),
            format_rational(tq));
      lt.push_back(tl);
    }
    if (const auto reg = deg.regular_degree()) {
      const auto p = charpoly_coefficients(lt);
      bool ok = true;
      for (int t = 1; t <= k; ++t) ok = ok && p[t - 1] == regular_coefficient_formula(h.n(), k, *reg, t).laplacian;
      b.add(name, "regular-coefficients", ok);
    }
  } else {
    b.skip(name, "traces", "beyond trace budget");
  }

  const auto bip = find_odd_bipartition(h);
  const auto lab = find_half_sum_labeling(h);
  if (bip) b.add(name, "odd-bipartition-valid", is_valid_labeling(h, *bip));
  if (lab) b.add(name, "half-sum-valid", is_valid_labeling(h, *lab));
  if (k % 2 == 0 && k % 4 != 0) b.add(name, "bipartition-iff-labeling", bip.has_value() == lab.has_value());
  if (bip && k % 2 == 0) {
    const auto w = slap_null_witness(h, odd_part(*bip));
    b.add(name, "signless-null-exact", is_zero(w.residual), format_rational(w.residual));
  }
  if (lab && is_connected(h)) {
    const auto w = neg_rho_witness(h, *lab, {o.tol, o.max_iter});
    b.add(name, "neg-rho-witness", w.residual <= kEigenTol, format_real(w.residual));
  }
  const auto perron = spectral_radius_power(HypergraphTensor(h, TensorKind::Adjacency), {o.tol, o.max_iter});
  b.add(name, "perron-residual", perron.pair.residual <= 10 * o.tol, format_real(perron.pair.residual));
}

void battery_n2(Battery& b, const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int round = 0; round < 4; ++round) {
    const int k = 3 + round % 2;
    Tensor<Rational> t(k, 2);
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = Rational(entry(rng), 1 + round);
      t[i].canonicalize();
    }
    const auto roots = spectrum_n2(t);
    bool ok = true;
    for (int d = 1; d <= k; ++d) {
      Complex s(0.0, 0.0);
      for (const auto& z : roots) s += std::pow(z, d);
      const double ref = trace_d(t, d).get_d();
      ok = ok && std::abs(s - Complex(ref, 0.0)) <= 1e-8 * std::max(1.0, std::abs(ref));
    }
    b.add("random-n2-" + std::to_string(round), "power-sums-match-traces", ok);
  }
}

void cmd_check(const Options& o, CommandReport& r) {
  Battery b;
  std::string all_bytes;
  if (o.files.empty()) {
    for (const auto& [name, h] : builtin_corpus()) {
      all_bytes += to_hgf(h);
      battery_for(b, name, h, o);
    }
  } else {
    for (const auto& f : o.files) {
      const std::string text = read_file(f);
      all_bytes += text;
      battery_for(b, f, parse_hgf(text), o);
    }
  }
  battery_n2(b, o);
  r.digest = fnv1a_hex(all_bytes);
  r.payload["checks"] = b.checks;
  r.payload["failures"] = b.failures;
  r.payload["results"] = b.results;
  if (b.failures > 0) r.exit_code = 1;
}

}  // namespace

CommandReport execute(const std::vector<std::string>& args) {
  Options o;
  CommandReport r;
  r.digest = fnv1a_hex("");
  CLI::App app{"Spectral invariants of uniform hypergraphs", "hyperspec"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--tol", o.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--max-iter", o.max_iter, "iteration limit")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "input file")->required();
    c->add_option("--format", o.format, "auto, hgf or tns")->capture_default_str();
    return c;
  };
  auto* info = file_cmd("info", "basic structure of a hypergraph or tensor");
  auto* trace = file_cmd("trace", "exact d-th order trace");
  trace->add_option("--tensor", o.tensor, "adj, lap or slap")->capture_default_str();
  trace->add_option("-d,--d", o.d, "trace order")->required();
  trace->add_flag("--formula", o.formula, "compare with the closed form");
  auto* charpoly = file_cmd("charpoly", "characteristic polynomial coefficients");
  charpoly->add_option("--tensor", o.tensor, "adj, lap or slap")->capture_default_str();
  charpoly->add_option("-t,--t", o.t, "number of codegree coefficients");
  charpoly->add_flag("--n2", o.n2, "full polynomial of a dimension-2 tensor");
  charpoly->add_flag("--regular", o.regular, "compare with the regular-hypergraph formula");
  auto* rho = file_cmd("rho", "spectral radius by power iteration");
  rho->add_option("--tensor", o.tensor, "adj or slap")->capture_default_str();
  auto* oddbip = file_cmd("oddbip", "odd bipartition");
  oddbip->add_flag("--witness", o.witness, "emit the signless null vector");
  auto* labeling = file_cmd("labeling", "half-sum labeling");
  labeling->add_flag("--witness", o.witness, "emit the null and -rho eigenpairs");
  auto* power = file_cmd("power", "power hypergraph of a graph");
  power->add_option("-k,--k", o.k, "target uniformity")->required();
  power->add_option("--out", o.out, "write the result to this file");
  auto* lift = file_cmd("lift", "lift graph eigenpairs to the power hypergraph");
  lift->add_option("-k,--k", o.k, "target uniformity")->required();
  lift->add_option("--tensor", o.tensor, "adj, lap or slap")->capture_default_str();
  lift->add_option("--d", o.degree, "expected regular degree");
  auto* conj = app.add_subcommand("conjecture", "probe the spectral conditions");
  conj->add_option("file", o.file, "single input file");
  conj->add_option("--format", o.format, "auto, hgf or tns")->capture_default_str();
  conj->add_option("-k,--k", o.k, "uniformity for enumeration");
  conj->add_option("--nmax", o.nmax, "vertex bound for enumeration");
  auto* check = app.add_subcommand("check", "invariant battery");
  check->add_option("files", o.files, "HGF inputs (default: built-in corpus)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    r.command = "help";
    r.payload["text"] = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    r.command = "usage";
    r.payload["error"] = e.what();
    r.exit_code = 2;
    return r;
  }

  const std::vector<std::pair<CLI::App*, void (*)(const Options&, CommandReport&)>> table = {
      {info, cmd_info},         {trace, cmd_trace}, {charpoly, cmd_charpoly}, {rho, cmd_rho},
      {oddbip, cmd_oddbip},     {labeling, cmd_labeling}, {power, cmd_power},    {lift, cmd_lift},
      {conj, cmd_conjecture},   {check, cmd_check}};
  for (const auto& [sub, fn] : table) {
    if (!sub->parsed()) continue;
    r.command = sub->get_name();
    try {
      fn(o, r);
    } catch (const PreconditionError& e) {
      r.payload["error"] = e.what();
      r.exit_code = 2;
    } catch (const ConvergenceError& e) {
      r.payload["error"] = e.what();
      r.exit_code = 3;
    } catch (const VerificationError& e) {
      r.payload["error"] = e.what();
      r.exit_code = 1;
    } catch (const std::exception& e) {
      r.payload["error"] = e.what();
      r.exit_code = 1;
    }
  }
  return r;
}

namespace {

void render_value(std::ostringstream& os, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_string()) {
    os << v.get<std::string>() << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
    bool first = true;
    for (const auto& x : v) {
      os << (first ? "" : " ") << (x.is_string() ? x.get<std::string>() : x.dump());
      first = false;
    }
    os << "\n";
  } else if (v.is_object()) {
    os << "\n";
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << pad << "  " << it.key() << ": ";
      render_value(os, it.value(), indent + 2);
    }
  } else if (v.is_array()) {
    os << "\n";
    for (const auto& x : v) {
      os << pad << "  -";
      if (x.is_object()) {
        bool first = true;
        for (auto it = x.begin(); it != x.end(); ++it) {
          os << (first ? " " : ", ") << it.key() << "=" << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
          first = false;
        }
        os << "\n";
      } else {
        os << " ";
        render_value(os, x, indent + 4);
      }
    }
  } else {
    os << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const CommandReport& report) {
  std::ostringstream os;
  if (report.command == "help") return report.payload.value("text", "");
  os << report.command << " [" << report.digest << "]\n";
  for (auto it = report.payload.begin(); it != report.payload.end(); ++it) {
    if (it.key() == "hgf" || it.key() == "specimens") continue;
    os << it.key() << ": ";
    render_value(os, it.value(), 0);
  }
  if (report.payload.contains("hgf")) os << report.payload["hgf"].get<std::string>();
  if (report.payload.contains("specimens")) {
    for (const auto& s : report.payload["specimens"]) os << "specimen:\n" << s.get<std::string>();
  }
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const CommandReport r = execute(args);
  const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  if (json) {
    out << r.to_json().dump(2) << "\n";
  } else if (r.payload.contains("error")) {
    err << "error: " << r.payload["error"].get<std::string>() << "\n";
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  } else {
    out << render_text(r);
  }
  return r.exit_code;
}

}  // namespace hyperspec::cli
