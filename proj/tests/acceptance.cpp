// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hyperspec/charpoly.hpp"
#include "hyperspec/enumeration.hpp"
#include "hyperspec/labeling.hpp"
#include "hyperspec/lift.hpp"
#include "hyperspec/roots.hpp"
#include "hyperspec/trace.hpp"
#include "hyperspec/witness.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << name << "  [" << time << "] "
            << out.detail.str() << std::endl;
}

double adj_rho(const Hypergraph& h) {
  return spectral_radius_power(HypergraphTensor(h, TensorKind::Adjacency)).pair.lambda.real();
}

double slap_rho(const Hypergraph& h) {
  return spectral_radius_power(HypergraphTensor(h, TensorKind::SignlessLaplacian)).pair.lambda.real();
}

double graph_rho(const Hypergraph& g) { return graph_adjacency_eigenpairs(g).back().value; }

std::vector<Complex> to_cvec(const std::vector<double>& v) { return {v.begin(), v.end()}; }

// k in {3,4}, n <= 6.
std::vector<Hypergraph> trace_corpus() {
  std::vector<Hypergraph> corpus{
      Hypergraph(3, 3, {{0, 1, 2}}),
      Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}),
      Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}),
      Hypergraph(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}),
      testsupport::complete(3, 4),
      testsupport::complete(3, 5),
      Hypergraph(4, 4, {{0, 1, 2, 3}}),
      Hypergraph(4, 6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}}),
      Hypergraph(4, 6, {{0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}}),
      Hypergraph(4, 7, {{0, 1, 2, 3}, {0, 4, 5, 6}}),
      testsupport::complete(4, 5),
      power_hypergraph(testsupport::path(3), 3),
      power_hypergraph(testsupport::graph(2, {{0, 1}}), 4),
  };
  corpus.erase(std::remove_if(corpus.begin(), corpus.end(), [](const Hypergraph& h) { return h.n() > 6; }),
               corpus.end());
  std::mt19937_64 rng(2024);
  while (corpus.size() < 24) {
    const int k = 3 + static_cast<int>(corpus.size() % 2);
    const int n = 5 + static_cast<int>(corpus.size() / 2 % 2);
    corpus.push_back(testsupport::random_hypergraph(rng, k, n, 2 + static_cast<int>(corpus.size() % 4)));
  }
  return corpus;
}

void matrix_calibration(Outcome& o) {
  std::mt19937_64 rng(1);
  int checks = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = testsupport::random_tensor(rng, 2, n, -3, 3);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n)), p(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = p[i][j] = a.at({i, j});
    }
    for (int d = 1; d <= 5; ++d) {
      Rational tr = 0;
      for (int i = 0; i < n; ++i) tr += p[i][i];
      o.require(trace_d(a, d) == tr, "matrix trial " + std::to_string(trial) + " d=" + std::to_string(d));
      ++checks;
      std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
          for (int j = 0; j < n; ++j) next[i][j] += p[i][l] * m[l][j];
        }
      }
      p = std::move(next);
    }
  }
  o.detail << checks << " exact comparisons";
}

void adjacency_vanishing(Outcome& o) {
  const auto corpus = trace_corpus();
  int checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto a = adjacency_tensor(corpus[i]);
    for (int d = 1; d < corpus[i].k(); ++d) {
      o.require(trace_d(a, d) == 0, "instance " + std::to_string(i) + " d=" + std::to_string(d));
      ++checks;
    }
  }
  o.detail << corpus.size() << " hypergraphs, " << checks << " traces";
}

void laplacian_closed_forms(Outcome& o) {
  const auto corpus = trace_corpus();
  int checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& h = corpus[i];
    const auto l = laplacian_tensor(h);
    const auto q = signless_laplacian_tensor(h);
    for (int t = 1; t <= h.k(); ++t) {
      o.require(trace_d(l, t) == laplacian_trace_formula(h, t, false),
                "L instance " + std::to_string(i) + " t=" + std::to_string(t));
      o.require(trace_d(q, t) == laplacian_trace_formula(h, t, true),
                "Q instance " + std::to_string(i) + " t=" + std::to_string(t));
      checks += 2;
    }
  }
  o.detail << corpus.size() << " hypergraphs, " << checks << " traces";
}

void regular_coefficients(Outcome& o) {
  struct Case {
    Hypergraph h;
    int d;
  };
  const std::vector<Case> cases{{testsupport::complete(3, 4), 3},
                                {Hypergraph(4, 6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}}), 2}};
  for (const auto& [h, d] : cases) {
    const auto reg = degrees(h).regular_degree();
    o.require(reg && *reg == d, "regularity");
    for (bool signless : {false, true}) {
      std::vector<Rational> formula, direct;
      const auto t = signless ? signless_laplacian_tensor(h) : laplacian_tensor(h);
      for (int s = 1; s <= h.k(); ++s) {
        formula.push_back(laplacian_trace_formula(h, s, signless));
        direct.push_back(trace_d(t, s));
      }
      o.require(formula == direct, "trace formula vs enumeration");
      const auto p = charpoly_coefficients(formula);
      for (int s = 1; s <= h.k(); ++s) {
        const auto f = regular_coefficient_formula(h.n(), h.k(), d, s);
        o.require(p[s - 1] == (signless ? f.signless : f.laplacian), "coefficient t=" + std::to_string(s));
      }
      if (!signless && h.k() == 3) o.detail << "K4(3) p = " << format_rational(p[0]) << ", ";
    }
  }
  o.detail << "k=3 and k=4 instances";
}

void dimension_two(Outcome& o) {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 3 + trial % 2;
    const auto t = testsupport::random_tensor(rng, k, 2, -3, 3, 1 + trial % 3);
    const auto roots = spectrum_n2(t);
    const int deg = 2 * (k - 1);
    o.require(static_cast<int>(roots.size()) == deg, "root count");
    std::vector<Complex> sums;
    for (int d = 1; d <= deg; ++d) {
      Complex s(0, 0);
      for (const auto& z : roots) s += std::pow(z, d);
      sums.push_back(s);
      if (d <= k) {
        const double exact = trace_d(t, d).get_d();
        const double err = std::abs(s - Complex(exact, 0)) / std::max(1.0, std::abs(exact));
        worst = std::max(worst, err);
        o.require(err <= 1e-8, "power sum trial " + std::to_string(trial) + " d=" + std::to_string(d));
      }
    }
    const auto p = charpoly_coefficients(sums);
    const auto poly = charpoly_n2(t);
    for (int j = 1; j <= deg; ++j) {
      const double c = poly.coefficient(deg - j).get_d();
      const double err = std::abs(p[j - 1] - Complex(c, 0)) / std::max(1.0, std::abs(c));
      worst = std::max(worst, err);
      o.require(err <= 1e-8, "Newton coefficient trial " + std::to_string(trial) + " j=" + std::to_string(j));
    }
  }
  o.detail << "worst relative error " << worst;
}

void power_radius(Outcome& o) {
  const std::vector<std::pair<std::string, Hypergraph>> graphs{{"K2", testsupport::graph(2, {{0, 1}})},
                                                               {"P3", testsupport::path(3)},
                                                               {"C3", testsupport::cycle(3)},
                                                               {"S4", testsupport::star(4)},
                                                               {"P4", testsupport::path(4)}};
  double worst = 0.0;
  for (const auto& [name, g] : graphs) {
    const double base = graph_rho(g);
    double prev = base;
    for (int k = 3; k <= 6; ++k) {
      const double r = adj_rho(power_hypergraph(g, k));
      if (k <= 5) {
        worst = std::max(worst, std::abs(r - std::pow(base, 2.0 / k)));
        o.require(std::abs(r - std::pow(base, 2.0 / k)) <= 1e-6, name + " k=" + std::to_string(k));
      }
      if (base > 1 + 1e-9) {
        o.require(r < prev && r > 1, name + " sequence at k=" + std::to_string(k));
      }
      prev = r;
    }
    if (base > 1 + 1e-9) {
      const double r12 = adj_rho(power_hypergraph(g, 12));
      o.require(r12 - 1 < std::pow(base, 1.0 / 6) - 1 + 1e-9, name + " k=12 limit");
    }
  }

  // Trees on six vertices from every Pruefer sequence, up to isomorphism.
  const EdgeSlots slots(2, 6);
  std::set<std::uint64_t> seen;
  std::vector<Hypergraph> trees;
  std::vector<int> seq(4, 0);
  for (int code = 0; code < 6 * 6 * 6 * 6; ++code) {
    for (int i = 0, c = code; i < 4; ++i, c /= 6) seq[i] = c % 6;
    const auto t = testsupport::pruefer_tree(6, seq);
    if (seen.insert(canonical_form(slots, slots.to_mask(t)).mask).second) trees.push_back(t);
  }
  o.require(trees.size() == 6, "six trees on six vertices");
  const double path = adj_rho(power_hypergraph(testsupport::path(6), 3));
  const double star = adj_rho(power_hypergraph(testsupport::star(6), 3));
  const auto path_form = canonical_form(slots, slots.to_mask(testsupport::path(6))).mask;
  const auto star_form = canonical_form(slots, slots.to_mask(testsupport::star(6))).mask;
  double margin = 1.0;
  for (const auto& t : trees) {
    const auto form = canonical_form(slots, slots.to_mask(t)).mask;
    if (form == path_form || form == star_form) continue;
    const double r = adj_rho(power_hypergraph(t, 3));
    margin = std::min({margin, r - path, star - r});
  }
  o.require(margin > 1e-9, "tree extremality margin");
  o.detail << "worst deviation " << worst << ", " << trees.size() << " trees, extremality margin " << margin;
}

void regular_lifts(Outcome& o) {
  const auto c3 = testsupport::cycle(3);
  const auto eig = graph_adjacency_eigenpairs(c3);
  int verified = 0;
  bool lap_zero = false;
  for (const auto& [value, vec] : eig) {
    const auto x = to_cvec(vec);
    const Complex alpha(std::round(value), 0);
    for (const auto& r : {lift_regular_slap(2, alpha, x, c3, 4), lift_regular_lap(2, alpha, x, c3, 4)}) {
      o.require(r.lifted.size() == 2, "two lifted values");
      for (const auto& w : r.witnesses) {
        o.require(w.residual <= kEigenTol, "lift residual");
        ++verified;
        if (r.kind == TensorKind::Laplacian && std::abs(w.lambda) < 1e-9) lap_zero = true;
      }
    }
  }
  o.require(verified == 12, "every lifted value has a witness");
  o.require(lap_zero, "Laplacian lift contains 0");
  const double rho4 = slap_rho(power_hypergraph(c3, 4));
  o.require(std::abs(rho4 - 3.0) <= 1e-6, "rho(Q) = 3");

  double prev = 1e300, prev_gap = 1e300;
  for (int k : {4, 6, 8}) {
    const double r = slap_rho(power_hypergraph(c3, k));
    auto poly = (Polynomial<Rational>::linear_factor(2) *
                 Polynomial<Rational>::linear_factor(1).pow((k - 2) / 2)) -
                Polynomial<Rational>::constant(2);
    const auto root = largest_real_root(poly_roots(poly));
    o.require(root.has_value() && std::abs(r - *root) <= 1e-6, "largest root k=" + std::to_string(k));
    o.require(r < prev, "decreasing at k=" + std::to_string(k));
    o.require(r - 2 < prev_gap, "gap shrinks at k=" + std::to_string(k));
    o.detail << "k=" << k << " rho=" << r << " ";
    prev = r;
    prev_gap = r - 2;
  }
  o.detail << "; " << verified << " lifted eigenpairs verified";
}

void labeling_witnesses(Outcome& o) {
  // Even k corpus: all connected graphs on up to 6 vertices, all connected
  // 4-graphs on up to 6 vertices, all connected 6-graphs on up to 8
  // vertices, plus power hypergraphs.
  std::vector<Hypergraph> corpus;
  for (auto [k, nmax] : {std::pair{2, 6}, std::pair{4, 6}, std::pair{6, 8}}) {
    for (int n = k; n <= nmax; ++n) {
      const EdgeSlots slots(k, n);
      enumerate_classes(k, n, [&](std::uint64_t mask, std::uint64_t) {
        const auto h = slots.to_hypergraph(mask);
        if (h.m() > 0 && is_connected(h)) corpus.push_back(h);
      });
    }
  }
  for (int k : {4, 6}) {
    for (const auto& g : {testsupport::cycle(4), testsupport::cycle(5), testsupport::star(5), testsupport::path(5)}) {
      corpus.push_back(power_hypergraph(g, k));
    }
  }
  int null_checked = 0, neg_checked = 0, agree_checked = 0;
  double worst = 0.0;
  for (const auto& h : corpus) {
    const auto bip = find_odd_bipartition(h);
    const auto half = find_half_sum_labeling(h);
    if (bip) {
      const auto w = slap_null_witness(h, odd_part(*bip));
      o.require(w.residual == 0, "exact null residual");
      ++null_checked;
    }
    if (half) {
      const auto w = neg_rho_witness(h, *half);
      worst = std::max(worst, w.residual);
      o.require(w.residual <= 1e-8, "negative radius residual");
      ++neg_checked;
    }
    if (h.k() % 4 != 0) {
      o.require(bip.has_value() == half.has_value(), "conditions (1) and (4) agree");
      ++agree_checked;
    }
  }
  o.detail << corpus.size() << " instances: " << null_checked << " null witnesses exact, " << neg_checked
           << " negative radius witnesses (worst " << worst << "), " << agree_checked << " agreement checks";

  const auto s = conjecture_survey(4, 7);
  o.require(s.exhaustive, "k=4 n<=7 enumeration certified");
  o.require(s.one_not_four == 0, "(1) implies (4)");
  o.require(s.cond2_witnessed == s.cond4 && s.cond3_witnessed == s.cond4, "witnesses for every labeling");
  std::cout << "  k=4 n<=7 survey: classes " << s.stats.classes << " (Burnside " << s.expected_classes.get_str()
            << "), connected instances " << s.instances << "\n";
  for (const auto& [n, count] : s.instances_by_order) std::cout << "    n=" << n << ": " << count << "\n";
  std::cout << "  (1) odd-bipartite " << s.cond1 << ", (4) half-sum " << s.cond4 << ", (2) witnessed "
            << s.cond2_witnessed << ", (3) witnessed " << s.cond3_witnessed << ", (1) without (4) "
            << s.one_not_four << ", (4) without (1) " << s.specimens.size() << "\n";
  if (!s.specimens.empty()) std::cout << "  first (4) without (1) specimen:\n" << to_hgf(s.specimens.front());
}

void zero_extension(Outcome& o) {
  struct Instance {
    Hypergraph h;
    Edge e;
  };
  std::vector<Instance> instances{
      {Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}}), {0, 3, 4}},
      {Hypergraph(4, 7, {{0, 1, 2, 3}, {0, 4, 5, 6}}), {0, 4, 5, 6}},
      {power_hypergraph(testsupport::path(4), 4), {2, 3, 8, 9}},
      {power_hypergraph(testsupport::star(5), 5), {0, 4, 14, 15, 16}},
  };
  std::mt19937_64 rng(99);
  while (instances.size() < 8) {
    const int k = 3 + static_cast<int>(instances.size() % 3);
    const auto base = testsupport::random_hypergraph(rng, k, k + 2, 2);
    auto edges = base.edges();
    Edge e{0};
    for (int j = 0; j < k - 1; ++j) e.push_back(base.n() + j);
    edges.push_back(e);
    instances.push_back({Hypergraph(k, base.n() + k - 1, edges), e});
  }
  const auto c4 = power_hypergraph(testsupport::cycle(4), 4);
  int checked = 0;
  double worst = 0.0;
  for (const auto& [h, e] : instances) {
    const auto sub = remove_edge_with_cores(h, e).graph;
    const auto perron = spectral_radius_power(HypergraphTensor(sub, TensorKind::Adjacency), PowerOptions{1e-13, 100000});
    const auto ext = extend_eigenvector_zero(h, e, perron.pair);
    worst = std::max(worst, ext.residual);
    o.require(ext.residual <= 1e-10 && ext.lambda == perron.pair.lambda, "Perron extension");
    ++checked;
  }
  // Every eigenpair of P_4 lifted to P_4^4 and extended to C_4^4.
  const Edge e{0, 3, 6, 7};
  for (const auto& [value, vec] : graph_adjacency_eigenpairs(testsupport::path(4))) {
    const auto pair = lift_adjacency_eigenpair(testsupport::path(4), {value, 0}, to_cvec(vec), 4);
    const auto ext = extend_eigenvector_zero(c4, e, pair);
    worst = std::max(worst, ext.residual);
    o.require(ext.residual <= 1e-10 && ext.lambda == pair.lambda, "lifted extension");
    ++checked;
  }
  o.require(checked >= 10, "at least ten instances");
  o.detail << checked << " instances, worst residual " << worst;
}

}  // namespace

int main() {
  criterion(1, "matrix calibration of the trace", matrix_calibration);
  criterion(2, "adjacency traces vanish below the order", adjacency_vanishing);
  criterion(3, "Laplacian and signless trace closed forms", laplacian_closed_forms);
  criterion(4, "regular hypergraph coefficients", regular_coefficients);
  criterion(5, "dimension-two spectrum oracle", dimension_two);
  criterion(6, "power hypergraph spectral radius", power_radius);
  criterion(7, "signless and Laplacian lifts", regular_lifts);
  criterion(8, "labeling witnesses and k=4 survey", labeling_witnesses);
  criterion(9, "zero extension across edge removal", zero_extension);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
