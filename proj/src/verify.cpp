#include "aalpha/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aalpha/group.hpp"
#include "aalpha/number_theory.hpp"

namespace aalpha {

VerificationReport verify_prediction(const Graph& g, const SpectralPrediction& pred,
                                     Alpha a, double tol,
                                     const std::string& case_id) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.case_id = case_id;
  report.n = g.order();
  report.alpha = a.value();
  report.fixed_dim = pred.fixed_dimension();
  report.aux_dim = pred.aux.rows();
  if (pred.total_dimension() != g.order()) {
    report.matched = false;
    report.max_error = std::numeric_limits<double>::infinity();
    report.note = "structural failure: prediction dimension " +
                  std::to_string(pred.total_dimension()) + " vs graph order " +
                  std::to_string(g.order());
  } else {
    Spectrum direct = eig_symmetric(a_alpha_matrix(g, a));
    MatchReport match = spectra_match(pred.assemble(), direct, tol);
    report.matched = match.matched;
    report.max_error = match.max_error;
    report.note = match.unmatched;
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

struct Case {
  std::string id;
  Graph graph;
  SpectralPrediction pred;
  double alpha;
};

void apply_perturbation(SpectralPrediction& pred, double delta) {
  if (delta == 0.0) return;
  if (!pred.fixed.empty())
    pred.fixed.front().value += delta;
  else if (pred.aux.rows() > 0)
    pred.aux(0, 0) += delta;
}

// Regular-graph pool for the random suite: cliques, empty graphs, cycles.
std::vector<std::pair<Graph, RegularPart>> part_pool() {
  std::vector<std::pair<Graph, RegularPart>> pool;
  for (int t = 1; t <= 5; ++t) pool.emplace_back(complete_graph(t), complete_part(t));
  for (int t = 2; t <= 5; ++t) pool.emplace_back(empty_graph(t), empty_part(t));
  for (int t = 3; t <= 5; ++t) pool.emplace_back(cycle_graph(t), cycle_part(t));
  return pool;
}

Graph power_graph_of(const FiniteGroup& group) { return power_graph(group).graph; }

std::vector<std::vector<long long>> default_instances(const std::string& suite) {
  std::vector<std::vector<long long>> out;
  auto singles = [&](std::initializer_list<long long> values) {
    for (long long v : values) out.push_back({v});
  };
  if (suite == "power_cyclic") {
    for (long long n = 3; n <= 60; ++n) out.push_back({n});
  } else if (suite == "pq_pqr") {
    singles({6, 10, 15, 21, 35, 30, 42});
  } else if (suite == "pq_power") {
    singles({12, 18, 24, 48, 50});
  } else if (suite == "dihedral") {
    singles({3, 4, 5, 7, 8, 9});
  } else if (suite == "dicyclic") {
    singles({2, 4, 8});
  } else if (suite == "elementary_abelian") {
    out = {{2, 2}, {2, 3}, {3, 2}, {5, 1}, {3, 3}};
  } else if (suite == "nonabelian_pq") {
    out = {{2, 3}, {2, 5}, {2, 7}, {3, 7}, {3, 13}, {5, 11}};
  } else if (suite == "friendship") {
    for (long long n = 1; n <= 10; ++n) out.push_back({n});
  } else if (suite == "firefly") {
    for (long long n = 1; n <= 8; ++n)
      for (long long p = 1; p <= n; ++p) out.push_back({p, n});
  } else if (suite == "wheel") {
    for (long long n = 3; n <= 12; ++n) out.push_back({n});
  } else if (suite == "complete_split") {
    for (long long n = 2; n <= 10; ++n)
      for (long long w = 1; w < n; ++w) out.push_back({w, n});
  } else if (suite == "cone") {
    for (long long a = 3; a <= 8; ++a)
      for (long long b = 1; b <= 5; ++b) out.push_back({a, b});
  } else if (suite == "complete_bipartite") {
    for (long long a = 1; a <= 8; ++a)
      for (long long b = a; b <= 8; ++b) out.push_back({a, b});
  } else if (suite == "complete_multipartite") {
    // All size multisets with 2..4 parts of size 1..4.
    for (int parts = 2; parts <= 4; ++parts) {
      std::vector<long long> sizes(parts, 1);
      while (true) {
        out.push_back(sizes);
        int i = parts - 1;
        while (i >= 0 && sizes[i] == 4) --i;
        if (i < 0) break;
        ++sizes[i];
        for (int j = i + 1; j < parts; ++j) sizes[j] = sizes[i];
      }
    }
  }
  return out;
}

std::string instance_id(const std::string& suite, const std::vector<long long>& inst) {
  std::ostringstream id;
  id << suite << '[';
  for (size_t i = 0; i < inst.size(); ++i) {
    if (i) id << ',';
    id << inst[i];
  }
  id << ']';
  return id.str();
}

// Builds the target graph and its prediction for one instance of a suite.
std::pair<Graph, SpectralPrediction> build_instance(const std::string& suite,
                                                    const std::vector<long long>& inst,
                                                    Alpha a) {
  auto need = [&](size_t k) {
    if (inst.size() != k)
      throw std::invalid_argument("suite " + suite + " expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (suite == "power_cyclic" || suite == "pq_pqr" || suite == "pq_power") {
    need(1);
    const int n = static_cast<int>(inst[0]);
    return {power_graph_of(FiniteGroup::cyclic(n)), predict_power_cyclic(n, a)};
  }
  if (suite == "dihedral") {
    need(1);
    const int n = static_cast<int>(inst[0]);
    Factorization f = factorize(n);
    if (f.factors.size() != 1)
      throw std::invalid_argument("dihedral suite: n must be a prime power");
    return {power_graph_of(FiniteGroup::dihedral(2 * n)),
            predict_dihedral_prime_power(static_cast<int>(f.factors[0].first),
                                         f.factors[0].second, a)};
  }
  if (suite == "dicyclic") {
    need(1);
    const int n = static_cast<int>(inst[0]);
    return {power_graph_of(FiniteGroup::dicyclic(4 * n)),
            predict_dicyclic_two_power(n, a)};
  }
  if (suite == "elementary_abelian") {
    need(2);
    const int p = static_cast<int>(inst[0]), k = static_cast<int>(inst[1]);
    return {power_graph_of(FiniteGroup::elementary_abelian(p, k)),
            predict_elementary_abelian(p, k, a)};
  }
  if (suite == "nonabelian_pq") {
    need(2);
    const int p = static_cast<int>(inst[0]), q = static_cast<int>(inst[1]);
    return {nonabelian_pq_power_graph(p, q), predict_nonabelian_pq(p, q, a)};
  }
  if (suite == "friendship") {
    need(1);
    const int n = static_cast<int>(inst[0]);
    return {friendship_graph(n), predict_friendship(n, a)};
  }
  if (suite == "firefly") {
    need(2);
    const int p = static_cast<int>(inst[0]), n = static_cast<int>(inst[1]);
    return {firefly_graph(p, n), predict_firefly(p, n, a)};
  }
  if (suite == "wheel") {
    need(1);
    const int n = static_cast<int>(inst[0]);
    return {wheel_graph(n), predict_wheel(n, a)};
  }
  if (suite == "complete_split") {
    need(2);
    const int w = static_cast<int>(inst[0]), n = static_cast<int>(inst[1]);
    return {complete_split_graph(w, n), predict_complete_split(w, n, a)};
  }
  if (suite == "cone") {
    need(2);
    const int ca = static_cast<int>(inst[0]), cb = static_cast<int>(inst[1]);
    return {cone_graph(ca, cb), predict_cone(ca, cb, a)};
  }
  if (suite == "complete_bipartite") {
    need(2);
    const int pa = static_cast<int>(inst[0]), pb = static_cast<int>(inst[1]);
    return {join(empty_graph(pa), empty_graph(pb)),
            predict_complete_bipartite(pa, pb, a)};
  }
  if (suite == "complete_multipartite") {
    std::vector<int> sizes(inst.begin(), inst.end());
    return {complete_multipartite_graph(sizes),
            predict_complete_multipartite(sizes, a)};
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<VerificationReport> solve_cases(std::vector<Case> cases, double tol) {
  std::vector<VerificationReport> reports(cases.size());
  const unsigned workers = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()),
      static_cast<unsigned>(cases.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < cases.size(); ++i)
      reports[i] = verify_prediction(cases[i].graph, cases[i].pred,
                                     Alpha(cases[i].alpha), tol, cases[i].id);
    return reports;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
      reports[i] = verify_prediction(cases[i].graph, cases[i].pred,
                                     Alpha(cases[i].alpha), tol, cases[i].id);
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return reports;
}

}  // namespace

RandomJoinedUnionCase random_joined_union_case(std::mt19937_64& rng, int index) {
  static const std::vector<std::pair<Graph, RegularPart>> pool = part_pool();

  const int base_n = 3 + static_cast<int>(rng() % 4);
  std::vector<Edge> base_edges;
  for (int v = 1; v < base_n; ++v)
    base_edges.emplace_back(v, static_cast<int>(rng() % v));  // random tree
  for (int u = 0; u < base_n; ++u)
    for (int v = u + 1; v < base_n; ++v)
      if (rng() % 3 == 0) base_edges.emplace_back(u, v);
  Graph base(base_n, base_edges);

  RandomJoinedUnionCase out;
  std::vector<Graph> part_graphs;
  for (int i = 0; i < base_n; ++i) {
    const auto& [graph, part] = pool[rng() % pool.size()];
    part_graphs.push_back(graph);
    out.parts.push_back(part);
  }
  out.spec = JoinedUnionSpec{std::move(base), std::move(part_graphs)};
  std::ostringstream id;
  id << "joined_union_random[case=" << index << ",base_n=" << base_n << ']';
  out.id = id.str();
  return out;
}

std::vector<std::string> known_suites() {
  return {"joined_union_random", "power_cyclic",  "pq_pqr",
          "pq_power",            "dihedral",      "dicyclic",
          "elementary_abelian",  "nonabelian_pq", "friendship",
          "firefly",             "wheel",         "complete_split",
          "cone",                "complete_bipartite", "complete_multipartite"};
}

std::vector<VerificationReport> run_sweep(const std::string& suite,
                                          const SweepOptions& opt) {
  std::vector<Case> cases;
  if (suite == "joined_union_random") {
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
      RandomJoinedUnionCase rc = random_joined_union_case(rng, i);
      Graph graph = joined_union(rc.spec);
      std::string id = rc.id + "[seed=" + std::to_string(opt.seed) + ']';
      for (double alpha : opt.alphas) {
        SpectralPrediction pred =
            predict_joined_union(rc.spec.base, rc.parts, Alpha(alpha));
        apply_perturbation(pred, opt.perturb);
        cases.push_back({id, graph, std::move(pred), alpha});
      }
    }
  } else {
    const auto suites = known_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
      throw std::invalid_argument("unknown suite: " + suite);
    std::vector<std::vector<long long>> instances =
        opt.instances.empty() ? default_instances(suite) : opt.instances;
    for (const auto& inst : instances) {
      const std::string id = instance_id(suite, inst);
      for (double alpha : opt.alphas) {
        auto [graph, pred] = build_instance(suite, inst, Alpha(alpha));
        apply_perturbation(pred, opt.perturb);
        cases.push_back({id, std::move(graph), std::move(pred), alpha});
      }
    }
  }
  return solve_cases(std::move(cases), opt.tol);
}

namespace {

// JSON has no infinity literal; structural failures serialize as DBL_MAX.
double finite_error(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

}  // namespace

void write_report_json(const std::vector<VerificationReport>& reports,
                       std::ostream& out) {
  out << "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << "  {\"case\":\"" << r.case_id << "\",\"n\":" << r.n
        << ",\"alpha\":" << format_double(r.alpha)
        << ",\"matched\":" << (r.matched ? "true" : "false")
        << ",\"max_error\":" << format_double(finite_error(r.max_error))
        << ",\"fixed_dim\":" << r.fixed_dim << ",\"aux_dim\":" << r.aux_dim
        << '}' << (i + 1 < reports.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

void write_report_csv(const std::vector<VerificationReport>& reports,
                      std::ostream& out) {
  out << "case,n,alpha,matched,max_error,fixed_dim,aux_dim\n";
  for (const auto& r : reports)
    out << r.case_id << ',' << r.n << ',' << format_double(r.alpha) << ','
        << (r.matched ? "true" : "false") << ','
        << format_double(finite_error(r.max_error)) << ',' << r.fixed_dim << ','
        << r.aux_dim << '\n';
}

}  // namespace aalpha
