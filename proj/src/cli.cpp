#include "aalpha/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <memory>
#include <sstream>

#include "aalpha/graph.hpp"
#include "aalpha/group.hpp"
#include "aalpha/predict.hpp"
#include "aalpha/spectra.hpp"
#include "aalpha/verify.hpp"

namespace aalpha {

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    size_t pos = 0;
    out.push_back(std::stoi(item, &pos));
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
  }
  return out;
}

Graph graph_from_constructor(const std::string& kind, const std::vector<int>& p) {
  auto need = [&](size_t k, const char* what) {
    if (p.size() != k)
      throw std::invalid_argument(std::string(kind) + " takes " + what);
  };
  if (kind == "complete") { need(1, "1 parameter"); return complete_graph(p[0]); }
  if (kind == "empty") { need(1, "1 parameter"); return empty_graph(p[0]); }
  if (kind == "cycle") { need(1, "1 parameter"); return cycle_graph(p[0]); }
  if (kind == "path") { need(1, "1 parameter"); return path_graph(p[0]); }
  if (kind == "star") { need(1, "1 parameter"); return star_graph(p[0]); }
  if (kind == "wheel") { need(1, "1 parameter"); return wheel_graph(p[0]); }
  if (kind == "friendship") { need(1, "1 parameter"); return friendship_graph(p[0]); }
  if (kind == "firefly") { need(2, "2 parameters"); return firefly_graph(p[0], p[1]); }
  if (kind == "complete_bipartite") {
    need(2, "2 parameters");
    return join(empty_graph(p[0]), empty_graph(p[1]));
  }
  if (kind == "complete_split") {
    need(2, "2 parameters");
    return complete_split_graph(p[0], p[1]);
  }
  if (kind == "cone") { need(2, "2 parameters"); return cone_graph(p[0], p[1]); }
  if (kind == "multipartite") return complete_multipartite_graph(p);
  if (kind == "powercyclic") {
    need(1, "1 parameter");
    return power_cyclic_construction(p[0]);
  }
  throw std::invalid_argument("unknown graph constructor: " + kind);
}

bool known_constructor(const std::string& kind) {
  static const char* kinds[] = {"complete",  "empty",       "cycle",
                                "path",      "star",        "wheel",
                                "friendship", "firefly",    "complete_bipartite",
                                "complete_split", "cone",   "multipartite",
                                "powercyclic"};
  for (const char* k : kinds)
    if (kind == k) return true;
  return false;
}

// Either a writable file or the provided fallback stream.
struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = nullptr;

  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream = &fallback;
      return;
    }
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    stream = &file;
  }
  std::ostream& get() { return *stream; }
};

void print_spectrum_json(std::ostream& out, const std::string& source, int n,
                         double alpha, const std::string& matrix_kind,
                         const Spectrum& s) {
  out << "{\"source\":\"" << source << "\",\"n\":" << n
      << ",\"alpha\":" << format_double(alpha) << ",\"matrix\":\"" << matrix_kind
      << "\",\"spectrum\":[";
  for (int i = 0; i < s.dim(); ++i)
    out << (i ? "," : "") << format_double(s.values[i]);
  out << "]}\n";
}

void print_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "index,eigenvalue\n";
  for (int i = 0; i < s.dim(); ++i)
    out << i << ',' << format_double(s.values[i]) << '\n';
}

int finish_reports(const std::vector<VerificationReport>& reports,
                   const std::string& format, OutputTarget& target,
                   std::ostream& err) {
  if (format == "csv")
    write_report_csv(reports, target.get());
  else
    write_report_json(reports, target.get());
  int mismatches = 0;
  for (const auto& r : reports) mismatches += r.matched ? 0 : 1;
  if (mismatches > 0) {
    err << mismatches << " of " << reports.size() << " cases did not match\n";
    return 1;
  }
  return 0;
}

}  // namespace

Graph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos && known_constructor(spec.substr(0, colon)))
    return graph_from_constructor(spec.substr(0, colon),
                                  parse_int_list(spec.substr(colon + 1)));
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("not a graph constructor and not a readable file: " + spec);
  return read_edge_list(in);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"A_alpha spectra of graphs, joined unions and power graphs"};
  app.require_subcommand(1);

  std::string graph_spec, group_spec, family, matrix_kind = "a_alpha";
  std::string format = "json", out_path, alphas_csv, params_csv;
  double alpha = 0.5, tol = kDefaultTol, perturb = 0.0;
  long long n_param = -1;
  std::uint64_t seed = SweepOptions{}.seed;
  int count = 50;
  std::vector<std::string> suites;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "convexity parameter in [0,1]")
        ->capture_default_str();
    cmd->add_option("--tol", tol, "match tolerance")->capture_default_str();
    cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output path (default: stdout)");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of one graph");
  spectrum->add_option("--graph", graph_spec, "constructor string or edge-list file")
      ->required();
  spectrum->add_option("--matrix", matrix_kind, "a_alpha, adjacency, laplacian or signless")
      ->check(CLI::IsMember({"a_alpha", "adjacency", "laplacian", "signless"}));
  add_common(spectrum);

  CLI::App* powergraph =
      app.add_subcommand("powergraph", "power graph of a finite group");
  powergraph->add_option("--group", group_spec,
                         "cyclic:n, dihedral:2n, dicyclic:4n, elemabelian:p,k")
      ->required();
  add_common(powergraph);

  CLI::App* verify = app.add_subcommand("verify", "check one prediction family");
  verify->add_option("--family", family, "suite name")->required();
  verify->add_option("--n", n_param, "instance parameter for 1-parameter families");
  verify->add_option("--params", params_csv, "comma-separated instance parameters");
  verify->add_option("--perturb", perturb,
                     "inject an error into the first predicted eigenvalue");
  add_common(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "run verification suites");
  sweep->add_option("--suite", suites, "suites to run (default: all)");
  sweep->add_option("--alphas", alphas_csv, "comma-separated alpha grid");
  sweep->add_option("--seed", seed, "seed for the random joined-union suite")
      ->capture_default_str();
  sweep->add_option("--count", count, "random joined-union case count")
      ->capture_default_str();
  add_common(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (spectrum->parsed()) {
      Graph g = graph_from_spec(graph_spec);
      Matrix m = matrix_kind == "adjacency"    ? adjacency_matrix(g)
                 : matrix_kind == "laplacian"  ? laplacian_matrix(g)
                 : matrix_kind == "signless"   ? signless_laplacian_matrix(g)
                                               : a_alpha_matrix(g, Alpha(alpha));
      Spectrum s = eig_symmetric(m);
      OutputTarget target(out_path, out);
      if (format == "csv")
        print_spectrum_csv(target.get(), s);
      else
        print_spectrum_json(target.get(), graph_spec, g.order(), alpha,
                            matrix_kind, s);
      return 0;
    }
    if (powergraph->parsed()) {
      FiniteGroup group = build_group(group_spec);
      PowerGraphResult pg = power_graph(group);
      Spectrum s = eig_symmetric(a_alpha_matrix(pg.graph, Alpha(alpha)));
      OutputTarget target(out_path, out);
      if (format == "csv") {
        print_spectrum_csv(target.get(), s);
        return 0;
      }
      std::ostream& o = target.get();
      o << "{\"group\":\"" << group_spec << "\",\"n\":" << pg.graph.order()
        << ",\"m\":" << pg.graph.edge_count() << ",\"edges\":[";
      const auto edges = pg.graph.edges();
      for (size_t i = 0; i < edges.size(); ++i)
        o << (i ? "," : "") << '[' << edges[i].first << ',' << edges[i].second
          << ']';
      o << "],\"universal\":[";
      for (size_t i = 0; i < pg.universal.size(); ++i)
        o << (i ? "," : "") << pg.universal[i];
      o << "],\"b\":" << pg.universal.size()
        << ",\"alpha\":" << format_double(alpha) << ",\"spectrum\":[";
      for (int i = 0; i < s.dim(); ++i)
        o << (i ? "," : "") << format_double(s.values[i]);
      o << "]}\n";
      return 0;
    }
    if (verify->parsed()) {
      SweepOptions opt;
      opt.alphas = {alpha};
      opt.tol = tol;
      opt.perturb = perturb;
      if (!params_csv.empty()) {
        std::vector<int> params = parse_int_list(params_csv);
        opt.instances.push_back({params.begin(), params.end()});
      } else if (n_param >= 0) {
        opt.instances.push_back({n_param});
      }
      auto reports = run_sweep(family, opt);
      OutputTarget target(out_path, out);
      return finish_reports(reports, format, target, err);
    }
    // sweep
    SweepOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    opt.count = count;
    if (!alphas_csv.empty()) {
      opt.alphas.clear();
      std::stringstream ss(alphas_csv);
      for (std::string item; std::getline(ss, item, ',');)
        opt.alphas.push_back(std::stod(item));
    }
    std::vector<std::string> run = suites.empty() ? known_suites() : suites;
    std::vector<VerificationReport> reports;
    for (const auto& s : run) {
      auto part = run_sweep(s, opt);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    OutputTarget target(out_path, out);
    return finish_reports(reports, format, target, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace aalpha
