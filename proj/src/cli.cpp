#include "tropigraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropigraph/applications.hpp"
#include "tropigraph/constructions.hpp"
#include "tropigraph/error.hpp"
#include "tropigraph/json_io.hpp"
#include "tropigraph/verifier.hpp"

namespace tropigraph {

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot read '" + path + "'");
  return read_all(file);
}

Graph read_graph(const std::string& text, const std::string& format) {
  if (format == "graph6") return parse_graph6(text);
  if (format == "edges") return parse_edge_list(text);
  return parse_graph_auto(text);
}

int parse_count(const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw ParseError("bad integer '" + text + "'");
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + text + "'");
  }
}

std::vector<int> split_params(const std::vector<std::string>& raw) {
  std::vector<int> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (!piece.empty()) out.push_back(parse_count(piece));
    }
  }
  return out;
}

// Integers print bare, other rationals as p/q.
std::string plain(const TropicalValue& x) {
  if (x.is_finite() && boost::multiprecision::denominator(x.value()) == 1) {
    return boost::multiprecision::numerator(x.value()).str();
  }
  return x.to_string();
}

Representation build_representation(const Graph& g, const std::string& method,
                                    const std::string& algebra, const Rational& t,
                                    int k_offset) {
  auto fixed = [&](Algebra required) {
    if (!algebra.empty() && parse_algebra(algebra) != required) {
      throw BadParameter("method '" + method + "' produces " +
                         std::string(algebra_name(required)) + " representations");
    }
  };
  const Algebra chosen = algebra.empty() ? Algebra::MinPlus : parse_algebra(algebra);
  Representation rep;
  if (method == "generic") {
    return chosen == Algebra::MinPlus ? minplus_generic(g, t) : maxplus_generic(g, t);
  } else if (method == "threshold") {
    return threshold_1dim(g, t, chosen);
  } else if (method == "extension") {
    fixed(Algebra::MinPlus);
    return minplus_by_extension(g, t);
  } else if (method == "caterpillar") {
    fixed(Algebra::MinPlus);
    rep = represent_caterpillar_forest(g, k_offset);
  } else if (method == "multipartite") {
    fixed(Algebra::MinPlus);
    rep = represent_multipartite(g);
  } else if (method == "cycle3") {
    fixed(Algebra::MinPlus);
    rep = represent_cycle(g);
  } else if (method == "cover") {
    fixed(Algebra::MaxPlus);
    rep = maxplus_from_cover(g, theta(g, limits_from_env()));
  } else if (method == "intersection") {
    fixed(Algebra::MinPlus);
    rep = minplus_from_intersection(g, theta_hat(g, limits_from_env()));
  } else {
    throw BadParameter("unknown method '" + method + "'");
  }
  return t == rep.threshold ? rep : rescale(rep, t);
}

void print_demo(const LabelledData& data, std::ostream& out) {
  const Representation& rep = data.rep;
  out << "algebra: " << algebra_name(rep.algebra) << "\n";
  out << "threshold: " << plain(TropicalValue(rep.threshold)) << "\n";
  for (int v = 0; v < rep.order(); ++v) {
    out << data.names[v] << " = [";
    for (std::size_t i = 0; i < rep.vectors[v].dim(); ++i) {
      out << (i ? ", " : "") << plain(rep.vectors[v][i]);
    }
    out << "]\n";
  }
  const Graph g = realize_graph(rep);
  out << "edges:";
  for (const auto& label : edge_labels(g, data.names)) out << " " << label;
  out << "\n";
}

int run_demo(const std::string& which, std::ostream& out) {
  if (which == "students") {
    const LabelledData data = student_ratings();
    out << "students: pair students whose combined rating reaches 3 in every area\n";
    print_demo(data, out);
    return kExitOk;
  }
  const LabelledData data = mutual_funds();
  out << "funds: connect funds that share at least one holding\n";
  print_demo(data, out);
  const Graph g = realize_graph(data.rep);
  const std::vector<Vertex> ae{0, 4};
  out << "{A,E} maximal independent set: "
      << (is_maximal_independent(g, ae) ? "yes" : "no") << "\n";
  out << "independence number: " << alpha(g) << "\n";
  return kExitOk;
}

}  // namespace

SearchLimits limits_from_env() {
  SearchLimits limits;
  const char* raw = std::getenv("TROPIGRAPH_EXACT_LIMIT");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string text(raw);
  const auto comma = text.find(',');
  limits.theta_vertices = parse_count(text.substr(0, comma));
  if (comma != std::string::npos) limits.theta_edges = parse_count(text.substr(comma + 1));
  return limits;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Tropical dot-product representations of graphs", "tropigraph"};
  app.require_subcommand(1, 1);

  std::string family;
  std::vector<std::string> params;
  std::string out_format = "graph6";
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("--family", family,
                  "path|cycle|complete|empty|multipartite|star|matching|caterpillar")
      ->required();
  gen->add_option("--params", params, "Family parameters (space or comma separated)");
  gen->add_option("--format", out_format, "Output format")
      ->check(CLI::IsMember({"graph6", "edges"}));

  std::string algebra;
  std::string method = "generic";
  std::string t_text = "1/1";
  std::string in_format = "auto";
  int k_offset = 2;
  auto* repr = app.add_subcommand("repr", "Build a representation of the graph on stdin");
  repr->add_option("--algebra", algebra, "min|max")->check(CLI::IsMember({"min", "max"}));
  repr->add_option("--method", method,
                   "generic|threshold|extension|caterpillar|multipartite|cover|"
                   "intersection|cycle3")
      ->check(CLI::IsMember({"generic", "threshold", "extension", "caterpillar",
                             "multipartite", "cover", "intersection", "cycle3"}));
  repr->add_option("--t", t_text, "Threshold p/q (> 0)");
  repr->add_option("--k", k_offset, "Caterpillar label offset (>= 2)");
  repr->add_option("--format", in_format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  int exact_limit = 0;
  auto* dim = app.add_subcommand("dim", "Tropical dimensions of the graph on stdin");
  dim->add_option("--exact-limit", exact_limit, "Vertex limit for exact search");
  dim->add_option("--format", in_format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  std::string graph_path;
  std::string rep_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a representation against a graph");
  verify_cmd->add_option("--graph", graph_path, "Graph file (graph6 or edge list)")
      ->required();
  verify_cmd->add_option("--rep", rep_path, "Representation JSON file")->required();

  auto* slices = app.add_subcommand("slices", "Per-coordinate threshold graphs");
  slices->add_option("--rep", rep_path, "Representation JSON file")->required();

  int n_max = 6;
  auto* conjecture = app.add_subcommand("conjecture", "Compare both dimensions exhaustively");
  conjecture->add_option("--n-max", n_max, "Largest vertex count");

  std::string which;
  auto* demo = app.add_subcommand("demo", "Replay an application example");
  demo->add_option("which", which, "students|funds")
      ->required()
      ->check(CLI::IsMember({"students", "funds"}));

  std::vector<std::string> storage{"tropigraph"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "tropigraph: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (gen->parsed()) {
      const Graph g = generate(family, split_params(params));
      out << (out_format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n");
      return kExitOk;
    }
    if (repr->parsed()) {
      const Rational t = parse_rational(t_text);
      const Graph g = read_graph(read_all(in), in_format);
      out << to_json(build_representation(g, method, algebra, t, k_offset)).dump() << "\n";
      return kExitOk;
    }
    if (dim->parsed()) {
      SearchLimits limits = limits_from_env();
      if (exact_limit > 0) limits.theta_vertices = exact_limit;
      const Graph g = read_graph(read_all(in), in_format);
      out << to_json(rho(g, limits)).dump() << "\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const Graph g = parse_graph_auto(read_file(graph_path));
      const Representation rep = representation_from_json(Json::parse(read_file(rep_path)));
      const VerificationReport report = verify(g, rep);
      out << to_json(report).dump() << "\n";
      return report.valid ? kExitOk : kExitViolation;
    }
    if (slices->parsed()) {
      const Representation rep = representation_from_json(Json::parse(read_file(rep_path)));
      const auto parts = project_slices(rep);
      const int n = rep.order();
      const bool max_plus = rep.algebra == Algebra::MaxPlus;
      Graph combined = max_plus ? Graph(n) : complement(Graph(n));
      Json list = Json::array();
      for (const Graph& s : parts) {
        list.push_back(to_graph6(s));
        combined = max_plus ? graph_union(combined, s) : graph_intersection(combined, s);
      }
      const Graph realized = realize_graph(rep);
      out << Json{{"schema", kSchema},
                  {"algebra", std::string(algebra_name(rep.algebra))},
                  {"slices", std::move(list)},
                  {"law", max_plus ? "union" : "intersection"},
                  {"combined", to_graph6(combined)},
                  {"realized", to_graph6(realized)},
                  {"holds", combined == realized}}
                 .dump()
          << "\n";
      return kExitOk;
    }
    if (conjecture->parsed()) {
      if (n_max < 1) throw BadParameter("--n-max must be positive");
      out << to_json(check_conjecture(n_max, limits_from_env())).dump() << "\n";
      return kExitOk;
    }
    if (demo->parsed()) return run_demo(which, out);
  } catch (const Error& e) {
    err << "tropigraph: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "tropigraph: invalid JSON: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tropigraph
