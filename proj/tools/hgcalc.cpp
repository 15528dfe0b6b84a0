#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "hgcalc/errors.hpp"
#include "hgcalc/graph.hpp"
#include "hgcalc/graph_reference.hpp"
#include "hgcalc/hypergraph.hpp"
#include "hgcalc/io.hpp"
#include "hgcalc/matrices.hpp"
#include "hgcalc/operators.hpp"
#include "hgcalc/properties.hpp"
#include "hgcalc/representations.hpp"
#include "hgcalc/tensor.hpp"

namespace {

using namespace hgcalc;

enum Exit { kOk = 0, kValidation = 1, kParse = 2, kAmbiguous = 3, kPropertyFailure = 4 };

// First keyword of the first non-comment line.
std::string file_kind(const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    if (words >> word) return word;
  }
  return {};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, sep)) parts.push_back(part);
  return parts;
}

// Hypergraph file, or a graph file embedded as a hypergraph.
AnyHypergraph load_hypergraph(const std::string& path) {
  const std::string text = read_file(path);
  if (file_kind(text) == "graph") {
    return std::visit([](const auto& g) -> AnyHypergraph { return graph_as_hypergraph(g); }, parse_graph(text));
  }
  return parse_hypergraph(text);
}

OrientedHypergraph load_oriented(const std::string& path) {
  AnyHypergraph h = load_hypergraph(path);
  if (auto* o = std::get_if<OrientedHypergraph>(&h)) return *o;
  throw Error(ErrorCode::InvalidArgument, "'" + path + "' is not an oriented hypergraph");
}

void apply_exponents(const std::string& text, OperatorConfig& cfg) {
  const auto parts = split(text, ',');
  if (parts.size() != 7) throw ParseError(0, "--exponents needs 7 comma-separated values alpha,beta,gamma,epsilon,eta,zeta,theta");
  double* fields[] = {&cfg.alpha, &cfg.beta, &cfg.gamma, &cfg.epsilon, &cfg.eta, &cfg.zeta, &cfg.theta};
  for (std::size_t i = 0; i < 7; ++i) *fields[i] = parse_double(parts[i], 0);
}

AdjointMode parse_adjoint_mode(const std::string& s) {
  if (s == "mirror") return AdjointMode::Mirror;
  if (s == "negated-total-degree") return AdjointMode::NegatedTotalDegree;
  throw ParseError(0, "unknown adjoint mode '" + s + "'");
}

void apply_modes(const std::string& text, OperatorConfig& cfg) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw ParseError(0, "--modes needs 4 comma-separated values: vertex cardinality, vertex adjoint, hyperarc degree, hyperarc adjoint");
  }
  if (parts[0] == "reciprocal") {
    cfg.vertex_cardinality_mode = CardinalityMode::Reciprocal;
  } else if (parts[0] == "unit") {
    cfg.vertex_cardinality_mode = CardinalityMode::Unit;
  } else {
    throw ParseError(0, "unknown cardinality mode '" + parts[0] + "'");
  }
  cfg.vertex_adjoint_mode = parse_adjoint_mode(parts[1]);
  if (parts[2] == "reciprocal-in-out") {
    cfg.hyperarc_degree_mode = DegreeFactorMode::ReciprocalInOut;
  } else if (parts[2] == "unit") {
    cfg.hyperarc_degree_mode = DegreeFactorMode::Unit;
  } else {
    throw ParseError(0, "unknown degree mode '" + parts[2] + "'");
  }
  cfg.hyperarc_adjoint_mode = parse_adjoint_mode(parts[3]);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write file '" + path + "'");
  out << text;
}

std::string info_text(const OrientedHypergraph& h) {
  std::ostringstream os;
  os << "kind oriented\nvertices " << h.vertex_count() << "\narcs " << h.arc_count() << '\n';
  if (h.arc_count() > 0) {
    const auto [lo, hi] = cardinality_bounds(h);
    os << "cardinality " << lo << ' ' << hi << '\n';
  }
  os << "# vertex out in total\n";
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    os << "degree " << v << ' ' << h.degree(v, DegreeMode::Out) << ' ' << h.degree(v, DegreeMode::In) << ' '
       << h.degree(v) << '\n';
  }
  return os.str();
}

std::string info_text(const UnorientedHypergraph& h) {
  std::ostringstream os;
  os << "kind unoriented\nvertices " << h.vertex_count() << "\nedges " << h.edge_count() << '\n';
  if (h.edge_count() > 0) {
    const auto [lo, hi] = cardinality_bounds(h);
    os << "cardinality " << lo << ' ' << hi << '\n';
  }
  os << "# vertex total\n";
  for (VertexId v = 1; v <= h.vertex_count(); ++v) os << "degree " << v << ' ' << h.degree(v) << '\n';
  return os.str();
}

struct OpArgs {
  std::string kind;
  std::string hypergraph;
  std::string preset;
  std::string exponents;
  std::string modes;
  std::string weights;
  std::string fn;
  std::optional<double> p;
  std::string method = "composed";
  bool suggested_weights = false;
};

int run_op(const OpArgs& a) {
  const GraphOp op = graph_op_from_name(a.kind);
  const OrientedHypergraph h = load_oriented(a.hypergraph);
  OperatorConfig cfg;
  std::optional<Preset> preset;
  if (!a.preset.empty()) {
    preset = preset_from_name(a.preset);
    cfg = preset_config(*preset);
  }
  if (!a.exponents.empty()) apply_exponents(a.exponents, cfg);
  if (!a.modes.empty()) apply_modes(a.modes, cfg);

  WeightAssignment w = a.weights.empty() ? WeightAssignment::unit(h.vertex_count(), h.arc_count())
                                         : parse_weights(read_file(a.weights), h.vertex_count(), h.arc_count());
  if (a.suggested_weights) {
    const std::optional<double> wi = preset ? preset_suggested_WI(*preset) : std::nullopt;
    if (!wi) throw Error(ErrorCode::InvalidArgument, "--suggested-weights needs a preset with a suggested W_I");
    std::fill(w.WI.begin(), w.WI.end(), *wi);
  }

  const Space in = graph_op_input_space(op);
  const std::size_t len = in == Space::Vertex ? static_cast<std::size_t>(h.vertex_count()) : h.arc_count();
  const FunctionData fd = parse_function(read_file(a.fn), len);
  if (fd.space != in) throw Error(ErrorCode::InvalidArgument, std::string(a.kind) + " takes a " + (in == Space::Vertex ? "vertexfn" : "arcfn"));
  const std::vector<double>& f = fd.values;

  const bool needs_p = op == GraphOp::PLapV || op == GraphOp::PLapA;
  if (needs_p && !a.p) throw Error(ErrorCode::InvalidP, a.kind + " needs --p");
  if (!needs_p && a.p) throw Error(ErrorCode::InvalidArgument, "--p only applies to plap_v and plap_a");
  Method method;
  if (a.method == "composed") {
    method = Method::Composed;
  } else if (a.method == "explicit") {
    method = Method::Explicit;
  } else {
    throw ParseError(0, "unknown method '" + a.method + "'");
  }

  std::vector<double> out;
  Space out_space = in == Space::Vertex ? Space::Hyperarc : Space::Vertex;
  switch (op) {
    case GraphOp::GradV: out = vertex_gradient(h, w, cfg, f); break;
    case GraphOp::AdjV: out = vertex_adjoint(h, w, cfg, f); break;
    case GraphOp::DivV: out = vertex_divergence(h, w, cfg, f); break;
    case GraphOp::LapV: out = vertex_laplacian(h, w, cfg, f, method); out_space = in; break;
    case GraphOp::PLapV: out = vertex_p_laplacian(h, w, cfg, f, *a.p, method); out_space = in; break;
    case GraphOp::GradA: out = hyperarc_gradient(h, w, cfg, f); break;
    case GraphOp::AdjA: out = hyperarc_adjoint(h, w, cfg, f); break;
    case GraphOp::DivA: out = hyperarc_divergence(h, w, cfg, f); break;
    case GraphOp::LapA: out = hyperarc_laplacian(h, w, cfg, f, method); out_space = in; break;
    case GraphOp::PLapA: out = hyperarc_p_laplacian(h, w, cfg, f, *a.p, method); out_space = in; break;
  }
  std::cout << write_function(out_space, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete calculus and encodings on oriented and unoriented hypergraphs"};
  app.require_subcommand(1);

  std::string file, out_path, anchors_path;

  auto* info = app.add_subcommand("info", "Vertex and hyperarc counts, cardinalities and degrees");
  info->add_option("FILE", file, "hypergraph or graph file")->required();

  auto* validate = app.add_subcommand("validate", "Parse and validate a hypergraph or graph file");
  validate->add_option("FILE", file)->required();

  auto* sw = app.add_subcommand("switch", "Swap the sides of every hyperarc");
  sw->add_option("FILE", file)->required();

  auto* incidence = app.add_subcommand("incidence", "Incidence matrix");
  incidence->add_option("FILE", file)->required();

  auto* adjacency = app.add_subcommand("adjacency", "Adjacency matrix of a normal graph");
  adjacency->add_option("FILE", file)->required();

  auto* tensor = app.add_subcommand("tensor", "Adjacency tensors");
  tensor->require_subcommand(1);
  bool full = false, increased = false, greedy = false, verify = false;
  auto* encode = tensor->add_subcommand("encode", "Encode a hypergraph as a sparse adjacency tensor");
  encode->add_option("FILE", file)->required();
  encode->add_flag("--full", full, "divide shares by the surjection count instead of using n/2");
  encode->add_flag("--increased", increased, "order max_a + 2 (oriented only)");
  auto* decode = tensor->add_subcommand("decode", "Recover a hypergraph from an adjacency tensor");
  decode->add_option("TFILE", file)->required();
  decode->add_flag("--greedy", greedy, "resolve ambiguous tuples by backtracking search");
  decode->add_flag("--verify", verify, "report the re-encoding check on stderr");

  auto* represent = app.add_subcommand("represent", "Normal graph representations");
  represent->require_subcommand(1);
  auto* bipartite = represent->add_subcommand("bipartite", "Star expansion");
  bipartite->add_option("FILE", file)->required();
  bipartite->add_option("--anchors", anchors_path, "write one ground-truth anchor per component to this file");
  auto* clique = represent->add_subcommand("clique", "Clique expansion");
  clique->add_option("FILE", file)->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Invert a star expansion");
  reconstruct->add_option("GFILE", file)->required();
  reconstruct->add_option("--anchors", anchors_path, "anchors file")->required();

  int min_card = 0, max_card = 0;
  auto* anchors = app.add_subcommand("anchors", "Infer anchors from cardinality bounds");
  anchors->add_option("GFILE", file)->required();
  anchors->add_option("--min", min_card, "minimum hyperarc cardinality")->required();
  anchors->add_option("--max", max_card, "maximum hyperarc cardinality")->required();

  OpArgs op_args;
  auto* op = app.add_subcommand("op", "Apply an operator to a vertex or hyperarc function");
  op->add_option("KIND", op_args.kind, "grad_v adj_v div_v lap_v plap_v grad_a adj_a div_a lap_a plap_a")->required();
  op->add_option("HFILE", op_args.hypergraph, "oriented hypergraph or graph file")->required();
  op->add_option("--preset", op_args.preset,
                 "general-default elmoataz-graph-vertex elmoataz-graph-arc jost-vertex jost-hyperarc");
  op->add_option("--exponents", op_args.exponents, "alpha,beta,gamma,epsilon,eta,zeta,theta");
  op->add_option("--modes", op_args.modes,
                 "reciprocal|unit,mirror|negated-total-degree,reciprocal-in-out|unit,mirror|negated-total-degree");
  op->add_option("--weights", op_args.weights, "weights file (missing entries are 1)");
  op->add_option("--fn", op_args.fn, "vertexfn or arcfn file")->required();
  op->add_option("--p", op_args.p, "exponent of the p-Laplacian");
  op->add_option("--method", op_args.method, "composed or explicit");
  op->add_flag("--suggested-weights", op_args.suggested_weights, "set every W_I to the preset's suggested value");

  std::string suite = "all";
  int trials = 50;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "Run the seeded property suite");
  check->add_option("SUITE", suite, "duality composition reduction presets tensor representation all");
  check->add_option("--trials", trials, "trials per random property");
  check->add_option("--seed", seed, "run seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*info) {
      std::cout << std::visit([](const auto& h) { return info_text(h); }, load_hypergraph(file));
    } else if (*validate) {
      const std::string text = read_file(file);
      if (file_kind(text) == "graph") {
        parse_graph(text);
      } else {
        parse_hypergraph(text);
      }
      std::cout << "valid\n";
    } else if (*sw) {
      std::cout << write_hypergraph(switch_orientation(load_oriented(file)));
    } else if (*incidence) {
      std::cout << write_matrix(std::visit([](const auto& h) { return incidence_matrix(h); }, load_hypergraph(file)));
    } else if (*adjacency) {
      std::cout << write_matrix(std::visit([](const auto& g) { return adjacency_matrix(g); }, parse_graph(read_file(file))));
    } else if (*encode) {
      const EntryMode mode = full ? EntryMode::Full : EntryMode::Simplified;
      const AnyHypergraph h = load_hypergraph(file);
      if (const auto* o = std::get_if<OrientedHypergraph>(&h)) {
        std::cout << write_tensor(encode_tensor(*o, mode, increased));
      } else {
        if (increased) throw Error(ErrorCode::InvalidArgument, "--increased needs an oriented hypergraph");
        std::cout << write_tensor(encode_tensor(std::get<UnorientedHypergraph>(h), mode));
      }
    } else if (*decode) {
      const SparseAdjacencyTensor t = parse_tensor(read_file(file));
      if (t.kind == TensorKind::Oriented) {
        const OrientedHypergraph h = decode_tensor_oriented(t, greedy ? DecodeStrategy::Greedy : DecodeStrategy::Strict);
        if (verify) std::cerr << (verify_decode(t, h) ? "verified\n" : "verification failed\n");
        std::cout << write_hypergraph(h);
      } else {
        const UnorientedHypergraph h = decode_tensor_unoriented(t);
        if (verify) std::cerr << (verify_decode(t, h) ? "verified\n" : "verification failed\n");
        std::cout << write_hypergraph(h);
      }
    } else if (*bipartite) {
      std::visit(
          [&](const auto& h) {
            const auto star = to_bipartite(h);
            std::cout << write_graph(star.graph);
            if (!anchors_path.empty()) write_output(write_anchors(star.hints), anchors_path);
          },
          load_hypergraph(file));
    } else if (*clique) {
      std::cout << write_multigraph(std::visit([](const auto& h) { return to_clique(h); }, load_hypergraph(file)));
    } else if (*reconstruct) {
      const AnchorHints hints = parse_anchors(read_file(anchors_path));
      std::cout << std::visit([&](const auto& g) { return write_hypergraph(from_bipartite(g, hints).hypergraph); },
                              parse_graph(read_file(file)));
    } else if (*anchors) {
      const AnchorInference inference = std::visit(
          [&](const auto& g) { return infer_anchors(g, min_card, max_card); }, parse_graph(read_file(file)));
      std::cout << write_anchor_inference(inference);
      if (!inference.unresolved.empty()) {
        std::cerr << inference.unresolved.size() << " component(s) without an anchor\n";
        return kValidation;
      }
    } else if (*op) {
      return run_op(op_args);
    } else if (*check) {
      const PropertyReport report = run_property_suite(suite, seed, trials);
      std::cout << report.to_text();
      return report.passed() ? kOk : kPropertyFailure;
    }
  } catch (const AmbiguousTensorError& e) {
    std::cerr << e.what() << '\n';
    for (const Hyperarc& a : e.candidates()) {
      std::cerr << "  candidate out";
      for (VertexId v : a.out) std::cerr << ' ' << v;
      std::cerr << " in";
      for (VertexId v : a.in) std::cerr << ' ' << v;
      std::cerr << '\n';
    }
    return kAmbiguous;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
