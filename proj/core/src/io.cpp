#include "hgcalc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

long long parse_integer(std::string_view token, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

int parse_int(std::string_view token, int line) {
  const long long v = parse_integer(token, line);
  if (v < -2147483647LL || v > 2147483647LL) throw ParseError(line, "integer out of range");
  return static_cast<int>(v);
}

const Line& header(const std::vector<Line>& lines, std::string_view what) {
  if (lines.empty()) throw ParseError(0, "empty " + std::string(what) + " file");
  return lines.front();
}

void expect_size(const Line& l, std::size_t n, std::string_view what) {
  if (l.tokens.size() != n) {
    throw ParseError(l.number, "malformed " + std::string(what) + " line");
  }
}

bool parse_kind(const Line& l, std::string_view keyword) {
  expect_size(l, 2, keyword);
  if (l.tokens[0] != keyword) {
    throw ParseError(l.number, "expected header '" + std::string(keyword) + " oriented|unoriented'");
  }
  if (l.tokens[1] == "oriented") return true;
  if (l.tokens[1] == "unoriented") return false;
  throw ParseError(l.number, "unknown kind '" + l.tokens[1] + "'");
}

int parse_vertices(const std::vector<Line>& lines) {
  if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "vertices") {
    throw ParseError(lines.size() < 2 ? 0 : lines[1].number, "expected 'vertices <N>'");
  }
  return parse_int(lines[1].tokens[1], lines[1].number);
}

void append_ids(std::ostringstream& os, const std::vector<VertexId>& ids) {
  for (VertexId v : ids) os << ' ' << v;
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ParseError(line, "expected a finite number, got '" + std::string(token) + "'");
  }
  return v;
}

AnyHypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  const bool oriented = parse_kind(header(lines, "hypergraph"), "hypergraph");
  const int n = parse_vertices(lines);
  std::vector<Hyperarc> arcs;
  std::vector<Hyperedge> edges;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto& t = l.tokens;
    if (oriented) {
      if (t[0] != "arc" || t.size() < 2 || t[1] != "out") {
        throw ParseError(l.number, "expected 'arc out <ids> in <ids>'");
      }
      Hyperarc a;
      bool in_part = false;
      for (std::size_t p = 2; p < t.size(); ++p) {
        if (t[p] == "in") {
          if (in_part) throw ParseError(l.number, "repeated 'in'");
          in_part = true;
          continue;
        }
        (in_part ? a.in : a.out).push_back(parse_int(t[p], l.number));
      }
      if (!in_part) throw ParseError(l.number, "missing 'in'");
      arcs.push_back(std::move(a));
    } else {
      if (t[0] != "edge") throw ParseError(l.number, "expected 'edge <ids>'");
      Hyperedge e;
      for (std::size_t p = 1; p < t.size(); ++p) e.members.push_back(parse_int(t[p], l.number));
      edges.push_back(std::move(e));
    }
  }
  if (oriented) return OrientedHypergraph(n, std::move(arcs));
  return UnorientedHypergraph(n, std::move(edges));
}

std::string write_hypergraph(const OrientedHypergraph& h) {
  std::ostringstream os;
  os << "hypergraph oriented\nvertices " << h.vertex_count() << '\n';
  for (const Hyperarc& a : h.arcs()) {
    os << "arc out";
    append_ids(os, a.out);
    os << " in";
    append_ids(os, a.in);
    os << '\n';
  }
  return os.str();
}

std::string write_hypergraph(const UnorientedHypergraph& h) {
  std::ostringstream os;
  os << "hypergraph unoriented\nvertices " << h.vertex_count() << '\n';
  for (const Hyperedge& e : h.edges()) {
    os << "edge";
    append_ids(os, e.members);
    os << '\n';
  }
  return os.str();
}

std::string write_hypergraph(const AnyHypergraph& h) {
  return std::visit([](const auto& x) { return write_hypergraph(x); }, h);
}

WeightAssignment parse_weights(std::string_view text, int vertex_count, std::size_t arc_count) {
  const auto lines = tokenize(text);
  const Line& head = header(lines, "weights");
  if (head.tokens.size() != 1 || head.tokens[0] != "weights") throw ParseError(head.number, "expected header 'weights'");
  WeightAssignment w = WeightAssignment::unit(vertex_count, arc_count);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    expect_size(l, 4, "weight");
    const auto& t = l.tokens;
    const long long idx = parse_integer(t[2], l.number);
    const double value = parse_double(t[3], l.number);
    std::vector<double>* target = nullptr;
    if (t[0] == "vertex" && t[1] == "wI") target = &w.wI;
    if (t[0] == "vertex" && t[1] == "wG") target = &w.wG;
    if (t[0] == "arc" && t[1] == "WI") target = &w.WI;
    if (t[0] == "arc" && t[1] == "WG") target = &w.WG;
    if (!target) throw ParseError(l.number, "expected 'vertex wI|wG' or 'arc WI|WG'");
    if (idx < 1 || idx > static_cast<long long>(target->size())) {
      throw ParseError(l.number, "index " + t[2] + " out of range");
    }
    (*target)[static_cast<std::size_t>(idx - 1)] = value;
  }
  w.validate(vertex_count, arc_count);
  return w;
}

std::string write_weights(const WeightAssignment& w) {
  std::ostringstream os;
  os << "weights\n";
  for (std::size_t k = 0; k < w.wI.size(); ++k) os << "vertex wI " << k + 1 << ' ' << format_double(w.wI[k]) << '\n';
  for (std::size_t k = 0; k < w.wG.size(); ++k) os << "vertex wG " << k + 1 << ' ' << format_double(w.wG[k]) << '\n';
  for (std::size_t k = 0; k < w.WI.size(); ++k) os << "arc WI " << k + 1 << ' ' << format_double(w.WI[k]) << '\n';
  for (std::size_t k = 0; k < w.WG.size(); ++k) os << "arc WG " << k + 1 << ' ' << format_double(w.WG[k]) << '\n';
  return os.str();
}

FunctionData parse_function(std::string_view text, std::size_t expected_length) {
  const auto lines = tokenize(text);
  const Line& head = header(lines, "function");
  FunctionData fd{Space::Vertex, {}};
  if (head.tokens.size() == 1 && head.tokens[0] == "vertexfn") {
    fd.space = Space::Vertex;
  } else if (head.tokens.size() == 1 && head.tokens[0] == "arcfn") {
    fd.space = Space::Hyperarc;
  } else {
    throw ParseError(head.number, "expected header 'vertexfn' or 'arcfn'");
  }
  fd.values.assign(expected_length, 0.0);
  std::vector<bool> seen(expected_length, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    expect_size(l, 2, "function");
    const long long idx = parse_integer(l.tokens[0], l.number);
    if (idx < 1 || idx > static_cast<long long>(expected_length)) {
      throw ParseError(l.number, "index " + l.tokens[0] + " out of range 1.." + std::to_string(expected_length));
    }
    const auto pos = static_cast<std::size_t>(idx - 1);
    if (seen[pos]) throw ParseError(l.number, "index " + l.tokens[0] + " given twice");
    seen[pos] = true;
    fd.values[pos] = parse_double(l.tokens[1], l.number);
  }
  for (std::size_t k = 0; k < expected_length; ++k) {
    if (!seen[k]) throw ParseError(0, "function has no value for index " + std::to_string(k + 1));
  }
  return fd;
}

std::string write_function(Space space, const std::vector<double>& values) {
  std::ostringstream os;
  os << (space == Space::Vertex ? "vertexfn" : "arcfn") << '\n';
  for (std::size_t k = 0; k < values.size(); ++k) os << k + 1 << ' ' << format_double(values[k]) << '\n';
  return os.str();
}

SparseAdjacencyTensor parse_tensor(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& head = header(lines, "tensor");
  const auto& h = head.tokens;
  if (h.size() != 8 || h[0] != "tensor" || h[2] != "order" || h[4] != "dim" || h[6] != "mode") {
    throw ParseError(head.number, "expected 'tensor <oriented|unoriented> order <k> dim <N> mode <full|simplified>'");
  }
  SparseAdjacencyTensor t;
  if (h[1] == "oriented") {
    t.kind = TensorKind::Oriented;
  } else if (h[1] == "unoriented") {
    t.kind = TensorKind::Unoriented;
  } else {
    throw ParseError(head.number, "unknown tensor kind '" + h[1] + "'");
  }
  t.order = parse_int(h[3], head.number);
  t.dim = parse_int(h[5], head.number);
  if (t.order < 2) throw ParseError(head.number, "order must be at least 2");
  if (t.dim < 1) throw ParseError(head.number, "dim must be at least 1");
  if (h[7] == "full") {
    t.mode = EntryMode::Full;
  } else if (h[7] == "simplified") {
    t.mode = EntryMode::Simplified;
  } else {
    throw ParseError(head.number, "unknown mode '" + h[7] + "'");
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    expect_size(l, static_cast<std::size_t>(t.order) + 1, "tensor entry");
    IndexTuple tup;
    for (int p = 0; p < t.order; ++p) {
      const int v = parse_int(l.tokens[p], l.number);
      if (v < 1 || v > t.dim) throw ParseError(l.number, "index out of range 1.." + std::to_string(t.dim));
      tup.push_back(v);
    }
    const std::string& val = l.tokens.back();
    const auto slash = val.find('/');
    BigInt num;
    BigInt den = 1;
    try {
      num = BigInt(val.substr(0, slash));
      if (slash != std::string::npos) den = BigInt(val.substr(slash + 1));
    } catch (const std::exception&) {
      throw ParseError(l.number, "expected a rational value 'num/den', got '" + val + "'");
    }
    if (den <= 0) throw ParseError(l.number, "denominator must be positive");
    const Rational r(num, den);
    if (r <= 0) throw ParseError(l.number, "entries must be positive");
    if (t.entries.count(tup)) throw ParseError(l.number, "tuple given twice");
    t.entries[tup] = r;
  }
  return t;
}

std::string write_tensor(const SparseAdjacencyTensor& t) {
  std::ostringstream os;
  os << "tensor " << (t.kind == TensorKind::Oriented ? "oriented" : "unoriented") << " order " << t.order
     << " dim " << t.dim << " mode " << (t.mode == EntryMode::Full ? "full" : "simplified") << '\n';
  for (const auto& [tup, val] : t.entries) {
    for (VertexId v : tup) os << v << ' ';
    os << numerator(val) << '/' << denominator(val) << '\n';
  }
  return os.str();
}

AnyGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const bool oriented = parse_kind(header(lines, "graph"), "graph");
  const int n = parse_vertices(lines);
  std::vector<VertexPair> pairs;
  const char* keyword = oriented ? "arc" : "edge";
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    expect_size(l, 3, keyword);
    if (l.tokens[0] != keyword) throw ParseError(l.number, std::string("expected '") + keyword + " <i> <j>'");
    pairs.emplace_back(parse_int(l.tokens[1], l.number), parse_int(l.tokens[2], l.number));
  }
  if (oriented) return OrientedNormalGraph(n, std::move(pairs));
  return UnorientedNormalGraph(n, std::move(pairs));
}

std::string write_graph(const OrientedNormalGraph& g) {
  std::ostringstream os;
  os << "graph oriented\nvertices " << g.vertex_count() << '\n';
  for (const auto& [i, j] : g.arcs()) os << "arc " << i << ' ' << j << '\n';
  return os.str();
}

std::string write_graph(const UnorientedNormalGraph& g) {
  std::ostringstream os;
  os << "graph unoriented\nvertices " << g.vertex_count() << '\n';
  for (const auto& [i, j] : g.edges()) os << "edge " << i << ' ' << j << '\n';
  return os.str();
}

AnchorHints parse_anchors(std::string_view text) {
  const auto lines = tokenize(text);
  const Line& head = header(lines, "anchors");
  if (head.tokens.size() != 1 || head.tokens[0] != "anchors") throw ParseError(head.number, "expected header 'anchors'");
  AnchorHints hints;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    expect_size(l, 2, "anchor");
    const int v = parse_int(l.tokens[0], l.number);
    VertexRole role;
    if (l.tokens[1] == "original") {
      role = VertexRole::Original;
    } else if (l.tokens[1] == "encoder") {
      role = VertexRole::Encoder;
    } else {
      throw ParseError(l.number, "expected 'original' or 'encoder'");
    }
    hints.push_back({v, role});
  }
  return hints;
}

std::string write_anchors(const AnchorHints& hints) {
  std::ostringstream os;
  os << "anchors\n";
  for (const AnchorHint& h : hints) {
    os << h.vertex << ' ' << (h.role == VertexRole::Original ? "original" : "encoder") << '\n';
  }
  return os.str();
}

std::string write_anchor_inference(const AnchorInference& inference) {
  std::string out = write_anchors(inference.hints);
  for (const auto& comp : inference.unresolved) {
    out += "# unresolved";
    for (VertexId v : comp) out += ' ' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string write_multigraph(const MultiGraph& g) {
  std::ostringstream os;
  os << "multigraph " << (g.oriented ? "oriented" : "unoriented") << "\nvertices " << g.vertex_count << '\n';
  for (const auto& [pair, m] : g.multiplicity) {
    os << (g.oriented ? "arc " : "edge ") << pair.first << ' ' << pair.second << ' ' << m << '\n';
  }
  return os.str();
}

std::string write_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

std::string write_config(const OperatorConfig& cfg) {
  std::ostringstream os;
  os << "exponents " << format_double(cfg.alpha) << ',' << format_double(cfg.beta) << ','
     << format_double(cfg.gamma) << ',' << format_double(cfg.epsilon) << ',' << format_double(cfg.eta)
     << ',' << format_double(cfg.zeta) << ',' << format_double(cfg.theta) << '\n';
  os << "modes "
     << (cfg.vertex_cardinality_mode == CardinalityMode::Reciprocal ? "reciprocal" : "unit") << ','
     << (cfg.vertex_adjoint_mode == AdjointMode::Mirror ? "mirror" : "negated-total-degree") << ','
     << (cfg.hyperarc_degree_mode == DegreeFactorMode::ReciprocalInOut ? "reciprocal-in-out" : "unit") << ','
     << (cfg.hyperarc_adjoint_mode == AdjointMode::Mirror ? "mirror" : "negated-total-degree") << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hgcalc
