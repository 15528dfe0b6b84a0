#include "hgcalc/graph_reference.hpp"

#include <cmath>
#include <map>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

double signed_power(double x, double p) {
  return x == 0.0 ? 0.0 : std::pow(std::abs(x), p - 2.0) * x;
}

struct Context {
  const OrientedNormalGraph& g;
  const WeightAssignment& w;
  const OperatorConfig& cfg;
  std::map<VertexPair, std::size_t> index;  // 0-based arc position

  Context(const OrientedNormalGraph& graph, const WeightAssignment& weights, const OperatorConfig& c)
      : g(graph), w(weights), cfg(c) {
    for (std::size_t k = 0; k < g.arc_count(); ++k) index[g.arcs()[k]] = k;
  }

  bool delta(VertexId i, VertexId j) const { return index.count({i, j}) > 0; }

  // Position used for the arc weights of the pair (i, j).
  std::size_t weight_slot(VertexId i, VertexId j) const {
    auto it = index.find({i, j});
    if (it == index.end()) it = index.find({j, i});
    return it->second;
  }

  double WI(VertexId i, VertexId j, double e) const { return weight_pow(w.WI[weight_slot(i, j)], e); }
  double WG(VertexId i, VertexId j, double e) const { return weight_pow(w.WG[weight_slot(i, j)], e); }
  double wI(VertexId v, double e) const { return weight_pow(w.wI[v - 1], e); }
  double wG(VertexId v, double e) const { return weight_pow(w.wG[v - 1], e); }

  double F(VertexId i, VertexId j, const std::vector<double>& fn) const {
    return fn[index.at({i, j})];
  }

  double inv_deg_in(VertexId v) const {
    return cfg.hyperarc_degree_mode == DegreeFactorMode::Unit ? 1.0 : 1.0 / g.in_degree(v);
  }
  double inv_deg_out(VertexId v) const {
    return cfg.hyperarc_degree_mode == DegreeFactorMode::Unit ? 1.0 : 1.0 / g.out_degree(v);
  }

  int n() const { return g.vertex_count(); }
};

std::vector<double> grad_v(const Context& c, const std::vector<double>& f) {
  const auto& cfg = c.cfg;
  std::vector<double> out;
  for (const auto& [i, j] : c.g.arcs()) {
    out.push_back(c.WG(i, j, cfg.gamma) * (c.wI(j, cfg.alpha) * c.wG(j, cfg.epsilon) * f[j - 1] -
                                           c.wI(i, cfg.alpha) * c.wG(i, cfg.eta) * f[i - 1]));
  }
  return out;
}

std::vector<double> adj_v(const Context& c, const std::vector<double>& F) {
  const auto& cfg = c.cfg;
  std::vector<double> out(c.n(), 0.0);
  for (VertexId i = 1; i <= c.n(); ++i) {
    double s = 0.0;
    for (VertexId j = 1; j <= c.n(); ++j) {
      const bool ji = c.delta(j, i);
      const bool ij = c.delta(i, j);
      if (!ji && !ij) continue;
      const double t = (ji ? c.wG(i, cfg.epsilon) * c.F(j, i, F) : 0.0) -
                       (ij ? c.wG(i, cfg.eta) * c.F(i, j, F) : 0.0);
      s += t * c.WI(i, j, cfg.beta) * c.WG(i, j, cfg.gamma);
    }
    out[i - 1] = s;
  }
  return out;
}

std::vector<double> lap_v(const Context& c, const std::vector<double>& f) {
  const auto& cfg = c.cfg;
  const double a = cfg.alpha, e = cfg.epsilon, h = cfg.eta;
  std::vector<double> out(c.n(), 0.0);
  for (VertexId i = 1; i <= c.n(); ++i) {
    double s = 0.0;
    for (VertexId j = 1; j <= c.n(); ++j) {
      const double dij = c.delta(i, j) ? 1.0 : 0.0;
      const double dji = c.delta(j, i) ? 1.0 : 0.0;
      if (dij == 0.0 && dji == 0.0) continue;
      const double fj_coef = dij * c.wG(i, h) * c.wI(j, a) * c.wG(j, e) +
                             dji * c.wI(j, a) * c.wG(j, h) * c.wG(i, e);
      const double fi_coef = dij * c.wI(i, a) * c.wG(i, 2.0 * h) + dji * c.wI(i, a) * c.wG(i, 2.0 * e);
      s += (fj_coef * f[j - 1] - fi_coef * f[i - 1]) * c.WI(i, j, cfg.beta) *
           c.WG(i, j, 2.0 * cfg.gamma);
    }
    out[i - 1] = s;
  }
  return out;
}

std::vector<double> plap_v(const Context& c, const std::vector<double>& f, double p) {
  const auto& cfg = c.cfg;
  const double a = cfg.alpha, e = cfg.epsilon, h = cfg.eta;
  std::vector<double> out(c.n(), 0.0);
  for (VertexId i = 1; i <= c.n(); ++i) {
    double s = 0.0;
    for (VertexId j = 1; j <= c.n(); ++j) {
      const bool ij = c.delta(i, j);
      const bool ji = c.delta(j, i);
      if (!ij && !ji) continue;
      double t = 0.0;
      if (ij) {
        const double d = c.wI(j, a) * c.wG(j, e) * f[j - 1] - c.wI(i, a) * c.wG(i, h) * f[i - 1];
        t += c.wG(i, h) * signed_power(d, p);
      }
      if (ji) {
        const double d = c.wI(j, a) * c.wG(j, h) * f[j - 1] - c.wI(i, a) * c.wG(i, e) * f[i - 1];
        t += c.wG(i, e) * signed_power(d, p);
      }
      s += t * c.WI(i, j, cfg.beta) * c.WG(i, j, p * cfg.gamma);
    }
    out[i - 1] = s;
  }
  return out;
}

// Sum over arcs at v of (delta_in / deg_in - delta_out / deg_out) W_I^beta W_G^theta F.
double arc_sum(const Context& c, VertexId v, const std::vector<double>& F) {
  const auto& cfg = c.cfg;
  double s = 0.0;
  for (VertexId k = 1; k <= c.n(); ++k) {
    if (c.delta(k, v)) s += c.F(k, v, F) * c.WI(k, v, cfg.beta) * c.WG(k, v, cfg.theta) * c.inv_deg_in(v);
    if (c.delta(v, k)) s -= c.F(v, k, F) * c.WI(v, k, cfg.beta) * c.WG(v, k, cfg.theta) * c.inv_deg_out(v);
  }
  return s;
}

std::vector<double> grad_a(const Context& c, const std::vector<double>& F) {
  std::vector<double> out(c.n(), 0.0);
  for (VertexId i = 1; i <= c.n(); ++i) out[i - 1] = c.wG(i, c.cfg.zeta) * arc_sum(c, i, F);
  return out;
}

std::vector<double> adj_a(const Context& c, const std::vector<double>& f) {
  const auto& cfg = c.cfg;
  std::vector<double> out;
  for (const auto& [i, j] : c.g.arcs()) {
    out.push_back(c.WG(i, j, cfg.theta) *
                  (c.wI(j, cfg.alpha) * c.wG(j, cfg.zeta) * f[j - 1] * c.inv_deg_in(j) -
                   c.wI(i, cfg.alpha) * c.wG(i, cfg.zeta) * f[i - 1] * c.inv_deg_out(i)));
  }
  return out;
}

std::vector<double> lap_a(const Context& c, const std::vector<double>& F, std::optional<double> p) {
  const auto& cfg = c.cfg;
  const double zp = p ? *p * cfg.zeta : 2.0 * cfg.zeta;
  std::vector<double> s(c.n(), 0.0);
  for (VertexId v = 1; v <= c.n(); ++v) {
    const double x = arc_sum(c, v, F);
    s[v - 1] = p ? signed_power(x, *p) : x;
  }
  std::vector<double> out;
  for (const auto& [i, j] : c.g.arcs()) {
    out.push_back(c.WG(i, j, cfg.theta) *
                  (c.wI(i, cfg.alpha) * c.wG(i, zp) * c.inv_deg_out(i) * s[i - 1] -
                   c.wI(j, cfg.alpha) * c.wG(j, zp) * c.inv_deg_in(j) * s[j - 1]));
  }
  return out;
}

void check_length(const std::vector<double>& fn, std::size_t expected) {
  if (fn.size() != expected) {
    throw Error(ErrorCode::LengthMismatch, "function has " + std::to_string(fn.size()) +
                                               " values, expected " + std::to_string(expected));
  }
}

}  // namespace

GraphOp graph_op_from_name(std::string_view name) {
  for (GraphOp op : {GraphOp::GradV, GraphOp::AdjV, GraphOp::DivV, GraphOp::LapV, GraphOp::PLapV,
                     GraphOp::GradA, GraphOp::AdjA, GraphOp::DivA, GraphOp::LapA, GraphOp::PLapA}) {
    if (graph_op_name(op) == name) return op;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator '" + std::string(name) + "'");
}

std::string_view graph_op_name(GraphOp op) {
  switch (op) {
    case GraphOp::GradV: return "grad_v";
    case GraphOp::AdjV: return "adj_v";
    case GraphOp::DivV: return "div_v";
    case GraphOp::LapV: return "lap_v";
    case GraphOp::PLapV: return "plap_v";
    case GraphOp::GradA: return "grad_a";
    case GraphOp::AdjA: return "adj_a";
    case GraphOp::DivA: return "div_a";
    case GraphOp::LapA: return "lap_a";
    case GraphOp::PLapA: return "plap_a";
  }
  return "";
}

Space graph_op_input_space(GraphOp op) {
  switch (op) {
    case GraphOp::GradV:
    case GraphOp::LapV:
    case GraphOp::PLapV:
    case GraphOp::AdjA:
    case GraphOp::DivA:
      return Space::Vertex;
    default:
      return Space::Hyperarc;
  }
}

std::vector<double> graph_reference(GraphOp op, const OrientedNormalGraph& g,
                                    const WeightAssignment& w, const OperatorConfig& cfg,
                                    const std::vector<double>& fn, std::optional<double> p) {
  if (cfg.vertex_adjoint_mode != AdjointMode::Mirror ||
      cfg.hyperarc_adjoint_mode != AdjointMode::Mirror) {
    throw Error(ErrorCode::UnsupportedMode, "graph reference formulas use Mirror adjoints");
  }
  w.validate(g.vertex_count(), g.arc_count());
  check_length(fn, graph_op_input_space(op) == Space::Vertex
                       ? static_cast<std::size_t>(g.vertex_count())
                       : g.arc_count());
  if (op == GraphOp::PLapV || op == GraphOp::PLapA) {
    if (!p || !std::isfinite(*p) || !(*p > 1.0)) {
      throw Error(ErrorCode::InvalidP, "p must be a finite real greater than 1");
    }
  }
  const Context c(g, w, cfg);
  auto negate = [](std::vector<double> v) {
    for (double& x : v) x = -x;
    return v;
  };
  switch (op) {
    case GraphOp::GradV: return grad_v(c, fn);
    case GraphOp::AdjV: return adj_v(c, fn);
    case GraphOp::DivV: return negate(adj_v(c, fn));
    case GraphOp::LapV: return lap_v(c, fn);
    case GraphOp::PLapV: return plap_v(c, fn, *p);
    case GraphOp::GradA: return grad_a(c, fn);
    case GraphOp::AdjA: return adj_a(c, fn);
    case GraphOp::DivA: return negate(adj_a(c, fn));
    case GraphOp::LapA: return lap_a(c, fn, std::nullopt);
    case GraphOp::PLapA: return lap_a(c, fn, p);
  }
  return {};
}

std::vector<double> graph_reference(GraphOp op, const OrientedHypergraph& h,
                                    const WeightAssignment& w, const OperatorConfig& cfg,
                                    const std::vector<double>& fn, std::optional<double> p) {
  std::vector<VertexPair> arcs;
  for (std::size_t q = 0; q < h.arc_count(); ++q) {
    const Hyperarc& a = h.arcs()[q];
    if (a.out.size() != 1 || a.in.size() != 1) {
      throw Error(ErrorCode::NotAGraph, "hyperarc " + std::to_string(q + 1) + " has a side with more than one vertex");
    }
    arcs.emplace_back(a.out.front(), a.in.front());
  }
  return graph_reference(op, OrientedNormalGraph(h.vertex_count(), std::move(arcs)), w, cfg, fn, p);
}

}  // namespace hgcalc
