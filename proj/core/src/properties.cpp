#include "hgcalc/properties.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hgcalc/counting.hpp"
#include "hgcalc/errors.hpp"
#include "hgcalc/fixtures.hpp"
#include "hgcalc/graph.hpp"
#include "hgcalc/graph_reference.hpp"
#include "hgcalc/io.hpp"
#include "hgcalc/matrices.hpp"
#include "hgcalc/random.hpp"
#include "hgcalc/representations.hpp"
#include "hgcalc/tensor.hpp"

namespace hgcalc {

namespace {

using Failure = std::optional<std::string>;

constexpr double kPValues[] = {1.5, 2.0, 2.5, 3.0};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_vector(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += format_double(v[i]);
  }
  return s;
}

std::string mismatch(std::string_view what, const std::vector<double>& got,
                     const std::vector<double>& want) {
  std::string s(what);
  s += "\n  got:      " + format_vector(got);
  s += "\n  expected: " + format_vector(want);
  return s;
}

std::string mismatch(std::string_view what, double got, double want) {
  return std::string(what) + "\n  got:      " + format_double(got) +
         "\n  expected: " + format_double(want);
}

std::string describe(const OrientedHypergraph& h, const WeightAssignment& w, const OperatorConfig& cfg) {
  return write_hypergraph(h) + write_weights(w) + write_config(cfg);
}

// Runs one property and records its first failure.
class Runner {
 public:
  Runner(std::uint64_t seed, int trials, PropertyReport& report)
      : seed_(seed), trials_(trials), report_(report) {}

  template <typename Check>
  void random(std::string_view name, Check check) {
    PropertyOutcome outcome;
    outcome.name = std::string(name);
    const std::uint64_t base = fnv1a(name);
    for (int k = 0; k < trials_; ++k) {
      const std::uint64_t sub = derive_seed(seed_, base + static_cast<std::uint64_t>(k));
      SplitMix64 rng(sub);
      Failure failure = guarded([&] { return check(rng); });
      ++outcome.checks;
      if (failure) {
        outcome.passed = false;
        outcome.counterexample = "trial " + std::to_string(k) + " seed " + std::to_string(sub) + "\n" + *failure;
        break;
      }
    }
    report_.outcomes.push_back(std::move(outcome));
  }

  template <typename Check>
  void fixed(std::string_view name, Check check) {
    PropertyOutcome outcome;
    outcome.name = std::string(name);
    Failure failure = guarded(check);
    outcome.checks = 1;
    if (failure) {
      outcome.passed = false;
      outcome.counterexample = "fixture\n" + *failure;
    }
    report_.outcomes.push_back(std::move(outcome));
  }

 private:
  template <typename Check>
  static Failure guarded(Check&& check) {
    try {
      return check();
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  }

  std::uint64_t seed_;
  int trials_;
  PropertyReport& report_;
};

struct VertexModes {
  CardinalityMode cardinality;
  AdjointMode adjoint;
};
struct HyperarcModes {
  DegreeFactorMode degree;
  AdjointMode adjoint;
};

constexpr VertexModes kVertexModes[] = {
    {CardinalityMode::Reciprocal, AdjointMode::Mirror},
    {CardinalityMode::Reciprocal, AdjointMode::NegatedTotalDegree},
    {CardinalityMode::Unit, AdjointMode::Mirror},
    {CardinalityMode::Unit, AdjointMode::NegatedTotalDegree},
};
constexpr HyperarcModes kHyperarcModes[] = {
    {DegreeFactorMode::ReciprocalInOut, AdjointMode::Mirror},
    {DegreeFactorMode::ReciprocalInOut, AdjointMode::NegatedTotalDegree},
    {DegreeFactorMode::Unit, AdjointMode::Mirror},
    {DegreeFactorMode::Unit, AdjointMode::NegatedTotalDegree},
};

const RandomParams kDualityParams{10, 15, 5, 2};
const RandomParams kOperatorParams{8, 10, 4, 2};
const RandomParams kTensorParams{6, 6, 4, 2};
const RandomParams kRepresentationParams{8, 8, 4, 2};

OperatorConfig random_modes(SplitMix64& rng, OperatorConfig cfg) {
  cfg.vertex_cardinality_mode = rng.uniform_int(0, 1) ? CardinalityMode::Unit : CardinalityMode::Reciprocal;
  cfg.hyperarc_degree_mode = rng.uniform_int(0, 1) ? DegreeFactorMode::Unit : DegreeFactorMode::ReciprocalInOut;
  return cfg;
}

std::vector<double> phi(const std::vector<double>& v, double p) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = p_power(v[i], p);
  return out;
}

// Relative comparison of two inner products, scaled by the sum of absolute terms.
bool close_inner(double lhs, double rhs, double scale) {
  return std::abs(lhs - rhs) <= std::max(1e-12, 1e-9 * scale);
}

// ---------------------------------------------------------------- duality

void duality_suite(Runner& run, const OperatorTable& ops) {
  run.random("duality.vertex", [&](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kDualityParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_modes(rng, random_exponents(rng));
    const VertexFunction f = random_function(rng, h.vertex_count());
    const HyperarcFunction G = random_function(rng, h.arc_count());
    const HyperarcFunction grad = ops.vertex_gradient(h, w, cfg, f);
    const VertexFunction adj = ops.vertex_adjoint(h, w, cfg, G);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t q = 0; q < G.size(); ++q) {
      const double t = weight_pow(w.WI[q], cfg.beta) * G[q] * grad[q];
      lhs += t;
      scale += std::abs(t);
    }
    for (std::size_t v = 0; v < f.size(); ++v) {
      const double t = weight_pow(w.wI[v], cfg.alpha) * f[v] * adj[v];
      rhs += t;
      scale += std::abs(t);
    }
    if (close_inner(lhs, rhs, scale)) return std::nullopt;
    return describe(h, w, cfg) + write_function(Space::Vertex, f) + write_function(Space::Hyperarc, G) +
           mismatch("<G, grad_v f>_beta vs <f, adj_v G>_alpha", lhs, rhs);
  });

  run.random("duality.hyperarc", [&](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kDualityParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_modes(rng, random_exponents(rng));
    const VertexFunction f = random_function(rng, h.vertex_count());
    const HyperarcFunction G = random_function(rng, h.arc_count());
    const VertexFunction grad = ops.hyperarc_gradient(h, w, cfg, G);
    const HyperarcFunction adj = ops.hyperarc_adjoint(h, w, cfg, f);
    double lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      const double t = weight_pow(w.wI[v], cfg.alpha) * f[v] * grad[v];
      lhs += t;
      scale += std::abs(t);
    }
    for (std::size_t q = 0; q < G.size(); ++q) {
      const double t = weight_pow(w.WI[q], cfg.beta) * G[q] * adj[q];
      rhs += t;
      scale += std::abs(t);
    }
    if (close_inner(lhs, rhs, scale)) return std::nullopt;
    return describe(h, w, cfg) + write_function(Space::Vertex, f) + write_function(Space::Hyperarc, G) +
           mismatch("<f, grad_a G>_alpha vs <G, adj_a f>_beta", lhs, rhs);
  });
}

// ------------------------------------------------------------ composition

Failure vertex_composition(const OrientedHypergraph& h, const WeightAssignment& w, OperatorConfig cfg,
                           const VertexFunction& f) {
  for (const VertexModes& m : kVertexModes) {
    cfg.vertex_cardinality_mode = m.cardinality;
    cfg.vertex_adjoint_mode = m.adjoint;
    const HyperarcFunction grad = vertex_gradient(h, w, cfg, f);
    const VertexFunction lap = vertex_laplacian(h, w, cfg, f);
    const VertexFunction lap_ref = vertex_divergence(h, w, cfg, grad);
    if (!close_enough(lap, lap_ref)) {
      return describe(h, w, cfg) + write_function(Space::Vertex, f) + mismatch("laplacian vs div(grad)", lap, lap_ref);
    }
    const bool explicit_ok = cfg.vertex_modes_default();
    if (explicit_ok) {
      const VertexFunction lap_x = vertex_laplacian(h, w, cfg, f, Method::Explicit);
      if (!close_enough(lap_x, lap)) {
        return describe(h, w, cfg) + write_function(Space::Vertex, f) + mismatch("explicit vs composed laplacian", lap_x, lap);
      }
    }
    for (double p : kPValues) {
      const VertexFunction plap = vertex_p_laplacian(h, w, cfg, f, p);
      const VertexFunction plap_ref = vertex_divergence(h, w, cfg, phi(grad, p));
      if (!close_enough(plap, plap_ref)) {
        return describe(h, w, cfg) + write_function(Space::Vertex, f) + "p " + format_double(p) + "\n" +
               mismatch("p-laplacian vs div(phi_p(grad))", plap, plap_ref);
      }
      if (explicit_ok) {
        const VertexFunction plap_x = vertex_p_laplacian(h, w, cfg, f, p, Method::Explicit);
        if (!close_enough(plap_x, plap)) {
          return describe(h, w, cfg) + write_function(Space::Vertex, f) + "p " + format_double(p) + "\n" +
                 mismatch("explicit vs composed p-laplacian", plap_x, plap);
        }
      }
    }
  }
  return std::nullopt;
}

Failure hyperarc_composition(const OrientedHypergraph& h, const WeightAssignment& w, OperatorConfig cfg,
                             const HyperarcFunction& F) {
  for (const HyperarcModes& m : kHyperarcModes) {
    cfg.hyperarc_degree_mode = m.degree;
    cfg.hyperarc_adjoint_mode = m.adjoint;
    const VertexFunction grad = hyperarc_gradient(h, w, cfg, F);
    const HyperarcFunction lap = hyperarc_laplacian(h, w, cfg, F);
    const HyperarcFunction lap_ref = hyperarc_divergence(h, w, cfg, grad);
    if (!close_enough(lap, lap_ref)) {
      return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + mismatch("laplacian vs div(grad)", lap, lap_ref);
    }
    const bool explicit_ok = cfg.hyperarc_modes_default();
    if (explicit_ok) {
      const HyperarcFunction lap_x = hyperarc_laplacian(h, w, cfg, F, Method::Explicit);
      if (!close_enough(lap_x, lap)) {
        return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + mismatch("explicit vs composed laplacian", lap_x, lap);
      }
    }
    for (double p : kPValues) {
      const HyperarcFunction plap = hyperarc_p_laplacian(h, w, cfg, F, p);
      const HyperarcFunction plap_ref = hyperarc_divergence(h, w, cfg, phi(grad, p));
      if (!close_enough(plap, plap_ref)) {
        return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + "p " + format_double(p) + "\n" +
               mismatch("p-laplacian vs div(phi_p(grad))", plap, plap_ref);
      }
      if (explicit_ok) {
        const HyperarcFunction plap_x = hyperarc_p_laplacian(h, w, cfg, F, p, Method::Explicit);
        if (!close_enough(plap_x, plap)) {
          return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + "p " + format_double(p) + "\n" +
                 mismatch("explicit vs composed p-laplacian", plap_x, plap);
        }
      }
    }
  }
  return std::nullopt;
}

Failure p2_collapse(const OrientedHypergraph& h, const WeightAssignment& w, OperatorConfig cfg,
                    const VertexFunction& f, const HyperarcFunction& F) {
  for (std::size_t k = 0; k < 4; ++k) {
    cfg.vertex_cardinality_mode = kVertexModes[k].cardinality;
    cfg.vertex_adjoint_mode = kVertexModes[k].adjoint;
    cfg.hyperarc_degree_mode = kHyperarcModes[k].degree;
    cfg.hyperarc_adjoint_mode = kHyperarcModes[k].adjoint;
    std::vector<Method> vertex_methods{Method::Composed};
    if (cfg.vertex_modes_default()) vertex_methods.push_back(Method::Explicit);
    for (Method method : vertex_methods) {
      const VertexFunction a = vertex_p_laplacian(h, w, cfg, f, 2.0, method);
      const VertexFunction b = vertex_laplacian(h, w, cfg, f, method);
      if (!close_enough(a, b, 1e-12, 1e-12)) {
        return describe(h, w, cfg) + write_function(Space::Vertex, f) + mismatch("vertex p-laplacian at p=2 vs laplacian", a, b);
      }
    }
    std::vector<Method> arc_methods{Method::Composed};
    if (cfg.hyperarc_modes_default()) arc_methods.push_back(Method::Explicit);
    for (Method method : arc_methods) {
      const HyperarcFunction a = hyperarc_p_laplacian(h, w, cfg, F, 2.0, method);
      const HyperarcFunction b = hyperarc_laplacian(h, w, cfg, F, method);
      if (!close_enough(a, b, 1e-12, 1e-12)) {
        return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + mismatch("hyperarc p-laplacian at p=2 vs laplacian", a, b);
      }
    }
  }
  return std::nullopt;
}

double dyadic(SplitMix64& rng) { return std::ldexp(1.0, rng.uniform_int(-2, 2)); }

void composition_suite(Runner& run) {
  run.random("composition.vertex", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_exponents(rng);
    return vertex_composition(h, w, cfg, random_function(rng, h.vertex_count()));
  });

  run.random("composition.hyperarc", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_exponents(rng);
    return hyperarc_composition(h, w, cfg, random_function(rng, h.arc_count()));
  });

  run.random("composition.p2_collapse", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_exponents(rng);
    const VertexFunction f = random_function(rng, h.vertex_count());
    const HyperarcFunction F = random_function(rng, h.arc_count());
    return p2_collapse(h, w, cfg, f, F);
  });

  // Constant vertex weights and epsilon = eta make w_I^alpha w_G^epsilon equal on
  // both sides; dyadic weights and integer exponents keep the arithmetic exact.
  run.random("gradient.constant_vertex", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    std::fill(w.wI.begin(), w.wI.end(), dyadic(rng));
    std::fill(w.wG.begin(), w.wG.end(), dyadic(rng));
    OperatorConfig cfg = random_exponents(rng);
    cfg.alpha = rng.uniform_int(-2, 2);
    cfg.epsilon = cfg.eta = rng.uniform_int(-2, 2);
    const VertexFunction f(h.vertex_count(), static_cast<double>(rng.uniform_int(-5, 5)));
    const HyperarcFunction grad = vertex_gradient(h, w, cfg, f);
    for (double x : grad) {
      if (x != 0.0) {
        return describe(h, w, cfg) + write_function(Space::Vertex, f) +
               mismatch("gradient of a constant", grad, HyperarcFunction(grad.size(), 0.0));
      }
    }
    return std::nullopt;
  });

  // Constant W_I and W_G; only vertices with both in- and out-degree carry a zero.
  run.random("gradient.constant_hyperarc", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    std::fill(w.WI.begin(), w.WI.end(), dyadic(rng));
    std::fill(w.WG.begin(), w.WG.end(), dyadic(rng));
    OperatorConfig cfg = random_exponents(rng);
    cfg.beta = rng.uniform_int(-2, 2);
    cfg.theta = rng.uniform_int(-2, 2);
    const HyperarcFunction F(h.arc_count(), static_cast<double>(rng.uniform_int(-5, 5)));
    const VertexFunction grad = hyperarc_gradient(h, w, cfg, F);
    for (VertexId v = 1; v <= h.vertex_count(); ++v) {
      if (h.degree(v, DegreeMode::In) >= 1 && h.degree(v, DegreeMode::Out) >= 1 && grad[v - 1] != 0.0) {
        return describe(h, w, cfg) + write_function(Space::Hyperarc, F) +
               "vertex " + std::to_string(v) + "\n" + mismatch("gradient of a constant", grad[v - 1], 0.0);
      }
    }
    return std::nullopt;
  });

  // Hyperarc q of the switched hypergraph is the reverse of hyperarc q, so
  // reusing the arc weights by index is the symmetric weight construction.
  run.random("gradient.antisymmetry_vertex", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    OperatorConfig cfg = random_modes(rng, random_exponents(rng));
    cfg.eta = cfg.epsilon;
    const VertexFunction f = random_function(rng, h.vertex_count());
    const HyperarcFunction a = vertex_gradient(switch_orientation(h), w, cfg, f);
    HyperarcFunction b = vertex_gradient(h, w, cfg, f);
    for (double& x : b) x = -x;
    if (close_enough(a, b, 1e-12, 1e-12)) return std::nullopt;
    return describe(h, w, cfg) + write_function(Space::Vertex, f) + mismatch("switched gradient vs negated gradient", a, b);
  });

  run.random("gradient.antisymmetry_hyperarc", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = random_modes(rng, random_exponents(rng));
    const HyperarcFunction F = random_function(rng, h.arc_count());
    const VertexFunction a = hyperarc_gradient(switch_orientation(h), w, cfg, F);
    VertexFunction b = hyperarc_gradient(h, w, cfg, F);
    for (double& x : b) x = -x;
    if (close_enough(a, b, 1e-12, 1e-12)) return std::nullopt;
    return describe(h, w, cfg) + write_function(Space::Hyperarc, F) + mismatch("switched gradient vs negated gradient", a, b);
  });

  run.random("operators.linearity", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = random_weights(rng, h.vertex_count(), h.arc_count());
    OperatorConfig cfg = random_modes(rng, random_exponents(rng));
    cfg.vertex_adjoint_mode = rng.uniform_int(0, 1) ? AdjointMode::NegatedTotalDegree : AdjointMode::Mirror;
    cfg.hyperarc_adjoint_mode = rng.uniform_int(0, 1) ? AdjointMode::NegatedTotalDegree : AdjointMode::Mirror;
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const auto combine = [&](const std::vector<double>& x, const std::vector<double>& y) {
      std::vector<double> out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
      return out;
    };
    const std::size_t n = static_cast<std::size_t>(h.vertex_count());
    const std::size_t m = h.arc_count();
    for (GraphOp op : {GraphOp::GradV, GraphOp::AdjV, GraphOp::DivV, GraphOp::LapV, GraphOp::GradA,
                       GraphOp::AdjA, GraphOp::DivA, GraphOp::LapA}) {
      const Space in = graph_op_input_space(op);
      const std::size_t len = in == Space::Vertex ? n : m;
      const std::vector<double> x = random_function(rng, len);
      const std::vector<double> y = random_function(rng, len);
      const auto apply = [&](const std::vector<double>& u) -> std::vector<double> {
        switch (op) {
          case GraphOp::GradV: return vertex_gradient(h, w, cfg, u);
          case GraphOp::AdjV: return vertex_adjoint(h, w, cfg, u);
          case GraphOp::DivV: return vertex_divergence(h, w, cfg, u);
          case GraphOp::LapV: return vertex_laplacian(h, w, cfg, u);
          case GraphOp::GradA: return hyperarc_gradient(h, w, cfg, u);
          case GraphOp::AdjA: return hyperarc_adjoint(h, w, cfg, u);
          case GraphOp::DivA: return hyperarc_divergence(h, w, cfg, u);
          default: return hyperarc_laplacian(h, w, cfg, u);
        }
      };
      const std::vector<double> lhs = apply(combine(x, y));
      const std::vector<double> rhs = combine(apply(x), apply(y));
      if (!close_enough(lhs, rhs)) {
        return describe(h, w, cfg) + write_function(in, x) + write_function(in, y) +
               "a " + format_double(a) + " b " + format_double(b) + "\n" +
               mismatch(std::string(graph_op_name(op)) + "(a x + b y) vs a op(x) + b op(y)", lhs, rhs);
      }
    }
    return std::nullopt;
  });
}

// -------------------------------------------------------------- reduction

void reduction_suite(Runner& run) {
  for (GraphOp op : {GraphOp::GradV, GraphOp::AdjV, GraphOp::DivV, GraphOp::LapV, GraphOp::PLapV,
                     GraphOp::GradA, GraphOp::AdjA, GraphOp::DivA, GraphOp::LapA, GraphOp::PLapA}) {
    const std::string name = "reduction." + std::string(graph_op_name(op));
    run.random(name, [op](SplitMix64& rng) -> Failure {
      const OrientedNormalGraph g = random_graph(rng, 8, 20);
      const OrientedHypergraph h = graph_as_hypergraph(g);
      const WeightAssignment w = random_twin_weights(rng, g);
      const OperatorConfig cfg = random_modes(rng, random_exponents(rng));
      const std::vector<double> fn = random_function(
          rng, graph_op_input_space(op) == Space::Vertex ? static_cast<std::size_t>(g.vertex_count()) : g.arc_count());
      const double p = kPValues[rng.uniform_int(0, 3)];
      const bool has_p = op == GraphOp::PLapV || op == GraphOp::PLapA;
      const std::vector<double> ref = graph_reference(op, g, w, cfg, fn, has_p ? std::optional<double>(p) : std::nullopt);
      std::vector<std::pair<std::string, std::vector<double>>> got;
      switch (op) {
        case GraphOp::GradV: got.emplace_back("composed", vertex_gradient(h, w, cfg, fn)); break;
        case GraphOp::AdjV: got.emplace_back("composed", vertex_adjoint(h, w, cfg, fn)); break;
        case GraphOp::DivV: got.emplace_back("composed", vertex_divergence(h, w, cfg, fn)); break;
        case GraphOp::LapV:
          got.emplace_back("composed", vertex_laplacian(h, w, cfg, fn));
          if (cfg.vertex_modes_default()) got.emplace_back("explicit", vertex_laplacian(h, w, cfg, fn, Method::Explicit));
          break;
        case GraphOp::PLapV:
          got.emplace_back("composed", vertex_p_laplacian(h, w, cfg, fn, p));
          if (cfg.vertex_modes_default()) {
            got.emplace_back("explicit", vertex_p_laplacian(h, w, cfg, fn, p, Method::Explicit));
          }
          break;
        case GraphOp::GradA: got.emplace_back("composed", hyperarc_gradient(h, w, cfg, fn)); break;
        case GraphOp::AdjA: got.emplace_back("composed", hyperarc_adjoint(h, w, cfg, fn)); break;
        case GraphOp::DivA: got.emplace_back("composed", hyperarc_divergence(h, w, cfg, fn)); break;
        case GraphOp::LapA:
          got.emplace_back("composed", hyperarc_laplacian(h, w, cfg, fn));
          if (cfg.hyperarc_modes_default()) got.emplace_back("explicit", hyperarc_laplacian(h, w, cfg, fn, Method::Explicit));
          break;
        case GraphOp::PLapA:
          got.emplace_back("composed", hyperarc_p_laplacian(h, w, cfg, fn, p));
          if (cfg.hyperarc_modes_default()) {
            got.emplace_back("explicit", hyperarc_p_laplacian(h, w, cfg, fn, p, Method::Explicit));
          }
          break;
      }
      for (const auto& [method, values] : got) {
        if (!close_enough(values, ref)) {
          return write_graph(g) + write_weights(w) + write_config(cfg) +
                 write_function(graph_op_input_space(op), fn) + (has_p ? "p " + format_double(p) + "\n" : "") +
                 mismatch(method + " hypergraph operator vs graph formula", values, ref);
        }
      }
      return std::nullopt;
    });
  }
}

// ---------------------------------------------------------------- presets

void presets_suite(Runner& run) {
  run.random("presets.jost_vertex", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = WeightAssignment::unit(h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = preset_config(Preset::JostVertex);
    const VertexFunction f = random_function(rng, h.vertex_count());
    const double p = rng.uniform(1.1, 4.0);
    const VertexFunction got = vertex_p_laplacian(h, w, cfg, f, p);
    const VertexFunction want = jost_reference(JostKind::VertexPLaplacian, h, f, p);
    if (close_enough(got, want, 1e-10, 1e-12)) return std::nullopt;
    return write_hypergraph(h) + write_function(Space::Vertex, f) + "p " + format_double(p) + "\n" +
           mismatch("preset p-laplacian vs co/anti-oriented form", got, want);
  });

  run.random("presets.jost_hyperarc", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kOperatorParams);
    const WeightAssignment w = WeightAssignment::unit(h.vertex_count(), h.arc_count());
    const OperatorConfig cfg = preset_config(Preset::JostHyperarc);
    const HyperarcFunction F = random_function(rng, h.arc_count());
    const double p = rng.uniform(1.1, 4.0);
    const HyperarcFunction got = hyperarc_p_laplacian(h, w, cfg, F, p);
    const HyperarcFunction want = jost_reference(JostKind::HyperarcPLaplacian, h, F, p);
    if (close_enough(got, want, 1e-10, 1e-12)) return std::nullopt;
    return write_hypergraph(h) + write_function(Space::Hyperarc, F) + "p " + format_double(p) + "\n" +
           mismatch("preset p-laplacian vs co/anti-oriented form", got, want);
  });

  run.fixed("presets.elmoataz_vertex_gradient", []() -> Failure {
    const OrientedNormalGraph g = fixtures::oriented_graph_six();
    const OrientedHypergraph h = graph_as_hypergraph(g);
    WeightAssignment w = WeightAssignment::unit(h.vertex_count(), h.arc_count());
    const double graph_weights[] = {4.0, 9.0, 2.0, 0.25};
    for (std::size_t q = 0; q < h.arc_count(); ++q) {
      w.WG[q] = graph_weights[q % 4];
      w.WI[q] = *preset_suggested_WI(Preset::ElmoatazGraphVertex);
    }
    const OperatorConfig cfg = preset_config(Preset::ElmoatazGraphVertex);
    const VertexFunction f{0.5, -1.0, 3.0, 2.25, -0.75, 1.0};
    const HyperarcFunction got = vertex_gradient(h, w, cfg, f);
    HyperarcFunction want(h.arc_count());
    for (std::size_t q = 0; q < g.arc_count(); ++q) {
      const auto [i, j] = g.arcs()[q];
      want[q] = std::sqrt(w.WG[q]) * (f[j - 1] - f[i - 1]);
    }
    if (got == want) return std::nullopt;
    return describe(h, w, cfg) + write_function(Space::Vertex, f) + mismatch("gradient vs sqrt(W_G) (f_j - f_i)", got, want);
  });
}

// ----------------------------------------------------------------- tensor

std::string tensor_entry(const IndexTuple& t, const Rational& value) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ") = " << value;
  return os.str();
}

int distinct_count(const IndexTuple& t) { return static_cast<int>(std::set<VertexId>(t.begin(), t.end()).size()); }

// Hyperarcs of h that a tuple represents, counted from its prefix/suffix splits.
int represented_arcs(const IndexTuple& t, const OrientedHypergraph& h) {
  int count = 0;
  for (const Hyperarc& split : tuple_splits(t)) {
    if (std::find(h.arcs().begin(), h.arcs().end(), split) != h.arcs().end()) ++count;
  }
  return count;
}

Failure check_sharing(const SparseAdjacencyTensor& t, const OrientedHypergraph& h) {
  for (const auto& [tuple, value] : t.entries) {
    const int n = distinct_count(tuple);
    const Rational units = value * 2 / n;
    const int expected = represented_arcs(tuple, h);
    if (units != Rational(expected) || expected < 1 || expected > t.order - 1) {
      return write_hypergraph(h) + "entry " + tensor_entry(tuple, value) + " represents " +
             std::to_string(expected) + " hyperarcs";
    }
  }
  return std::nullopt;
}

UnorientedNormalGraph unoriented_from(const OrientedNormalGraph& g) {
  std::set<VertexPair> edges;
  for (auto [i, j] : g.arcs()) edges.insert({std::min(i, j), std::max(i, j)});
  return UnorientedNormalGraph(g.vertex_count(), {edges.begin(), edges.end()});
}

template <typename Graph>
Failure adjacency_agrees(const Graph& g) {
  const SparseAdjacencyTensor t = encode_tensor_at_order(graph_as_hypergraph(g), EntryMode::Full, 2);
  const IntMatrix a = adjacency_matrix(g);
  for (VertexId i = 1; i <= g.vertex_count(); ++i) {
    for (VertexId j = 1; j <= g.vertex_count(); ++j) {
      if (t.at({i, j}) != Rational(a(i - 1, j - 1))) {
        return write_graph(g) + "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from adjacency";
      }
    }
  }
  return std::nullopt;
}

void tensor_suite(Runner& run) {
  run.fixed("tensor.worked_oriented", []() -> Failure {
    const OrientedHypergraph h = fixtures::oriented_six();
    const SparseAdjacencyTensor t = encode_tensor(h, EntryMode::Simplified);
    const std::map<IndexTuple, Rational> want{
        {{1, 2, 4}, Rational(3, 2)}, {{2, 1, 4}, Rational(3, 2)}, {{3, 2, 6}, Rational(3, 2)},
        {{3, 6, 2}, Rational(3, 2)}, {{5, 5, 6}, Rational(1)},    {{5, 6, 6}, Rational(1)}};
    if (t.order == 3 && t.entries == want) {
      const OrientedHypergraph back = decode_tensor_oriented(t);
      if (back.same_arc_set(h)) return std::nullopt;
      return write_tensor(t) + "decoded to\n" + write_hypergraph(back);
    }
    return write_hypergraph(h) + write_tensor(t);
  });

  run.fixed("tensor.worked_increased", []() -> Failure {
    const OrientedHypergraph h(6, {{{5}, {6}}});
    const SparseAdjacencyTensor t = encode_tensor_at_order(h, EntryMode::Simplified, 5);
    std::vector<IndexTuple> keys;
    for (const auto& entry : t.entries) keys.push_back(entry.first);
    const std::vector<IndexTuple> want{{5, 5, 5, 5, 6}, {5, 5, 5, 6, 6}, {5, 5, 6, 6, 6}, {5, 6, 6, 6, 6}};
    if (keys == want) return std::nullopt;
    return write_tensor(t);
  });

  run.fixed("tensor.worked_unoriented", []() -> Failure {
    const UnorientedHypergraph h = fixtures::unoriented_six();
    const SparseAdjacencyTensor t = encode_tensor(h, EntryMode::Simplified);
    for (const IndexTuple& tuple : std::vector<IndexTuple>{{5, 5, 6}, {5, 6, 5}, {6, 5, 5}, {5, 6, 6}, {6, 5, 6}, {6, 6, 5}}) {
      if (t.at(tuple) != Rational(1)) return write_tensor(t);
    }
    const UnorientedHypergraph back = decode_tensor_unoriented(t);
    if (back.same_edge_set(h)) return std::nullopt;
    return write_tensor(t) + "decoded to\n" + write_hypergraph(back);
  });

  run.fixed("tensor.entry_values", []() -> Failure {
    if (entry_value(2, 2, EntryMode::Full) != Rational(1)) return std::string("entry_value(2,2,full) != 1");
    if (entry_value(3, 3, EntryMode::Simplified) != Rational(3, 2)) return std::string("entry_value(3,3,simplified) != 3/2");
    if (entry_value(2, 3, EntryMode::Full) != Rational(1, 3)) return std::string("entry_value(2,3,full) != 1/3");
    // Surjections by inclusion-exclusion: sum_j (-1)^j C(n,j) (n-j)^order.
    for (int order = 2; order <= 10; ++order) {
      for (int n = 2; n <= order; ++n) {
        BigInt s = 0;
        for (int j = 0; j <= n; ++j) {
          BigInt term = binomial(n, j) * boost::multiprecision::pow(BigInt(n - j), static_cast<unsigned>(order));
          s += (j % 2 == 0) ? term : BigInt(-term);
        }
        if (surjection_count(n, order) != s) {
          return "surjection_count(" + std::to_string(n) + "," + std::to_string(order) + ") != " + s.str();
        }
      }
    }
    return std::nullopt;
  });

  run.fixed("tensor.collision", []() -> Failure {
    const auto [a, b] = fixtures::tensor_collision();
    const SparseAdjacencyTensor ta = encode_tensor(a, EntryMode::Simplified);
    const SparseAdjacencyTensor tb = encode_tensor(b, EntryMode::Simplified);
    if (write_tensor(ta) != write_tensor(tb)) return write_tensor(ta) + "differs from\n" + write_tensor(tb);
    if (!verify_decode(ta, a) || !verify_decode(ta, b)) return std::string("verify_decode rejects a source hypergraph");
    try {
      const OrientedHypergraph h = decode_tensor_oriented(ta, DecodeStrategy::Strict);
      return "strict decode did not report ambiguity\n" + write_hypergraph(h);
    } catch (const AmbiguousTensorError&) {
    }
    const OrientedHypergraph g = decode_tensor_oriented(ta, DecodeStrategy::Greedy);
    if (!verify_decode(ta, g)) return "greedy decode does not re-encode\n" + write_hypergraph(g);
    return std::nullopt;
  });

  run.fixed("tensor.index_counts", []() -> Failure {
    for (int max_a = 2; max_a <= 5; ++max_a) {
      for (int n = std::max(2, max_a - 1); n <= max_a; ++n) {
        for (int out = 1; out < n; ++out) {
          Hyperarc arc;
          for (VertexId v = 1; v <= out; ++v) arc.out.push_back(v);
          for (VertexId v = out + 1; v <= n; ++v) arc.in.push_back(v);
          const OrientedHypergraph h(n, {arc});
          const std::size_t tuples = encode_tensor_at_order(h, EntryMode::Simplified, max_a).entries.size();
          const std::uint64_t formula = index_count(out, n - out, max_a);
          if (tuples != formula) {
            return "out " + std::to_string(out) + " in " + std::to_string(n - out) + " max_a " +
                   std::to_string(max_a) + ": enumerated " + std::to_string(tuples) + ", formula " +
                   std::to_string(formula);
          }
        }
      }
    }
    return std::nullopt;
  });

  run.fixed("tensor.incidence_fixture", []() -> Failure {
    IntMatrix want(8, 3);
    want << 1, 0, 0, 1, -1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, -1, -1, 0, -1, 0;
    const IntMatrix got = incidence_matrix(fixtures::oriented_eight());
    if (got == want) return std::nullopt;
    return write_matrix(got);
  });

  run.fixed("tensor.adjacency_fixture", []() -> Failure {
    IntMatrix want = IntMatrix::Zero(6, 6);
    for (auto [i, j] : std::vector<VertexPair>{{2, 5}, {3, 6}, {4, 2}, {4, 5}, {6, 3}}) want(i - 1, j - 1) = 1;
    const IntMatrix got = adjacency_matrix(fixtures::oriented_graph_six());
    if (got != want) return write_matrix(got);
    return adjacency_agrees(fixtures::oriented_graph_six());
  });

  run.random("tensor.increased_roundtrip", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kTensorParams);
    const EntryMode mode = rng.uniform_int(0, 1) ? EntryMode::Full : EntryMode::Simplified;
    const SparseAdjacencyTensor t = encode_tensor(h, mode, true);
    const OrientedHypergraph back = decode_tensor_oriented(t, DecodeStrategy::Strict);
    if (back.same_arc_set(h)) return std::nullopt;
    return write_hypergraph(h) + "decoded to\n" + write_hypergraph(back);
  });

  run.random("tensor.standard_roundtrip", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kTensorParams);
    const EntryMode mode = rng.uniform_int(0, 1) ? EntryMode::Full : EntryMode::Simplified;
    const SparseAdjacencyTensor t = encode_tensor(h, mode);
    try {
      const OrientedHypergraph back = decode_tensor_oriented(t, DecodeStrategy::Strict);
      if (!back.same_arc_set(h)) return write_hypergraph(h) + "decoded to\n" + write_hypergraph(back);
    } catch (const AmbiguousTensorError&) {
      const OrientedHypergraph g = decode_tensor_oriented(t, DecodeStrategy::Greedy);
      if (!verify_decode(t, g)) return write_hypergraph(h) + "greedy decode does not re-encode\n" + write_hypergraph(g);
    }
    return std::nullopt;
  });

  run.random("tensor.sharing", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kTensorParams);
    return check_sharing(encode_tensor(h, EntryMode::Simplified), h);
  });

  run.random("tensor.graph_adjacency", [](SplitMix64& rng) -> Failure {
    const OrientedNormalGraph g = random_graph(rng, 8, 20);
    if (Failure f = adjacency_agrees(g)) return f;
    return adjacency_agrees(unoriented_from(g));
  });

  run.random("tensor.unoriented_roundtrip", [](SplitMix64& rng) -> Failure {
    const UnorientedHypergraph h = random_unoriented_instance(rng, kTensorParams);
    const EntryMode mode = rng.uniform_int(0, 1) ? EntryMode::Full : EntryMode::Simplified;
    const SparseAdjacencyTensor t = encode_tensor(h, mode);
    const UnorientedHypergraph back = decode_tensor_unoriented(t);
    if (back.same_edge_set(h)) return std::nullopt;
    return write_hypergraph(h) + "decoded to\n" + write_hypergraph(back);
  });
}

// --------------------------------------------------------- representation

template <typename Graph>
std::vector<VertexPair> edge_list(const Graph& g) {
  if constexpr (std::is_same_v<Graph, OrientedNormalGraph>) {
    return g.arcs();
  } else {
    return g.edges();
  }
}

// Every edge joins an original vertex (id <= N) to an encoder (id > N).
template <typename Graph>
Failure check_star(const Graph& g, int n, const std::vector<int>& member_counts, const std::vector<int>& degrees) {
  std::vector<int> deg(g.vertex_count() + 1, 0);
  for (auto [i, j] : edge_list(g)) {
    if ((i <= n) == (j <= n)) return write_graph(g) + "edge " + std::to_string(i) + " " + std::to_string(j) + " inside one side";
    ++deg[i];
    ++deg[j];
  }
  for (const Component& c : connected_components(g)) {
    if (!c.bipartite) return write_graph(g) + "component not 2-colorable";
  }
  for (int v = 1; v <= n; ++v) {
    if (deg[v] != degrees[v - 1]) return write_graph(g) + "vertex " + std::to_string(v) + " degree mismatch";
  }
  for (std::size_t q = 0; q < member_counts.size(); ++q) {
    if (deg[n + 1 + q] != member_counts[q]) return write_graph(g) + "encoder " + std::to_string(n + 1 + q) + " degree mismatch";
  }
  return std::nullopt;
}

template <typename H>
Failure check_reconstruction(const H& h) {
  const auto star = to_bipartite(h);
  const auto back = from_bipartite(star.graph, star.hints);
  if (!(back.hypergraph == h)) return write_hypergraph(h) + "reconstructed as\n" + write_hypergraph(back.hypergraph);
  const auto [lo, hi] = cardinality_bounds(h);
  const AnchorInference inferred = infer_anchors(star.graph, lo, hi);
  if (inferred.unresolved.empty()) {
    const auto again = from_bipartite(star.graph, inferred.hints);
    if (!(again.hypergraph == h)) {
      return write_hypergraph(h) + write_anchors(inferred.hints) + "reconstructed as\n" + write_hypergraph(again.hypergraph);
    }
  }
  return std::nullopt;
}

// Ordered pairs (i, j) contributed by one hyperarc, counted directly.
std::map<VertexPair, int> clique_oracle(const OrientedHypergraph& h) {
  std::map<VertexPair, int> m;
  for (const Hyperarc& a : h.arcs()) {
    for (VertexId i = 1; i <= h.vertex_count(); ++i) {
      for (VertexId j = 1; j <= h.vertex_count(); ++j) {
        if (i == j) continue;
        const auto has = [](const std::vector<VertexId>& side, VertexId v) {
          return std::binary_search(side.begin(), side.end(), v);
        };
        const bool same_side = (has(a.out, i) && has(a.out, j)) || (has(a.in, i) && has(a.in, j));
        if (same_side || (has(a.out, i) && has(a.in, j))) ++m[{i, j}];
      }
    }
  }
  return m;
}

std::map<VertexPair, int> clique_oracle(const UnorientedHypergraph& h) {
  std::map<VertexPair, int> m;
  for (VertexId i = 1; i <= h.vertex_count(); ++i) {
    for (VertexId j = i + 1; j <= h.vertex_count(); ++j) {
      int count = 0;
      for (std::size_t q = 1; q <= h.edge_count(); ++q) count += h.indicator(i, q) && h.indicator(j, q);
      if (count > 0) m[{i, j}] = count;
    }
  }
  return m;
}

void representation_suite(Runner& run) {
  run.random("representation.star_oriented", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kRepresentationParams);
    const auto star = to_bipartite(h);
    std::vector<int> sizes, degrees;
    for (const Hyperarc& a : h.arcs()) sizes.push_back(static_cast<int>(a.size()));
    for (VertexId v = 1; v <= h.vertex_count(); ++v) degrees.push_back(h.degree(v));
    for (std::size_t q = 0; q < h.arc_count(); ++q) {
      const VertexId e = h.vertex_count() + static_cast<VertexId>(q) + 1;
      for (VertexId v : h.arcs()[q].out) {
        if (!star.graph.find_arc(v, e)) return write_hypergraph(h) + "missing arc out -> encoder";
      }
      for (VertexId v : h.arcs()[q].in) {
        if (!star.graph.find_arc(e, v)) return write_hypergraph(h) + "missing arc encoder -> in";
      }
    }
    if (Failure f = check_star(star.graph, h.vertex_count(), sizes, degrees)) return write_hypergraph(h) + *f;
    return check_reconstruction(h);
  });

  run.random("representation.star_unoriented", [](SplitMix64& rng) -> Failure {
    const UnorientedHypergraph h = random_unoriented_instance(rng, kRepresentationParams);
    const auto star = to_bipartite(h);
    std::vector<int> sizes, degrees;
    for (const Hyperedge& e : h.edges()) sizes.push_back(static_cast<int>(e.size()));
    for (VertexId v = 1; v <= h.vertex_count(); ++v) degrees.push_back(h.degree(v));
    if (Failure f = check_star(star.graph, h.vertex_count(), sizes, degrees)) return write_hypergraph(h) + *f;
    return check_reconstruction(h);
  });

  run.random("representation.clique", [](SplitMix64& rng) -> Failure {
    const OrientedHypergraph h = random_instance(rng, kRepresentationParams);
    const MultiGraph g = to_clique(h);
    std::size_t expected_edges = 0;
    for (const Hyperarc& a : h.arcs()) {
      expected_edges += clique_edge_count(static_cast<int>(a.out.size()), static_cast<int>(a.in.size()));
    }
    if (g.multiplicity != clique_oracle(h) || g.edge_count() != expected_edges) {
      return write_hypergraph(h) + write_multigraph(g);
    }
    const UnorientedHypergraph u = random_unoriented_instance(rng, kRepresentationParams);
    const MultiGraph gu = to_clique(u);
    std::size_t expected_u = 0;
    for (const Hyperedge& e : u.edges()) expected_u += clique_edge_count(static_cast<int>(e.size()));
    if (gu.multiplicity != clique_oracle(u) || gu.edge_count() != expected_u) {
      return write_hypergraph(u) + write_multigraph(gu);
    }
    return std::nullopt;
  });

  run.fixed("representation.clique_edge_count", []() -> Failure {
    for (int n = 2; n <= 10; ++n) {
      std::size_t pairs = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ++pairs;
      if (clique_edge_count(n) != pairs) return "edge size " + std::to_string(n);
      for (int out = 1; out < n; ++out) {
        const int in = n - out;
        std::size_t ordered = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool same = (i < out) == (j < out);
            if (same || (i < out && j >= out)) ++ordered;
          }
        }
        if (clique_edge_count(out, in) != ordered) return "out " + std::to_string(out) + " in " + std::to_string(in);
      }
    }
    return std::nullopt;
  });

  run.fixed("representation.star_collision", []() -> Failure {
    const auto [triples, pairs] = fixtures::star_collision();
    const auto ta = to_bipartite(triples);
    const auto tb = to_bipartite(pairs);
    // Relabel the second expansion: original k -> 6 + k, encoder 4 + q -> q.
    std::set<VertexPair> relabeled;
    for (auto [i, j] : tb.graph.edges()) {
      const auto map = [](VertexId v) { return v <= 4 ? 6 + v : v - 4; };
      const VertexId a = map(i), b = map(j);
      relabeled.insert({std::min(a, b), std::max(a, b)});
    }
    const std::set<VertexPair> first(ta.graph.edges().begin(), ta.graph.edges().end());
    if (first != relabeled || ta.graph.vertex_count() != tb.graph.vertex_count()) {
      return write_graph(ta.graph) + "vs relabeled\n" + write_graph(tb.graph);
    }
    const auto as_original = from_bipartite(ta.graph, {{1, VertexRole::Original}});
    const auto as_encoder = from_bipartite(ta.graph, {{1, VertexRole::Encoder}});
    if (!(as_original.hypergraph == triples)) return "hint 1 original gave\n" + write_hypergraph(as_original.hypergraph);
    if (!(as_encoder.hypergraph == pairs)) return "hint 1 encoder gave\n" + write_hypergraph(as_encoder.hypergraph);
    return std::nullopt;
  });

  run.fixed("representation.clique_collision", []() -> Failure {
    const auto [a, b] = fixtures::clique_collision();
    const MultiGraph ga = to_clique(a);
    const MultiGraph gb = to_clique(b);
    if (ga == gb && !a.same_edge_set(b)) return std::nullopt;
    return write_multigraph(ga) + "vs\n" + write_multigraph(gb);
  });

  run.fixed("representation.worked_expansion", []() -> Failure {
    const auto star = to_bipartite(fixtures::unoriented_eight());
    const std::vector<VertexPair> want{{1, 9}, {2, 9}, {2, 10}, {3, 10}, {5, 9}, {6, 11}, {7, 10}, {7, 11}, {8, 10}};
    std::vector<VertexPair> got = star.graph.edges();
    std::sort(got.begin(), got.end());
    if (star.graph.vertex_count() == 11 && got == want) return std::nullopt;
    return write_graph(star.graph);
  });

  run.fixed("representation.worked_clique", []() -> Failure {
    const MultiGraph g = to_clique(fixtures::unoriented_eight_clique());
    const auto it = g.multiplicity.find({2, 3});
    if (g.edge_count() == 10 && it != g.multiplicity.end() && it->second == 2) return std::nullopt;
    return write_multigraph(g);
  });
}

}  // namespace

bool PropertyReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const PropertyOutcome& o) { return o.passed; });
}

std::string PropertyReport::to_text() const {
  std::string s = "suite " + suite + "\nseed " + std::to_string(seed) + "\ntrials " + std::to_string(trials) + "\n";
  int failed = 0;
  for (const PropertyOutcome& o : outcomes) {
    s += (o.passed ? "PASS " : "FAIL ") + o.name + " checks " + std::to_string(o.checks) + "\n";
    if (!o.passed) {
      ++failed;
      std::istringstream lines(o.counterexample);
      for (std::string line; std::getline(lines, line);) s += "  | " + line + "\n";
    }
  }
  s += "summary " + std::to_string(outcomes.size() - failed) + "/" + std::to_string(outcomes.size()) + " passed\n";
  return s;
}

const std::vector<std::string_view>& property_suite_names() {
  static const std::vector<std::string_view> names{"duality", "composition", "reduction", "presets",
                                                   "tensor",  "representation", "all"};
  return names;
}

PropertyReport run_property_suite(std::string_view suite, std::uint64_t seed, int trials, const OperatorTable& ops) {
  const auto& names = property_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown property suite '" + std::string(suite) + "'");
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  PropertyReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  report.trials = trials;
  Runner run(seed, trials, report);
  const bool all = suite == "all";
  if (all || suite == "duality") duality_suite(run, ops);
  if (all || suite == "composition") composition_suite(run);
  if (all || suite == "reduction") reduction_suite(run);
  if (all || suite == "presets") presets_suite(run);
  if (all || suite == "tensor") tensor_suite(run);
  if (all || suite == "representation") representation_suite(run);
  return report;
}

bool close_enough(const std::vector<double>& a, const std::vector<double>& b, double rel, double abs_floor) {
  if (a.size() != b.size()) return false;
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (double x : b) scale = std::max(scale, std::abs(x));
  const double tol = std::max(abs_floor, rel * scale);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(std::abs(a[i] - b[i]) <= tol)) return false;
  }
  return true;
}

bool close_enough(double a, double b, double rel, double abs_floor) {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace hgcalc
