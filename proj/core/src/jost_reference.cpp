#include <cmath>
#include <string>

#include "hgcalc/errors.hpp"
#include "hgcalc/graph_reference.hpp"

namespace hgcalc {

namespace {

double sum_of(const std::vector<VertexId>& side, const std::vector<double>& f) {
  double s = 0.0;
  for (VertexId v : side) s += f[v - 1];
  return s;
}

bool contains(const std::vector<VertexId>& side, VertexId v) {
  for (VertexId u : side) {
    if (u == v) return true;
  }
  return false;
}

double magnitude_factor(double x, double p) {
  return x == 0.0 ? 0.0 : std::pow(std::abs(x), p - 2.0);
}

std::vector<double> vertex_form(const OrientedHypergraph& h, const std::vector<double>& f, double p) {
  std::vector<double> out(h.vertex_count(), 0.0);
  for (VertexId i = 1; i <= h.vertex_count(); ++i) {
    const int deg = h.degree(i);
    if (deg == 0) continue;
    double s = 0.0;
    for (const Hyperarc& a : h.arcs()) {
      const bool in_side = contains(a.in, i);
      if (!in_side && !contains(a.out, i)) continue;
      const double diff = sum_of(a.in, f) - sum_of(a.out, f);
      const double co = in_side ? sum_of(a.in, f) : sum_of(a.out, f);
      const double anti = in_side ? sum_of(a.out, f) : sum_of(a.in, f);
      s += magnitude_factor(diff, p) * (co - anti);
    }
    out[i - 1] = s / deg;
  }
  return out;
}

std::vector<double> hyperarc_form(const OrientedHypergraph& h, const std::vector<double>& F, double p) {
  const auto& arcs = h.arcs();
  std::vector<double> out(arcs.size(), 0.0);
  for (std::size_t q = 0; q < arcs.size(); ++q) {
    double s = 0.0;
    for (VertexId i = 1; i <= h.vertex_count(); ++i) {
      const bool in_q = contains(arcs[q].in, i);
      if (!in_q && !contains(arcs[q].out, i)) continue;
      double as_in = 0.0;
      double as_out = 0.0;
      for (std::size_t r = 0; r < arcs.size(); ++r) {
        if (contains(arcs[r].in, i)) as_in += F[r];
        if (contains(arcs[r].out, i)) as_out += F[r];
      }
      const double same = in_q ? as_in : as_out;
      const double opposite = in_q ? as_out : as_in;
      s += magnitude_factor(as_in - as_out, p) * (same - opposite) / h.degree(i);
    }
    out[q] = s;
  }
  return out;
}

}  // namespace

std::vector<double> jost_reference(JostKind kind, const OrientedHypergraph& h,
                                   const std::vector<double>& fn, double p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw Error(ErrorCode::InvalidP, "p must be a finite real greater than 1");
  }
  const std::size_t expected = kind == JostKind::VertexPLaplacian
                                   ? static_cast<std::size_t>(h.vertex_count())
                                   : h.arc_count();
  if (fn.size() != expected) {
    throw Error(ErrorCode::LengthMismatch, "function has " + std::to_string(fn.size()) +
                                               " values, expected " + std::to_string(expected));
  }
  return kind == JostKind::VertexPLaplacian ? vertex_form(h, fn, p) : hyperarc_form(h, fn, p);
}

}  // namespace hgcalc
