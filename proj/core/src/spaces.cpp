#include "hgcalc/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

void check_positive(const std::vector<double>& w, const char* name) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!(w[k] > 0.0) || !std::isfinite(w[k])) {
      throw Error(ErrorCode::NonPositive,
                  std::string(name) + "[" + std::to_string(k + 1) + "] must be positive and finite");
    }
  }
}

void check_length(const std::vector<double>& w, std::size_t expected, const char* name) {
  if (w.size() != expected) {
    throw Error(ErrorCode::LengthMismatch, std::string(name) + " has " + std::to_string(w.size()) +
                                               " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

WeightAssignment WeightAssignment::unit(int vertex_count, std::size_t arc_count) {
  const auto n = static_cast<std::size_t>(vertex_count);
  return {std::vector<double>(n, 1.0), std::vector<double>(n, 1.0),
          std::vector<double>(arc_count, 1.0), std::vector<double>(arc_count, 1.0)};
}

void WeightAssignment::validate(int vertex_count, std::size_t arc_count) const {
  const auto n = static_cast<std::size_t>(vertex_count);
  check_length(wI, n, "wI");
  check_length(wG, n, "wG");
  check_length(WI, arc_count, "WI");
  check_length(WG, arc_count, "WG");
  check_positive(wI, "wI");
  check_positive(wG, "wG");
  check_positive(WI, "WI");
  check_positive(WG, "WG");
}

double weight_pow(double x, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return x;
  if (e == 0.5) return std::sqrt(x);
  if (e == 2.0) return x * x;
  return std::pow(x, e);
}

double inner_product(Space space, const std::vector<double>& f, const std::vector<double>& g,
                     const WeightAssignment& weights, double exponent) {
  const std::vector<double>& w = space == Space::Vertex ? weights.wI : weights.WI;
  if (f.size() != g.size() || f.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch, "inner product operands have different lengths");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) s += weight_pow(w[k], exponent) * f[k] * g[k];
  return s;
}

double lp_norm(Space space, const std::vector<double>& f, double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::InvalidP, "p must be at least 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0.0;
  for (double x : f) s += std::pow(std::abs(x), p);
  if (space == Space::Hyperarc) s *= 0.5;
  return std::pow(s, 1.0 / p);
}

std::vector<double> normalize_weights(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "no weights to normalize");
  check_positive(values, "weight");
  const double m = *std::max_element(values.begin(), values.end());
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [m](double v) { return v / m; });
  return out;
}

}  // namespace hgcalc
