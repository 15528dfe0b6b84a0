#ifndef HGCALC_SPACES_HPP
#define HGCALC_SPACES_HPP

#include <cstddef>
#include <limits>
#include <vector>

namespace hgcalc {

// Position i holds the value at vertex v_{i+1} / hyperarc a_{i+1}.
using VertexFunction = std::vector<double>;
using HyperarcFunction = std::vector<double>;

enum class Space { Vertex, Hyperarc };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct WeightAssignment {
  std::vector<double> wI;  // per vertex
  std::vector<double> wG;  // per vertex
  std::vector<double> WI;  // per hyperarc
  std::vector<double> WG;  // per hyperarc

  static WeightAssignment unit(int vertex_count, std::size_t arc_count);

  // Throws LengthMismatch or NonPositive.
  void validate(int vertex_count, std::size_t arc_count) const;

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

// Vertex: sum wI^exponent * f * g. Hyperarc: sum WI^exponent * F * G.
double inner_product(Space space, const std::vector<double>& f, const std::vector<double>& g,
                     const WeightAssignment& weights, double exponent);

// Vertex: (sum |f|^p)^(1/p). Hyperarc: (1/2 sum |F|^p)^(1/p). p = kInfinity gives max |.|.
double lp_norm(Space space, const std::vector<double>& f, double p);

// Divides by the maximum so that the result lies in (0, 1] and attains 1.
std::vector<double> normalize_weights(const std::vector<double>& values);

// x^e for a positive weight x, exact for the exponents 0, 1 and 1/2.
double weight_pow(double x, double e);

}  // namespace hgcalc

#endif
