#ifndef HGCALC_COUNTING_HPP
#define HGCALC_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hgcalc {

using BigInt = boost::multiprecision::cpp_int;

enum class FeasibleKind { Hyperedges, Hyperarcs };

// Largest N accepted by the counting functions.
inline constexpr int kMaxCountingN = 4096;

// Number of distinct hyperedges (2^N - (N+1)) or hyperarcs
// (sum over n of C(N,n) * (2^n - 2)) on N vertices.
BigInt count_feasible(FeasibleKind kind, int n);

// Same count restricted to hyperedges/hyperarcs with at most max_card vertices.
BigInt count_feasible(FeasibleKind kind, int n, int max_card);

// N^N.
BigInt feasible_upper_bound(int n);

BigInt binomial(int n, int k);

}  // namespace hgcalc

#endif
