#include "hgcalc/counting.hpp"

#include <algorithm>
#include <string>

#include "hgcalc/errors.hpp"

namespace hgcalc {

namespace {

void check_n(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "N must be at least 2");
  if (n > kMaxCountingN) {
    throw Error(ErrorCode::Overflow, "N = " + std::to_string(n) + " exceeds the supported range");
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_feasible(FeasibleKind kind, int n) {
  check_n(n);
  if (kind == FeasibleKind::Hyperedges) {
    BigInt p = 1;
    p <<= n;
    return p - (n + 1);
  }
  return count_feasible(kind, n, n);
}

BigInt count_feasible(FeasibleKind kind, int n, int max_card) {
  check_n(n);
  const int top = std::min(n, max_card);
  BigInt total = 0;
  for (int k = 2; k <= top; ++k) {
    if (kind == FeasibleKind::Hyperedges) {
      total += binomial(n, k);
    } else {
      BigInt p = 1;
      p <<= k;
      total += binomial(n, k) * (p - 2);
    }
  }
  return total;
}

BigInt feasible_upper_bound(int n) {
  check_n(n);
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n));
}

}  // namespace hgcalc
