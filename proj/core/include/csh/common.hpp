#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csh {

using i64 = long long;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when an internal exact-arithmetic consistency check fails.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int64 add overflow");
  return r;
}
inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int64 mul overflow");
  return r;
}

inline i64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  i64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline i64 factorial(int n) {
  i64 r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace csh
