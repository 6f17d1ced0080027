#ifndef YBE_MODULAR_HPP
#define YBE_MODULAR_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace ybe::mod {

inline std::int64_t reduce(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

inline bool is_unit(std::int64_t a, std::int64_t n) {
  return std::gcd(reduce(a, n), n) == 1;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Multiplicative order of a unit t modulo n.
inline std::int64_t unit_order(std::int64_t t, std::int64_t n) {
  t = reduce(t, n);
  std::int64_t k = 1;
  std::int64_t x = t;
  while (x != reduce(1, n)) {
    x = reduce(x * t, n);
    ++k;
  }
  return k;
}

inline std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < n || (n == 1 && a == 1); ++a)
    if (is_unit(a, n)) out.push_back(a);
  return out;
}

// Determinant of a square integer matrix, reduced into [0, n).
// Fraction-free Bareiss elimination over the integers; entries are
// assumed already reduced mod n so intermediate values stay small for
// the matrix sizes used here.
std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t n);

}  // namespace ybe::mod

#endif
