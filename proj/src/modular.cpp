#include "ybe/modular.hpp"

#include <stdexcept>
#include <utility>

namespace ybe::mod {

__extension__ typedef __int128 i128;

std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t n) {
  const std::size_t k = m.size();
  if (k == 0) return reduce(1, n);
  if (k > 16) throw std::invalid_argument("det_mod: matrix too large");
  std::vector<std::vector<i128>> a(k, std::vector<i128>(k));
  for (std::size_t r = 0; r < k; ++r) {
    if (m[r].size() != k) throw std::invalid_argument("det_mod: matrix not square");
    for (std::size_t c = 0; c < k; ++c) a[r][c] = reduce(m[r][c], n);
  }
  i128 prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t s = p + 1;
      while (s < k && a[s][p] == 0) ++s;
      if (s == k) return 0;
      std::swap(a[p], a[s]);
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r)
      for (std::size_t c = p + 1; c < k; ++c)
        a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
    prev = a[p][p];
  }
  i128 det = a[k - 1][k - 1] * sign;
  i128 res = det % n;
  if (res < 0) res += n;
  return static_cast<std::int64_t>(res);
}

}  // namespace ybe::mod
