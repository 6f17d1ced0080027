// Brute-force reference implementations. They work on plain tables and
// share no code with the library beyond the Table alias.
#ifndef YBE_TESTS_ORACLES_HPP
#define YBE_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ybe/solution.hpp"

namespace oracle {

using ybe::point_t;
using ybe::Table;
using Pair = std::pair<point_t, point_t>;

inline std::vector<point_t> inverse_row(const std::vector<point_t>& row) {
  std::vector<point_t> inv(row.size());
  for (point_t i = 0; i < row.size(); ++i) inv[row[i]] = i;
  return inv;
}

inline bool rows_bijective(const Table& s) {
  for (const auto& row : s) {
    std::vector<bool> hit(s.size(), false);
    if (row.size() != s.size()) return false;
    for (auto v : row) {
      if (v >= s.size() || hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

// r(x, y) = (sigma_x(y), gamma_y(x)) with gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x).
inline Pair r_map(const Table& s, point_t x, point_t y) {
  const point_t a = s[x][y];
  const auto inv = inverse_row(s[a]);
  return {a, inv[x]};
}

inline bool involutive(const Table& s) {
  const auto n = static_cast<point_t>(s.size());
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) {
      auto [a, b] = r_map(s, x, y);
      if (r_map(s, a, b) != Pair{x, y}) return false;
    }
  return true;
}

// r12 r23 r12 = r23 r12 r23 by direct evaluation on triples.
inline bool braid(const Table& s) {
  const auto n = static_cast<point_t>(s.size());
  using Triple = std::array<point_t, 3>;
  auto r12 = [&](Triple t) {
    auto [a, b] = r_map(s, t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto r23 = [&](Triple t) {
    auto [a, b] = r_map(s, t[1], t[2]);
    return Triple{t[0], a, b};
  };
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      for (point_t z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
      }
  return true;
}

inline bool is_solution(const Table& s) { return rows_bijective(s) && involutive(s) && braid(s); }

// All set partitions of {0..n-1} as restricted growth strings.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<point_t>&)>& f) {
  std::vector<point_t> a(n, 0);
  std::function<void(std::size_t, point_t)> rec = [&](std::size_t i, point_t maxv) {
    if (i == n) {
      f(a);
      return;
    }
    for (point_t v = 0; v <= maxv + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) return;
  rec(1, 0);
}

// A partition is a congruence when r maps class pairs to class pairs.
inline bool compatible(const Table& s, const std::vector<point_t>& cls) {
  const auto n = static_cast<point_t>(s.size());
  std::map<std::pair<point_t, point_t>, Pair> image;
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) {
      auto [a, b] = r_map(s, x, y);
      Pair img{cls[a], cls[b]};
      auto [it, fresh] = image.emplace(Pair{cls[x], cls[y]}, img);
      if (!fresh && it->second != img) return false;
    }
  return true;
}

inline std::vector<std::vector<point_t>> congruences(const Table& s) {
  std::vector<std::vector<point_t>> out;
  for_each_partition(s.size(), [&](const std::vector<point_t>& c) {
    if (compatible(s, c)) out.push_back(c);
  });
  return out;
}

inline std::size_t num_classes(const std::vector<point_t>& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline bool simple(const Table& s) {
  if (s.size() < 2) return false;
  for (const auto& c : congruences(s)) {
    auto k = num_classes(c);
    if (k != 1 && k != s.size()) return false;
  }
  return true;
}

inline Table relabel(const Table& s, const std::vector<point_t>& pi) {
  Table out(s.size(), std::vector<point_t>(s.size()));
  for (point_t x = 0; x < s.size(); ++x)
    for (point_t y = 0; y < s.size(); ++y) out[pi[x]][pi[y]] = pi[s[x][y]];
  return out;
}

// Lexicographically least relabeled table over all n! bijections.
inline Table lex_min_form(const Table& s) {
  std::vector<point_t> pi(s.size());
  std::iota(pi.begin(), pi.end(), 0);
  Table best = s;
  do {
    Table t = relabel(s, pi);
    if (t < best) best = t;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

inline bool isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  std::vector<point_t> pi(a.size());
  std::iota(pi.begin(), pi.end(), 0);
  do {
    if (relabel(a, pi) == b) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

inline std::size_t orbit_count(const Table& s) {
  const auto n = static_cast<point_t>(s.size());
  std::vector<int> comp(n, -1);
  int k = 0;
  for (point_t r = 0; r < n; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<point_t> stack{r};
    comp[r] = k;
    while (!stack.empty()) {
      point_t u = stack.back();
      stack.pop_back();
      for (point_t x = 0; x < n; ++x) {
        point_t v = s[x][u];
        if (comp[v] < 0) comp[v] = k, stack.push_back(v);
      }
    }
    ++k;
  }
  return static_cast<std::size_t>(k);
}

inline bool indecomposable(const Table& s) { return orbit_count(s) == 1; }

inline bool irretractable(const Table& s) {
  std::set<std::vector<point_t>> rows(s.begin(), s.end());
  return rows.size() == s.size();
}

inline bool square_free(const Table& s) {
  for (point_t x = 0; x < s.size(); ++x)
    if (s[x][x] != x) return false;
  return true;
}

// Elements of the group generated by the rows, by naive closure.
inline std::set<std::vector<point_t>> group(const std::vector<std::vector<point_t>>& gens, std::size_t n) {
  std::vector<point_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<point_t>> seen{id};
  std::vector<std::vector<point_t>> todo{id};
  while (!todo.empty()) {
    auto g = todo.back();
    todo.pop_back();
    for (const auto& h : gens) {
      std::vector<point_t> gh(n);
      for (point_t i = 0; i < n; ++i) gh[i] = g[h[i]];
      if (seen.insert(gh).second) todo.push_back(gh);
    }
  }
  return seen;
}

// Every valid sigma table of order n, up to isomorphism, by exhaustive
// search over bijective rows. Feasible for n <= 4.
inline std::vector<Table> all_solutions_up_to_iso(std::size_t n) {
  std::vector<std::vector<point_t>> perms;
  std::vector<point_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<Table> forms;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Table t;
    for (auto i : idx) t.push_back(perms[i]);
    if (involutive(t) && braid(t)) forms.insert(lex_min_form(t));
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == perms.size() - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return {forms.begin(), forms.end()};
}

inline std::vector<point_t> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<point_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle

#endif
