#include <stdexcept>

#include "ybe/brace.hpp"
#include "ybe/error.hpp"

namespace ybe {

PermutationBrace permutation_brace(const Solution& s, std::size_t cap) {
  const auto n = static_cast<point_t>(s.size());
  PermGroup G = PermGroup::closure(s.sigmas(), n, cap);
  const auto N = static_cast<elem_t>(G.order());

  std::vector<elem_t> sig(n);
  for (point_t x = 0; x < n; ++x) sig[x] = static_cast<elem_t>(*G.index_of(s.sigma(x)));

  // R[k][y] = k o sigma_y
  OpTable R(N, std::vector<elem_t>(n));
  for (elem_t k = 0; k < N; ++k)
    for (point_t y = 0; y < n; ++y) R[k][y] = static_cast<elem_t>(*G.index_of(G.element(k) * s.sigma(y)));

  // e + sigma_x = e o sigma_{e^-1(x)}
  std::vector<std::vector<point_t>> ginv(N);
  for (elem_t k = 0; k < N; ++k) ginv[k] = G.element(k).inverse().image();
  auto plus_gen = [&](elem_t e, point_t x) { return R[e][ginv[e][x]]; };

  constexpr elem_t kNone = UINT32_MAX;
  const elem_t zero = 0;
  std::vector<elem_t> order{zero}, add_parent(N, kNone);
  std::vector<point_t> add_via(N, 0);
  add_parent[zero] = zero;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (point_t x = 0; x < n; ++x) {
      elem_t y = plus_gen(order[h], x);
      if (add_parent[y] == kNone) {
        add_parent[y] = order[h];
        add_via[y] = x;
        order.push_back(y);
      }
    }
  if (order.size() != N) throw std::logic_error("permutation_brace: sigma_x do not span (G,+)");

  OpTable add(N, std::vector<elem_t>(N));
  for (elem_t g = 0; g < N; ++g) {
    add[g][zero] = g;
    for (std::size_t h = 1; h < order.size(); ++h) {
      const elem_t e = order[h];
      add[g][e] = plus_gen(add[g][add_parent[e]], add_via[e]);
    }
  }
  // Folding must not depend on the word chosen for h.
  for (elem_t g = 0; g < N; ++g)
    for (elem_t h = 0; h < N; ++h)
      for (point_t x = 0; x < n; ++x)
        if (add[g][plus_gen(h, x)] != plus_gen(add[g][h], x))
          throw std::logic_error("permutation_brace: additive folding depends on the word");

  OpTable mul(N, std::vector<elem_t>(N));
  for (elem_t a = 0; a < N; ++a) {
    mul[a][0] = a;
    for (elem_t b = 1; b < N; ++b)
      mul[a][b] = R[mul[a][G.parent(b)]][static_cast<point_t>(G.via(b))];
  }

  LeftBrace B = make_brace(add, mul);
  for (elem_t g = 0; g < N; ++g)
    for (point_t x = 0; x < n; ++x)
      if (B.lambda(g, sig[x]) != sig[G.element(g)[x]])
        throw std::logic_error("permutation_brace: lambda_g(sigma_x) != sigma_{g(x)}");
  return {std::move(G), std::move(B), std::move(sig)};
}

}  // namespace ybe
