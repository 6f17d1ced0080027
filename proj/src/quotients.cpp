#include "ybe/quotients.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "ybe/detail/union_find.hpp"
#include "ybe/error.hpp"

namespace ybe {

Congruence::Congruence(std::vector<point_t> class_of)
    : class_of_(detail::normalize_classes(class_of)) {
  num_classes_ = 0;
  for (point_t c : class_of_) num_classes_ = std::max<std::size_t>(num_classes_, c + 1);
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<point_t> c(n);
  for (std::size_t x = 0; x < n; ++x) c[x] = static_cast<point_t>(x);
  return Congruence(std::move(c));
}

Congruence Congruence::full(std::size_t n) { return Congruence(std::vector<point_t>(n, 0)); }

Congruence Congruence::from_classes(std::size_t n, const Partition& classes) {
  std::vector<point_t> c(n, UINT32_MAX);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (point_t x : classes[k]) {
      if (x >= n || c[x] != UINT32_MAX) throw FormatError("classes do not partition the points");
      c[x] = static_cast<point_t>(k);
    }
  for (point_t v : c)
    if (v == UINT32_MAX) throw FormatError("classes do not cover every point");
  return Congruence(std::move(c));
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<point_t> image(num_classes_, UINT32_MAX);
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    point_t& slot = image[class_of_[x]];
    if (slot == UINT32_MAX) slot = other.class_of_[x];
    else if (slot != other.class_of_[x]) return false;
  }
  return true;
}

Congruence join(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  detail::UnionFind uf(n);
  std::vector<point_t> fa(n, UINT32_MAX), fb(n, UINT32_MAX);
  for (point_t x = 0; x < n; ++x) {
    if (fa[a[x]] == UINT32_MAX) fa[a[x]] = x; else uf.unite(fa[a[x]], x);
    if (fb[b[x]] == UINT32_MAX) fb[b[x]] = x; else uf.unite(fb[b[x]], x);
  }
  return Congruence(uf.class_map());
}

std::optional<std::vector<point_t>> congruence_violation(const Solution& s,
                                                         const std::vector<point_t>& c) {
  const auto n = static_cast<point_t>(s.size());
  if (c.size() != n) throw FormatError("partition has the wrong number of points");
  std::vector<point_t> rep(n, UINT32_MAX);
  for (point_t x = 0; x < n; ++x) {
    if (c[x] >= n) throw FormatError("class index out of range");
    if (rep[c[x]] == UINT32_MAX) rep[c[x]] = x;
  }
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) {
      point_t rx = rep[c[x]], ry = rep[c[y]];
      if (c[s.apply(x, y)] != c[s.apply(rx, ry)]) return std::vector<point_t>{rx, x, ry, y};
    }
  return std::nullopt;
}

bool is_congruence(const Solution& s, const std::vector<point_t>& c) {
  return !congruence_violation(s, c).has_value();
}

Congruence principal_congruence(const Solution& s, point_t a, point_t b) {
  const auto n = static_cast<point_t>(s.size());
  detail::UnionFind uf(n);
  std::deque<std::pair<point_t, point_t>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (point_t y = 0; y < n; ++y) {
      point_t p = s.apply(u, y), q = s.apply(v, y);  // R1
      if (uf.unite(p, q)) queue.emplace_back(p, q);
      p = s.apply(y, u), q = s.apply(y, v);  // R2
      if (uf.unite(p, q)) queue.emplace_back(p, q);
    }
  }
  return Congruence(uf.class_map());
}

std::vector<Congruence> all_congruences(const Solution& s, std::size_t cap) {
  const auto n = static_cast<point_t>(s.size());
  if (n > cap)
    throw CapExceeded("all_congruences: " + std::to_string(n) + " points exceeds cap " +
                      std::to_string(cap));
  std::set<Congruence> found{Congruence::discrete(n), Congruence::full(n)};
  std::vector<Congruence> work;
  for (point_t a = 0; a < n; ++a)
    for (point_t b = a + 1; b < n; ++b) {
      auto c = principal_congruence(s, a, b);
      if (found.insert(c).second) work.push_back(c);
    }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto c = join(work[i], work[j]);
      if (found.insert(c).second) work.push_back(c);
    }
  std::vector<Congruence> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Congruence& x, const Congruence& y) {
    return x.num_classes() > y.num_classes();
  });
  return out;
}

Quotient quotient(const Solution& s, const Congruence& c) {
  if (auto w = congruence_violation(s, c.class_of()))
    throw AxiomError("partition is not a congruence", *w);
  const auto n = static_cast<point_t>(s.size());
  const auto m = static_cast<point_t>(c.num_classes());
  std::vector<point_t> rep(m, UINT32_MAX);
  for (point_t x = 0; x < n; ++x)
    if (rep[c[x]] == UINT32_MAX) rep[c[x]] = x;
  Table bar(m, std::vector<point_t>(m));
  for (point_t a = 0; a < m; ++a)
    for (point_t b = 0; b < m; ++b) bar[a][b] = c[s.apply(rep[a], rep[b])];
  Solution q = Solution::from_table(bar);
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      if (c[s.apply(x, y)] != q.apply(c[x], c[y]))
        throw std::logic_error("quotient: class map is not a homomorphism");
  if (is_indecomposable(s)) {
    std::vector<std::size_t> count(m, 0);
    for (point_t x = 0; x < n; ++x) ++count[c[x]];
    for (auto k : count)
      if (k != count[0]) throw std::logic_error("quotient: fibers of an indecomposable solution differ in size");
  }
  return {std::move(q), c.class_of()};
}

SimplicityVerdict is_simple(const Solution& s) {
  const auto n = static_cast<point_t>(s.size());
  if (n < 2) throw std::invalid_argument("is_simple: simplicity requires more than one point");
  // For a transitive group every congruence class has the size of the
  // class of 0, so pairs through 0 see every nontrivial congruence.
  const bool transitive = is_indecomposable(s);
  for (point_t a = 0; a < n; ++a) {
    for (point_t b = a + 1; b < n; ++b) {
      auto c = principal_congruence(s, a, b);
      if (!c.is_full()) return {false, c};
    }
    if (transitive) break;
  }
  return {true, std::nullopt};
}

namespace {

// Longest chains in the congruence lattice: len[k] is the largest number
// of congruences in a strictly increasing chain from the discrete one
// up to lattice[k].
std::vector<unsigned> chain_lengths(const std::vector<Congruence>& lattice) {
  std::vector<unsigned> len(lattice.size(), 1);
  for (std::size_t k = 0; k < lattice.size(); ++k)
    for (std::size_t i = 0; i < k; ++i)
      if (lattice[i].num_classes() > lattice[k].num_classes() && lattice[i].refines(lattice[k]))
        len[k] = std::max(len[k], len[i] + 1);
  return len;
}

void require_indecomposable(const Solution& s, const char* who) {
  if (s.size() < 2) throw std::invalid_argument(std::string(who) + ": requires more than one point");
  if (!is_indecomposable(s)) throw std::invalid_argument(std::string(who) + ": solution is decomposable");
}

}  // namespace

unsigned composition_length(const Solution& s) {
  require_indecomposable(s, "composition_length");
  auto lattice = all_congruences(s, std::max<std::size_t>(kDefaultLatticeCap, s.size()));
  auto len = chain_lengths(lattice);
  unsigned best = 0;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice[k].is_full()) continue;
    bool coatom = true;
    for (std::size_t i = 0; i < lattice.size() && coatom; ++i)
      if (i != k && !lattice[i].is_full() && lattice[i].num_classes() < lattice[k].num_classes() &&
          lattice[k].refines(lattice[i]))
        coatom = false;
    if (coatom) best = std::max(best, len[k]);
  }
  return best;
}

std::optional<unsigned> primitive_level(const Solution& s) {
  require_indecomposable(s, "primitive_level");
  auto lattice = all_congruences(s, std::max<std::size_t>(kDefaultLatticeCap, s.size()));
  auto len = chain_lengths(lattice);
  std::optional<unsigned> best;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice[k].is_full()) continue;
    if (!is_primitive(quotient(s, lattice[k]).solution)) continue;
    if (!best || len[k] > *best) best = len[k];
  }
  return best;
}

std::optional<std::vector<point_t>> cocycle_violation(const DynamicalCocycle& a) {
  const auto ny = static_cast<point_t>(a.y_dot.size());
  const auto ns = static_cast<point_t>(a.s_size);
  const auto& d = a.y_dot;
  for (point_t i = 0; i < ny; ++i)
    for (point_t j = 0; j < ny; ++j)
      for (point_t k = 0; k < ny; ++k)
        for (point_t r = 0; r < ns; ++r)
          for (point_t s = 0; s < ns; ++s)
            for (point_t t = 0; t < ns; ++t) {
              point_t lhs = a.at(d[i][j], d[i][k], a.at(i, j, r)[s])[a.at(i, k, r)[t]];
              point_t rhs = a.at(d[j][i], d[j][k], a.at(j, i, s)[r])[a.at(j, k, s)[t]];
              if (lhs != rhs) return std::vector<point_t>{i, j, k, r, s, t};
            }
  return std::nullopt;
}

Extension dynamical_extension(const DynamicalCocycle& a) {
  const auto ny = static_cast<point_t>(a.y_dot.size());
  const auto ns = static_cast<point_t>(a.s_size);
  if (ny == 0 || ns == 0) throw std::invalid_argument("dynamical_extension: empty factor");
  if (a.alpha.size() != static_cast<std::size_t>(ny) * ny * ns)
    throw FormatError("dynamical_extension: alpha has the wrong number of entries");
  for (const auto& p : a.alpha)
    if (p.degree() != ns) throw FormatError("dynamical_extension: alpha entry has the wrong degree");
  Solution base = from_cycle_set(a.y_dot);
  if (auto w = cocycle_violation(a)) throw AxiomError("dynamical cocycle identity fails", *w);
  const point_t n = ny * ns;
  Table dot(n, std::vector<point_t>(n));
  for (point_t r = 0; r < ns; ++r)
    for (point_t i = 0; i < ny; ++i)
      for (point_t s = 0; s < ns; ++s)
        for (point_t j = 0; j < ny; ++j)
          dot[r * ny + i][s * ny + j] = a.at(i, j, r)[s] * ny + a.y_dot[i][j];
  Solution sol = from_cycle_set(dot);
  std::vector<point_t> proj(n);
  for (point_t x = 0; x < n; ++x) proj[x] = x % ny;
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      if (proj[sol.apply(x, y)] != base.apply(proj[x], proj[y]))
        throw std::logic_error("dynamical_extension: projection is not a homomorphism");
  return {std::move(sol), std::move(proj)};
}

ExtractedCocycle extract_cocycle(const Solution& s, const Congruence& c) {
  Quotient q = quotient(s, c);
  const auto n = static_cast<point_t>(s.size());
  const auto ny = static_cast<point_t>(c.num_classes());
  Partition fibers = c.classes();
  const auto ns = static_cast<point_t>(fibers[0].size());
  for (const auto& f : fibers)
    if (f.size() != ns) throw std::invalid_argument("extract_cocycle: classes differ in size");
  std::vector<point_t> pos(n);
  for (const auto& f : fibers)
    for (point_t k = 0; k < ns; ++k) pos[f[k]] = k;
  DynamicalCocycle a;
  a.y_dot = to_cycle_set(q.solution);
  a.s_size = ns;
  a.alpha.reserve(static_cast<std::size_t>(ny) * ny * ns);
  for (point_t i = 0; i < ny; ++i)
    for (point_t j = 0; j < ny; ++j)
      for (point_t r = 0; r < ns; ++r) {
        point_t x = fibers[i][r];
        std::vector<point_t> img(ns);
        for (point_t t = 0; t < ns; ++t) img[t] = pos[s.sigma_inv(x)[fibers[j][t]]];
        a.alpha.emplace_back(std::move(img));
      }
  std::vector<point_t> emb(n);
  for (point_t x = 0; x < n; ++x) emb[x] = pos[x] * ny + c[x];
  return {std::move(a), std::move(emb)};
}

Covering covering_solution(const Solution& s, point_t x, std::size_t cap) {
  if (!is_indecomposable(s)) throw std::invalid_argument("covering_solution: solution is decomposable");
  PermGroup G = permutation_group(s, cap);
  const auto m = static_cast<point_t>(G.order());
  std::vector<Perm> inv;
  inv.reserve(m);
  for (const auto& g : G.elements()) inv.push_back(g.inverse());
  std::vector<point_t> proj(m);
  for (point_t g = 0; g < m; ++g) proj[g] = inv[g][x];
  auto idx = [&](const Perm& p) {
    auto i = G.index_of(p);
    if (!i) throw std::logic_error("covering_solution: product left the group");
    return static_cast<point_t>(*i);
  };
  Table sigma(m, std::vector<point_t>(m));
  for (point_t g = 0; g < m; ++g) {
    const Perm& right = s.sigma_inv(proj[g]);
    for (point_t h = 0; h < m; ++h) sigma[g][h] = idx(compose(G.element(h), right));
  }
  std::vector<std::string> labels;
  Solution cov = Solution::from_table(sigma);
  // Second coordinate as displayed: g sigma_{sigma_{g^-1(x)}(h^-1(x))}.
  for (point_t g = 0; g < m; ++g)
    for (point_t h = 0; h < m; ++h) {
      point_t want = idx(compose(G.element(g), s.sigma(s.apply(proj[g], proj[h]))));
      if (gamma(cov, h, g) != want)
        throw std::logic_error("covering_solution: second coordinate disagrees with gamma");
    }
  for (point_t g = 0; g < m; ++g)
    for (point_t h = 0; h < m; ++h)
      if (proj[cov.apply(g, h)] != s.apply(proj[g], proj[h]))
        throw std::logic_error("covering_solution: projection is not a homomorphism");
  return {std::move(G), std::move(cov), std::move(proj)};
}

PermGroup fundamental_group(const Solution& s, point_t x, std::size_t cap) {
  if (!is_indecomposable(s)) throw std::invalid_argument("fundamental_group: solution is decomposable");
  PermGroup G = permutation_group(s, cap);
  std::vector<Perm> stab;
  for (const auto& g : G.elements())
    if (g[x] == x && !g.is_identity()) stab.push_back(g);
  return PermGroup::closure(std::move(stab), s.size(), cap);
}

}  // namespace ybe
