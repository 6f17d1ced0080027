#include "ybe/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ybe/detail/union_find.hpp"

namespace ybe {

Solution relabel(const Solution& s, const Perm& pi) {
  const auto n = static_cast<point_t>(s.size());
  if (pi.degree() != n) throw std::invalid_argument("relabel: degree mismatch");
  Table t(n, std::vector<point_t>(n));
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) t[pi[x]][pi[y]] = pi[s.apply(x, y)];
  std::vector<std::string> labels;
  if (!s.labels().empty()) {
    labels.resize(n);
    for (point_t x = 0; x < n; ++x) labels[pi[x]] = s.labels()[x];
  }
  return Solution::from_table(t, std::move(labels));
}

bool is_isomorphism(const Solution& a, const Solution& b, const std::vector<point_t>& f) {
  const auto n = static_cast<point_t>(a.size());
  if (b.size() != n || f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (point_t v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      if (f[a.apply(x, y)] != b.apply(f[x], f[y])) return false;
  return true;
}

namespace {

// Per-point invariant: cycle type of sigma_x, the length of the cycle of
// sigma_x through x, and the size of the orbit of x.
using Fingerprint = std::vector<std::size_t>;

std::vector<Fingerprint> fingerprints(const Solution& s) {
  const auto n = static_cast<point_t>(s.size());
  Partition orb = orbits(s.sigmas(), n);
  std::vector<std::size_t> orbit_size(n);
  for (const auto& o : orb)
    for (point_t x : o) orbit_size[x] = o.size();
  std::vector<Fingerprint> out(n);
  for (point_t x = 0; x < n; ++x) {
    std::size_t own = 1;
    for (point_t y = s.apply(x, x); y != x; y = s.apply(x, y)) ++own;
    Fingerprint f{own, orbit_size[x]};
    auto ct = cycle_type(s.sigma(x));
    f.insert(f.end(), ct.begin(), ct.end());
    out[x] = std::move(f);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Solution& a, const Solution& b)
      : a_(a), b_(b), n_(static_cast<point_t>(a.size())), fa_(fingerprints(a)), fb_(fingerprints(b)) {}

  std::optional<IsoWitness> run() {
    auto sa = fa_, sb = fb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    std::vector<point_t> f(n_, kNone), g(n_, kNone);
    std::vector<point_t> assigned;
    if (search(f, g, assigned)) return f;
    return std::nullopt;
  }

 private:
  static constexpr point_t kNone = UINT32_MAX;

  // Assign u -> v and close under f(sigma_p(q)) = sigma'_{f(p)}(f(q)) and
  // the same for inverses. Records new assignments in `assigned`.
  bool assign(point_t u, point_t v, std::vector<point_t>& f, std::vector<point_t>& g,
              std::vector<point_t>& assigned) {
    std::vector<std::pair<point_t, point_t>> stack{{u, v}};
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      if (f[p] != kNone) {
        if (f[p] != q) return false;
        continue;
      }
      if (g[q] != kNone || fa_[p] != fb_[q]) return false;
      f[p] = q;
      g[q] = p;
      assigned.push_back(p);
      for (point_t w : assigned) {
        point_t fw = f[w];
        stack.emplace_back(a_.apply(w, p), b_.apply(fw, q));
        stack.emplace_back(a_.apply(p, w), b_.apply(q, fw));
        stack.emplace_back(a_.sigma_inv(w)[p], b_.sigma_inv(fw)[q]);
        stack.emplace_back(a_.sigma_inv(p)[w], b_.sigma_inv(q)[fw]);
      }
    }
    return true;
  }

  bool search(std::vector<point_t>& f, std::vector<point_t>& g, std::vector<point_t>& assigned) {
    point_t u = 0;
    while (u < n_ && f[u] != kNone) ++u;
    if (u == n_) return is_isomorphism(a_, b_, f);
    for (point_t v = 0; v < n_; ++v) {
      if (g[v] != kNone || fa_[u] != fb_[v]) continue;
      const std::size_t mark = assigned.size();
      if (assign(u, v, f, g, assigned) && search(f, g, assigned)) return true;
      while (assigned.size() > mark) {
        point_t p = assigned.back();
        assigned.pop_back();
        g[f[p]] = kNone;
        f[p] = kNone;
      }
    }
    return false;
  }

  const Solution& a_;
  const Solution& b_;
  point_t n_;
  std::vector<Fingerprint> fa_, fb_;
};

// Ordered partition stored as colors 0..k-1; a color is a cell and the
// color order is the cell order.
struct Coloring {
  std::vector<point_t> color;
  point_t cells = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Solution& s) : s_(s), n_(static_cast<point_t>(s.size())) {}

  CanonicalLabeling run() {
    Coloring c;
    auto fp = fingerprints(s_);
    std::vector<point_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](point_t x, point_t y) { return fp[x] < fp[y]; });
    c.color.assign(n_, 0);
    point_t k = 0;
    for (point_t i = 0; i < n_; ++i) {
      if (i > 0 && fp[order[i]] != fp[order[i - 1]]) ++k;
      c.color[order[i]] = k;
    }
    c.cells = n_ ? k + 1 : 0;
    refine(c);
    std::vector<point_t> path;
    dfs(c, path);
    return {best_, best_lab_};
  }

 private:
  void refine(Coloring& c) {
    std::vector<std::vector<std::uint64_t>> sig(n_);
    std::vector<point_t> order(n_);
    while (true) {
      const std::uint64_t K = c.cells;
      for (point_t x = 0; x < n_; ++x) {
        auto& v = sig[x];
        v.clear();
        v.push_back(c.color[x]);
        std::size_t mark = v.size();
        for (point_t y = 0; y < n_; ++y) v.push_back(c.color[y] * K + c.color[s_.apply(x, y)]);
        std::sort(v.begin() + mark, v.end());
        mark = v.size();
        for (point_t z = 0; z < n_; ++z) v.push_back(c.color[z] * K + c.color[s_.apply(z, x)]);
        std::sort(v.begin() + mark, v.end());
        mark = v.size();
        for (point_t z = 0; z < n_; ++z) v.push_back(c.color[z] * K + c.color[s_.sigma_inv(z)[x]]);
        std::sort(v.begin() + mark, v.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](point_t x, point_t y) { return sig[x] < sig[y]; });
      point_t k = 0;
      std::vector<point_t> next(n_);
      for (point_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k;
        next[order[i]] = k;
      }
      if (k + 1 == c.cells) return;
      c.color = std::move(next);
      c.cells = k + 1;
    }
  }

  Coloring individualize(const Coloring& c, point_t v) {
    Coloring d = c;
    const point_t cv = c.color[v];
    for (point_t x = 0; x < n_; ++x)
      if (c.color[x] > cv || (c.color[x] == cv && x != v)) ++d.color[x];
    ++d.cells;
    refine(d);
    return d;
  }

  void leaf(const Coloring& c) {
    const auto& lab = c.color;
    Table t(n_, std::vector<point_t>(n_));
    for (point_t x = 0; x < n_; ++x)
      for (point_t y = 0; y < n_; ++y) t[lab[x]][lab[y]] = lab[s_.apply(x, y)];
    if (!have_best_ || t < best_) {
      best_ = std::move(t);
      best_lab_ = lab;
      best_inv_.assign(n_, 0);
      for (point_t x = 0; x < n_; ++x) best_inv_[lab[x]] = x;
      have_best_ = true;
    } else if (t == best_) {
      std::vector<point_t> aut(n_);
      bool trivial = true;
      for (point_t x = 0; x < n_; ++x) {
        aut[x] = best_inv_[lab[x]];
        trivial = trivial && aut[x] == x;
      }
      if (!trivial) auts_.push_back(std::move(aut));
    }
  }

  void dfs(const Coloring& c, std::vector<point_t>& path) {
    if (c.cells == n_) {
      leaf(c);
      return;
    }
    std::vector<point_t> size(c.cells, 0);
    for (point_t x = 0; x < n_; ++x) ++size[c.color[x]];
    point_t target = 0;
    while (size[target] == 1) ++target;
    std::vector<point_t> cell;
    for (point_t x = 0; x < n_; ++x)
      if (c.color[x] == target) cell.push_back(x);
    std::vector<point_t> explored;
    for (point_t v : cell) {
      if (!explored.empty() && equivalent_to_explored(v, explored, path)) continue;
      path.push_back(v);
      dfs(individualize(c, v), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  // Is v in the orbit of an explored sibling under the known
  // automorphisms that fix the current path pointwise?
  bool equivalent_to_explored(point_t v, const std::vector<point_t>& explored,
                              const std::vector<point_t>& path) {
    detail::UnionFind uf(n_);
    bool any = false;
    for (const auto& a : auts_) {
      bool fixes = true;
      for (point_t p : path)
        if (a[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (point_t x = 0; x < n_; ++x) uf.unite(x, a[x]);
    }
    if (!any) return false;
    for (point_t w : explored)
      if (uf.find(w) == uf.find(v)) return true;
    return false;
  }

  const Solution& s_;
  point_t n_;
  bool have_best_ = false;
  Table best_;
  std::vector<point_t> best_lab_, best_inv_;
  std::vector<std::vector<point_t>> auts_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) return std::nullopt;
  return IsoSearch(a, b).run();
}

CanonicalLabeling canonical_labeling(const Solution& s) { return Canonizer(s).run(); }

Table canonical_form(const Solution& s) { return canonical_labeling(s).form; }

}  // namespace ybe
