#include "ybe/brace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "ybe/canonical.hpp"
#include "ybe/error.hpp"

namespace ybe {

struct BraceBuilder {
  static LeftBrace build(OpTable add, OpTable mul, elem_t zero, std::vector<elem_t> neg,
                         std::vector<elem_t> inv) {
    LeftBrace b;
    b.add_ = std::move(add);
    b.mul_ = std::move(mul);
    b.zero_ = zero;
    b.neg_ = std::move(neg);
    b.inv_ = std::move(inv);
    return b;
  }
};

namespace {

void check_op_format(const OpTable& t, std::size_t n, const char* name) {
  if (t.size() != n) throw FormatError(std::string(name) + " table has the wrong number of rows");
  for (const auto& row : t) {
    if (row.size() != n) throw FormatError(std::string(name) + " table is ragged");
    for (elem_t v : row)
      if (v >= n) throw FormatError(std::string(name) + " table entry out of range");
  }
}

std::optional<std::vector<elem_t>> assoc_witness(const OpTable& t) {
  const auto n = static_cast<elem_t>(t.size());
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      const elem_t ab = t[a][b];
      const auto& rowa = t[a];
      const auto& rowab = t[ab];
      const auto& rowb = t[b];
      for (elem_t c = 0; c < n; ++c)
        if (rowab[c] != rowa[rowb[c]]) return std::vector<elem_t>{a, b, c};
    }
  return std::nullopt;
}

// Inverse of every element with respect to identity e, or the first
// element that has none.
std::pair<std::vector<elem_t>, std::optional<elem_t>> inverses(const OpTable& t, elem_t e) {
  const auto n = static_cast<elem_t>(t.size());
  std::vector<elem_t> inv(n, UINT32_MAX);
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t b = 0; b < n; ++b)
      if (t[a][b] == e && t[b][a] == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] == UINT32_MAX) return {{}, a};
  }
  return {inv, std::nullopt};
}

}  // namespace

BraceCheck validate_brace(const OpTable& add, const OpTable& mul) {
  const auto n = static_cast<elem_t>(add.size());
  if (n == 0) throw FormatError("brace tables are empty");
  check_op_format(add, n, "add");
  check_op_format(mul, n, "mul");
  BraceCheck res;
  auto fail = [&](std::string what, std::vector<elem_t> w) {
    res.violation = std::move(what);
    res.witness = std::move(w);
    return res;
  };
  elem_t e = UINT32_MAX;
  for (elem_t c = 0; c < n && e == UINT32_MAX; ++c) {
    bool ok = true;
    for (elem_t x = 0; x < n && ok; ++x) ok = add[c][x] == x && add[x][c] == x;
    if (ok) e = c;
  }
  if (e == UINT32_MAX) return fail("(B,+) has no identity", {});
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = a + 1; b < n; ++b)
      if (add[a][b] != add[b][a]) return fail("(B,+) is not commutative", {a, b});
  if (auto w = assoc_witness(add)) return fail("(B,+) is not associative", *w);
  auto [neg, no_neg] = inverses(add, e);
  if (no_neg) return fail("(B,+) lacks an inverse", {*no_neg});
  for (elem_t x = 0; x < n; ++x)
    if (mul[e][x] != x || mul[x][e] != x) return fail("additive identity is not the multiplicative identity", {x});
  if (auto w = assoc_witness(mul)) return fail("(B,o) is not associative", *w);
  auto [inv, no_inv] = inverses(mul, e);
  if (no_inv) return fail("(B,o) lacks an inverse", {*no_inv});
  for (elem_t a = 0; a < n; ++a) {
    const auto& ma = mul[a];
    for (elem_t b = 0; b < n; ++b) {
      const elem_t ab = ma[b];
      const auto& addb = add[b];
      const auto& addab = add[ab];
      for (elem_t c = 0; c < n; ++c)
        if (add[ma[addb[c]]][a] != addab[ma[c]])
          return fail("brace law a o (b + c) + a = a o b + a o c fails", {a, b, c});
    }
  }
  res.brace = BraceBuilder::build(add, mul, e, std::move(neg), std::move(inv));
  return res;
}

LeftBrace make_brace(const OpTable& add, const OpTable& mul) {
  BraceCheck c = validate_brace(add, mul);
  if (!c.ok()) throw AxiomError("not a left brace: " + c.violation, c.witness);
  return std::move(*c.brace);
}

LeftBrace trivial_brace(const OpTable& add) { return make_brace(add, add); }

LeftBrace cyclic_trivial_brace(std::size_t n) {
  OpTable t(n, std::vector<elem_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<elem_t>((a + b) % n);
  return trivial_brace(t);
}

ElementSet socle(const LeftBrace& B) {
  ElementSet out;
  const auto n = static_cast<elem_t>(B.order());
  for (elem_t a = 0; a < n; ++a) {
    bool id = true;
    for (elem_t b = 0; b < n && id; ++b) id = B.mul(a, b) == B.add(a, b);
    if (id) out.push_back(a);
  }
  return out;
}

ElementSet additive_span(const LeftBrace& B, const std::vector<elem_t>& gens) {
  std::vector<bool> in(B.order(), false);
  std::vector<elem_t> g(gens);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<elem_t> list{B.zero()};
  in[B.zero()] = true;
  for (std::size_t h = 0; h < list.size(); ++h)
    for (elem_t x : g) {
      elem_t y = B.add(list[h], x);
      if (!in[y]) in[y] = true, list.push_back(y);
    }
  std::sort(list.begin(), list.end());
  return list;
}

ElementSet star_ideal(const LeftBrace& B) {
  const auto n = static_cast<elem_t>(B.order());
  std::vector<bool> seen(n, false);
  std::vector<elem_t> gens;
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      elem_t s = B.star(a, b);
      if (!seen[s]) seen[s] = true, gens.push_back(s);
    }
  return additive_span(B, gens);
}

ElementSet ideal_closure(const LeftBrace& B, const std::vector<elem_t>& gens) {
  const auto n = static_cast<elem_t>(B.order());
  std::vector<bool> in(n, false);
  std::vector<elem_t> list{B.zero()};
  in[B.zero()] = true;
  auto push = [&](elem_t x) {
    if (!in[x]) in[x] = true, list.push_back(x);
  };
  for (elem_t g : gens) push(g);
  for (std::size_t h = 0; h < list.size(); ++h) {
    const elem_t x = list[h];
    push(B.neg(x));
    for (std::size_t k = 0; k <= h; ++k) push(B.add(x, list[k]));
    for (elem_t a = 0; a < n; ++a) {
      push(B.lambda(a, x));
      push(B.mul(B.mul(a, x), B.inv(a)));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::optional<std::string> ideal_violation(const LeftBrace& B, const ElementSet& s) {
  const auto n = static_cast<elem_t>(B.order());
  std::vector<bool> in(n, false);
  for (elem_t x : s) {
    if (x >= n) return "element out of range";
    in[x] = true;
  }
  if (!in[B.zero()]) return "does not contain zero";
  for (elem_t x : s) {
    if (!in[B.neg(x)]) return "not closed under additive inverse";
    for (elem_t y : s)
      if (!in[B.add(x, y)]) return "not closed under addition";
  }
  for (elem_t a = 0; a < n; ++a)
    for (elem_t x : s) {
      if (!in[B.lambda(a, x)]) return "not invariant under lambda";
      if (!in[B.mul(B.mul(a, x), B.inv(a))]) return "not normal in (B,o)";
    }
  return std::nullopt;
}

bool is_trivial_brace(const LeftBrace& B) { return B.add_table() == B.mul_table(); }

bool is_cyclic_additive(const LeftBrace& B) {
  for (elem_t g = 0; g < B.order(); ++g)
    if (additive_span(B, {g}).size() == B.order()) return true;
  return false;
}

BraceQuotient quotient_brace(const LeftBrace& B, const ElementSet& I) {
  if (auto v = ideal_violation(B, I)) throw AxiomError("not an ideal: " + *v);
  const auto n = static_cast<elem_t>(B.order());
  std::vector<elem_t> coset(n, UINT32_MAX), reps;
  for (elem_t a = 0; a < n; ++a) {
    if (coset[a] != UINT32_MAX) continue;
    const auto k = static_cast<elem_t>(reps.size());
    reps.push_back(a);
    for (elem_t i : I) coset[B.add(a, i)] = k;
  }
  const auto m = static_cast<elem_t>(reps.size());
  OpTable add(m, std::vector<elem_t>(m)), mul(m, std::vector<elem_t>(m));
  for (elem_t a = 0; a < m; ++a)
    for (elem_t b = 0; b < m; ++b) {
      add[a][b] = coset[B.add(reps[a], reps[b])];
      mul[a][b] = coset[B.mul(reps[a], reps[b])];
    }
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      if (coset[B.add(a, b)] != add[coset[a]][coset[b]] || coset[B.mul(a, b)] != mul[coset[a]][coset[b]])
        throw std::logic_error("quotient_brace: operations are not well defined on cosets");
  return {make_brace(add, mul), std::move(coset)};
}

Solution associated_solution(const LeftBrace& B) {
  const auto n = static_cast<elem_t>(B.order());
  Table t(n, std::vector<point_t>(n));
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) t[a][b] = B.lambda(a, b);
  return Solution::from_table(t);
}

bool is_brace_isomorphism(const LeftBrace& a, const LeftBrace& b, const std::vector<elem_t>& f) {
  const auto n = static_cast<elem_t>(a.order());
  if (b.order() != n || f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (elem_t v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

namespace {

// (additive order, multiplicative order, |fixed points of lambda_a|)
std::vector<std::array<std::size_t, 3>> element_invariants(const LeftBrace& B) {
  const auto n = static_cast<elem_t>(B.order());
  std::vector<std::array<std::size_t, 3>> out(n);
  for (elem_t a = 0; a < n; ++a) {
    std::size_t ao = 1, mo = 1, fix = 0;
    for (elem_t x = a; x != B.zero(); x = B.add(x, a)) ++ao;
    for (elem_t x = a; x != B.zero(); x = B.mul(x, a)) ++mo;
    for (elem_t x = 0; x < n; ++x) fix += B.lambda(a, x) == x;
    out[a] = {ao, mo, fix};
  }
  return out;
}

class BraceIsoSearch {
 public:
  BraceIsoSearch(const LeftBrace& a, const LeftBrace& b)
      : a_(a), b_(b), n_(static_cast<elem_t>(a.order())), ia_(element_invariants(a)),
        ib_(element_invariants(b)) {}

  std::optional<std::vector<elem_t>> run() {
    auto sa = ia_, sb = ib_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    choose_generators();
    std::vector<elem_t> f(n_, kNone), g(n_, kNone);
    f[a_.zero()] = b_.zero();
    g[b_.zero()] = a_.zero();
    std::vector<elem_t> known{a_.zero()};
    if (search(0, f, g, known)) return f;
    return std::nullopt;
  }

 private:
  static constexpr elem_t kNone = UINT32_MAX;

  // Closure of the known set under + and o, following f.
  bool extend(std::vector<elem_t>& f, std::vector<elem_t>& g, std::vector<elem_t>& known,
              std::size_t from) const {
    for (std::size_t h = from; h < known.size(); ++h) {
      const elem_t x = known[h];
      for (std::size_t k = 0; k <= h; ++k) {
        const elem_t y = known[k];
        const std::pair<elem_t, elem_t> cand[] = {
            {a_.add(x, y), b_.add(f[x], f[y])},
            {a_.mul(x, y), b_.mul(f[x], f[y])},
            {a_.mul(y, x), b_.mul(f[y], f[x])}};
        for (auto [p, q] : cand) {
          if (f[p] != kNone) {
            if (f[p] != q) return false;
            continue;
          }
          if (g[q] != kNone || ia_[p] != ib_[q]) return false;
          f[p] = q;
          g[q] = p;
          known.push_back(p);
        }
      }
    }
    return true;
  }

  void choose_generators() {
    std::vector<elem_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](elem_t x, elem_t y) {
      return std::make_pair(ia_[x][0] * ia_[x][1], x) > std::make_pair(ia_[y][0] * ia_[y][1], y);
    });
    std::vector<elem_t> f(n_, kNone), g(n_, kNone);
    f[a_.zero()] = a_.zero();
    g[a_.zero()] = a_.zero();
    std::vector<elem_t> known{a_.zero()};
    // Identity images: the closure under a_ itself tracks what is generated.
    BraceIsoSearch self(a_, a_);
    for (elem_t x : order) {
      if (known.size() == n_) break;
      if (f[x] != kNone) continue;
      gens_.push_back(x);
      std::size_t from = known.size();
      f[x] = x;
      g[x] = x;
      known.push_back(x);
      self.extend(f, g, known, 0);
      (void)from;
    }
  }

  bool search(std::size_t k, std::vector<elem_t>& f, std::vector<elem_t>& g, std::vector<elem_t>& known) {
    if (k == gens_.size()) return known.size() == n_ && is_brace_isomorphism(a_, b_, f);
    const elem_t x = gens_[k];
    if (f[x] != kNone) return search(k + 1, f, g, known);
    for (elem_t y = 0; y < n_; ++y) {
      if (g[y] != kNone || ia_[x] != ib_[y]) continue;
      const std::size_t mark = known.size();
      f[x] = y;
      g[y] = x;
      known.push_back(x);
      if (extend(f, g, known, 0) && search(k + 1, f, g, known)) return true;
      while (known.size() > mark) {
        elem_t p = known.back();
        known.pop_back();
        g[f[p]] = kNone;
        f[p] = kNone;
      }
    }
    return false;
  }

  const LeftBrace& a_;
  const LeftBrace& b_;
  elem_t n_;
  std::vector<std::array<std::size_t, 3>> ia_, ib_;
  std::vector<elem_t> gens_;
};

}  // namespace

std::optional<std::vector<elem_t>> find_brace_isomorphism(const LeftBrace& a, const LeftBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  return BraceIsoSearch(a, b).run();
}

bool socle_quotient_check(const LeftBrace& B) {
  BraceQuotient q = quotient_brace(B, socle(B));
  PermutationBrace p = permutation_brace(associated_solution(B));
  return find_brace_isomorphism(q.brace, p.brace).has_value();
}

OrbitSolution orbit_solution(const LeftBrace& B, elem_t x) {
  const auto n = static_cast<elem_t>(B.order());
  std::vector<bool> in(n, false);
  std::vector<elem_t> sub{B.zero()};
  in[B.zero()] = true;
  auto push = [&](elem_t y) {
    if (!in[y]) in[y] = true, sub.push_back(y);
  };
  push(x);
  for (std::size_t h = 0; h < sub.size(); ++h) {
    const elem_t a = sub[h];
    push(B.neg(a));
    push(B.inv(a));
    for (std::size_t k = 0; k <= h; ++k) {
      const elem_t b = sub[k];
      push(B.add(a, b));
      push(B.mul(a, b));
      push(B.mul(b, a));
    }
  }
  std::sort(sub.begin(), sub.end());
  for (elem_t a : sub)
    for (elem_t b : sub)
      if (!in[B.lambda(a, b)]) throw std::logic_error("orbit_solution: subbrace is not lambda-closed");
  std::vector<elem_t> pts;
  std::vector<bool> inx(n, false);
  for (elem_t a : sub) {
    elem_t y = B.lambda(a, x);
    if (!inx[y]) inx[y] = true, pts.push_back(y);
  }
  std::sort(pts.begin(), pts.end());
  std::map<elem_t, point_t> pos;
  for (std::size_t k = 0; k < pts.size(); ++k) pos[pts[k]] = static_cast<point_t>(k);
  const auto m = static_cast<point_t>(pts.size());
  Table t(m, std::vector<point_t>(m));
  std::vector<std::string> labels;
  for (point_t p = 0; p < m; ++p) {
    labels.push_back(std::to_string(pts[p]));
    for (point_t q = 0; q < m; ++q) {
      auto it = pos.find(B.lambda(pts[p], pts[q]));
      if (it == pos.end()) throw std::logic_error("orbit_solution: orbit is not lambda-closed");
      t[p][q] = it->second;
    }
  }
  Solution s = Solution::from_table(t, std::move(labels));
  if (!is_indecomposable(s)) throw std::logic_error("orbit_solution: result is decomposable");
  return {std::move(sub), std::move(pts), std::move(s)};
}

}  // namespace ybe
