#include "ybe/solution.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "ybe/error.hpp"

namespace ybe {

Table check_table_format(const RawTable& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw FormatError("table is empty");
  Table t(n, std::vector<point_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x].size() != n)
      throw FormatError("table is ragged: row " + std::to_string(x) + " has " +
                        std::to_string(raw[x].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y) {
      if (raw[x][y] < 0 || static_cast<std::size_t>(raw[x][y]) >= n)
        throw FormatError("table entry out of range at row " + std::to_string(x) + ", column " +
                          std::to_string(y));
      t[x][y] = static_cast<point_t>(raw[x][y]);
    }
  }
  return t;
}

namespace {

std::vector<std::vector<point_t>> invert_rows(const Table& t) {
  std::vector<std::vector<point_t>> inv(t.size(), std::vector<point_t>(t.size()));
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) inv[x][t[x][y]] = static_cast<point_t>(y);
  return inv;
}

std::optional<point_t> first_non_bijective_row(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    for (point_t v : t[x]) {
      if (seen[v]) return static_cast<point_t>(x);
      seen[v] = true;
    }
  }
  return std::nullopt;
}

// r on a bijective-row table, gamma derived from sigma.
struct RMap {
  const Table& s;
  const std::vector<std::vector<point_t>>& inv;
  std::pair<point_t, point_t> operator()(point_t x, point_t y) const {
    point_t u = s[x][y];
    return {u, inv[u][x]};
  }
};

}  // namespace

std::optional<std::vector<point_t>> braid_witness(const Table& sigma) {
  const auto n = static_cast<point_t>(sigma.size());
  auto inv = invert_rows(sigma);
  RMap r{sigma, inv};
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) {
      auto [a, b] = r(x, y);
      for (point_t z = 0; z < n; ++z) {
        // r12 r23 r12
        auto [b1, z1] = r(b, z);
        auto [a2, b2] = r(a, b1);
        // r23 r12 r23
        auto [y3, z3] = r(y, z);
        auto [x4, y4] = r(x, y3);
        auto [y5, z5] = r(y4, z3);
        if (a2 != x4 || b2 != y5 || z1 != z5) return std::vector<point_t>{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<std::vector<point_t>> sigma_identity_witness(const Table& sigma) {
  const auto n = static_cast<point_t>(sigma.size());
  auto inv = invert_rows(sigma);
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y) {
      const auto& lhs_inner = sigma[inv[x][y]];
      const auto& rhs_inner = sigma[inv[y][x]];
      for (point_t z = 0; z < n; ++z)
        if (sigma[x][lhs_inner[z]] != sigma[y][rhs_inner[z]]) return std::vector<point_t>{x, y, z};
    }
  return std::nullopt;
}

SolutionReport validate(const RawTable& raw) { return validate(check_table_format(raw)); }

SolutionReport validate(const Table& t) {
  SolutionReport rep;
  const auto n = static_cast<point_t>(t.size());
  if (auto bad = first_non_bijective_row(t)) {
    rep.failed_check = "nondegenerate";
    rep.failing_witness = std::vector<point_t>{*bad};
    return rep;
  }
  rep.nondegenerate = true;
  auto inv = invert_rows(t);
  RMap r{t, inv};
  for (point_t x = 0; x < n && !rep.failing_witness; ++x)
    for (point_t y = 0; y < n; ++y) {
      auto [u, v] = r(x, y);
      auto [x2, y2] = r(u, v);
      if (x2 != x || y2 != y) {
        rep.failed_check = "involutive";
        rep.failing_witness = std::vector<point_t>{x, y};
        break;
      }
    }
  if (rep.failing_witness) return rep;
  rep.involutive = true;
#ifndef NDEBUG
  // gamma_y is a bijection whenever r is involutive and every sigma_x is.
  for (point_t y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (point_t x = 0; x < n; ++x) {
      point_t g = r(x, y).second;
      assert(!seen[g]);
      seen[g] = true;
    }
  }
#endif
  auto w1 = braid_witness(t);
  auto w2 = sigma_identity_witness(t);
  if (w1.has_value() != w2.has_value())
    throw std::logic_error("validate: the two braid-relation checks disagree");
  if (w1) {
    rep.failed_check = "ybe";
    rep.failing_witness = w1;
    return rep;
  }
  rep.ybe = true;
  return rep;
}

Solution Solution::from_table(const Table& sigma, std::vector<std::string> labels) {
  const std::size_t n = sigma.size();
  RawTable raw(n);
  for (std::size_t x = 0; x < n; ++x) raw[x].assign(sigma[x].begin(), sigma[x].end());
  return from_raw(raw, std::move(labels));
}

Solution Solution::from_raw(const RawTable& raw, std::vector<std::string> labels) {
  Table t = check_table_format(raw);
  if (!labels.empty() && labels.size() != t.size())
    throw FormatError("labels: expected " + std::to_string(t.size()) + " entries");
  SolutionReport rep = validate(t);
  if (!rep.ok())
    throw AxiomError("not a solution: " + rep.failed_check + " check failed",
                     rep.failing_witness.value_or(std::vector<point_t>{}));
  Solution s;
  s.sigma_.reserve(t.size());
  for (auto& row : t) s.sigma_.emplace_back(std::move(row));
  for (const auto& p : s.sigma_) s.sigma_inv_.push_back(p.inverse());
  s.labels_ = std::move(labels);
  return s;
}

Solution Solution::from_perms(std::vector<Perm> sigma, std::vector<std::string> labels) {
  Table t;
  for (const auto& p : sigma) {
    if (p.degree() != sigma.size()) throw FormatError("sigma degree does not match point count");
    t.push_back(p.image());
  }
  return from_table(t, std::move(labels));
}

std::string Solution::label(point_t x) const {
  return labels_.empty() ? std::to_string(x + 1) : labels_[x];
}

Table Solution::table() const {
  Table t;
  for (const auto& p : sigma_) t.push_back(p.image());
  return t;
}

point_t gamma(const Solution& s, point_t y, point_t x) {
  return s.sigma_inv(s.apply(x, y))[x];
}

std::pair<point_t, point_t> apply_r(const Solution& s, point_t x, point_t y) {
  return {s.apply(x, y), gamma(s, y, x)};
}

PermGroup permutation_group(const Solution& s, std::size_t cap) {
  return PermGroup::closure(s.sigmas(), s.size(), cap);
}

bool is_indecomposable(const Solution& s) { return is_transitive(s.sigmas(), s.size()); }

bool is_primitive(const Solution& s) {
  return is_indecomposable(s) && block_systems(s.sigmas(), s.size()).empty();
}

bool is_irretractable(const Solution& s) {
  std::map<Perm, int> seen;
  for (const auto& p : s.sigmas())
    if (!seen.emplace(p, 0).second) return false;
  return true;
}

bool is_square_free(const Solution& s) {
  for (point_t x = 0; x < s.size(); ++x)
    if (s.apply(x, x) != x) return false;
  return true;
}

Retraction retract(const Solution& s) {
  const auto n = static_cast<point_t>(s.size());
  std::map<Perm, point_t> cls;
  std::vector<point_t> f(n);
  std::vector<point_t> rep;
  for (point_t x = 0; x < n; ++x) {
    auto [it, fresh] = cls.emplace(s.sigma(x), static_cast<point_t>(rep.size()));
    if (fresh) rep.push_back(x);
    f[x] = it->second;
  }
  const auto m = static_cast<point_t>(rep.size());
  Table bar(m, std::vector<point_t>(m));
  for (point_t a = 0; a < m; ++a)
    for (point_t b = 0; b < m; ++b) bar[a][b] = f[s.apply(rep[a], rep[b])];
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      if (f[s.apply(x, y)] != bar[f[x]][f[y]])
        throw std::logic_error("retract: class map is not a homomorphism");
  return {Solution::from_table(bar), std::move(f)};
}

std::optional<unsigned> multipermutation_level(const Solution& s) {
  unsigned k = 0;
  Solution cur = s;
  while (cur.size() > 1) {
    Retraction r = retract(cur);
    if (r.solution.size() == cur.size()) return std::nullopt;
    cur = std::move(r.solution);
    ++k;
  }
  return k;
}

Table to_cycle_set(const Solution& s) {
  Table t;
  for (const auto& p : s.sigmas()) t.push_back(p.inverse().image());
  return t;
}

Solution from_cycle_set(const Table& dot) {
  const auto n = static_cast<point_t>(dot.size());
  RawTable raw(n);
  for (point_t x = 0; x < n; ++x) raw[x].assign(dot[x].begin(), dot[x].end());
  check_table_format(raw);
  if (auto bad = first_non_bijective_row(dot))
    throw AxiomError("cycle set: left translation is not a bijection", {*bad});
  for (point_t x = 0; x < n; ++x)
    for (point_t y = 0; y < n; ++y)
      for (point_t z = 0; z < n; ++z)
        if (dot[dot[x][y]][dot[x][z]] != dot[dot[y][x]][dot[y][z]])
          throw AxiomError("cycle set law (x.y).(x.z) = (y.x).(y.z) fails", {x, y, z});
  std::vector<point_t> square_pre(n, UINT32_MAX);
  for (point_t x = 0; x < n; ++x) {
    point_t v = dot[x][x];
    if (square_pre[v] != UINT32_MAX)
      throw AxiomError("cycle set: square map x -> x.x is not a bijection", {square_pre[v], x});
    square_pre[v] = x;
  }
  Table sigma;
  for (point_t x = 0; x < n; ++x) sigma.push_back(Perm(dot[x]).inverse().image());
  return Solution::from_table(sigma);
}

}  // namespace ybe
