#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "ybe/brace.hpp"
#include "ybe/canonical.hpp"
#include "ybe/error.hpp"
#include "ybe/modular.hpp"

namespace ybe {

using mod::reduce;

bool is_symmetric_j(const std::vector<std::int64_t>& j) {
  const auto n = static_cast<std::int64_t>(j.size());
  for (std::int64_t i = 0; i < n; ++i)
    if (reduce(j[i], n) != reduce(j[reduce(-i, n)], n)) return false;
  return true;
}

AsymmetricForm::AsymmetricForm(std::int64_t n, std::vector<std::int64_t> j) : n_(n), j_(std::move(j)) {
  if (n < 2) throw HypothesisError("asymmetric product needs n >= 2");
  if (static_cast<std::int64_t>(j_.size()) != n)
    throw HypothesisError("j must have exactly n entries");
  for (auto& v : j_) v = reduce(v, n);
  if (!is_symmetric_j(j_)) throw HypothesisError("j is not symmetric (j_i != j_{-i})");
  order_ = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    if (order_ > std::size_t{UINT32_MAX} / static_cast<std::size_t>(n))
      throw CapExceeded("asymmetric product order too large");
    order_ *= static_cast<std::size_t>(n);
  }
}

std::int64_t AsymmetricForm::bilinear(const std::vector<std::int64_t>& u,
                                      const std::vector<std::int64_t>& v) const {
  std::int64_t s = 0;
  for (std::int64_t r = 0; r < n_; ++r) {
    if (u[r] == 0) continue;
    for (std::int64_t c = 0; c < n_; ++c) s += u[r] * j_[reduce(c - r, n_)] * v[c];
  }
  return reduce(s, n_);
}

std::int64_t AsymmetricForm::determinant() const {
  std::vector<std::vector<std::int64_t>> m(n_, std::vector<std::int64_t>(n_));
  for (std::int64_t r = 0; r < n_; ++r)
    for (std::int64_t c = 0; c < n_; ++c) m[r][c] = j_[reduce(c - r, n_)];
  return mod::det_mod(m, n_);
}

bool AsymmetricForm::nonsingular() const { return mod::is_unit(determinant(), n_); }

bool AsymmetricForm::rows_distinct() const {
  // Row r is j shifted by r; rows r and s agree iff j is (s-r)-periodic.
  for (std::int64_t d = 1; d < n_; ++d) {
    bool same = true;
    for (std::int64_t c = 0; c < n_ && same; ++c) same = j_[c] == j_[reduce(c - d, n_)];
    if (same) return false;
  }
  return true;
}

bool AsymmetricForm::j_generates() const {
  std::int64_t g = n_;
  for (auto v : j_) g = std::gcd(g, v);
  return g == 1;
}

AsymmetricForm::Elem AsymmetricForm::decode(elem_t e) const {
  Elem out{std::vector<std::int64_t>(n_), static_cast<std::int64_t>(e % n_)};
  std::uint64_t code = e / n_;
  for (std::int64_t k = 0; k < n_; ++k) {
    out.u[k] = static_cast<std::int64_t>(code % n_);
    code /= n_;
  }
  return out;
}

elem_t AsymmetricForm::encode(const Elem& e) const {
  std::uint64_t code = 0;
  for (std::int64_t k = n_ - 1; k >= 0; --k) code = code * n_ + reduce(e.u[k], n_);
  return static_cast<elem_t>(code * n_ + reduce(e.i, n_));
}

namespace {

// alpha(i)(v): e_k -> e_{k+i}
std::vector<std::int64_t> shift(const std::vector<std::int64_t>& v, std::int64_t i, std::int64_t n) {
  std::vector<std::int64_t> out(n);
  for (std::int64_t k = 0; k < n; ++k) out[reduce(k + i, n)] = v[k];
  return out;
}

}  // namespace

elem_t AsymmetricForm::add(elem_t a, elem_t b) const {
  Elem x = decode(a), y = decode(b);
  Elem z{std::vector<std::int64_t>(n_), x.i + y.i + bilinear(x.u, y.u)};
  for (std::int64_t k = 0; k < n_; ++k) z.u[k] = x.u[k] + y.u[k];
  return encode(z);
}

elem_t AsymmetricForm::mul(elem_t a, elem_t b) const {
  Elem x = decode(a), y = decode(b);
  auto av = shift(y.u, x.i, n_);
  Elem z{std::vector<std::int64_t>(n_), x.i + y.i};
  for (std::int64_t k = 0; k < n_; ++k) z.u[k] = x.u[k] + av[k];
  return encode(z);
}

elem_t AsymmetricForm::lambda(elem_t a, elem_t b) const {
  Elem x = decode(a), y = decode(b);
  auto av = shift(y.u, x.i, n_);
  const std::int64_t j = y.i - bilinear(x.u, av);
  return encode({std::move(av), j});
}

elem_t AsymmetricForm::x_point(std::int64_t i, std::int64_t j) const {
  Elem e{std::vector<std::int64_t>(n_), j};
  e.u[reduce(i, n_)] = 1;
  return encode(e);
}

ElementSet AsymmetricForm::socle() const {
  // lambda is additive in its second argument, so lambda_a = id iff it
  // fixes the additive generators (e_k, 0) and (0, 1). The loop applies
  // the lambda formula to each generator on a stack buffer; elements have
  // at most 9 coordinates since the order fits in elem_t.
  std::array<std::int64_t, 10> u{};
  ElementSet out;
  for (elem_t a = 0; a < order_; ++a) {
    const auto i = static_cast<std::int64_t>(a % n_);
    std::uint64_t code = a / n_;
    for (std::int64_t k = 0; k < n_; ++k, code /= n_) u[k] = static_cast<std::int64_t>(code % n_);
    bool id = true;
    // lambda_a(e_k, 0) = (e_{k+i}, -b(u, e_{k+i}))
    for (std::int64_t k = 0; k < n_ && id; ++k) {
      const std::int64_t c = reduce(k + i, n_);
      std::int64_t bu = 0;
      for (std::int64_t r = 0; r < n_; ++r) bu += u[r] * j_[reduce(c - r, n_)];
      id = c == k && reduce(bu, n_) == 0;
    }
    // lambda_a(0, 1) = (0, 1 - b(u, 0)) = (0, 1) always.
    if (id) out.push_back(a);
  }
  return out;
}

Solution AsymmetricForm::restricted_solution() const {
  const auto N = static_cast<std::size_t>(n_ * n_);
  std::vector<elem_t> pts(N);
  for (std::int64_t i = 0; i < n_; ++i)
    for (std::int64_t j = 0; j < n_; ++j) pts[i * n_ + j] = x_point(i, j);
  auto where = [&](elem_t e) -> point_t {
    Elem d = decode(e);
    std::int64_t i = -1;
    for (std::int64_t k = 0; k < n_; ++k) {
      if (d.u[k] == 0) continue;
      if (d.u[k] != 1 || i >= 0) throw std::logic_error("restricted_solution: X is not lambda-closed");
      i = k;
    }
    if (i < 0) throw std::logic_error("restricted_solution: X is not lambda-closed");
    return static_cast<point_t>(i * n_ + d.i);
  };
  Table t(N, std::vector<point_t>(N));
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < n_; ++i)
    for (std::int64_t j = 0; j < n_; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) t[x][y] = where(lambda(pts[x], pts[y]));
  return Solution::from_table(t, std::move(labels));
}

AsymmetricProduct asymmetric_product(std::int64_t n, const std::vector<std::int64_t>& j) {
  AsymmetricForm f(n, j);
  if (f.order() > kDefaultBraceCap) throw CapExceeded("asymmetric product of order " + std::to_string(f.order()) +
                                                     " is too large to expand");
  const auto N = static_cast<elem_t>(f.order());
  OpTable add(N, std::vector<elem_t>(N)), mul(N, std::vector<elem_t>(N));
  for (elem_t a = 0; a < N; ++a)
    for (elem_t b = 0; b < N; ++b) {
      add[a][b] = f.add(a, b);
      mul[a][b] = f.mul(a, b);
    }
  LeftBrace B = make_brace(add, mul);
  for (elem_t a = 0; a < N; ++a)
    for (elem_t b = 0; b < N; ++b)
      if (B.lambda(a, b) != f.lambda(a, b)) throw std::logic_error("asymmetric_product: lambda formula mismatch");
  std::vector<elem_t> xs;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t k = 0; k < n; ++k) xs.push_back(f.x_point(i, k));
  const auto det = f.determinant();
  const bool ns = f.nonsingular();
  return {std::move(f), std::move(B), std::move(xs), det, ns};
}

std::vector<std::vector<std::int64_t>> symmetric_j_vectors(std::int64_t n) {
  // Free coordinates are j_0 .. j_{n/2}.
  const std::int64_t free = n / 2 + 1;
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(free, 0);
  while (true) {
    std::vector<std::int64_t> j(n);
    for (std::int64_t i = 0; i < n; ++i) j[i] = c[std::min(i, n - i)];
    out.push_back(j);
    std::int64_t k = free - 1;
    while (k >= 0 && c[k] == n - 1) c[k--] = 0;
    if (k < 0) break;
    ++c[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::int64_t> asym_solution_iso(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& c) {
  if (a.size() != c.size()) throw HypothesisError("j-vectors have different lengths");
  const auto n = static_cast<std::int64_t>(a.size());
  AsymmetricForm fa(n, a), fc(n, c);
  Solution sa = fa.restricted_solution(), sc = fc.restricted_solution();
  for (std::int64_t u : mod::units(n)) {
    bool ok = true;
    for (std::int64_t i = 0; i < n && ok; ++i)
      ok = reduce(u * fa.j()[i], n) == fc.j()[reduce(u * i, n)];
    if (!ok) continue;
    std::vector<point_t> h(n * n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j)
        h[i * n + j] = static_cast<point_t>(reduce(u * i, n) * n + reduce(u * j, n));
    if (!is_isomorphism(sa, sc, h))
      throw std::logic_error("asym_solution_iso: unit map is not a solution isomorphism");
    return u;
  }
  if (fa.nonsingular() && fc.nonsingular() && find_isomorphism(sa, sc))
    throw std::logic_error("asym_solution_iso: no unit but the solutions are isomorphic");
  return std::nullopt;
}

}  // namespace ybe
