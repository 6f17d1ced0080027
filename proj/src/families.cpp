#include "ybe/families.hpp"

#include <numeric>
#include <sstream>

#include "ybe/error.hpp"
#include "ybe/modular.hpp"

namespace ybe {

using mod::reduce;

Solution permutation_solution(const Perm& p) {
  return Solution::from_perms(std::vector<Perm>(p.degree(), p));
}

namespace {

void check_j_shape(std::int64_t n, const std::vector<std::int64_t>& j) {
  if (n < 2) throw HypothesisError("n must be at least 2");
  if (static_cast<std::int64_t>(j.size()) != n)
    throw HypothesisError("j must have exactly n = " + std::to_string(n) + " entries");
}

std::string pair_label(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

SquareHypotheses check_square_hypotheses(const SquareParams& p) {
  const std::int64_t n = p.n;
  check_j_shape(n, p.j);
  std::vector<std::int64_t> j(n);
  for (std::int64_t i = 0; i < n; ++i) j[i] = reduce(p.j[i], n);
  auto J = [&](std::int64_t i) { return j[reduce(i, n)]; };
  SquareHypotheses h;
  h.t_unit = mod::is_unit(p.t, n);
  h.n_prime = mod::is_prime(n);
  h.symmetric = true;
  for (std::int64_t i = 0; i < n; ++i) h.symmetric = h.symmetric && J(i) == J(-i);
  h.orbit = h.t_unit;
  if (h.t_unit) {
    const std::int64_t ord = mod::unit_order(p.t, n);
    std::int64_t ts = 1;
    for (std::int64_t s = 1; s <= ord && h.orbit; ++s) {
      ts = reduce(ts * p.t, n);
      for (std::int64_t i = 0; i < n; ++i)
        if (J(ts * i) != reduce(ts * J(i) - (ts - 1) * J(0), n)) {
          h.orbit = false;
          break;
        }
    }
  }
  h.unit_shift = h.distinct_shift = true;
  for (std::int64_t i = 1; i < n; ++i) {
    bool unit = false, distinct = false;
    for (std::int64_t k = 0; k < n; ++k) {
      unit = unit || mod::is_unit(J(i + k) - J(k), n);
      distinct = distinct || J(i + k) != J(k);
    }
    h.unit_shift = h.unit_shift && unit;
    h.distinct_shift = h.distinct_shift && distinct;
  }
  std::int64_t g = n;
  for (auto v : j) g = std::gcd(g, v);
  h.generates = g == 1;
  h.cond_i = true;
  for (std::int64_t i = 1; i < n; ++i) h.cond_i = h.cond_i && mod::is_unit(J(0) - J(i), n);
  h.cond_ii = true;
  h.non_constant = false;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      if (j[a] != j[b]) {
        h.non_constant = true;
        h.cond_ii = h.cond_ii && mod::is_unit(j[a] - j[b], n);
      }
  return h;
}

Solution square_formula(const SquareParams& p) {
  const std::int64_t n = p.n;
  check_j_shape(n, p.j);
  if (!mod::is_unit(p.t, n)) throw HypothesisError("t must be a unit of Z/(n)");
  auto J = [&](std::int64_t i) { return reduce(p.j[reduce(i, n)], n); };
  const auto N = static_cast<std::size_t>(n * n);
  Table t(N, std::vector<point_t>(N));
  std::vector<std::string> labels(N);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t jj = 0; jj < n; ++jj) {
      labels[i * n + jj] = pair_label(i, jj);
      for (std::int64_t k = 0; k < n; ++k)
        for (std::int64_t l = 0; l < n; ++l) {
          std::int64_t a = reduce(p.t * k + jj, n);
          std::int64_t b = reduce(p.t * (l - J(a - i)), n);
          t[i * n + jj][k * n + l] = static_cast<point_t>(a * n + b);
        }
    }
  return Solution::from_table(t, std::move(labels));
}

SquareResult square_solution(const SquareParams& p) {
  SquareClaims c;
  c.hypotheses = check_square_hypotheses(p);
  const auto& h = c.hypotheses;
  if (!h.t_unit) throw HypothesisError("t is not a unit of Z/(n)");
  if (!h.symmetric) throw HypothesisError("j is not symmetric: j_i != j_{-i} for some i");
  if (!h.orbit) throw HypothesisError("orbit condition j_{t^s i} = t^s j_i - (t^s - 1) j_0 fails");
  const bool general = h.unit_shift;
  const bool translation = reduce(p.t, p.n) == 1 && h.distinct_shift && h.generates;
  if (!general && !translation) {
    if (reduce(p.t, p.n) != 1)
      throw HypothesisError("shift condition fails: some nonzero i has no k with j_{i+k} - j_k a unit");
    if (!h.distinct_shift)
      throw HypothesisError("shift condition fails: some nonzero i has j_{i+k} = j_k for every k");
    throw HypothesisError("the j_i do not generate Z/(n)");
  }
  c.indecomposable_irretractable = true;
  if (general) c.reasons.push_back("indecomposable and irretractable: unit shift condition holds");
  if (translation)
    c.reasons.push_back("indecomposable and irretractable: t = 1, distinct shifts, j generates Z/(n)");
  if (general && h.cond_i && h.cond_ii) {
    c.simple_guaranteed = true;
    c.reasons.push_back("simple: j_0 - j_i and every nonzero j_i - j_k are units");
  }
  if (translation && h.cond_i) {
    c.simple_guaranteed = true;
    c.reasons.push_back("simple: t = 1 and j_0 - j_i is a unit for every i != 0");
  }
  if (h.n_prime && h.non_constant) {
    c.simple_guaranteed = true;
    c.reasons.push_back("simple: n is prime and j is not constant");
  }
  if (!c.simple_guaranteed) {
    std::string why = "simplicity not guaranteed:";
    if (!h.cond_i) why += " j_0 - j_i is not a unit for some i != 0;";
    if (general && !h.cond_ii) why += " some nonzero j_i - j_k is not a unit;";
    if (!h.n_prime) why += " n is not prime;";
    why.pop_back();
    c.reasons.push_back(why);
  }
  return {square_formula(p), std::move(c)};
}

Solution p2_solution(std::int64_t p, std::int64_t t, const std::vector<std::int64_t>& j) {
  if (!mod::is_prime(p)) throw HypothesisError("p must be prime");
  check_j_shape(p, j);
  if (reduce(t, p) == 0) throw HypothesisError("t must be nonzero mod p");
  if (mod::unit_order(t, p) % 2 == 0)
    throw HypothesisError(
        "hypotheses are contradictory: t has even multiplicative order, so symmetry and the orbit "
        "condition force j to be constant");
  SquareParams sp{p, t, j};
  auto h = check_square_hypotheses(sp);
  if (!h.symmetric) throw HypothesisError("j is not symmetric: j_i != j_{-i} for some i");
  if (!h.orbit) throw HypothesisError("orbit condition j_{t^s i} = t^s j_i - (t^s - 1) j_0 fails");
  if (!h.non_constant) throw HypothesisError("j is constant");
  return square_formula(sp);
}

Table rectangular_table(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) throw HypothesisError("m and n must both be at least 2");
  const std::int64_t mn = m * n;
  const auto N = static_cast<std::size_t>(mn * m);
  // Second coordinate j in (nZ)/(mn) is stored as j/n in {0,...,m-1}.
  auto idx = [&](std::int64_t i, std::int64_t q) { return static_cast<point_t>(i * m + q); };
  Table t(N, std::vector<point_t>(N));
  for (std::int64_t i = 0; i < mn; ++i)
    for (std::int64_t q = 0; q < m; ++q)
      for (std::int64_t k = 0; k < mn; ++k)
        for (std::int64_t lq = 0; lq < m; ++lq) {
          std::int64_t a = reduce(k + q, mn);
          std::int64_t b = a == i ? reduce(lq + 1, m) : lq;
          t[idx(i, q)][idx(k, lq)] = idx(a, b);
        }
  return t;
}

Solution rectangular_solution(std::int64_t m, std::int64_t n) {
  Table t = rectangular_table(m, n);
  std::vector<std::string> labels(t.size());
  for (std::int64_t i = 0; i < m * n; ++i)
    for (std::int64_t q = 0; q < m; ++q) labels[static_cast<std::size_t>(i * m + q)] = pair_label(i, q * n);
  // Throws AxiomError with a braid witness: the displayed shift k + j/n is
  // not additive in j, so the table is not a solution for any m, n >= 2.
  Solution s = Solution::from_table(t, std::move(labels));
  auto ct = cycle_type(s.sigma(static_cast<point_t>(m + 1)));
  if (ct.size() != 1 || ct[0] != t.size())
    throw std::logic_error("rectangular_solution: sigma_(1,n) is not a single full cycle");
  return s;
}

Table block_shape_table(const BlockFormData& data) {
  const auto ny = static_cast<point_t>(data.y_size);
  const auto nz = static_cast<point_t>(data.z_size);
  if (ny < 2 || nz < 2) throw FormatError("block form: both factors need at least two points");
  if (data.sigma.size() != nz) throw FormatError("block form: need one sigma_j per j in Z");
  if (data.d.size() != static_cast<std::size_t>(ny) * ny) throw FormatError("block form: need d_{i,k} for all i, k in Y");
  for (const auto& p : data.sigma)
    if (p.degree() != ny) throw FormatError("block form: sigma_j must act on Y");
  for (const auto& p : data.d)
    if (p.degree() != nz) throw FormatError("block form: d_{i,k} must act on Z");
  const point_t N = ny * nz;
  Table t(N, std::vector<point_t>(N));
  for (point_t i = 0; i < ny; ++i)
    for (point_t j = 0; j < nz; ++j)
      for (point_t k = 0; k < ny; ++k)
        for (point_t l = 0; l < nz; ++l) {
          point_t a = data.sigma[j][k];
          t[i * nz + j][k * nz + l] = a * nz + data.D(i, a)[l];
        }
  return t;
}

BlockFormResult block_form(const BlockFormData& data) {
  Table t = block_shape_table(data);
  const auto ny = static_cast<point_t>(data.y_size);
  const auto nz = static_cast<point_t>(data.z_size);
  BlockFormResult res;
  auto fail = [&](std::string cond, std::vector<point_t> w) {
    res.violations.push_back({std::move(cond), std::move(w)});
  };
  if (!is_transitive(data.sigma, ny)) fail("F transitive", {});
  if (!is_transitive(data.d, nz)) fail("W transitive", {});

  std::vector<Perm> sinv, dinv;
  for (const auto& p : data.sigma) sinv.push_back(p.inverse());
  for (const auto& p : data.d) dinv.push_back(p.inverse());
  auto Dinv = [&](point_t i, point_t k) -> const Perm& { return dinv[i * ny + k]; };

  // 1: second coordinate of r as displayed equals gamma from the table.
  std::vector<std::vector<point_t>> tinv(t.size(), std::vector<point_t>(t.size()));
  for (point_t x = 0; x < t.size(); ++x)
    for (point_t y = 0; y < t.size(); ++y) tinv[x][t[x][y]] = y;
  [&] {
    for (point_t i = 0; i < ny; ++i)
      for (point_t j = 0; j < nz; ++j)
        for (point_t k = 0; k < ny; ++k)
          for (point_t l = 0; l < nz; ++l) {
            point_t a = data.sigma[j][k];
            point_t b = data.D(i, a)[l];
            point_t u = a * nz + b;
            point_t want = sinv[b][i] * nz + Dinv(a, i)[j];
            point_t x = i * nz + j;
            if (tinv[u][x] != want) return fail("1", {i, j, k, l});
          }
  }();
  // 2: sigma_j sigma_{d^-1_{i,k}(l)} = sigma_l sigma_{d^-1_{k,i}(j)}
  [&] {
    for (point_t i = 0; i < ny; ++i)
      for (point_t k = 0; k < ny; ++k)
        for (point_t j = 0; j < nz; ++j)
          for (point_t l = 0; l < nz; ++l) {
            const Perm& a = data.sigma[Dinv(i, k)[l]];
            const Perm& b = data.sigma[Dinv(k, i)[j]];
            for (point_t u = 0; u < ny; ++u)
              if (data.sigma[j][a[u]] != data.sigma[l][b[u]]) return fail("2", {i, k, j, l});
          }
  }();
  // 3: d_{i,k} = d_{k,i}
  [&] {
    for (point_t i = 0; i < ny; ++i)
      for (point_t k = i + 1; k < ny; ++k)
        if (data.D(i, k) != data.D(k, i)) return fail("3", {i, k});
  }();
  // 4: d_{i,w} d_{sigma_j^-1(k), sigma_j^-1(w)} = d_{k,w} d_{sigma_l^-1(i), sigma_l^-1(w)}
  [&] {
    for (point_t i = 0; i < ny; ++i)
      for (point_t k = 0; k < ny; ++k)
        for (point_t w = 0; w < ny; ++w)
          for (point_t j = 0; j < nz; ++j)
            for (point_t l = 0; l < nz; ++l) {
              const Perm& a = data.D(sinv[j][k], sinv[j][w]);
              const Perm& b = data.D(sinv[l][i], sinv[l][w]);
              const Perm& c = data.D(i, w);
              const Perm& e = data.D(k, w);
              for (point_t v = 0; v < nz; ++v)
                if (c[a[v]] != e[b[v]]) return fail("4", {i, k, w, j, l});
            }
  }();
  // (i): sigma_j pairwise distinct
  [&] {
    for (point_t j = 0; j < nz; ++j)
      for (point_t l = j + 1; l < nz; ++l)
        if (data.sigma[j] == data.sigma[l]) return fail("(i)", {j, l});
  }();
  // (ii): the rows k -> d_{i,k} pairwise distinct
  [&] {
    for (point_t i = 0; i < ny; ++i)
      for (point_t i2 = i + 1; i2 < ny; ++i2) {
        bool same = true;
        for (point_t k = 0; k < ny && same; ++k) same = data.D(i, k) == data.D(i2, k);
        if (same) return fail("(ii)", {i, i2});
      }
  }();
  if (!res.violations.empty()) return res;
  std::vector<std::string> labels;
  for (point_t i = 0; i < ny; ++i)
    for (point_t j = 0; j < nz; ++j) labels.push_back(pair_label(i, j));
  res.solution = Solution::from_table(t, std::move(labels));
  return res;
}

BlockFormData square_block_data(const SquareParams& p) {
  const std::int64_t n = p.n;
  check_j_shape(n, p.j);
  BlockFormData d;
  d.y_size = d.z_size = static_cast<std::size_t>(n);
  for (std::int64_t j = 0; j < n; ++j) {
    std::vector<point_t> img(n);
    for (std::int64_t k = 0; k < n; ++k) img[k] = static_cast<point_t>(reduce(p.t * k + j, n));
    d.sigma.emplace_back(std::move(img));
  }
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t k = 0; k < n; ++k) {
      std::vector<point_t> img(n);
      std::int64_t shift = p.j[reduce(k - i, n)];
      for (std::int64_t l = 0; l < n; ++l) img[l] = static_cast<point_t>(reduce(p.t * (l - shift), n));
      d.d.emplace_back(std::move(img));
    }
  return d;
}

BlockFormData p7_remark_block_data() {
  const std::int64_t p = 7;
  BlockFormData d;
  d.y_size = d.z_size = p;
  for (std::int64_t j = 0; j < p; ++j) {
    std::vector<point_t> img(p);
    for (std::int64_t l = 0; l < p; ++l) img[l] = static_cast<point_t>(reduce(2 * l + j, p));
    d.sigma.emplace_back(std::move(img));
  }
  // d_{a,0}(l) = 2(l - a) for a in {1,2,4}, d_{0,0}(l) = 2l.
  std::vector<std::optional<Perm>> table(p * p);
  for (std::int64_t a : {0, 1, 2, 4}) {
    std::vector<point_t> img(p);
    for (std::int64_t l = 0; l < p; ++l) img[l] = static_cast<point_t>(reduce(2 * (l - a), p));
    Perm da(std::move(img));
    for (std::int64_t k = 0; k < p; ++k) {
      for (auto [i, kk] : {std::pair{reduce(k + a, p), k}, std::pair{k, reduce(k + a, p)}}) {
        auto& slot = table[i * p + kk];
        if (slot && *slot != da) throw std::logic_error("p7 data: orbit extension is inconsistent");
        slot = da;
      }
    }
  }
  for (auto& slot : table) {
    if (!slot) throw std::logic_error("p7 data: orbit extension leaves an entry undefined");
    d.d.push_back(*slot);
  }
  return d;
}

std::vector<std::int64_t> j_from_block_data(const BlockFormData& data, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(data.y_size);
  std::int64_t tinv = 0;
  for (std::int64_t u = 1; u < n; ++u)
    if (reduce(u * t, n) == 1) tinv = u;
  if (!tinv) throw std::invalid_argument("t is not a unit");
  std::vector<std::int64_t> j(n);
  for (std::int64_t i = 0; i < n; ++i)
    j[reduce(-i, n)] = reduce(-tinv * data.D(static_cast<point_t>(i), 0)[0], n);
  return j;
}

}  // namespace ybe
