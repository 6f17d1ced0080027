#ifndef YBE_BRACE_HPP
#define YBE_BRACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using elem_t = std::uint32_t;
using OpTable = std::vector<std::vector<elem_t>>;
// Sorted element list.
using ElementSet = std::vector<elem_t>;

class LeftBrace {
 public:
  std::size_t order() const { return add_.size(); }
  elem_t zero() const { return zero_; }
  elem_t add(elem_t a, elem_t b) const { return add_[a][b]; }
  elem_t mul(elem_t a, elem_t b) const { return mul_[a][b]; }
  elem_t neg(elem_t a) const { return neg_[a]; }
  elem_t inv(elem_t a) const { return inv_[a]; }
  // lambda_a(b) = -a + a o b
  elem_t lambda(elem_t a, elem_t b) const { return add_[neg_[a]][mul_[a][b]]; }
  // a * b = lambda_a(b) - b
  elem_t star(elem_t a, elem_t b) const { return add_[lambda(a, b)][neg_[b]]; }
  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }

 private:
  friend struct BraceBuilder;
  OpTable add_, mul_;
  std::vector<elem_t> neg_, inv_;
  elem_t zero_ = 0;
};

struct BraceCheck {
  std::optional<LeftBrace> brace;
  std::string violation;        // empty when accepted
  std::vector<elem_t> witness;  // first failing tuple
  bool ok() const { return brace.has_value(); }
};

// Abelian group, group, shared identity and the brace law on all triples.
// Throws FormatError for ragged or out-of-range tables.
BraceCheck validate_brace(const OpTable& add, const OpTable& mul);
// validate_brace, throwing AxiomError on a violation.
LeftBrace make_brace(const OpTable& add, const OpTable& mul);
// mul = add.
LeftBrace trivial_brace(const OpTable& add);
LeftBrace cyclic_trivial_brace(std::size_t n);

inline elem_t lambda(const LeftBrace& b, elem_t x, elem_t y) { return b.lambda(x, y); }

ElementSet socle(const LeftBrace& b);
ElementSet star_ideal(const LeftBrace& b);
// Smallest additive subgroup containing gens.
ElementSet additive_span(const LeftBrace& b, const std::vector<elem_t>& gens);
// Smallest ideal containing gens.
ElementSet ideal_closure(const LeftBrace& b, const std::vector<elem_t>& gens);
// Names the first failed ideal property, or nullopt for an ideal.
std::optional<std::string> ideal_violation(const LeftBrace& b, const ElementSet& s);
inline bool is_ideal(const LeftBrace& b, const ElementSet& s) { return !ideal_violation(b, s); }
bool is_trivial_brace(const LeftBrace& b);
bool is_cyclic_additive(const LeftBrace& b);

struct BraceQuotient {
  LeftBrace brace;
  std::vector<elem_t> coset_of;
};
BraceQuotient quotient_brace(const LeftBrace& b, const ElementSet& ideal);

// sigma_a = lambda_a.
Solution associated_solution(const LeftBrace& b);

// (Z/(n))^n x Z/(n) with (u,i) o (v,j) = (u + alpha(i)v, i + j) and
// (u,i) + (v,j) = (u + v, i + j + b(u,v)), b given by the circulant
// matrix M[r][c] = j_{c-r}. Elements are encoded as code(u) * n + i with
// code(u) = sum u_k n^k.
class AsymmetricForm {
 public:
  AsymmetricForm(std::int64_t n, std::vector<std::int64_t> j);

  std::int64_t n() const { return n_; }
  const std::vector<std::int64_t>& j() const { return j_; }
  std::size_t order() const { return order_; }
  std::int64_t bilinear(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const;
  std::int64_t determinant() const;  // of M, in Z/(n)
  bool nonsingular() const;
  // The n rows of M are pairwise distinct.
  bool rows_distinct() const;
  bool j_generates() const;

  struct Elem {
    std::vector<std::int64_t> u;
    std::int64_t i;
  };
  Elem decode(elem_t e) const;
  elem_t encode(const Elem& e) const;
  elem_t add(elem_t a, elem_t b) const;
  elem_t mul(elem_t a, elem_t b) const;
  elem_t lambda(elem_t a, elem_t b) const;
  // x_{ij} = (e_i, j)
  elem_t x_point(std::int64_t i, std::int64_t j) const;
  // Socle by definition, testing lambda on the additive generators
  // (e_k, 0) and (0, 1).
  ElementSet socle() const;
  // The solution on {x_ij}, point (i,j) encoded as i*n + j.
  Solution restricted_solution() const;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> j_;
  std::size_t order_;
};

struct AsymmetricProduct {
  AsymmetricForm form;
  LeftBrace brace;
  std::vector<elem_t> x_points;  // x_{ij} at index i*n + j
  std::int64_t determinant = 0;
  bool nonsingular = false;
};
// Expands the full tables and validates the brace. Rejects asymmetric j.
AsymmetricProduct asymmetric_product(std::int64_t n, const std::vector<std::int64_t>& j);
bool is_symmetric_j(const std::vector<std::int64_t>& j);
// All symmetric j-vectors for Z/(n), lexicographic.
std::vector<std::vector<std::int64_t>> symmetric_j_vectors(std::int64_t n);

struct PermutationBrace {
  PermGroup group;
  LeftBrace brace;
  std::vector<elem_t> sigma_element;  // element index of sigma_x
};
inline constexpr std::size_t kDefaultBraceCap = 4096;
PermutationBrace permutation_brace(const Solution& s, std::size_t cap = kDefaultBraceCap);

std::optional<std::vector<elem_t>> find_brace_isomorphism(const LeftBrace& a, const LeftBrace& b);
bool is_brace_isomorphism(const LeftBrace& a, const LeftBrace& b, const std::vector<elem_t>& f);

bool socle_quotient_check(const LeftBrace& b);

// A unit u with u a_i = c_{u i} for all i. When found, the solution map
// x_ij -> x_{ui,uj} is checked to be an isomorphism; when none exists and
// both forms are non-singular the solutions are checked non-isomorphic.
std::optional<std::int64_t> asym_solution_iso(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& c);

struct OrbitSolution {
  ElementSet subbrace;      // B(x)
  std::vector<elem_t> points;  // X = {lambda_a(x)}, sorted
  Solution solution;
};
OrbitSolution orbit_solution(const LeftBrace& b, elem_t x);

}  // namespace ybe

#endif
