#ifndef YBE_FAMILIES_HPP
#define YBE_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Every sigma_x equal to p.
Solution permutation_solution(const Perm& p);

struct SquareParams {
  std::int64_t n = 2;
  std::int64_t t = 1;
  std::vector<std::int64_t> j;  // j[i] = j_i in Z/(n)
  friend bool operator==(const SquareParams&, const SquareParams&) = default;
};

// Which hypotheses hold for a parameter record. "unit shift": each
// nonzero i has some k with j_{i+k} - j_k a unit; "distinct shift": the
// same with j_{i+k} != j_k.
struct SquareHypotheses {
  bool t_unit = false;
  bool symmetric = false;
  bool orbit = false;
  bool unit_shift = false;
  bool distinct_shift = false;
  bool generates = false;     // the j_i generate Z/(n)
  bool cond_i = false;        // j_0 - j_i a unit for every i != 0
  bool cond_ii = false;       // j_i - j_k a unit whenever j_i != j_k
  bool non_constant = false;
  bool n_prime = false;
};
SquareHypotheses check_square_hypotheses(const SquareParams& p);

struct SquareClaims {
  SquareHypotheses hypotheses;
  bool indecomposable_irretractable = false;
  bool simple_guaranteed = false;
  std::vector<std::string> reasons;
};

struct SquareResult {
  Solution solution;
  SquareClaims claims;
};

// sigma_{(i,j)}(k,l) = (tk + j, t(l - j_{tk+j-i})) on (Z/(n))^2, point
// (i,j) encoded as i*n + j. Throws HypothesisError unless the parameters
// give an indecomposable irretractable solution by one of the two
// criteria (general t with unit shifts, or t = 1 with distinct shifts and
// generating j).
SquareResult square_solution(const SquareParams& p);
// Same table without any hypothesis check; used by searches.
Solution square_formula(const SquareParams& p);

// Prime p; t of odd multiplicative order; symmetric j satisfying the orbit
// condition and not constant. The result is simple.
Solution p2_solution(std::int64_t p, std::int64_t t, const std::vector<std::int64_t>& j);

// X = Z/(mn) x (nZ)/(mn); point (i, j) encoded as i*m + j/n.
// rectangular_table is the raw sigma table of the displayed formula;
// rectangular_solution validates it and throws AxiomError when it is not
// a solution (which happens for every m, n tried).
Table rectangular_table(std::int64_t m, std::int64_t n);
Solution rectangular_solution(std::int64_t m, std::int64_t n);

struct BlockFormData {
  std::size_t y_size = 0;
  std::size_t z_size = 0;
  std::vector<Perm> sigma;  // sigma[j] acts on Y, j in Z
  std::vector<Perm> d;      // d[i * y_size + k] acts on Z

  const Perm& D(point_t i, point_t k) const { return d[static_cast<std::size_t>(i) * y_size + k]; }
};

struct BlockFormViolation {
  std::string condition;  // "F transitive", "W transitive", "1".."4", "(i)", "(ii)"
  std::vector<point_t> witness;
};

struct BlockFormResult {
  std::optional<Solution> solution;
  std::vector<BlockFormViolation> violations;
  bool accepted() const { return solution.has_value(); }
};

// sigma_{(i,j)}(k,l) = (sigma_j(k), d_{i,sigma_j(k)}(l)), points (i,j) ->
// i*|Z| + j. Throws FormatError on malformed tables.
Table block_shape_table(const BlockFormData& data);
BlockFormResult block_form(const BlockFormData& data);

// sigma_j(k) = tk + j and d_{i,k}(l) = t(l - j_{k-i}).
BlockFormData square_block_data(const SquareParams& p);
// The order-49 instance with t = 2, given by d on orbit representatives
// and extended along d_{k+a,k} = d_{k,k+a} = d_{a,0}.
BlockFormData p7_remark_block_data();
// Reads j back from d_{i,0}(0) = -t j_{-i} for block data of square shape.
std::vector<std::int64_t> j_from_block_data(const BlockFormData& data, std::int64_t t);

std::vector<std::string> fixture_names();
Solution fixture(std::string_view name);

}  // namespace ybe

#endif
