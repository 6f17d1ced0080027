#ifndef YBE_SOLUTION_HPP
#define YBE_SOLUTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

// Row x holds the images of sigma_x (or of the cycle-set translation x.-).
using Table = std::vector<std::vector<point_t>>;
// Unchecked input table, as read from a file.
using RawTable = std::vector<std::vector<std::int64_t>>;

struct SolutionReport {
  bool nondegenerate = false;
  bool involutive = false;
  bool ybe = false;
  // Name of the first failed check: "nondegenerate", "involutive" or "ybe".
  std::string failed_check;
  // Lexicographically first failing tuple of that check: (x) for a row
  // that is not a bijection, (x, y) for involutivity, (x, y, z) for the
  // braid relation.
  std::optional<std::vector<point_t>> failing_witness;

  bool ok() const { return nondegenerate && involutive && ybe; }
};

// Format checks only: n rows of n entries in [0, n). Throws FormatError.
Table check_table_format(const RawTable& raw);

// Runs every axiom check. The braid relation is evaluated twice, on all
// triples and through the sigma identity, and the two must agree.
SolutionReport validate(const RawTable& raw);
SolutionReport validate(const Table& table);

// Braid relation r12 r23 r12 = r23 r12 r23 evaluated on all triples, with
// gamma derived from sigma. Returns the first failing triple.
std::optional<std::vector<point_t>> braid_witness(const Table& sigma);
// sigma_x sigma_{sigma_x^-1(y)} = sigma_y sigma_{sigma_y^-1(x)}; returns the
// first failing (x, y, z) where z is the point on which both sides differ.
std::optional<std::vector<point_t>> sigma_identity_witness(const Table& sigma);

class Solution {
 public:
  // Validates; throws AxiomError (with witness) or FormatError.
  static Solution from_table(const Table& sigma, std::vector<std::string> labels = {});
  static Solution from_raw(const RawTable& sigma, std::vector<std::string> labels = {});
  static Solution from_perms(std::vector<Perm> sigma, std::vector<std::string> labels = {});

  std::size_t size() const { return sigma_.size(); }
  const Perm& sigma(point_t x) const { return sigma_[x]; }
  const Perm& sigma_inv(point_t x) const { return sigma_inv_[x]; }
  const std::vector<Perm>& sigmas() const { return sigma_; }
  point_t apply(point_t x, point_t y) const { return sigma_[x][y]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(point_t x) const;
  Table table() const;

  friend bool operator==(const Solution& a, const Solution& b) { return a.sigma_ == b.sigma_; }

 private:
  Solution() = default;
  std::vector<Perm> sigma_;
  std::vector<Perm> sigma_inv_;
  std::vector<std::string> labels_;
};

// gamma_y(x) = sigma^-1_{sigma_x(y)}(x)
point_t gamma(const Solution& s, point_t y, point_t x);
// r(x, y) = (sigma_x(y), gamma_y(x))
std::pair<point_t, point_t> apply_r(const Solution& s, point_t x, point_t y);

PermGroup permutation_group(const Solution& s, std::size_t cap = kDefaultGroupCap);

bool is_indecomposable(const Solution& s);
bool is_primitive(const Solution& s);
bool is_irretractable(const Solution& s);
bool is_square_free(const Solution& s);

struct Retraction {
  Solution solution;
  std::vector<point_t> class_map;
};
Retraction retract(const Solution& s);

// Least k with |Ret^k| = 1; 0 for a singleton; nullopt if the retraction
// chain stabilizes above size 1.
std::optional<unsigned> multipermutation_level(const Solution& s);

// x . y = sigma_x^-1(y)
Table to_cycle_set(const Solution& s);
// Checks the law (x.y).(x.z) = (y.x).(y.z) and bijectivity of x -> x.x.
// Throws AxiomError with witness (x, y, z) or (x, x') for a degenerate
// square map, FormatError on malformed input.
Solution from_cycle_set(const Table& dot);

}  // namespace ybe

#endif
