#ifndef YBE_QUOTIENTS_HPP
#define YBE_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// A partition of the points given as a class map. Classes are numbered
// in order of their least member.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<point_t> class_of);  // renumbers
  static Congruence discrete(std::size_t n);
  static Congruence full(std::size_t n);
  static Congruence from_classes(std::size_t n, const Partition& classes);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  const std::vector<point_t>& class_of() const { return class_of_; }
  point_t operator[](point_t x) const { return class_of_[x]; }
  Partition classes() const { return classes_from_map(class_of_); }
  bool is_discrete() const { return num_classes_ == class_of_.size(); }
  bool is_full() const { return num_classes_ == 1; }
  // True if every class of *this lies inside a class of other.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  std::vector<point_t> class_of_;
  std::size_t num_classes_ = 0;
};

Congruence join(const Congruence& a, const Congruence& b);

// First (x, x', y, y') with x ~ x', y ~ y' but sigma_x(y) !~ sigma_x'(y'),
// where x and y are the least members of their classes.
std::optional<std::vector<point_t>> congruence_violation(const Solution& s,
                                                         const std::vector<point_t>& class_of);
bool is_congruence(const Solution& s, const std::vector<point_t>& class_of);

Congruence principal_congruence(const Solution& s, point_t a, point_t b);

inline constexpr std::size_t kDefaultLatticeCap = 64;
// Every congruence, ordered by num_classes descending then class map.
std::vector<Congruence> all_congruences(const Solution& s,
                                        std::size_t cap = kDefaultLatticeCap);

struct Quotient {
  Solution solution;
  std::vector<point_t> class_map;
};
// Throws AxiomError with the congruence_violation witness if c is not a
// congruence of s.
Quotient quotient(const Solution& s, const Congruence& c);

struct SimplicityVerdict {
  bool simple = false;
  std::optional<Congruence> witness;  // proper nontrivial congruence
};
SimplicityVerdict is_simple(const Solution& s);

unsigned composition_length(const Solution& s);
std::optional<unsigned> primitive_level(const Solution& s);

// alpha[(i * |Y| + j) * |S| + r] is the permutation t -> alpha_{(i,j)}(r, t).
struct DynamicalCocycle {
  Table y_dot;
  std::size_t s_size = 0;
  std::vector<Perm> alpha;

  const Perm& at(point_t i, point_t j, point_t r) const {
    return alpha[(static_cast<std::size_t>(i) * y_dot.size() + j) * s_size + r];
  }
};

struct Extension {
  Solution solution;
  std::vector<point_t> projection;  // (r, i) -> i
};

// First (i, j, k, r, s, t) violating the cocycle identity.
std::optional<std::vector<point_t>> cocycle_violation(const DynamicalCocycle& a);
// Points of S x Y are encoded as r * |Y| + i.
Extension dynamical_extension(const DynamicalCocycle& a);

struct ExtractedCocycle {
  DynamicalCocycle cocycle;
  // Maps each point of s to the corresponding point of the extension.
  std::vector<point_t> embedding;
};
// Reads s as an extension of s / c. All classes of c must have one size.
ExtractedCocycle extract_cocycle(const Solution& s, const Congruence& c);

struct Covering {
  PermGroup group;            // points of the covering are group elements
  Solution solution;
  std::vector<point_t> projection;  // g -> g^-1(x)
};
Covering covering_solution(const Solution& s, point_t x, std::size_t cap = kDefaultGroupCap);
PermGroup fundamental_group(const Solution& s, point_t x, std::size_t cap = kDefaultGroupCap);

}  // namespace ybe

#endif
