#ifndef YBE_PERM_HPP
#define YBE_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ybe {

using point_t = std::uint32_t;

// A bijection of {0,...,n-1}; image()[i] is where i goes.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity
  explicit Perm(std::vector<point_t> image);

  // 0-based cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<point_t>>& cycles);
  // 1-based disjoint-cycle text such as "(1,2,4,3)(5,6)" or "()".
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  point_t operator[](point_t i) const { return image_[i]; }
  point_t operator()(point_t i) const { return image_[i]; }
  const std::vector<point_t>& image() const { return image_; }

  Perm inverse() const;
  bool is_identity() const;
  // Nontrivial cycles, each starting at its least point, ordered by start.
  std::vector<std::vector<point_t>> cycles() const;
  // 1-based cycle notation; identity is "()".
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<point_t> image_;
};

// (p * q)(i) = p(q(i)): q is applied first.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// Sorted cycle lengths including fixed points.
std::vector<std::size_t> cycle_type(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

using Partition = std::vector<std::vector<point_t>>;

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

// A finite permutation group held as its full element list.
class PermGroup {
 public:
  // Breadth-first closure from the identity, multiplying on the right by
  // the generators in the given order. Throws CapExceeded past `cap`.
  static PermGroup closure(std::vector<Perm> gens, std::size_t degree,
                           std::size_t cap = kDefaultGroupCap);
  static PermGroup closure(std::vector<Perm> gens,
                           std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  // BFS provenance: element(i) = element(parent(i)) * generators()[via(i)].
  // The identity is element 0 and its own parent.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t via(std::size_t i) const { return via_[i]; }

  bool is_abelian() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

// Orbits of the generated group, each sorted, ordered by least point.
Partition orbits(std::span<const Perm> gens, std::size_t degree);
bool is_transitive(std::span<const Perm> gens, std::size_t degree);

// Finest block system containing {a, b} in one block, as a class map.
std::vector<point_t> minimal_block_classes(std::span<const Perm> gens,
                                           std::size_t degree, point_t a,
                                           point_t b);

// All nontrivial block systems of a transitive group. Blocks are sorted
// and ordered by least point; systems are ordered by block size, then
// lexicographically. Throws std::invalid_argument if intransitive.
std::vector<Partition> block_systems(std::span<const Perm> gens,
                                     std::size_t degree);

// Class map -> partition with classes ordered by least point.
Partition classes_from_map(const std::vector<point_t>& class_of);

}  // namespace ybe

#endif
