#ifndef YBE_CANONICAL_HPP
#define YBE_CANONICAL_HPP

#include <optional>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// sigma'_{pi(x)} = pi sigma_x pi^-1; labels follow their points.
Solution relabel(const Solution& s, const Perm& pi);

// A bijection f with f(sigma_x(y)) = sigma'_{f(x)}(f(y)) for all x, y.
using IsoWitness = std::vector<point_t>;
bool is_isomorphism(const Solution& a, const Solution& b, const std::vector<point_t>& f);
std::optional<IsoWitness> find_isomorphism(const Solution& a, const Solution& b);

struct CanonicalLabeling {
  Table form;
  std::vector<point_t> labeling;  // point x of s becomes labeling[x]
};
// Lexicographic minimum of the relabeled tables over all labelings that
// respect an isomorphism-invariant refinement of the points, explored by
// individualization and refinement with automorphism pruning.
CanonicalLabeling canonical_labeling(const Solution& s);
Table canonical_form(const Solution& s);

}  // namespace ybe

#endif
