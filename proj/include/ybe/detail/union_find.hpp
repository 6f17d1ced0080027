#ifndef YBE_DETAIL_UNION_FIND_HPP
#define YBE_DETAIL_UNION_FIND_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace ybe::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if already joined. The smaller root wins so that the
  // representative of a class is always its least member.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  // Class indices numbered by first appearance scanning 0..n-1.
  std::vector<std::uint32_t> class_map() {
    const std::size_t n = parent_.size();
    std::vector<std::uint32_t> idx(n, UINT32_MAX), out(n);
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto r = find(static_cast<std::uint32_t>(x));
      if (idx[r] == UINT32_MAX) idx[r] = next++;
      out[x] = idx[r];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Renumber an arbitrary class map so classes appear in order of least member.
inline std::vector<std::uint32_t> normalize_classes(const std::vector<std::uint32_t>& c) {
  std::vector<std::uint32_t> out(c.size());
  std::vector<std::uint32_t> remap;
  std::vector<std::uint32_t> seen;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (c[x] >= remap.size()) remap.resize(c[x] + 1, UINT32_MAX);
    if (remap[c[x]] == UINT32_MAX) remap[c[x]] = static_cast<std::uint32_t>(seen.size()), seen.push_back(c[x]);
    out[x] = remap[c[x]];
  }
  return out;
}

}  // namespace ybe::detail

#endif
