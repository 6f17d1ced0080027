#include "ybe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ybe/detail/union_find.hpp"
#include "ybe/error.hpp"

namespace ybe {

Perm::Perm(std::size_t degree) : image_(degree) {
  for (std::size_t i = 0; i < degree; ++i) image_[i] = static_cast<point_t>(i);
}

Perm::Perm(std::vector<point_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (point_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw std::invalid_argument("Perm: image is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<point_t>>& cycles) {
  std::vector<point_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<point_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree) throw std::invalid_argument("Perm: cycle point out of range");
      if (used[c[k]]) throw std::invalid_argument("Perm: cycles are not disjoint");
      used[c[k]] = true;
      img[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<point_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw FormatError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("expected '(' in permutation text");
    ++i;
    std::vector<point_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw FormatError("expected a label in permutation text");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree) throw FormatError("label out of range in permutation text");
      cyc.push_back(static_cast<point_t>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i == text.size()) throw FormatError("unterminated cycle in permutation text");
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Perm Perm::inverse() const {
  std::vector<point_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<point_t>(i);
  Perm p;
  p.image_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<std::vector<point_t>> Perm::cycles() const {
  std::vector<std::vector<point_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (seen[s] || image_[s] == s) continue;
    std::vector<point_t> c;
    for (point_t x = static_cast<point_t>(s); !seen[x]; x = image_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k] + 1;
    os << ')';
  }
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<point_t> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p[q[static_cast<point_t>(i)]];
  return Perm(std::move(img));
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (point_t x = static_cast<point_t>(s); !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (point_t v : p.image()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::closure(std::vector<Perm> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators and no degree");
  std::size_t deg = gens.front().degree();
  return closure(std::move(gens), deg, cap);
}

PermGroup PermGroup::closure(std::vector<Perm> gens, std::size_t degree, std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("closure: degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = std::move(gens);
  G.elements_.push_back(Perm(degree));
  G.parent_.push_back(0);
  G.via_.push_back(0);
  G.index_.emplace(G.elements_.front(), 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (std::size_t s = 0; s < G.gens_.size(); ++s) {
      Perm h = compose(G.elements_[head], G.gens_[s]);
      if (G.index_.count(h)) continue;
      if (G.elements_.size() >= cap)
        throw CapExceeded("group too large: order exceeds cap " + std::to_string(cap));
      G.index_.emplace(h, G.elements_.size());
      G.elements_.push_back(std::move(h));
      G.parent_.push_back(head);
      G.via_.push_back(s);
    }
  }
  return G;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = a + 1; b < gens_.size(); ++b)
      if (compose(gens_[a], gens_[b]) != compose(gens_[b], gens_[a])) return false;
  return true;
}

static void check_degrees(std::span<const Perm> gens, std::size_t degree) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("degree mismatch");
}

Partition classes_from_map(const std::vector<point_t>& class_of) {
  Partition out;
  for (std::size_t x = 0; x < class_of.size(); ++x) {
    if (class_of[x] >= out.size()) out.resize(class_of[x] + 1);
    out[class_of[x]].push_back(static_cast<point_t>(x));
  }
  return out;
}

Partition orbits(std::span<const Perm> gens, std::size_t degree) {
  check_degrees(gens, degree);
  detail::UnionFind uf(degree);
  for (const auto& g : gens)
    for (std::size_t x = 0; x < degree; ++x) uf.unite(static_cast<point_t>(x), g[static_cast<point_t>(x)]);
  return classes_from_map(uf.class_map());
}

bool is_transitive(std::span<const Perm> gens, std::size_t degree) {
  return orbits(gens, degree).size() <= 1;
}

std::vector<point_t> minimal_block_classes(std::span<const Perm> gens, std::size_t degree,
                                           point_t a, point_t b) {
  check_degrees(gens, degree);
  detail::UnionFind uf(degree);
  std::deque<std::pair<point_t, point_t>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      point_t gx = g[x], gy = g[y];
      if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
    }
  }
  return uf.class_map();
}

static std::vector<point_t> join_maps(const std::vector<point_t>& c1,
                                      const std::vector<point_t>& c2) {
  const std::size_t n = c1.size();
  detail::UnionFind uf(n);
  std::vector<point_t> first1(n, UINT32_MAX), first2(n, UINT32_MAX);
  for (point_t x = 0; x < n; ++x) {
    if (first1[c1[x]] == UINT32_MAX) first1[c1[x]] = x; else uf.unite(first1[c1[x]], x);
    if (first2[c2[x]] == UINT32_MAX) first2[c2[x]] = x; else uf.unite(first2[c2[x]], x);
  }
  return uf.class_map();
}

std::vector<Partition> block_systems(std::span<const Perm> gens, std::size_t degree) {
  if (!is_transitive(gens, degree))
    throw std::invalid_argument("block_systems: group is not transitive");
  std::set<std::vector<point_t>> found;
  std::vector<std::vector<point_t>> work;
  auto nontrivial = [&](const std::vector<point_t>& c) {
    point_t k = 0;
    for (point_t v : c) k = std::max(k, v + 1);
    return k > 1 && k < degree;
  };
  for (point_t b = 1; b < degree; ++b) {
    auto c = minimal_block_classes(gens, degree, 0, b);
    if (nontrivial(c) && found.insert(c).second) work.push_back(c);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto c = join_maps(work[i], work[j]);
      if (nontrivial(c) && found.insert(c).second) work.push_back(c);
    }
  }
  std::vector<std::vector<point_t>> maps(found.begin(), found.end());
  auto block_size = [&](const std::vector<point_t>& c) {
    return std::count(c.begin(), c.end(), c[0]);
  };
  std::stable_sort(maps.begin(), maps.end(), [&](const auto& x, const auto& y) {
    return block_size(x) < block_size(y);
  });
  std::vector<Partition> out;
  for (const auto& m : maps) out.push_back(classes_from_map(m));
  return out;
}

}  // namespace ybe
