#include <array>
#include <string>

#include "ybe/error.hpp"
#include "ybe/families.hpp"

namespace ybe {

namespace {

struct CycleFixture {
  const char* name;
  std::size_t n;
  std::array<const char*, 9> sigma;
};

// Cycle tables with the original 1-based labels.
const CycleFixture kCycleFixtures[] = {
    {"examp1", 4, {"(2,3)", "(1,4)", "(1,2,4,3)", "(1,3,4,2)"}},
    {"examp2", 4, {"(1,2)", "(3,1,4,2)", "(2,4,1,3)", "(3,4)"}},
    {"nine_r1",
     9,
     {"(1,6,7,9,2,5,4,8,3)", "(1,2,5,9,8,3,4,6,7)", "(1,6,5,9,2,3,4,8,7)", "(1,5,8,9,3,6,4,7,2)",
      "(1,3,6,9,7,2,4,5,8)", "(1,5,6,9,3,2,4,7,8)", "(1,4,9)(2,6,8)", "(1,4,9)(3,5,7)",
      "(2,6,8)(3,5,7)"}},
    {"nine_r2",
     9,
     {"(1,6,3)", "(1,2,7,6,8,4,3,9,5)", "(1,5,9,6,7,2,3,4,8)", "(1,7,2,6,4,8,3,5,9)", "(4,5,7)",
      "(1,9,5,6,2,7,3,8,4)", "(1,9,7,6,2,4,3,8,5)", "(1,5,2,6,7,8,3,4,9)", "(2,8,9)"}},
    {"nine_r3",
     9,
     {"(1,6,3)(2,9,8)(4,7,5)", "(1,2,5,3,9,4,6,8,7)", "(1,4,2,3,7,9,6,5,8)", "(1,7,9,3,5,8,6,4,2)",
      "(1,3,6)(2,9,8)(4,5,7)", "(1,8,7,3,2,5,6,9,4)", "(1,8,5,3,2,4,6,9,7)", "(1,4,9,3,7,8,6,5,2)",
      "(1,3,6)(2,8,9)(4,7,5)"}},
};

// sigma_{(i,j)}(k,l) = (k + j, l - 3 + 2 delta_{k+j-i,0}) on (Z/(6))^2.
Solution exnonsimple() {
  const point_t n = 6;
  Table t(n * n, std::vector<point_t>(n * n));
  std::vector<std::string> labels(n * n);
  for (point_t i = 0; i < n; ++i)
    for (point_t j = 0; j < n; ++j) {
      labels[i * n + j] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (point_t k = 0; k < n; ++k)
        for (point_t l = 0; l < n; ++l) {
          point_t a = (k + j) % n;
          point_t b = (l + n - 3 + (a == i ? 2 : 0)) % n;
          t[i * n + j][k * n + l] = a * n + b;
        }
    }
  return Solution::from_table(t, std::move(labels));
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kCycleFixtures) out.emplace_back(f.name);
  out.emplace_back("exnonsimple");
  return out;
}

Solution fixture(std::string_view name) {
  for (const auto& f : kCycleFixtures) {
    if (name != f.name) continue;
    std::vector<Perm> sigma;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < f.n; ++x) {
      sigma.push_back(Perm::parse(f.sigma[x], f.n));
      labels.push_back(std::to_string(x + 1));
    }
    return Solution::from_perms(std::move(sigma), std::move(labels));
  }
  if (name == "exnonsimple") return exnonsimple();
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

}  // namespace ybe
