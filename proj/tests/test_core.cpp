#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ybe/canonical.hpp"
#include "ybe/error.hpp"
#include "ybe/families.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

Solution trivial(std::size_t n) { return permutation_solution(Perm(n)); }

Solution cycle_solution(std::size_t n) {
  std::vector<point_t> img(n);
  for (point_t i = 0; i < n; ++i) img[i] = static_cast<point_t>((i + 1) % n);
  return permutation_solution(Perm(img));
}

Table random_rows(std::size_t n, std::mt19937_64& rng) {
  Table t;
  for (std::size_t x = 0; x < n; ++x) t.push_back(oracle::random_perm(n, rng));
  return t;
}

}  // namespace

TEST_CASE("validate accepts the fixtures and the trivial solution") {
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    SolutionReport r = validate(s.table());
    CHECK_MESSAGE(r.ok(), name);
    CHECK(!r.failing_witness);
    if (s.size() <= 9) CHECK(oracle::is_solution(s.table()));
  }
  CHECK(validate(trivial(5).table()).ok());
}

TEST_CASE("validate rejects a braid failure with a witness") {
  // sigma_0 = (0 1), sigma_1 = id on two points.
  RawTable raw{{1, 0}, {0, 1}};
  SolutionReport r = validate(raw);
  CHECK(r.nondegenerate);
  CHECK(r.involutive);
  CHECK_FALSE(r.ybe);
  CHECK(r.failed_check == "ybe");
  REQUIRE(r.failing_witness);
  CHECK(r.failing_witness->size() == 3);
  CHECK_FALSE(oracle::braid({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(Solution::from_raw(raw), AxiomError);
}

TEST_CASE("format errors are distinct from axiom failures") {
  CHECK_THROWS_AS(validate(RawTable{{0, 1}, {0}}), FormatError);
  CHECK_THROWS_AS(validate(RawTable{{0, 2}, {0, 1}}), FormatError);
  CHECK_THROWS_AS(validate(RawTable{{0, -1}, {0, 1}}), FormatError);
  CHECK_THROWS_AS(validate(RawTable{}), FormatError);
  SolutionReport r = validate(RawTable{{0, 0}, {0, 1}});
  CHECK_FALSE(r.nondegenerate);
  CHECK(r.failed_check == "nondegenerate");
  CHECK(r.failing_witness == std::vector<point_t>{0});
}

TEST_CASE("both braid checkers agree with the oracle on random tables") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {3, 4, 5}) {
    int positives = 0;
    for (int rep = 0; rep < 10000; ++rep) {
      Table t = random_rows(n, rng);
      const bool want = oracle::braid(t);
      CHECK(braid_witness(t).has_value() == !want);
      CHECK(sigma_identity_witness(t).has_value() == !want);
      SolutionReport r = validate(t);
      CHECK(r.ok() == oracle::is_solution(t));
      positives += want;
    }
    MESSAGE("n=" << n << " random valid tables: " << positives);
  }
  // Relabelled fixtures are valid and stay so.
  for (int rep = 0; rep < 50; ++rep) {
    Solution s = fixture(rep % 2 ? "examp1" : "examp2");
    Table t = oracle::relabel(s.table(), oracle::random_perm(4, rng));
    CHECK(braid_witness(t) == std::nullopt);
    CHECK(sigma_identity_witness(t) == std::nullopt);
  }
}

TEST_CASE("gamma and r") {
  Solution t = trivial(4);
  for (point_t x = 0; x < 4; ++x)
    for (point_t y = 0; y < 4; ++y) {
      CHECK(gamma(t, y, x) == x);
      CHECK(apply_r(t, x, y) == std::pair<point_t, point_t>{y, x});
    }
  Solution e1 = fixture("examp1");
  // sigma_1 = (2,3), sigma_3 = (1,2,4,3); 0-based x=0, y=1.
  CHECK(e1.apply(0, 1) == 2);
  // gamma_2(1) = sigma^-1_3(1) = 3 in 1-based labels.
  CHECK(gamma(e1, 1, 0) == 2);
  CHECK(apply_r(e1, 0, 1) == std::pair<point_t, point_t>{2, 2});
  CHECK(apply_r(e1, 0, 0) == std::pair<point_t, point_t>{0, 0});
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    for (point_t x = 0; x < s.size(); ++x)
      for (point_t y = 0; y < s.size(); ++y) {
        auto [a, b] = apply_r(s, x, y);
        CHECK(apply_r(s, a, b) == std::pair<point_t, point_t>{x, y});
        CHECK(std::pair<point_t, point_t>{a, b} == oracle::r_map(s.table(), x, y));
      }
  }
  Perm c = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
  Solution ps = permutation_solution(c);
  for (point_t x = 0; x < 5; ++x)
    for (point_t y = 0; y < 5; ++y) CHECK(apply_r(ps, x, y) == std::pair<point_t, point_t>{c[y], c.inverse()[x]});
}

TEST_CASE("permutation groups") {
  CHECK(permutation_group(trivial(5)).order() == 1);
  CHECK(permutation_group(fixture("examp1")).order() == 8);
  CHECK(permutation_group(fixture("examp2")).order() == 8);
  for (const auto& name : {"examp1", "examp2", "nine_r1", "nine_r2", "nine_r3"}) {
    Solution s = fixture(name);
    std::vector<std::vector<point_t>> gens;
    for (const auto& p : s.sigmas()) gens.push_back(p.image());
    CHECK(permutation_group(s).order() == oracle::group(gens, s.size()).size());
  }
}

TEST_CASE("structural predicates") {
  CHECK_FALSE(is_indecomposable(trivial(3)));
  CHECK(is_indecomposable(fixture("examp1")));
  CHECK(is_indecomposable(cycle_solution(5)));
  CHECK(is_primitive(cycle_solution(5)));
  CHECK(is_primitive(cycle_solution(7)));
  CHECK_FALSE(is_primitive(fixture("examp1")));
  CHECK_FALSE(is_primitive(trivial(3)));
  CHECK(is_irretractable(fixture("examp2")));
  CHECK(is_irretractable(fixture("nine_r1")));
  CHECK_FALSE(is_irretractable(cycle_solution(4)));
  CHECK(is_square_free(trivial(3)));
  CHECK_FALSE(is_square_free(fixture("examp2")));
  CHECK_FALSE(is_square_free(fixture("examp1")));
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    const Table t = s.table();
    CHECK(is_indecomposable(s) == oracle::indecomposable(t));
    CHECK(is_irretractable(s) == oracle::irretractable(t));
    CHECK(is_square_free(s) == oracle::square_free(t));
    if (is_primitive(s)) CHECK(is_indecomposable(s));
  }
}

TEST_CASE("retract and multipermutation level") {
  Retraction r = retract(cycle_solution(4));
  CHECK(r.solution.size() == 1);
  Solution e1 = fixture("examp1");
  Retraction re = retract(e1);
  CHECK(re.solution == e1);
  CHECK(retract(trivial(4)).solution.size() == 1);
  CHECK(multipermutation_level(cycle_solution(5)) == 1u);
  CHECK(multipermutation_level(trivial(3)) == 1u);
  CHECK(multipermutation_level(e1) == std::nullopt);
  CHECK(multipermutation_level(trivial(1)) == 0u);
  // The class map is a homomorphism, checked directly.
  std::mt19937_64 rng(1);
  for (const auto& sol : oracle::all_solutions_up_to_iso(3)) {
    Solution s = Solution::from_table(sol);
    Retraction q = retract(s);
    for (point_t x = 0; x < s.size(); ++x)
      for (point_t y = 0; y < s.size(); ++y)
        CHECK(q.class_map[s.apply(x, y)] == q.solution.apply(q.class_map[x], q.class_map[y]));
    for (point_t x = 0; x < s.size(); ++x)
      for (point_t y = 0; y < s.size(); ++y)
        CHECK((q.class_map[x] == q.class_map[y]) == (s.sigma(x) == s.sigma(y)));
  }
}

TEST_CASE("cycle sets") {
  Table tt = to_cycle_set(trivial(3));
  for (point_t x = 0; x < 3; ++x) CHECK(tt[x] == std::vector<point_t>{0, 1, 2});
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    CHECK(from_cycle_set(to_cycle_set(s)) == s);
  }
  std::mt19937_64 rng(99);
  int rejected = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Table t = random_rows(4, rng);
    try {
      from_cycle_set(t);
    } catch (const AxiomError& e) {
      ++rejected;
      const auto& w = e.witness();
      if (w.size() == 3) {
        const point_t x = w[0], y = w[1], z = w[2];
        CHECK(t[t[x][y]][t[x][z]] != t[t[y][x]][t[y][z]]);
      } else {
        REQUIRE(w.size() == 2);
        CHECK(w[0] != w[1]);
        CHECK(t[w[0]][w[0]] == t[w[1]][w[1]]);
      }
    }
  }
  CHECK(rejected > 100);
}
