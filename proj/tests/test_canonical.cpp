#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ybe/canonical.hpp"
#include "ybe/census.hpp"
#include "ybe/families.hpp"

using namespace ybe;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) { return Perm(oracle::random_perm(n, rng)); }

}  // namespace

TEST_CASE("relabel conjugates sigma") {
  std::mt19937_64 rng(4);
  Solution s = fixture("nine_r2");
  Perm pi = random_perm(9, rng);
  Solution t = relabel(s, pi);
  CHECK(t.table() == oracle::relabel(s.table(), pi.image()));
  for (point_t x = 0; x < 9; ++x) CHECK(t.sigma(pi[x]) == pi * s.sigma(x) * pi.inverse());
  CHECK(is_isomorphism(s, t, pi.image()));
  CHECK(t.label(pi[0]) == s.label(0));
}

TEST_CASE("canonical form is invariant under random relabelling") {
  std::mt19937_64 rng(17);
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    CanonicalLabeling cl = canonical_labeling(s);
    CHECK(cl.form == oracle::relabel(s.table(), cl.labeling));
    for (int rep = 0; rep < 100; ++rep) {
      Solution t = relabel(s, random_perm(s.size(), rng));
      CHECK(canonical_form(t) == cl.form);
    }
  }
}

TEST_CASE("canonical forms separate the fixtures") {
  CHECK(canonical_form(fixture("examp1")) != canonical_form(fixture("examp2")));
  auto a = canonical_form(fixture("nine_r1")), b = canonical_form(fixture("nine_r2")),
       c = canonical_form(fixture("nine_r3"));
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
}

TEST_CASE("isomorphism search agrees with brute force and canonical forms") {
  Solution e1 = fixture("examp1");
  auto self = find_isomorphism(e1, e1);
  REQUIRE(self);
  CHECK(is_isomorphism(e1, e1, *self));
  CHECK_FALSE(find_isomorphism(e1, fixture("examp2")));
  auto w = find_isomorphism(fixture("nine_r1"), square_formula({3, 1, {0, 1, 1}}));
  REQUIRE(w);
  CHECK(is_isomorphism(fixture("nine_r1"), square_formula({3, 1, {0, 1, 1}}), *w));

  std::vector<Solution> pool;
  for (std::size_t n = 2; n <= 5; ++n) {
    CensusSpec spec;
    spec.n = n;
    for (const auto& r : enumerate(spec).records) pool.push_back(Solution::from_table(r.key));
  }
  std::mt19937_64 rng(8);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    // A relabelled copy is always found.
    Solution t = relabel(pool[i], random_perm(pool[i].size(), rng));
    auto f = find_isomorphism(pool[i], t);
    REQUIRE(f);
    CHECK(is_isomorphism(pool[i], t, *f));
    // Compare against neighbours of the same size with brute force.
    for (std::size_t j = i + 1; j < pool.size() && j < i + 6; ++j) {
      if (pool[j].size() != pool[i].size()) continue;
      const bool iso = oracle::isomorphic(pool[i].table(), pool[j].table());
      CHECK(find_isomorphism(pool[i], pool[j]).has_value() == iso);
      CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == iso);
    }
  }
}

TEST_CASE("canonical form matches brute-force classes at n = 4") {
  auto classes = oracle::all_solutions_up_to_iso(4);
  std::set<Table> forms;
  for (const auto& t : classes) forms.insert(canonical_form(Solution::from_table(t)));
  CHECK(forms.size() == classes.size());
  CHECK(classes.size() == 23);
}
