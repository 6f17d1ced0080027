// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 when
// every criterion has its recorded outcome.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "ybe/brace.hpp"
#include "ybe/canonical.hpp"
#include "ybe/census.hpp"
#include "ybe/error.hpp"
#include "ybe/families.hpp"
#include "ybe/modular.hpp"
#include "ybe/quotients.hpp"

using namespace ybe;

namespace {

// Collects failed expectations; a criterion passes when none are recorded.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool iso(const Solution& a, const Solution& b) { return find_isomorphism(a, b).has_value(); }

unsigned workers() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

Partition one_based_to_partition(std::initializer_list<std::initializer_list<point_t>> blocks) {
  Partition p;
  for (const auto& b : blocks) {
    std::vector<point_t> v;
    for (point_t x : b) v.push_back(x - 1);
    p.push_back(v);
  }
  return p;
}

void c1(Check& c) {
  Solution e1 = fixture("examp1"), e2 = fixture("examp2");
  c.expect(validate(e1.table()).ok(), "examp1 valid");
  c.expect(validate(e2.table()).ok(), "examp2 valid");
  c.expect(permutation_group(e1).order() == 8, "examp1 group order 8");
  c.expect(permutation_group(e2).order() == 8, "examp2 group order 8");
  c.expect(block_systems(e1.sigmas(), 4) == std::vector<Partition>{one_based_to_partition({{1, 4}, {2, 3}})},
           "examp1 block systems");
  c.expect(block_systems(e2.sigmas(), 4) == std::vector<Partition>{one_based_to_partition({{1, 2}, {3, 4}})},
           "examp2 block systems");
}

void c2(Check& c) {
  Solution e1 = fixture("examp1"), e2 = fixture("examp2");
  c.expect(is_simple(e1).simple, "examp1 simple");
  c.expect(is_simple(e2).simple, "examp2 simple");
  c.expect(!iso(e1, e2), "examp1 not isomorphic to examp2");
  c.expect(iso(square_solution({2, 1, {0, 1}}).solution, e1), "square(2,1,(0,1)) ~ examp1");
  c.expect(iso(square_solution({2, 1, {1, 0}}).solution, e2), "square(2,1,(1,0)) ~ examp2");
}

void c3(Check& c) {
  CensusSpec spec;
  spec.n = 4;
  spec.indecomposable = spec.irretractable = true;
  CensusResult r = enumerate(spec);
  std::set<Table> got, want{canonical_form(fixture("examp1")), canonical_form(fixture("examp2"))};
  for (const auto& rec : r.records) got.insert(rec.key);
  c.expect(r.records.size() == 2, "exactly 2 classes");
  c.expect(got == want, "classes are the fixtures");
}

void c4(Check& c) {
  const char* names[] = {"nine_r1", "nine_r2", "nine_r3"};
  const std::vector<std::int64_t> js[] = {{0, 1, 1}, {1, 0, 0}, {1, 2, 2}};
  std::vector<Solution> s;
  for (int k = 0; k < 3; ++k) {
    s.push_back(fixture(names[k]));
    const std::string nm = names[k];
    c.expect(validate(s[k].table()).ok(), nm + " valid");
    c.expect(is_indecomposable(s[k]), nm + " indecomposable");
    c.expect(is_irretractable(s[k]), nm + " irretractable");
    c.expect(is_simple(s[k]).simple, nm + " simple");
    c.expect(iso(s[k], square_solution({3, 1, js[k]}).solution), nm + " ~ square(3,1,j)");
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) c.expect(!iso(s[a], s[b]), "order 9 fixtures pairwise non-isomorphic");
}

void c5(Check& c) {
  CensusResult r = enumerate_block_form(3, workers());
  std::set<Table> got, want;
  for (const char* nm : {"nine_r1", "nine_r2", "nine_r3"}) want.insert(canonical_form(fixture(nm)));
  for (const auto& rec : r.records) {
    got.insert(rec.key);
    c.expect(rec.parameterization.has_value(), "class has a (t, j) parameterization");
    if (rec.parameterization)
      c.expect(canonical_form(square_formula(*rec.parameterization)) == rec.key, "parameterization reproduces class");
  }
  c.expect(r.records.size() == 3, "exactly 3 classes");
  c.expect(got == want, "classes are the order 9 fixtures");
}

void c6(Check& c) {
  Solution s = fixture("exnonsimple");
  c.expect(s.size() == 36, "order 36");
  c.expect(is_indecomposable(s), "indecomposable");
  c.expect(is_irretractable(s), "irretractable");
  c.expect(!is_simple(s).simple, "not simple");
  Solution swap = permutation_solution(Perm::from_cycles(2, {{0, 1}}));
  bool found = false;
  for (const auto& cong : all_congruences(s))
    if (cong.num_classes() == 2 && quotient(s, cong).solution == swap) found = true;
  c.expect(found, "2-class congruence with quotient the 2-point permutation solution");
}

void c7(Check& c) {
  const std::pair<std::int64_t, std::int64_t> cases[] = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [m, n] : cases) {
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    try {
      Solution s = rectangular_solution(m, n);
      c.expect(s.size() == static_cast<std::size_t>(m * m * n), tag + " order");
      c.expect(is_simple(s).simple, tag + " simple");
      c.expect(cycle_type(s.sigma(static_cast<point_t>(m + 1))) ==
                   std::vector<std::size_t>{static_cast<std::size_t>(m * m * n)},
               tag + " sigma_(1,n) cycle type");
    } catch (const AxiomError& e) {
      c.expect(false, tag + " " + e.what());
    }
  }
}

void c8(Check& c) {
  int count = 0;
  for (std::int64_t p : {3, 5})
    for (const auto& j : symmetric_j_vectors(p)) {
      if (std::all_of(j.begin(), j.end(), [&](std::int64_t v) { return v == j[0]; })) continue;
      ++count;
      c.expect(is_simple(p2_solution(p, 1, j)).simple, "p2 simple for p=" + std::to_string(p));
    }
  c.expect(count == 6 + 120, "all non-constant symmetric j covered");
  BlockFormData d = p7_remark_block_data();
  BlockFormResult r = block_form(d);
  c.expect(r.accepted(), "p=7 block data accepted");
  Solution s7 = p2_solution(7, 2, j_from_block_data(d, 2));
  c.expect(is_simple(s7).simple, "p=7, t=2 instance simple");
  if (r.accepted()) c.expect(s7 == *r.solution, "p=7 instance matches block data");
}

void c9(Check& c) {
  for (std::int64_t n : {2, 3})
    for (const auto& j : symmetric_j_vectors(n)) {
      AsymmetricProduct P = asymmetric_product(n, j);
      c.expect(validate_brace(P.brace.add_table(), P.brace.mul_table()).ok(), "brace valid");
      Solution R = P.form.restricted_solution();
      c.expect(is_indecomposable(R) == P.form.j_generates(), "indecomposable iff j generates");
      c.expect(is_irretractable(R) == P.form.rows_distinct(), "irretractable iff rows distinct");
      c.expect(P.nonsingular == (socle(P.brace).size() == 1), "non-singular iff trivial socle");
      c.expect(socle_quotient_check(P.brace), "B/soc(B) ~ G(B, r_B)");
    }
  c.expect(iso(AsymmetricForm(2, {0, 1}).restricted_solution(), fixture("examp1")), "B_{0,1} restricted ~ examp1");
  c.expect(iso(AsymmetricForm(2, {1, 0}).restricted_solution(), fixture("examp2")), "B_{1,0} restricted ~ examp2");
}

void c10(Check& c) {
  Solution s = fixture("examp1");
  PermutationBrace P = permutation_brace(s);
  const LeftBrace& G = P.brace;
  c.expect(G.order() == 8, "order 8");
  c.expect(validate_brace(G.add_table(), G.mul_table()).ok(), "valid brace");
  c.expect(socle(G) == ElementSet{G.zero()}, "trivial socle");
  std::vector<elem_t> diffs;
  for (point_t x = 0; x < s.size(); ++x)
    for (point_t y = 0; y < s.size(); ++y) diffs.push_back(G.add(P.sigma_element[x], G.neg(P.sigma_element[y])));
  ElementSet sq = star_ideal(G);
  c.expect(sq == additive_span(G, diffs), "G^2 is spanned by sigma_x - sigma_y");
  BraceQuotient q = quotient_brace(G, sq);
  c.expect(is_trivial_brace(q.brace) && is_cyclic_additive(q.brace), "G/G^2 trivial cyclic");
  // Every nonzero ideal inside G^2 contains some x != 0, whose ideal is all of G^2.
  for (elem_t x : sq)
    if (x != G.zero()) c.expect(ideal_closure(G, {x}) == sq, "G^2 is a minimal ideal");
}

void c11(Check& c) {
  // Congruence lattice against brute-force filtered partitions.
  for (std::size_t n = 1; n <= 5; ++n) {
    CensusSpec spec;
    spec.n = n;
    for (const auto& rec : enumerate(spec).records) {
      Solution s = Solution::from_table(rec.key);
      std::set<std::vector<point_t>> lib, brute;
      for (const auto& cg : all_congruences(s)) lib.insert(cg.class_of());
      for (const auto& cls : oracle::congruences(rec.key)) brute.insert(Congruence(cls).class_of());
      c.expect(lib == brute, "lattice matches brute force at n=" + std::to_string(n));
    }
  }
  // Canonical form stable under relabeling.
  std::mt19937_64 rng(20240611);
  for (const auto& name : fixture_names()) {
    Solution s = fixture(name);
    const Table key = canonical_form(s);
    for (int rep = 0; rep < 100; ++rep)
      c.expect(canonical_form(relabel(s, Perm(oracle::random_perm(s.size(), rng)))) == key,
               "canonical form stable for " + name);
  }
  // Both braid checkers agree with the direct oracle on random tables.
  for (std::size_t n : {3, 4, 5})
    for (int rep = 0; rep < 10000; ++rep) {
      Table t;
      for (std::size_t x = 0; x < n; ++x) t.push_back(oracle::random_perm(n, rng));
      const bool want = oracle::braid(t);
      c.expect(braid_witness(t).has_value() != want, "braid checker agrees");
      c.expect(sigma_identity_witness(t).has_value() != want, "sigma identity checker agrees");
    }
  // Square-free classes are decomposable.
  for (std::size_t n = 2; n <= 6; ++n) {
    CensusSpec spec;
    spec.n = n;
    spec.square_free = true;
    for (const auto& rec : enumerate(spec).records)
      c.expect(!rec.flags.indecomposable, "square-free class decomposable at n=" + std::to_string(n));
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
  bool expected_to_fail = false;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "order 4 fixtures valid, group order 8, block systems", c1},
      {2, "order 4 simplicity and square family matches", c2},
      {3, "order 4 census: 2 indecomposable irretractable classes", c3},
      {4, "order 9 fixtures", c4},
      {5, "block form classification at p = 3", c5},
      {6, "order 36 non-simple witness", c6},
      // The displayed formula fails the braid relation; see README.
      {7, "rectangular family simple of orders 8, 12, 18", c7, true},
      {8, "prime square family simple", c8},
      {9, "asymmetric product braces for n = 2, 3", c9},
      {10, "permutation brace of examp1", c10},
      {11, "property suites", c11},
  };
  int unexpected = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = c.failures.empty();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << " [" << timing << "] " << cr.title;
    if (!pass) {
      std::cout << " -- " << c.failures.front();
      if (c.failures.size() > 1) std::cout << " (+" << c.failures.size() - 1 << " more)";
      if (cr.expected_to_fail) std::cout << " [known failure]";
    } else if (cr.expected_to_fail) {
      std::cout << " [listed as a known failure; update the list]";
    }
    std::cout << std::endl;
    if (pass == cr.expected_to_fail) ++unexpected;
  }
  std::cout << (unexpected == 0 ? "acceptance: all criteria have their recorded outcome"
                                : "acceptance: " + std::to_string(unexpected) + " unexpected outcome(s)")
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
