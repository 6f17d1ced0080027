#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ybe/canonical.hpp"
#include "ybe/census.hpp"
#include "ybe/error.hpp"
#include "ybe/families.hpp"
#include "ybe/io.hpp"
#include "ybe/modular.hpp"
#include "ybe/quotients.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

CensusResult run(std::size_t n, std::string_view require = "", unsigned jobs = 1) {
  CensusSpec spec;
  spec.n = n;
  spec.jobs = jobs;
  apply_constraints(spec, require);
  return enumerate(spec);
}

std::string jsonl(const CensusResult& r) {
  std::string out;
  for (const auto& rec : r.records) out += record_to_json(rec).dump() + "\n";
  return out;
}

std::set<Table> keys(const CensusResult& r) {
  std::set<Table> out;
  for (const auto& rec : r.records) out.insert(rec.key);
  return out;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / ("ybe_test_" + name)) {
    fs::remove(path);
  }
  ~TempFile() {
    fs::remove(path);
    fs::remove(path.string() + ".tmp");
  }
};

}  // namespace

TEST_CASE("class counts for small orders") {
  const std::vector<std::size_t> want{1, 2, 5, 23, 88, 595};
  for (std::size_t n = 1; n <= want.size(); ++n) {
    CensusResult r = run(n);
    CHECK(r.complete);
    CHECK_MESSAGE(r.records.size() == want[n - 1], "n=" << n);
  }
  CensusResult two = run(2);
  std::set<Table> expect{canonical_form(permutation_solution(Perm(2))),
                         canonical_form(permutation_solution(Perm::from_cycles(2, {{0, 1}})))};
  CHECK(keys(two) == expect);
  CensusResult three = run(3, "indecomposable");
  REQUIRE(three.records.size() == 1);
  CHECK(three.records[0].key == canonical_form(permutation_solution(Perm::from_cycles(3, {{0, 1, 2}}))));
}

TEST_CASE("order 4 indecomposable irretractable classes are the fixtures") {
  CensusResult r = run(4, "indecomposable,irretractable");
  std::set<Table> expect{canonical_form(fixture("examp1")), canonical_form(fixture("examp2"))};
  CHECK(keys(r) == expect);
  for (const auto& rec : r.records) CHECK(rec.flags.simple);
}

TEST_CASE("census agrees with a naive enumerator") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<Table> naive;
    for (const Table& t : oracle::all_solutions_up_to_iso(n)) naive.insert(canonical_form(Solution::from_table(t)));
    CensusResult r = run(n);
    CHECK(keys(r) == naive);
    for (const auto& rec : r.records) {
      CHECK(rec.flags.indecomposable == oracle::indecomposable(rec.key));
      CHECK(rec.flags.irretractable == oracle::irretractable(rec.key));
      CHECK(rec.flags.square_free == oracle::square_free(rec.key));
      CHECK(rec.flags.simple == oracle::simple(rec.key));
    }
  }
}

TEST_CASE("record invariants") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 2; n <= 6; ++n) {
    CensusResult r = run(n);
    for (std::size_t k = 1; k < r.records.size(); ++k) CHECK(r.records[k - 1].key < r.records[k].key);
    for (const auto& rec : r.records) {
      Solution s = Solution::from_table(rec.key);
      CHECK(rec.count > 0);
      CHECK(evaluate_flags(s) == rec.flags);
      Solution moved = relabel(s, Perm(oracle::random_perm(n, rng)));
      CHECK(canonical_form(moved) == rec.key);
      if (rec.flags.square_free) CHECK_FALSE(rec.flags.indecomposable);
      if (rec.flags.simple && !mod::is_prime(static_cast<std::int64_t>(n))) {
        CHECK(rec.flags.indecomposable);
        CHECK(rec.flags.irretractable);
      }
    }
  }
}

TEST_CASE("constraint filters select subsets of the full census") {
  CensusResult all = run(5);
  for (std::string_view req : {"indecomposable", "irretractable", "square_free", "simple", "indecomposable,square_free"}) {
    CensusSpec spec;
    spec.n = 5;
    apply_constraints(spec, req);
    CensusResult sub = enumerate(spec);
    std::vector<CensusRecord> want;
    for (const auto& rec : all.records)
      if (satisfies(spec, rec.flags)) want.push_back(rec);
    CHECK(sub.records == want);
  }
  CensusSpec bad;
  CHECK_THROWS_AS(apply_constraints(bad, "colourful"), HypothesisError);
  CHECK_THROWS_AS(run(8), HypothesisError);
  CensusSpec mismatch;
  mismatch.n = 4;
  mismatch.block_form = 3;
  CHECK_THROWS_AS(enumerate(mismatch), HypothesisError);
}

TEST_CASE("parallel and single worker runs match") {
  for (std::size_t n : {5, 6}) {
    CensusResult a = run(n, "", 1);
    CensusResult b = run(n, "", 2);
    CensusResult c = run(n, "", 3);
    CHECK(jsonl(a) == jsonl(b));
    CHECK(jsonl(a) == jsonl(c));
  }
}

TEST_CASE("checkpoint and resume reproduce the uninterrupted run") {
  for (std::size_t n : {4, 5}) {
    const std::string want = jsonl(run(n));
    for (std::size_t depth = 1; depth + 1 < n; ++depth) {
      CensusSpec probe;
      probe.n = n;
      probe.split_depth = depth;
      const std::size_t total = enumerate(probe).tasks_total;
      for (std::size_t step : {std::size_t{1}, std::max<std::size_t>(1, total / 2)}) {
        TempFile cp("cp_" + std::to_string(n) + "_" + std::to_string(depth) + "_" + std::to_string(step));
        CensusSpec spec = probe;
        spec.checkpoint_path = cp.path.string();
        spec.max_tasks = step;
        CensusResult r;
        int rounds = 0;
        do {
          r = enumerate(spec);
          ++rounds;
          REQUIRE(rounds <= static_cast<int>(total) + 1);
        } while (!r.complete);
        CHECK(r.tasks_done == total);
        CHECK_MESSAGE(jsonl(r) == want, "n=" << n << " depth=" << depth << " step=" << step);
        if (total > step) CHECK(rounds > 1);
      }
    }
  }
}

TEST_CASE("checkpoint rejection and empty checkpoint") {
  TempFile cp("cp_reject");
  CensusSpec spec;
  spec.n = 4;
  spec.indecomposable = true;
  spec.checkpoint_path = cp.path.string();
  spec.max_tasks = 1;
  enumerate(spec);
  REQUIRE(fs::exists(cp.path));

  CensusSpec other = spec;
  other.indecomposable = false;
  CHECK_THROWS_AS(enumerate(other), CensusCheckpointError);
  CensusSpec split = spec;
  split.split_depth = 2;
  CHECK_THROWS_AS(enumerate(split), CensusCheckpointError);

  std::string text = read_text_file(cp.path.string());
  Json j = parse_json(text);
  j["version"] = kCheckpointVersion + 1;
  std::ofstream(cp.path) << j.dump();
  CHECK_THROWS_AS(enumerate(spec), CensusCheckpointError);
  std::ofstream(cp.path) << "{\"version\": 1, \"spec\":";
  CHECK_THROWS_AS(enumerate(spec), CensusCheckpointError);

  std::ofstream(cp.path, std::ios::trunc).flush();
  spec.max_tasks.reset();
  CensusResult r = enumerate(spec);
  CHECK(r.complete);
  CHECK(jsonl(r) == jsonl(run(4, "indecomposable")));
}

TEST_CASE("block form classification") {
  CensusResult two = enumerate_block_form(2);
  std::set<Table> expect2{canonical_form(fixture("examp1")), canonical_form(fixture("examp2"))};
  CHECK(keys(two) == expect2);
  CensusResult three = enumerate_block_form(3, 2);
  std::set<Table> expect3{canonical_form(fixture("nine_r1")), canonical_form(fixture("nine_r2")),
                          canonical_form(fixture("nine_r3"))};
  CHECK(keys(three) == expect3);
  for (const auto* r : {&two, &three})
    for (const auto& rec : r->records) {
      CHECK(rec.flags.simple);
      CHECK(rec.flags.indecomposable);
      CHECK(rec.flags.irretractable);
      REQUIRE(rec.parameterization);
      CHECK(canonical_form(square_formula(*rec.parameterization)) == rec.key);
    }
  CHECK(jsonl(three) == jsonl(enumerate_block_form(3, 1)));
  CHECK_THROWS_AS(enumerate_block_form(5), HypothesisError);
  CensusSpec spec;
  spec.n = 4;
  spec.block_form = 2;
  CHECK(keys(enumerate(spec)) == expect2);
}
