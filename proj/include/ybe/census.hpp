#ifndef YBE_CENSUS_HPP
#define YBE_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/families.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct CensusFlags {
  bool indecomposable = false;
  bool irretractable = false;
  bool square_free = false;
  bool simple = false;  // false for n = 1
  friend bool operator==(const CensusFlags&, const CensusFlags&) = default;
};

CensusFlags evaluate_flags(const Solution& s);

struct CensusSpec {
  std::size_t n = 1;
  // Required flags; unset fields are not filtered on.
  bool indecomposable = false;
  bool irretractable = false;
  bool square_free = false;
  bool simple = false;
  std::optional<std::int64_t> block_form;  // p with n = p^2
  unsigned jobs = 1;
  std::optional<std::string> checkpoint_path;
  // Work is split into independent tasks at this many completed rows
  // after the first.
  std::size_t split_depth = 1;
  // Stop after this many tasks; the checkpoint then holds the partial run.
  std::optional<std::size_t> max_tasks;
};

// "indecomposable,irretractable,block_form(3)" and similar. Throws
// HypothesisError on an unknown name.
void apply_constraints(CensusSpec& spec, std::string_view list);
bool satisfies(const CensusSpec& spec, const CensusFlags& f);

struct CensusRecord {
  Table key;  // canonical_form of every member
  CensusFlags flags;
  std::uint64_t count = 0;  // raw tables reaching this class
  std::optional<SquareParams> parameterization;
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // sorted by key
  bool complete = true;
  std::size_t tasks_total = 0;
  std::size_t tasks_done = 0;
};

// Isomorph-free enumeration of solutions of order n satisfying the
// requested flags. Throws HypothesisError outside n <= 7 (n = 4, 9 with
// block_form) and CensusCheckpointError for an unusable checkpoint.
CensusResult enumerate(const CensusSpec& spec);

// Indecomposable irretractable solutions of block shape on (Z/(p))^2,
// each annotated with a (t, j) reproducing it through square_formula.
CensusResult enumerate_block_form(std::int64_t p, unsigned jobs = 1);

struct CensusCheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kCheckpointVersion = 1;

}  // namespace ybe

#endif
