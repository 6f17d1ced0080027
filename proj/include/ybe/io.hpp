#ifndef YBE_IO_HPP
#define YBE_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ybe/brace.hpp"
#include "ybe/quotients.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct CensusFlags;
struct CensusRecord;

using Json = nlohmann::ordered_json;

// Throws FormatError on malformed text.
Json parse_json(std::string_view text);
// Throws FormatError if the file cannot be read.
std::string read_text_file(const std::string& path);

// {"n", "sigma", "labels"?}; labels are written only when they differ
// from the default "1".."n".
Json solution_to_json(const Solution& s);
struct SolutionInput {
  RawTable sigma;
  std::vector<std::string> labels;
};
// Shape checks only; axioms are left to validate / Solution::from_raw.
SolutionInput solution_input_from_json(const Json& j);
Solution solution_from_json(const Json& j);

// {"n", "dot"}
Json cycle_set_to_json(const Table& dot);
Table cycle_set_from_json(const Json& j);

// {"n", "classes"}
Json congruence_to_json(const Congruence& c);
Congruence congruence_from_json(const Json& j);

// {"order", "add", "mul"}
Json brace_to_json(const LeftBrace& b);
std::pair<OpTable, OpTable> brace_tables_from_json(const Json& j);

Json flags_to_json(const CensusFlags& f);
CensusFlags flags_from_json(const Json& j);
// {"key", "flags", "count"} plus "parameterization" {"t", "j"} when known.
Json record_to_json(const CensusRecord& r);
CensusRecord record_from_json(const Json& j);

// 1-based cycle notation for every sigma_x.
std::vector<std::string> sigma_cycles(const Solution& s);

}  // namespace ybe

#endif
