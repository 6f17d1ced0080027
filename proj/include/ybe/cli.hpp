#ifndef YBE_CLI_HPP
#define YBE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe::cli {

enum Exit : int {
  kOk = 0,
  kNegative = 1,   // non-isomorphic, not simple, ...
  kInputError = 2,
  kAxiomFailure = 3,
  kResourceCap = 4,
};

// args excludes the program name. `in` is read for the file name "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ybe::cli

#endif
