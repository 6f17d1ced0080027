#ifndef YBE_ERROR_HPP
#define YBE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

// Malformed input (ragged tables, out-of-range entries, bad JSON shape).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates an axiom. The witness is a tuple of
// 0-based points whose meaning depends on the check that failed.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(const std::string& what, std::vector<std::uint32_t> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

// A configured size cap was hit (group order, lattice size, census order).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters that fail the hypotheses of a construction.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ybe

#endif
