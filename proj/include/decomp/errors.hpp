#pragma once

#include <stdexcept>
#include <string>

namespace decomp {

// Error categories used across the library. CLI maps all of them to exit code 1;
// flag/usage problems are handled by the argument parser (exit code 2).
enum class Errc {
  invalid_argument,   // precondition violated by the caller
  degenerate_input,   // input at a boundary where the operation is undefined (e.g. q0 in {0,1})
  not_applicable,     // method does not apply to this input (e.g. plug-in on non-equidistant data)
  breakdown,          // estimator breaks down (e.g. no zero increments observed)
  resource_limit,     // enumeration would exceed the configured memory budget
  not_found,          // lookup of a non-member element
  no_neighbors,       // neighbor query on a single-element solution set
  invalid_state,      // internal chain invariant broken
  bad_input,          // malformed data file
  io_error,           // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace decomp
