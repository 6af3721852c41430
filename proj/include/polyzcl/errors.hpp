#pragma once

#include <stdexcept>
#include <string>

namespace polyzcl {

enum class Errc {
  size_limit,       // input exceeds the supported desk-scale caps
  not_generic,      // some subset of sides sums to exactly half the perimeter
  empty_space,      // {n} is long: no polygon closes up
  not_realizable,   // no generic length vector has this genetic code
  parse_error,
  not_antichain,    // genes comparable under dominance
  disconnected,     // the one excluded code; no canonical ring
  iso_violation,    // internal consistency failure in the genus-2 check
  no_partition,     // no gee pair admits a partition at the requested level
  budget_exceeded,  // search state cap hit
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace polyzcl
