#pragma once

#include <stdexcept>
#include <string>

namespace latred {

enum class ErrorKind {
  invalid_place,
  zero_argument,
  dimension,
  rank_deficiency,
  unsupported_ring,
  singularity,
  determinant,
  boundary_module,
  incomplete_plot,
  violated_uniqueness,
  scale,
  definiteness,
  projectivity,
  range,
  parse,
};

const char* kind_name(ErrorKind k);

// Domain failures. The CLI maps parse errors to exit code 2, the rest to 3.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw MathError(kind, what);
}

}  // namespace latred
