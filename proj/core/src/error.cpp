#include "latred/error.hpp"

namespace latred {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_place: return "invalid-place";
    case ErrorKind::zero_argument: return "zero-argument";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::rank_deficiency: return "rank-deficiency";
    case ErrorKind::unsupported_ring: return "unsupported-ring";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::determinant: return "determinant";
    case ErrorKind::boundary_module: return "boundary-module";
    case ErrorKind::incomplete_plot: return "incomplete-plot";
    case ErrorKind::violated_uniqueness: return "violated-uniqueness";
    case ErrorKind::scale: return "scale";
    case ErrorKind::definiteness: return "definiteness";
    case ErrorKind::projectivity: return "projectivity";
    case ErrorKind::range: return "range";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace latred
