#include "lambert_tsallis/error.hpp"

namespace lt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid_parameter";
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::not_applicable: return "not_applicable";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::not_on_boundary: return "not_on_boundary";
    case ErrorKind::classification: return "classification";
    case ErrorKind::cut: return "cut";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::under_resolved: return "under_resolved";
    case ErrorKind::construction: return "construction";
  }
  return "unknown";
}

}  // namespace lt
