#include "ramanujan/core.hpp"

namespace ramanujan {

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::ResidualMet: return "ResidualMet";
    case Termination::StepMet: return "StepMet";
    case Termination::MaxIterations: return "MaxIterations";
    case Termination::StepUndefined: return "StepUndefined";
  }
  return "Unknown";
}

}  // namespace ramanujan
