#include "zcross/error.hpp"

namespace zcross {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OverflowDomain: return "OverflowDomain";
    case Errc::DegenerateKernel: return "DegenerateKernel";
    case Errc::NearUnitCircle: return "NearUnitCircle";
    case Errc::NearOrigin: return "NearOrigin";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::InsufficientRecurrence: return "InsufficientRecurrence";
    case Errc::InvalidVerblunsky: return "InvalidVerblunsky";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::optional<ComplexPoint> where)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), where_(where) {}

}  // namespace zcross
