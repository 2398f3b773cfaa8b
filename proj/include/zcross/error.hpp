#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "zcross/types.hpp"

namespace zcross {

enum class Errc {
  InvalidArgument,
  OverflowDomain,
  DegenerateKernel,
  NearUnitCircle,
  NearOrigin,
  OutsideDomain,
  InsufficientRecurrence,
  InvalidVerblunsky,
  NonConvergence,
  BudgetExceeded,
};

const char* errc_name(Errc code);

/// Single exception type for the library; `code()` distinguishes the cases and
/// `where()` carries the offending point when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<ComplexPoint> where = std::nullopt);

  Errc code() const noexcept { return code_; }
  const std::optional<ComplexPoint>& where() const noexcept { return where_; }

 private:
  Errc code_;
  std::optional<ComplexPoint> where_;
};

}  // namespace zcross
