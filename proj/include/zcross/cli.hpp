#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zcross/basis.hpp"
#include "zcross/types.hpp"

namespace zcross::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kUsage = 2, kDomain = 3, kBudget = 4 };

/// Entry point behind the `zcross` executable. Never throws.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Argument parsing. All throw zcross::Error(InvalidArgument) on malformed text.
Level parse_level(const std::string& text);          // "K1,K2"
Rect parse_rect(const std::string& text);            // "x0,x1,y0,y1"
std::pair<int, int> parse_grid(const std::string& text);  // "NXxNY"
std::vector<double> parse_list(const std::string& text);  // "a,b,c"

/// monomial | weyl | rootbinomial | fouriercos | fouriersincos |
/// op-real:{legendre|chebyshev-u|FILE} | op-circle:FILE
BasisFamily parse_family(const std::string& text, int degree);

/// CSV `j,a,b,c,k`: one row per recurrence step, k = leading coefficient of p_j.
RecurrenceRealLine read_recurrence_csv(std::istream& in);
/// CSV `j,alpha_re,alpha_im`.
VerblunskyCoefficients read_verblunsky_csv(std::istream& in);

/// `x,y,h` rows, cell-centered, row-major from y_lo, 17 significant digits.
void write_grid_csv(std::ostream& os, const DensityGrid& grid);
/// Binary P5, maxval 255, top image row = largest y.
void write_pgm(std::ostream& os, const DensityGrid& grid, bool log_scale);

std::string utc_timestamp();

}  // namespace zcross::cli
