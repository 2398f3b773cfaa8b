#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "zcross/cli.hpp"
#include "zcross/error.hpp"

namespace zcross::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, "not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, "not a finite number: '" + s + "'");
  }
  return v;
}

int to_int(const std::string& raw) {
  const double v = to_double(raw);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(Errc::InvalidArgument, "not an integer: '" + trim(raw) + "'");
  }
  return static_cast<int>(v);
}

// Data rows of a CSV with the given header; blank lines are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != header) {
    throw Error(Errc::InvalidArgument, "expected CSV header '" + header + "'");
  }
  const std::size_t columns = split(header, ',').size();
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(trim(line), ',');
    if (cells.size() != columns) {
      throw Error(Errc::InvalidArgument, "CSV row has wrong column count: '" + line + "'");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(to_double(part));
  if (out.empty()) throw Error(Errc::InvalidArgument, "empty list");
  return out;
}

Level parse_level(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw Error(Errc::InvalidArgument, "level must be K1,K2");
  return {v[0], v[1]};
}

Rect parse_rect(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 4) throw Error(Errc::InvalidArgument, "rect must be x0,x1,y0,y1");
  Rect r{v[0], v[1], v[2], v[3]};
  if (!r.well_ordered()) throw Error(Errc::InvalidArgument, "rect needs x0 < x1 and y0 < y1");
  return r;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw Error(Errc::InvalidArgument, "grid must be NXxNY");
  const int nx = to_int(parts[0]), ny = to_int(parts[1]);
  if (nx < 1 || ny < 1) throw Error(Errc::InvalidArgument, "grid dimensions must be positive");
  return {nx, ny};
}

RecurrenceRealLine read_recurrence_csv(std::istream& in) {
  const auto rows = read_csv(in, "j,a,b,c,k");
  if (rows.empty()) throw Error(Errc::InvalidArgument, "recurrence file has no rows");
  RecurrenceRealLine rec;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (to_int(rows[i][0]) != static_cast<int>(i)) {
      throw Error(Errc::InvalidArgument, "recurrence rows must be j = 0, 1, 2, ... in order");
    }
    rec.a.push_back(to_double(rows[i][1]));
    rec.b.push_back(to_double(rows[i][2]));
    rec.c.push_back(to_double(rows[i][3]));
  }
  rec.p0 = to_double(rows[0][4]);
  rec.validate();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double k = to_double(rows[i][4]);
    const double expected = rec.leading(i);
    if (std::abs(k - expected) > 1e-10 * std::abs(expected)) {
      std::ostringstream msg;
      msg << "leading coefficient k_" << i << " = " << k << " disagrees with p0 * a_0 ... a_"
          << i - 1 << " = " << expected;
      throw Error(Errc::InvalidArgument, msg.str());
    }
  }
  return rec;
}

VerblunskyCoefficients read_verblunsky_csv(std::istream& in) {
  const auto rows = read_csv(in, "j,alpha_re,alpha_im");
  VerblunskyCoefficients v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (to_int(rows[i][0]) != static_cast<int>(i)) {
      throw Error(Errc::InvalidArgument, "Verblunsky rows must be j = 0, 1, 2, ... in order");
    }
    v.alphas.emplace_back(to_double(rows[i][1]), to_double(rows[i][2]));
  }
  v.validate();
  return v;
}

BasisFamily parse_family(const std::string& text, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  if (text == "monomial") return Monomial{};
  if (text == "weyl") return Weyl{};
  if (text == "rootbinomial") return RootBinomial{degree};
  if (text == "fouriercos") return FourierCos{};
  if (text == "fouriersincos") return FourierSinCos{};
  const auto open = [](const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
    return f;
  };
  const auto rows = static_cast<std::size_t>(degree) + 1;
  if (text.rfind("op-real:", 0) == 0) {
    const std::string arg = text.substr(8);
    if (arg == "legendre") return RealLineOP{RecurrenceRealLine::legendre(rows)};
    if (arg == "chebyshev-u") return RealLineOP{RecurrenceRealLine::chebyshev_u(rows)};
    auto f = open(arg);
    RecurrenceRealLine rec = read_recurrence_csv(f);
    if (rec.rows() < rows) {
      throw Error(Errc::InsufficientRecurrence,
                  "degree " + std::to_string(degree) + " needs " + std::to_string(rows) +
                      " recurrence rows, file has " + std::to_string(rec.rows()));
    }
    return RealLineOP{std::move(rec)};
  }
  if (text.rfind("op-circle:", 0) == 0) {
    auto f = open(text.substr(10));
    VerblunskyCoefficients v = read_verblunsky_csv(f);
    if (v.size() < rows) {
      throw Error(Errc::InsufficientRecurrence,
                  "degree " + std::to_string(degree) + " needs " + std::to_string(rows) +
                      " Verblunsky coefficients, file has " + std::to_string(v.size()));
    }
    return CircleOP{std::move(v)};
  }
  throw Error(Errc::InvalidArgument, "unknown family '" + text + "'");
}

void write_grid_csv(std::ostream& os, const DensityGrid& grid) {
  os << "x,y,h\n";
  char buf[96];
  for (int i = 0; i < grid.ny; ++i) {
    for (int j = 0; j < grid.nx; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.x_center(j), grid.y_center(i),
                    grid.at(i, j));
      os << buf;
    }
  }
}

void write_pgm(std::ostream& os, const DensityGrid& grid, bool log_scale) {
  double vmax = 0.0;
  for (double v : grid.values) vmax = std::max(vmax, v);
  os << "P5\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  std::string row(static_cast<std::size_t>(grid.nx), '\0');
  for (int i = grid.ny - 1; i >= 0; --i) {
    for (int j = 0; j < grid.nx; ++j) {
      const double v = std::max(grid.at(i, j), 0.0);
      double level = 0.0;
      if (vmax > 0.0) {
        level = log_scale ? 255.0 * std::log10(1.0 + 9.0 * v / vmax) : 255.0 * v / vmax;
      }
      row[j] = static_cast<char>(static_cast<unsigned char>(std::clamp(std::lround(level), 0L, 255L)));
    }
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace zcross::cli
