#include "descents/io.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace descents {

std::vector<Rational> uniform_grid(int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<Rational> g;
  g.reserve(static_cast<size_t>(points));
  for (int j = 0; j < points; ++j) g.push_back(rat(j, points - 1));
  return g;
}

nlohmann::json poly_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : to_ratio_strings(p)) arr.push_back(s);
  return arr;
}

nlohmann::json piecewise_json(const PiecewisePoly& p) {
  nlohmann::json pieces = nlohmann::json::array();
  for (int i = 0; i < p.piece_count(); ++i) {
    pieces.push_back({{"from", ratio_string(p.lo(i))},
                      {"to", ratio_string(p.hi(i))},
                      {"coeffs", poly_json(p.piece(i))}});
  }
  return pieces;
}

void write_density_csv(std::ostream& os, const DensityReport& rep,
                       const std::vector<Rational>& grid, int precision) {
  os << "t,density,density_exact,cdf,cdf_exact\n";
  for (const auto& t : grid) {
    Rational d = rep.density(t);
    Rational f = rep.cdf(t);
    os << decimal_string(t, precision) << "," << decimal_string(d, precision) << ","
       << ratio_string(d) << "," << decimal_string(f, precision) << "," << ratio_string(f)
       << "\n";
  }
}

nlohmann::json density_report_json(const DensityReport& rep, const std::vector<Rational>& grid,
                                   int precision) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : grid) {
    Rational d = rep.density(t);
    Rational f = rep.cdf(t);
    rows.push_back({{"t", ratio_string(t)},
                    {"density", decimal_string(d, precision)},
                    {"density_exact", ratio_string(d)},
                    {"cdf", decimal_string(f, precision)},
                    {"cdf_exact", ratio_string(f)}});
  }
  return {{"variable", rep.variable},
          {"conditioning", rep.conditioning},
          {"normalizer", ratio_string(rep.normalizer)},
          {"density", piecewise_json(rep.density)},
          {"cdf", piecewise_json(rep.cdf)},
          {"table", rows}};
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace descents
