#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "descents/sawtooth.hpp"

namespace descents {

// j/(points-1) for j = 0..points-1
std::vector<Rational> uniform_grid(int points);

nlohmann::json poly_json(const Poly& p);
nlohmann::json piecewise_json(const PiecewisePoly& p);

// Rows: t, decimal value, num/den value (plus the cdf columns).
void write_density_csv(std::ostream& os, const DensityReport& rep,
                       const std::vector<Rational>& grid, int precision);
nlohmann::json density_report_json(const DensityReport& rep, const std::vector<Rational>& grid,
                                   int precision);

std::string iso_timestamp();

}  // namespace descents
