#pragma once

#include <string>

#include "pll/tables.hpp"

namespace pll {

/// 6 significant digits, '.' decimal point, scientific for 0 < |x| < 1e-3.
std::string format_csv_number(double x);

/// Header row plus comma-separated data rows, one trailing newline each.
std::string render_csv(const Table& t);

/// JSON array with one object per row, keys matching the CSV headers,
/// doubles emitted with full round-trip precision.
std::string render_json(const Table& t);

}  // namespace pll
