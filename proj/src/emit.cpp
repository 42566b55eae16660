#include "pll/emit.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace pll {

std::string format_csv_number(double x) {
  char buf[40];
  if (x != 0.0 && std::isfinite(x) && std::abs(x) < 1e-3)
    std::snprintf(buf, sizeof buf, "%.5e", x);
  else
    std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_csv_number(*d);
  return std::get<std::string>(c);
}

}  // namespace

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t j = 0; j < t.headers.size(); ++j) {
    if (j) out += ',';
    out += t.headers[j];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += csv_cell(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size() && j < t.headers.size(); ++j) {
      const Cell& c = row[j];
      if (std::holds_alternative<std::monostate>(c))
        obj[t.headers[j]] = nullptr;
      else if (const auto* i = std::get_if<long long>(&c))
        obj[t.headers[j]] = *i;
      else if (const auto* d = std::get_if<double>(&c))
        obj[t.headers[j]] = *d;
      else
        obj[t.headers[j]] = std::get<std::string>(c);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace pll
