#include "sortnet/export.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace sortnet {

void ExactTable::add(std::vector<long long> params, Rational value) {
  if (params.size() != param_names.size())
    throw std::invalid_argument("row parameter count does not match header");
  rows.push_back({std::move(params), std::move(value)});
}

void write_csv(const ExactTable& table, std::ostream& out) {
  for (const auto& name : table.param_names) out << name << ',';
  out << "numerator,denominator,decimal\n";
  for (const auto& row : table.rows) {
    for (long long p : row.params) out << p << ',';
    out << row.value.get_num().get_str() << ',' << row.value.get_den().get_str()
        << ',' << to_decimal(row.value) << '\n';
  }
}

void write_csv_file(const ExactTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write CSV file: " + path);
  write_csv(table, out);
}

nlohmann::json to_json(const ExactTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r;
    for (size_t i = 0; i < table.param_names.size(); ++i)
      r[table.param_names[i]] = row.params[i];
    r["numerator"] = row.value.get_num().get_str();
    r["denominator"] = row.value.get_den().get_str();
    r["decimal"] = row.value.get_d();
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json to_json(const mc::Estimate& e) {
  return {{"mean", e.mean}, {"stderr", e.stderr_of_mean}, {"n", e.count}};
}

}  // namespace sortnet
