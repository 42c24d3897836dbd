#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sortnet/montecarlo.hpp"
#include "sortnet/rational.hpp"

#include "json.hpp"

// Shared result schemas: exact quantities as (parameters, numerator,
// denominator, decimal) tables in CSV or JSON, estimates as
// {mean, stderr, n} objects.
namespace sortnet {

struct ExactTable {
  std::vector<std::string> param_names;
  struct Row {
    std::vector<long long> params;
    Rational value;
  };
  std::vector<Row> rows;

  void add(std::vector<long long> params, Rational value);
};

void write_csv(const ExactTable& table, std::ostream& out);
void write_csv_file(const ExactTable& table, const std::string& path);
nlohmann::json to_json(const ExactTable& table);

nlohmann::json to_json(const mc::Estimate& e);

}  // namespace sortnet
