#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace abfringe {

// Column-oriented result table with ordered metadata. One table per run;
// serializes to CSV (header row `name[unit]`, metadata as leading `# k = v`
// comment lines, values as %.12e) or JSON (stable key order).
class ResultTable {
 public:
  void set_meta(const std::string& key, const nlohmann::ordered_json& value);
  // Columns keep insertion order. Appending to an existing name extends it.
  void add_column(const std::string& name, const std::string& unit);
  void push_value(const std::string& name, double value);
  // Appends one value per column, in column order.
  void push_row(const std::vector<double>& values);

  std::size_t rows() const;
  const std::vector<double>& column(const std::string& name) const;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;

  // format is "csv" or "json"; path "-" writes to stdout.
  void write(const std::string& path, const std::string& format) const;

 private:
  struct Column {
    std::string name;
    std::string unit;
    std::vector<double> values;
  };
  nlohmann::ordered_json meta_ = nlohmann::ordered_json::object();
  std::vector<Column> columns_;

  Column& find(const std::string& name);
  const Column& find(const std::string& name) const;
};

}  // namespace abfringe
