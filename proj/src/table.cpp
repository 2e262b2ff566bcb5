#include "abfringe/table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "abfringe/errors.hpp"

namespace abfringe {

void ResultTable::set_meta(const std::string& key,
                           const nlohmann::ordered_json& value) {
  meta_[key] = value;
}

void ResultTable::add_column(const std::string& name,
                             const std::string& unit) {
  for (const auto& col : columns_) {
    if (col.name == name) return;
  }
  columns_.push_back({name, unit, {}});
}

ResultTable::Column& ResultTable::find(const std::string& name) {
  for (auto& col : columns_) {
    if (col.name == name) return col;
  }
  throw std::logic_error("result table has no column '" + name + "'");
}

const ResultTable::Column& ResultTable::find(const std::string& name) const {
  for (const auto& col : columns_) {
    if (col.name == name) return col;
  }
  throw std::logic_error("result table has no column '" + name + "'");
}

void ResultTable::push_value(const std::string& name, double value) {
  find(name).values.push_back(value);
}

void ResultTable::push_row(const std::vector<double>& values) {
  if (values.size() != columns_.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    columns_[i].values.push_back(values[i]);
  }
}

std::size_t ResultTable::rows() const {
  return columns_.empty() ? 0 : columns_.front().values.size();
}

const std::vector<double>& ResultTable::column(const std::string& name) const {
  return find(name).values;
}

namespace {

// Fixed numeric formatting so identical runs emit identical bytes.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

}  // namespace

std::string ResultTable::to_csv() const {
  std::string out;
  for (const auto& [key, value] : meta_.items()) {
    out += "# " + key + " = " + value.dump() + "\n";
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i].name + "[" + columns_[i].unit + "]";
  }
  out += '\n';
  const std::size_t n = rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ',';
      out += r < columns_[i].values.size() ? fmt(columns_[i].values[r]) : "";
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json ResultTable::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = meta_;
  j["rows"] = rows();
  auto cols = nlohmann::ordered_json::array();
  for (const auto& col : columns_) {
    nlohmann::ordered_json c;
    c["name"] = col.name;
    c["unit"] = col.unit;
    c["values"] = col.values;
    cols.push_back(std::move(c));
  }
  j["columns"] = std::move(cols);
  return j;
}

void ResultTable::write(const std::string& path,
                        const std::string& format) const {
  std::string payload;
  if (format == "csv") {
    payload = to_csv();
  } else if (format == "json") {
    payload = to_json().dump(2) + "\n";
  } else {
    throw ConfigError("output format must be csv or json, got '" + format +
                      "'");
  }
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  f << payload;
  if (!f) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace abfringe
