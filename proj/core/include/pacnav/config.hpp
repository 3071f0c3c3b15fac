#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pacnav/errors.hpp"

namespace pacnav {

/// Parse error carrying the offending location.
struct ConfigParseError : Error {
  ConfigParseError(const std::string& msg, int line, int column);
  int line;
  int column;
};

/// Value of one key in a scenario document: a number, boolean, string,
/// array, or inline table.
class ConfigValue {
 public:
  using Array = std::vector<ConfigValue>;
  using Table = std::map<std::string, ConfigValue>;

  ConfigValue() : v_(0.0) {}
  explicit ConfigValue(double d) : v_(d) {}
  explicit ConfigValue(bool b) : v_(b) {}
  explicit ConfigValue(std::string s) : v_(std::move(s)) {}
  explicit ConfigValue(Array a) : v_(std::move(a)) {}
  explicit ConfigValue(Table t) : v_(std::move(t)) {}

  bool is_number() const { return std::holds_alternative<double>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_table() const { return std::holds_alternative<Table>(v_); }

  double as_number() const { return std::get<double>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const Array& as_array() const { return std::get<Array>(v_); }
  const Table& as_table() const { return std::get<Table>(v_); }

  int line = 0;  // where the value starts, for error reports

 private:
  std::variant<double, bool, std::string, Array, Table> v_;
};

/// Parsed document: dotted keys ("world.bounds", "goal", "seed") in
/// declaration-independent (sorted) order.
using ConfigDocument = std::map<std::string, ConfigValue>;

/// Strict line-oriented parser for the scenario format: `[section]` headers,
/// `key = value` pairs, `#` comments. Values are numbers, booleans, strings,
/// single-line arrays `[a, b, ...]`, and inline tables `{k = v, ...}`.
/// Duplicate keys are rejected.
ConfigDocument parse_config(const std::string& text);

}  // namespace pacnav
