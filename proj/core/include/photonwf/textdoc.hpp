#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

// Minimal structured text format used for amplitude documents and run
// configuration.  One `key = value` pair per line; `#` starts a comment.
// Values are numbers, booleans, `[v, v, ...]` lists, or `{ k = v, ... }`
// inline tables.  Repeated keys are kept in order (used for `mode` records).
//
//   box  = [6.283185307179586, 6.283185307179586, 6.283185307179586]
//   mode = { n = [0, 0, 1], lambda = +1, a = [1.0, 0.0], b = [0.0, 0.0] }

namespace photonwf::textdoc {

struct Value {
  enum class Type { number, boolean, list, table };
  Type type = Type::number;
  double num = 0.0;
  bool flag = false;
  std::vector<Value> list;
  std::vector<std::pair<std::string, Value>> table;

  bool has(const std::string& key) const;
  const Value& at(const std::string& key) const;  // throws std::out_of_range
  double number() const;                          // throws on wrong type
  bool boolean() const;
  long integer() const;  // number() checked to be integral
  std::vector<double> numbers() const;
  std::vector<long> integers() const;
};

struct Document {
  std::vector<std::pair<std::string, Value>> entries;

  bool has(const std::string& key) const;
  const Value& at(const std::string& key) const;
  std::vector<const Value*> all(const std::string& key) const;
};

// Throws std::runtime_error with line information on malformed input.
Document parse(std::istream& in);
Document parse_file(const std::string& path);
Document parse_string(const std::string& text);

}  // namespace photonwf::textdoc
