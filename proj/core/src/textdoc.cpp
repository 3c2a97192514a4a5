#include <photonwf/textdoc.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace photonwf::textdoc {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("textdoc: line " + std::to_string(line) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
};

std::string parse_key(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_' ||
                       c.peek() == '-' || c.peek() == '.'))
    ++c.pos;
  if (c.pos == start) c.fail("expected a key");
  return c.s.substr(start, c.pos - start);
}

Value parse_value(Cursor& c);

Value parse_list(Cursor& c) {
  Value v;
  v.type = Value::Type::list;
  ++c.pos;  // '['
  c.skip_ws();
  if (c.peek() == ']') {
    ++c.pos;
    return v;
  }
  while (true) {
    v.list.push_back(parse_value(c));
    c.skip_ws();
    if (c.peek() == ',') {
      ++c.pos;
      continue;
    }
    if (c.peek() == ']') {
      ++c.pos;
      return v;
    }
    c.fail("expected ',' or ']' in list");
  }
}

Value parse_table(Cursor& c) {
  Value v;
  v.type = Value::Type::table;
  ++c.pos;  // '{'
  c.skip_ws();
  if (c.peek() == '}') {
    ++c.pos;
    return v;
  }
  while (true) {
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    ++c.pos;
    v.table.emplace_back(std::move(key), parse_value(c));
    c.skip_ws();
    if (c.peek() == ',') {
      ++c.pos;
      c.skip_ws();
      continue;
    }
    if (c.peek() == '}') {
      ++c.pos;
      return v;
    }
    c.fail("expected ',' or '}' in table");
  }
}

Value parse_value(Cursor& c) {
  c.skip_ws();
  if (c.done()) c.fail("expected a value");
  const char ch = c.peek();
  if (ch == '[') return parse_list(c);
  if (ch == '{') return parse_table(c);
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    std::string word = parse_key(c);
    Value v;
    v.type = Value::Type::boolean;
    if (word == "true")
      v.flag = true;
    else if (word == "false")
      v.flag = false;
    else
      c.fail("unknown literal '" + word + "'");
    return v;
  }
  const char* start = c.s.c_str() + c.pos;
  char* end = nullptr;
  const double d = std::strtod(start, &end);
  if (end == start) c.fail("malformed number");
  c.pos += std::size_t(end - start);
  Value v;
  v.num = d;
  return v;
}

}  // namespace

bool Value::has(const std::string& key) const {
  for (const auto& [k, v] : table)
    if (k == key) return true;
  return false;
}

const Value& Value::at(const std::string& key) const {
  for (const auto& [k, v] : table)
    if (k == key) return v;
  throw std::out_of_range("textdoc: missing key '" + key + "'");
}

double Value::number() const {
  if (type != Type::number) throw std::runtime_error("textdoc: expected a number");
  return num;
}

bool Value::boolean() const {
  if (type != Type::boolean) throw std::runtime_error("textdoc: expected a boolean");
  return flag;
}

long Value::integer() const {
  const double d = number();
  const double r = std::round(d);
  if (std::abs(d - r) > 0.0) throw std::runtime_error("textdoc: expected an integer");
  return static_cast<long>(r);
}

std::vector<double> Value::numbers() const {
  if (type != Type::list) throw std::runtime_error("textdoc: expected a list");
  std::vector<double> out;
  out.reserve(list.size());
  for (const auto& v : list) out.push_back(v.number());
  return out;
}

std::vector<long> Value::integers() const {
  if (type != Type::list) throw std::runtime_error("textdoc: expected a list");
  std::vector<long> out;
  out.reserve(list.size());
  for (const auto& v : list) out.push_back(v.integer());
  return out;
}

bool Document::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const Value& Document::at(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw std::out_of_range("textdoc: missing key '" + key + "'");
}

std::vector<const Value*> Document::all(const std::string& key) const {
  std::vector<const Value*> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(&v);
  return out;
}

Document parse(std::istream& in) {
  Document doc;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Cursor c{raw, 0, lineno};
    c.skip_ws();
    if (c.done()) continue;
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    ++c.pos;
    Value v = parse_value(c);
    c.skip_ws();
    if (!c.done()) c.fail("trailing characters after value");
    doc.entries.emplace_back(std::move(key), std::move(v));
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("textdoc: cannot open " + path);
  return parse(in);
}

Document parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

}  // namespace photonwf::textdoc
