#include "pacnav/config.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace pacnav {

ConfigParseError::ConfigParseError(const std::string& msg, int line_, int column_)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_) {}

namespace {

// Cursor over one logical line.
struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  int column() const { return static_cast<int>(pos) + 1; }

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return text[pos++]; }

  void skip_ws() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigParseError(msg, line, column());
  }
};

bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_key(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  while (!c.done() && is_key_char(c.peek())) {
    c.take();
  }
  if (c.pos == start) {
    c.fail("expected a key");
  }
  return c.text.substr(start, c.pos - start);
}

ConfigValue parse_value(Cursor& c);

ConfigValue parse_number(Cursor& c) {
  const std::size_t start = c.pos;
  if (c.peek() == '+' || c.peek() == '-') {
    c.take();
  }
  bool any = false;
  auto digits = [&] {
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      c.take();
      any = true;
    }
  };
  digits();
  if (c.peek() == '.') {
    c.take();
    digits();
  }
  if (c.peek() == 'e' || c.peek() == 'E') {
    c.take();
    if (c.peek() == '+' || c.peek() == '-') {
      c.take();
    }
    digits();
  }
  if (!any) {
    c.fail("malformed number");
  }
  const std::string token = c.text.substr(start, c.pos - start);
  ConfigValue v(std::strtod(token.c_str(), nullptr));
  v.line = c.line;
  return v;
}

ConfigValue parse_string(Cursor& c) {
  c.take();  // opening quote
  std::string out;
  while (!c.done() && c.peek() != '"') {
    out.push_back(c.take());
  }
  if (c.done()) {
    c.fail("unterminated string");
  }
  c.take();  // closing quote
  ConfigValue v(std::move(out));
  v.line = c.line;
  return v;
}

ConfigValue parse_array(Cursor& c) {
  c.take();  // '['
  ConfigValue::Array items;
  c.skip_ws();
  if (c.peek() == ']') {
    c.take();
  } else {
    while (true) {
      items.push_back(parse_value(c));
      c.skip_ws();
      const char ch = c.peek();
      if (ch == ',') {
        c.take();
        continue;
      }
      if (ch == ']') {
        c.take();
        break;
      }
      c.fail("expected ',' or ']' in array");
    }
  }
  ConfigValue v(std::move(items));
  v.line = c.line;
  return v;
}

ConfigValue parse_inline_table(Cursor& c) {
  c.take();  // '{'
  ConfigValue::Table table;
  c.skip_ws();
  if (c.peek() == '}') {
    c.take();
  } else {
    while (true) {
      const std::string key = parse_key(c);
      c.skip_ws();
      if (c.peek() != '=') {
        c.fail("expected '=' in inline table");
      }
      c.take();
      if (!table.emplace(key, parse_value(c)).second) {
        c.fail("duplicate key '" + key + "' in inline table");
      }
      c.skip_ws();
      const char ch = c.peek();
      if (ch == ',') {
        c.take();
        continue;
      }
      if (ch == '}') {
        c.take();
        break;
      }
      c.fail("expected ',' or '}' in inline table");
    }
  }
  ConfigValue v(std::move(table));
  v.line = c.line;
  return v;
}

ConfigValue parse_value(Cursor& c) {
  c.skip_ws();
  const char ch = c.peek();
  if (ch == '[') {
    return parse_array(c);
  }
  if (ch == '{') {
    return parse_inline_table(c);
  }
  if (ch == '"') {
    return parse_string(c);
  }
  if (c.text.compare(c.pos, 4, "true") == 0) {
    c.pos += 4;
    ConfigValue v(true);
    v.line = c.line;
    return v;
  }
  if (c.text.compare(c.pos, 5, "false") == 0) {
    c.pos += 5;
    ConfigValue v(false);
    v.line = c.line;
    return v;
  }
  if (ch == '-' || ch == '+' || ch == '.' || std::isdigit(static_cast<unsigned char>(ch))) {
    return parse_number(c);
  }
  c.fail("expected a value");
}

// Strips an unquoted '#' comment.
std::string strip_comment(const std::string& raw) {
  bool in_string = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '"') {
      in_string = !in_string;
    } else if (raw[i] == '#' && !in_string) {
      return raw.substr(0, i);
    }
  }
  return raw;
}

}  // namespace

ConfigDocument parse_config(const std::string& text) {
  ConfigDocument doc;
  std::string section;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;

  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    const std::string line = strip_comment(raw);
    Cursor c{line, 0, line_no};
    c.skip_ws();
    if (c.done()) {
      continue;
    }
    if (c.peek() == '[') {
      c.take();
      section = parse_key(c);
      c.skip_ws();
      if (c.peek() != ']') {
        c.fail("expected ']' after section name");
      }
      c.take();
      c.skip_ws();
      if (!c.done()) {
        c.fail("trailing characters after section header");
      }
      continue;
    }
    const std::string key = parse_key(c);
    c.skip_ws();
    if (c.peek() != '=') {
      c.fail("expected '=' after key");
    }
    c.take();
    ConfigValue value = parse_value(c);
    c.skip_ws();
    if (!c.done()) {
      c.fail("trailing characters after value");
    }
    const std::string full_key = section.empty() ? key : section + "." + key;
    if (!doc.emplace(full_key, std::move(value)).second) {
      throw ConfigParseError("duplicate key '" + full_key + "'", line_no, 1);
    }
  }
  return doc;
}

}  // namespace pacnav
