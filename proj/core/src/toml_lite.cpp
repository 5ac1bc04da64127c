#include "cookiedim/toml_lite.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "cookiedim/errors.hpp"

namespace cookiedim {

namespace {

using nlohmann::json;

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("toml line " + std::to_string(line) + ": " + msg);
  }
};

// spaces and tabs only; newlines are significant except inside arrays
void skip_blanks(Cursor& c) {
  while (!c.done() && (c.peek() == ' ' || c.peek() == '\t')) c.take();
}

void skip_comment(Cursor& c) {
  if (!c.done() && c.peek() == '#')
    while (!c.done() && c.peek() != '\n') c.take();
}

// blanks, comments, and newlines; used inside arrays and between statements
void skip_filler(Cursor& c) {
  for (;;) {
    skip_blanks(c);
    skip_comment(c);
    if (!c.done() && c.peek() == '\n') {
      c.take();
      continue;
    }
    return;
  }
}

void expect_line_end(Cursor& c) {
  skip_blanks(c);
  skip_comment(c);
  if (c.done()) return;
  if (c.peek() != '\n') c.fail("unexpected trailing content");
  c.take();
}

bool bare_key_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
}

std::string parse_bare_key(Cursor& c) {
  std::string key;
  while (!c.done() && bare_key_char(c.peek())) key.push_back(c.take());
  if (key.empty()) c.fail("expected a key");
  return key;
}

std::string parse_basic_string(Cursor& c) {
  c.take();  // opening quote
  std::string out;
  for (;;) {
    if (c.done() || c.peek() == '\n') c.fail("unterminated string");
    char ch = c.take();
    if (ch == '"') return out;
    if (ch == '\\') {
      if (c.done()) c.fail("unterminated escape");
      char esc = c.take();
      switch (esc) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        default: c.fail("unsupported escape sequence");
      }
    } else {
      out.push_back(ch);
    }
  }
}

json parse_value(Cursor& c);

json parse_array(Cursor& c) {
  c.take();  // '['
  json arr = json::array();
  for (;;) {
    skip_filler(c);
    if (c.done()) c.fail("unterminated array");
    if (c.peek() == ']') {
      c.take();
      return arr;
    }
    arr.push_back(parse_value(c));
    skip_filler(c);
    if (c.done()) c.fail("unterminated array");
    if (c.peek() == ',') {
      c.take();
      continue;
    }
    if (c.peek() == ']') {
      c.take();
      return arr;
    }
    c.fail("expected ',' or ']' in array");
  }
}

json parse_inline_table(Cursor& c) {
  c.take();  // '{'
  json obj = json::object();
  skip_blanks(c);
  if (!c.done() && c.peek() == '}') {
    c.take();
    return obj;
  }
  for (;;) {
    skip_blanks(c);
    std::string key = parse_bare_key(c);
    skip_blanks(c);
    if (c.done() || c.take() != '=') c.fail("expected '=' in inline table");
    skip_blanks(c);
    obj[key] = parse_value(c);
    skip_blanks(c);
    if (c.done()) c.fail("unterminated inline table");
    char ch = c.take();
    if (ch == '}') return obj;
    if (ch != ',') c.fail("expected ',' or '}' in inline table");
  }
}

json parse_number(Cursor& c) {
  std::string tok;
  bool is_float = false;
  while (!c.done()) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' ||
        ch == '-') {
      tok.push_back(c.take());
    } else if (ch == '.' || ch == 'e' || ch == 'E') {
      is_float = true;
      tok.push_back(c.take());
    } else if (ch == '_') {
      c.take();  // TOML digit separator
    } else {
      break;
    }
  }
  if (tok.empty()) c.fail("expected a value");
  std::size_t used = 0;
  try {
    if (is_float) {
      double v = std::stod(tok, &used);
      if (used != tok.size()) c.fail("malformed number '" + tok + "'");
      return v;
    }
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) c.fail("malformed number '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    c.fail("malformed number '" + tok + "'");
  }
}

json parse_value(Cursor& c) {
  if (c.done()) c.fail("expected a value");
  char ch = c.peek();
  if (ch == '"') return parse_basic_string(c);
  if (ch == '[') return parse_array(c);
  if (ch == '{') return parse_inline_table(c);
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    std::string word = parse_bare_key(c);
    if (word == "true") return true;
    if (word == "false") return false;
    c.fail("unexpected token '" + word + "'");
  }
  return parse_number(c);
}

std::vector<std::string> parse_header_path(Cursor& c) {
  std::vector<std::string> path;
  for (;;) {
    skip_blanks(c);
    path.push_back(parse_bare_key(c));
    skip_blanks(c);
    if (!c.done() && c.peek() == '.') {
      c.take();
      continue;
    }
    return path;
  }
}

// walk one path segment; an array-of-tables segment refers to its last element
json* descend(json* node, const std::string& seg, Cursor& c) {
  json& child = (*node)[seg];
  if (child.is_null()) child = json::object();
  if (child.is_array()) {
    if (child.empty()) c.fail("empty table array '" + seg + "'");
    return &child.back();
  }
  if (!child.is_object()) c.fail("key '" + seg + "' is not a table");
  return &child;
}

}  // namespace

nlohmann::json parse_toml(const std::string& text) {
  Cursor c{text};
  json root = json::object();
  json* current = &root;

  for (;;) {
    skip_filler(c);
    if (c.done()) return root;

    if (c.peek() == '[') {
      c.take();
      bool array_header = false;
      if (!c.done() && c.peek() == '[') {
        c.take();
        array_header = true;
      }
      std::vector<std::string> path = parse_header_path(c);
      if (c.done() || c.take() != ']') c.fail("expected ']' in header");
      if (array_header && (c.done() || c.take() != ']'))
        c.fail("expected ']]' in header");
      expect_line_end(c);

      json* node = &root;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        node = descend(node, path[i], c);
      json& last = (*node)[path.back()];
      if (array_header) {
        if (last.is_null()) last = json::array();
        if (!last.is_array())
          c.fail("'" + path.back() + "' is not a table array");
        last.push_back(json::object());
        current = &last.back();
      } else {
        if (last.is_null()) last = json::object();
        if (!last.is_object()) c.fail("'" + path.back() + "' is not a table");
        current = &last;
      }
      continue;
    }

    std::string key = parse_bare_key(c);
    skip_blanks(c);
    if (c.done() || c.take() != '=') c.fail("expected '=' after key");
    skip_blanks(c);
    if ((*current).contains(key)) c.fail("duplicate key '" + key + "'");
    (*current)[key] = parse_value(c);
    expect_line_end(c);
  }
}

nlohmann::json parse_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_toml(ss.str());
}

}  // namespace cookiedim
