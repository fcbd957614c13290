#pragma once

#include <cstdio>
#include <string>
#include <vector>

// Deterministic text output: every floating-point number is rendered with
// %.17g (full round-trip precision), keys keep insertion order, newlines are
// '\n'. Identical configurations therefore produce byte-identical files.

namespace fracstefan_cli {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

class Json {
public:
  Json& num(const std::string& k, double v) { return raw(k, fmt17(v)); }
  Json& integer(const std::string& k, long long v) { return raw(k, std::to_string(v)); }
  Json& boolean(const std::string& k, bool v) { return raw(k, v ? "true" : "false"); }
  Json& text(const std::string& k, const std::string& v) { return raw(k, json_quote(v)); }
  Json& raw(const std::string& k, const std::string& v) {
    if (!body_.empty()) body_ += ',';
    body_ += json_quote(k) + ":" + v;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

private:
  std::string body_;
};

inline std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt17(v[i]);
  }
  return out + "]";
}

inline std::string json_array_raw(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i];
  }
  return out + "]";
}

class Csv {
public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }
  const std::string& str() const { return text_; }

private:
  std::string text_;
};

}  // namespace fracstefan_cli
