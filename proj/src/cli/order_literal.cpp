#include "order_literal.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "qspline/error.hpp"

namespace qspline::cli {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw PreconditionError("invalid order '" + std::string(text) + "': " + why);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads digits[.digits] or .digits at pos.
bool read_decimal(const std::string& s, std::size_t& pos, double& out) {
  const std::size_t start = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
  }
  if (pos == start || (pos == start + 1 && s[start] == '.')) {
    pos = start;
    return false;
  }
  const auto r = std::from_chars(s.data() + start, s.data() + pos, out);
  return r.ec == std::errc() && r.ptr == s.data() + pos;
}

// Positional notation with 15 significant digits, trailing zeros trimmed.
std::string positional(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  std::string out = buf;
  if (out.find('e') == std::string::npos) return out;
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const int decimals = std::clamp(14 - magnitude, 0, 340);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  out = buf;
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace

Quaternion parse_order(std::string_view text) {
  // Whitespace may separate terms but not split one.
  std::string s;
  bool gap = false;
  for (const char c : text) {
    if (c == ' ' || c == '\t') {
      gap = !s.empty();
      continue;
    }
    if (gap && s.back() != '+' && s.back() != '-' && c != '+' && c != '-') fail(text, "whitespace inside a term");
    gap = false;
    s.push_back(c);
  }
  if (s.empty()) fail(text, "empty literal");

  std::array<double, 4> value{};
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      fail(text, "expected + or - before term at position " + std::to_string(pos));
    }
    first = false;

    double coefficient = 1.0;
    const bool has_number = read_decimal(s, pos, coefficient);
    if (has_number && pos < s.size() && s[pos] == '/') {
      ++pos;
      double denominator = 0.0;
      if (!read_decimal(s, pos, denominator)) fail(text, "missing denominator");
      if (denominator == 0.0) fail(text, "zero denominator");
      coefficient /= denominator;
    }
    int component = 0;
    if (pos < s.size() && s[pos] == 'e') {
      if (pos + 1 >= s.size() || s[pos + 1] < '1' || s[pos + 1] > '3') fail(text, "expected e1, e2 or e3");
      component = s[pos + 1] - '0';
      pos += 2;
    } else if (!has_number) {
      fail(text, "expected a number or unit at position " + std::to_string(pos));
    }
    if (seen[component]) fail(text, "component given twice");
    seen[component] = true;
    value[component] = sign * coefficient;
  }
  return {value[0], value[1], value[2], value[3]};
}

std::string format_order(const Quaternion& q) {
  std::string out = positional(q.a == 0.0 ? 0.0 : q.a);
  for (int k = 1; k <= 3; ++k) {
    const double c = q[k];
    if (c == 0.0) continue;
    out += c < 0.0 ? "-" : "+";
    if (std::abs(c) != 1.0) out += positional(std::abs(c));
    out += "e" + std::to_string(k);
  }
  return out;
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_value(const Quaternion& q) {
  std::string out = format_number(q.a);
  for (int k = 1; k <= 3; ++k) {
    const double c = q[k];
    out += (std::signbit(c) && c != 0.0) ? " - " : " + ";
    out += format_number(std::abs(c)) + " e" + std::to_string(k);
  }
  return out;
}

}  // namespace qspline::cli
