#include "likepowers/poly_text.hpp"

#include <cctype>
#include <string>

namespace likepowers {

namespace {

constexpr std::size_t kMaxExponent = 100000;

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Removes one layer of parentheses when they enclose the whole text.
std::string_view strip_parens(std::string_view s) {
  s = strip(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = strip(s.substr(1, s.size() - 2));
  }
  return s;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::vector<Integer> coeffs;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Integer coeff = 1;
      bool have_number = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = Integer(digits(), 10);
        have_number = true;
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_space();
          if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::size_t exponent = 0;
      if (!at_end() && peek() == 'x') {
        ++pos_;
        exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          std::string e = digits();
          if (e.size() > 6 || std::stoul(e) > kMaxExponent) fail("exponent too large");
          exponent = std::stoul(e);
        }
      } else if (!have_number) {
        fail("expected a coefficient or 'x'");
      }
      skip_space();
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += negative ? Integer(-coeff) : coeff;
    }
    return Polynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial parse_list(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item(strip(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    try {
      coeffs.push_back(parse_integer(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient '" + item + "' in '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  text = strip_parens(text);
  if (text.find(',') != std::string_view::npos) return parse_list(text);
  return ExpressionParser(text).parse();
}

RationalGF parse_gf(std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw ParseError("more than one '/' in '" + std::string(text) + "'");
      slash = i;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return RationalGF::polynomial(parse_polynomial(text));
  Polynomial num = parse_polynomial(text.substr(0, slash));
  Polynomial den = parse_polynomial(text.substr(slash + 1));
  try {
    return RationalGF(std::move(num), std::move(den));
  } catch (const std::domain_error& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string to_coefficient_list(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += c.get_str();
  }
  return out;
}

}  // namespace likepowers
