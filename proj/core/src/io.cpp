#include "bchyper/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

#include "bchyper/errors.hpp"

namespace bchyper {

namespace {

std::string format_g17(const char* pattern, double a, double b, double c,
                       double d) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiComplex parse() {
    BiComplex v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse bicomplex '" + std::string(s_) + "': " +
                     why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool digit_at(std::size_t i) const {
    return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  BiComplex expr() {
    BiComplex v;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      v = c == '-' ? -term() : term();
    } else {
      v = term();
    }
    for (;;) {
      c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  BiComplex term() {
    BiComplex v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        BiComplex d = unary();
        try {
          v = v / d;
        } catch (const NullConeError&) {
          fail("division by a null-cone value");
        }
      } else if (starts_factor()) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  BiComplex unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return factor();
  }

  BiComplex factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiComplex v = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (c == '.' || std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return unit();
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  BiComplex number() {
    std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (digit_at(pos_)) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      bool exponent = false;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) {
        exponent = digit_at(q + 1);
      } else if (digit_at(q)) {
        bool unit_like = s_[pos_] == 'e' && (s_[q] == '1' || s_[q] == '2') &&
                         !digit_at(q + 1);
        exponent = !unit_like;
      }
      if (exponent) {
        pos_ = q;
        if (s_[pos_] == '+' || s_[pos_] == '-') ++pos_;
        while (digit_at(pos_)) ++pos_;
      }
    }
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == ".") fail("malformed number");
    char* end = nullptr;
    double x = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail("malformed number");
    return x;
  }

  BiComplex unit() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string_view w = s_.substr(start, pos_ - start);
    if (w == "i" || w == "i1") return units::i1;
    if (w == "j" || w == "i2") return units::i2;
    if (w == "k") return units::k;
    if (w == "e1") return units::e1;
    if (w == "e2") return units::e2;
    pos_ = start;
    fail("unknown unit '" + std::string(w) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Complex json_complex(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(std::string("field '") + key + "' must be [re, im]");
  }
  return {v.at(0).get<double>(), v.at(1).get<double>()};
}

BiComplex parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON bicomplex: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("JSON bicomplex must be an object");
  try {
    if (j.contains("re1") || j.contains("re2")) {
      Complex z = j.contains("re1") ? json_complex(j, "re1") : Complex{};
      Complex zp = j.contains("re2") ? json_complex(j, "re2") : Complex{};
      return {z, zp};
    }
    if (j.contains("idem1") && j.contains("idem2")) {
      return BiComplex::from_idempotent(json_complex(j, "idem1"),
                                        json_complex(j, "idem2"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON bicomplex: ") + e.what());
  }
  throw ParseError("JSON bicomplex needs re1/re2 or idem1/idem2");
}

}  // namespace

std::string to_string(const BiComplex& z) {
  return format_g17("%.17g%+.17gi1%+.17gi2%+.17gk", z.re1().real(),
                    z.re1().imag(), z.re2().real(), z.re2().imag());
}

std::string to_string(const Hyperbolic& h) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gk", h.x(), h.y());
  return buf;
}

std::string to_json(const BiComplex& z) {
  nlohmann::json j = {{"re1", {z.re1().real(), z.re1().imag()}},
                      {"re2", {z.re2().real(), z.re2().imag()}}};
  return j.dump();
}

BiComplex parse_bicomplex(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty bicomplex literal");
  if (text[first] == '{') return parse_json(text);
  return Parser(text).parse();
}

}  // namespace bchyper
