#pragma once

// Exact single-variable Laurent polynomials with arbitrary-precision integer
// coefficients. Used for the Kauffman bracket (variable A) and the Jones
// polynomial (variable t).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotslope/error.hpp"

namespace knotslope {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPolynomial {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(char variable) : variable_(variable) {}

  static LaurentPolynomial constant(BigInt c, char variable = 't') {
    return monomial(std::move(c), 0, variable);
  }

  static LaurentPolynomial monomial(BigInt c, int exponent, char variable = 't') {
    LaurentPolynomial p(variable);
    if (c != 0) p.terms_.emplace(exponent, std::move(c));
    return p;
  }

  char variable() const noexcept { return variable_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int min_degree() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "min_degree of zero polynomial");
    return terms_.begin()->first;
  }

  int max_degree() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "max_degree of zero polynomial");
    return terms_.rbegin()->first;
  }

  void add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out(a.variable_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

  LaurentPolynomial pow(unsigned k) const {
    LaurentPolynomial out = constant(1, variable_);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  /// Multiply by x^shift.
  LaurentPolynomial shifted(int shift) const {
    LaurentPolynomial out(variable_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
  }

  /// x -> x^{-1}
  LaurentPolynomial inverted_variable() const {
    LaurentPolynomial out(variable_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  /// Substitute x = y^{1/divisor}; every exponent must be divisible by divisor.
  /// A negative divisor also inverts (t = A^{-4} is divisor -4).
  LaurentPolynomial substitute_root(int divisor, char new_variable) const {
    LaurentPolynomial out(new_variable);
    for (const auto& [e, c] : terms_) {
      if (e % divisor != 0)
        throw Error(ErrorKind::NonIntegralExponent,
                    "exponent " + std::to_string(e) + " not divisible by " + std::to_string(divisor));
      out.terms_.emplace(e / divisor, c);
    }
    return out;
  }

  BigInt evaluate_at_minus_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += (e % 2 == 0) ? c : BigInt(-c);
    return sum;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Sorted `coeff*x^exp` term list, e.g. `-1*t^-4 + 1*t^-3 + 1*t^-1`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        out += c.str();
      } else {
        out += c < 0 ? " - " : " + ";
        out += (c < 0 ? BigInt(-c) : c).str();
      }
      out += '*';
      out += variable_;
      out += '^';
      out += std::to_string(e);
      first = false;
    }
    return out;
  }

  /// Inverse of to_string. Whitespace between terms is optional.
  static LaurentPolynomial parse(std::string_view text, char variable = 't') {
    LaurentPolynomial out(variable);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::MalformedSyntax,
                  "polynomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(i));
    };
    auto read_int = [&](bool allow_sign) {
      std::string digits;
      if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) digits += text[i++];
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
      if (digits.empty() || digits == "-" || digits == "+") fail("expected integer");
      return digits;
    };
    skip_ws();
    if (text.substr(i) == "0") return out;
    bool first = true;
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      int sign = 1;
      if (!first) {
        if (text[i] == '+') {
          ++i;
        } else if (text[i] == '-') {
          sign = -1;
          ++i;
        } else {
          fail("expected '+' or '-'");
        }
        skip_ws();
      }
      BigInt c(read_int(true));
      if (i >= text.size() || text[i] != '*') fail("expected '*'");
      ++i;
      if (i >= text.size() || text[i] != variable) fail(std::string("expected variable ") + variable);
      ++i;
      if (i >= text.size() || text[i] != '^') fail("expected '^'");
      ++i;
      int e = std::stoi(read_int(true));
      out.add_term(e, sign * c);
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  char variable_ = 't';
  Terms terms_;
};

}  // namespace knotslope
