// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXEXT_POLYNOMIAL_HPP
#define MIXEXT_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixext/error.hpp"

namespace mixext {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ClassificationViolation("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

/// Dense integer polynomial, constant term first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

  IntPolynomial(std::initializer_list<long long> coefficients) {
    for (auto v : coefficients) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = 1;
    return IntPolynomial(std::move(c));
  }

  /// (x - root)^power
  static IntPolynomial linear_power(long long root, std::size_t power) {
    IntPolynomial p{1};
    const IntPolynomial f{-root, 1};
    for (std::size_t i = 0; i < power; ++i) p = p * f;
    return p;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long long>(k));
    return IntPolynomial(std::move(d));
  }

  /// Divides by (x - root) when the remainder is zero; returns false and leaves
  /// the polynomial unchanged otherwise.
  bool try_divide_linear(long long root) {
    if (c_.empty()) return false;
    std::vector<BigInt> q(c_.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
      BigInt cur = c_[k] + carry * root;
      if (k == 0) {
        if (cur != 0) return false;
      } else {
        q[k - 1] = cur;
      }
      carry = cur;
    }
    c_ = std::move(q);
    trim();
    return true;
  }

  /// Removes the maximal power of (x - root) and returns its exponent.
  std::size_t strip_linear(long long root) {
    std::size_t k = 0;
    while (degree() >= 1 && try_divide_linear(root)) ++k;
    return k;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> r = a.c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest degree first, e.g. "x^3 - 2*x".
  std::string pretty() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigInt& v = c_[k];
      if (v == 0) continue;
      const bool neg = v < 0;
      const BigInt mag = neg ? BigInt(-v) : v;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (k == 0 || mag != 1) {
        s += mag.str();
        if (k > 0) s += '*';
      }
      if (k >= 1) s += "x";
      if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
  }

  /// Stable text form: "deg=<d>\n" then the coefficients, constant first.
  std::string to_text() const {
    std::string s = "deg=" + std::to_string(degree()) + "\n";
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k) s += ' ';
      s += c_[k].str();
    }
    return s + "\n";
  }

  static IntPolynomial from_text(std::string_view text) {
    const std::string buf(text);
    std::istringstream in(buf);
    std::string header;
    if (!std::getline(in, header) || header.rfind("deg=", 0) != 0)
      throw ParseError("polynomial text must start with deg=", 0);
    long deg = 0;
    try {
      deg = std::stol(header.substr(4));
    } catch (const std::exception&) {
      throw ParseError("bad degree in polynomial header", 4);
    }
    std::vector<BigInt> c;
    std::string tok;
    while (in >> tok) {
      try {
        c.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + tok + "'", header.size() + 1);
      }
    }
    IntPolynomial p(std::move(c));
    if (p.degree() != deg) throw ParseError("coefficient count does not match deg= header", header.size() + 1);
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

}  // namespace mixext

#endif  // MIXEXT_POLYNOMIAL_HPP
