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

#ifndef MIXEXT_SPECTRAL_HPP
#define MIXEXT_SPECTRAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/graph.hpp"
#include "mixext/polynomial.hpp"

namespace mixext {

/// Coefficients of the cubic x^3 - b x^2 - c x + d.
struct Bcd {
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const Bcd&, const Bcd&) = default;
  friend auto operator<=>(const Bcd&, const Bcd&) = default;

  std::string to_string() const {
    return "(" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
  }

  IntPolynomial cubic() const { return IntPolynomial{d, -c, -b, 1}; }
};

/// p(x) = (x^3 - b x^2 - c x + d) (x+1)^b x^(n-b-3)
struct SpectralSignature {
  std::int64_t n = 0;
  Bcd bcd;

  friend bool operator==(const SpectralSignature&, const SpectralSignature&) = default;

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(bcd.b) + "," + std::to_string(bcd.c) + "," +
           std::to_string(bcd.d) + ")";
  }

  IntPolynomial polynomial() const {
    return bcd.cubic() * IntPolynomial::linear_power(-1, static_cast<std::size_t>(bcd.b)) *
           IntPolynomial::monomial(static_cast<std::size_t>(n - bcd.b - 3));
  }
};

enum class Membership {
  kInGpp,        // signature found and all sign conditions hold
  kInGNotGpp,    // residual of degree <= 3 but not a qualifying cubic
  kNotInG,       // more than three eigenvalues outside {0, -1}
};

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::kInGpp: return "in-G''";
    case Membership::kInGNotGpp: return "in-G-not-G''";
    case Membership::kNotInG: return "not-in-G";
  }
  return "?";
}

struct SignatureVerdict {
  Membership membership = Membership::kNotInG;
  std::optional<SpectralSignature> signature;  // set iff membership == kInGpp
  std::size_t zero_multiplicity = 0;
  std::size_t minus_one_multiplicity = 0;
  IntPolynomial residual;

  bool in_gpp() const noexcept { return membership == Membership::kInGpp; }
};

/// Strips x^k and (x+1)^j by exact synthetic division and classifies the rest.
inline SignatureVerdict signature_from_charpoly(const IntPolynomial& p, std::size_t n) {
  if (p.degree() != static_cast<long>(n)) throw MalformedInput("polynomial degree does not match the order");
  if (!p.is_monic()) throw MalformedInput("characteristic polynomial must be monic");

  SignatureVerdict v;
  v.residual = p;
  v.zero_multiplicity = v.residual.strip_linear(0);
  v.minus_one_multiplicity = v.residual.strip_linear(-1);
  const long deg = v.residual.degree();
  if (deg > 3) {
    v.membership = Membership::kNotInG;
    return v;
  }
  v.membership = Membership::kInGNotGpp;
  if (deg != 3) return v;

  const BigInt b = -v.residual.coefficient(2);
  const BigInt c = -v.residual.coefficient(1);
  const BigInt d = v.residual.coefficient(0);
  const BigInt q_minus_one = -1 - b + c + d;
  if (b < 0 || d <= 0 || q_minus_one <= 0) return v;
  if (b != static_cast<long long>(v.minus_one_multiplicity)) return v;

  v.membership = Membership::kInGpp;
  v.signature = SpectralSignature{static_cast<std::int64_t>(n), Bcd{to_int64(b), to_int64(c), to_int64(d)}};
  return v;
}

struct SignProfile {
  int positive_roots = 0;  // counted with multiplicity
  bool has_root_below_minus_one = false;

  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rational>;  // constant first

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rat_remainder(RatPoly num, const RatPoly& den) {
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    const Rational f = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

/// Exact quotient num / den (the remainder is discarded).
inline RatPoly rat_quotient(RatPoly num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  RatPoly quot(num.size() - den.size() + 1);
  while (num.size() >= den.size() && !num.empty()) {
    const Rational f = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return quot;
}

inline Rational rat_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sign_at_infinity(const RatPoly& p, bool negative) {
  if (p.empty()) return 0;
  int s = p.back() > 0 ? 1 : -1;
  if (negative && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

/// Number of distinct real roots in (lo, hi]; an absent bound means infinity.
inline int sturm_count(const RatPoly& poly, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  std::vector<RatPoly> chain{poly};
  RatPoly d;
  for (std::size_t i = 1; i < poly.size(); ++i) d.push_back(poly[i] * static_cast<long long>(i));
  trim(d);
  while (!d.empty()) {
    chain.push_back(d);
    RatPoly r = rat_remainder(chain[chain.size() - 2], chain.back());
    for (auto& x : r) x = -x;
    d = std::move(r);
  }
  auto variations = [&](const std::optional<Rational>& at, bool neg_inf) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
      int s = 0;
      if (at) {
        const Rational val = rat_eval(q, *at);
        s = val > 0 ? 1 : (val < 0 ? -1 : 0);
      } else {
        s = sign_at_infinity(q, neg_inf);
      }
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(lo, true) - variations(hi, false);
}

}  // namespace detail

/// Root-sign profile of the cubic from exact integer tests.
///
/// When all three roots are real (nonnegative discriminant), d > 0 and b >= 0,
/// the product of the roots is -d < 0 and their sum b is nonnegative, so
/// exactly two roots are positive; the negative root is below -1 iff
/// q(-1) = -1 - b + c + d > 0. Otherwise a Sturm chain over the rationals
/// counts roots, with repeated roots recovered from gcd(q, q').
inline SignProfile cubic_sign_profile(const Bcd& s) {
  const BigInt b = s.b, c = s.c, d = s.d;
  const BigInt q_minus_one = -1 - b + c + d;
  // discriminant of x^3 + B x^2 + C x + D with B = -b, C = -c, D = d
  const BigInt B = -b, C = -c, D = d;
  const BigInt disc = 18 * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * C * C * C - 27 * D * D;
  if (disc >= 0 && d > 0 && b >= 0) return SignProfile{2, q_minus_one > 0};

  using detail::Rational;
  const detail::RatPoly q{Rational(d), Rational(-c), Rational(-b), Rational(1)};

  // Repeated roots of an integer cubic are rational roots of g = gcd(q, q').
  // Sturm counting runs on the squarefree part q / g, which stays valid when a
  // root sits on an interval end.
  detail::RatPoly g = q, h{Rational(-c), Rational(-2 * b), Rational(3)};
  while (!h.empty()) {
    auto r = detail::rat_remainder(g, h);
    g = std::move(h);
    h = std::move(r);
  }
  const detail::RatPoly squarefree = g.size() >= 2 ? detail::rat_quotient(q, g) : q;

  SignProfile out;
  out.positive_roots = detail::sturm_count(squarefree, Rational(0), std::nullopt);
  // roots in (-inf, -1): count on (-inf, -1] minus a root exactly at -1
  int below = detail::sturm_count(squarefree, std::nullopt, Rational(-1));
  if (detail::rat_eval(squarefree, Rational(-1)) == 0) --below;

  if (g.size() >= 2) {
    // g = lead * (x - rho)^k and rho has multiplicity k + 1 in q
    const std::size_t k = g.size() - 1;
    const Rational rho = -g[k - 1] / (g[k] * static_cast<long long>(k));
    const int extra = static_cast<int>(k);
    if (rho > 0) out.positive_roots += extra;
    if (rho < -1) below += extra;
  }
  out.has_root_below_minus_one = below > 0;
  return out;
}

/// Quotient matrix of the equitable partition of a path mixed extension:
/// Q[i][i] = eps_i (|t_i| - 1), Q[i][i±1] = |t_{i±1}|.
inline IntMatrix quotient_matrix(const SignedTuple& tuple) {
  const std::size_t m = tuple.size();
  if (m < 2) throw InvalidDescriptor("a path extension needs at least two parts");
  IntMatrix q(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (tuple.is_clique_part(i)) q(i, i) = static_cast<long long>(tuple.part_size(i) - 1);
    if (i > 0) q(i, i - 1) = static_cast<long long>(tuple.part_size(i - 1));
    if (i + 1 < m) q(i, i + 1) = static_cast<long long>(tuple.part_size(i + 1));
  }
  return q;
}

inline IntMatrix quotient_matrix(const SignedTuple& tuple, std::size_t base_path_length) {
  if (tuple.size() != base_path_length) throw InvalidDescriptor("tuple length does not match the base path");
  return quotient_matrix(tuple);
}

/// Residual cubic of a polynomial after removing all factors x and x+1.
inline std::optional<Bcd> residual_cubic(IntPolynomial p) {
  p.strip_linear(0);
  p.strip_linear(-1);
  if (p.degree() != 3 || !p.is_monic()) return std::nullopt;
  return Bcd{to_int64(-p.coefficient(2)), to_int64(-p.coefficient(1)), to_int64(p.coefficient(0))};
}

}  // namespace mixext

#endif  // MIXEXT_SPECTRAL_HPP
