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

// Exact characteristic polynomials det(xI - A) of integer matrices.
//
// Three independent routes are provided:
//   * berkowitz()          division-free, O(n^4) ring operations
//   * faddeev_leverrier()  trace recursion with exact integer division
//   * char_poly_modular()  Hessenberg reduction modulo word-size primes,
//                          recombined by CRT against a coefficient bound
// char_poly_adjacency() uses the modular route; the others back it in tests.

#ifndef MIXEXT_CHARPOLY_HPP
#define MIXEXT_CHARPOLY_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mixext/error.hpp"
#include "mixext/graph.hpp"
#include "mixext/polynomial.hpp"

namespace mixext {

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<long long>> rows) : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != n_) throw MalformedInput("matrix rows must all have the matrix dimension");
      std::size_t j = 0;
      for (auto v : r) (*this)(i, j++) = T(v);
      ++i;
    }
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = SquareMatrix<BigInt>;

inline IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j)) a(i, j) = 1;
  return a;
}

/// Samuelson-Berkowitz: peels off the leading row/column and multiplies the
/// Toeplitz factors bottom-up.
inline IntPolynomial berkowitz(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> vec{1};  // highest degree first
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t s = n - k - 1;
    std::vector<BigInt> t(s + 2);
    t[0] = 1;
    t[1] = -a(k, k);
    std::vector<BigInt> w(s), next(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = a(k + 1 + i, k);
    for (std::size_t j = 0; j < s; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < s; ++i) dot += a(k, k + 1 + i) * w[i];
      t[j + 2] = -dot;
      if (j + 1 < s) {
        for (std::size_t r = 0; r < s; ++r) {
          BigInt acc = 0;
          for (std::size_t c = 0; c < s; ++c) acc += a(k + 1 + r, k + 1 + c) * w[c];
          next[r] = std::move(acc);
        }
        std::swap(w, next);
      }
    }
    std::vector<BigInt> out(s + 2);
    for (std::size_t i = 0; i < s + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vec.size(); ++j) out[i] += t[i - j] * vec[j];
    vec = std::move(out);
  }
  return IntPolynomial(std::vector<BigInt>(vec.rbegin(), vec.rend()));
}

inline IntPolynomial faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (a(i, l) != 0) acc += a(i, l) * m(l, j);
        next(i, j) = std::move(acc);
      }
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a(i, l) != 0) trace += a(i, l) * next(l, i);
    const BigInt kk = static_cast<long long>(k);
    if (trace % kk != 0) throw ClassificationViolation("Faddeev-LeVerrier trace not divisible");
    c[n - k] = -(trace / kk);
    m = std::move(next);
  }
  return IntPolynomial(std::move(c));
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
    if (n % sp == 0) return n == sp;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 4,759,123,141.
  for (std::uint64_t base : {2ULL, 7ULL, 61ULL}) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^31, descending. Products of two residues fit in 64 bits.
inline const std::vector<std::uint64_t>& modular_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = (std::uint64_t{1} << 31) - 1; out.size() < 512; c -= 2)
      if (is_prime_u32(c)) out.push_back(c);
    return out;
  }();
  return primes;
}

/// det(xI - A) mod p, coefficients constant first.
inline std::vector<std::uint64_t> char_poly_mod(std::vector<std::uint64_t> h, std::size_t n, std::uint64_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
  for (std::size_t j = 0; j + 2 < n; ++j) {
    if (at(j + 1, j) == 0) {
      for (std::size_t i = j + 2; i < n; ++i)
        if (at(i, j) != 0) {
          for (std::size_t k = 0; k < n; ++k) std::swap(at(j + 1, k), at(i, k));
          for (std::size_t k = 0; k < n; ++k) std::swap(at(k, j + 1), at(k, i));
          break;
        }
    }
    if (at(j + 1, j) == 0) continue;
    const std::uint64_t inv = pow_mod(at(j + 1, j), p - 2, p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const std::uint64_t u = mul_mod(at(i, j), inv, p);
      for (std::size_t k = j; k < n; ++k) at(i, k) = (at(i, k) + p - mul_mod(u, at(j + 1, k), p)) % p;
      for (std::size_t k = 0; k < n; ++k) at(k, j + 1) = (at(k, j + 1) + mul_mod(u, at(k, i), p)) % p;
    }
  }
  // polys[i] is the characteristic polynomial of the leading i x i block.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(i + 2, 0);
    const std::uint64_t diag = at(i, i);
    for (std::size_t k = 0; k <= i; ++k) {
      next[k + 1] = (next[k + 1] + polys[i][k]) % p;
      next[k] = (next[k] + p - mul_mod(diag, polys[i][k], p)) % p;
    }
    std::uint64_t prod = 1;
    for (std::size_t j = i; j-- > 0;) {
      prod = mul_mod(prod, at(j + 1, j), p);
      if (prod == 0) break;
      const std::uint64_t coef = mul_mod(at(j, i), prod, p);
      for (std::size_t k = 0; k < polys[j].size(); ++k)
        next[k] = (next[k] + p - mul_mod(coef, polys[j][k], p)) % p;
    }
    polys[i + 1] = std::move(next);
  }
  return polys[n];
}

inline std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Modular route. Eigenvalues are bounded by the largest absolute row sum rho,
/// so every coefficient is at most (1 + rho)^n in absolute value; primes are
/// accumulated until their product exceeds twice that bound.
inline IntPolynomial char_poly_modular(const IntMatrix& a) {
  const std::size_t n = a.size();
  BigInt rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(a(i, j));
    if (s > rho) rho = s;
  }
  const BigInt bound = 2 * boost::multiprecision::pow(BigInt(1 + rho), static_cast<unsigned>(n));

  std::vector<BigInt> value(n + 1, BigInt(0));
  BigInt modulus = 1;
  for (std::uint64_t p : detail::modular_primes()) {
    std::vector<std::uint64_t> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h[i * n + j] = detail::reduce_mod(a(i, j), p);
    const auto residues = detail::char_poly_mod(std::move(h), n, p);
    // Garner step: value += modulus * ((r - value) / modulus mod p)
    const std::uint64_t inv = detail::pow_mod(detail::reduce_mod(modulus, p), p - 2, p);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::uint64_t cur = detail::reduce_mod(value[k], p);
      const std::uint64_t t = detail::mul_mod((residues[k] + p - cur) % p, inv, p);
      value[k] += modulus * t;
    }
    modulus *= p;
    if (modulus > bound) break;
  }
  if (modulus <= bound) throw CapacityError("not enough CRT primes for matrix of order " + std::to_string(n));
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return IntPolynomial(std::move(value));
}

/// Characteristic polynomial of an arbitrary (small) integer matrix.
inline IntPolynomial char_poly(const IntMatrix& a) { return berkowitz(a); }

inline IntPolynomial char_poly_adjacency(const Graph& g) { return char_poly_modular(adjacency_matrix(g)); }

}  // namespace mixext

#endif  // MIXEXT_CHARPOLY_HPP
