#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "gwalk/errors.hpp"

namespace gwalk {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }

  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division a = q*b + r with deg r < deg b. For integer
  /// coefficients the divisor must be monic (or divide exactly).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<T> rem = a.coeffs_;
    const long db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    for (long k = a.degree(); k >= db; --k) {
      const T& top = rem[static_cast<std::size_t>(k)];
      if (top == 0) continue;
      T q = top / b.leading();
      quot[static_cast<std::size_t>(k - db)] = q;
      for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= q * b.coeffs_[i];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
      const T& c = p.coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      T mag = c < 0 ? T(-c) : c;
      if (mag != 1 || k == 0) os << mag;
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.emplace_back(z);
  return RatPolynomial(std::move(c));
}

/// Returns (g, s) with s*a = g (mod b), g = gcd(a, b) made monic.
inline std::pair<RatPolynomial, RatPolynomial> extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0{BigRational(1)}, s1{};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  BigRational lead = r0.leading();
  RatPolynomial scale{BigRational(1) / lead};
  return {r0 * scale, s0 * scale};
}

/// Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d of n.
inline IntPolynomial cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionViolation("cyclotomic_polynomial: n must be >= 1");
  IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial{BigInt(1)};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace gwalk
