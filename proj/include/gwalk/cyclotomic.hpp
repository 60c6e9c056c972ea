#pragma once

// Exact arithmetic in Q(zeta_n) = Q[x] / Phi_n(x).
//
// An element is stored as its unique remainder modulo Phi_n, i.e. a vector
// of phi(n) rationals c_0 .. c_{phi-1} meaning sum c_k zeta^k. Because Phi_n
// is irreducible this representation is canonical: two elements are equal
// exactly when their coefficient vectors are equal.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gwalk/errors.hpp"
#include "gwalk/polynomial.hpp"

namespace gwalk {

/// Per-n reduction data shared by every CycNum of that field.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned n)
      : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_polynomial(n)) {
    // x^k mod Phi_n for k < max(n, 2*phi - 1): covers zeta powers and the
    // overflow terms of a schoolbook product.
    const std::size_t count = std::max<std::size_t>(n, 2 * phi_ - 1);
    powers_.reserve(count);
    std::vector<BigInt> one(phi_, BigInt(0));
    one[0] = 1;
    powers_.push_back(one);
    std::vector<BigInt> x = one;
    for (std::size_t k = 1; k < count; ++k) {
      // x <- x * X mod Phi_n
      BigInt carry = x[phi_ - 1];
      for (std::size_t i = phi_ - 1; i > 0; --i) x[i] = x[i - 1];
      x[0] = 0;
      if (carry != 0)
        for (std::size_t i = 0; i < phi_; ++i) x[i] -= carry * modulus_[i];
      powers_.push_back(x);
    }
  }

  unsigned n() const { return n_; }
  unsigned degree() const { return phi_; }
  const IntPolynomial& modulus() const { return modulus_; }

  /// Coefficients of x^k mod Phi_n, 0 <= k < table size.
  const std::vector<BigInt>& power(std::size_t k) const { return powers_[k]; }
  std::size_t power_table_size() const { return powers_.size(); }

  /// Shared instance for n; instances live for the whole program.
  static const CyclotomicField& get(unsigned n) {
    if (n == 0) throw PreconditionViolation("cyclotomic field needs n >= 1");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[n];
    if (!slot) slot = std::make_unique<CyclotomicField>(n);
    return *slot;
  }

 private:
  unsigned n_;
  unsigned phi_;
  IntPolynomial modulus_;
  std::vector<std::vector<BigInt>> powers_;
};

class CycNum {
 public:
  /// Zero of Q(zeta_n).
  explicit CycNum(unsigned n) : field_(&CyclotomicField::get(n)), coeffs_(field_->degree(), BigRational(0)) {}

  CycNum(unsigned n, const BigRational& r) : CycNum(n) {
    coeffs_[0] = r;
    coeffs_[0].canonicalize();
  }

  /// From an arbitrary (unreduced) polynomial in zeta.
  CycNum(unsigned n, const std::vector<BigRational>& poly) : CycNum(n) {
    BigRational c;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      c = poly[k];
      c.canonicalize();
      add_reduced_term(k, c);
    }
  }

  static CycNum zero(unsigned n) { return CycNum(n); }
  static CycNum one(unsigned n) { return CycNum(n, BigRational(1)); }

  /// zeta_n^(k mod n).
  static CycNum zeta_pow(unsigned n, long long k) {
    if (n < 2) throw PreconditionViolation("zeta_pow needs n >= 2");
    CycNum r(n);
    long long e = k % static_cast<long long>(n);
    if (e < 0) e += n;
    r.add_reduced_term(static_cast<std::size_t>(e), BigRational(1));
    return r;
  }

  unsigned modulus() const { return field_->n(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  CycNum& operator+=(const CycNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  CycNum& operator-=(const CycNum& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  /// this += a * b without materializing the product.
  void add_product(const CycNum& a, const CycNum& b) {
    check_same_field(a);
    check_same_field(b);
    const std::size_t d = coeffs_.size();
    BigRational t;
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.coeffs_[j] == 0) continue;
        t = a.coeffs_[i] * b.coeffs_[j];
        add_reduced_term(i + j, t);
      }
    }
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.check_same_field(b);
    CycNum r(a.modulus());
    r.add_product(a, b);
    return r;
  }

  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycNum scaled(const BigRational& s) const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
  CycNum inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(modulus()) + ")");
    RatPolynomial a(coeffs_);
    auto [g, s] = extended_gcd(a, to_rational(field_->modulus()));
    // Phi_n is irreducible and deg a < deg Phi_n, so g == 1.
    return CycNum(modulus(), s.coeffs());
  }

  /// Complex conjugation, the automorphism zeta -> zeta^{-1}.
  CycNum conj() const {
    const unsigned n = modulus();
    CycNum r(n);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) r.add_reduced_term((n - k % n) % n, coeffs_[k]);
    return r;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const {
    std::size_t h = field_->n();
    for (const auto& c : coeffs_) {
      h = h * 1000003u ^ limb_hash(c.get_num_mpz_t());
      h = h * 1000003u ^ limb_hash(c.get_den_mpz_t());
    }
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& a) {
    bool first = true;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (a.coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      os << a.coeffs_[k];
      if (k >= 1) os << "*z";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    if (first) os << "0";
    return os;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  static std::size_t limb_hash(mpz_srcptr z) {
    const int size = z->_mp_size;
    std::size_t h = static_cast<std::size_t>(size);
    if (size != 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) * 0x9e3779b97f4a7c15ull;
    return h;
  }

  void check_same_field(const CycNum& o) const {
    if (field_ != o.field_)
      throw IncompatibleField("Q(zeta_" + std::to_string(modulus()) + ") vs Q(zeta_" +
                              std::to_string(o.modulus()) + ")");
  }

  /// coeffs += c * x^k mod Phi_n.
  void add_reduced_term(std::size_t k, const BigRational& c) {
    if (c == 0) return;
    if (k < coeffs_.size()) {
      coeffs_[k] += c;
      return;
    }
    if (k >= field_->power_table_size()) {
      k %= field_->n();
      if (k < coeffs_.size()) {
        coeffs_[k] += c;
        return;
      }
    }
    const auto& red = field_->power(k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (red[i] != 0) coeffs_[i] += c * red[i];
  }

  const CyclotomicField* field_;
  std::vector<BigRational> coeffs_;
};

inline CycNum zeta_pow(unsigned n, long long k) { return CycNum::zeta_pow(n, k); }
inline CycNum inv(const CycNum& a) { return a.inverse(); }
inline CycNum conj(const CycNum& a) { return a.conj(); }

}  // namespace gwalk

template <>
struct std::hash<gwalk::CycNum> {
  std::size_t operator()(const gwalk::CycNum& a) const { return a.hash(); }
};
