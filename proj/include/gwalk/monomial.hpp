#pragma once

// Group elements in the Fourier-conjugated basis.
//
// Conjugating by the DFT matrix turns S into the cyclic shift Q (Q e_i =
// e_{i+1 mod n}) and G into diag(1, -1, ..., -1). Every element of the group
// they generate is therefore D * Q^s with D a diagonal sign matrix, which we
// store as the pair (s, diag(D)).
//
// With that convention the product law is
//   (D1 Q^a)(D2 Q^b) = D1 (Q^a D2 Q^-a) Q^(a+b),  (Q^a D Q^-a)_ii = D_{i-a,i-a}
// so signs multiply after shifting the right factor's sign vector by a.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "gwalk/errors.hpp"
#include "gwalk/exact_linalg.hpp"

namespace gwalk {

class SignedShift {
 public:
  SignedShift(unsigned n, unsigned shift, std::vector<std::int8_t> signs)
      : n_(n), shift_(n ? shift % n : 0), signs_(std::move(signs)) {
    if (n < 1) throw PreconditionViolation("SignedShift: n must be >= 1");
    if (signs_.size() != n) throw DimensionMismatch("SignedShift: sign vector length != n");
    for (auto s : signs_)
      if (s != 1 && s != -1) throw PreconditionViolation("SignedShift: signs must be +1 or -1");
  }

  static SignedShift identity(unsigned n) { return {n, 0, std::vector<std::int8_t>(n, 1)}; }

  unsigned modulus() const { return n_; }
  unsigned shift() const { return shift_; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  std::size_t negative_count() const {
    std::size_t k = 0;
    for (auto s : signs_) k += (s < 0);
    return k;
  }

  bool is_identity() const { return shift_ == 0 && negative_count() == 0; }

  friend bool operator==(const SignedShift&, const SignedShift&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ shift_;
    for (auto s : signs_) h = (h ^ static_cast<std::uint8_t>(s)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }

  friend std::ostream& operator<<(std::ostream& os, const SignedShift& a) {
    os << "Q^" << a.shift_ << " [";
    for (auto s : a.signs_) os << (s > 0 ? '+' : '-');
    return os << "]";
  }

 private:
  unsigned n_;
  unsigned shift_;
  std::vector<std::int8_t> signs_;
};

inline SignedShift compose(const SignedShift& a, const SignedShift& b) {
  if (a.modulus() != b.modulus())
    throw IncompatibleField("compose: n = " + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  const unsigned n = a.modulus();
  std::vector<std::int8_t> signs(n);
  for (unsigned i = 0; i < n; ++i) signs[i] = static_cast<std::int8_t>(a.signs()[i] * b.signs()[(i + n - a.shift()) % n]);
  return {n, (a.shift() + b.shift()) % n, std::move(signs)};
}

/// (D Q^a)^{-1} = Q^{-a} D = (Q^{-a} D Q^a) Q^{-a}.
inline SignedShift inverse(const SignedShift& a) {
  const unsigned n = a.modulus();
  std::vector<std::int8_t> signs(n);
  for (unsigned i = 0; i < n; ++i) signs[i] = a.signs()[(i + a.shift()) % n];
  return {n, (n - a.shift()) % n, std::move(signs)};
}

/// Conjugated S: the unsigned cyclic shift.
inline SignedShift gen_S_hat(unsigned n) {
  detail::require_walk_size(n, "gen_S_hat");
  return {n, 1, std::vector<std::int8_t>(n, 1)};
}

/// Conjugated G: diag(1, -1, ..., -1).
inline SignedShift gen_G_hat(unsigned n) {
  detail::require_walk_size(n, "gen_G_hat");
  std::vector<std::int8_t> signs(n, -1);
  signs[0] = 1;
  return {n, 0, std::move(signs)};
}

inline SignedShift power(const SignedShift& a, unsigned long long e) {
  SignedShift r = SignedShift::identity(a.modulus());
  for (unsigned long long k = 0; k < e; ++k) r = compose(r, a);
  return r;
}

/// Membership in the commutator subgroup H.
///
/// In this basis [S^j, G] is diagonal with -1 exactly at positions 0 and j.
/// Read as parity vectors e_0 + e_j, these span the even-weight subspace, so
/// H is the set of unshifted elements with an even number of -1 signs.
/// tests/monomial_test.cpp checks this against brute-force closure.
inline bool in_H(const SignedShift& a) { return a.shift() == 0 && a.negative_count() % 2 == 0; }

/// The signed permutation matrix D Q^s, entries as CycNum.
inline CycMatrix to_matrix(const SignedShift& a) {
  const unsigned n = a.modulus();
  CycMatrix m(n, n);
  for (unsigned col = 0; col < n; ++col) {
    const unsigned row = (col + a.shift()) % n;
    m(row, col) = CycNum(n, BigRational(a.signs()[row]));
  }
  return m;
}

/// Inverse of to_matrix on signed shift matrices; throws if `m` is not one.
inline SignedShift from_matrix(const CycMatrix& m) {
  const unsigned n = m.modulus();
  if (m.dim() != n) throw DimensionMismatch("from_matrix: expected n x n");
  const CycNum one = CycNum::one(n), minus_one = -CycNum::one(n);
  // Column 0 determines the shift.
  unsigned shift = n;
  for (unsigned r = 0; r < n; ++r)
    if (!m(r, 0).is_zero()) shift = r;
  if (shift == n) throw PreconditionViolation("from_matrix: zero column");
  std::vector<std::int8_t> signs(n, 1);
  for (unsigned col = 0; col < n; ++col) {
    const unsigned row = (col + shift) % n;
    if (m(row, col) == one) signs[row] = 1;
    else if (m(row, col) == minus_one) signs[row] = -1;
    else throw PreconditionViolation("from_matrix: entry is not +-1");
  }
  SignedShift result(n, shift, std::move(signs));
  if (!(to_matrix(result) == m)) throw PreconditionViolation("from_matrix: not a signed cyclic shift");
  return result;
}

}  // namespace gwalk

template <>
struct std::hash<gwalk::SignedShift> {
  std::size_t operator()(const gwalk::SignedShift& a) const { return a.hash(); }
};
