#pragma once

// Dense square matrices over Q(zeta_n) and the walk's structural matrices:
// the rank-one rows P_j, the Grover coin G, the phase matrix S, the
// unnormalized Fourier matrix F and the block-circulant evolution U.
//
// The normalized Fourier matrix A = F / sqrt(n) is never built, since sqrt(n)
// is not in Q(zeta_n) in general. Every identity involving A is a
// conjugation, and A^{-1} X A = (1/n) F^* X F stays inside the field.

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "gwalk/cyclotomic.hpp"
#include "gwalk/errors.hpp"

namespace gwalk {

class CycMatrix {
 public:
  CycMatrix(unsigned n, std::size_t dim) : n_(n), dim_(dim), entries_(dim * dim, CycNum::zero(n)) {
    if (dim == 0) throw DimensionMismatch("CycMatrix: dim must be positive");
  }

  static CycMatrix identity(unsigned n, std::size_t dim) {
    CycMatrix m(n, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycNum::one(n);
    return m;
  }

  static CycMatrix diagonal(unsigned n, const std::vector<CycNum>& diag) {
    CycMatrix m(n, diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  unsigned modulus() const { return n_; }
  std::size_t dim() const { return dim_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(n_, dim_); }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.n_ == b.n_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  std::size_t hash() const {
    std::size_t h = dim_;
    for (const auto& e : entries_) h = h * 0x100000001b3ull ^ e.hash();
    return h;
  }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    a.check_compatible(b, "add");
    CycMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
  }

  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    a.check_compatible(b, "subtract");
    CycMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
  }

  /// Skips zero entries of the left factor; most matrices here are sparse.
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    a.check_compatible(b, "multiply");
    const std::size_t d = a.dim_;
    CycMatrix r(a.n_, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const CycNum& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const CycNum& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j).add_product(aik, bkj);
        }
      }
    return r;
  }

  CycMatrix scaled(const BigRational& s) const {
    CycMatrix r = *this;
    for (auto& e : r.entries_) e = e.scaled(s);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycMatrix& m) {
    for (std::size_t r = 0; r < m.dim_; ++r) {
      os << "[";
      for (std::size_t c = 0; c < m.dim_; ++c) os << (c ? ", " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  void check_compatible(const CycMatrix& o, const char* op) const {
    if (n_ != o.n_)
      throw IncompatibleField(std::string(op) + ": Q(zeta_" + std::to_string(n_) + ") vs Q(zeta_" +
                              std::to_string(o.n_) + ")");
    if (dim_ != o.dim_)
      throw DimensionMismatch(std::string(op) + ": " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
  }

  unsigned n_;
  std::size_t dim_;
  std::vector<CycNum> entries_;
};

inline CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) { return a * b; }

inline CycMatrix conj_transpose(const CycMatrix& m) {
  CycMatrix r(m.modulus(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

/// Repeated squaring.
inline CycMatrix mat_pow(const CycMatrix& m, unsigned long long e) {
  CycMatrix result = CycMatrix::identity(m.modulus(), m.dim());
  CycMatrix base = m;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Inverse of a unitary matrix. Every element of the walk group is unitary
/// (G is real symmetric involutory, S is a diagonal of roots of unity).
inline CycMatrix unitary_inverse(const CycMatrix& m) { return conj_transpose(m); }

/// X Y X^{-1} Y^{-1} for unitary X, Y.
inline CycMatrix commutator(const CycMatrix& x, const CycMatrix& y) {
  return x * y * unitary_inverse(x) * unitary_inverse(y);
}

inline CycMatrix kron(const CycMatrix& x, const CycMatrix& y) {
  if (x.modulus() != y.modulus()) throw IncompatibleField("kron: operands in different fields");
  const std::size_t dx = x.dim(), dy = y.dim();
  CycMatrix r(x.modulus(), dx * dy);
  for (std::size_t a = 0; a < dx; ++a)
    for (std::size_t b = 0; b < dx; ++b) {
      if (x(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < dy; ++c)
        for (std::size_t d = 0; d < dy; ++d)
          if (!y(c, d).is_zero()) r(a * dy + c, b * dy + d) = x(a, b) * y(c, d);
    }
  return r;
}

namespace detail {
inline void require_walk_size(unsigned n, const char* who) {
  if (n < 2) throw PreconditionViolation(std::string(who) + ": n must be >= 2, got " + std::to_string(n));
}
}  // namespace detail

/// Row j holds 2/n off the diagonal and 2/n - 1 at column j; other rows are zero.
inline CycMatrix build_P(unsigned n, unsigned j) {
  detail::require_walk_size(n, "build_P");
  if (j >= n) throw IndexOutOfRange("build_P: j = " + std::to_string(j) + " not in 0.." + std::to_string(n - 1));
  CycMatrix p(n, n);
  const BigRational two_over_n = BigRational(2) / n;
  for (unsigned c = 0; c < n; ++c) p(j, c) = CycNum(n, c == j ? BigRational(two_over_n - 1) : two_over_n);
  return p;
}

inline CycMatrix build_G(unsigned n) {
  detail::require_walk_size(n, "build_G");
  CycMatrix g(n, n);
  const BigRational two_over_n = BigRational(2) / n;
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) g(r, c) = CycNum(n, r == c ? BigRational(two_over_n - 1) : two_over_n);
  return g;
}

/// diag(1, zeta, zeta^2, ..., zeta^{n-1}).
inline CycMatrix build_S(unsigned n) {
  detail::require_walk_size(n, "build_S");
  std::vector<CycNum> d;
  d.reserve(n);
  for (unsigned k = 0; k < n; ++k) d.push_back(zeta_pow(n, k));
  return CycMatrix::diagonal(n, d);
}

/// S^j for any integer j, using S^n = I.
inline CycMatrix build_S_pow(unsigned n, long long j) {
  detail::require_walk_size(n, "build_S_pow");
  std::vector<CycNum> d;
  d.reserve(n);
  for (unsigned k = 0; k < n; ++k) d.push_back(zeta_pow(n, static_cast<long long>(k) * j));
  return CycMatrix::diagonal(n, d);
}

/// Unnormalized discrete Fourier matrix F with F(j, k) = zeta^{jk} (0-based),
/// so A = F / sqrt(n) and A^{-1} = F^* / sqrt(n).
inline CycMatrix build_A(unsigned n) {
  detail::require_walk_size(n, "build_A");
  CycMatrix f(n, n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned k = 0; k < n; ++k) f(j, k) = zeta_pow(n, static_cast<long long>(j) * k);
  return f;
}

/// A^{-1} X A computed as (1/n) F^* X F.
inline CycMatrix conjugate_by_A(const CycMatrix& x) {
  const unsigned n = x.modulus();
  if (x.dim() != n)
    throw DimensionMismatch("conjugate_by_A: matrix is " + std::to_string(x.dim()) + "x" +
                            std::to_string(x.dim()) + " but field is Q(zeta_" + std::to_string(n) + ")");
  const CycMatrix f = build_A(n);
  return (conj_transpose(f) * x * f).scaled(BigRational(1) / n);
}

/// Block-circulant n^2 x n^2 matrix whose (r, c) block is P_{(c - r) mod n}.
inline CycMatrix build_U(unsigned n) {
  detail::require_walk_size(n, "build_U");
  std::vector<CycMatrix> blocks;
  blocks.reserve(n);
  for (unsigned j = 0; j < n; ++j) blocks.push_back(build_P(n, j));
  CycMatrix u(n, static_cast<std::size_t>(n) * n);
  for (unsigned br = 0; br < n; ++br)
    for (unsigned bc = 0; bc < n; ++bc) {
      const CycMatrix& p = blocks[(bc + n - br) % n];
      for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k)
          if (!p(i, k).is_zero()) u(br * n + i, bc * n + k) = p(i, k);
    }
  return u;
}

/// Block-diagonal matrix with the given equally sized square blocks.
inline CycMatrix block_diagonal(const std::vector<CycMatrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("block_diagonal: no blocks");
  const std::size_t b = blocks.front().dim();
  CycMatrix r(blocks.front().modulus(), b * blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].dim() != b) throw DimensionMismatch("block_diagonal: unequal block sizes");
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) r(k * b + i, k * b + j) = blocks[k](i, j);
  }
  return r;
}

/// The target of the Fourier block diagonalization: diag(G, SG, ..., S^{n-1}G).
inline CycMatrix expected_block_form(unsigned n) {
  const CycMatrix g = build_G(n);
  std::vector<CycMatrix> blocks;
  blocks.reserve(n);
  for (unsigned j = 0; j < n; ++j) blocks.push_back(build_S_pow(n, j) * g);
  return block_diagonal(blocks);
}

/// (A (x) I)^{-1} U (A (x) I) as (1/n) (F (x) I)^* U (F (x) I).
inline CycMatrix conjugate_by_A_kron_I(const CycMatrix& u) {
  const unsigned n = u.modulus();
  if (u.dim() != static_cast<std::size_t>(n) * n) throw DimensionMismatch("conjugate_by_A_kron_I: expected n^2 x n^2");
  const CycMatrix fi = kron(build_A(n), CycMatrix::identity(n, n));
  return (conj_transpose(fi) * u * fi).scaled(BigRational(1) / n);
}

/// Exact check that the Fourier transform over vertices block-diagonalizes
/// `u` into diag(G, SG, ..., S^{n-1}G).
inline bool check_diagonalization(const CycMatrix& u) {
  return conjugate_by_A_kron_I(u) == expected_block_form(u.modulus());
}

inline bool check_diagonalization(unsigned n) {
  detail::require_walk_size(n, "check_diagonalization");
  return check_diagonalization(build_U(n));
}

}  // namespace gwalk

template <>
struct std::hash<gwalk::CycMatrix> {
  std::size_t operator()(const gwalk::CycMatrix& m) const { return m.hash(); }
};
