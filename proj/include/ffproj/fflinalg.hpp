#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffproj/errors.hpp"

namespace ffproj {

// Prime modulus, validated at construction.  Kept below 2^15 so that all
// products of residues fit comfortably in 32-bit intermediates.
class Prime {
 public:
  explicit Prime(std::uint32_t p);
  std::uint32_t value() const { return p_; }
  bool operator==(const Prime& o) const { return p_ == o.p_; }
  bool operator!=(const Prime& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

// Ambient space F_p^n.
struct Ambient {
  Prime p;
  std::size_t n;

  bool operator==(const Ambient& o) const { return p == o.p && n == o.n; }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
};

namespace detail {
inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a * b % p;
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p);
}  // namespace detail

// Residue in [0, p) together with its modulus.  Mixing moduli throws.
class Scalar {
 public:
  Scalar(std::uint32_t value, Prime p) : v_(value % p.value()), p_(p) {}

  std::uint32_t value() const { return v_; }
  Prime modulus() const { return p_; }

  friend Scalar operator+(Scalar a, Scalar b) {
    a.check(b);
    return Scalar::raw(detail::addm(a.v_, b.v_, a.p_.value()), a.p_);
  }
  friend Scalar operator-(Scalar a, Scalar b) {
    a.check(b);
    return Scalar::raw(detail::subm(a.v_, b.v_, a.p_.value()), a.p_);
  }
  friend Scalar operator*(Scalar a, Scalar b) {
    a.check(b);
    return Scalar::raw(detail::mulm(a.v_, b.v_, a.p_.value()), a.p_);
  }
  friend Scalar operator/(Scalar a, Scalar b);
  Scalar operator-() const {
    return Scalar::raw(v_ ? p_.value() - v_ : 0, p_);
  }

  bool operator==(const Scalar& o) const {
    check(o);
    return v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const {
    check(o);
    return v_ < o.v_;
  }

 private:
  static Scalar raw(std::uint32_t v, Prime p) { return Scalar(v, p); }
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw AmbientMismatch("scalar modulus mismatch");
  }

  std::uint32_t v_;
  Prime p_;
};

// Multiplicative inverse in F_p via the extended Euclidean algorithm.
Scalar mod_inv(Scalar a);

// Coordinate vector over F_p.
class Vector {
 public:
  Vector(Ambient amb, std::vector<std::uint32_t> coords);
  static Vector zero(Ambient amb);
  static Vector unit(Ambient amb, std::size_t i);

  const Ambient& ambient() const { return amb_; }
  std::size_t size() const { return c_.size(); }
  std::uint32_t coord(std::size_t i) const { return c_[i]; }
  Scalar operator[](std::size_t i) const { return Scalar(c_[i], amb_.p); }
  const std::vector<std::uint32_t>& coords() const { return c_; }
  bool is_zero() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  Vector scaled(Scalar c) const;
  friend Scalar inner(const Vector& a, const Vector& b);

  bool operator==(const Vector& o) const {
    return amb_ == o.amb_ && c_ == o.c_;
  }
  bool operator!=(const Vector& o) const { return !(*this == o); }
  bool operator<(const Vector& o) const;  // lexicographic on coordinates

  std::string str() const;

 private:
  Ambient amb_;
  std::vector<std::uint32_t> c_;
};

// Dense rows x cols matrix over F_p.  Zero rows and zero columns are legal.
class Matrix {
 public:
  Matrix(Prime p, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Prime p,
                          const std::vector<std::vector<std::uint32_t>>& rows,
                          std::size_t cols);
  static Matrix identity(Prime p, std::size_t n);

  Prime modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    a_[r * cols_ + c] = v % p_.value();
  }

  std::vector<std::uint32_t> row(std::size_t r) const;
  Vector row_vector(std::size_t r) const;

  bool operator==(const Matrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Prime p_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

// Reduced row echelon form; the canonical representative of the row space.
RrefResult rref(const Matrix& m);

// Canonical (RREF) basis of the right null space, one basis vector per row.
// cols(kernel) == cols(m), rows(kernel) == cols(m) - rank(m).
Matrix kernel(const Matrix& m);

// Inverse of a square matrix; throws NotABasis when singular.
Matrix inverse(const Matrix& m);

}  // namespace ffproj
