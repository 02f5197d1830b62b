#include "ffproj/fflinalg.hpp"

#include <sstream>

namespace ffproj {

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p < 2) throw RangeError("modulus must be at least 2");
  if (p >= (1u << 15)) throw RangeError("modulus must be below 2^15");
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw RangeError("modulus " + std::to_string(p) + " is not prime");
  }
}

namespace detail {

std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw ZeroInverse("inverse of zero mod " + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

}  // namespace detail

Scalar operator/(Scalar a, Scalar b) {
  a.check(b);
  return a * mod_inv(b);
}

Scalar mod_inv(Scalar a) {
  return Scalar(detail::invm(a.value(), a.modulus().value()), a.modulus());
}

Vector::Vector(Ambient amb, std::vector<std::uint32_t> coords)
    : amb_(amb), c_(std::move(coords)) {
  if (c_.size() != amb_.n)
    throw AmbientMismatch("vector length " + std::to_string(c_.size()) +
                          " does not match ambient dimension " +
                          std::to_string(amb_.n));
  for (auto& x : c_) x %= amb_.p.value();
}

Vector Vector::zero(Ambient amb) {
  return Vector(amb, std::vector<std::uint32_t>(amb.n, 0));
}

Vector Vector::unit(Ambient amb, std::size_t i) {
  if (i >= amb.n) throw RangeError("unit vector index out of range");
  std::vector<std::uint32_t> c(amb.n, 0);
  c[i] = 1;
  return Vector(amb, std::move(c));
}

bool Vector::is_zero() const {
  for (auto x : c_)
    if (x) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.amb_ != b.amb_) throw AmbientMismatch("vector ambient mismatch");
  std::vector<std::uint32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = detail::addm(a.c_[i], b.c_[i], a.amb_.p.value());
  return Vector(a.amb_, std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.amb_ != b.amb_) throw AmbientMismatch("vector ambient mismatch");
  std::vector<std::uint32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = detail::subm(a.c_[i], b.c_[i], a.amb_.p.value());
  return Vector(a.amb_, std::move(c));
}

Vector Vector::scaled(Scalar c) const {
  if (c.modulus() != amb_.p) throw AmbientMismatch("scalar modulus mismatch");
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i)
    out[i] = detail::mulm(c_[i], c.value(), amb_.p.value());
  return Vector(amb_, std::move(out));
}

Scalar inner(const Vector& a, const Vector& b) {
  if (a.amb_ != b.amb_) throw AmbientMismatch("vector ambient mismatch");
  std::uint32_t p = a.amb_.p.value();
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = detail::addm(acc, detail::mulm(a.c_[i], b.c_[i], p), p);
  return Scalar(acc, a.amb_.p);
}

bool Vector::operator<(const Vector& o) const {
  if (amb_ != o.amb_) throw AmbientMismatch("vector ambient mismatch");
  return c_ < o.c_;
}

std::string Vector::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ' ';
    out << c_[i];
  }
  return out.str();
}

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::from_rows(Prime p,
                         const std::vector<std::vector<std::uint32_t>>& rows,
                         std::size_t cols) {
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw AmbientMismatch("matrix row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(Prime p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
  return std::vector<std::uint32_t>(a_.begin() + r * cols_,
                                    a_.begin() + (r + 1) * cols_);
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(Ambient{p_, cols_}, row(r));
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::uint32_t p = m.modulus().value();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead) {
      for (std::size_t c = 0; c < r.cols(); ++c) {
        std::uint32_t tmp = r.at(sel, c);
        r.set(sel, c, r.at(lead, c));
        r.set(lead, c, tmp);
      }
    }
    std::uint32_t inv = detail::invm(r.at(lead, col), p);
    for (std::size_t c = col; c < r.cols(); ++c)
      r.set(lead, c, detail::mulm(r.at(lead, c), inv, p));
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == lead) continue;
      std::uint32_t f = r.at(row, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < r.cols(); ++c)
        r.set(row, c,
              detail::subm(r.at(row, c), detail::mulm(f, r.at(lead, c), p), p));
    }
    pivots.push_back(col);
    ++lead;
  }
  std::size_t rank = pivots.size();
  return RrefResult{std::move(r), std::move(pivots), rank};
}

Matrix kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::uint32_t p = m.modulus().value();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      std::uint32_t coef = rr.r.at(i, f);
      if (coef) v[rr.pivots[i]] = p - coef;
    }
    basis.push_back(std::move(v));
  }
  // The vectors above are independent but not echelonized; canonicalize.
  return rref(Matrix::from_rows(m.modulus(), basis, m.cols())).r;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NotABasis("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.modulus(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= n)
    throw NotABasis("matrix is singular");
  Matrix inv(m.modulus(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, rr.r.at(r, n + c));
  return inv;
}

}  // namespace ffproj
