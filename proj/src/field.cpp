#include "genrank/field.hpp"

#include <string>
#include <utility>

#include "genrank/error.hpp"

namespace genrank {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::InvalidModulus, "field modulus must be a prime below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(Errc::InvalidModulus, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), field_(p), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p,
                         std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows.front().size();
  Matrix m(rows.size(), c, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

bool Matrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, modulus());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::DimensionMismatch, "block out of range");
  Matrix b(nr, nc, modulus());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  return b;
}

void Matrix::put(std::size_t r0, std::size_t c0, const Matrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_ || src.modulus() != modulus())
    throw Error(Errc::DimensionMismatch, "put out of range");
  for (std::size_t r = 0; r < src.rows_; ++r)
    for (std::size_t c = 0; c < src.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = src.data_[r * src.cols_ + c];
}

Matrix Matrix::negated() const {
  Matrix n = *this;
  for (auto& v : n.data_) v = field_.neg(v);
  return n;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = data_[r * cols_ + c];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && modulus() == o.modulus() && data_ == o.data_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus())
    throw Error(Errc::DimensionMismatch, "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const PrimeField& f = a.field();
  Matrix c(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, f.add(c(i, j), f.mul(x, b(k, j))));
    }
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus())
    throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.field().add(a(i, j), b(i, j)));
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.modulus() != b.modulus()) throw Error(Errc::DimensionMismatch, "hstack rows differ");
  Matrix c(a.rows(), a.cols() + b.cols(), a.modulus());
  c.put(0, 0, a);
  c.put(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.modulus() != b.modulus()) throw Error(Errc::DimensionMismatch, "vstack cols differ");
  Matrix c(a.rows() + b.rows(), a.cols(), a.modulus());
  c.put(0, 0, a);
  c.put(a.rows(), 0, b);
  return c;
}

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  const PrimeField& f = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto t = a(row, j);
        a.set(row, j, a(piv, j));
        a.set(piv, j, t);
      }
    std::uint32_t s = f.inv(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(row, j, f.mul(a(row, j), s));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      std::uint32_t factor = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, f.sub(a(r, j), f.mul(factor, a(row, j))));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::size_t nfree = m.cols() - e.pivots.size();
  Matrix k(m.cols(), nfree, m.modulus());
  std::size_t j = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    k.set(c, j, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.set(e.pivots[r], j, f.neg(e.reduced(r, c)));
    ++j;
  }
  return k;
}

Cokernel cokernel_projection(const Matrix& m) {
  // Rows of Q span the left null space of m, so ker Q = im m.
  Matrix q = kernel_basis(m.transpose()).transpose();
  std::size_t dim = q.rows();
  return {std::move(q), dim};
}

}  // namespace genrank
