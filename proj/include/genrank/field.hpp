#pragma once

// Dense exact linear algebra over GF(p).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace genrank {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  // Throws InvalidModulus unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t reduce(std::int64_t v) const noexcept;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

struct FieldElem {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  bool operator==(const FieldElem&) const = default;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p = 2);

  static Matrix identity(std::size_t n, std::uint32_t p = 2);
  // Entries are reduced mod p. `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          std::uint32_t p = 2, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem at(std::size_t r, std::size_t c) const { return {(*this)(r, c), modulus()}; }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void put(std::size_t r0, std::size_t c0, const Matrix& src);
  Matrix negated() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const Matrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<std::uint32_t> data_;
};

// All binary helpers throw DimensionMismatch on incompatible shapes or moduli.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per non-zero row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);

struct Cokernel {
  Matrix projection;
  std::size_t dim = 0;
};

Cokernel cokernel_projection(const Matrix& m);

}  // namespace genrank
