// Exact rational linear algebra: dense matrices over mpq_class with
// rank (fraction-free Bareiss on cleared rows), reduced row echelon form,
// canonical kernel bases and linear solving. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace seaweed {

using Rat = mpq_class;
using Int = mpz_class;

class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static MatQ identity(std::size_t n);
  static MatQ from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rat> row(std::size_t i) const;
  void append_row(const std::vector<Rat>& r);

  MatQ transposed() const;
  MatQ operator*(const MatQ& rhs) const;
  MatQ operator+(const MatQ& rhs) const;
  MatQ operator-(const MatQ& rhs) const;
  bool operator==(const MatQ& rhs) const = default;

  bool is_zero() const;
  bool is_antisymmetric() const;
  Rat trace() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Exact rank. Rows are scaled integral first, then eliminated fraction-free.
int rank(const MatQ& a);

// Reduced row echelon form; pivot columns reported through `pivots` when non-null.
MatQ rref(MatQ a, std::vector<std::size_t>* pivots = nullptr);

// Canonical basis of the right kernel {x : a x = 0}, returned as the RREF of a
// basis matrix (rows are kernel vectors). Equal subspaces compare equal.
MatQ kernel_basis(const MatQ& a);

// One exact solution of a x = b (free variables zero), or nullopt.
std::optional<std::vector<Rat>> solve(const MatQ& a, const std::vector<Rat>& b);

// Exact inverse; nullopt when singular.
std::optional<MatQ> inverse(const MatQ& a);

// dim(U ∩ W) for row-span subspaces of a common ambient space.
int subspace_intersection_dim(const MatQ& u_rows, const MatQ& w_rows);

// Row spans equal? (compares canonical RREFs)
bool subspace_equal(const MatQ& u_rows, const MatQ& w_rows);

// Is `v` in the row span of `rows`?
bool in_row_span(const MatQ& rows, const std::vector<Rat>& v);

std::string rat_to_string(const Rat& r);

}  // namespace seaweed
