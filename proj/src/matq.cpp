#include "matq.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace seaweed {

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return MatQ();
  MatQ m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("MatQ::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> MatQ::row(std::size_t i) const {
  return std::vector<Rat>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void MatQ::append_row(const std::vector<Rat>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("MatQ::append_row: size mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

MatQ MatQ::transposed() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

MatQ MatQ::operator*(const MatQ& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("MatQ::operator*: shape mismatch");
  MatQ r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += a * rhs.at(k, j);
    }
  return r;
}

MatQ MatQ::operator+(const MatQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("MatQ::operator+: shape mismatch");
  MatQ r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + rhs.data_[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("MatQ::operator-: shape mismatch");
  MatQ r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
  return r;
}

bool MatQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

bool MatQ::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Rat MatQ::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::string MatQ::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_to_string(at(i, j));
    os << "]\n";
  }
  return os.str();
}

std::string rat_to_string(const Rat& r) {
  // canonical form, e.g. "-3/7" or "5"
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

namespace {

// approximate operand size for pivot selection
std::size_t int_size(const Int& z) { return mpz_size(z.get_mpz_t()); }

}  // namespace

int rank(const MatQ& a) {
  const std::size_t n = a.rows(), m = a.cols();
  if (n == 0 || m == 0) return 0;

  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<Int>> w(n, std::vector<Int>(m));
  for (std::size_t i = 0; i < n; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m; ++j) {
      const Int den = a.at(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < m; ++j) {
      Rat scaled = a.at(i, j) * lcm;
      scaled.canonicalize();
      assert(scaled.get_den() == 1);
      w[i][j] = scaled.get_num();
    }
  }

  // Fraction-free Bareiss elimination with full pivoting; pivot chosen with
  // the fewest limbs to damp coefficient growth.
  std::vector<std::size_t> colperm(m);
  for (std::size_t j = 0; j < m; ++j) colperm[j] = j;

  Int prev = 1;
  std::size_t r = 0;
  for (; r < std::min(n, m); ++r) {
    std::size_t pi = n, pj = m;
    std::size_t best = ~std::size_t(0);
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = r; j < m; ++j) {
        const Int& v = w[i][colperm[j]];
        if (v == 0) continue;
        std::size_t s = int_size(v);
        if (s < best) {
          best = s;
          pi = i;
          pj = j;
          if (s <= 1) goto found;
        }
      }
    if (pi == n) break;
  found:
    std::swap(w[r], w[pi]);
    std::swap(colperm[r], colperm[pj]);

    const Int piv = w[r][colperm[r]];
    for (std::size_t i = r + 1; i < n; ++i) {
      const Int head = w[i][colperm[r]];
      for (std::size_t j = r + 1; j < m; ++j) {
        Int t = w[i][colperm[j]] * piv - head * w[r][colperm[j]];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[i][colperm[j]] = std::move(t);
      }
      w[i][colperm[r]] = 0;
    }
    prev = piv;
  }
  return static_cast<int>(r);
}

MatQ rref(MatQ a, std::vector<std::size_t>* pivots) {
  const std::size_t n = a.rows(), m = a.cols();
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    // smallest nonzero entry in this column as pivot
    std::size_t pi = n;
    std::size_t best = ~std::size_t(0);
    for (std::size_t i = row; i < n; ++i) {
      const Rat& v = a.at(i, col);
      if (v == 0) continue;
      std::size_t s = int_size(v.get_num()) + int_size(v.get_den());
      if (s < best) {
        best = s;
        pi = i;
      }
    }
    if (pi == n) continue;
    if (pi != row)
      for (std::size_t j = 0; j < m; ++j) std::swap(a.at(pi, j), a.at(row, j));

    Rat inv_piv = 1 / a.at(row, col);
    for (std::size_t j = col; j < m; ++j) a.at(row, j) *= inv_piv;
    a.at(row, col) = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m; ++j) a.at(i, j) -= f * a.at(row, j);
      a.at(i, col) = 0;
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

MatQ kernel_basis(const MatQ& a) {
  const std::size_t m = a.cols();
  std::vector<std::size_t> pivots;
  MatQ r = rref(a, &pivots);

  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  MatQ basis(0, m);
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.append_row(v);
  }
  return rref(basis);
}

std::optional<std::vector<Rat>> solve(const MatQ& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  MatQ aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  MatQ r = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, a.cols());
  return x;
}

std::optional<MatQ> inverse(const MatQ& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  MatQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  MatQ r = rref(std::move(aug), &pivots);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  MatQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

int subspace_intersection_dim(const MatQ& u_rows, const MatQ& w_rows) {
  int du = rank(u_rows), dw = rank(w_rows);
  MatQ stacked = u_rows;
  for (std::size_t i = 0; i < w_rows.rows(); ++i) stacked.append_row(w_rows.row(i));
  return du + dw - rank(stacked);
}

bool subspace_equal(const MatQ& u_rows, const MatQ& w_rows) {
  MatQ a = rref(u_rows), b = rref(w_rows);
  // drop zero rows before comparing
  auto nonzero_rows = [](const MatQ& m) {
    MatQ out(0, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto r = m.row(i);
      if (std::any_of(r.begin(), r.end(), [](const Rat& x) { return x != 0; })) out.append_row(r);
    }
    return out;
  };
  return nonzero_rows(a) == nonzero_rows(b);
}

bool in_row_span(const MatQ& rows, const std::vector<Rat>& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) return true;
  MatQ stacked = rows;
  stacked.append_row(v);
  return rank(stacked) == rank(rows);
}

}  // namespace seaweed
