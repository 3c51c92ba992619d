#include "aquiver/linalg.hpp"

#include <utility>

#include "aquiver/errors.hpp"

namespace aquiver {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t residue(const Rational& a, std::uint64_t p) {
  // a is an integer in [0, p) for elements of F_p
  return mpz_get_ui(a.get_num_mpz_t()) % p;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void check_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw InputError("matrices over different fields");
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Rational Field::embed(const Rational& q) const {
  if (p_ == 0) return q;
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  mpz_class n_mod;
  mpz_class d_mod;
  mpz_fdiv_r(n_mod.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  mpz_fdiv_r(d_mod.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  if (d_mod == 0) {
    throw InputError("denominator of " + q.get_str() + " vanishes in " + name());
  }
  const std::uint64_t d_inv = pow_mod(d_mod.get_ui(), p_ - 2, p_);
  return Rational(static_cast<unsigned long>(n_mod.get_ui() * d_inv % p_));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return Rational(a + b);
  return Rational(static_cast<unsigned long>((residue(a, p_) + residue(b, p_)) % p_));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return Rational(a - b);
  return Rational(static_cast<unsigned long>((residue(a, p_) + p_ - residue(b, p_)) % p_));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return Rational(a * b);
  return Rational(static_cast<unsigned long>(residue(a, p_) * residue(b, p_) % p_));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return Rational(-a);
  return Rational(static_cast<unsigned long>((p_ - residue(a, p_)) % p_));
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw InternalError("division by zero in " + name());
  if (p_ == 0) return Rational(1 / a);
  return Rational(static_cast<unsigned long>(pow_mod(residue(a, p_), p_ - 2, p_)));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                         Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries, Field field) {
  Matrix m(entries.size(), 1, field);
  for (std::size_t r = 0; r < entries.size(); ++r) m.set(r, 0, entries[r]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  data_[r * cols_ + c] = field_.embed(v);
}

Matrix Matrix::column(std::size_t c) const {
  Matrix out(rows_, 1, field_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  const Rational f = field_.embed(s);
  Matrix out(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], f);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
  const Field& f = a.field_;
  Matrix out(a.rows_, b.cols_, f);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        Rational& o = out.data_[i * out.cols_ + j];
        o = f.add(o, f.mul(aik, bkj));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch in sum");
  Matrix out(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch in difference");
  Matrix out(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

struct MatrixAccess {
  static Rational& at(Matrix& m, std::size_t r, std::size_t c) { return m.data_[r * m.cols_ + c]; }
};

namespace linalg {

Echelon rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && sgn(a(sel, col)) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(MatrixAccess::at(a, sel, c), MatrixAccess::at(a, row, c));
      }
    }
    const Rational piv_inv = f.inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) {
      Rational& v = MatrixAccess::at(a, row, c);
      if (sgn(v) != 0) v = f.mul(v, piv_inv);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Rational factor = a(r, col);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        const Rational& pv = a(row, c);
        if (sgn(pv) == 0) continue;
        Rational& v = MatrixAccess::at(a, r, c);
        v = f.sub(v, f.mul(factor, pv));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const Field& f = m.field();
  Matrix k(n, n - e.pivots.size(), f);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    MatrixAccess::at(k, free, out) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      MatrixAccess::at(k, e.pivots[i], out) = f.neg(e.reduced(i, free));
    }
    ++out;
  }
  return k;
}

Matrix column_space_basis(const Matrix& m) {
  const Echelon e = rref(m);
  Matrix out(m.rows(), e.pivots.size(), m.field());
  for (std::size_t j = 0; j < e.pivots.size(); ++j) {
    for (std::size_t r = 0; r < m.rows(); ++r) MatrixAccess::at(out, r, j) = m(r, e.pivots[j]);
  }
  return out;
}

std::optional<Solution> solve(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw InputError("right-hand side has the wrong number of rows");
  const Echelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  for (auto p : e.pivots) {
    if (p >= n) return std::nullopt;
  }
  Matrix x(n, b.cols(), a.field());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      MatrixAccess::at(x, e.pivots[i], c) = e.reduced(i, n + c);
    }
  }
  return Solution{std::move(x), n - e.pivots.size()};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto s = solve(m, Matrix::identity(m.rows(), m.field()));
  if (!s || s->free_dimension != 0) return std::nullopt;
  return std::move(s->x);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) MatrixAccess::at(out, r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) MatrixAccess::at(out, r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) MatrixAccess::at(out, r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) MatrixAccess::at(out, a.rows() + r, c) = b(r, c);
  }
  return out;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::mt19937_64& rng,
                     int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Rational(dist(rng)));
  }
  return m;
}

Matrix random_invertible(std::size_t n, const Field& field, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(n, n, field, rng, -3, 3);
    if (rank(m) == n) return m;
  }
}

}  // namespace linalg
}  // namespace aquiver
