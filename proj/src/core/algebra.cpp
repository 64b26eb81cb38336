#include "algebra.hpp"

#include <sstream>

#include "errors.hpp"

namespace eaqmds {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b, const char* what) {
  if (a.get() != b.get()) {
    throw InvalidArgument(std::string(what) + ": operands live in different field contexts");
  }
}

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_->contains(c)) throw InvalidArgument("polynomial coefficient outside field");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Polynomial::evaluate(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

Polynomial poly_from_roots(const FieldPtr& field, std::span<const Elem> roots) {
  const Field& f = *field;
  std::vector<Elem> c{1};
  for (Elem r : roots) {
    if (!f.contains(r)) throw InvalidArgument("poly_from_roots: root outside field");
    const Elem nr = f.neg(r);
    std::vector<Elem> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.add(next[i], f.mul(c[i], nr));
    }
    c = std::move(next);
  }
  return Polynomial(field, std::move(c));
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("matrix entry count does not match its shape");
  }
  for (auto v : data_) {
    if (!field_->contains(v)) throw InvalidArgument("matrix entry outside field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix s(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, at(i, cols[j]));
  }
  return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix s(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = row(rows[i]);
    std::copy(src.begin(), src.end(), s.row(i).begin());
  }
  return s;
}

Matrix Matrix::stack(const Matrix& below) const {
  require_same(field_, below.field_, "stack");
  if (rows_ && below.rows_ && cols_ != below.cols_) {
    throw InvalidArgument("stack: column counts differ");
  }
  const std::size_t cols = rows_ ? cols_ : below.cols_;
  std::vector<Elem> d = data_;
  d.insert(d.end(), below.data_.begin(), below.data_.end());
  return Matrix(field_, rows_ + below.rows_, cols, std::move(d));
}

bool Matrix::is_zero() const {
  for (auto v : data_) {
    if (v) return false;
  }
  return true;
}

std::string Matrix::to_text() const {
  std::ostringstream os;
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      const Elem v = at(i, j);
      if (f.has_tables()) {
        if (v == 0) {
          os << '-';
        } else {
          os << f.log(v);
        }
      } else {
        os << '(';
        const auto c = f.coefficients(v);
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
        os << ')';
      }
    }
    os << '\n';
  }
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_.get() == b.field_.get() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same(a.field(), b.field(), "mat_mul");
  if (a.cols() != b.rows()) throw InvalidArgument("mat_mul: inner dimensions differ");
  const Field& f = *a.field();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Elem bkj = b.at(k, j);
        if (bkj) c.set(i, j, f.add(c.at(i, j), f.mul(aik, bkj)));
      }
    }
  }
  return c;
}

Matrix hermitian_adjoint(const Matrix& m, std::uint64_t q) {
  const Field& f = *m.field();
  if (!f.admits_frobenius(q)) {
    throw InvalidArgument("hermitian_adjoint: " + f.name() + " is not an extension of GF(" +
                          std::to_string(q) + ")");
  }
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, f.pow(m.at(i, j), q));
  }
  return t;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      auto a = m.row(sel);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem piv_inv = f.inv(m.at(r, c));
    auto pr = m.row(r);
    for (std::size_t j = c; j < m.cols(); ++j) pr[j] = f.mul(pr[j], piv_inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = m.at(i, c);
      if (!factor) continue;
      const Elem nf = f.neg(factor);
      auto ri = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (pr[j]) ri[j] = f.add(ri[j], f.mul(nf, pr[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t matrix_rank(const Matrix& m) {
  Matrix w = m;
  return row_reduce(w).size();
}

Matrix nullspace_basis(const Matrix& h) {
  const Field& f = *h.field();
  Matrix w = h;
  const auto pivots = row_reduce(w);
  std::vector<bool> is_pivot(h.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix basis(h.field(), free.size(), h.cols());
  for (std::size_t b = 0; b < free.size(); ++b) {
    const std::size_t fc = free[b];
    basis.set(b, fc, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.set(b, pivots[i], f.neg(w.at(i, fc)));
    }
  }
  return basis;
}

}  // namespace eaqmds
