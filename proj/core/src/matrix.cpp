#include "qrmt/matrix.hpp"

#include <cmath>

#include "qrmt/error.hpp"

namespace qrmt {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "matrix dimension must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SymmetricMatrix SymmetricMatrix::from_row_major(int n, std::span<const double> values) {
  SymmetricMatrix h(n);
  if (values.size() != h.a_.size()) throw Error(ErrorCode::Domain, "row-major buffer has the wrong size");
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = values[h.idx(i, j)];
      if (v != values[h.idx(j, i)]) throw Error(ErrorCode::Domain, "matrix is not symmetric");
      h.set(i, j, v);
    }
  }
  return h;
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix h(n);
  for (int i = 0; i < n; ++i) h.set(i, i, 1.0);
  return h;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  SymmetricMatrix h(static_cast<int>(d.size()));
  for (int i = 0; i < h.n_; ++i) h.set(i, i, d[static_cast<std::size_t>(i)]);
  return h;
}

double SymmetricMatrix::trace() const noexcept {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::trace_sq() const noexcept {
  double diag = 0.0;
  double off = 0.0;
  for (int i = 0; i < n_; ++i) {
    diag += (*this)(i, i) * (*this)(i, i);
    for (int j = i + 1; j < n_; ++j) off += (*this)(i, j) * (*this)(i, j);
  }
  return diag + 2.0 * off;
}

double SymmetricMatrix::norm() const noexcept { return std::sqrt(trace_sq()); }

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.n_ != n_) throw Error(ErrorCode::InvalidDimension, "matrix sizes differ");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) noexcept {
  for (double& v : a_) v *= s;
  return *this;
}

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
  a += b;
  return a;
}

SymmetricMatrix conjugate(const SymmetricMatrix& h, std::span<const double> o) {
  const int n = h.size();
  const auto nn = static_cast<std::size_t>(n);
  if (o.size() != nn * nn) throw Error(ErrorCode::Domain, "rotation has the wrong size");
  // tmp = H O
  std::vector<double> tmp(nn * nn, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double hik = h(i, k);
      for (int j = 0; j < n; ++j) tmp[i * nn + j] += hik * o[k * nn + j];
    }
  }
  SymmetricMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += o[k * nn + i] * tmp[k * nn + j];
      out.set(i, j, s);
    }
  }
  return out;
}

}  // namespace qrmt
