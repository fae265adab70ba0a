#pragma once

#include <span>
#include <vector>

namespace qrmt {

/// Dense real symmetric matrix.
///
/// Storage is a full row-major n x n buffer, but every write goes through
/// set(), which stores the value in both triangles, so h(i, j) and h(j, i)
/// are always bit-identical.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n);

  /// Builds from a row-major buffer; throws Domain if it is not exactly symmetric.
  static SymmetricMatrix from_row_major(int n, std::span<const double> values);
  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(std::span<const double> d);

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] double operator()(int i, int j) const noexcept { return a_[idx(i, j)]; }
  void set(int i, int j, double v) noexcept {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  [[nodiscard]] double trace() const noexcept;
  /// tr(H^2) = sum_ij H_ij^2.
  [[nodiscard]] double trace_sq() const noexcept;
  /// Frobenius norm.
  [[nodiscard]] double norm() const noexcept;
  [[nodiscard]] std::span<const double> row_major() const noexcept { return a_; }

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double s) noexcept;

 private:
  [[nodiscard]] std::size_t idx(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b);

/// O^T H O for a row-major orthogonal n x n matrix O.  The product is
/// symmetrized from the upper triangle.
SymmetricMatrix conjugate(const SymmetricMatrix& h, std::span<const double> o);

}  // namespace qrmt
