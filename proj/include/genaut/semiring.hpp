#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>

#include "genaut/errors.hpp"

namespace genaut {

/// The two coefficient structures supported by the toolkit.
///   Boolean: carrier {0,1}, plus = or, times = and.
///   Real:    carrier R, usual + and *.
/// Values are stored as doubles in both cases; Boolean operations never
/// leave {0,1}, so double storage is exact.
enum class SemiringKind { Boolean, Real };

const char* semiring_name(SemiringKind kind) noexcept;

/// Parses "boolean" or "real"; anything else is a ParameterError.
SemiringKind semiring_from_name(const std::string& name);

using RowVector = Eigen::RowVectorXd;
using ColVector = Eigen::VectorXd;

namespace detail {

bool all_boolean01(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Unchecked semiring product/sum kernels. Callers validate shapes and
/// kinds; Boolean inputs must already be 0/1-valued.
Eigen::MatrixXd product_in(SemiringKind kind,
                           const Eigen::Ref<const Eigen::MatrixXd>& a,
                           const Eigen::Ref<const Eigen::MatrixXd>& b);
Eigen::MatrixXd sum_in(SemiringKind kind,
                       const Eigen::Ref<const Eigen::MatrixXd>& a,
                       const Eigen::Ref<const Eigen::MatrixXd>& b);

}  // namespace detail

/// A dense matrix tagged with the semiring its entries live in. The tag is
/// what selects the multiplication kernel, so Boolean and Real automata run
/// through one code path everywhere else.
class Matrix {
 public:
  /// Throws ShapeError on empty dimensions, AlgebraError if kind is
  /// Boolean and any entry is not exactly 0 or 1.
  Matrix(SemiringKind kind, Eigen::MatrixXd values);

  static Matrix identity(SemiringKind kind, Eigen::Index n);
  static Matrix zero(SemiringKind kind, Eigen::Index rows, Eigen::Index cols);

  SemiringKind kind() const noexcept { return kind_; }
  Eigen::Index rows() const noexcept { return values_.rows(); }
  Eigen::Index cols() const noexcept { return values_.cols(); }
  const Eigen::MatrixXd& values() const noexcept { return values_; }
  double operator()(Eigen::Index r, Eigen::Index c) const {
    return values_(r, c);
  }

 private:
  SemiringKind kind_;
  Eigen::MatrixXd values_;
};

/// Semiring matrix product. Operands must share a kind (AlgebraError) and
/// conform (ShapeError).
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Semiring matrix sum. Operands must share kind and dimensions.
Matrix mat_add(const Matrix& a, const Matrix& b);

/// left * m * right in the given semiring, collapsed to a scalar.
/// In the Boolean case the vectors must be 0/1-valued as well.
double bilinear_form(const RowVector& left, const Matrix& m,
                     const ColVector& right);

/// Entrywise Hoelder norm (sum |x_i|^alpha)^(1/alpha) for alpha >= 1;
/// alpha = infinity gives the max norm. Works on any real vector or matrix
/// expression; an empty operand has norm 0. alpha < 1 or NaN is a
/// ParameterError.
template <typename Derived>
double hoelder_norm(const Eigen::MatrixBase<Derived>& v, double alpha) {
  if (std::isnan(alpha) || alpha < 1.0) {
    throw ParameterError("hoelder_norm: alpha must be >= 1 (or infinity)");
  }
  if (v.size() == 0) return 0.0;
  auto mag = v.derived().array().abs();
  if (std::isinf(alpha)) return mag.maxCoeff();
  if (alpha == 1.0) return mag.sum();
  if (alpha == 2.0) return std::sqrt((mag * mag).sum());
  return std::pow(mag.pow(alpha).sum(), 1.0 / alpha);
}

}  // namespace genaut
