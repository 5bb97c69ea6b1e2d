#include "genaut/semiring.hpp"

namespace genaut {

const char* semiring_name(SemiringKind kind) noexcept {
  return kind == SemiringKind::Boolean ? "boolean" : "real";
}

SemiringKind semiring_from_name(const std::string& name) {
  if (name == "boolean") return SemiringKind::Boolean;
  if (name == "real") return SemiringKind::Real;
  throw ParameterError("unknown semiring \"" + name +
                       "\" (expected \"boolean\" or \"real\")");
}

namespace detail {

bool all_boolean01(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return ((m.array() == 0.0) || (m.array() == 1.0)).all();
}

Eigen::MatrixXd product_in(SemiringKind kind,
                           const Eigen::Ref<const Eigen::MatrixXd>& a,
                           const Eigen::Ref<const Eigen::MatrixXd>& b) {
  if (kind == SemiringKind::Real) return a * b;
  // Boolean: or-and product, exact on {0,1}.
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (a(i, k) != 0.0 && b(k, j) != 0.0) {
          out(i, j) = 1.0;
          break;
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXd sum_in(SemiringKind kind,
                       const Eigen::Ref<const Eigen::MatrixXd>& a,
                       const Eigen::Ref<const Eigen::MatrixXd>& b) {
  if (kind == SemiringKind::Real) return a + b;
  return a.cwiseMax(b);  // or on {0,1}
}

}  // namespace detail

Matrix::Matrix(SemiringKind kind, Eigen::MatrixXd values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw ShapeError("matrix dimensions must be positive");
  }
  if (kind_ == SemiringKind::Boolean && !detail::all_boolean01(values_)) {
    throw AlgebraError("boolean matrix entries must be exactly 0 or 1");
  }
}

Matrix Matrix::identity(SemiringKind kind, Eigen::Index n) {
  return Matrix(kind, Eigen::MatrixXd::Identity(n, n));
}

Matrix Matrix::zero(SemiringKind kind, Eigen::Index rows, Eigen::Index cols) {
  return Matrix(kind, Eigen::MatrixXd::Zero(rows, cols));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.kind() != b.kind()) {
    throw AlgebraError("cannot multiply matrices from different semirings");
  }
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: inner dimensions differ");
  }
  return Matrix(a.kind(), detail::product_in(a.kind(), a.values(), b.values()));
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.kind() != b.kind()) {
    throw AlgebraError("cannot add matrices from different semirings");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix sum: dimensions differ");
  }
  return Matrix(a.kind(), detail::sum_in(a.kind(), a.values(), b.values()));
}

double bilinear_form(const RowVector& left, const Matrix& m,
                     const ColVector& right) {
  if (left.size() != m.rows() || m.cols() != right.size()) {
    throw ShapeError("bilinear form: dimensions do not conform");
  }
  if (m.kind() == SemiringKind::Boolean &&
      (!detail::all_boolean01(left) || !detail::all_boolean01(right))) {
    throw AlgebraError("boolean bilinear form: vectors must be 0/1-valued");
  }
  Eigen::MatrixXd row = detail::product_in(m.kind(), left, m.values());
  Eigen::MatrixXd s = detail::product_in(m.kind(), row, right);
  return s(0, 0);
}

}  // namespace genaut
