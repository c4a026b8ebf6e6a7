#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tf/arith/place.hpp"
#include "tf/arith/square_class.hpp"

namespace tf::qf {

using arith::BrauerSupport;
using arith::Integer;
using arith::Place;
using arith::Rational;
using arith::SquareClass;

using Matrix = std::vector<std::vector<Rational>>;

/// Nondegenerate quadratic form over Q in diagonal presentation
/// <a_1, ..., a_n> with each a_i a square class. When the form was built
/// from a Gram matrix, that matrix is kept as `source`.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::vector<SquareClass> diagonal, std::optional<Matrix> source = std::nullopt)
      : diag_(std::move(diagonal)), source_(std::move(source)) {}

  /// <r_1, ..., r_n> for nonzero rationals.
  static QuadraticForm diagonal(const std::vector<Rational>& entries);
  static QuadraticForm diagonal(std::initializer_list<long> entries);

  int dim() const { return static_cast<int>(diag_.size()); }
  const std::vector<SquareClass>& entries() const { return diag_; }
  const std::optional<Matrix>& source() const { return source_; }

  int positive_count() const;
  int negative_count() const { return dim() - positive_count(); }
  SquareClass det() const;

  std::string to_string() const;

 private:
  std::vector<SquareClass> diag_;
  std::optional<Matrix> source_;
};

/// Congruence-diagonalizes a symmetric nondegenerate Gram matrix.
/// Throws PreconditionError("degenerate form") or on a non-symmetric input.
QuadraticForm diagonalize(const Matrix& gram);

/// Same, also returning P with P * gram * P^T diagonal (pivots in `pivots`).
QuadraticForm diagonalize(const Matrix& gram, Matrix& transform, std::vector<Rational>& pivots);

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm direct_sum(const std::vector<QuadraticForm>& parts);

/// n copies of the form (n >= 0).
QuadraticForm repeat(const QuadraticForm& f, int n);

/// The hyperbolic plane <1, -1>, and H^n.
QuadraticForm hyperbolic(int n = 1);
/// The n-dimensional negative unit form <-1, ..., -1>.
QuadraticForm negative_unit(int n);

/// Gram matrices of root lattices with negative-definite sign convention.
Matrix negative_e8_gram();
Matrix negative_a2_gram();
Matrix hyperbolic_gram();
/// Block-diagonal sum of Gram matrices.
Matrix block_sum(const std::vector<Matrix>& blocks);

}  // namespace tf::qf
