#ifndef MONOIDLAB_FMATRIX_HPP_
#define MONOIDLAB_FMATRIX_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monoidlab/fp.hpp"

namespace monoidlab {

/// Dense row-major matrix over F_p. Everything downstream lives at desk scale
/// (dimensions well below ~1000), so dense storage and classical elimination
/// are the right tools.
class FMatrix {
 public:
  FMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FMatrix identity(PrimeField field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }

  bool operator==(const FMatrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const noexcept;

  FMatrix transpose() const;

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

FMatrix operator*(const FMatrix& a, const FMatrix& b);
FMatrix operator+(const FMatrix& a, const FMatrix& b);
FMatrix operator-(const FMatrix& a, const FMatrix& b);
FMatrix scale(const FMatrix& a, std::uint32_t c);

std::vector<std::uint32_t> mat_vec(const FMatrix& a,
                                   const std::vector<std::uint32_t>& v);

struct RrefResult {
  FMatrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row-echelon form; preserves the row space.
RrefResult reduce(const FMatrix& m);

/// Basis of {v : m v = 0}, one column vector per basis element, in the
/// standard free-column parametrization of the RREF (deterministic).
std::vector<std::vector<std::uint32_t>> nullspace(const FMatrix& m);

/// A matrix R with m R = I, or nullopt iff rank(m) < rows(m).
std::optional<FMatrix> right_inverse(const FMatrix& m);

std::size_t rank_of(const FMatrix& m);

/// Incremental row-space accumulator over F_p for large sparse systems
/// (intertwiner equations). Rows are inserted one at a time in sparse form;
/// the basis is kept in echelon form with sparse rows.
class SparseRref {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (column, value)

  SparseRref(PrimeField field, std::size_t cols);

  /// Reduce `row` against the current basis and absorb the remainder if it is
  /// nonzero. Entries must have distinct columns; order is irrelevant.
  void insert(std::vector<Entry> row);

  /// Remainder of `row` after elimination against the current basis, without
  /// inserting. Empty result means the row lies in the accumulated row space.
  std::vector<Entry> reduce_row(std::vector<Entry> row) const;

  std::size_t rank() const noexcept { return rank_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Nullspace of the accumulated system, same deterministic free-column
  /// parametrization as the dense path.
  std::vector<std::vector<std::uint32_t>> nullspace_basis() const;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::int32_t> pivot_row_;        // column -> row index or -1
  std::vector<std::vector<Entry>> rows_;       // echelon rows, sorted by column
};

}  // namespace monoidlab

#endif  // MONOIDLAB_FMATRIX_HPP_
