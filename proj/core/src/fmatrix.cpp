#include "monoidlab/fmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace monoidlab {

FMatrix FMatrix::identity(PrimeField field, std::size_t n) {
  FMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint32_t v) { return v == 0; });
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("matrix product shape mismatch");
  const PrimeField& f = a.field();
  const std::uint64_t p = f.modulus();
  FMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = static_cast<std::uint32_t>((c(i, j) + aik * b(k, j)) % p);
      }
    }
  }
  return c;
}

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("matrix sum shape mismatch");
  FMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("matrix difference shape mismatch");
  FMatrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

FMatrix scale(const FMatrix& a, std::uint32_t c) {
  FMatrix r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r(i, j) = a.field().mul(a(i, j), c);
  return r;
}

std::vector<std::uint32_t> mat_vec(const FMatrix& a,
                                   const std::vector<std::uint32_t>& v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("matrix-vector shape mismatch");
  const PrimeField& f = a.field();
  const std::uint64_t p = f.modulus();
  std::vector<std::uint32_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += static_cast<std::uint64_t>(a(i, j)) * v[j];
      if (acc >= (1ULL << 62)) acc %= p;
    }
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

RrefResult reduce(const FMatrix& m) {
  const PrimeField& f = m.field();
  FMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    const std::uint32_t piv_inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j)
      a(row, j) = f.mul(a(row, j), piv_inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const std::uint32_t factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank_of(const FMatrix& m) { return reduce(m).rank; }

std::vector<std::vector<std::uint32_t>> nullspace(const FMatrix& m) {
  RrefResult r = reduce(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t k = 0; k < r.rank; ++k)
      v[r.pivots[k]] = f.neg(r.rref(k, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FMatrix> right_inverse(const FMatrix& m) {
  const PrimeField& f = m.field();
  // row-reduce [m | I]; m has full row rank iff all pivots land in the m part
  FMatrix aug(f, m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = 1;
  }
  RrefResult r = reduce(aug);
  std::size_t lead_rank = 0;
  for (std::size_t c : r.pivots)
    if (c < m.cols()) ++lead_rank;
  if (lead_rank < m.rows()) return std::nullopt;
  // full row rank: rows of the reduced [R | E] satisfy R x = E e_i with R in
  // RREF, so setting free variables to zero solves m x = e_i columnwise.
  FMatrix inv(f, m.cols(), m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const std::size_t pcol = r.pivots[k];
    for (std::size_t i = 0; i < m.rows(); ++i)
      inv(pcol, i) = r.rref(k, m.cols() + i);
  }
  return inv;
}

SparseRref::SparseRref(PrimeField field, std::size_t cols)
    : field_(field), cols_(cols), pivot_row_(cols, -1) {}

std::vector<SparseRref::Entry> SparseRref::reduce_row(std::vector<Entry> row) const {
  std::sort(row.begin(), row.end());
  // combine duplicate columns, drop zeros
  std::vector<Entry> cur;
  cur.reserve(row.size());
  for (const Entry& e : row) {
    if (!cur.empty() && cur.back().first == e.first) {
      cur.back().second = field_.add(cur.back().second, e.second);
      if (cur.back().second == 0) cur.pop_back();
    } else if (e.second % field_.modulus() != 0) {
      cur.push_back({e.first, e.second % field_.modulus()});
    }
  }
  std::vector<Entry> tmp;
  while (!cur.empty()) {
    const std::uint32_t lead = cur.front().first;
    const std::int32_t pr = pivot_row_[lead];
    if (pr < 0) return cur;
    // eliminate the leading entry: cur -= c * rows_[pr]
    const std::vector<Entry>& base = rows_[pr];
    const std::uint32_t c = cur.front().second;
    tmp.clear();
    tmp.reserve(cur.size() + base.size());
    std::size_t i = 0, j = 0;
    while (i < cur.size() || j < base.size()) {
      if (j == base.size() || (i < cur.size() && cur[i].first < base[j].first)) {
        tmp.push_back(cur[i++]);
      } else if (i == cur.size() || base[j].first < cur[i].first) {
        tmp.push_back({base[j].first, field_.neg(field_.mul(c, base[j].second))});
        ++j;
      } else {
        const std::uint32_t v = field_.sub(cur[i].second, field_.mul(c, base[j].second));
        if (v != 0) tmp.push_back({cur[i].first, v});
        ++i;
        ++j;
      }
    }
    cur.swap(tmp);
  }
  return cur;
}

void SparseRref::insert(std::vector<Entry> row) {
  std::vector<Entry> rem = reduce_row(std::move(row));
  if (rem.empty()) return;
  const std::uint32_t s = field_.inv(rem.front().second);
  if (s != 1)
    for (Entry& e : rem) e.second = field_.mul(e.second, s);
  pivot_row_[rem.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(rem));
  ++rank_;
}

std::vector<std::vector<std::uint32_t>> SparseRref::nullspace_basis() const {
  // Back-solve the echelon system once per free column instead of reducing to
  // full RREF; with one free column set to 1 and the rest to 0 the solution is
  // unique, so this matches the dense nullspace parametrization exactly.
  std::vector<std::pair<std::uint32_t, std::size_t>> piv;  // (col, row), by col
  for (std::uint32_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) piv.push_back({c, static_cast<std::size_t>(pivot_row_[c])});

  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [c, r] : piv) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free_col] = 1;
    for (std::size_t k = piv.size(); k-- > 0;) {
      const auto [pcol, prow] = piv[k];
      // row is normalized: leading coefficient at pcol equals 1
      std::uint64_t acc = 0;
      for (const Entry& e : rows_[prow]) {
        if (e.first == pcol) continue;
        acc += static_cast<std::uint64_t>(e.second) * v[e.first];
      }
      v[pcol] = field_.neg(static_cast<std::uint32_t>(acc % field_.modulus()));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace monoidlab
