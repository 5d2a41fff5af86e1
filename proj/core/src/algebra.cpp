#include "monoidlab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoidlab {

namespace {

std::vector<SparseRref::Entry> to_sparse(const Coord& v) {
  std::vector<SparseRref::Entry> out;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back({i, v[i]});
  return out;
}

// span of a list of coordinate vectors with membership queries
class Span {
 public:
  Span(PrimeField field, std::size_t dim) : rref_(field, dim) {}
  void add(const Coord& v) { rref_.insert(to_sparse(v)); }
  bool contains(const Coord& v) const { return rref_.reduce_row(to_sparse(v)).empty(); }
  std::size_t dim() const { return rref_.rank(); }
  const SparseRref& rref() const { return rref_; }

 private:
  SparseRref rref_;
};

SparseCoord sparse_scale(const PrimeField& f, const SparseCoord& v, std::uint32_t c) {
  SparseCoord out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    const std::uint32_t y = f.mul(x, c);
    if (y != 0) out.push_back({i, y});
  }
  return out;
}

SparseCoord sparse_add(const PrimeField& f, const SparseCoord& a, const SparseCoord& b) {
  SparseCoord out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      const std::uint32_t v = f.add(a[i].second, b[j].second);
      if (v != 0) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Algebra::Algebra(PrimeField field, std::vector<std::string> labels,
                 std::vector<SparseCoord> products, Coord unit)
    : field_(field),
      labels_(std::move(labels)),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  if (products_.size() != labels_.size() * labels_.size() ||
      unit_.size() != labels_.size())
    throw std::invalid_argument("structure constant table shape mismatch");
  verify();
}

void Algebra::verify() const {
  const std::size_t d = dim();
  // unit law on every basis element
  for (std::size_t i = 0; i < d; ++i) {
    Coord e(d, 0);
    e[i] = 1;
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw std::logic_error("unit law fails at basis element " + labels_[i]);
  }
  // associativity on all basis triples, using the sparse product table
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SparseCoord& ij = product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        SparseCoord lhs;  // (e_i e_j) e_k
        for (const auto& [t, c] : ij)
          lhs = sparse_add(field_, lhs, sparse_scale(field_, product(t, k), c));
        SparseCoord rhs;  // e_i (e_j e_k)
        for (const auto& [t, c] : product(j, k))
          rhs = sparse_add(field_, rhs, sparse_scale(field_, product(i, t), c));
        if (lhs != rhs)
          throw std::logic_error("associativity fails at (" + labels_[i] + ", " +
                                 labels_[j] + ", " + labels_[k] + ")");
      }
    }
  }
}

Coord Algebra::multiply(const Coord& a, const Coord& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d)
    throw std::invalid_argument("coordinate vector size mismatch");
  Coord out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint32_t c = field_.mul(a[i], b[j]);
      for (const auto& [t, s] : product(i, j))
        out[t] = field_.add(out[t], field_.mul(c, s));
    }
  }
  return out;
}

FMatrix Algebra::left_mult_matrix(const Coord& a) const {
  const std::size_t d = dim();
  FMatrix m(field_, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Coord e(d, 0);
    e[j] = 1;
    const Coord col = multiply(a, e);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

IdempotentReport verify_primitive_orthogonal(const Algebra& a,
                                             const std::vector<Coord>& candidates) {
  IdempotentReport rep;
  rep.count = candidates.size();
  const std::size_t d = a.dim();
  const PrimeField& f = a.field();

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (a.multiply(candidates[i], candidates[i]) != candidates[i])
      rep.failures.push_back("candidate " + std::to_string(i) + ": e^2 != e");
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i == j) continue;
      const Coord prod = a.multiply(candidates[i], candidates[j]);
      if (!std::all_of(prod.begin(), prod.end(), [](std::uint32_t v) { return v == 0; }))
        rep.failures.push_back("candidates " + std::to_string(i) + "," +
                               std::to_string(j) + ": e_i e_j != 0");
    }
  }
  Coord sum(d, 0);
  for (const Coord& e : candidates)
    for (std::size_t t = 0; t < d; ++t) sum[t] = f.add(sum[t], e[t]);
  if (sum != a.unit()) rep.failures.push_back("sum of candidates != 1");

  // primitivity: e A e is spanned by e alone
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Span span(f, d);
    for (std::size_t b = 0; b < d; ++b) {
      Coord eb(d, 0);
      eb[b] = 1;
      span.add(a.multiply(candidates[i], a.multiply(eb, candidates[i])));
    }
    if (span.dim() != 1)
      rep.failures.push_back("candidate " + std::to_string(i) + ": dim(eAe) = " +
                             std::to_string(span.dim()) + " != 1");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

namespace {

// span of pairwise products of two spanning sets
std::vector<Coord> product_span_basis(const Algebra& a, const std::vector<Coord>& u,
                                      const std::vector<Coord>& v) {
  Span span(a.field(), a.dim());
  std::vector<Coord> basis;
  for (const Coord& x : u) {
    for (const Coord& y : v) {
      const Coord p = a.multiply(x, y);
      if (!span.contains(p)) {
        span.add(p);
        basis.push_back(p);
      }
    }
  }
  return basis;
}

std::vector<Coord> echelon_basis(const PrimeField& f, std::size_t dim,
                                 const std::vector<Coord>& vecs) {
  if (vecs.empty()) return {};
  FMatrix m(f, vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  const RrefResult r = reduce(m);
  std::vector<Coord> out;
  for (std::size_t i = 0; i < r.rank; ++i) {
    Coord row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = r.rref(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

RadicalData radical(const Algebra& a, const std::optional<RadicalCandidate>& candidate) {
  RadicalData out;
  const std::size_t d = a.dim();
  const PrimeField& f = a.field();
  const bool trace_applicable = f.modulus() > d;

  if (!candidate && !trace_applicable)
    throw trace_form_error(
        "trace-form radical requires modulus > dim(A) = " + std::to_string(d) +
        " (got p = " + std::to_string(f.modulus()) + ") and no candidate was given");

  std::optional<std::vector<Coord>> candidate_basis;
  if (candidate) {
    out.candidate_path_run = true;
    bool ok = true;
    Span span(f, d);
    for (const Coord& r : candidate->basis) span.add(r);

    // two-sided ideal
    for (std::size_t b = 0; b < d && ok; ++b) {
      Coord eb(d, 0);
      eb[b] = 1;
      for (const Coord& r : candidate->basis) {
        if (!span.contains(a.multiply(eb, r)) || !span.contains(a.multiply(r, eb))) {
          out.notes.push_back("candidate span is not a two-sided ideal");
          ok = false;
          break;
        }
      }
    }

    // nilpotency index
    if (ok) {
      std::vector<Coord> power = candidate->basis;
      int index = 1;
      while (!power.empty() && index <= static_cast<int>(d) + 1) {
        power = product_span_basis(a, power, candidate->basis);
        ++index;
        if (index == 2) out.rad_square_zero = power.empty();
      }
      if (!power.empty()) {
        out.notes.push_back("candidate span is not nilpotent");
        ok = false;
      } else {
        out.nilpotency_index = index;
      }
      if (candidate->basis.empty()) {
        out.nilpotency_index = 1;
        out.rad_square_zero = true;
      }
    }

    // split semisimple quotient: orthogonal idempotent images spanning A/R
    if (ok) {
      Span full(f, d);
      for (const Coord& r : candidate->basis) full.add(r);
      for (const Coord& e : candidate->idempotents) full.add(e);
      if (full.dim() != d) {
        out.notes.push_back("radical + idempotents do not span A");
        ok = false;
      }
      Coord sum(d, 0);
      for (const Coord& e : candidate->idempotents)
        for (std::size_t t = 0; t < d; ++t) sum[t] = f.add(sum[t], e[t]);
      Coord diff(d, 0);
      for (std::size_t t = 0; t < d; ++t) diff[t] = f.sub(sum[t], a.unit()[t]);
      if (!span.contains(diff)) {
        out.notes.push_back("idempotent images do not sum to 1 mod R");
        ok = false;
      }
      for (std::size_t i = 0; i < candidate->idempotents.size() && ok; ++i) {
        for (std::size_t j = 0; j < candidate->idempotents.size(); ++j) {
          Coord p = a.multiply(candidate->idempotents[i], candidate->idempotents[j]);
          if (i == j)
            for (std::size_t t = 0; t < d; ++t)
              p[t] = f.sub(p[t], candidate->idempotents[i][t]);
          if (!span.contains(p)) {
            out.notes.push_back("quotient candidates are not orthogonal idempotents mod R");
            ok = false;
            break;
          }
        }
      }
    }
    out.candidate_verified = ok;
    if (ok) {
      candidate_basis = echelon_basis(f, d, candidate->basis);
      out.quotient_idempotents = candidate->idempotents;
    }
  }

  std::optional<std::vector<Coord>> trace_basis;
  if (trace_applicable) {
    out.trace_path_run = true;
    // gram matrix of the trace form of the regular representation
    std::vector<FMatrix> lm;
    lm.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      Coord e(d, 0);
      e[i] = 1;
      lm.push_back(a.left_mult_matrix(e));
    }
    FMatrix gram(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t tr = 0;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            tr += static_cast<std::uint64_t>(lm[i](r, c)) * lm[j](c, r) % f.modulus();
        gram(i, j) = static_cast<std::uint32_t>(tr % f.modulus());
      }
    trace_basis = echelon_basis(f, d, nullspace(gram));
  }

  if (candidate_basis && trace_basis) {
    out.paths_agree = *candidate_basis == *trace_basis;
    if (!out.paths_agree) out.notes.push_back("candidate and trace-form radicals differ");
  }

  if (candidate_basis) out.basis = std::move(*candidate_basis);
  else if (trace_basis) out.basis = std::move(*trace_basis);

  if (!candidate && trace_basis) {
    // derive nilpotency data on the trace path alone
    if (out.basis.empty()) {
      out.nilpotency_index = 1;
      out.rad_square_zero = true;
    } else {
      std::vector<Coord> power = out.basis;
      int index = 1;
      while (!power.empty() && index <= static_cast<int>(d) + 1) {
        power = product_span_basis(a, power, out.basis);
        ++index;
        if (index == 2) out.rad_square_zero = power.empty();
      }
      out.nilpotency_index = index;
    }
  }
  return out;
}

Quiver quiver(const Algebra& a, const std::vector<Coord>& idempotents,
              const std::vector<std::string>& vertex_labels, const RadicalData& rad) {
  if (idempotents.size() != vertex_labels.size())
    throw std::invalid_argument("idempotent / label count mismatch");
  Quiver q;
  q.vertices = vertex_labels;
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();

  const std::vector<Coord> rad2 = [&] {
    std::vector<Coord> prods;
    for (const Coord& r : rad.basis)
      for (const Coord& s : rad.basis) prods.push_back(a.multiply(r, s));
    return prods;
  }();
  q.relations_all_length2_zero =
      std::all_of(rad2.begin(), rad2.end(), [](const Coord& v) {
        return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
      });

  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      // arrows i -> j counted by dim e_j (R / R^2) e_i
      Span rad2_span(f, d);
      for (const Coord& v : rad2) rad2_span.add(a.multiply(idempotents[j], a.multiply(v, idempotents[i])));
      const std::size_t base = rad2_span.dim();
      for (const Coord& r : rad.basis)
        rad2_span.add(a.multiply(idempotents[j], a.multiply(r, idempotents[i])));
      const int mult = static_cast<int>(rad2_span.dim() - base);
      if (mult > 0)
        q.arrows.push_back({static_cast<int>(i), static_cast<int>(j), mult});
    }
  }
  return q;
}

std::vector<std::vector<int>> quiver_components(const Quiver& q) {
  const int nv = static_cast<int>(q.vertices.size());
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& ar : q.arrows) {
    const int a = find(ar.src), b = find(ar.dst);
    if (a != b) parent[a] = b;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(nv, -1);
  for (int i = 0; i < nv; ++i) {
    const int root = find(i);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[root]].push_back(i);
  }
  return comps;
}

}  // namespace monoidlab
