#ifndef MONOIDLAB_ALGEBRA_HPP_
#define MONOIDLAB_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidlab/fmatrix.hpp"

namespace monoidlab {

/// Thrown when the trace-form radical is requested at a modulus that does not
/// exceed the algebra dimension (the criterion is unsound there).
struct trace_form_error : std::domain_error {
  explicit trace_form_error(const std::string& what) : std::domain_error(what) {}
};

using Coord = std::vector<std::uint32_t>;
using SparseCoord = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// A finite-dimensional associative unital algebra over F_p given by structure
/// constants. Products of basis elements are stored sparsely; every instance
/// is validated (associativity on all basis triples, unit law) at construction.
class Algebra {
 public:
  Algebra(PrimeField field, std::vector<std::string> labels,
          std::vector<SparseCoord> products, Coord unit);

  std::size_t dim() const { return labels_.size(); }
  const PrimeField& field() const { return field_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Coord& unit() const { return unit_; }

  const SparseCoord& product(std::size_t i, std::size_t j) const {
    return products_[i * dim() + j];
  }

  Coord multiply(const Coord& a, const Coord& b) const;
  FMatrix left_mult_matrix(const Coord& a) const;

 private:
  void verify() const;

  PrimeField field_;
  std::vector<std::string> labels_;
  std::vector<SparseCoord> products_;
  Coord unit_;
};

struct IdempotentReport {
  bool ok = false;
  std::size_t count = 0;
  std::vector<std::string> failures;
};

/// Checks e^2 = e, e_i e_j = 0 for i != j, sum e = 1, and primitivity via
/// dim(e A e) = 1 (sufficient for the split basic algebras built here).
IdempotentReport verify_primitive_orthogonal(const Algebra& a,
                                             const std::vector<Coord>& candidates);

struct RadicalCandidate {
  std::vector<Coord> basis;        // proposed radical spanning set
  std::vector<Coord> idempotents;  // orthogonal idempotents lifting A/R
};

struct RadicalData {
  std::vector<Coord> basis;  // canonical (echelonized) radical basis
  int nilpotency_index = 0;  // smallest t with R^t = 0 (1 for R = 0)
  bool rad_square_zero = false;
  bool candidate_path_run = false;
  bool candidate_verified = false;
  bool trace_path_run = false;
  bool paths_agree = false;
  std::vector<Coord> quotient_idempotents;
  std::vector<std::string> notes;
  std::size_t dim() const { return basis.size(); }
};

/// Jacobson radical via two independent routes that must agree whenever both
/// apply: (1) verification of a candidate spanning set (two-sided ideal,
/// nilpotency, split semisimple quotient exhibited by orthogonal idempotents
/// summing to 1) and (2) the trace form of the regular representation, valid
/// for p > dim(A). With no candidate and p <= dim(A) the call refuses.
RadicalData radical(const Algebra& a,
                    const std::optional<RadicalCandidate>& candidate = std::nullopt);

struct Quiver {
  struct Arrow {
    int src = 0, dst = 0, mult = 0;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  bool relations_all_length2_zero = false;
};

/// Quiver of a split basic algebra: arrow count e_i -> e_j is
/// dim e_j (Rad/Rad^2) e_i. Requires a verified idempotent set and radical.
Quiver quiver(const Algebra& a, const std::vector<Coord>& idempotents,
              const std::vector<std::string>& vertex_labels,
              const RadicalData& rad);

/// Connected components of the underlying undirected graph, each a sorted
/// vertex index list; components ordered by smallest vertex.
std::vector<std::vector<int>> quiver_components(const Quiver& q);

}  // namespace monoidlab

#endif  // MONOIDLAB_ALGEBRA_HPP_
