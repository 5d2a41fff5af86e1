#ifndef MONOIDLAB_SCHUTZ_HPP_
#define MONOIDLAB_SCHUTZ_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/algebra.hpp"
#include "monoidlab/fmatrix.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

/// All subsets of [n] containing 1, ordered by (size, lexicographic).
std::vector<std::vector<int>> p1_subsets(int n);

/// Coefficients expressing w in a span of linearly independent matrices, or
/// nullopt when w lies outside it.
std::optional<std::vector<std::uint32_t>> solve_in_span(
    const std::vector<const FMatrix*>& basis, const FMatrix& w);

/// The Schutzenberger module kL_X: the span of the L-class of kernel set X,
/// acted on by s . x = sx when sx stays in L_X and 0 otherwise. The action is
/// stored as one partial map per monoid element (each column of the action
/// matrix is a standard basis vector or zero).
class SchutzModule {
 public:
  std::vector<int> X;

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<elem_t>& basis() const { return basis_; }
  const MonoidTable& table() const { return *table_; }

  /// sigma(s)[j] = row index of s * basis[j] inside L_X, or -1 when the
  /// product leaves the L-class (the action truncates to zero).
  const std::int32_t* sigma(std::size_t s) const {
    return act_.data() + s * basis_.size();
  }
  /// Position of a monoid element in the module basis, or -1.
  std::int32_t position(elem_t e) const { return pos_[e]; }

  FMatrix action_matrix(std::size_t s, const PrimeField& field) const;
  /// s . v for a coordinate vector v in kL_X.
  Coord act(std::size_t s, const Coord& v, const PrimeField& field) const;

  friend SchutzModule schutz_module(const MonoidTable& table, std::vector<int> X);

 private:
  const MonoidTable* table_ = nullptr;
  std::vector<elem_t> basis_;
  std::vector<std::int32_t> pos_;
  std::vector<std::int32_t> act_;
};

SchutzModule schutz_module(const MonoidTable& table, std::vector<int> X);

/// H~_{Y,X}: the elements f^a_{W,X} with W u {1} = Y. Its size predicts the
/// Hom-space dimension.
std::vector<elem_t> h_tilde(const MonoidTable& table, const std::vector<int>& Y,
                            const std::vector<int>& X);

struct HomBasis {
  std::vector<int> Y, X;
  std::vector<FMatrix> basis;  // |L_X| x |L_Y| intertwiner matrices
};

/// Basis of Hom(kL_Y, kL_X), computed by solving the intertwiner equations
/// T A_Y(s) = A_X(s) T over every monoid element s (duplicate action pairs are
/// skipped; they contribute identical equations). Independent of the paper's
/// explicit construction.
HomBasis hom_space(const SchutzModule& target, const SchutzModule& source,
                   const PrimeField& field);

/// True iff T A_Y(s) = A_X(s) T for every s in the monoid.
bool intertwines(const FMatrix& t, const SchutzModule& target,
                 const SchutzModule& source);

/// Matrix of rho^a_{Y,X}: g -> g * f^a_{Y,X} as a map kL_Y -> kL_X.
/// Checked nonzero and intertwining before returning.
FMatrix rho_hom(const MonoidTable& table, const std::vector<int>& Y,
                const std::vector<int>& X, int sign, const PrimeField& field);
FMatrix rho_hom(const SchutzModule& target, const SchutzModule& source, int sign,
                const PrimeField& field);

/// Coordinates of d^a_{Y,X} = sum_i (-1)^{i+1} f^a_{Y_i,X} in kL_X.
Coord d_vector(const MonoidTable& table, const std::vector<int>& Y,
               const std::vector<int>& X, int sign, const PrimeField& field);

/// Matrix of delta^a_{Y,X}: g -> g . d^a_{Y,X} as a map kL_Y -> kL_X
/// (requires |Y| = |X| + 1). Checked nonzero and intertwining.
FMatrix delta_hom(const MonoidTable& table, const std::vector<int>& Y,
                  const std::vector<int>& X, int sign, const PrimeField& field);
FMatrix delta_hom(const SchutzModule& target, const SchutzModule& source, int sign,
                  const PrimeField& field);

struct HomDimEntry {
  std::vector<int> Y, X;
  int dim = 0;
  int h_tilde_size = 0;
};

struct HomDimTable {
  MonoidKind kind;
  int n = 0;
  std::uint32_t prime = 0;
  std::vector<HomDimEntry> pairs;
  bool all_match = false;  // dim == |H~| on every pair
};

/// dim Hom(kL_Y, kL_X) for all pairs (Y, X) in P_1([n])^2, with the |H~|
/// prediction alongside. A mismatch is reported, not thrown.
HomDimTable hom_dim_table(const MonoidTable& table, const PrimeField& field);

enum class SkeletonKind { An, CAn };

std::string to_string(SkeletonKind k);

struct SkeletonMorphism {
  bool is_delta = false;
  int k = 0;
  int sign = 1;  // +1 = "plus", -1 = "minus" in the eps/Delta basis
  int op_src = 0, op_dst = 0;
  FMatrix mat;  // original orientation: eps_k on kL_k, Delta_k: kL_{k+1} -> kL_k
  std::string label;
};

/// The algebra of the opposite skeletal category on objects kL_[1..n], in the
/// eps/Delta basis. For A_n the vanishing eps_1^- and Delta_1^- are omitted
/// (the k = 1 morphisms collapse in OD); CA_n keeps all 4n - 2.
struct SkeletonAlgebra {
  SkeletonKind kind;
  int n = 0;
  std::vector<SkeletonMorphism> basis;
  Algebra algebra;

  std::optional<std::size_t> index_of(bool is_delta, int k, int sign) const;
  std::vector<Coord> eps_idempotents() const;
  std::vector<std::string> eps_labels() const;
  std::vector<Coord> delta_radical_candidate() const;
};

SkeletonAlgebra skeleton_algebra(SkeletonKind kind, int n, const PrimeField& field);

struct RelationCheck {
  std::string name;
  std::size_t instances = 0;
  bool pass = false;
  std::string first_failure;
};

struct RelationReport {
  SkeletonKind kind;
  int n = 0;
  std::uint32_t prime = 0;
  std::vector<RelationCheck> checks;
  bool ok = false;
};

/// Exact matrix verification of the composition relations: for A_n the
/// skeletal identities (including the sign identity rho_{k+1}^{-1} delta_k^a =
/// (-1)^k delta_k^{-a}) and the eps/Delta table; for CA_n the full-category
/// identities over all object triples, parity split on |X|.
RelationReport verify_relations(SkeletonKind kind, int n, const PrimeField& field);

}  // namespace monoidlab

#endif  // MONOIDLAB_SCHUTZ_HPP_
