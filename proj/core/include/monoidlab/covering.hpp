#ifndef MONOIDLAB_COVERING_HPP_
#define MONOIDLAB_COVERING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/algebra.hpp"
#include "monoidlab/schutz.hpp"

namespace monoidlab {

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// A basis morphism of the category D_n: r_{Y,X} when |Y| = |X|, d_{Y,X} when
/// |Y| = |X| + 1, both from object X to object Y. Zero morphisms are
/// identified with 0 of the contracted algebra and carry no basis index.
struct DMorphism {
  bool is_d = false;
  std::vector<int> Y, X;
  std::string label;
};

/// The contracted category algebra k_0 D_n. Composition follows the four
/// rules r.r = r, r.d = d, d.r = d, d.d = 0; its dimension equals |Op_n|.
struct ContractedDn {
  int n = 0;
  bool skeletal = false;
  std::vector<DMorphism> basis;
  Algebra algebra;

  std::optional<std::size_t> index_of(bool is_d, const std::vector<int>& Y,
                                      const std::vector<int>& X) const;
};

/// Full D_n on objects P_1([n]).
ContractedDn build_contracted_Dn(int n, const PrimeField& field);
/// One object [k] per size class; dimension 2n - 1.
ContractedDn build_skeletal_Dn(int n, const PrimeField& field);

/// A basis morphism of the full (non-skeletal) category algebra CA_n on
/// objects P_1([n]), materialized as a COD-module intertwiner matrix.
struct CatMorphism {
  bool is_delta = false;
  int sign = 1;  // +1 = "plus", -1 = "minus"
  std::vector<int> Y, X;
  FMatrix mat;
  std::string label;
};

struct CodCategoryAlgebra {
  int n = 0;
  std::vector<CatMorphism> basis;
  Algebra algebra;

  std::optional<std::size_t> index_of(bool is_delta, const std::vector<int>& Y,
                                      const std::vector<int>& X, int sign) const;
};

/// CA_n with basis eps/Delta^±_{Y,X}; dimension 2 |Op_n|.
CodCategoryAlgebra cod_category_algebra(int n, const PrimeField& field);

/// The maps F, F': k_0 D_n -> CA_n. Each sends a basis morphism to a basis
/// morphism: superscript + when |X| = 0, 1 (mod 4) and - when |X| = 2, 3
/// (mod 4) for F; F' swaps the signs. Matrices are recorded in the fixed
/// bases of both algebras.
struct FMaps {
  std::vector<std::size_t> f_image, fprime_image;  // D-basis index -> CA-basis index
  FMatrix f_matrix, fprime_matrix;
};

FMaps build_F_maps(const ContractedDn& dn, const CodCategoryAlgebra& ca);

struct DecompositionReport {
  int n = 0;
  std::uint32_t prime = 0;
  std::size_t dim_k0dn = 0, dim_can = 0;
  std::vector<NamedCheck> checks;
  bool ok = false;
};

/// Certifies k_0 D_n x k_0 D_n ~ CA_n (hence kCOD_n ~ kOp_n x kOp_n):
/// F and F' multiplicative on all basis pairs, mutually annihilating,
/// G = F + F' multiplicative and bijective by rank, dimensions matching.
/// Capped at n <= 5 unless allow_large.
DecompositionReport verify_product_decomposition(int n, const PrimeField& field,
                                                 bool allow_large = false);

struct StraightlineReport {
  int n = 0;
  std::uint32_t prime = 0;
  Quiver op_quiver;
  Quiver cod_quiver;
  std::vector<NamedCheck> checks;
  bool ok = false;
};

/// Quiver-shape corollaries: the skeletal k_0 D_n quiver is one straight
/// n-vertex path with rad^2 = 0, and the CA_n quiver is two disjoint such
/// paths.
StraightlineReport opn_quiver_check(int n, const PrimeField& field);

/// True iff the quiver restricted to the given vertices is a directed path
/// v1 -> v2 -> ... -> vm with single arrows.
bool is_straight_path(const Quiver& q, const std::vector<int>& vertices);

}  // namespace monoidlab

#endif  // MONOIDLAB_COVERING_HPP_
