#ifndef MONOIDLAB_GREEN_HPP_
#define MONOIDLAB_GREEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "monoidlab/fmatrix.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

/// Green's equivalences computed by brute force from principal ideal
/// containment (aM, Ma, MaM), so the image/kernel/rank characterizations
/// stay theorems under test rather than assumptions. Class ids are assigned
/// in order of least member index.
struct GreenData {
  std::vector<int> r_of, l_of, j_of, h_of;
  int num_r = 0, num_l = 0, num_j = 0, num_h = 0;

  struct JClass {
    int id = 0;
    int rank = 0;  // |image| of the least member
    std::vector<elem_t> members;
    std::vector<int> r_ids, l_ids;
    // cells[r][l] lists the members of the H-class at (r_ids[r], l_ids[l])
    std::vector<std::vector<std::vector<elem_t>>> cells;
  };
  std::vector<JClass> j_classes;

  const JClass& j_class_of_rank(int k) const;
};

GreenData green_data(const MonoidTable& table);

struct GreenCharReport {
  MonoidKind kind;
  int n = 0;
  std::size_t pairs_checked = 0;
  bool ok = false;
  std::string counterexample;
};

/// Exhaustive pairwise check that the ideal-based relations coincide with:
/// R <=> same image, L <=> same kernel set, J <=> same rank, H <=> both.
GreenCharReport verify_green_characterization(const MonoidTable& table,
                                              const GreenData& green);

struct EggboxView {
  MonoidKind kind;
  int n = 0, k = 0;
  std::vector<std::vector<int>> row_images;   // R-classes (rows)
  std::vector<std::vector<int>> col_kernels;  // L-classes (columns)
  std::vector<std::vector<int>> h_size;
  std::vector<std::vector<bool>> has_idempotent;
  int ofd_row_count = 0;  // rows whose image contains 1

  int r_count() const { return static_cast<int>(row_images.size()); }
  int l_count() const { return static_cast<int>(col_kernels.size()); }
};

EggboxView eggbox(const MonoidTable& table, const GreenData& green, int k);

/// The sandwich matrix of J_k with the fixed representative choice
/// Z = [k], a_Y = f^1_{Y,Z}, b_X = f^1_{Z,X}. Rows are kernel sets X in
/// lexicographic order; columns are image sets Y in lexicographic order,
/// which puts the P_1 block first. Entries live in G_J u {0}, encoded
/// 0 / +1 (identity of G_J) / -1 (the order-reversing group element).
struct SandwichMatrix {
  MonoidKind kind;
  int n = 0, k = 0;
  bool group_z2 = false;
  std::vector<std::vector<int>> row_kernels;
  std::vector<std::vector<int>> col_images;
  std::vector<std::int8_t> entries;  // row-major
  std::vector<elem_t> a_rep;         // per column
  std::vector<elem_t> b_rep;         // per row

  std::size_t rows() const { return row_kernels.size(); }
  std::size_t cols() const { return col_images.size(); }
  std::int8_t at(std::size_t r, std::size_t c) const {
    return entries[r * cols() + c];
  }
};

SandwichMatrix sandwich_matrix(const MonoidTable& table, const GreenData& green,
                               int k);

struct SandwichInvertibility {
  bool right_invertible = false;
  bool certificate_verified = false;
  std::vector<std::string> component_names;
  std::vector<FMatrix> components;
  std::vector<FMatrix> right_inverses;  // empty when not right invertible
};

/// Right invertibility of P over kG_J, decided character by character
/// (G_J is trivial or Z_2 here, and char(k) != 2 splits kZ_2 into two
/// one-dimensional components). Certificates are explicit right inverses,
/// re-verified by multiplication.
SandwichInvertibility sandwich_right_invertible(const SandwichMatrix& p,
                                                const PrimeField& field);

}  // namespace monoidlab

#endif  // MONOIDLAB_GREEN_HPP_
