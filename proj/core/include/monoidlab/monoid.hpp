#ifndef MONOIDLAB_MONOID_HPP_
#define MONOIDLAB_MONOID_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoidlab/transformation.hpp"

namespace monoidlab {

using elem_t = std::uint16_t;

enum class MonoidKind { Op, OD, COD, SemidirectOpZ2 };

std::string to_string(MonoidKind k);

/// Canonical name of an element: kernel set X (contains 1), image Y, the
/// orientation sign of the underlying map, and a formal sign that may differ
/// from it only on constants (COD keeps signed constants, OD collapses them).
/// For the semidirect product the label carries the Op part in (X, Y) and the
/// group component in formal_sign.
struct CanonicalLabel {
  std::vector<int> X, Y;
  int sign = 1;
  int formal_sign = 1;

  int rank() const { return static_cast<int>(X.size()); }
  bool is_constant() const { return Y.size() == 1; }
  bool operator==(const CanonicalLabel& o) const {
    return X == o.X && Y == o.Y && sign == o.sign && formal_sign == o.formal_sign;
  }
};

bool label_less(const CanonicalLabel& a, const CanonicalLabel& b);
std::string to_string(const CanonicalLabel& label);

/// A fully enumerated monoid: elements in a fixed deterministic order
/// (sorted by |X|, X, Y, sign, formal sign) plus the complete Cayley table.
class MonoidTable {
 public:
  MonoidKind kind;
  int n = 0;
  std::vector<CanonicalLabel> elements;
  std::vector<Transformation> transforms;  // realized maps (Op part for semidirect)
  elem_t identity = 0;

  std::size_t size() const { return elements.size(); }
  elem_t mul(std::size_t i, std::size_t j) const {
    return cayley_[i * size() + j];
  }
  int rank_of(std::size_t i) const { return elements[i].rank(); }

  /// Index of the element realizing the given map (and formal sign where the
  /// kind distinguishes signed constants). Throws if absent.
  elem_t index_of(const Transformation& t, int formal_sign) const;
  /// Index lookup by canonical label.
  elem_t index_of(const CanonicalLabel& label) const;
  bool contains(const Transformation& t, int formal_sign) const;

  friend MonoidTable build_table(MonoidKind kind, int n);

 private:
  std::vector<elem_t> cayley_;
  std::unordered_map<std::uint64_t, elem_t> lookup_;
  std::uint64_t key_of(const Transformation& t, int formal_sign) const;
};

/// Size caps. Enumeration is capped independently of full table construction;
/// MONOIDLAB_MAX_N overrides both (clamped to what fits in elem_t).
int enumeration_cap();
int table_cap();

/// All elements in canonical order, without the Cayley table (n <= enumeration_cap).
std::vector<CanonicalLabel> enumerate_elements(MonoidKind kind, int n);

/// Elements plus full Cayley table (n <= table_cap).
MonoidTable enumerate_monoid(MonoidKind kind, int n);

/// The semidirect product Op_n x| Z_2 with action g * f = gfg.
MonoidTable semidirect_table(int n);

struct PhiReport {
  int n = 0;
  bool well_defined = false;
  bool multiplicative = false;
  bool injective = false;
  bool sizes_match = false;
  std::size_t semidirect_size = 0, cod_size = 0;
  std::string counterexample;
  bool ok() const { return well_defined && multiplicative && injective && sizes_match; }
};

/// Exhaustive check that phi((f, g)) = (fg, sgn(g)) is a monoid isomorphism
/// Op_n x| Z_2 -> COD_n.
PhiReport check_phi_isomorphism(int n);

struct PsiReport {
  int n = 0;
  bool homomorphism = false;
  bool surjective = false;
  bool fibers_ok = false;  // |fiber| = 1 except 2 over each constant
  std::size_t fiber2_count = 0;
  std::size_t fiber_sum = 0;
  std::string counterexample;
  bool ok() const { return homomorphism && surjective && fibers_ok; }
};

/// Exhaustive check that psi((f, g)) = fg is the natural epimorphism onto OD_n.
PsiReport check_psi_quotient(int n);

struct BruteForceCounts {
  std::size_t op = 0;  // order-preserving maps
  std::size_t od = 0;  // order-preserving or order-reversing maps
};

/// Independent oracle: walk all n^n maps and count the monotone ones.
/// The enumeration above constructs elements from (X, Y, sign) labels instead;
/// this filter exists to check it.
BruteForceCounts brute_force_monotone_counts(int n);

}  // namespace monoidlab

#endif  // MONOIDLAB_MONOID_HPP_
