#include "monoidlab/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace monoidlab {

namespace {

constexpr int kDefaultEnumCap = 8;
constexpr int kDefaultTableCap = 6;
// |COD_8| = 12870 fits elem_t; beyond n = 8 tables would overflow it.
constexpr int kHardCap = 8;

int env_cap() {
  const char* v = std::getenv("MONOIDLAB_MAX_N");
  if (!v) return 0;
  const int k = std::atoi(v);
  return k > 0 ? k : 0;
}

// all subsets of [n] of size k, optionally forced to contain 1, in lex order
std::vector<std::vector<int>> subsets(int n, int k, bool contain_one) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    const int remaining = k - static_cast<int>(cur.size());
    for (int v = next; v + remaining - 1 <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (contain_one) {
    cur.push_back(1);
    rec(rec, 2);
  } else {
    rec(rec, 1);
  }
  return out;
}

int sign_rank(int s) { return s == 1 ? 0 : 1; }

}  // namespace

std::string to_string(MonoidKind k) {
  switch (k) {
    case MonoidKind::Op: return "op";
    case MonoidKind::OD: return "od";
    case MonoidKind::COD: return "cod";
    case MonoidKind::SemidirectOpZ2: return "op_sd_z2";
  }
  return "?";
}

bool label_less(const CanonicalLabel& a, const CanonicalLabel& b) {
  if (a.X.size() != b.X.size()) return a.X.size() < b.X.size();
  if (a.X != b.X) return a.X < b.X;
  if (a.Y != b.Y) return a.Y < b.Y;
  if (a.sign != b.sign) return sign_rank(a.sign) < sign_rank(b.sign);
  return sign_rank(a.formal_sign) < sign_rank(b.formal_sign);
}

std::string to_string(const CanonicalLabel& label) {
  auto set_str = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "}";
  };
  std::string out = "f^" + std::string(label.sign == 1 ? "+1" : "-1") + "_" +
                    set_str(label.Y) + "," + set_str(label.X);
  if (label.formal_sign != label.sign)
    out += std::string("[") + (label.formal_sign == 1 ? "+1" : "-1") + "]";
  return out;
}

int enumeration_cap() {
  const int env = env_cap();
  if (env > 0) return std::min(env, kHardCap);
  return kDefaultEnumCap;
}

int table_cap() {
  const int env = env_cap();
  if (env > 0) return std::min(env, kHardCap);
  return kDefaultTableCap;
}

std::vector<CanonicalLabel> enumerate_elements(MonoidKind kind, int n) {
  if (n < 1 || n > enumeration_cap())
    throw std::invalid_argument("n out of range for enumeration");
  std::vector<CanonicalLabel> out;
  for (int k = 1; k <= n; ++k) {
    const auto kernels = subsets(n, k, true);
    const auto images = subsets(n, k, false);
    for (const auto& X : kernels) {
      for (const auto& Y : images) {
        switch (kind) {
          case MonoidKind::Op:
            out.push_back({X, Y, 1, 1});
            break;
          case MonoidKind::OD:
            out.push_back({X, Y, 1, 1});
            if (k > 1) out.push_back({X, Y, -1, -1});
            break;
          case MonoidKind::COD:
            out.push_back({X, Y, 1, 1});
            if (k > 1) {
              out.push_back({X, Y, -1, -1});
            } else {
              // signed constant (c_z, -1); the underlying map is the same
              out.push_back({X, Y, 1, -1});
            }
            break;
          case MonoidKind::SemidirectOpZ2:
            out.push_back({X, Y, 1, 1});
            out.push_back({X, Y, 1, -1});
            break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::uint64_t MonoidTable::key_of(const Transformation& t, int formal_sign) const {
  std::uint64_t key = 0;
  for (int v : t.img) key = key * 16 + static_cast<std::uint64_t>(v);
  const bool signed_kind =
      kind == MonoidKind::COD || kind == MonoidKind::SemidirectOpZ2;
  if (signed_kind && formal_sign == -1) key |= (1ULL << 62);
  return key;
}

elem_t MonoidTable::index_of(const Transformation& t, int formal_sign) const {
  const auto it = lookup_.find(key_of(t, formal_sign));
  if (it == lookup_.end())
    throw std::out_of_range("element not in monoid: " + to_string(t));
  return it->second;
}

bool MonoidTable::contains(const Transformation& t, int formal_sign) const {
  return lookup_.count(key_of(t, formal_sign)) != 0;
}

elem_t MonoidTable::index_of(const CanonicalLabel& label) const {
  return index_of(canonical_function(n, label.Y, label.X, label.sign),
                  label.formal_sign);
}

MonoidTable build_table(MonoidKind kind, int n) {
  if (n < 1 || n > table_cap())
    throw std::invalid_argument("n out of range for table construction");
  MonoidTable t;
  t.kind = kind;
  t.n = n;
  t.elements = enumerate_elements(kind, n);
  const std::size_t m = t.elements.size();
  t.transforms.reserve(m);
  for (const auto& lab : t.elements)
    t.transforms.push_back(canonical_function(n, lab.Y, lab.X, lab.sign));
  t.lookup_.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto key = t.key_of(t.transforms[i], t.elements[i].formal_sign);
    if (!t.lookup_.emplace(key, static_cast<elem_t>(i)).second)
      throw std::logic_error("duplicate element in enumeration");
  }
  t.identity = t.index_of(identity_transformation(n),
                          /*formal_sign=*/1);

  const Transformation rev = reversal_transformation(n);
  t.cayley_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      elem_t prod;
      if (kind == MonoidKind::SemidirectOpZ2) {
        // (f2, g2)(f1, g1) = (f2 (g2 f1 g2), g2 g1)
        const Transformation& f2 = t.transforms[i];
        const Transformation& f1 = t.transforms[j];
        const int g2 = t.elements[i].formal_sign;
        const int g1 = t.elements[j].formal_sign;
        Transformation acted =
            g2 == 1 ? f1 : compose(rev, compose(f1, rev));
        prod = t.index_of(compose(f2, acted), g2 * g1);
      } else {
        const Transformation composite = compose(t.transforms[i], t.transforms[j]);
        const int fs = t.elements[i].formal_sign * t.elements[j].formal_sign;
        prod = t.index_of(composite, fs);
      }
      t.cayley_[i * m + j] = prod;
    }
  }
  return t;
}

MonoidTable enumerate_monoid(MonoidKind kind, int n) { return build_table(kind, n); }

MonoidTable semidirect_table(int n) {
  return build_table(MonoidKind::SemidirectOpZ2, n);
}

PhiReport check_phi_isomorphism(int n) {
  PhiReport rep;
  rep.n = n;
  const MonoidTable sd = semidirect_table(n);
  const MonoidTable cod = enumerate_monoid(MonoidKind::COD, n);
  rep.semidirect_size = sd.size();
  rep.cod_size = cod.size();
  rep.sizes_match = rep.semidirect_size == rep.cod_size;

  const Transformation rev = reversal_transformation(n);
  std::vector<elem_t> image(sd.size());
  rep.well_defined = true;
  for (std::size_t i = 0; i < sd.size(); ++i) {
    const int g = sd.elements[i].formal_sign;
    const Transformation fg =
        g == 1 ? sd.transforms[i] : compose(sd.transforms[i], rev);
    if (!cod.contains(fg, g)) {
      rep.well_defined = false;
      rep.counterexample = "phi(" + to_string(sd.elements[i]) + ") not in COD";
      return rep;
    }
    image[i] = cod.index_of(fg, g);
  }

  rep.multiplicative = true;
  for (std::size_t i = 0; i < sd.size() && rep.multiplicative; ++i) {
    for (std::size_t j = 0; j < sd.size(); ++j) {
      if (image[sd.mul(i, j)] != cod.mul(image[i], image[j])) {
        rep.multiplicative = false;
        rep.counterexample = "phi not multiplicative at (" +
                             to_string(sd.elements[i]) + ", " +
                             to_string(sd.elements[j]) + ")";
        break;
      }
    }
  }

  std::vector<bool> hit(cod.size(), false);
  rep.injective = true;
  for (elem_t v : image) {
    if (hit[v]) {
      rep.injective = false;
      rep.counterexample = "phi not injective";
      break;
    }
    hit[v] = true;
  }
  return rep;
}

BruteForceCounts brute_force_monotone_counts(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("brute force supports 1 <= n <= 9");
  BruteForceCounts counts;
  std::vector<int> img(n, 1);
  while (true) {
    bool nondec = true, noninc = true;
    for (int i = 1; i < n; ++i) {
      if (img[i] < img[i - 1]) nondec = false;
      if (img[i] > img[i - 1]) noninc = false;
    }
    if (nondec) ++counts.op;
    if (nondec || noninc) ++counts.od;
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n) img[pos--] = 1;
    if (pos < 0) break;
    ++img[pos];
  }
  return counts;
}

PsiReport check_psi_quotient(int n) {
  PsiReport rep;
  rep.n = n;
  const MonoidTable sd = semidirect_table(n);
  const MonoidTable od = enumerate_monoid(MonoidKind::OD, n);

  const Transformation rev = reversal_transformation(n);
  std::vector<elem_t> image(sd.size());
  for (std::size_t i = 0; i < sd.size(); ++i) {
    const int g = sd.elements[i].formal_sign;
    const Transformation fg =
        g == 1 ? sd.transforms[i] : compose(sd.transforms[i], rev);
    image[i] = od.index_of(fg, 1);
  }

  rep.homomorphism = true;
  for (std::size_t i = 0; i < sd.size() && rep.homomorphism; ++i) {
    for (std::size_t j = 0; j < sd.size(); ++j) {
      if (image[sd.mul(i, j)] != od.mul(image[i], image[j])) {
        rep.homomorphism = false;
        rep.counterexample = "psi not multiplicative at (" +
                             to_string(sd.elements[i]) + ", " +
                             to_string(sd.elements[j]) + ")";
        break;
      }
    }
  }

  std::vector<std::size_t> fiber(od.size(), 0);
  for (elem_t v : image) ++fiber[v];
  rep.surjective = std::all_of(fiber.begin(), fiber.end(),
                               [](std::size_t c) { return c > 0; });
  rep.fibers_ok = true;
  for (std::size_t e = 0; e < od.size(); ++e) {
    rep.fiber_sum += fiber[e];
    const bool constant = od.elements[e].is_constant();
    const std::size_t expected = constant ? 2 : 1;
    if (fiber[e] == 2) ++rep.fiber2_count;
    if (fiber[e] != expected) {
      rep.fibers_ok = false;
      rep.counterexample = "fiber over " + to_string(od.elements[e]) + " has " +
                           std::to_string(fiber[e]) + " elements";
    }
  }
  return rep;
}

}  // namespace monoidlab
