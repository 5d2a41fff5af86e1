#include "monoidlab/green.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoidlab {

namespace {

using Bitset = std::vector<std::uint64_t>;

void set_bit(Bitset& b, std::size_t i) { b[i >> 6] |= (1ULL << (i & 63)); }

void or_into(Bitset& dst, const Bitset& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

// group equal bitsets; ids in order of least member index
std::pair<std::vector<int>, int> classify(const std::vector<Bitset>& sets) {
  const std::size_t m = sets.size();
  std::vector<int> cls(m, -1);
  int next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (std::size_t j = i + 1; j < m; ++j)
      if (cls[j] < 0 && sets[j] == sets[i]) cls[j] = next;
    ++next;
  }
  return {std::move(cls), next};
}

}  // namespace

const GreenData::JClass& GreenData::j_class_of_rank(int k) const {
  const JClass* found = nullptr;
  for (const auto& j : j_classes) {
    if (j.rank != k) continue;
    if (found) throw std::logic_error("multiple J-classes of the same rank");
    found = &j;
  }
  if (!found) throw std::out_of_range("no J-class of rank " + std::to_string(k));
  return *found;
}

GreenData green_data(const MonoidTable& table) {
  const std::size_t m = table.size();
  const std::size_t words = (m + 63) / 64;
  GreenData g;

  std::vector<Bitset> right(m, Bitset(words, 0));  // aM
  std::vector<Bitset> left(m, Bitset(words, 0));   // Ma
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t s = 0; s < m; ++s) {
      set_bit(right[a], table.mul(a, s));
      set_bit(left[a], table.mul(s, a));
    }
  }
  std::tie(g.r_of, g.num_r) = classify(right);
  std::tie(g.l_of, g.num_l) = classify(left);

  std::vector<Bitset> two_sided(m, Bitset(words, 0));  // MaM
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (left[a][b >> 6] & (1ULL << (b & 63))) or_into(two_sided[a], right[b]);
    }
  }
  std::tie(g.j_of, g.num_j) = classify(two_sided);

  // H = R ^ L, ids again by least member
  {
    std::vector<int> h(m, -1);
    int next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (h[i] >= 0) continue;
      h[i] = next;
      for (std::size_t j = i + 1; j < m; ++j)
        if (h[j] < 0 && g.r_of[j] == g.r_of[i] && g.l_of[j] == g.l_of[i]) h[j] = next;
      ++next;
    }
    g.h_of = std::move(h);
    g.num_h = next;
  }

  g.j_classes.resize(g.num_j);
  for (int id = 0; id < g.num_j; ++id) g.j_classes[id].id = id;
  for (std::size_t e = 0; e < m; ++e)
    g.j_classes[g.j_of[e]].members.push_back(static_cast<elem_t>(e));
  for (auto& j : g.j_classes) {
    j.rank = table.rank_of(j.members.front());
    for (elem_t e : j.members) {
      if (std::find(j.r_ids.begin(), j.r_ids.end(), g.r_of[e]) == j.r_ids.end())
        j.r_ids.push_back(g.r_of[e]);
      if (std::find(j.l_ids.begin(), j.l_ids.end(), g.l_of[e]) == j.l_ids.end())
        j.l_ids.push_back(g.l_of[e]);
    }
    std::sort(j.r_ids.begin(), j.r_ids.end());
    std::sort(j.l_ids.begin(), j.l_ids.end());
    j.cells.assign(j.r_ids.size(),
                   std::vector<std::vector<elem_t>>(j.l_ids.size()));
    for (elem_t e : j.members) {
      const auto r = std::find(j.r_ids.begin(), j.r_ids.end(), g.r_of[e]) - j.r_ids.begin();
      const auto l = std::find(j.l_ids.begin(), j.l_ids.end(), g.l_of[e]) - j.l_ids.begin();
      j.cells[r][l].push_back(e);
    }
  }
  return g;
}

GreenCharReport verify_green_characterization(const MonoidTable& table,
                                              const GreenData& green) {
  if (table.kind != MonoidKind::OD && table.kind != MonoidKind::COD)
    throw std::invalid_argument("characterization check targets OD/COD");
  GreenCharReport rep;
  rep.kind = table.kind;
  rep.n = table.n;
  const std::size_t m = table.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& li = table.elements[i];
    for (std::size_t j = 0; j < m; ++j) {
      const auto& lj = table.elements[j];
      ++rep.pairs_checked;
      const bool same_y = li.Y == lj.Y;
      const bool same_x = li.X == lj.X;
      const bool same_rank = li.rank() == lj.rank();
      if ((green.r_of[i] == green.r_of[j]) != same_y ||
          (green.l_of[i] == green.l_of[j]) != same_x ||
          (green.j_of[i] == green.j_of[j]) != same_rank ||
          (green.h_of[i] == green.h_of[j]) != (same_x && same_y)) {
        rep.counterexample = "(" + to_string(li) + ", " + to_string(lj) + ")";
        rep.ok = false;
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

EggboxView eggbox(const MonoidTable& table, const GreenData& green, int k) {
  if (k < 1 || k > table.n) throw std::invalid_argument("k out of range");
  const auto& jc = green.j_class_of_rank(k);
  EggboxView v;
  v.kind = table.kind;
  v.n = table.n;
  v.k = k;

  // display order: rows by image set (lex, so the P_1 block comes first),
  // columns by kernel set (lex)
  std::vector<std::pair<std::vector<int>, std::size_t>> rows, cols;
  for (std::size_t r = 0; r < jc.r_ids.size(); ++r) {
    elem_t wit = 0;
    for (std::size_t l = 0; l < jc.l_ids.size(); ++l)
      if (!jc.cells[r][l].empty()) {
        wit = jc.cells[r][l].front();
        break;
      }
    rows.push_back({table.elements[wit].Y, r});
  }
  for (std::size_t l = 0; l < jc.l_ids.size(); ++l) {
    elem_t wit = 0;
    for (std::size_t r = 0; r < jc.r_ids.size(); ++r)
      if (!jc.cells[r][l].empty()) {
        wit = jc.cells[r][l].front();
        break;
      }
    cols.push_back({table.elements[wit].X, l});
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());

  for (const auto& [y, r] : rows) {
    v.row_images.push_back(y);
    if (y.front() == 1) ++v.ofd_row_count;
  }
  for (const auto& [x, l] : cols) v.col_kernels.push_back(x);

  v.h_size.assign(rows.size(), std::vector<int>(cols.size(), 0));
  v.has_idempotent.assign(rows.size(), std::vector<bool>(cols.size(), false));
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const auto& cell = jc.cells[rows[ri].second][cols[ci].second];
      v.h_size[ri][ci] = static_cast<int>(cell.size());
      for (elem_t e : cell)
        if (table.mul(e, e) == e) v.has_idempotent[ri][ci] = true;
    }
  }
  return v;
}

SandwichMatrix sandwich_matrix(const MonoidTable& table, const GreenData& green,
                               int k) {
  if (table.kind == MonoidKind::SemidirectOpZ2)
    throw std::invalid_argument("sandwich matrices target Op/OD/COD");
  if (k < 1 || k > table.n) throw std::invalid_argument("k out of range");

  SandwichMatrix p;
  p.kind = table.kind;
  p.n = table.n;
  p.k = k;
  p.group_z2 = table.kind == MonoidKind::COD ||
               (table.kind == MonoidKind::OD && k > 1);

  std::vector<int> Z(k);
  for (int i = 0; i < k; ++i) Z[i] = i + 1;

  {
    std::vector<std::vector<int>> xs, ys;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next, int need,
                   std::vector<std::vector<int>>& out) -> void {
      if (need == 0) {
        out.push_back(cur);
        return;
      }
      for (int v = next; v + need - 1 <= table.n; ++v) {
        cur.push_back(v);
        self(self, v + 1, need - 1, out);
        cur.pop_back();
      }
    };
    cur = {1};
    rec(rec, 2, k - 1, xs);
    cur.clear();
    rec(rec, 1, k, ys);
    p.row_kernels = std::move(xs);  // lex order, all contain 1
    p.col_images = std::move(ys);   // lex order; P_1 block first automatically
  }

  const elem_t ez = table.index_of(canonical_function(table.n, Z, Z, 1), 1);
  const int h_group = green.h_of[ez];

  for (const auto& X : p.row_kernels)
    p.b_rep.push_back(table.index_of(canonical_function(table.n, Z, X, 1), 1));
  for (const auto& Y : p.col_images)
    p.a_rep.push_back(table.index_of(canonical_function(table.n, Y, Z, 1), 1));

  p.entries.assign(p.rows() * p.cols(), 0);
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const elem_t prod = table.mul(p.b_rep[r], p.a_rep[c]);
      if (green.h_of[prod] != h_group) continue;  // not in H_{Z,Z}: entry 0
      const auto& lab = table.elements[prod];
      p.entries[r * p.cols() + c] =
          static_cast<std::int8_t>(table.kind == MonoidKind::COD ? lab.formal_sign
                                                                 : lab.sign);
    }
  }
  return p;
}

SandwichInvertibility sandwich_right_invertible(const SandwichMatrix& p,
                                                const PrimeField& field) {
  SandwichInvertibility res;
  const std::uint32_t one = 1;
  const std::uint32_t minus_one = field.neg(1);

  auto component = [&](bool minus_character) {
    FMatrix m(field, p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) {
        const std::int8_t e = p.at(r, c);
        if (e == 1) m(r, c) = one;
        else if (e == -1) m(r, c) = minus_character ? minus_one : one;
      }
    return m;
  };

  if (p.group_z2) {
    res.component_names = {"chi_trivial", "chi_sign"};
    res.components.push_back(component(false));
    res.components.push_back(component(true));
  } else {
    res.component_names = {"trivial"};
    res.components.push_back(component(false));
  }

  res.right_invertible = true;
  for (const FMatrix& m : res.components) {
    auto inv = right_inverse(m);
    if (!inv) {
      res.right_invertible = false;
      res.right_inverses.clear();
      return res;
    }
    res.right_inverses.push_back(std::move(*inv));
  }
  res.certificate_verified = true;
  for (std::size_t i = 0; i < res.components.size(); ++i) {
    const FMatrix prod = res.components[i] * res.right_inverses[i];
    if (!(prod == FMatrix::identity(field, p.rows())))
      res.certificate_verified = false;
  }
  return res;
}

}  // namespace monoidlab
