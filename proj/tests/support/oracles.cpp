#include "support/oracles.hpp"

namespace monoidlab::test {

std::vector<Transformation> all_monotone_maps(int n, bool include_reversing) {
  std::vector<Transformation> out;
  std::vector<int> img(n, 1);
  while (true) {
    bool nondec = true, noninc = true;
    for (int i = 1; i < n; ++i) {
      if (img[i] < img[i - 1]) nondec = false;
      if (img[i] > img[i - 1]) noninc = false;
    }
    if (nondec || (include_reversing && noninc)) out.push_back({n, img});
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n) img[pos--] = 1;
    if (pos < 0) break;
    ++img[pos];
  }
  return out;
}

FMatrix sandwich_regular_expansion(const SandwichMatrix& p, const PrimeField& field) {
  const std::size_t block = p.group_z2 ? 2 : 1;
  FMatrix m(field, block * p.rows(), block * p.cols());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const std::int8_t e = p.at(r, c);
      if (e == 0) continue;
      if (block == 1) {
        m(r, c) = 1;
      } else if (e == 1) {
        m(2 * r, 2 * c) = 1;
        m(2 * r + 1, 2 * c + 1) = 1;
      } else {
        m(2 * r, 2 * c + 1) = 1;  // the order-reversing generator swaps the basis
        m(2 * r + 1, 2 * c) = 1;
      }
    }
  }
  return m;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace monoidlab::test
