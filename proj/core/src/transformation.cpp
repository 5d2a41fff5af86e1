#include "monoidlab/transformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace monoidlab {

namespace {

void check_subset(int n, const std::vector<int>& s, const char* name) {
  int prev = 0;
  for (int v : s) {
    if (v < 1 || v > n) throw std::invalid_argument(std::string(name) + " entry out of range");
    if (v <= prev) throw std::invalid_argument(std::string(name) + " not strictly increasing");
    prev = v;
  }
}

}  // namespace

Transformation canonical_function(int n, const std::vector<int>& Y,
                                  const std::vector<int>& X, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (X.empty() || X.size() != Y.size())
    throw std::invalid_argument("|X| = |Y| >= 1 required");
  if (X.front() != 1) throw std::invalid_argument("kernel set must contain 1");
  check_subset(n, X, "X");
  check_subset(n, Y, "Y");
  const std::size_t l = X.size();
  Transformation t;
  t.n = n;
  t.img.resize(n);
  std::size_t i = 0;  // current block: [x_i, x_{i+1})
  for (int x = 1; x <= n; ++x) {
    while (i + 1 < l && x >= X[i + 1]) ++i;
    t.img[x - 1] = sign == 1 ? Y[i] : Y[l - 1 - i];
  }
  return t;
}

TransformationAnalysis analyze(const Transformation& t) {
  TransformationAnalysis a;
  bool nondec = true, noninc = true;
  for (int x = 1; x < t.n; ++x) {
    if (t.img[x] < t.img[x - 1]) nondec = false;
    if (t.img[x] > t.img[x - 1]) noninc = false;
  }
  if (!nondec && !noninc) {
    a.cls = MonotoneClass::neither;
    return a;
  }
  a.cls = nondec && noninc ? MonotoneClass::both
                           : (nondec ? MonotoneClass::preserving : MonotoneClass::reversing);
  a.kernel_set.push_back(1);
  for (int x = 2; x <= t.n; ++x)
    if (t.img[x - 1] != t.img[x - 2]) a.kernel_set.push_back(x);
  a.image = t.img;
  std::sort(a.image.begin(), a.image.end());
  a.image.erase(std::unique(a.image.begin(), a.image.end()), a.image.end());
  return a;
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
  if (outer.n != inner.n) throw std::invalid_argument("domain size mismatch");
  Transformation t;
  t.n = outer.n;
  t.img.resize(t.n);
  for (int x = 1; x <= t.n; ++x) t.img[x - 1] = outer(inner(x));
  return t;
}

Transformation identity_transformation(int n) {
  Transformation t;
  t.n = n;
  t.img.resize(n);
  for (int x = 1; x <= n; ++x) t.img[x - 1] = x;
  return t;
}

Transformation reversal_transformation(int n) {
  Transformation t;
  t.n = n;
  t.img.resize(n);
  for (int x = 1; x <= n; ++x) t.img[x - 1] = n + 1 - x;
  return t;
}

Transformation constant_transformation(int n, int value) {
  Transformation t;
  t.n = n;
  t.img.assign(n, value);
  return t;
}

std::string to_string(const Transformation& t) {
  std::string s = "(";
  for (int i = 0; i < t.n; ++i) {
    if (i) s += ",";
    s += std::to_string(t.img[i]);
  }
  s += ")";
  return s;
}

}  // namespace monoidlab
