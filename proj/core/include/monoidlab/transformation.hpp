#ifndef MONOIDLAB_TRANSFORMATION_HPP_
#define MONOIDLAB_TRANSFORMATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace monoidlab {

/// A total function on [n] = {1, ..., n}, stored as its image sequence:
/// img[i-1] is the image of i, with values in [1, n].
struct Transformation {
  int n = 0;
  std::vector<int> img;

  int operator()(int x) const { return img[x - 1]; }
  bool operator==(const Transformation& o) const {
    return n == o.n && img == o.img;
  }
};

enum class MonotoneClass { preserving, reversing, both, neither };

struct TransformationAnalysis {
  MonotoneClass cls = MonotoneClass::neither;
  std::vector<int> kernel_set;  // minima of the interval kernel classes
  std::vector<int> image;       // sorted value set
};

/// The canonical map with kernel set X, image Y and the given orientation:
/// for sign +1 the value on [x_i, x_{i+1}) is y_i, for sign -1 it is
/// y_{l+1-i}. Requires |X| = |Y| >= 1, 1 in X, both strictly increasing.
Transformation canonical_function(int n, const std::vector<int>& Y,
                                  const std::vector<int>& X, int sign);

/// Classify a map as order-preserving / order-reversing / both (constants) /
/// neither, with kernel set and image. For "neither" the sets are empty.
TransformationAnalysis analyze(const Transformation& t);

/// outer(inner(x)); the monoid product "outer * inner".
Transformation compose(const Transformation& outer, const Transformation& inner);

Transformation identity_transformation(int n);
/// The full order-reversing bijection x -> n + 1 - x.
Transformation reversal_transformation(int n);
Transformation constant_transformation(int n, int value);

std::string to_string(const Transformation& t);

}  // namespace monoidlab

#endif  // MONOIDLAB_TRANSFORMATION_HPP_
