#ifndef MONOIDLAB_FP_HPP_
#define MONOIDLAB_FP_HPP_

#include <cstdint>
#include <stdexcept>

namespace monoidlab {

/// Thrown when a prime field with p = 2 is requested. All of the change-of-basis
/// machinery divides by 2, so characteristic 2 is rejected at construction time.
struct char_two_error : std::domain_error {
  char_two_error() : std::domain_error("prime field with p = 2 is not supported") {}
};

/// The field F_p for an odd prime p. Elements are residues in [0, p) stored as
/// uint32_t. The modulus is a runtime value; nothing downstream hard-codes it.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  /// Reduce an arbitrary signed integer into [0, p).
  std::uint32_t from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace monoidlab

#endif  // MONOIDLAB_FP_HPP_
