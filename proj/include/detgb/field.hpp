#pragma once

#include <cstdint>
#include <random>

namespace detgb {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 65521;

/// Arithmetic in Z/pZ for a prime 3 <= p < 2^31.
///
/// Elements are plain `Coeff` values kept in [0, p). Products are formed in
/// 64 bits so no intermediate ever overflows.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t modulus = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Coeff reduce(std::uint64_t v) const { return static_cast<Coeff>(v % p_); }
  Coeff reduce_signed(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  /// Multiplicative inverse; `a` must be nonzero.
  Coeff inv(Coeff a) const;

  /// Number of products (p-1)^2 that fit in a uint64 accumulator on top of a
  /// value already below p. Used by the delayed-reduction row kernels.
  std::uint64_t accumulation_budget() const { return budget_; }

  /// Uniform element of [0, p) with a platform-independent rejection scheme.
  Coeff random(std::mt19937_64& rng) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t budget_;
};

bool is_prime(std::uint64_t n);

}  // namespace detgb
