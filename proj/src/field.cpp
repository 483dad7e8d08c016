#include "detgb/field.hpp"

#include <limits>
#include <string>

#include "detgb/errors.hpp"

namespace detgb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus < 3 || modulus >= (1u << 31) || !is_prime(modulus))
    throw ShapeError("modulus must be a prime in [3, 2^31): " + std::to_string(modulus));
  const std::uint64_t sq = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  budget_ = (std::numeric_limits<std::uint64_t>::max() - p_) / sq;
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw ShapeError("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce_signed(t);
}

Coeff PrimeField::random(std::mt19937_64& rng) const {
  // Largest multiple of p below 2^64; values above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % p_;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<Coeff>(v % p_);
}

}  // namespace detgb
