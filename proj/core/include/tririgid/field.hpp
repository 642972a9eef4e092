#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace tririgid {

__extension__ using uint128 = unsigned __int128;

/// Reproducible 64-bit stream. mt19937_64's output sequence is fixed by the
/// standard, and bounded draws use our own rejection step, so a seed means the
/// same values on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

bool is_prime_u64(std::uint64_t n) noexcept;
/// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime(RandomSource& rng);

/// Integers modulo a prime p >= 2^61.
class PrimeField {
 public:
  using Element = std::uint64_t;
  /// 2^62 - 57, the largest prime below 2^62.
  static constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;
  static constexpr std::uint64_t kMinPrime = 1ULL << 61;

  /// Throws InvalidField unless p is a prime >= 2^61.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Element>(r);
  }
  bool is_zero(const Element& a) const noexcept { return a == 0; }
  Element add(Element a, Element b) const noexcept {
    const Element s = a + b;  // both < 2^62, no overflow
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<uint128>(a) * b) % p_);
  }
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element.
  Element inv(Element a) const noexcept { return pow(a, p_ - 2); }
  Element random(RandomSource& rng) const { return rng.below(p_); }

  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }
  /// Modulus as recorded in witnesses.
  std::uint64_t witness_id() const noexcept { return p_; }

 private:
  std::uint64_t p_;
};

/// Exact rationals; random elements are integers in [-2^31, 2^31].
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return 1 / a; }
  Element random(RandomSource& rng) const {
    const std::int64_t r = static_cast<std::int64_t>(rng.below((1ULL << 32) + 1)) - (1LL << 31);
    return from_int(r);
  }

  std::string describe() const { return "Q"; }
  std::uint64_t witness_id() const noexcept { return 0; }
};

/// splitmix64 finaliser; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace tririgid
