#pragma once

#include <cstdint>

namespace frobnorm {

using Coeff = std::uint32_t;

/// The prime field F_p, 2 <= p < 2^20. Elements are residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 20;

  /// Throws Error(InvalidArgument) unless p is a prime below kMaxCharacteristic.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// a must be nonzero.
  Coeff inv(Coeff a) const noexcept { return pow(a, p_ - 2); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace frobnorm
