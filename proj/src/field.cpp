#include "frobnorm/field.hpp"

#include <string>

#include "frobnorm/error.hpp"

namespace frobnorm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxCharacteristic)
    throw Error(ErrorCode::InvalidArgument,
                "characteristic " + std::to_string(p) + " exceeds 2^20");
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_, acc = 1 % p_;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(acc);
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::RingMismatch: return "ring-mismatch";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::ConductorNotFound: return "conductor-not-found";
    case ErrorCode::ZeroConductor: return "zero-conductor";
    case ErrorCode::IterationLimitExceeded: return "iteration-limit-exceeded";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::NothingToSplit: return "nothing-to-split";
    case ErrorCode::ExponentOverflow: return "exponent-overflow";
  }
  return "unknown";
}

}  // namespace frobnorm
