#include "frobnorm/families.hpp"

#include "frobnorm/error.hpp"
#include "frobnorm/problem.hpp"

namespace frobnorm {

Family parse_family(std::string_view name) {
  if (name == "segre") return Family::Segre;
  if (name == "quartic") return Family::Quartic;
  if (name == "quadratic-p") return Family::QuadraticP;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) +
                                              "' (expected segre, quartic or quadratic-p)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Segre: return "segre";
    case Family::Quartic: return "quartic";
    case Family::QuadraticP: return "quadratic-p";
  }
  return "?";
}

Presentation family_presentation(Family family, std::uint32_t p) {
  switch (family) {
    case Family::Segre: {
      auto ring = PolyRing::make(p, {"x", "y", "u", "v"});
      return Presentation(ring, {parse_polynomial(ring, "x^2*v - y^2*u")});
    }
    case Family::Quartic: {
      auto ring = PolyRing::make(p, {"u", "v", "x", "y", "z"});
      return Presentation(ring, {parse_polynomial(ring, "u^2*x^4 + u*v*y^4 + v^2*z^4")});
    }
    case Family::QuadraticP: {
      if (p == 2) throw Error(ErrorCode::InvalidArgument, "quadratic-p needs an odd prime");
      auto ring = PolyRing::make(p, {"u", "v", "x", "y", "z"});
      const std::string e = std::to_string(p);
      return Presentation(
          ring, {parse_polynomial(ring, "u^2*x^" + e + " + 2*u*v*y^" + e + " + v^2*z^" + e)});
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace frobnorm
