#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frobnorm/conductor.hpp"

namespace frobnorm {

/// Built-in benchmark families, one hypersurface per characteristic:
///   segre       F_p[x,y,u,v] / (x^2 v - y^2 u)
///   quartic     F_p[u,v,x,y,z] / (u^2 x^4 + u v y^4 + v^2 z^4)
///   quadratic-p F_p[u,v,x,y,z] / (u^2 x^p + 2 u v y^p + v^2 z^p), p odd
enum class Family { Segre, Quartic, QuadraticP };

Family parse_family(std::string_view name);
std::string family_name(Family family);

/// Throws Error(InvalidArgument) for quadratic-p with p = 2.
Presentation family_presentation(Family family, std::uint32_t p);

}  // namespace frobnorm
