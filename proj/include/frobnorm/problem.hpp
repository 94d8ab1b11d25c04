#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobnorm/conductor.hpp"
#include "frobnorm/polynomial.hpp"

namespace frobnorm {

/// A ring presentation read from the line-oriented input format:
///
///     # comment
///     p: 2
///     vars: x y u v
///     rels: x^2*v - y^2*u
///     conductor: x^2
///
/// `rels:` takes comma-separated polynomials and may be repeated;
/// `conductor:` is optional.
struct ProblemFile {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  RingPtr ring;
  std::vector<Polynomial> relations;
  std::optional<Polynomial> conductor;

  Presentation presentation() const { return Presentation(ring, relations); }
};

/// Parse a polynomial over ring. Grammar:
///   poly   := ['-'] term { ('+'|'-') term }
///   term   := coeff { '*' factor } | factor { '*' factor }
///   factor := var [ '^' nat ]
/// Errors carry line and column; column counts from first_column.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                            std::size_t first_column = 1);

ProblemFile parse_input(std::string_view text);

/// Canonical text in the input format; parse_input(format_problem(f)) == f.
std::string format_problem(const ProblemFile& file);

bool operator==(const ProblemFile& a, const ProblemFile& b);

}  // namespace frobnorm
