#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "frobnorm/ideal.hpp"
#include "frobnorm/matrix.hpp"
#include "frobnorm/polynomial.hpp"

namespace frobnorm {

using PolyMatrix = DenseMatrix<Polynomial>;

/// R = F_p[x_1..x_n] / (f_1..f_m). Relations are stored as given.
class Presentation {
 public:
  /// Throws Error(InvalidArgument) if the relations generate the unit ideal.
  Presentation(RingPtr ring, std::vector<Polynomial> relations);

  const RingPtr& ring() const noexcept { return ring_; }
  std::uint32_t characteristic() const noexcept { return ring_->characteristic(); }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  /// The defining ideal P.
  const Ideal& ideal() const noexcept { return ideal_; }

  /// Normal form modulo P.
  Polynomial reduce(const Polynomial& f) const { return ideal_.reduce(f); }
  bool is_zero(const Polynomial& f) const { return ideal_.contains(f); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  Ideal ideal_;
};

struct ConductorData {
  enum class Source { JacobianMinor, UnitMinor, User };

  std::size_t height = 0;
  PolyMatrix jacobian;
  Polynomial element;
  Source source = Source::User;
  /// Index sets of the chosen minor (empty for user-supplied elements).
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// m x n matrix of partial derivatives d f_i / d x_j.
PolyMatrix jacobian(const Presentation& pres);

/// Determinant: cofactor expansion up to 4x4, Bareiss above.
Polynomial determinant(const PolyMatrix& m);

/// First h x h Jacobian minor (h = codim P, index sets in lexicographic
/// order) with nonzero image in R. If some minor is a nonzero constant
/// modulo P the ring is smooth and the element 1 is returned.
/// Throws Error(ConductorNotFound) when all minors vanish in R.
ConductorData conductor_candidate(const Presentation& pres);

/// Whether (0 :_R D) = 0, i.e. P : D = P. Throws Error(ZeroConductor) if D is
/// zero in R.
bool is_nonzerodivisor(const Presentation& pres, const Polynomial& d);

/// For a zerodivisor D: presentations of R/I_1 and R/I_2 where
/// I_1 = (0 :_R D) and I_2 = (0 :_R I_1). Throws Error(NothingToSplit) if D
/// is a nonzerodivisor.
std::pair<Presentation, Presentation> split(const Presentation& pres, const Polynomial& d);

}  // namespace frobnorm
