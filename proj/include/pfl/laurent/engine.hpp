#pragma once

#include <string>
#include <vector>

#include "pfl/laurent/laurent_ctx.hpp"
#include "pfl/laurent/residue.hpp"
#include "pfl/laurent/search.hpp"
#include "pfl/quadform/witt_finite.hpp"

namespace pfl {

enum class Verdict { Hyperbolic, Anisotropic, Inconclusive };
const char* to_string(Verdict v);

/// A plane span(e, f) with B(e, f) = 1, q(e) = a, q(f) = b and a b = root^2 + root + remainder,
/// the remainder in the maximal ideal: the plane is hyperbolic over the completion although no
/// rational isotropic vector is given. The isotropic line is spanned by (z / a) e + f for the
/// Hensel root z = root + remainder + remainder^2 + remainder^4 + ...
struct HenselPlane {
  Vec<RatFunc> e, f;
  RatFunc a, b, root, remainder;
};

/// Witt index bounds over the Laurent model with the witnesses behind them. Vectors and values are
/// in the x-coordinates of the input form.
struct LaurentWitt {
  std::string model;
  int lower = 0;
  int upper = 0;
  std::vector<HyperbolicPair<RatFunc>> planes;
  std::vector<HenselPlane> hensel_planes;
  std::vector<Vec<RatFunc>> defects;  // radical vectors with q = 0
  QForm<RatFunc> remainder{RatFunc::constant(2, 1, 1)};
  std::vector<Vec<RatFunc>> remainder_basis;  // coordinates of the remainder form, blocks then quasi
  ResidueTrace trace;  // anisotropy certificate for the remainder when lower == upper
  std::vector<std::string> steps;
  bool decided() const { return lower == upper; }
};

LaurentWitt witt_index_laurent(const QForm<RatFunc>& phi, const LaurentCtx& ctx, const SearchParams& params = {});

/// Re-checks every witness of `w` against phi by direct evaluation: hyperbolic pairs, Hensel planes
/// (exact identity, remainder valuation, truncated root), defects, mutual orthogonality, linear
/// independence, and that the remainder basis reproduces the remainder form.
bool verify_witt(const QForm<RatFunc>& phi, const LaurentCtx& ctx, const LaurentWitt& w, std::string* why);

struct HyperbolicityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Vec<RatFunc>> lagrangian;  // rational part; Hensel planes listed in detail
  LaurentWitt detail;
  std::string note;
};

HyperbolicityVerdict decide_hyperbolic(const PfisterQuad<RatFunc>& pi, const LaurentCtx& ctx,
                                       const SearchParams& params = {});

/// Lagrangian check: every vector isotropic, pairwise orthogonal, and the set has full rank.
bool verify_lagrangian(const QForm<RatFunc>& phi, const std::vector<Vec<RatFunc>>& basis, int expected_rank);

}  // namespace pfl
