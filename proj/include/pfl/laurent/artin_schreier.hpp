#pragma once

#include <string>

#include "pfl/laurent/laurent_ctx.hpp"

namespace pfl {

/// s = root^2 + root + remainder (+ obstruction). When `trivial`, the remainder lies in the maximal
/// ideal of the rank-`levels` valuation, so s is in the image of the Artin-Schreier map by Hensel;
/// the remainder is exactly zero when a rational root exists.
struct WpSplit {
  bool trivial = false;
  RatFunc root;
  RatFunc remainder;
  std::string obstruction;  // why s is not in the image, when !trivial
};

/// Membership of s (t-coordinates) in the image of z -> z^2 + z over F_2((t_1))...((t_levels)).
/// Walks the t_levels-adic expansion: odd poles and non-square even pole coefficients are
/// obstructions, square even poles fold onto half the order, the constant term recurses.
WpSplit wp_split(const RatFunc& s, int levels);

/// z_N = root + sum_{i<N} remainder^{2^i}: z_N^2 + z_N - s = remainder^{2^N}.
RatFunc hensel_approximation(const WpSplit& w, int steps);

}  // namespace pfl
