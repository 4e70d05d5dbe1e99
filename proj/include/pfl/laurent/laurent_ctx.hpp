#pragma once

#include <string>
#include <vector>

#include "pfl/exactfield/ratfunc.hpp"

namespace pfl {

/// Which element of F_2(x1..xm) serves as the uniformizer at each level of the tower.
enum class Orientation {
  AtZero,      // F_2((x1))...((xm)): x_i is the uniformizer
  AtInfinity,  // F_2((1/x1))...((1/xm)): 1/x_i is the uniformizer
};

/// Iterated Laurent series field over F_2 with x1 innermost and xm outermost. Elements are rational
/// functions in x1..xm; internally they are moved to uniformizer coordinates t_i (t_i = x_i or
/// t_i = 1/x_i), where every valuation is the usual t-adic one.
struct LaurentCtx {
  int m = 1;
  Orientation orientation = Orientation::AtZero;

  LaurentCtx(int vars, Orientation o);

  /// "F2((x1))((x2))" or "F2((1/x1))((1/x2))".
  static LaurentCtx parse(const std::string& text);
  std::string name() const;

  /// x-coordinates -> t-coordinates; an involution, so it also maps back.
  RatFunc to_model(const RatFunc& f) const;
  RatFunc from_model(const RatFunc& f) const { return to_model(f); }

  RatFunc one() const { return RatFunc::constant(2, m, 1); }
  RatFunc var(int i) const { return RatFunc::variable(2, m, i); }
  /// x^e as an element (x-coordinates).
  RatFunc monomial(const std::vector<int>& e) const;
};

/// f(1/x1, ..., 1/xn).
RatFunc invert_variables(const RatFunc& f);

/// t_var-adic valuation of a nonzero rational function in t-coordinates.
int valuation(const RatFunc& f, int var);
/// Leading coefficient with respect to t_var (free of t_var).
RatFunc leading_coefficient(const RatFunc& f, int var);
/// Rank-m valuation (v_m, v_{m-1}, ..., v_1) in t-coordinates, outermost first.
std::vector<int> valuation_vector(const RatFunc& f, int m);
/// True when the rank-m valuation is lexicographically positive (element of the maximal ideal).
bool in_maximal_ideal(const RatFunc& f, int m);

/// Outermost valuation of f, read in the model's orientation. ZeroArgument when f = 0.
int top_valuation(const RatFunc& f, const LaurentCtx& ctx);

/// Exponent vector of a monomial slot x^e.
struct MonomialSlot {
  std::vector<int> exponents;
  RatFunc value(const LaurentCtx& ctx) const { return ctx.monomial(exponents); }
  /// e mod 2.
  std::vector<int> square_class() const;
};

/// Splits f = sum over parity vectors eps of t^eps * c_eps^2 (the 2-basis expansion); returns
/// c_eps indexed by the bitmask of eps. All variables of the ring take part.
std::vector<RatFunc> two_basis_coordinates(const RatFunc& f);

}  // namespace pfl
