#include "pfl/exactfield/field.hpp"

#include "pfl/error.hpp"

namespace pfl {

GFElem evaluate(const Poly& f, std::span<const GFElem> point) {
  if (static_cast<int>(point.size()) < f.nvars())
    throw Error(ErrorKind::DimensionMismatch, "evaluation point has too few coordinates");
  if (point.empty()) throw Error(ErrorKind::InvalidArgument, "cannot infer field from an empty point");
  GFElem acc = point[0].zero_like();
  for (const auto& t : f.terms()) {
    GFElem term = point[0].from_int(t.coeff);
    for (int i = 0; i < f.nvars(); ++i)
      if (t.mono.e[i]) term = term * point[i].pow(t.mono.e[i]);
    acc = acc + term;
  }
  return acc;
}

GFElem evaluate(const RatFunc& f, std::span<const GFElem> point) {
  GFElem d = evaluate(f.den(), point);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the evaluation point");
  return evaluate(f.num(), point) / d;
}

}  // namespace pfl
