#include "pfl/laurent/laurent_ctx.hpp"

#include <regex>

#include "pfl/error.hpp"

namespace pfl {

LaurentCtx::LaurentCtx(int vars, Orientation o) : m(vars), orientation(o) {
  if (m < 1 || m > kMaxVars) throw Error(ErrorKind::InvalidArgument, "Laurent tower needs 1..8 variables");
}

LaurentCtx LaurentCtx::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("F2", 0) != 0) throw Error(ErrorKind::UnsupportedModel, "expected F2((x1))...: " + text);
  static const std::regex level(R"(\(\((1/)?x(\d+)\)\))");
  std::string rest = s.substr(2);
  int count = 0, inverted = 0;
  std::smatch mt;
  while (!rest.empty()) {
    if (!std::regex_search(rest, mt, level) || mt.position(0) != 0)
      throw Error(ErrorKind::UnsupportedModel, "bad Laurent tower: " + text);
    if (std::stoi(mt[2].str()) != count + 1)
      throw Error(ErrorKind::UnsupportedModel, "variables must be x1, x2, ... in order: " + text);
    if (mt[1].matched) ++inverted;
    ++count;
    rest = mt.suffix().str();
  }
  if (count == 0) throw Error(ErrorKind::UnsupportedModel, "empty Laurent tower");
  if (inverted != 0 && inverted != count)
    throw Error(ErrorKind::UnsupportedModel, "mixed orientations are not supported: " + text);
  return LaurentCtx(count, inverted ? Orientation::AtInfinity : Orientation::AtZero);
}

std::string LaurentCtx::name() const {
  std::string s = "F2";
  for (int i = 1; i <= m; ++i)
    s += orientation == Orientation::AtZero ? "((x" + std::to_string(i) + "))" : "((1/x" + std::to_string(i) + "))";
  return s;
}

RatFunc invert_variables(const RatFunc& f) {
  // P(1/x) = rev(P) / x^{deg P} with rev(P) = x^{deg P} P(1/x), taken per variable.
  const int n = f.nvars();
  auto reverse = [n](const Poly& p, Monomial* degs) {
    for (int i = 0; i < n; ++i) degs->e[i] = static_cast<uint16_t>(p.is_zero() ? 0 : p.degree_in(i));
    Poly r(p.characteristic(), n);
    for (const auto& t : p.terms()) {
      Monomial mm;
      for (int i = 0; i < n; ++i) mm.e[i] = static_cast<uint16_t>(degs->e[i] - t.mono.e[i]);
      r.push_unsorted(mm, t.coeff);
    }
    r.canonicalize();
    return r;
  };
  Monomial dn, dd;
  Poly rn = reverse(f.num(), &dn), rd = reverse(f.den(), &dd);
  return RatFunc(rn.times_monomial(dd), rd.times_monomial(dn));
}

RatFunc LaurentCtx::to_model(const RatFunc& f) const {
  return orientation == Orientation::AtZero ? f : invert_variables(f);
}

RatFunc LaurentCtx::monomial(const std::vector<int>& e) const {
  if (static_cast<int>(e.size()) != m) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
  Monomial up, down;
  for (int i = 0; i < m; ++i) (e[i] >= 0 ? up : down).e[i] = static_cast<uint16_t>(std::abs(e[i]));
  return RatFunc(Poly::monomial(2, m, up), Poly::monomial(2, m, down));
}

int valuation(const RatFunc& f, int var) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  return f.num().min_degree_in(var) - f.den().min_degree_in(var);
}

RatFunc leading_coefficient(const RatFunc& f, int var) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroArgument, "leading coefficient of zero");
  auto low = [var](const Poly& p) { return p.coefficients_in(var)[p.min_degree_in(var)]; };
  return RatFunc(low(f.num()), low(f.den()));
}

std::vector<int> valuation_vector(const RatFunc& f, int m) {
  std::vector<int> v;
  RatFunc g = f;
  for (int var = m - 1; var >= 0; --var) {
    v.push_back(valuation(g, var));
    g = leading_coefficient(g, var);
  }
  return v;
}

bool in_maximal_ideal(const RatFunc& f, int m) {
  if (f.is_zero()) return true;
  for (int v : valuation_vector(f, m))
    if (v != 0) return v > 0;
  return false;
}

int top_valuation(const RatFunc& f, const LaurentCtx& ctx) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroArgument, "top_valuation of zero");
  return valuation(ctx.to_model(f), ctx.m - 1);
}

std::vector<int> MonomialSlot::square_class() const {
  std::vector<int> r;
  for (int e : exponents) r.push_back(((e % 2) + 2) % 2);
  return r;
}

std::vector<RatFunc> two_basis_coordinates(const RatFunc& f) {
  // f = N/D = (N D) / D^2; split N D by exponent parity.
  const int n = f.nvars();
  const Poly nd = f.num() * f.den();
  std::vector<Poly> parts(size_t{1} << n, Poly(2, n));
  for (const auto& t : nd.terms()) {
    unsigned mask = 0;
    Monomial half;
    for (int i = 0; i < n; ++i) {
      if (t.mono.e[i] & 1) mask |= 1u << i;
      half.e[i] = static_cast<uint16_t>(t.mono.e[i] / 2);
    }
    parts[mask].push_unsorted(half, t.coeff);
  }
  std::vector<RatFunc> out;
  for (auto& p : parts) {
    p.canonicalize();
    out.push_back(RatFunc(p, f.den()));
  }
  return out;
}

}  // namespace pfl
