#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfl/exactfield/ratfunc.hpp"

namespace pfl {

/// Element of Omega^n of F_p(x1..xm): a finite sum of coefficient * dx_I with I strictly
/// increasing. I is stored as a bitmask; zero coefficients are never stored.
class DiffForm {
 public:
  DiffForm(uint32_t p, int nvars, int degree);
  /// The 0-form f.
  static DiffForm function(const RatFunc& f);
  /// dx_var (0-based var).
  static DiffForm basis(uint32_t p, int nvars, int var);

  uint32_t characteristic() const { return p_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<uint32_t, RatFunc>& terms() const { return terms_; }
  /// Coefficient on dx_I; zero if absent.
  RatFunc coefficient(uint32_t mask) const;

  void add_term(uint32_t mask, const RatFunc& c);

  DiffForm operator+(const DiffForm& o) const;
  DiffForm operator-(const DiffForm& o) const;
  DiffForm operator-() const;
  DiffForm scaled(const RatFunc& c) const;

  bool operator==(const DiffForm& o) const;
  bool operator!=(const DiffForm& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_same_space(const DiffForm& o) const;

  uint32_t p_;
  int nvars_;
  int degree_;
  std::map<uint32_t, RatFunc> terms_;
};

/// Exterior derivative.
DiffForm d(const DiffForm& form);
DiffForm d(const RatFunc& f);
/// df/f; ZeroArgument when f = 0.
DiffForm dlog(const RatFunc& f);
/// Wedge product with graded sign; DegreeOverflow when the degrees exceed the variable count.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Syntactic symbol a * dlog(b1) ^ ... ^ dlog(bn). Without an Artin-Schreier slot it denotes
/// the pure logarithmic form dlog(b1) ^ ... ^ dlog(bn).
struct SymbolExpr {
  std::optional<RatFunc> as_slot;
  std::vector<RatFunc> log_slots;

  SymbolExpr(std::optional<RatFunc> a, std::vector<RatFunc> slots);
  DiffForm expand(uint32_t p, int nvars) const;
};

/// A form given through a symbol presentation (sum of symbols with coefficients).
struct SymbolSum {
  std::vector<SymbolExpr> terms;
  DiffForm expand(uint32_t p, int nvars, int degree) const;
};

using FormPresentation = std::variant<DiffForm, SymbolSum>;

/// Applies a -> a^p - a to every Artin-Schreier slot and expands. The map is only defined on
/// symbol presentations: NotInSymbolForm for raw forms or symbols without an AS slot.
DiffForm artin_schreier(const SymbolSum& symbols, uint32_t p, int nvars, int degree);
DiffForm artin_schreier(const FormPresentation& form, uint32_t p, int nvars, int degree);

/// Witness that `target` vanishes in H_p^{n+1}: target = d(exact_part) + AS(as_part).
struct TrivialityCertificate {
  DiffForm exact_part;
  SymbolSum as_part;
  DiffForm target;
};

/// Exact check of the certificate identity; DegreeMismatch on inconsistent degrees.
bool check_certificate(const TrivialityCertificate& c);

}  // namespace pfl
