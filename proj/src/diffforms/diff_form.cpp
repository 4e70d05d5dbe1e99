#include "pfl/diffforms/diff_form.hpp"

#include <bit>
#include <sstream>

#include "pfl/error.hpp"

namespace pfl {

DiffForm::DiffForm(uint32_t p, int nvars, int degree) : p_(p), nvars_(nvars), degree_(degree) {
  if (degree < 0 || degree > nvars) throw Error(ErrorKind::DegreeOverflow, "form degree outside [0, nvars]");
}

DiffForm DiffForm::function(const RatFunc& f) {
  DiffForm r(f.characteristic(), f.nvars(), 0);
  r.add_term(0, f);
  return r;
}

DiffForm DiffForm::basis(uint32_t p, int nvars, int var) {
  DiffForm r(p, nvars, 1);
  r.add_term(1u << var, RatFunc::constant(p, nvars, 1));
  return r;
}

RatFunc DiffForm::coefficient(uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? RatFunc::constant(p_, nvars_, 0) : it->second;
}

void DiffForm::add_term(uint32_t mask, const RatFunc& c) {
  if (std::popcount(mask) != degree_) throw Error(ErrorKind::DegreeMismatch, "term degree differs from form degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffForm::check_same_space(const DiffForm& o) const {
  if (p_ != o.p_ || nvars_ != o.nvars_) throw Error(ErrorKind::InvalidArgument, "forms over different fields");
  if (degree_ != o.degree_) throw Error(ErrorKind::DegreeMismatch, "adding forms of different degree");
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
  check_same_space(o);
  DiffForm r = *this;
  for (const auto& [mask, c] : o.terms_) r.add_term(mask, c);
  return r;
}

DiffForm DiffForm::operator-() const {
  DiffForm r = *this;
  for (auto& [mask, c] : r.terms_) c = -c;
  return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::scaled(const RatFunc& c) const {
  DiffForm r(p_, nvars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [mask, a] : terms_) r.terms_.emplace(mask, a * c);
  return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
  return p_ == o.p_ && nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string DiffForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(names) << ")";
    for (int i = 0; i < nvars_; ++i)
      if (mask & (1u << i)) os << " d" << (i < static_cast<int>(names.size()) ? names[i] : default_var_name(i));
  }
  return os.str();
}

DiffForm d(const DiffForm& form) {
  const int n = form.nvars();
  if (form.degree() + 1 > n) return DiffForm(form.characteristic(), n, form.degree());
  DiffForm r(form.characteristic(), n, form.degree() + 1);
  for (const auto& [mask, c] : form.terms()) {
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) continue;
      RatFunc dc = c.partial(i);
      if (dc.is_zero()) continue;
      // dx_i ^ dx_I: sign from moving dx_i past the indices of I below i.
      int below = std::popcount(mask & ((1u << i) - 1));
      r.add_term(mask | (1u << i), (below % 2) ? -dc : dc);
    }
  }
  return r;
}

DiffForm d(const RatFunc& f) { return d(DiffForm::function(f)); }

DiffForm dlog(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroArgument, "dlog of zero");
  return d(f).scaled(f.inverse());
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.characteristic() != b.characteristic() || a.nvars() != b.nvars())
    throw Error(ErrorKind::InvalidArgument, "forms over different fields");
  if (a.degree() + b.degree() > a.nvars())
    throw Error(ErrorKind::DegreeOverflow, "wedge degree exceeds the number of variables");
  DiffForm r(a.characteristic(), a.nvars(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      // Sign of the shuffle: count pairs (i in A, j in B) with i > j.
      int inversions = 0;
      for (uint32_t rest = mb; rest; rest &= rest - 1) {
        uint32_t j = std::countr_zero(rest);
        inversions += std::popcount(ma >> (j + 1));
      }
      RatFunc c = ca * cb;
      r.add_term(ma | mb, (inversions % 2) ? -c : c);
    }
  return r;
}

SymbolExpr::SymbolExpr(std::optional<RatFunc> a, std::vector<RatFunc> slots)
    : as_slot(std::move(a)), log_slots(std::move(slots)) {
  for (const auto& s : log_slots)
    if (s.is_zero()) throw Error(ErrorKind::ZeroArgument, "logarithmic slot must be nonzero");
}

DiffForm SymbolExpr::expand(uint32_t p, int nvars) const {
  DiffForm r = DiffForm::function(as_slot ? *as_slot : RatFunc::constant(p, nvars, 1));
  for (const auto& s : log_slots) r = wedge(r, dlog(s));
  return r;
}

DiffForm SymbolSum::expand(uint32_t p, int nvars, int degree) const {
  DiffForm r(p, nvars, degree);
  for (const auto& t : terms) r = r + t.expand(p, nvars);
  return r;
}

DiffForm artin_schreier(const SymbolSum& symbols, uint32_t p, int nvars, int degree) {
  DiffForm r(p, nvars, degree);
  for (const auto& t : symbols.terms) {
    if (!t.as_slot) throw Error(ErrorKind::NotInSymbolForm, "symbol without an Artin-Schreier slot");
    const RatFunc& a = *t.as_slot;
    SymbolExpr image(a.frobenius() - a, t.log_slots);
    r = r + image.expand(p, nvars);
  }
  return r;
}

DiffForm artin_schreier(const FormPresentation& form, uint32_t p, int nvars, int degree) {
  if (std::holds_alternative<DiffForm>(form))
    throw Error(ErrorKind::NotInSymbolForm, "Artin-Schreier map needs a symbol presentation");
  return artin_schreier(std::get<SymbolSum>(form), p, nvars, degree);
}

bool check_certificate(const TrivialityCertificate& c) {
  const DiffForm& target = c.target;
  if (c.exact_part.degree() + 1 != target.degree())
    throw Error(ErrorKind::DegreeMismatch, "exact part must have degree one less than the target");
  DiffForm rhs = d(c.exact_part);
  if (!c.as_part.terms.empty()) {
    for (const auto& t : c.as_part.terms)
      if (static_cast<int>(t.log_slots.size()) != target.degree())
        throw Error(ErrorKind::DegreeMismatch, "Artin-Schreier part must have the target degree");
    rhs = rhs + artin_schreier(c.as_part, target.characteristic(), target.nvars(), target.degree());
  }
  return rhs == target;
}

}  // namespace pfl
