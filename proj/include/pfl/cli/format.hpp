#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfl/error.hpp"
#include "pfl/exactfield/galois_field.hpp"
#include "pfl/exactfield/ratfunc.hpp"
#include "pfl/laurent/laurent_ctx.hpp"
#include "pfl/quadform/forms.hpp"

namespace pfl::text {

/// Where an expression starts inside the full input (for line/column reporting).
struct Span {
  std::string text;
  size_t offset = 0;
};

/// ParseError carrying "line L, column C: expected ...; found ..." for `input` at `offset`.
[[noreturn]] void fail(const std::string& input, size_t offset, const std::string& expected, const std::string& found);

/// GF(q) | field GF(p)[x1,..,xm] | F2((x1))..((xm)) | F2((1/x1))..((1/xm)).
struct Context {
  enum class Kind { Finite, RationalFunctions, Laurent };
  Kind kind = Kind::Finite;
  std::shared_ptr<const GaloisField> finite;
  uint32_t p = 2;
  int m = 0;
  std::optional<LaurentCtx> laurent;
};
Context parse_context(const std::string& text);
std::string print(const Context& ctx);

/// Rational expression in x1..xm over F_p: integers, variables, + - * / ^ (integer exponents), parentheses.
RatFunc parse_ratfunc(const Span& s, const std::string& input, uint32_t p, int m);
/// Expression over GF(q) in the generator u.
GFElem parse_gf(const Span& s, const std::string& input, const std::shared_ptr<const GaloisField>& f);
std::string print(const RatFunc& f);
std::string print(const GFElem& g);

/// A form is a "+"-separated list of terms: qpf[[a1, .. ; b]], bpf<<a1, ..>> (its quasilinear form
/// Q(B)), [a, b], <c>, H.
struct FormSyntax {
  struct Term {
    enum class Kind { QuadPfister, BilinPfister, Block, Quasi, Hyperbolic };
    Kind kind;
    std::vector<Span> slots;  // QuadPfister: bilinear slots then the Artin-Schreier slot
    size_t offset = 0;
  };
  std::vector<Term> terms;
};
FormSyntax parse_form_syntax(const std::string& input);

template <class E>
struct FormValue {
  struct Term {
    FormSyntax::Term::Kind kind;
    std::vector<E> slots;
  };
  std::vector<Term> terms;

  /// The underlying quadratic form (orthogonal sum of the terms).
  QForm<E> expand(const E& one) const {
    QForm<E> out(one);
    for (const auto& t : terms) {
      using K = FormSyntax::Term::Kind;
      switch (t.kind) {
        case K::QuadPfister:
          out = orthogonal_sum(out, PfisterQuad<E>({t.slots.begin(), t.slots.end() - 1}, t.slots.back()).expand());
          break;
        case K::BilinPfister:
          out = orthogonal_sum(out, q_of_bilinear(PfisterBilin<E>(one, t.slots).expand()));
          break;
        case K::Block: out.add_block(t.slots[0], t.slots[1]); break;
        case K::Quasi: out.add_quasi(t.slots[0]); break;
        case K::Hyperbolic: out.add_block(one.zero_like(), one.zero_like()); break;
      }
    }
    return out;
  }
  std::optional<PfisterQuad<E>> as_quad_pfister() const {
    if (terms.size() != 1 || terms[0].kind != FormSyntax::Term::Kind::QuadPfister) return std::nullopt;
    const auto& s = terms[0].slots;
    return PfisterQuad<E>({s.begin(), s.end() - 1}, s.back());
  }
  bool operator==(const FormValue& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].kind != o.terms[i].kind || !(terms[i].slots == o.terms[i].slots)) return false;
    return true;
  }
};

template <class E>
FormValue<E> build_form(const FormSyntax& syn, const std::function<E(const Span&)>& element) {
  FormValue<E> out;
  for (const auto& t : syn.terms) {
    typename FormValue<E>::Term v{t.kind, {}};
    for (const auto& s : t.slots) v.slots.push_back(element(s));
    out.terms.push_back(std::move(v));
  }
  return out;
}

template <class E>
std::string print_form(const FormValue<E>& f, const std::function<std::string(const E&)>& show) {
  using K = FormSyntax::Term::Kind;
  std::string out;
  for (const auto& t : f.terms) {
    if (!out.empty()) out += " + ";
    auto list = [&](size_t from, size_t to) {
      std::string s;
      for (size_t i = from; i < to; ++i) s += (i > from ? ", " : "") + show(t.slots[i]);
      return s;
    };
    switch (t.kind) {
      case K::QuadPfister:
        out += "qpf[[" + list(0, t.slots.size() - 1) + " ; " + show(t.slots.back()) + "]]";
        break;
      case K::BilinPfister: out += "bpf<<" + list(0, t.slots.size()) + ">>"; break;
      case K::Block: out += "[" + list(0, 2) + "]"; break;
      case K::Quasi: out += "<" + show(t.slots[0]) + ">"; break;
      case K::Hyperbolic: out += "H"; break;
    }
  }
  return out;
}

/// Convenience for the common element types.
FormValue<RatFunc> parse_ratfunc_form(const std::string& input, uint32_t p, int m);
FormValue<GFElem> parse_gf_form(const std::string& input, const std::shared_ptr<const GaloisField>& f);

}  // namespace pfl::text
