#include "pfl/cli/format.hpp"

#include <cctype>
#include <regex>

#include "pfl/exactfield/prime_field.hpp"

namespace pfl::text {

void fail(const std::string& input, size_t offset, const std::string& expected, const std::string& found) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < offset && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                         ": expected " + expected + "; found " + found);
}

namespace {

std::string describe_at(const std::string& input, size_t pos) {
  if (pos >= input.size()) return "end of input";
  return std::string("'") + input[pos] + "'";
}

// Recursive descent over one element span:
//   sum := ["-"] product (("+" | "-") product)*
//   product := power (("*" | "/") power)*
//   power := atom ["^" ["-"] integer]
//   atom := integer | identifier | "(" sum ")"
template <class E>
class ExprParser {
 public:
  using MakeInt = std::function<E(int64_t)>;
  using MakeVar = std::function<std::optional<E>(const std::string&)>;

  ExprParser(const Span& s, const std::string& input, MakeInt make_int, MakeVar make_var, std::string var_hint)
      : input_(input), begin_(s.offset), end_(s.offset + s.text.size()), pos_(s.offset),
        make_int_(std::move(make_int)), make_var_(std::move(make_var)), var_hint_(std::move(var_hint)) {}

  E parse() {
    skip();
    if (pos_ == end_) fail(input_, pos_, "an expression", found());
    E v = sum();
    skip();
    if (pos_ != end_) fail(input_, pos_, "one of '+', '-', '*', '/', '^'", found());
    return v;
  }

 private:
  std::string found() const { return pos_ >= end_ ? "end of slot" : describe_at(input_, pos_); }
  void skip() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < end_ && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int64_t integer() {
    skip();
    const size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    if (start == pos_) fail(input_, pos_, "an integer", found());
    if (pos_ - start > 9) fail(input_, start, "an integer below 10^9", "'" + input_.substr(start, pos_ - start) + "'");
    return std::stoll(input_.substr(start, pos_ - start));
  }
  E sum() {
    const bool neg = eat('-');
    E v = product();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) {
        v = v + product();
      } else if (eat('-')) {
        v = v - product();
      } else {
        return v;
      }
    }
  }
  E product() {
    E v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        skip();
        const size_t at = pos_;
        E d = power();
        if (d.is_zero()) fail(input_, at, "a nonzero divisor", "zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  E power() {
    skip();
    const size_t at = pos_;
    E v = atom();
    if (eat('^')) {
      const bool neg = eat('-');
      const int64_t e = integer();
      if (neg && v.is_zero()) fail(input_, at, "a nonzero base for a negative exponent", "zero");
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  E atom() {
    skip();
    if (eat('(')) {
      E v = sum();
      if (!eat(')')) fail(input_, pos_, "')'", found());
      return v;
    }
    if (pos_ < end_ && std::isdigit(static_cast<unsigned char>(input_[pos_]))) return make_int_(integer());
    if (pos_ < end_ && std::isalpha(static_cast<unsigned char>(input_[pos_]))) {
      const size_t start = pos_;
      while (pos_ < end_ && std::isalnum(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      const std::string name = input_.substr(start, pos_ - start);
      if (auto v = make_var_(name)) return *v;
      fail(input_, start, var_hint_, "'" + name + "'");
    }
    fail(input_, pos_, "a number, a variable or '('", found());
  }

  const std::string& input_;
  size_t begin_, end_, pos_;
  MakeInt make_int_;
  MakeVar make_var_;
  std::string var_hint_;
};

}  // namespace

RatFunc parse_ratfunc(const Span& s, const std::string& input, uint32_t p, int m) {
  auto make_int = [p, m](int64_t c) { return RatFunc::constant(p, m, c); };
  auto make_var = [p, m](const std::string& name) -> std::optional<RatFunc> {
    static const std::regex var("x([1-9][0-9]*)");
    std::smatch mt;
    if (!std::regex_match(name, mt, var)) return std::nullopt;
    const int i = std::stoi(mt[1]);
    if (i > m) return std::nullopt;
    return RatFunc::variable(p, m, i - 1);
  };
  const std::string hint = m == 0 ? "no variables (constant field)" : "a variable x1..x" + std::to_string(m);
  return ExprParser<RatFunc>(s, input, make_int, make_var, hint).parse();
}

GFElem parse_gf(const Span& s, const std::string& input, const std::shared_ptr<const GaloisField>& f) {
  auto make_int = [f](int64_t c) { return f->one().from_int(c); };
  auto make_var = [f](const std::string& name) -> std::optional<GFElem> {
    if (name == "u" && f->degree() > 1) return f->generator_u();
    return std::nullopt;
  };
  const std::string hint = f->degree() > 1 ? "the generator u" : "no variables (prime field)";
  return ExprParser<GFElem>(s, input, make_int, make_var, hint).parse();
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::shared_ptr<const GaloisField> finite_field(const std::string& text, uint64_t q, const std::string& input) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!modp::is_prime(p)) break;
    int k = 0;
    uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    if (q > (1u << 16)) fail(input, 0, "a field of order at most 65536", "'" + text + "'");
    return GaloisField::create(p, k);
  }
  fail(input, 0, "a prime power order", "'" + text + "'");
}

}  // namespace

Context parse_context(const std::string& input) {
  std::string text = trim(input);
  if (text.rfind("field", 0) == 0) text = trim(text.substr(5));
  Context ctx;
  if (text.rfind("F2((", 0) == 0) {
    ctx.kind = Context::Kind::Laurent;
    ctx.laurent = LaurentCtx::parse(text);
    ctx.p = 2;
    ctx.m = ctx.laurent->m;
    return ctx;
  }
  static const std::regex gf(R"(GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:\[([^\]]*)\])?)");
  std::smatch mt;
  if (!std::regex_match(text, mt, gf))
    fail(input, 0, "GF(q), GF(p)[x1,..,xm], F2((x1))..((xm)) or F2((1/x1))..((1/xm))", "'" + text + "'");
  uint64_t q = std::stoull(mt[1]);
  if (mt[2].matched) {
    const uint64_t base = q;
    const int k = std::stoi(mt[2]);
    for (int i = 1; i < k && q <= (1u << 16); ++i) q *= base;
  }
  ctx.finite = finite_field(text, q, input);
  ctx.p = ctx.finite->characteristic();
  if (!mt[3].matched) return ctx;
  if (ctx.finite->degree() != 1) fail(input, 0, "a prime field below the rational function field", "'" + text + "'");
  ctx.kind = Context::Kind::RationalFunctions;
  const std::string vars = mt[3];
  size_t pos = 0;
  int count = 0;
  while (pos <= vars.size()) {
    size_t end = vars.find(',', pos);
    if (end == std::string::npos) end = vars.size();
    const std::string v = trim(vars.substr(pos, end - pos));
    if (v != "x" + std::to_string(count + 1)) fail(input, 0, "variables x1, x2, ... in order", "'" + v + "'");
    ++count;
    pos = end + 1;
  }
  if (count > kMaxVars) fail(input, 0, "at most 8 variables", std::to_string(count));
  ctx.m = count;
  return ctx;
}

std::string print(const Context& ctx) {
  switch (ctx.kind) {
    case Context::Kind::Finite: return ctx.finite->name();
    case Context::Kind::Laurent: return ctx.laurent->name();
    case Context::Kind::RationalFunctions: {
      std::string s = "field GF(" + std::to_string(ctx.p) + ")[";
      for (int i = 0; i < ctx.m; ++i) s += (i ? ",x" : "x") + std::to_string(i + 1);
      return s + "]";
    }
  }
  return "";
}

std::string print(const RatFunc& f) { return f.to_string(); }
std::string print(const GFElem& g) { return g.to_string(); }

}  // namespace pfl::text

namespace pfl::text {
namespace {

class FormScanner {
 public:
  explicit FormScanner(const std::string& input) : in_(input) {}

  FormSyntax run() {
    FormSyntax out;
    skip();
    if (pos_ == in_.size()) fail(in_, pos_, "a form", "end of input");
    for (;;) {
      out.terms.push_back(term());
      skip();
      if (pos_ == in_.size()) return out;
      if (in_[pos_] != '+') fail(in_, pos_, "'+' or end of input", describe_at(in_, pos_));
      ++pos_;
      skip();
    }
  }

 private:
  using Kind = FormSyntax::Term::Kind;

  void skip() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }
  bool starts(const std::string& tok) const { return in_.compare(pos_, tok.size(), tok) == 0; }
  void expect(const std::string& tok) {
    skip();
    if (!starts(tok)) fail(in_, pos_, "'" + tok + "'", describe_at(in_, pos_));
    pos_ += tok.size();
  }

  // Raw text up to a top-level delimiter; must contain an expression.
  Span element(const std::string& stops) {
    const size_t start = pos_;
    int depth = 0;
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      ++pos_;
    }
    Span s{in_.substr(start, pos_ - start), start};
    if (trim(s.text).empty()) {
      size_t at = start;
      while (at < pos_ && std::isspace(static_cast<unsigned char>(in_[at]))) ++at;
      fail(in_, at, "an expression", describe_at(in_, at));
    }
    return s;
  }

  // Comma-separated elements; `allow_empty` accepts a list with no element at all.
  std::vector<Span> list(const std::string& stops, bool allow_empty) {
    std::vector<Span> out;
    skip();
    if (allow_empty && pos_ < in_.size() && stops.find(in_[pos_]) != std::string::npos) return out;
    for (;;) {
      out.push_back(element(stops + ","));
      if (pos_ < in_.size() && in_[pos_] == ',') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  FormSyntax::Term term() {
    FormSyntax::Term t{Kind::Hyperbolic, {}, pos_};
    if (starts("qpf[[")) {
      pos_ += 5;
      t.kind = Kind::QuadPfister;
      t.slots = list(";]", true);
      expect(";");
      t.slots.push_back(element(",;]"));
      expect("]]");
    } else if (starts("bpf<<")) {
      pos_ += 5;
      t.kind = Kind::BilinPfister;
      t.slots = list(">", false);
      expect(">>");
    } else if (starts("[")) {
      ++pos_;
      t.kind = Kind::Block;
      t.slots.push_back(element(",]"));
      expect(",");
      t.slots.push_back(element(",]"));
      expect("]");
    } else if (starts("<")) {
      ++pos_;
      t.kind = Kind::Quasi;
      t.slots.push_back(element(",>"));
      expect(">");
    } else if (starts("H") && (pos_ + 1 == in_.size() || !std::isalnum(static_cast<unsigned char>(in_[pos_ + 1])))) {
      ++pos_;
    } else {
      fail(in_, pos_, "one of 'qpf[[', 'bpf<<', '[', '<', 'H'", describe_at(in_, pos_));
    }
    return t;
  }

  const std::string& in_;
  size_t pos_ = 0;
};

}  // namespace

FormSyntax parse_form_syntax(const std::string& input) { return FormScanner(input).run(); }

FormValue<RatFunc> parse_ratfunc_form(const std::string& input, uint32_t p, int m) {
  return build_form<RatFunc>(parse_form_syntax(input),
                             [&](const Span& s) { return parse_ratfunc(s, input, p, m); });
}

FormValue<GFElem> parse_gf_form(const std::string& input, const std::shared_ptr<const GaloisField>& f) {
  return build_form<GFElem>(parse_form_syntax(input), [&](const Span& s) { return parse_gf(s, input, f); });
}

}  // namespace pfl::text
