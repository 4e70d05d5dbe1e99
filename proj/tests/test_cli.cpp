#include "doctest.h"

#include <fstream>
#include <sstream>

#include "pfl/cli/format.hpp"
#include "pfl/error.hpp"

using namespace pfl;
using namespace pfl::text;

namespace {

using Kind = FormSyntax::Term::Kind;

struct DocBlock {
  std::string info;  // text after the opening fence
  std::vector<std::string> lines;
};

std::vector<DocBlock> doc_blocks(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<DocBlock> out;
  std::string line;
  bool open = false;
  while (std::getline(in, line)) {
    if (line.rfind("```", 0) == 0) {
      if (open) {
        open = false;
      } else {
        open = true;
        out.push_back({line.substr(3), {}});
      }
      continue;
    }
    if (open && !line.empty()) out.back().lines.push_back(line);
  }
  return out;
}

std::string print_ratfunc_form(const FormValue<RatFunc>& f) {
  return print_form<RatFunc>(f, [](const RatFunc& e) { return print(e); });
}

std::string print_gf_form(const FormValue<GFElem>& f) {
  return print_form<GFElem>(f, [](const GFElem& e) { return print(e); });
}

void require_context_round_trip(const std::string& text) {
  const Context a = parse_context(text);
  const std::string shown = print(a);
  const Context b = parse_context(shown);
  INFO(text, " -> ", shown);
  CHECK(a.kind == b.kind);
  CHECK(a.p == b.p);
  CHECK(a.m == b.m);
  CHECK(print(b) == shown);
}

// print(parse(s)) parses to an equal value, under the context named in the fence.
void require_form_round_trip(const Context& ctx, const std::string& text) {
  INFO(text);
  if (ctx.kind == Context::Kind::Finite) {
    const auto a = parse_gf_form(text, ctx.finite);
    const std::string shown = print_gf_form(a);
    INFO(shown);
    CHECK(parse_gf_form(shown, ctx.finite) == a);
  } else {
    const auto a = parse_ratfunc_form(text, ctx.p, ctx.m);
    const std::string shown = print_ratfunc_form(a);
    INFO(shown);
    CHECK(parse_ratfunc_form(shown, ctx.p, ctx.m) == a);
  }
}

std::string parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) return e.what();
    return "wrong kind: " + std::string(e.what());
  }
  return "no error";
}

}  // namespace

TEST_CASE("quadratic Pfister literal") {
  const auto f = parse_ratfunc_form("qpf[[x1 ; x1*x2]]", 2, 2);
  const auto pq = f.as_quad_pfister();
  REQUIRE(pq);
  REQUIRE(pq->bilin_slots.size() == 1);
  CHECK(pq->bilin_slots[0] == RatFunc::variable(2, 2, 0));
  CHECK(pq->as_slot == RatFunc::variable(2, 2, 0) * RatFunc::variable(2, 2, 1));
  CHECK(print_ratfunc_form(f) == "qpf[[x1 ; x1*x2]]");
  CHECK(f.expand(RatFunc::constant(2, 2, 1)).dim() == 4);
}

TEST_CASE("rational function context") {
  const Context c = parse_context("field GF(2)[x1,x2]");
  CHECK(c.kind == Context::Kind::RationalFunctions);
  CHECK(c.p == 2);
  CHECK(c.m == 2);
  CHECK(print(c) == "field GF(2)[x1,x2]");
}

TEST_CASE("finite and Laurent contexts") {
  const Context f = parse_context("GF(3^2)");
  CHECK(f.kind == Context::Kind::Finite);
  CHECK(f.p == 3);
  CHECK(f.finite->degree() == 2);
  const Context l = parse_context("F2((1/x1))((1/x2))");
  CHECK(l.kind == Context::Kind::Laurent);
  CHECK(l.m == 2);
  CHECK(l.laurent->orientation == Orientation::AtInfinity);
  CHECK(parse_context("F2((x1))").laurent->orientation == Orientation::AtZero);
}

TEST_CASE("empty Pfister slots are rejected with a position") {
  const std::string msg = parse_error_of([] { parse_ratfunc_form("qpf[[ ; ]]", 2, 2); });
  CHECK(msg.find("line 1, column 9") != std::string::npos);
  CHECK(msg.find("expected") != std::string::npos);
}

TEST_CASE("parse errors carry line, column and expectation") {
  CHECK(parse_error_of([] { parse_ratfunc_form("qpf[[x1 ;\n x3]]", 2, 2); }).find("line 2, column 2") !=
        std::string::npos);
  CHECK(parse_error_of([] { parse_ratfunc_form("[x1, x2", 2, 2); }).find("line 1") != std::string::npos);
  CHECK(parse_error_of([] { parse_ratfunc_form("<x1/(x2 + x2)>", 2, 2); }) != "no error");
  CHECK(parse_error_of([] { parse_ratfunc_form("qpf[[x1 ; x2]] +", 2, 2); }) != "no error");
  CHECK(parse_error_of([] { parse_ratfunc_form("pf[[x1 ; x2]]", 2, 2); }) != "no error");
  CHECK(parse_error_of([] { parse_context("GF(6)"); }) != "no error");
  CHECK(parse_error_of([] { parse_context("GF(2)[x2]"); }) != "no error");
  CHECK(parse_error_of([] { parse_context("GF(4)[x1]"); }) != "no error");
  CHECK(parse_error_of([] { parse_gf_form("[u, 1]", GaloisField::create(2, 1)); }) != "no error");
}

TEST_CASE("element syntax") {
  const RatFunc x1 = RatFunc::variable(2, 2, 0), x2 = RatFunc::variable(2, 2, 1);
  const auto f = parse_ratfunc_form("<(x1 + 1)^2 * x2^-1> + H", 2, 2);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].kind == Kind::Quasi);
  CHECK(f.terms[0].slots[0] == (x1 * x1 + RatFunc::constant(2, 2, 1)) / x2);
  CHECK(f.terms[1].kind == Kind::Hyperbolic);
  // integers reduce mod p
  const auto g = parse_ratfunc_form("[3*x1, -x1]", 3, 1);
  CHECK(g.terms[0].slots[0].is_zero());
}

TEST_CASE("GF(4) forms") {
  const auto field = GaloisField::create(2, 2);
  const auto f = parse_gf_form("[1, u] + <u + 1>", field);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].slots[1] == field->generator_u());
  CHECK(f.terms[1].slots[0] == field->generator_u() + field->one());
  CHECK(f.expand(field->one()).dim() == 3);
}

TEST_CASE("bilinear Pfister literal expands to its quasilinear form") {
  const auto f = parse_ratfunc_form("bpf<<x1, x2>>", 2, 2);
  const auto q = f.expand(RatFunc::constant(2, 2, 1));
  CHECK(q.dim() == 4);
  CHECK(q.blocks.empty());
}

TEST_CASE("every documented example round-trips") {
  const auto blocks = doc_blocks(PFL_FORMAT_DOC);
  int contexts = 0, forms = 0;
  for (const auto& b : blocks) {
    if (b.info == "context") {
      for (const auto& l : b.lines) {
        require_context_round_trip(l);
        ++contexts;
      }
    } else if (b.info.rfind("form ", 0) == 0) {
      const Context ctx = parse_context(b.info.substr(5));
      for (const auto& l : b.lines) {
        require_form_round_trip(ctx, l);
        ++forms;
      }
    }
  }
  CHECK(contexts >= 5);
  CHECK(forms >= 10);
}
