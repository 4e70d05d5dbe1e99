// pfl: command-line front end for the Pfister form and linkage library.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfl/cli/format.hpp"
#include "pfl/diffforms/chain.hpp"
#include "pfl/linkage/linkage.hpp"
#include "pfl/quadform/witt_finite.hpp"
#include "pfl/symbolalg/symbol_algebra.hpp"

using namespace pfl;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kSchema = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  bool json = false;
  uint64_t search_bound = SearchParams{}.random_trials;
  uint64_t seed = SearchParams{}.seed;
  std::string ctx, form, phi, psi, family;
  int m = 1;
  std::vector<uint32_t> primes;
  std::vector<int> deltas;
  bool closure = false;
};

struct Outcome {
  json report = json::object();
  std::string text;
  int code = 0;
};

// "@path" reads the argument from a file.
std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SearchParams search_params(const Options& o) {
  SearchParams p;
  p.random_trials = o.search_bound;
  p.seed = o.seed;
  return p;
}

json params_json(const Options& o) {
  const SearchParams p = search_params(o);
  return json{{"search_bound", p.random_trials},
              {"seed", p.seed},
              {"max_terms", p.max_terms},
              {"window", p.window},
              {"exhaustive_support", p.exhaustive_support}};
}

template <class E>
json vec_json(const Vec<E>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(text::print(x));
  return a;
}

template <class E>
json vecs_json(const std::vector<Vec<E>>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

template <class E>
std::string form_string(const QForm<E>& q) {
  text::FormValue<E> f;
  for (const auto& [a, b] : q.blocks) f.terms.push_back({text::FormSyntax::Term::Kind::Block, {a, b}});
  for (const auto& c : q.quasi) f.terms.push_back({text::FormSyntax::Term::Kind::Quasi, {c}});
  if (f.terms.empty()) return "0";
  return text::print_form<E>(f, [](const E& x) { return text::print(x); });
}

text::Context context(const Options& o) {
  if (o.ctx.empty()) throw Error(ErrorKind::InvalidArgument, "--ctx is required");
  return text::parse_context(load(o.ctx));
}

const LaurentCtx& laurent_only(const text::Context& c, const char* verb) {
  if (c.kind != text::Context::Kind::Laurent)
    throw Error(ErrorKind::UnsupportedModel, std::string(verb) + " needs a Laurent model such as F2((1/x1))((1/x2))");
  return *c.laurent;
}

text::FormValue<RatFunc> ratfunc_form(const std::string& arg, const text::Context& c) {
  return text::parse_ratfunc_form(load(arg), c.p, c.m);
}

PfisterQuad<RatFunc> quad_pfister(const std::string& arg, const text::Context& c, const char* flag) {
  if (arg.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " is required");
  auto f = ratfunc_form(arg, c);
  auto q = f.as_quad_pfister();
  if (!q) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " must be a single qpf[[...]] term");
  return *q;
}

SlotFamily family(const Options& o, const LaurentCtx& ctx) {
  if (!o.family.empty()) return SlotFamily::parse(o.family, ctx);
  std::vector<int> vars;
  for (int i = 1; i <= ctx.m; ++i) vars.push_back(i);
  return SlotFamily::monomials(ctx, vars);
}

}  // namespace

namespace {

std::vector<uint32_t> primes_or_default(const Options& o) {
  return o.primes.empty() ? std::vector<uint32_t>{2, 3, 5} : o.primes;
}

Outcome verify_lemma31(const Options& o) {
  Outcome out;
  std::ostringstream txt;
  json runs = json::array();
  bool all = true;
  const std::vector<std::string> names = {"alpha", "beta", "gamma"};
  for (uint32_t p : primes_or_default(o)) {
    if (!modp::is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
    const auto r = commonslot_check(RatFunc::variable(p, 3, 0), RatFunc::variable(p, 3, 1), RatFunc::variable(p, 3, 2));
    all = all && r.holds();
    runs.push_back(json{{"p", p},
                        {"t", r.t.to_string(names)},
                        {"slot", r.slot.to_string(names)},
                        {"element_identity", r.element_identity},
                        {"closed_form", r.closed_form},
                        {"etale", r.etale},
                        {"holds", r.holds()}});
    txt << "p = " << p << ": w^p - w = (t^p gamma + beta) * 1 " << (r.element_identity ? "holds" : "FAILS")
        << "; closed form " << (r.closed_form ? "holds" : "FAILS") << "\n"
        << "  t = " << r.t.to_string(names) << "\n  t^p gamma + beta = " << r.slot.to_string(names) << "\n"
        << "  F[x] etale: T^p - T - (t^p gamma + beta) is separable\n";
  }
  out.report["runs"] = runs;
  out.report["result"] = all ? "identity holds" : "identity fails";
  txt << (all ? "identity holds" : "identity fails") << "\n";
  out.text = txt.str();
  out.code = all ? 0 : 1;
  return out;
}

Outcome verify_prop32(const Options& o) {
  Outcome out;
  std::ostringstream txt;
  json runs = json::array();
  std::vector<int> deltas = o.deltas.empty() ? std::vector<int>{0, 1, 2, 3} : o.deltas;
  bool all = true;
  for (uint32_t p : primes_or_default(o))
    for (int k : deltas) {
      const ChainReport r = verify_prop32_chain(p, k);
      all = all && r.all_hold();
      json steps = json::array();
      txt << "p = " << p << ", " << k << " delta slot(s)" << (r.degenerate_branch ? " (degenerate branch)" : "")
          << "\n";
      for (const auto& s : r.steps) {
        steps.push_back(json{{"label", s.label}, {"statement", s.statement}, {"holds", s.holds}});
        txt << "  [" << (s.holds ? "ok" : "FAIL") << "] " << s.label << ": " << s.statement << "\n";
      }
      runs.push_back(json{{"p", p},
                          {"delta_slots", k},
                          {"degenerate_branch", r.degenerate_branch},
                          {"steps", steps},
                          {"holds", r.all_hold()}});
    }
  out.report["runs"] = runs;
  out.report["result"] = all ? "chain holds" : "chain fails";
  txt << (all ? "chain holds" : "chain fails") << "\n";
  out.text = txt.str();
  out.code = all ? 0 : 1;
  return out;
}

json laurent_witt_json(const LaurentWitt& w) {
  json hp = json::array();
  for (const auto& h : w.hensel_planes)
    hp.push_back(json{{"e", vec_json(h.e)},
                      {"f", vec_json(h.f)},
                      {"q_e", text::print(h.a)},
                      {"q_f", text::print(h.b)},
                      {"root", text::print(h.root)},
                      {"remainder", text::print(h.remainder)}});
  json planes = json::array();
  for (const auto& pl : w.planes) planes.push_back(json{{"u", vec_json(pl.u)}, {"w", vec_json(pl.w)}});
  return json{{"lower", w.lower},
              {"upper", w.upper},
              {"decided", w.decided()},
              {"rational_planes", planes},
              {"hensel_planes", hp},
              {"defects", vecs_json(w.defects)},
              {"remainder", form_string(w.remainder)},
              {"anisotropy_trace", w.trace.lines},
              {"steps", w.steps}};
}

std::string laurent_witt_text(const LaurentWitt& w) {
  std::ostringstream txt;
  txt << "Witt index in [" << w.lower << ", " << w.upper << "]" << (w.decided() ? "" : " (INCONCLUSIVE)") << "\n";
  for (const auto& s : w.steps) txt << "  " << s << "\n";
  for (const auto& pl : w.planes) txt << "  plane u = " << vec_json(pl.u).dump() << ", w = " << vec_json(pl.w).dump() << "\n";
  for (const auto& h : w.hensel_planes)
    txt << "  Hensel plane e = " << vec_json(h.e).dump() << ", f = " << vec_json(h.f).dump()
        << ", q(e) q(f) = root^2 + root + remainder with root = " << text::print(h.root)
        << ", remainder = " << text::print(h.remainder) << "\n";
  txt << "  remainder: " << form_string(w.remainder) << "\n";
  for (const auto& l : w.trace.lines) txt << "  " << l << "\n";
  return txt.str();
}

}  // namespace

namespace {

Outcome witt_finite_verb(const text::Context& c, const std::string& input) {
  Outcome out;
  const auto f = text::parse_gf_form(input, c.finite);
  const QForm<GFElem> q = f.expand(c.finite->one());
  const auto d = witt_decompose(q);
  out.report["form"] = text::print_form<GFElem>(f, [](const GFElem& x) { return text::print(x); });
  out.report["dimension"] = q.dim();
  out.report["witt_index"] = d.witt_index;
  out.report["defect"] = d.defect;
  out.report["anisotropic_part"] = form_string(d.anisotropic_part);
  json pairs = json::array();
  for (const auto& h : d.hyperbolic_witnesses) pairs.push_back(json{{"u", vec_json(h.u)}, {"w", vec_json(h.w)}});
  out.report["hyperbolic_pairs"] = pairs;
  out.report["defect_vectors"] = vecs_json(d.defect_witnesses);
  std::ostringstream txt;
  txt << "Witt index " << d.witt_index << ", defect " << d.defect << ", anisotropic part "
      << form_string(d.anisotropic_part) << "\n";
  if (q.dim() <= 8) {
    const int oracle = witt_index_oracle(q);
    out.report["oracle_index"] = oracle;
    if (oracle != d.witt_index) throw Error(ErrorKind::IdentityFailed, "Witt index disagrees with the exhaustive oracle");
    txt << "  exhaustive oracle agrees\n";
  }
  out.text = txt.str();
  return out;
}

Outcome witt(const Options& o) {
  const text::Context c = context(o);
  if (o.form.empty()) throw Error(ErrorKind::InvalidArgument, "--form is required");
  const std::string input = load(o.form);
  if (c.kind == text::Context::Kind::Finite) return witt_finite_verb(c, input);
  const LaurentCtx& ctx = laurent_only(c, "witt");
  Outcome out;
  const auto f = ratfunc_form(input, c);
  const QForm<RatFunc> q = f.expand(ctx.one());
  const LaurentWitt w = witt_index_laurent(q, ctx, search_params(o));
  std::string why;
  if (!verify_witt(q, ctx, w, &why)) throw Error(ErrorKind::IdentityFailed, "witness re-check: " + why);
  out.report["form"] = text::print_form<RatFunc>(f, [](const RatFunc& x) { return text::print(x); });
  out.report["dimension"] = q.dim();
  out.report["witt"] = laurent_witt_json(w);
  out.text = laurent_witt_text(w);
  out.code = w.decided() ? 0 : kExitInconclusive;
  return out;
}

Outcome decide(const Options& o) {
  const text::Context c = context(o);
  Outcome out;
  if (c.kind == text::Context::Kind::Finite) {
    if (o.form.empty()) throw Error(ErrorKind::InvalidArgument, "--form is required");
    const std::string input = load(o.form);
    const auto f = text::parse_gf_form(input, c.finite);
    if (!f.as_quad_pfister()) throw Error(ErrorKind::InvalidArgument, "--form must be a single qpf[[...]] term");
    const QForm<GFElem> q = f.expand(c.finite->one());
    const auto d = witt_decompose(q);
    const bool hyp = 2 * d.witt_index == q.dim();
    if (!hyp && d.witt_index > 0) throw Error(ErrorKind::IdentityFailed, "isotropic Pfister form that is not hyperbolic");
    out.report["form"] = text::print_form<GFElem>(f, [](const GFElem& x) { return text::print(x); });
    out.report["verdict"] = hyp ? "HYPERBOLIC" : "ANISOTROPIC";
    out.report["witt_index"] = d.witt_index;
    out.text = out.report["verdict"].get<std::string>() + "\n";
    return out;
  }
  const LaurentCtx& ctx = laurent_only(c, "decide");
  const PfisterQuad<RatFunc> pf = quad_pfister(o.form, c, "--form");
  const HyperbolicityVerdict v = decide_hyperbolic(pf, ctx, search_params(o));
  out.report["form"] = describe(pf);
  out.report["verdict"] = to_string(v.verdict);
  out.report["lagrangian"] = vecs_json(v.lagrangian);
  out.report["note"] = v.note;
  out.report["witt"] = laurent_witt_json(v.detail);
  out.text = std::string(to_string(v.verdict)) + (v.note.empty() ? "" : " (" + v.note + ")") + "\n" +
             laurent_witt_text(v.detail);
  out.code = v.verdict == Verdict::Inconclusive ? kExitInconclusive : 0;
  return out;
}

}  // namespace

namespace {

json verdict_json(const FactorVerdict& v) {
  return json{{"verdict", to_string(v.verdict)},
              {"threshold", v.threshold},
              {"witt_lower", v.witt.lower},
              {"witt_upper", v.witt.upper},
              {"syntactic", v.syntactic},
              {"reason", v.reason}};
}

json entry_json(const FactorEntry& e) {
  return json{{"form", e.form}, {"origin", e.origin}, {"on_phi", verdict_json(e.on_phi)}, {"on_psi", verdict_json(e.on_psi)}};
}

json field_json(const LinkageField& f) {
  json j{{"value", to_string(f.value)}, {"note", f.note}};
  j["witness"] = f.witness ? entry_json(*f.witness) : json(nullptr);
  return j;
}

std::string field_text(const char* name, const LinkageField& f) {
  std::string s = std::string(name) + ": " + to_string(f.value);
  if (f.witness) s += "  [" + f.witness->form + ", " + f.witness->origin + "]";
  if (!f.note.empty()) s += "  (" + f.note + ")";
  return s + "\n";
}

// Only pairs sharing the Artin-Schreier slot; uses the first bilinear position where they differ.
void maybe_close(SlotFamily& fam, const PfisterQuad<RatFunc>& a, const PfisterQuad<RatFunc>& b) {
  if (a.fold() != b.fold() || !(a.as_slot == b.as_slot) || a.bilin_slots.empty()) return;
  for (size_t i = 0; i < a.bilin_slots.size(); ++i)
    if (!(a.bilin_slots[i] == b.bilin_slots[i])) {
      fam.add_common_slot_closure(a.as_slot, a.bilin_slots[i], b.bilin_slots[i]);
      return;
    }
}

Outcome linkage(const Options& o) {
  const text::Context c = context(o);
  const LaurentCtx& ctx = laurent_only(c, "linkage");
  const auto phi = quad_pfister(o.phi, c, "--phi"), psi = quad_pfister(o.psi, c, "--psi");
  SlotFamily fam = family(o, ctx);
  if (o.closure) maybe_close(fam, phi, psi);
  const LinkageReport r = linkage_report(phi, psi, o.m, fam, ctx, search_params(o));
  for (const auto* f : {&r.separable, &r.inseparable, &r.total_separable, &r.total_inseparable}) {
    std::string why;
    if (f->witness && !verify_entry(*f->witness, phi, psi, ctx, &why))
      throw Error(ErrorKind::IdentityFailed, "witness re-check: " + why);
  }
  Outcome out;
  out.report["phi"] = describe(phi);
  out.report["psi"] = describe(psi);
  out.report["m"] = r.m;
  out.report["family"] = r.family;
  out.report["separable"] = field_json(r.separable);
  out.report["inseparable"] = field_json(r.inseparable);
  out.report["total_separable"] = field_json(r.total_separable);
  out.report["total_inseparable"] = field_json(r.total_inseparable);
  out.report["sum_witt_index"] = json{{"lower", r.sum_index.lower}, {"upper", r.sum_index.upper}};
  const std::string m = std::to_string(r.m);
  out.text = "phi = " + describe(phi) + ", psi = " + describe(psi) + ", m = " + m + ", family " + r.family + "\n" +
             field_text(("separable_" + m).c_str(), r.separable) +
             field_text(("inseparable_" + m).c_str(), r.inseparable) +
             field_text(("total_sep_" + m).c_str(), r.total_separable) +
             field_text(("total_insep_" + m).c_str(), r.total_inseparable);
  bool unknown = false;
  for (const auto* f : {&r.separable, &r.inseparable, &r.total_separable, &r.total_inseparable})
    unknown = unknown || f->value == Tri::Unknown;
  out.code = unknown ? kExitInconclusive : 0;
  return out;
}

Outcome enumerate(const Options& o) {
  const text::Context c = context(o);
  const LaurentCtx& ctx = laurent_only(c, "enumerate-factors");
  const auto phi = quad_pfister(o.form, c, "--form");
  const SlotFamily fam = family(o, ctx);
  const FactorSet s = enumerate_factors(phi, o.m, fam, ctx, search_params(o));
  Outcome out;
  json quad = json::array(), bil = json::array();
  std::string txt = "factors of " + describe(phi) + " (m = " + std::to_string(o.m) + ", family " + fam.description + ")\n";
  for (const auto& q : s.quadratic) {
    quad.push_back(json{{"form", describe(q.form)}, {"origin", q.origin}});
    txt += "  " + describe(q.form) + "\n";
  }
  for (const auto& b : s.bilinear) {
    bil.push_back(json{{"form", describe(b.form)}, {"origin", b.origin}});
    txt += "  " + describe(b.form) + "\n";
  }
  out.report["form"] = describe(phi);
  out.report["m"] = o.m;
  out.report["family"] = fam.description;
  out.report["quadratic"] = quad;
  out.report["bilinear"] = bil;
  out.report["undecided"] = s.undecided;
  if (s.undecided) txt += "  " + std::to_string(s.undecided) + " candidate(s) INCONCLUSIVE\n";
  out.text = txt;
  out.code = s.undecided ? kExitInconclusive : 0;
  return out;
}

Outcome prop33(const Options& o) {
  const text::Context c = context(o);
  const LaurentCtx& ctx = laurent_only(c, "check-prop33");
  const auto pi = quad_pfister(o.phi, c, "--phi"), omega = quad_pfister(o.psi, c, "--psi");
  SlotFamily fam = family(o, ctx);
  if (o.closure) maybe_close(fam, pi, omega);
  const Prop33Result r = check_prop33(pi, omega, ctx, fam, search_params(o));
  const bool hypothesis = r.degenerate || r.hypothesis.verdict == Tri::Yes;
  Outcome out;
  out.report["pi"] = describe(pi);
  out.report["omega"] = describe(omega);
  out.report["t"] = text::print(r.t);
  out.report["slot"] = text::print(r.slot);
  out.report["degenerate"] = r.degenerate;
  out.report["hypothesis"] = r.degenerate ? json("degenerate") : verdict_json(r.hypothesis);
  out.report["conclusion"] = to_string(r.conclusion.verdict);
  out.report["lagrangian"] = vecs_json(r.conclusion.lagrangian);
  out.report["inseparable_witness"] = r.inseparable_witness ? entry_json(*r.inseparable_witness) : json(nullptr);
  std::string txt = "t = " + text::print(r.t) + "\nt^2 gamma + beta = " + text::print(r.slot) + "\n";
  txt += r.degenerate ? "degenerate branch: d(gamma) ^ d(beta) = 0\n"
                      : "hypothesis <<slot]] | pi: " + std::string(to_string(r.hypothesis.verdict)) + "\n";
  txt += "conclusion form: " + std::string(to_string(r.conclusion.verdict)) + "\n";
  if (r.inseparable_witness) txt += "inseparable witness: " + r.inseparable_witness->form + "\n";
  out.text = txt;
  out.code = hypothesis && !r.conclusion_checked ? kExitInconclusive : 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pfl: quadratic Pfister forms, symbols and linkage over exact fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Print a JSON report");
    sub->add_option("--search-bound", o.search_bound, "Random candidates tried by the isotropy search");
    sub->add_option("--seed", o.seed, "Seed of the isotropy search");
  };
  auto with_ctx = [&o](CLI::App* sub) {
    sub->add_option("--ctx", o.ctx, "Field: GF(q), field GF(p)[x1,..], F2((x1)).. or F2((1/x1))..")->required();
  };
  auto with_family = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "Slot family, e.g. monomials:x1,x2 (default: all variables)");
  };

  auto* l31 = app.add_subcommand("verify-lemma31", "Check the common-slot element identity over F_p(alpha, beta, gamma)");
  l31->add_option("--p", o.primes, "Primes (default 2 3 5)");
  auto* p32 = app.add_subcommand("verify-prop32", "Check the differential-form identity chain");
  p32->add_option("--p", o.primes, "Primes (default 2 3 5)");
  p32->add_option("--deltas", o.deltas, "Numbers of extra slots (default 0 1 2 3)");
  auto* wi = app.add_subcommand("witt", "Witt index with witnesses");
  with_ctx(wi);
  wi->add_option("--form", o.form, "Form, or @file")->required();
  auto* de = app.add_subcommand("decide", "Hyperbolicity of a quadratic Pfister form");
  with_ctx(de);
  de->add_option("--form", o.form, "qpf[[...]] form, or @file")->required();
  auto* li = app.add_subcommand("linkage", "Separable, inseparable and total m-linkage");
  with_ctx(li);
  li->add_option("--phi", o.phi, "First form")->required();
  li->add_option("--psi", o.psi, "Second form")->required();
  li->add_option("--m", o.m, "Fold of the common factors")->check(CLI::PositiveNumber);
  with_family(li);
  li->add_flag("--closure", o.closure, "Add the common-slot candidates of the pair to the family");
  auto* en = app.add_subcommand("enumerate-factors", "Factors of a form drawn from a slot family");
  with_ctx(en);
  en->add_option("--form", o.form, "qpf[[...]] form")->required();
  en->add_option("--m", o.m, "Fold of the factors")->check(CLI::PositiveNumber);
  with_family(en);
  auto* pr = app.add_subcommand("check-prop33", "Common-slot criterion for a pair sharing all but one slot");
  with_ctx(pr);
  pr->add_option("--phi", o.phi, "pi = qpf[[delta.., beta ; alpha]]")->required();
  pr->add_option("--psi", o.psi, "omega = qpf[[delta.., gamma ; alpha]]")->required();
  with_family(pr);
  pr->add_flag("--closure", o.closure, "Add the common-slot candidates of the pair to the family");
  for (auto* s : {l31, p32, wi, de, li, en, pr}) common(s);

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (auto* s : app.get_subcommands({})) known = known || s->get_name() == argv[1];
    if (!known) {
      std::cerr << "error: unknown verb '" << argv[1] << "'\n\n" << app.help();
      return 1;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (sub == l31) out = verify_lemma31(o);
    else if (sub == p32) out = verify_prop32(o);
    else if (sub == wi) out = witt(o);
    else if (sub == de) out = decide(o);
    else if (sub == li) out = linkage(o);
    else if (sub == en) out = enumerate(o);
    else out = prop33(o);
  } catch (const Error& e) {
    // An undecided hypothesis is an inconclusive outcome, not a failure.
    const bool undecided = e.kind() == ErrorKind::HypothesisNotEstablished;
    if (o.json) {
      json j{{"tool", "pfl"}, {"version", kVersion}, {"schema", kSchema}, {"verb", verb}};
      j["error"] = json{{"kind", to_string(e.kind())}, {"message", e.what()}};
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << verb << ": " << e.what() << "\n";
    return undecided ? kExitInconclusive : 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    json j{{"tool", "pfl"}, {"version", kVersion}, {"schema", kSchema}, {"verb", verb}};
    if (!o.ctx.empty()) j["model"] = text::print(text::parse_context(load(o.ctx)));
    j["params"] = params_json(o);
    j["exit_code"] = out.code;
    for (auto& [k, v] : out.report.items()) j[k] = v;
    j["timing_ms"] = ms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (out.code == kExitInconclusive) std::cout << "INCONCLUSIVE within the search bounds\n";
  }
  return out.code;
}
