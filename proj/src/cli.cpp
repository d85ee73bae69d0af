#include "qweb/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qweb/aqhowe.hpp"
#include "qweb/error.hpp"
#include "qweb/evaluator.hpp"
#include "qweb/heckeclifford.hpp"
#include "qweb/invariants.hpp"
#include "qweb/qsym.hpp"

namespace qweb::cli {

namespace {

struct Common {
  int n = 1;
  long cap = 4096;
  std::string screen;  // "NUM/DEN"
  std::string format = "text";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n", c.n, "rank n of U_q(q_n)")->check(CLI::Range(1, 8));
  sub->add_option("--cap", c.cap, "largest allowed intermediate dimension")->check(CLI::PositiveNumber);
  sub->add_option("--screen-q0", c.screen, "specialize q at NUM/DEN");
  sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
}

GaussRat parse_q0(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    long num = std::stol(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    long den = 1;
    if (slash != std::string::npos) {
      den = std::stol(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw std::invalid_argument(s);
    }
    if (den == 0 || num == 0) throw std::invalid_argument(s);
    return GaussRat::frac(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad --screen-q0 value '" + s + "' (expected nonzero NUM/DEN)");
  }
}

EvalContext context(const Common& c) {
  EvalContext ctx(c.n, c.cap);
  if (!c.screen.empty()) ctx = ctx.specialized(parse_q0(c.screen));
  return ctx;
}

std::string read_all(std::istream& in) {
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

nlohmann::json scalar_json(const ScalarQ& s) {
  nlohmann::json j = s.to_json();
  return s.is_laurent() ? j["num"] : j;
}

// ---- verbs ----

int do_eval(const Common& c, std::string text, std::istream& in, std::ostream& out) {
  if (text.empty() || text == "-") text = read_all(in);
  WebDiagram d = parse_web(text);
  SuperMap f = eval_diagram(expand_macros(d), context(c));
  const bool closed = d.src.empty() && d.tgt.empty();
  if (c.format == "structured") {
    nlohmann::json j;
    j["diagram"] = d.to_string();
    j["n"] = c.n;
    if (closed) {
      j["scalar"] = scalar_json(f.is_zero() ? ScalarQ() : f.entry(0, 0));
    } else {
      j["source"] = object_to_string(d.src);
      j["target"] = object_to_string(d.tgt);
      j["parity"] = f.parity();
      j["entries"] = nlohmann::json::array();
      for (int col = 0; col < f.source().dim(); ++col)
        for (const auto& e : f.col(col))
          j["entries"].push_back({f.target().label(e.row).to_string(), f.source().label(col).to_string(), scalar_json(e.val)});
    }
    out << j.dump() << "\n";
    return Ok;
  }
  if (closed) {
    out << (f.is_zero() ? ScalarQ() : f.entry(0, 0)).pretty() << "\n";
    return Ok;
  }
  out << "map " << object_to_string(d.src) << " -> " << object_to_string(d.tgt) << ", parity " << f.parity() << ", "
      << f.target().dim() << " x " << f.source().dim() << ", " << f.nnz() << " nonzero\n";
  for (int col = 0; col < f.source().dim(); ++col)
    for (const auto& e : f.col(col))
      out << f.target().label(e.row).to_string() << " " << f.source().label(col).to_string() << " " << e.val.pretty()
          << "\n";
  return Ok;
}

int report(const std::vector<RelationResult>& rs, const Common& c, std::ostream& out) {
  int failed = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) {
    if (!r.pass) ++failed;
    if (c.format == "structured") {
      nlohmann::json j{{"id", r.id}, {"label", r.label}, {"pass", r.pass}, {"mode", r.mode}};
      if (r.witness) {
        j["witness"] = {{"row", r.witness->row}, {"col", r.witness->col}, {"lhs", scalar_json(r.witness->lhs)},
                        {"rhs", scalar_json(r.witness->rhs)}};
      }
      if (!r.error.empty()) j["error"] = r.error;
      arr.push_back(j);
      continue;
    }
    out << (r.pass ? "PASS " : r.error.empty() ? "FAIL " : "ERROR ") << r.id << " | " << r.label << " | " << r.mode;
    if (r.witness) out << " | " << r.witness->to_string();
    if (!r.error.empty()) out << " | " << r.error;
    out << "\n";
  }
  if (c.format == "structured") {
    out << nlohmann::json{{"results", arr}, {"passed", rs.size() - static_cast<std::size_t>(failed)}, {"failed", failed}}.dump()
        << "\n";
  } else {
    out << rs.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  }
  return failed ? VerifyFailed : Ok;
}

int do_verify(const Common& c, const std::string& suite, const std::string& id, const std::string& bc, bool screen_only,
              std::ostream& out) {
  EvalContext ctx(c.n, c.cap);
  VerifyOptions opt;
  opt.symbolic = !screen_only;
  if (!c.screen.empty()) opt.screens = {parse_q0(c.screen)};
  std::vector<RelationResult> rs;
  if (!bc.empty()) {
    int r = 0, s = 0;
    char comma = 0;
    std::istringstream is(bc);
    if (!(is >> r >> comma >> s) || comma != ',' || r < 0 || s < 0)
      throw Error(ErrorKind::Parse, "bad --bc value '" + bc + "' (expected R,S)");
    std::optional<VerifyOptions> o;
    if (screen_only || !c.screen.empty()) o = opt;
    for (const auto& b : verify_bc_relations(r, s, ctx, o))
      rs.push_back({"bc(" + bc + ")", b.label, b.pass, b.mode, b.witness, b.error});
  } else if (!id.empty()) {
    rs = verify_relation(id, ctx, opt);
  } else {
    rs = verify_suite(suite.empty() ? "all" : suite, ctx, opt);
  }
  return report(rs, c, out);
}

int do_invariant(const Common& c, std::string braid, const std::vector<int>& kinks, std::istream& in,
                 std::ostream& out) {
  if (braid.empty() || braid == "-") braid = read_all(in);
  LinkPresentation link = LinkPresentation::parse(braid);
  link.kinks = kinks;
  ScalarQ v = invariant(link, context(c));
  if (c.format == "structured") {
    out << nlohmann::json{{"braid", link.braid.to_string()}, {"n", c.n}, {"text", v.pretty()}, {"value", scalar_json(v)}}.dump()
        << "\n";
  } else {
    out << v.pretty() << "\n";
  }
  return Ok;
}

int do_dims(const Common& c, int degree, const std::string& object, const std::string& weight, std::ostream& out) {
  nlohmann::json j;
  j["n"] = c.n;
  std::ostringstream text;
  nlohmann::json sym = nlohmann::json::array();
  for (int d = 0; d <= degree; ++d) {
    sym.push_back(sym_dim(d, c.n));
    text << "sym_dim(" << d << "," << c.n << ") = " << sym_dim(d, c.n) << "\n";
  }
  j["sym"] = sym;
  if (!weight.empty()) {
    std::vector<int> lambda;
    std::istringstream is(weight);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        lambda.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "bad --weight value '" + weight + "'");
      }
      if (lambda.back() < 0) throw Error(ErrorKind::Parse, "weights must be nonnegative");
    }
    const int m = static_cast<int>(lambda.size());
    const int dim = weight_space(m, c.n, lambda).space.dim();
    j["weight"] = {{"lambda", lambda}, {"dim", dim}};
    text << "weight space m=" << m << " lambda=(" << weight << ") dim = " << dim << "\n";
  }
  if (!object.empty()) {
    WebObject obj = parse_web("id(" + object + ")").src;
    const long dim = object_dim(obj, c.n);
    if (dim > c.cap) throw Error(ErrorKind::Cap, "dimension cap exceeded");
    std::vector<ModuleFactor> fs;
    for (const auto& it : obj) fs.push_back({it.k, it.o == Orient::Down});
    const GaussRat q0 = c.screen.empty() ? GaussRat::frac(7, 5) : parse_q0(c.screen);
    const int end = commutant_dimension(fs, c.n, q0);
    j["object"] = {{"object", object_to_string(obj)}, {"dim", dim}, {"end_dim", end}, {"q0", q0.to_string()}};
    text << "object " << object_to_string(obj) << " dim = " << dim << "\n";
    text << "End dim at q0=" << q0.to_string() << " = " << end << "\n";
  }
  out << (c.format == "structured" ? j.dump() + "\n" : text.str());
  return Ok;
}

int do_kappa(const Common& c, int kmax, std::ostream& out) {
  bool ok = kappa() * ScalarQ::qtilde() == ScalarQ(2);
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream text;
  text << "kappa = " << kappa().pretty() << "\n";
  for (int k = 1; k <= kmax; ++k) {
    const bool pass = kappa_recursion_check(k);
    ok = ok && pass;
    arr.push_back({{"k", k}, {"circle", scalar_json(kappa_circle(k))}, {"check", pass}});
    text << "k=" << k << " circle = " << kappa_circle(k).pretty() << " recursion " << (pass ? "ok" : "FAIL") << "\n";
  }
  if (c.format == "structured") {
    out << nlohmann::json{{"kappa", scalar_json(kappa())}, {"circles", arr}, {"pass", ok}}.dump() << "\n";
  } else {
    out << text.str();
  }
  return ok ? Ok : VerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify q-webs"};
  app.require_subcommand(1);

  Common ce, cv, ci, cd, ck;
  std::string diagram;
  auto* ev = app.add_subcommand("eval", "evaluate a diagram (DSL text, or stdin)");
  add_common(ev, ce);
  ev->add_option("diagram", diagram, "diagram text; '-' or empty reads stdin");

  std::string suite, id, bc;
  bool screen_only = false;
  auto* ve = app.add_subcommand("verify", "check catalog relations");
  add_common(ve, cv);
  auto* o_suite = ve->add_option("--suite", suite, "suite name, or 'all'");
  auto* o_id = ve->add_option("--id", id, "single catalog entry");
  auto* o_bc = ve->add_option("--bc", bc, "walled Brauer-Clifford relations at R,S");
  o_suite->excludes(o_id)->excludes(o_bc);
  o_id->excludes(o_bc);
  ve->add_flag("--screen-only", screen_only, "skip the symbolic check");

  std::string braid;
  std::vector<int> kinks;
  auto* in_ = app.add_subcommand("invariant", "normalized invariant of a braid closure");
  add_common(in_, ci);
  in_->add_option("--braid", braid, "braid text, e.g. \"braid 2 [1,1] : s1 s1 s1\"; stdin when absent");
  in_->add_option("--kinks", kinks, "curls per strand")->delimiter(',');

  int degree = 4;
  std::string object, weight;
  auto* di = app.add_subcommand("dims", "symmetric power, weight space and End dimensions");
  add_common(di, cd);
  di->add_option("--degree", degree, "largest degree for sym_dim")->check(CLI::Range(0, 12));
  di->add_option("--object", object, "object such as \"u1 d1\"");
  di->add_option("--weight", weight, "weight such as 2,0");

  int kmax = 6;
  auto* ka = app.add_subcommand("kappa", "circle values in kappa mode");
  add_common(ka, ck);
  ka->add_option("--k", kmax, "largest label")->check(CLI::Range(1, 20));

  std::vector<std::string> argv_s{"qweb"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_s) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : ParseError;
  }

  try {
    if (*ev) return do_eval(ce, diagram, in, out);
    if (*ve) return do_verify(cv, suite, id, bc, screen_only, out);
    if (*in_) return do_invariant(ci, braid, kinks, in, out);
    if (*di) return do_dims(cd, degree, object, weight, out);
    if (*ka) return do_kappa(ck, kmax, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Mismatch: return ParseError;
      case ErrorKind::Cap: return CapExceeded;
      default: return Failure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}

}  // namespace qweb::cli
