#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "realspec/compare.hpp"
#include "realspec/curvette.hpp"
#include "realspec/errors.hpp"
#include "realspec/example_data.hpp"
#include "realspec/regions.hpp"
#include "realspec/roots.hpp"
#include "realspec/separating.hpp"
#include "realspec/serialize.hpp"
#include "realspec/surface2d.hpp"
#include "realspec/syzygy.hpp"
#include "realspec/tetra.hpp"

namespace realspec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

// Inline JSON or a file holding it.
Json load_json(const std::string& arg) {
  if (looks_like_json(arg)) return parse_json_text(arg, "<inline>");
  return parse_json_text(read_file(arg), arg);
}

SemiCurvette load_curvette(const std::string& arg) {
  if (arg.rfind("example:", 0) == 0) {
    const GroupVec bc = GroupVec::parse(arg.substr(8));
    if (bc.rank() != 2) throw ParseError("example curvette needs two constants b,c");
    return example_curvette(bc[0], bc[1]);
  }
  return curvette_from_json(load_json(arg));
}

Poly load_poly(const std::string& arg, std::size_t n) {
  if (looks_like_json(arg)) return poly_from_json(load_json(arg), n);
  if (std::filesystem::exists(arg)) return poly_from_json(load_json(arg), n);
  return Poly::parse(arg, n);
}

std::vector<Poly> load_poly_list(const std::string& arg, std::size_t n) {
  std::vector<Poly> out;
  if (looks_like_json(arg) || std::filesystem::exists(arg)) {
    const Json j = load_json(arg);
    if (!j.is_array()) throw ParseError("polynomial list must be a JSON array");
    for (const auto& p : j) out.push_back(poly_from_json(p, n));
    return out;
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(Poly::parse(item, n));
  return out;
}

std::vector<BinomialRoot> load_roots(const std::string& arg) {
  const Json j = load_json(arg);
  if (!j.is_array()) throw ParseError("roots must be a JSON array");
  std::vector<BinomialRoot> out;
  for (const auto& r : j) out.push_back(root_from_json(r));
  return out;
}

// "3,4,5" for rank 1 or "0,3;0,4;0,5" for higher rank.
Weights parse_weights(const std::string& text) {
  Weights w;
  if (text.find(';') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) w.push_back(GroupVec::parse(item));
  } else {
    const GroupVec all = GroupVec::parse(text);
    for (const auto& c : all.coords()) w.push_back(GroupVec({c}));
  }
  return w;
}

std::vector<Rat> parse_rats(const std::string& text) { return GroupVec::parse(text).coords(); }

Json val_json(const Val& v) { return v.is_inf() ? Json("inf") : to_json(v.get()); }

Curvette2 curvette2_from_json(const Json& j) {
  const auto k = j.at("k").get<std::size_t>();
  const long den = j.contains("denominator") ? j.at("denominator").get<long>() : 1;
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != 2) throw ParseError("plane curvette needs two entries");
  return Curvette2(series_from_json(entries[0], k), series_from_json(entries[1], k),
                   sign_char_from_json(j.at("sign_char"), den));
}

Json to_json(const Curvette2& c) {
  Json j = {{"n", 2}, {"k", c.rank()}, {"sign_char", to_json(c.sc)}, {"entries", {to_json(c.x), to_json(c.y)}}};
  if (c.sc.denominator() != 1) j["denominator"] = c.sc.denominator();
  return j;
}

Json to_json(const BaryPoint& p) { return {to_json(p.u), to_json(p.v), to_json(p.w), to_json(p.t)}; }

BaryPoint bary_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("barycentric point needs four coordinates");
  return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3])};
}

Json to_json(const PhiPoint& p) { return {to_json(p.a[0]), to_json(p.a[1]), to_json(p.a[2]), to_json(p.a[3])}; }

PhiPoint parse_phi(const std::string& text) {
  const auto v = parse_rats(text);
  if (v.size() != 4) throw ParseError("point needs four coordinates");
  return {{v[0], v[1], v[2], v[3]}};
}

CoeffExpansion parse_expansion(const std::string& text) { return {parse_rats(text)}; }

Json to_json(const CoeffExpansion& e) {
  Json j = Json::array();
  for (const auto& c : e.c) j.push_back(to_json(c));
  return j;
}

Json to_json(const UpperBound& u) {
  return {{"value", to_json(u.value)},
          {"element", u.certificate.element.str()},
          {"value_alpha", val_json(u.certificate.value_alpha)},
          {"value_beta", val_json(u.certificate.value_beta)},
          {"sign_alpha", u.certificate.sign_alpha},
          {"sign_beta", u.certificate.sign_beta}};
}

Json to_json(const SyzygyCertificate& c) {
  Json omegas = Json::array();
  Json roots = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    omegas.push_back({{"text", c.omegas[i].str()}, {"terms", to_json(c.omegas[i])}});
    roots.push_back(to_json(c.roots[i]));
  }
  return {{"mu", c.mu},
          {"omegas", omegas},
          {"roots", roots},
          {"flipped", c.flipped},
          {"clearing_monomial", c.clearing_monomial},
          {"removed_factor", c.removed_factor},
          {"depth", c.depth},
          {"degenerate", c.degenerate},
          {"input_hash", c.input_hash}};
}

Json to_json(const SearchReport& r, bool timing) {
  Json j = {{"products", r.products},
            {"pairs", r.pairs},
            {"pairs_pruned", r.pairs_pruned},
            {"candidates", r.candidates},
            {"result", r.best ? "FoundBelowBound" : "NoneBelowBound"}};
  if (r.best) j["best"] = to_json(*r.best);
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const TetraSolution& s) {
  return {{"interval", {to_json(s.lo), to_json(s.hi)}},
          {"lambda", to_json(s.lambda)},
          {"D", to_json(s.d)},
          {"bprime_lambda", to_json(s.bprime_lambda)},
          {"bprime", to_json(s.bprime)},
          {"bprime_feasible", s.bprime_feasible},
          {"witness_lambda", to_json(s.witness_lambda)}};
}

Json to_json(const CheckReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"sample", x.sample}, {"reason", x.reason}});
  return {{"samples", r.samples}, {"relevant", r.relevant}, {"skipped", r.skipped}, {"violations", v}};
}

Json to_json(const SampleReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"sample", x.sample}, {"form", x.form + 1}, {"reason", x.reason}});
  return {{"samples", r.samples}, {"members", r.members}, {"violations", v}};
}

// Accumulates one command's report.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json checks = Json::array();
  Json violations = Json::array();

  void input(const std::string& name, const std::string& value) {
    inputs[name] = {{"value", value}, {"hash", fnv1a_hex(value)}};
  }
  void check(const std::string& name, bool passed) {
    checks.push_back({{"name", name}, {"passed", passed}});
    if (!passed) violations.push_back(name);
  }
  [[nodiscard]] bool failed() const { return !violations.empty(); }
};

struct Options {
  std::string out;
  bool timing = false;
  // Shared inputs.
  std::string curvette, alpha, beta, poly, basis, bound, weights, roots, mu, system, kind, epsilon, point, in;
  std::string first, second, form, from, to, alpha_bc = "1,3", beta_bc = "2,5";
  std::vector<std::string> candidates;
  int degree = 4;
  int order = 3;
  long class_bound = 50;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 100;
  bool example_data = false;
  bool corrupt = false;
  std::string resolution = "1/1000";
};

// Region inputs: built-in worked example or {n, roots, forms} JSON.
struct RegionInputs {
  RootSystem sys;
  std::vector<StandardForm> forms;
  SemiCurvette alpha, beta;
};

RegionInputs region_inputs(const Options& o) {
  if (o.example_data) {
    return {example_system(), example_forms(),
            o.alpha.empty() ? example_curvette(1, 3) : load_curvette(o.alpha),
            o.beta.empty() ? example_curvette(2, 5) : load_curvette(o.beta)};
  }
  if (o.system.empty() || o.alpha.empty() || o.beta.empty()) {
    throw ParseError("region commands need --example or --system, --alpha and --beta");
  }
  const Json j = load_json(o.system);
  std::vector<BinomialRoot> roots;
  for (const auto& r : j.at("roots")) roots.push_back(root_from_json(r));
  std::vector<StandardForm> forms;
  for (const auto& f : j.at("forms")) forms.push_back(standard_form_from_json(f));
  return {RootSystem(j.at("n").get<std::size_t>(), roots), forms, load_curvette(o.alpha), load_curvette(o.beta)};
}

Region build_kind(const std::string& kind, const RegionInputs& in, const Options& o, Json* roles = nullptr) {
  if (kind == "c") return build_C(in.forms, in.sys, in.alpha);
  if (kind == "cprime") return build_Cprime(in.forms, in.sys, in.alpha);
  if (kind == "d") {
    const auto& r = in.sys.roots();
    if (r.size() != 3) throw PreconditionError("the eliminated region needs three roots");
    const SyzygyCertificate syz = build_syzygy(r[0], r[1], r[2], in.alpha.variable_values());
    std::optional<Rat> eps;
    if (!o.epsilon.empty()) eps = Rat::parse(o.epsilon);
    DRegion d = build_D(in.forms, in.sys, syz, in.alpha, in.beta, eps);
    if (roles) {
      *roles = {{"eliminated", in.sys.name(d.roles.eliminated)},
                {"larger", in.sys.name(d.roles.larger)},
                {"smaller", in.sys.name(d.roles.smaller)},
                {"epsilon", to_json(d.roles.epsilon)},
                {"ratio_alpha", to_json(d.roles.ratio_alpha)},
                {"ratio_beta", to_json(d.roles.ratio_beta)},
                {"tie_flagged", d.roles.tie_flagged}};
    }
    return d.region;
  }
  throw ParseError("region kind must be c, cprime or d (got '" + kind + "')");
}

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) throw ParseError("this command samples and needs --seed");
  return *o.seed;
}

// Worked example, section by section; stops at the first failed check.
void run_example(const Options& o, Report& rep) {
  const GroupVec abc = GroupVec::parse(o.alpha_bc);
  const GroupVec bbc = GroupVec::parse(o.beta_bc);
  if (abc.rank() != 2 || bbc.rank() != 2) throw ParseError("constants must be given as b,c");
  rep.input("alpha_bc", o.alpha_bc);
  rep.input("beta_bc", o.beta_bc);
  rep.input("seed", std::to_string(o.seed.value_or(1)));
  const SemiCurvette a = example_curvette(abc[0], abc[1]);
  const SemiCurvette b = example_curvette(bbc[0], bbc[1]);
  const bool degenerate = a == b;
  rep.outputs["degenerate"] = degenerate;
  Json sections = Json::array();
  bool aborted = false;

  auto section = [&](const std::string& name, const std::function<bool(Json&)>& body) {
    if (aborted) return;
    const auto t0 = Clock::now();
    Json s = {{"name", name}};
    bool ok = false;
    try {
      ok = body(s);
    } catch (const Error& e) {
      s["error"] = e.what();
      ok = false;
    }
    if (!s.contains("status")) s["status"] = ok ? "PASS" : "FAIL";
    if (o.timing) s["elapsed_ms"] = ms_since(t0);
    sections.push_back(s);
    if (!ok) {
      aborted = true;
      rep.outputs["failed_check"] = name;
    }
    rep.check(name, ok);
  };

  const auto f = example_polys();
  GroupVec mu_alpha({Rat(1), Rat(8)});

  section("leading terms of f1, f2, f3 with exact tails", [&](Json& s) {
    bool ok = true;
    Json pts = Json::array();
    for (const auto& [bc, d] : {std::pair{abc, &a}, std::pair{bbc, &b}}) {
      const Rat& bb = bc[0];
      const Rat& cc = bc[1];
      const std::array<GenSeries, 3> expected = {
          GenSeries::from_terms(2, {{GroupVec({1, 4}), cc - Rat(2) * bb}, {GroupVec({2, 0}), -bb * bb}}),
          GenSeries::from_terms(2, {{GroupVec({1, 5}), -(cc + bb)}, {GroupVec({2, 1}), -bb * cc}}),
          GenSeries::from_terms(2, {{GroupVec({1, 6}), bb - Rat(2) * cc}, {GroupVec({2, 2}), -cc * cc}})};
      Json vals = Json::array();
      for (std::size_t i = 0; i < 3; ++i) {
        const GenSeries got = evaluate(f[i], *d);
        const bool match = got == expected[i];
        // The leading term must be the (1, 4 + i) term itself.
        const bool leading = !got.empty() && got.leading_exp() == GroupVec({Rat(1), Rat(4 + static_cast<long>(i))});
        ok = ok && match && leading;
        vals.push_back({{"f", "f" + std::to_string(i + 1)}, {"series", got.str()}, {"matches", match && leading}});
      }
      pts.push_back({{"b", bb.str()}, {"c", cc.str()}, {"values", vals}});
    }
    s["points"] = pts;
    return ok;
  });

  section("f1, f2, f3 do not change sign", [&](Json& s) {
    bool ok = true;
    Json signs = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      const int sa = sign_at(f[i], a);
      const int sb = sign_at(f[i], b);
      const bool change = changes_sign(f[i], a, b);
      ok = ok && !change;
      signs.push_back({{"f", "f" + std::to_string(i + 1)}, {"sign_alpha", sa}, {"sign_beta", sb}, {"changes", change}});
    }
    s["signs"] = signs;
    return ok;
  });

  section("separating value (1,8)", [&](Json& s) {
    if (degenerate) {
      s["status"] = "SKIPPED";
      s["reason"] = "alpha equals beta; nothing changes sign";
      return true;
    }
    // y*f1 + s*x*f2 changes sign when s lies strictly between the two
    // cancellation points of its leading coefficient.
    auto cancel = [](const GroupVec& bc) { return (bc[1] - Rat(2) * bc[0]) / (bc[1] + bc[0]); };
    const Rat sa = cancel(abc);
    const Rat sb = cancel(bbc);
    if (sa == sb) throw PreconditionError("y*f1 + s*x*f2 changes sign for no s");
    const Rat lo = std::min(sa, sb);
    const Rat hi = std::max(sa, sb);
    const Rat sc = (Rat(1, 5) > lo && Rat(1, 5) < hi) ? Rat(1, 5) : (lo + hi) / Rat(2);
    const Poly element = Poly::var(3, 1) * f[0] + sc * Poly::var(3, 0) * f[1];
    const UpperBound ub = mu_upper_bound({element}, a, b);
    s["certificate"] = to_json(ub);
    s["revalidated"] = revalidate(ub.certificate, a, b);
    mu_alpha = ub.value;
    const SearchReport sr = exhaustive_min_search({example_basis(), o.degree, ub.value}, a, b);
    s["search_degree"] = o.degree;
    s["search"] = to_json(sr, o.timing);
    return ub.value == GroupVec({Rat(1), Rat(8)}) && s["revalidated"].get<bool>() && !sr.best;
  });

  const auto roots = example_roots();

  section("roots of weights (3,4,5)", [&](Json& s) {
    const auto cls = classify_roots(parse_weights("3,4,5"));
    Json list = Json::array();
    bool ok = cls.size() == 3;
    for (const auto& cr : cls) {
      const Poly p = cr.root.poly();
      const bool known = std::any_of(f.begin(), f.end(), [&](const Poly& g) { return g == p || g == -p; });
      ok = ok && known;
      list.push_back({{"root", p.str()}, {"shape", to_string(cr.shape)}, {"matches_example", known}});
    }
    s["roots"] = list;
    return ok;
  });

  section("syzygy z*f1 - y*f2 + x*f3 = 0", [&](Json& s) {
    const SyzygyCertificate c = build_syzygy(roots[0], roots[1], roots[2], parse_weights("3,4,5"));
    const CertificateCheck chk = check_certificate(c, parse_weights("3,4,5"));
    s["certificate"] = to_json(c);
    s["zero_expansion"] = chk.zero_expansion;
    s["quasi_homogeneous"] = chk.quasi_homogeneous;
    s["sigma_nonzero"] = chk.sigma_nonzero;
    const bool expected = c.omegas[0] == Poly::var(3, 2) && c.omegas[1] == -Poly::var(3, 1) &&
                          c.omegas[2] == Poly::var(3, 0);
    s["omega_is_z_-y_x"] = expected;
    return chk.ok() && expected;
  });

  section("comparability of the three roots", [&](Json& s) {
    const TrichotomyReport tr = trichotomy_check(roots[0], roots[1], roots[2], a, b);
    s["outcome"] = to_string(tr.outcome);
    Json vs = Json::array();
    for (const auto& v : tr.verdicts) vs.push_back(to_json(v));
    s["verdicts"] = vs;
    if (tr.outcome == Trichotomy::Violation) return false;
    if (tr.outcome == Trichotomy::AllIncomparable) {
      const bool half = half_mu_check(roots, a, b, mu_alpha);
      s["half_mu"] = half;
      return half;
    }
    return true;
  });

  section("value region contains both points and keeps signs", [&](Json& s) {
    const RootSystem sys = example_system();
    const auto forms = example_forms();
    const Region c = build_C(forms, sys, a);
    const Region cp = build_Cprime(forms, sys, a);
    const bool in_c = member(c, sys, a) && member(c, sys, b);
    const bool in_cp = member(cp, sys, a) && member(cp, sys, b);
    const std::uint64_t seed = o.seed.value_or(1);
    const SampleReport sr = sign_constancy_sample(c, forms, sys, a, seed, o.samples);
    const SampleReport ctl = sign_constancy_sample(corrupted_region(c), forms, sys, a, seed, o.samples);
    s["contains_alpha_beta"] = in_c;
    s["prime_contains_alpha_beta"] = in_cp;
    s["sample"] = to_json(sr);
    s["negative_control_violations"] = ctl.violations.size();
    return in_c && in_cp && sr.violations.empty() && !ctl.violations.empty();
  });

  rep.outputs["sections"] = sections;
  rep.outputs["status"] = aborted ? "ABORT" : "PASS";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "write the report to a file");
  sub->add_flag("--timing", o.timing, "include wall-clock times in the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on curvettes, approximate roots and witness regions", "realspec"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--out", o.out, "write the report to a file");
  app.add_flag("--timing", o.timing, "include wall-clock times in the report");

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial on a curvette");
  auto* value = app.add_subcommand("value", "value of a polynomial on a curvette");
  auto* sign = app.add_subcommand("sign", "sign of a polynomial on one or two curvettes");
  for (auto* s : {eval, value, sign}) {
    s->add_option("--curvette,-c", o.curvette, "curvette (JSON, file or example:b,c)")->required();
    s->add_option("--poly,-p", o.poly, "polynomial (expression, JSON or file)")->required();
    add_common(s, o);
  }
  sign->add_option("--beta", o.beta, "second curvette");

  auto* sep = app.add_subcommand("separating", "upper bound and exhaustive search for the separating value");
  sep->add_option("--alpha", o.alpha)->required();
  sep->add_option("--beta", o.beta)->required();
  sep->add_option("--basis", o.basis, "polynomials separated by ';', a JSON list or a file");
  sep->add_option("--deg", o.degree, "multiplier degree bound");
  sep->add_option("--bound", o.bound, "value bound such as 1,8");
  sep->add_option("--candidate", o.candidates, "sign-changing candidate (repeatable)");
  add_common(sep, o);

  auto* roots = app.add_subcommand("roots", "binomial roots");
  roots->require_subcommand(1, 1);
  auto* classify = roots->add_subcommand("classify", "roots of a weight vector");
  classify->add_option("--weights,-w", o.weights, "3,4,5 or 0,3;0,4;0,5")->required();
  classify->add_option("--bound", o.class_bound, "exponent search bound");
  auto* normalize_cmd = roots->add_subcommand("normalize", "value and initial coefficient of Q'");
  normalize_cmd->add_option("--roots", o.roots, "JSON list of roots")->required();
  normalize_cmd->add_option("--curvette,-c", o.curvette)->required();
  for (auto* s : {classify, normalize_cmd}) add_common(s, o);

  auto* syz = app.add_subcommand("syzygy", "syzygy certificate of three roots");
  syz->add_option("--roots", o.roots, "JSON list of three roots");
  syz->add_option("--weights,-w", o.weights);
  syz->add_flag("--example", o.example_data, "use the worked example");
  add_common(syz, o);

  auto* cmp = app.add_subcommand("compare", "comparability of roots at two curvettes");
  cmp->add_option("--alpha", o.alpha)->required();
  cmp->add_option("--beta", o.beta)->required();
  cmp->add_option("--roots", o.roots, "JSON list of two or three roots")->required();
  cmp->add_option("--mu", o.mu, "separating value at alpha, enables the half-value check");
  add_common(cmp, o);

  auto* region = app.add_subcommand("region", "witness regions");
  region->require_subcommand(1, 1);
  std::map<std::string, CLI::App*> region_cmds;
  for (const char* name : {"build-c", "build-cprime", "build-d", "member", "sample"}) {
    auto* s = region->add_subcommand(name);
    s->add_flag("--example", o.example_data, "use the worked example");
    s->add_option("--system", o.system, "{n, roots, forms} JSON or file");
    s->add_option("--alpha", o.alpha);
    s->add_option("--beta", o.beta);
    add_common(s, o);
    region_cmds[name] = s;
  }
  region_cmds["build-d"]->add_option("--epsilon", o.epsilon);
  for (const char* name : {"member", "sample"}) {
    region_cmds[name]->add_option("--kind", o.kind, "c, cprime or d")->required();
    region_cmds[name]->add_option("--epsilon", o.epsilon);
  }
  region_cmds["member"]->add_option("--curvette,-c", o.curvette)->required();
  region_cmds["sample"]->add_option("--seed", o.seed);
  region_cmds["sample"]->add_option("--count", o.samples);
  region_cmds["sample"]->add_flag("--corrupt", o.corrupt, "drop the x^2y^2 < Q4 constraint (example only)");

  auto* tetra = app.add_subcommand("tetra", "diagonal feasibility and the value map");
  tetra->require_subcommand(1, 1);
  auto* tsolve = tetra->add_subcommand("solve");
  auto* toracle = tetra->add_subcommand("oracle");
  for (auto* s : {tsolve, toracle}) s->add_option("--in", o.in, "instance JSON or file")->required();
  toracle->add_option("--resolution", o.resolution);
  auto* pcheck = tetra->add_subcommand("phi-check");
  auto* pwit = tetra->add_subcommand("phi-witness");
  for (auto* s : {pcheck, pwit}) s->add_option("--point", o.point, "a1,a2,a3,a4")->required();
  pwit->add_option("--weights,-w", o.weights)->default_val("3,4,5");
  auto* tseg = tetra->add_subcommand("segment", "crossing of a segment with a hyperplane");
  tseg->add_option("--from", o.from)->required();
  tseg->add_option("--to", o.to)->required();
  tseg->add_option("--form", o.form, "c1,c2,c3,c4,c0 for c.x + c0 = 0")->required();
  for (auto* s : {tsolve, toracle, pcheck, pwit, tseg}) add_common(s, o);

  auto* surf = app.add_subcommand("surface2d", "plane curvettes and expansions");
  surf->require_subcommand(1, 1);
  auto* sblow = surf->add_subcommand("blowup");
  auto* sslope = surf->add_subcommand("slope");
  for (auto* s : {sblow, sslope}) s->add_option("--curvette,-c", o.curvette)->required();
  auto* sexp = surf->add_subcommand("expand");
  sexp->add_option("--poly,-p", o.poly, "polynomial in x, y")->required();
  sexp->add_option("--order,-n", o.order);
  auto* sprec = surf->add_subcommand("prec");
  auto* s35 = surf->add_subcommand("check-35");
  auto* s36 = surf->add_subcommand("check-36");
  auto* s37 = surf->add_subcommand("check-37");
  for (auto* s : {sprec, s35, s36, s37}) s->add_option("--first", o.first, "c1,c2,...")->required();
  for (auto* s : {sprec, s35}) s->add_option("--second", o.second)->required();
  for (auto* s : {s36, s37}) s->add_option("--last", o.second)->required();
  s36->add_option("--alpha", o.alpha)->required();
  s36->add_option("--beta", o.beta)->required();
  for (auto* s : {s35, s37}) {
    s->add_option("--seed", o.seed);
    s->add_option("--samples", o.samples);
  }
  for (auto* s : {sblow, sslope, sexp, sprec, s35, s36, s37}) add_common(s, o);

  auto* example = app.add_subcommand("example", "reproduce the worked example end to end");
  example->add_option("--alpha-bc", o.alpha_bc, "constants b,c of the first curvette");
  example->add_option("--beta-bc", o.beta_bc, "constants b,c of the second curvette");
  example->add_option("--seed", o.seed, "sampling seed (default 1)");
  example->add_option("--samples", o.samples);
  example->add_option("--search-degree", o.degree);
  add_common(example, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Report rep;
  const auto t0 = Clock::now();
  try {
    auto* sub = app.get_subcommands().front();
    rep.command = sub->get_name();
    if (!sub->get_subcommands().empty()) rep.command += " " + sub->get_subcommands().front()->get_name();
    const std::string& cmd = rep.command;

    if (cmd == "eval" || cmd == "value" || cmd == "sign") {
      rep.input("curvette", o.curvette);
      rep.input("poly", o.poly);
      const SemiCurvette c = load_curvette(o.curvette);
      const Poly p = load_poly(o.poly, c.nvars());
      const GenSeries s = evaluate(p, c);
      if (cmd == "eval") {
        rep.outputs["series"] = to_json(s);
        rep.outputs["text"] = s.str();
      } else if (cmd == "value") {
        rep.outputs["value"] = val_json(s.valuation());
      } else {
        rep.outputs["sign"] = series_sign(s, c.sign_char());
        if (!o.beta.empty()) {
          rep.input("beta", o.beta);
          const SemiCurvette b = load_curvette(o.beta);
          rep.outputs["sign_beta"] = sign_at(p, b);
          rep.outputs["changes_sign"] = changes_sign(p, c, b);
        }
      }
    } else if (cmd == "separating") {
      rep.input("alpha", o.alpha);
      rep.input("beta", o.beta);
      const SemiCurvette a = load_curvette(o.alpha);
      const SemiCurvette b = load_curvette(o.beta);
      std::optional<GroupVec> bound;
      if (!o.candidates.empty()) {
        std::vector<Poly> cs;
        for (const auto& c : o.candidates) {
          rep.input("candidate:" + c, c);
          cs.push_back(load_poly(c, a.nvars()));
        }
        const UpperBound ub = mu_upper_bound(cs, a, b);
        rep.outputs["upper_bound"] = to_json(ub);
        bound = ub.value;
      }
      if (!o.bound.empty()) bound = GroupVec::parse(o.bound);
      if (!o.basis.empty()) {
        if (!bound) throw ParseError("the search needs --bound or --candidate");
        rep.input("basis", o.basis);
        rep.input("deg", std::to_string(o.degree));
        const SearchReport sr = exhaustive_min_search({load_poly_list(o.basis, a.nvars()), o.degree, *bound}, a, b);
        rep.outputs["search"] = to_json(sr, o.timing);
      }
    } else if (cmd == "roots classify") {
      rep.input("weights", o.weights);
      Json list = Json::array();
      for (const auto& cr : classify_roots(parse_weights(o.weights), o.class_bound)) {
        Json j = to_json(cr.root);
        j["text"] = cr.root.str();
        j["shape"] = to_string(cr.shape);
        list.push_back(j);
      }
      rep.outputs["roots"] = list;
    } else if (cmd == "roots normalize") {
      rep.input("roots", o.roots);
      rep.input("curvette", o.curvette);
      const SemiCurvette c = load_curvette(o.curvette);
      Json list = Json::array();
      for (const auto& q : load_roots(o.roots)) {
        list.push_back({{"root", q.str()},
                        {"value", to_json(normalized_value(q, c))},
                        {"initial", to_json(normalized_initial(q, c))}});
      }
      rep.outputs["normalized"] = list;
    } else if (cmd == "syzygy") {
      std::vector<BinomialRoot> rs;
      Weights w;
      if (o.example_data) {
        rs = example_roots();
        w = o.weights.empty() ? parse_weights("3,4,5") : parse_weights(o.weights);
      } else {
        if (o.roots.empty() || o.weights.empty()) throw ParseError("syzygy needs --roots and --weights or --example");
        rs = load_roots(o.roots);
        w = parse_weights(o.weights);
      }
      if (rs.size() != 3) throw ParseError("syzygy needs exactly three roots");
      rep.input("roots", o.example_data ? "example" : o.roots);
      rep.input("weights", o.weights);
      const SyzygyCertificate c = build_syzygy(rs[0], rs[1], rs[2], w);
      const CertificateCheck chk = check_certificate(c, w);
      rep.outputs["certificate"] = to_json(c);
      rep.check("expansion is zero", chk.zero_expansion);
      rep.check("cofactor terms quasi-homogeneous", chk.quasi_homogeneous);
      rep.check("monomial images of cofactors nonzero", chk.sigma_nonzero);
    } else if (cmd == "compare") {
      rep.input("alpha", o.alpha);
      rep.input("beta", o.beta);
      rep.input("roots", o.roots);
      const SemiCurvette a = load_curvette(o.alpha);
      const SemiCurvette b = load_curvette(o.beta);
      const auto rs = load_roots(o.roots);
      if (rs.size() == 2) {
        rep.outputs["verdict"] = to_json(compare_roots(rs[0], rs[1], a, b));
      } else if (rs.size() == 3) {
        const TrichotomyReport tr = trichotomy_check(rs[0], rs[1], rs[2], a, b);
        Json vs = Json::array();
        for (const auto& v : tr.verdicts) vs.push_back(to_json(v));
        rep.outputs["verdicts"] = vs;
        rep.outputs["trichotomy"] = to_string(tr.outcome);
        rep.check("trichotomy holds", tr.outcome != Trichotomy::Violation);
        if (!o.mu.empty() && tr.outcome == Trichotomy::AllIncomparable) {
          rep.input("mu", o.mu);
          rep.check("two roots exceed half the separating value", half_mu_check(rs, a, b, GroupVec::parse(o.mu)));
        }
      } else {
        throw ParseError("compare needs two or three roots");
      }
    } else if (cmd.rfind("region ", 0) == 0) {
      const std::string what = cmd.substr(7);
      rep.input("system", o.example_data ? "example" : o.system);
      rep.input("alpha", o.alpha);
      rep.input("beta", o.beta);
      const RegionInputs in = region_inputs(o);
      if (what == "build-c" || what == "build-cprime" || what == "build-d") {
        Json roles;
        const std::string kind = what == "build-c" ? "c" : (what == "build-cprime" ? "cprime" : "d");
        const Region r = build_kind(kind, in, o, &roles);
        rep.outputs["region"] = to_json(r, in.sys);
        if (kind == "d") rep.outputs["roles"] = roles;
        rep.check("region contains alpha", member(r, in.sys, in.alpha));
        rep.check("region contains beta", member(r, in.sys, in.beta));
      } else if (what == "member") {
        rep.input("curvette", o.curvette);
        const Region r = build_kind(o.kind, in, o);
        const SemiCurvette d = load_curvette(o.curvette);
        Json failing = Json::array();
        for (const auto& c : r.constraints) {
          if (!satisfies(c, in.sys, d)) failing.push_back({{"provenance", c.provenance}, {"text", describe(c, in.sys)}});
        }
        rep.outputs["member"] = failing.empty();
        rep.outputs["failing_constraints"] = failing;
      } else {
        const std::uint64_t seed = need_seed(o);
        rep.input("seed", std::to_string(seed));
        rep.input("kind", o.kind);
        Region r = build_kind(o.kind, in, o);
        if (o.corrupt) {
          if (!o.example_data) throw ParseError("--corrupt applies to the worked example only");
          r = corrupted_region(r);
        }
        const SampleReport sr = sign_constancy_sample(r, in.forms, in.sys, in.alpha, seed, o.samples);
        rep.outputs["sample"] = to_json(sr);
        rep.check("signs constant on sampled members", sr.violations.empty());
      }
    } else if (cmd == "tetra solve" || cmd == "tetra oracle") {
      rep.input("in", o.in);
      const Json j = load_json(o.in);
      const BaryPoint A = bary_from_json(j.at("A"));
      const BaryPoint B = bary_from_json(j.at("B"));
      std::vector<AxisConstraint> cs;
      for (const auto& c : j.value("constraints", Json::array())) {
        cs.push_back({parse_axis(c.at("axis").get<std::string>()), rat_from_json(c.at("k")),
                      parse_sense(c.value("sense", std::string(">=")))});
      }
      if (cmd == "tetra solve") {
        const TetraSolution s = tetra_solve(A, B, cs);
        rep.outputs = to_json(s);
        rep.check("D satisfies every constraint",
                  std::all_of(cs.begin(), cs.end(), [&](const AxisConstraint& c) { return c.holds(s.d); }));
        rep.outputs["bprime_check"] = s.bprime_feasible ? "feasible" : "infeasible";
      } else {
        const Rat res = j.contains("resolution") && o.resolution == "1/1000" ? rat_from_json(j.at("resolution"))
                                                                             : Rat::parse(o.resolution);
        const auto grid = grid_oracle(A, B, cs, res);
        rep.outputs["resolution"] = to_json(res);
        rep.outputs["count"] = grid.size();
        if (!grid.empty()) rep.outputs["range"] = {to_json(grid.front()), to_json(grid.back())};
      }
    } else if (cmd == "tetra phi-check") {
      rep.input("point", o.point);
      rep.outputs["in_image"] = phi_image_check(parse_phi(o.point));
    } else if (cmd == "tetra phi-witness") {
      rep.input("point", o.point);
      rep.input("weights", o.weights);
      const PhiWitness w = phi_witness(parse_phi(o.point), parse_weights(o.weights));
      rep.outputs["curvette"] = to_json(w.curvette);
      rep.outputs["measured"] = to_json(phi_measure(w.curvette, w.roots));
      Json rs = Json::array();
      for (const auto& q : w.roots) rs.push_back(q.str());
      rep.outputs["roots"] = rs;
    } else if (cmd == "tetra segment") {
      rep.input("from", o.from);
      rep.input("to", o.to);
      rep.input("form", o.form);
      const auto h = parse_rats(o.form);
      if (h.size() != 5) throw ParseError("form needs five coefficients c1,c2,c3,c4,c0");
      const auto p = segment_hyperplane(parse_phi(o.from), parse_phi(o.to), {{h[0], h[1], h[2], h[3]}, h[4]});
      rep.outputs["point"] = p ? to_json(*p) : Json(nullptr);
    } else if (cmd == "surface2d blowup" || cmd == "surface2d slope") {
      rep.input("curvette", o.curvette);
      const Curvette2 c = curvette2_from_json(load_json(o.curvette));
      if (cmd == "surface2d blowup") {
        const Blowup bu = blowup(c);
        rep.outputs["chart"] = to_string(bu.chart);
        rep.outputs["curvette"] = to_json(bu.curvette);
        rep.outputs["text"] = bu.curvette.str();
      } else {
        rep.outputs["slope"] = slope_str(slope(c));
      }
    } else if (cmd == "surface2d expand") {
      rep.input("poly", o.poly);
      rep.input("order", std::to_string(o.order));
      const Poly g = load_poly(o.poly, 2);
      const CoeffExpansion e = newton_expand(g, o.order);
      rep.outputs["coefficients"] = to_json(e);
      const auto r = residual_order(g, e);
      rep.outputs["residual_order"] = r ? Json(*r) : Json("inf");
      rep.check("residual order exceeds the truncation", !r || *r > o.order);
    } else if (cmd == "surface2d prec") {
      rep.input("first", o.first);
      rep.input("second", o.second);
      rep.outputs["order"] = to_string(prec_compare(parse_expansion(o.first), parse_expansion(o.second)));
    } else if (cmd == "surface2d check-35" || cmd == "surface2d check-37") {
      const std::uint64_t seed = need_seed(o);
      rep.input("first", o.first);
      rep.input("second", o.second);
      rep.input("seed", std::to_string(seed));
      const CoeffExpansion e1 = parse_expansion(o.first);
      const CoeffExpansion e2 = parse_expansion(o.second);
      const CheckReport r =
          cmd == "surface2d check-35" ? lemma35_check(e1, e2, seed, o.samples) : corollary37_check(e1, e2, seed, o.samples);
      rep.outputs["report"] = to_json(r);
      rep.check(cmd == "surface2d check-35" ? "positivity propagates along the coefficient order"
                                            : "x' positive on the sampled quadrant",
                r.violations.empty());
    } else if (cmd == "surface2d check-36") {
      rep.input("first", o.first);
      rep.input("last", o.second);
      rep.input("alpha", o.alpha);
      rep.input("beta", o.beta);
      const Lemma36Report r = lemma36_check(parse_expansion(o.first), parse_expansion(o.second),
                                            curvette2_from_json(load_json(o.alpha)),
                                            curvette2_from_json(load_json(o.beta)));
      rep.outputs["holds"] = r.holds;
      rep.outputs["violations"] = r.violations;
      rep.check("first coefficient of the first form exceeds that of the last", r.holds && r.violations.empty());
    } else if (cmd == "example") {
      run_example(o, rep);
    } else {
      throw ParseError("unknown command '" + cmd + "'");
    }
  } catch (const Violation& e) {
    rep.violations.push_back(std::string("VIOLATION: ") + e.what());
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Json report = {{"command", rep.command},
                 {"inputs", rep.inputs},
                 {"outputs", rep.outputs},
                 {"checks", rep.checks},
                 {"violations", rep.violations},
                 {"status", rep.failed() ? "VIOLATION" : "OK"}};
  if (o.timing) report["elapsed_ms"] = ms_since(t0);
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return 1;
    }
    f << text;
  }
  return rep.failed() ? 2 : 0;
}

}  // namespace realspec
