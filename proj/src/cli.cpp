#include "gdet/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/laws.hpp"
#include "gdet/parse.hpp"
#include "gdet/report.hpp"
#include "gdet/search.hpp"
#include "gdet/verify/acceptance.hpp"
#include "gdet/witnesses.hpp"

namespace gdet::cli {

namespace {

enum class Format { text, json, csv };

struct GroupOpts {
  std::string family;
  std::size_t n = 0;

  bool given() const { return !family.empty(); }

  GroupSpec spec() const {
    if (family.empty()) throw UsageError("--group is required");
    if (n == 0) throw UsageError("--n must be a positive integer");
    switch (family_from_string(family)) {
      case Family::cyclic: return GroupSpec::cyclic(n);
      case Family::dihedral: return GroupSpec::dihedral(n);
      case Family::dicyclic: return GroupSpec::dicyclic(n);
    }
    throw UsageError("unknown family");
  }
};

struct Options {
  std::string format = "text";
  GroupOpts group;
  std::string element;
  bool check = false;
  // witness
  std::string kind;
  std::optional<std::uint64_t> p;
  std::optional<std::string> m;
  std::optional<unsigned> k, ell, t;
  std::optional<int> sign;
  std::optional<std::string> mu;
  std::uint64_t shift = 0;
  bool no_verify = false;
  // classify
  std::string set;
  std::string value;
  // search
  long bound = 1;
  std::optional<long> min;
  std::optional<std::string> cap;
  std::string mode = "min_nontrivial";
  std::optional<std::uint64_t> max_elements;
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> random;
  std::uint64_t seed = 1;
  bool no_prune = false;
  unsigned threads = 0;
  // selftest
  std::string criteria = "1-7";
};

Int parse_int(const std::string& s, const std::string& what) {
  Int v;
  const std::string body = !s.empty() && (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      v.set_str(s[0] == '+' ? body : s, 10) != 0) {
    throw UsageError(what + " must be an integer, got '" + s + "'");
  }
  return v;
}

std::vector<int> parse_criteria(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int a = std::stoi(part.substr(0, dash));
        const int b = std::stoi(part.substr(dash + 1));
        for (int i = a; i <= b; ++i) out.push_back(i);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad criteria list '" + s + "'");
    }
  }
  for (int id : out) verify::criterion_title(id);
  if (out.empty()) throw UsageError("empty criteria list");
  return out;
}

template <typename T>
T need(const std::optional<T>& v, const std::string& flag) {
  if (!v) throw UsageError(flag + " is required for this witness");
  return *v;
}

Witness build_witness(const Options& o) {
  const Check check = o.no_verify ? Check::skip : Check::verify;
  const std::string& kind = o.kind;
  if (kind == "trivial" || kind == "sixteen" || kind == "two_n_minus_one" || kind == "crude2") {
    return witness_basic(o.group.spec(), basic_kind_from_string(kind), check);
  }
  if (kind == "prime") return witness_prime(o.group.spec().n, need(o.p, "--p"), o.shift, check);
  if (kind == "coprime") return witness_coprime(o.group.spec().n, parse_int(need(o.m, "--m"), "--m"), check);
  if (kind == "q4p_two_powers") return witness_q4p_two_powers(need(o.p, "--p"), need(o.k, "--k"), check);
  if (kind == "q4p_p_cubed") return witness_q4p_p_cubed(need(o.p, "--p"), parse_int(need(o.m, "--m"), "--m"), check);
  if (kind == "q4p_p_powers") {
    return witness_q4p_p_powers(need(o.p, "--p"), need(o.ell, "--ell"), o.sign.value_or(1), check);
  }
  for (FrontierKind fk : {FrontierKind::half_p2plus1_2_5, FrontierKind::neg_2_5_p_2tplus4,
                          FrontierKind::neg_half_2_4_p3_mu, FrontierKind::p5_sum_of_squares, FrontierKind::p5_special}) {
    if (kind != to_string(fk)) continue;
    FrontierParams params;
    params.t = o.t.value_or(0);
    if (o.mu) params.mu = parse_int(*o.mu, "--mu");
    return witness_q4p_frontier(need(o.p, "--p"), fk, params, check);
  }
  const SharpnessKind sk = sharpness_kind_from_string(kind);
  SharpnessParams params;
  params.p = o.p.value_or(0);
  if (o.m) params.m = parse_int(*o.m, "--m");
  return witness_divisibility_sharpness(o.group.spec(), sk, params, check);
}

std::string verdict_text(const Verdict& v) {
  std::string s = to_string(v.status) + " " + v.code + "\n";
  if (!v.message.empty()) s += v.message + "\n";
  return s;
}

struct Result {
  Json json;
  std::string text;
  std::string csv;
  int exit = kExitOk;
};

Result cmd_det(const Options& o) {
  const GroupSpec g = o.group.spec();
  const RingElement a = parse_element(g, o.element);
  const Int v = det_exact(a);
  std::optional<Int> oracle;
  if (o.check) oracle = det_matrix_oracle(a);
  Result r{det_report(a, v, oracle), v.get_str() + "\n", {}, kExitOk};
  if (oracle) {
    if (*oracle != v) {
      throw VerificationError("det_exact gives " + v.get_str() + " but the matrix oracle gives " + oracle->get_str());
    }
    r.text += "check: matrix oracle agrees\n";
  }
  return r;
}

Result cmd_factor(const Options& o) {
  const GroupSpec g = o.group.spec();
  const RingElement a = parse_element(g, o.element);
  const FactoredDeterminant fd = det_factored(a);
  std::string text = fd.total.get_str() + "\n";
  for (const auto& [d, v] : fd.parts) text += "M_" + std::to_string(d) + " = " + v.get_str() + "\n";
  return {factor_report(a, fd), text, {}, kExitOk};
}

Result cmd_witness(const Options& o) {
  const Witness w = build_witness(o);
  std::string text = w.claimed.get_str() + "\n";
  text += "group: " + w.element.group().name() + "\n";
  text += "element: " + format_element(w.element) + "\n";
  text += "construction: " + w.anchor + "\n";
  for (const auto& [k, v] : w.params) text += k + " = " + v.get_str() + "\n";
  text += o.no_verify ? "not verified\n" : "verified with det_exact\n";
  return {witness_report(w, !o.no_verify), text, {}, kExitOk};
}

Result cmd_classify(const Options& o) {
  const Int v = parse_int(o.value, "--value");
  if (!o.set.empty()) {
    if (o.group.given()) throw UsageError("give either --set or --group, not both");
    const SetId set = set_from_string(o.set);
    const Verdict verdict = classify(set, o.p, v);
    Json subject;
    subject["set"] = to_string(set);
    if (o.p) subject["p"] = std::to_string(*o.p);
    return {classify_report(subject, v, verdict), verdict_text(verdict), {}, kExitOk};
  }
  const GroupSpec g = o.group.spec();
  const Verdict verdict = check_laws(g, v);
  Json subject;
  subject["group"] = to_json(g);
  return {classify_report(subject, v, verdict), verdict_text(verdict), {}, kExitOk};
}

Result cmd_lambda(const Options& o) {
  const GroupSpec g = o.group.spec();
  if (g.family != Family::dicyclic) throw UsageError("lambda is defined here for the dicyclic family");
  std::optional<LambdaVerification> lv;
  LambdaReport report;
  if (g.n >= 3 && g.n % 2 == 1) {
    lv = verify_lambda(g.n);
    report = lv->report;
  } else {
    report = lambda_formula(g);
  }
  std::string text = report.value.get_str() + "\n";
  text += report.exact ? "exact\n" : "upper bound\n";
  if (!report.note.empty()) text += report.note + "\n";
  if (lv) text += "witness: " + lv->witness.claimed.get_str() + " = det(" + format_element(lv->witness.element) + ")\n";
  for (const auto& s : report.certificate) text += "  " + s.value.get_str() + " Out " + s.code + "\n";
  return {lambda_report(report, lv ? &lv->witness : nullptr), text, {}, kExitOk};
}

Result cmd_search(const Options& o) {
  const GroupSpec g = o.group.spec();
  const SearchMode mode = search_mode_from_string(o.mode);
  SearchReport rep;
  if (mode == SearchMode::frontier) {
    if (g.family != Family::dicyclic) throw UsageError("frontier search runs in Q_{4p}: use --group dicyclic --n p");
    if (o.cap || o.random || o.no_prune || o.max_seconds) {
      throw UsageError("frontier search takes --bound, --min and --max-elements only");
    }
    rep = search_frontier(g.n, o.bound, o.max_elements, o.min.value_or(0));
  } else {
    SearchSpec s;
    s.group = g;
    s.coeff_bound = o.bound;
    s.coeff_min = o.min;
    if (o.cap) s.value_cap = parse_int(*o.cap, "--cap");
    s.mode = mode;
    s.max_elements = o.max_elements;
    s.max_seconds = o.max_seconds;
    s.random_samples = o.random;
    s.seed = o.seed;
    s.prune = !o.no_prune;
    s.threads = o.threads;
    rep = search_box(s);
  }
  std::string text;
  text += rep.found ? "best " + rep.best_value.get_str() + " at " + format_element(*rep.best_element) + "\n"
                    : "no nontrivial value found\n";
  text += "visited " + std::to_string(rep.elements_visited) + " elements (" + std::to_string(rep.elements_pruned) +
          " pruned), " + (rep.exhausted ? "box exhausted" : "box not exhausted") + "\n";
  for (const auto& e : rep.spectrum) {
    text += "  " + e.value.get_str() + " x" + std::to_string(e.multiplicity) + "  " + format_element(e.example) + "\n";
  }
  return {search_report(rep), text, spectrum_csv(rep), kExitOk};
}

Result cmd_selftest(const Options& o, std::ostream& out, Format fmt) {
  const std::vector<int> ids = parse_criteria(o.criteria);
  Result r;
  const auto results = verify::run_acceptance(ids, [&](const verify::CriterionResult& c) {
    if (fmt == Format::text) out << verify::format_result(c) << "\n" << std::flush;
  });
  r.json = report_header("selftest");
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass;
    arr.push_back({{"criterion", std::to_string(c.id)}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  r.json["pass"] = all;
  r.json["criteria"] = arr;
  r.text = all ? "selftest PASS\n" : "selftest FAIL\n";
  r.exit = all ? kExitOk : kExitVerification;
  return r;
}

void add_group(CLI::App* sub, Options& o, bool required) {
  auto* g = sub->add_option("--group", o.group.family, "cyclic, dihedral or dicyclic");
  auto* n = sub->add_option("--n", o.group.n, "group parameter n");
  if (required) {
    g->required();
    n->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer group determinants of cyclic, dihedral and dicyclic groups", "gdet"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto* det = app.add_subcommand("det", "determinant of an element");
  add_group(det, o, true);
  det->add_option("--element,-e", o.element, "element, e.g. \"1 - x + y*(1+x^3)\" or \"1,-1;0,1\"")->required();
  det->add_flag("--check", o.check, "cross-check with the matrix oracle");

  auto* factor = app.add_subcommand("factor", "determinant with its cyclotomic parts M_d");
  add_group(factor, o, true);
  factor->add_option("--element,-e", o.element, "element")->required();

  auto* witness = app.add_subcommand("witness", "build and verify a named construction");
  add_group(witness, o, false);
  witness->add_option("--kind", o.kind, "construction name")->required();
  witness->add_option("--p", o.p, "prime");
  witness->add_option("--m", o.m, "integer parameter m");
  witness->add_option("--k", o.k, "power of 2");
  witness->add_option("--ell", o.ell, "power of p");
  witness->add_option("--sign", o.sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
  witness->add_option("--t", o.t, "t for -2^5 p^(2t+4)");
  witness->add_option("--mu", o.mu, "mu for the (p^2+1)/2 2^4 p^3 family");
  witness->add_option("--shift", o.shift, "multiple of n added to every exponent (prime)");
  witness->add_flag("--no-verify", o.no_verify, "skip recomputation");

  auto* cls = app.add_subcommand("classify", "membership in a determinant set, or the laws for a group");
  add_group(cls, o, false);
  cls->add_option("--set", o.set, "Zp, Z2p, D2p, D4p, Q8, Q12 or Q4p");
  cls->add_option("--p", o.p, "prime parameter of the set");
  cls->add_option("--value", o.value, "integer")->required();

  auto* lambda = app.add_subcommand("lambda", "smallest nontrivial determinant of Q_{4n}");
  add_group(lambda, o, true);

  auto* search = app.add_subcommand("search", "box search over coefficient vectors");
  add_group(search, o, true);
  search->add_option("--bound,-b", o.bound, "coefficients up to b")->capture_default_str();
  search->add_option("--min", o.min, "smallest coefficient (default -b)");
  search->add_option("--cap", o.cap, "report only |value| <= cap");
  search->add_option("--mode", o.mode, "min_nontrivial, spectrum or frontier")->capture_default_str();
  search->add_option("--max-elements", o.max_elements, "element budget");
  search->add_option("--max-seconds", o.max_seconds, "time budget");
  search->add_option("--random", o.random, "sample this many random vectors");
  search->add_option("--seed", o.seed, "seed for --random")->capture_default_str();
  search->add_flag("--no-prune", o.no_prune, "evaluate every element");
  search->add_option("--threads", o.threads, "worker threads (default GDET_THREADS or all cores)");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--criteria", o.criteria, "e.g. 1-7 or 2,5")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Format fmt = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::text;
  try {
    if (fmt == Format::csv && !search->parsed()) throw UsageError("csv output is only for search spectra");
    Result r;
    if (det->parsed()) r = cmd_det(o);
    else if (factor->parsed()) r = cmd_factor(o);
    else if (witness->parsed()) r = cmd_witness(o);
    else if (cls->parsed()) r = cmd_classify(o);
    else if (lambda->parsed()) r = cmd_lambda(o);
    else if (search->parsed()) r = cmd_search(o);
    else r = cmd_selftest(o, out, fmt);
    switch (fmt) {
      case Format::text: out << r.text; break;
      case Format::csv: out << r.csv; break;
      case Format::json: {
        Json cmd = Json::array();
        for (const auto& a : args) cmd.push_back(a);
        r.json["command"] = cmd;
        out << dump(r.json);
        break;
      }
    }
    return r.exit;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gdet::cli
