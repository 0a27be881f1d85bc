#include "shakekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "shakekit/complexity.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/io.hpp"
#include "shakekit/verify.hpp"

namespace shakekit::cli {

using io::json;

double tolerance_from_env() {
  const char* raw = std::getenv("SHAKEKIT_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (*end != '\0' || !(tol > 0) || !std::isfinite(tol)) {
    throw InputError(std::string("SHAKEKIT_TOL must be a positive number, got '") + raw + "'");
  }
  return tol;
}

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::set<std::string> split_names(const std::string& s) {
  std::set<std::string> names;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (!part.empty()) names.insert(part);
  }
  return names;
}

std::vector<long long> split_ints(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw InputError("'" + part + "' is not an integer");
    }
  }
  return out;
}

json root_json(const UnitCirclePoint& w) {
  if (w.is_rational()) return json{{"k", w.rational().k}, {"m", w.rational().m}};
  return json{{"theta", w.theta()}};
}

std::string perturbation_hint(const UnitCirclePoint& w, double tol) {
  const double step = std::max(1e-6, std::sqrt(tol));
  std::ostringstream s;
  s << std::setprecision(12) << "try --theta " << w.theta() + step << " or --theta " << w.theta() - step;
  return s.str();
}

struct Context {
  double tol = kDefaultTolerance;
  std::ostream& out;
};

int cmd_alexander(const Context& ctx, const std::string& file) {
  const auto a = io::seifert_from_json(io::load_json(file));
  const LaurentPoly delta = alexander(a);
  json coeffs = json::array();
  for (const auto& [e, c] : delta.terms()) {
    coeffs.push_back({e, c.fits_slong_p() ? json(c.get_si()) : json(c.get_str())});
  }
  emit(ctx.out, json{{"dim", a.dim()}, {"alexander", delta.to_string()}, {"coefficients", coeffs}});
  return 0;
}

int cmd_signature(const Context& ctx, const std::string& goeritz, const std::string& seifert) {
  if (goeritz.empty() == seifert.empty()) throw InputError("give exactly one of --goeritz or --seifert");
  if (!goeritz.empty()) {
    const auto gd = io::goeritz_from_json(io::load_json(goeritz));
    emit(ctx.out, json{{"source", "goeritz"},
                       {"signature", classical_signature_goeritz(gd)},
                       {"goeritz_signature", signature(gd.g)},
                       {"eta", gd.correction_term()}});
  } else {
    const auto a = io::seifert_from_json(io::load_json(seifert));
    emit(ctx.out, json{{"source", "seifert"},
                       {"signature", classical_signature_seifert(a)},
                       {"inertia", io::to_json(inertia_symmetric_exact(a.symmetrized()))}});
  }
  return 0;
}

int cmd_lt(const Context& ctx, const std::string& file, const std::string& root, std::optional<double> theta) {
  if (root.empty() == !theta.has_value()) throw InputError("give exactly one of --root or --theta");
  const auto a = io::seifert_from_json(io::load_json(file));
  const UnitCirclePoint w = theta ? UnitCirclePoint::angle(*theta) : UnitCirclePoint::parse(root);
  try {
    const Inertia in = inertia_hermitian_at_root(a.matrix(), w, ctx.tol);
    emit(ctx.out, json{{"root", root_json(w)},
                       {"signature", in.signature()},
                       {"inertia", io::to_json(in)},
                       {"tolerance", ctx.tol}});
  } catch (const NearSingular& e) {
    throw NearSingular(std::string(e.what()) + "; " + perturbation_hint(w, ctx.tol));
  }
  return 0;
}

int cmd_goeritz(const Context& ctx, const std::string& file, const std::string& twists) {
  const auto gd = io::goeritz_from_json(io::load_json(file));
  json j{{"form", io::to_json(gd)}, {"signature", classical_signature_goeritz(gd)}};
  if (!twists.empty()) {
    const auto l = split_ints(twists);
    const auto g2 = add_two_twists(gd, l);
    j["two_twists"] = json{{"l", l},
                           {"form", io::to_json(g2)},
                           {"signature", classical_signature_goeritz(g2)},
                           {"stable", verify_two_twist_stability(gd, l)}};
  }
  emit(ctx.out, j);
  return 0;
}

int cmd_normalize(const Context& ctx, const std::string& expr, const std::string& wrapping) {
  const auto p = patterns::parse_pattern(expr, split_names(wrapping));
  emit(ctx.out, json{{"input", p.to_string()}, {"normal_form", patterns::normalize(p).to_string()}});
  return 0;
}

int cmd_eval(const Context& ctx, const std::string& expr, const std::string& wrapping, const std::string& assign) {
  const auto spec = io::assignment_from_json(io::load_json(assign), ctx.tol);
  auto names = spec.wrapping_one;
  names.merge(split_names(wrapping));
  const auto p = patterns::parse_pattern(expr, names);
  emit(ctx.out, json{{"input", p.to_string()},
                     {"normal_form", patterns::normalize(p).to_string()},
                     {"value", patterns::eval_invariant(p, spec.assignment)}});
  return 0;
}

int cmd_retrace(const Context& ctx, const std::string& q, const std::string& wrapping, long long n, long long c) {
  const auto term = patterns::retrace_term(patterns::parse_pattern(q, split_names(wrapping)), n, c);
  emit(ctx.out, json{{"q", q}, {"n", n}, {"c", c}, {"term", term.to_string()},
                     {"normal_form", patterns::normalize(term).to_string()}});
  return 0;
}

int cmd_certify(const Context& ctx, long long n, long long c, int max_order) {
  emit(ctx.out, io::to_json(certify_complexity(n, c, max_order, ctx.tol)));
  return 0;
}

int cmd_verify(const Context& ctx, bool as_json, const std::string& a1_fixture) {
  verify::Options opts;
  opts.tol = ctx.tol;
  if (!a1_fixture.empty()) opts.q_seifert = io::seifert_from_json(io::load_json(a1_fixture));
  const auto results = verify::run_all(opts);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (as_json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    emit(ctx.out, json{{"passed", all}, {"checks", rows}});
  } else {
    for (const auto& r : results) {
      ctx.out << std::setw(2) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ["
              << r.detail << "]\n";
    }
    ctx.out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"shakekit: exact knot invariants, pattern calculus and complexity certificates", "shakekit"};
  app.require_subcommand(1);

  std::string file, goeritz, seifert, root, twists, wrapping, assign, q = "P_1", a1_fixture;
  std::string expr;
  std::optional<double> theta;
  long long n = 0, c = 1;
  int max_order = 60;
  bool as_json = false;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix");
  alex->add_option("file", file, "Seifert matrix JSON")->required();

  auto* sig = app.add_subcommand("signature", "classical signature");
  sig->add_option("--goeritz", goeritz, "Goeritz form or band presentation JSON");
  sig->add_option("--seifert", seifert, "Seifert matrix JSON");

  auto* lt = app.add_subcommand("lt", "Levine-Tristram signature at a root of unity");
  lt->add_option("file", file, "Seifert matrix JSON")->required();
  lt->add_option("--root", root, "root of unity k/m, meaning exp(2 pi i k/m)");
  lt->add_option("--theta", theta, "angle in radians");

  auto* gz = app.add_subcommand("goeritz", "Goeritz form, correction term and signature");
  gz->add_option("file", file, "Goeritz form or band presentation JSON")->required();
  gz->add_option("--two-twists", twists, "comma-separated algebraic band counts l");

  auto* pat = app.add_subcommand("pattern", "pattern calculus");
  pat->require_subcommand(1);
  auto* norm = pat->add_subcommand("normalize", "normal form of a pattern term");
  norm->add_option("expr", expr, "pattern term")->required();
  norm->add_option("--wrapping-one", wrapping, "comma-separated wrapping-number-one atoms");
  auto* ev = pat->add_subcommand("eval", "evaluate an invariant on a pattern term");
  ev->add_option("expr", expr, "pattern term")->required();
  ev->add_option("--assign", assign, "atom assignment JSON")->required();
  ev->add_option("--wrapping-one", wrapping, "comma-separated wrapping-number-one atoms");
  auto* rt = pat->add_subcommand("retrace", "the term (bar(Q*)_n)^c o Q^c");
  rt->add_option("--q", q, "base pattern Q")->capture_default_str();
  rt->add_option("--framing", n, "framing n")->required();
  rt->add_option("--complexity", c, "complexity c")->required();
  rt->add_option("--wrapping-one", wrapping, "comma-separated wrapping-number-one atoms");

  auto* cert = app.add_subcommand("certify", "complexity lower-bound certificate");
  cert->add_option("--framing", n, "framing n, non-zero")->required();
  cert->add_option("--complexity", c, "complexity c >= 1")->required();
  cert->add_option("--max-order", max_order, "largest prime order searched")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run every reproduction check");
  ver->add_flag("--json", as_json, "machine-readable report");
  ver->add_option("--a1-fixture", a1_fixture, "replace the 4x4 Seifert form of Q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Context ctx{tolerance_from_env(), out};
    if (alex->parsed()) return cmd_alexander(ctx, file);
    if (sig->parsed()) return cmd_signature(ctx, goeritz, seifert);
    if (lt->parsed()) return cmd_lt(ctx, file, root, theta);
    if (gz->parsed()) return cmd_goeritz(ctx, file, twists);
    if (norm->parsed()) return cmd_normalize(ctx, expr, wrapping);
    if (ev->parsed()) return cmd_eval(ctx, expr, wrapping, assign);
    if (rt->parsed()) return cmd_retrace(ctx, q, wrapping, n, c);
    if (cert->parsed()) return cmd_certify(ctx, n, c, max_order);
    if (ver->parsed()) return cmd_verify(ctx, as_json, a1_fixture);
    err << "error: no command\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shakekit::cli
