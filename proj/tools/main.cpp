#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "cliffroot/closed_forms.hpp"
#include "cliffroot/eigen.hpp"
#include "cliffroot/equations.hpp"
#include "cliffroot/parser.hpp"
#include "cliffroot/rep.hpp"
#include "cliffroot/spectral.hpp"

using namespace cliffroot;
using nlohmann::json;

namespace {

constexpr const char *kVersion = "1.0.0";

enum class Method { both, spectral, closed_form };

struct Common {
  std::string algebra = "3,0";
  bool json_out = false;
  SpectralOptions opt;
  Method method = Method::both;
};

// Exit code 3: a result failed its own verification.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain-text display only: coefficients below 1e-12 relative to the largest are shown as 0.
std::string chopped(const Multivector &a, int precision) {
  if (a.size() == 0)
    return format_mv(a, precision);
  Multivector c = a;
  const double cut = 1e-12 * std::max(1.0, a.norm_max());
  for (Blade b = 0; b < static_cast<Blade>(c.size()); ++b)
    if (std::abs(c[b]) < cut)
      c[b] = 0.0;
  return format_mv(c, precision);
}

Signature parse_algebra(const std::string &text) {
  int p = 0, q = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> p >> comma >> q) || comma != ',' || !in.eof())
    throw CLI::ValidationError("--algebra", "expected p,q");
  return Signature::make(p, q);
}

json algebra_json(Signature sig) { return {{"p", sig.p}, {"q", sig.q}}; }

json diagnostics_json(const Diagnostics &d) {
  json eig = json::array();
  for (cd v : d.eigenvalues)
    eig.push_back({v.real(), v.imag()});
  json out = {{"eigenvalues", eig},
              {"t_condition", d.t_condition},
              {"degenerate", d.degenerate},
              {"defective", d.defective},
              {"note", d.note}};
  if (d.perturbation)
    out["perturbation"] = {{"blade", blade_name(d.perturbation->blade)}, {"eps", d.perturbation->eps}};
  else
    out["perturbation"] = nullptr;
  return out;
}

json roots_json(const RootReport &rep) {
  json roots = json::array();
  for (const auto &e : rep.entries) {
    json r = {{"pattern", e.label}, {"status", to_string(e.status)}, {"max_imag", e.max_imag}};
    r["mv"] = e.root.size() ? json(format_mv(e.root)) : json(nullptr);
    r["residual"] = std::isnan(e.residual) ? json(nullptr) : json(e.residual);
    if (e.representative)
      r["representative"] = true;
    roots.push_back(r);
  }
  return roots;
}

json report_json(const RootReport &rep) {
  Signature sig = rep.input.signature();
  return {{"version", kVersion},
          {"algebra", algebra_json(sig)},
          {"input", format_mv(rep.input)},
          {"method", rep.method},
          {"roots", roots_json(rep)},
          {"diagnostics", diagnostics_json(rep.diagnostics)}};
}

std::string negate_label(const std::string &label) {
  std::string out = label;
  for (char &c : out)
    c = c == '+' ? '-' : c == '-' ? '+' : c;
  return out;
}

void print_report(const RootReport &rep) {
  std::cout << rep.input.signature().name() << "  sqrt(" << chopped(rep.input, 10) << ")\n";
  std::cout << "method: " << rep.method << "\n";
  if (!rep.diagnostics.note.empty())
    std::cout << "note: " << rep.diagnostics.note << "\n";
  std::vector<bool> shown(rep.entries.size(), false);
  int accepted = 0, complex = 0, residual = 0, skipped = 0;
  for (size_t i = 0; i < rep.entries.size(); ++i) {
    const auto &e = rep.entries[i];
    switch (e.status) {
    case RootStatus::accepted: ++accepted; break;
    case RootStatus::rejected_complex: ++complex; break;
    case RootStatus::rejected_residual: ++residual; break;
    case RootStatus::degenerate_skipped: ++skipped; break;
    }
    if (e.status != RootStatus::accepted || shown[i])
      continue;
    shown[i] = true;
    std::string partner_label = negate_label(e.label);
    bool paired = false;
    for (size_t j = i + 1; j < rep.entries.size(); ++j)
      if (!shown[j] && rep.entries[j].status == RootStatus::accepted && rep.entries[j].label == partner_label &&
          mv_approx_eq(rep.entries[j].root, -e.root, 1e-9)) {
        shown[j] = paired = true;
        break;
      }
    std::printf("  %s%s %s(%s)  residual %.2e%s\n", e.label.c_str(),
                paired ? ("," + partner_label).c_str() : "", paired ? "+-" : "", chopped(e.root, 10).c_str(),
                e.residual, e.representative ? "  [representative]" : "");
  }
  std::printf("%d root(s) accepted; rejected: %d complex, %d residual; %d degenerate/duplicate\n", accepted, complex,
              residual, skipped);
  if (accepted == 0)
    std::cout << "no real spectral square roots exist\n";
}

void check_roots(const RootReport &rep, double tol) {
  double scale = std::max(1.0, rep.input.norm_max());
  for (const auto &e : rep.entries)
    if (e.status == RootStatus::accepted && (e.root * e.root - rep.input).norm_max() > tol * scale)
      throw VerificationFailure("root " + e.label + " fails re-squaring");
}

std::vector<Multivector> comparable(const RootReport &rep) {
  std::vector<Multivector> out;
  for (const auto &e : rep.entries)
    if (e.status == RootStatus::accepted && !e.representative)
      out.push_back(e.root);
  return out;
}

bool contained(const std::vector<Multivector> &sub, const std::vector<Multivector> &all, double tol) {
  for (const auto &x : sub)
    if (std::none_of(all.begin(), all.end(), [&](const Multivector &y) { return mv_approx_eq(x, y, tol); }))
      return false;
  return true;
}

// Closed-form and spectral results, cross-checked when both are requested.
RootReport compute_roots(const Multivector &a, const Common &c, std::string &cross) {
  std::optional<RootReport> closed;
  if (c.method != Method::spectral)
    closed = closed_form_any(a, c.opt);
  if (c.method == Method::closed_form) {
    if (!closed)
      throw CLI::ValidationError("--closed-form", "no closed form for this algebra/shape");
    cross = "not requested";
    return *closed;
  }
  RootReport spectral = spectral_sqrt(a, c.opt);
  if (c.method == Method::spectral) {
    cross = "not requested";
    return spectral;
  }
  if (!closed) {
    cross = "closed form unavailable";
    return spectral;
  }
  auto cf = comparable(*closed);
  auto sp = spectral.accepted();
  bool continuum = cf.size() != closed->accepted().size();
  bool ok = continuum ? contained(cf, sp, c.opt.root_tol) : same_root_set(cf, sp, c.opt.root_tol);
  if (!ok)
    throw VerificationFailure("closed-form and spectral root sets disagree");
  cross = continuum ? "agree on basis-independent roots" : "agree";
  return spectral;
}

void emit_roots(const RootReport &rep, const Common &c, const std::string &cross) {
  check_roots(rep, c.opt.root_tol);
  if (c.json_out) {
    json j = report_json(rep);
    j["diagnostics"]["cross_check"] = cross;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(rep);
    std::cout << "cross-check: " << cross << "\n";
  }
}

void emit_value(const Common &c, Signature sig, const std::string &what, const Multivector &input,
                const Multivector &result) {
  if (c.json_out) {
    json j = {{"version", kVersion},
              {"algebra", algebra_json(sig)},
              {"input", format_mv(input)},
              {"method", what},
              {"result", format_mv(result)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << sig.name() << "  " << what << "(" << chopped(input, 10) << ") = " << chopped(result, 12) << "\n";
  }
}

json solutions_json(const SolutionReport &rep) {
  json sols = json::array();
  for (const auto &s : rep.solutions)
    sols.push_back({{"pattern", s.label}, {"x", format_mv(s.x)}, {"residual", s.residual}});
  return sols;
}

void emit_solutions(const SolutionReport &rep, const Common &c, const std::vector<Multivector> &inputs) {
  if (!rep.rejected.empty())
    throw VerificationFailure("a solution failed re-substitution");
  Signature sig = rep.radicand.signature();
  if (c.json_out) {
    json in = json::array();
    for (const auto &m : inputs)
      in.push_back(format_mv(m));
    json j = {{"version", kVersion},     {"algebra", algebra_json(sig)},
              {"input", in},             {"equation", rep.equation},
              {"radicand", format_mv(rep.radicand)},
              {"method", rep.roots.method}, {"solutions", solutions_json(rep)},
              {"diagnostics", diagnostics_json(rep.roots.diagnostics)}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << sig.name() << "  " << rep.equation << "\n";
  std::cout << "radicand: " << chopped(rep.radicand, 10) << "  (method " << rep.roots.method << ")\n";
  for (const auto &s : rep.solutions)
    std::printf("  %s X = %s  residual %.2e\n", s.label.c_str(), chopped(s.x, 12).c_str(), s.residual);
  std::printf("%zu solution(s)\n", rep.solutions.size());
}

std::string symbolic_matrix_text(const SymbolicMatrix &m, bool quaternionic) { return to_string(m, quaternionic); }

void rep_table(Signature sig, const Common &c) {
  const Representation &rep = Representation::get(sig);
  auto table = basis_rep_table(sig);
  if (c.json_out) {
    json gens = json::array();
    for (size_t k = 0; k < table.size(); ++k)
      gens.push_back({{"blade", blade_name(Blade{1} << k)}, {"matrix", symbolic_matrix_text(table[k], rep.quaternionic())}});
    json j = {{"version", kVersion},
              {"algebra", algebra_json(sig)},
              {"class", rep.bott().name()},
              {"complex_dim", rep.dim()},
              {"generators", gens}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << sig.name() << "  class " << rep.bott().name() << ", complex dimension " << rep.dim() << "\n";
  for (size_t k = 0; k < table.size(); ++k)
    std::cout << "  " << blade_name(Blade{1} << k) << " -> " << symbolic_matrix_text(table[k], rep.quaternionic()) << "\n";
}

bool verify_algebra(Signature sig, const Common &c) {
  const Representation &rep = Representation::get(sig);
  const auto &g = rep.generators();
  int n = sig.n(), m = rep.dim();
  double worst_sq = 0, worst_anti = 0, worst_hom = 0, worst_trip = 0;
  for (int i = 0; i < n; ++i) {
    double s = i < sig.p ? 1.0 : -1.0;
    worst_sq = std::max(worst_sq, (g[i] * g[i] - CMatrix::identity(m) * cd(s)).norm_max());
    for (int j = i + 1; j < n; ++j)
      worst_anti = std::max(worst_anti, (g[i] * g[j] + g[j] * g[i]).norm_max());
  }
  std::mt19937 rng(20240101u);
  std::uniform_real_distribution<double> u(-1, 1);
  auto random_mv = [&] {
    Multivector a(sig);
    for (Blade b = 0; b < static_cast<Blade>(sig.size()); ++b)
      a[b] = u(rng);
    return a;
  };
  for (int t = 0; t < 20; ++t) {
    Multivector a = random_mv(), b = random_mv();
    worst_hom = std::max(worst_hom, (mv_to_matrix(a * b).m - mv_to_matrix(a).m * mv_to_matrix(b).m).norm_max());
    worst_trip = std::max(worst_trip, (matrix_to_mv(mv_to_matrix(a).m, sig).mv - a).norm_max());
  }
  const double tol = 1e-12;
  struct Check {
    const char *name;
    double err;
  } checks[] = {{"generator squares", worst_sq},
                {"anticommutation", worst_anti},
                {"homomorphism rep(ab) = rep(a) rep(b)", worst_hom},
                {"round trip mv -> matrix -> mv", worst_trip}};
  bool ok = true;
  json list = json::array();
  for (const auto &ch : checks) {
    bool pass = ch.err <= tol * 100;
    ok = ok && pass;
    list.push_back({{"check", ch.name}, {"max_error", ch.err}, {"pass", pass}});
    if (!c.json_out)
      std::printf("%s %s (max error %.2e)\n", pass ? "PASS" : "FAIL", ch.name, ch.err);
  }
  if (c.json_out)
    std::cout << json({{"version", kVersion},
                       {"algebra", algebra_json(sig)},
                       {"class", rep.bott().name()},
                       {"checks", list},
                       {"pass", ok}})
                     .dump(2)
              << "\n";
  else
    std::cout << sig.name() << " class " << rep.bott().name() << ": " << (ok ? "all checks passed" : "FAILED") << "\n";
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral square roots of multivectors in Cl(p,q), p + q <= 6"};
  app.require_subcommand(1);
  Common c;
  std::string sign = "+";

  auto add_common = [&](CLI::App *sub, bool methods) {
    sub->add_option("--algebra", c.algebra, "signature p,q")->required();
    sub->add_flag("--json", c.json_out, "JSON output");
    sub->add_option("--tol", c.opt.root_tol, "root residual tolerance (relative)");
    sub->add_option("--imag-tol", c.opt.imag_tol, "discarded imaginary part tolerance");
    sub->add_option("--perturb-eps", c.opt.perturb_eps, "perturbation size for singular eigenbases");
    if (methods) {
      auto *g = sub->add_option_group("method");
      g->add_flag_callback("--closed-form", [&] { c.method = Method::closed_form; }, "closed-form formulas only");
      g->add_flag_callback("--spectral", [&] { c.method = Method::spectral; }, "spectral method only");
      g->add_flag_callback("--both", [&] { c.method = Method::both; }, "spectral, cross-checked against closed forms");
      g->require_option(0, 1);
    }
  };

  std::string mv_a, mv_b, mv_c;
  auto *sqrt_cmd = app.add_subcommand("sqrt", "all spectral square roots of a multivector");
  add_common(sqrt_cmd, true);
  sqrt_cmd->add_option("mv", mv_a, "multivector, e.g. \"1 + 2e12\"")->required();

  auto *m1_cmd = app.add_subcommand("sqrt-minus-one", "all square roots of -1");
  add_common(m1_cmd, true);

  auto *exp_cmd = app.add_subcommand("exp", "exponential of a multivector");
  add_common(exp_cmd, false);
  exp_cmd->add_option("mv", mv_a)->required();

  auto *inv_cmd = app.add_subcommand("inverse", "inverse of a multivector");
  add_common(inv_cmd, false);
  inv_cmd->add_option("mv", mv_a)->required();

  auto *quad_cmd = app.add_subcommand("solve-quadratic", "X^2 + A X + X A + B = 0");
  add_common(quad_cmd, false);
  quad_cmd->add_option("A", mv_a)->required();
  quad_cmd->add_option("B", mv_b)->required();

  auto *ric_cmd = app.add_subcommand("solve-riccati", "X A X + C X + X C = B with C central");
  add_common(ric_cmd, false);
  ric_cmd->add_option("A", mv_a)->required();
  ric_cmd->add_option("B", mv_b)->required();
  ric_cmd->add_option("C", mv_c)->required();
  ric_cmd->add_option("--sign", sign, "sign of the root: +, - or both")->check(CLI::IsMember({"+", "-", "both"}));

  auto *table_cmd = app.add_subcommand("rep-table", "generator matrices of the representation");
  add_common(table_cmd, false);

  auto *verify_cmd = app.add_subcommand("verify", "check the representation axioms");
  add_common(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Signature sig = parse_algebra(c.algebra);
    std::string cross;
    if (sqrt_cmd->parsed()) {
      Multivector a = parse_mv(mv_a, sig);
      emit_roots(compute_roots(a, c, cross), c, cross);
    } else if (m1_cmd->parsed()) {
      Multivector a = Multivector::scalar(sig, -1.0);
      emit_roots(compute_roots(a, c, cross), c, cross);
    } else if (exp_cmd->parsed()) {
      Multivector a = parse_mv(mv_a, sig);
      emit_value(c, sig, "exp", a, mv_exp(a, c.opt));
    } else if (inv_cmd->parsed()) {
      Multivector a = parse_mv(mv_a, sig);
      Multivector inv = mv_inverse(a);
      if (!mv_approx_eq(a * inv, Multivector::scalar(sig, 1.0), 1e-9))
        throw VerificationFailure("inverse fails A A^-1 = 1");
      emit_value(c, sig, "inverse", a, inv);
    } else if (quad_cmd->parsed()) {
      Multivector a = parse_mv(mv_a, sig), b = parse_mv(mv_b, sig);
      emit_solutions(solve_quadratic(a, b, c.opt), c, {a, b});
    } else if (ric_cmd->parsed()) {
      RiccatiProblem prob{parse_mv(mv_a, sig), parse_mv(mv_b, sig), parse_mv(mv_c, sig)};
      prob.sign = sign == "+" ? RiccatiProblem::Sign::plus
                  : sign == "-" ? RiccatiProblem::Sign::minus
                                : RiccatiProblem::Sign::both;
      emit_solutions(solve_riccati(prob, c.opt), c, {prob.a, prob.b, prob.c});
    } else if (table_cmd->parsed()) {
      rep_table(sig, c);
    } else if (verify_cmd->parsed()) {
      if (!verify_algebra(sig, c))
        return 3;
    }
  } catch (const VerificationFailure &e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
