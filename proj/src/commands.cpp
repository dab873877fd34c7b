#include "qfrob/commands.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace qfrob {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

[[noreturn]] void wrong_kind(std::string_view command, const Definition& def) {
  throw SchemaError(std::string(command) + " does not accept " + std::string(to_string(def.kind)) +
                    (def.pencil ? (*def.pencil == PencilType::metric ? " (metric)" : " (bracket)") : "") +
                    " definitions");
}

class Runner {
 public:
  Runner(Report& report, VariableNames names) : report_(report), names_(std::move(names)) {}

  void names(VariableNames n) { names_ = std::move(n); }
  const VariableNames& names() const { return names_; }

  // Times fn and appends its outcome.
  CheckOutcome check(const std::function<CheckOutcome()>& fn) {
    auto t0 = Clock::now();
    CheckOutcome out = fn();
    report_.checks.push_back(entry_from(out, names_, since(t0)));
    return out;
  }

  // Several outcomes produced by one call share its wall time.
  template <class Fn>
  auto group(Fn&& fn) {
    auto t0 = Clock::now();
    auto out = fn();
    last_seconds_ = since(t0);
    return out;
  }
  void add(const CheckOutcome& o, const std::string& name = {}) {
    ReportEntry e = entry_from(o, names_, last_seconds_);
    if (!name.empty()) e.check = name;
    report_.checks.push_back(std::move(e));
  }
  void add_verdict(std::string name, bool ok, std::string detail, double seconds = 0) {
    ReportEntry e;
    e.check = std::move(name);
    e.verdict = ok ? Verdict::pass : Verdict::fail;
    e.detail = std::move(detail);
    e.seconds = seconds;
    report_.checks.push_back(std::move(e));
  }
  void result(std::string key, std::string value) { report_.results.emplace_back(std::move(key), std::move(value)); }

  // Collapses a Poisson report into one entry: the first condition that
  // does not hold, or a pass.
  void add_poisson_summary(const std::string& name, const PoissonReport& p) {
    for (const auto& c : p.conditions)
      if (!c.holds()) {
        ReportEntry e = entry_from(c, names_, last_seconds_);
        e.check = name;
        e.detail = c.name + (e.detail.empty() ? "" : ": " + e.detail);
        report_.checks.push_back(std::move(e));
        return;
      }
    add_verdict(name, true, "", last_seconds_);
  }

 private:
  Report& report_;
  VariableNames names_;
  double last_seconds_ = 0;
};

VariableNames with_extra(std::size_t dim, std::initializer_list<std::string> extra) {
  VariableNames n = coordinate_names(dim);
  n.insert(n.end(), extra.begin(), extra.end());
  return n;
}

std::string index_key(const std::string& symbol, std::initializer_list<std::size_t> idx) {
  std::string s = symbol + "[";
  bool first = true;
  for (std::size_t i : idx) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "]";
}

void add_potentials(Runner& run, const PotentialFamily& H) {
  for (std::size_t i = 0; i < H.dim(); ++i) run.result(index_key("H", {i}), H[i].to_string(run.names()));
}

void poisson_checks(Runner& run, const BracketCoefficients& bc, const IdentityTestConfig& cfg) {
  auto residuals = run.group([&] { return poisson_residuals(bc); });
  for (std::size_t c = 0; c < 5; ++c)
    run.check([&] { return check_tensor("s" + std::to_string(c + 1), residuals[c], cfg); });
}

void bracket_pencil_checks(Runner& run, const BracketCoefficients& bc1, const BracketCoefficients& bc2,
                           const IdentityTestConfig& cfg) {
  auto p1 = run.group([&] { return check_poisson(bc1, cfg); });
  run.add_poisson_summary("first-poisson", p1);
  auto p2 = run.group([&] { return check_poisson(bc2, cfg); });
  run.add_poisson_summary("second-poisson", p2);
  if (!p1.is_poisson() || !p2.is_poisson()) {
    run.result("pencil", "skipped: both members must be Poisson");
    return;
  }
  auto pencil = run.group([&] { return check_bracket_pencil(bc1, bc2, cfg); });
  for (std::size_t c = 0; c < 5; ++c) run.add(pencil[c], "pencil-" + pencil[c].name);
}

void run_check_poisson(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  switch (def.kind) {
    case DefinitionKind::bracket:
      poisson_checks(run, def.bracket(), cfg);
      return;
    case DefinitionKind::metric: {
      Metric g = def.metric();
      Connection b = levi_civita(g);
      poisson_checks(run, BracketCoefficients(to_rational_functions(g.entries()), b, RationalFunction(def.constant("K"))),
                     cfg);
      return;
    }
    case DefinitionKind::potential_family:
      poisson_checks(run, build_canonical(def.family()), cfg);
      return;
    default:
      wrong_kind("check-poisson", def);
  }
}

void run_check_pencil(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind == DefinitionKind::pencil && def.pencil == PencilType::metric) {
    run.names(with_extra(def.dim, {"lambda1", "lambda2"}));
    auto rep = run.group([&] { return pencil_compatibility_check(def.metric_pencil(), cfg); });
    run.add(rep.connection_linearity);
    run.add(rep.curvature_affinity);
    return;
  }
  run.names(with_extra(def.dim, {"lambda"}));
  if (def.kind == DefinitionKind::pencil) {
    bracket_pencil_checks(run, def.bracket("g1", "b1", "K1"), def.bracket("g2", "b2", "K2"), cfg);
    return;
  }
  if (def.kind == DefinitionKind::potential_family) {
    PotentialFamily H = def.family();
    bracket_pencil_checks(run, build_canonical(H), BracketCoefficients::constant(H.flat()), cfg);
    return;
  }
  wrong_kind("check-pencil", def);
}

void run_check_curvature(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind != DefinitionKind::metric) wrong_kind("check-curvature", def);
  run.check([&] { return constant_curvature_check(def.metric(), def.constant("K"), cfg); });
}

void run_residuals(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind != DefinitionKind::potential_family) wrong_kind("residuals", def);
  PotentialFamily H = def.family();
  auto r1 = run.group([&] { return residual_ass1(H); });
  run.check([&] { return check_tensor("ass1", r1.components, cfg); });
  auto r2 = run.group([&] { return residual_ass2(H); });
  run.check([&] { return check_tensor("ass2", r2.components, cfg); });
}

void run_check_wdvv(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind != DefinitionKind::scalar_potential) wrong_kind("check-wdvv", def);
  ScalarPotential sp = def.scalar_potential();
  auto r = run.group([&] { return residual_wdvv(sp); });
  run.check([&] { return check_tensor("as1", r.as1.components, cfg); });
  run.check([&] { return check_tensor("as2", r.as2.components, cfg); });
  auto red = run.group([&] { return reduction_consistency(sp, cfg); });
  run.add(red.contraction1, "reduction-ass1");
  run.add(red.contraction2, "reduction-ass2");
  PotentialFamily H = sp.induced_family();
  add_potentials(run, H);
}

void form_checks(Runner& run, const FiniteAlgebra& alg, const BilinearForm& form, bool quasi, bool frobenius,
                 const IdentityTestConfig& cfg) {
  auto t0 = Clock::now();
  bool degenerate = determinant(form.entries()).is_zero();
  run.add_verdict("nondegenerate-form", !degenerate, degenerate ? "det(form) vanishes identically" : "", since(t0));
  if (degenerate) return;
  if (quasi) run.check([&] { return check_invariance(alg, form, InvarianceVariant::right, cfg); });
  if (frobenius) run.check([&] { return check_invariance(alg, form, InvarianceVariant::frobenius, cfg); });
}

void run_check_algebra(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind == DefinitionKind::potential_family) {
    PotentialFamily H = def.family();
    ParametricAlgebra A = run.group([&] { return algebra_at(H); });
    run.check([&] { return check_right_commutativity(A.algebra, cfg); });
    run.check([&] { return check_invariance(A.algebra, A.deformed, InvarianceVariant::right, cfg); });
    run.check([&] {
      CheckOutcome o = check_invariance(A.algebra, A.flat, InvarianceVariant::right, cfg);
      o.name = "flat-right-invariance";
      return o;
    });
    return;
  }
  if (def.kind != DefinitionKind::algebra) wrong_kind("check-algebra", def);

  FiniteAlgebra alg = def.algebra();
  std::optional<BilinearForm> form = def.form();
  const std::string& s = def.structure;
  const bool all = s == "all";
  if ((s == "quasi-frobenius" || s == "frobenius") && !form)
    throw SchemaError("structure '" + s + "' needs a form");

  std::size_t offset = 0;
  for (const auto& f : alg.mult.data()) offset = std::max(offset, f.variable_span());
  VariableNames names = coordinate_names(offset);
  for (std::size_t k = 0; k < def.dim; ++k) names.push_back("x" + std::to_string(k + 1));
  run.names(names);

  bool right_comm = true;
  if (all || s == "quasi-frobenius" || s == "novikov")
    right_comm = run.check([&] { return check_right_commutativity(alg, cfg); }).holds();
  if (all || s == "frobenius") {
    run.check([&] { return check_commutativity(alg, cfg); });
    run.check([&] { return check_associativity(alg, cfg); });
  }
  if (all || s == "novikov") run.check([&] { return check_left_symmetry(alg, cfg); });
  if (form) form_checks(run, alg, *form, all || s == "quasi-frobenius", all || s == "frobenius", cfg);
  if ((all || s == "novikov") && right_comm) {
    run.check([&] {
      CheckOutcome o = check_invariance(alg, deformed_form(alg, offset), InvarianceVariant::right, cfg);
      o.name = "deformed-right-invariance";
      return o;
    });
  }
}

void run_canonical(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  BracketCoefficients bc;
  FlatCoordinateData flat = def.flat();
  if (def.kind == DefinitionKind::potential_family) {
    bc = build_canonical(def.family());
    for (std::size_t i = 0; i < def.dim; ++i)
      for (std::size_t j = 0; j < def.dim; ++j)
        if (!bc.g(i, j).is_zero()) run.result(index_key("g", {i, j}), bc.g(i, j).to_string(run.names()));
    for (std::size_t i = 0; i < def.dim; ++i)
      for (std::size_t j = 0; j < def.dim; ++j)
        for (std::size_t k = 0; k < def.dim; ++k)
          if (!bc.b(i, j, k).is_zero()) run.result(index_key("b", {i, j, k}), bc.b(i, j, k).to_string(run.names()));
    run.result("K", bc.K.to_string(run.names()));
  } else if (def.kind == DefinitionKind::bracket) {
    bc = def.bracket();
  } else {
    wrong_kind("canonical", def);
  }
  auto t0 = Clock::now();
  CanonicalFormResult r = theorem1_form_check(bc, flat, cfg);
  run.add_verdict("canonical-form", r.canonical(), r.obstruction, since(t0));
  if (r.potentials) add_potentials(run, *r.potentials);
}

void run_local_member(Runner& run, const Definition& def, const IdentityTestConfig& cfg) {
  if (def.kind != DefinitionKind::pencil || def.pencil != PencilType::bracket) wrong_kind("local-member", def);
  BracketCoefficients b1 = def.bracket("g1", "b1", "K1"), b2 = def.bracket("g2", "b2", "K2");
  auto [l1, l2] = local_member(b1, b2);
  run.result("lambda1", l1.get_str());
  run.result("lambda2", l2.get_str());

  auto t0 = Clock::now();
  Rational tail = l1 * def.constant("K1") + l2 * def.constant("K2");
  run.add_verdict("local-tail", sgn(tail) == 0, sgn(tail) == 0 ? "" : "lambda1*K1 + lambda2*K2 = " + tail.get_str(),
                  since(t0));

  BracketCoefficients combo(b1.g.map([&](const RationalFunction& x) { return x * RationalFunction(l1); }),
                            b1.b.map([&](const RationalFunction& x) { return x * RationalFunction(l1); }),
                            RationalFunction(tail));
  for (std::size_t k = 0; k < combo.g.size(); ++k) combo.g.flat(k) += RationalFunction(l2) * b2.g.flat(k);
  for (std::size_t k = 0; k < combo.b.size(); ++k) combo.b.flat(k) += RationalFunction(l2) * b2.b.flat(k);
  auto p = run.group([&] { return check_poisson(combo, cfg); });
  run.add_poisson_summary("local-member-poisson", p);
}

using Handler = void (*)(Runner&, const Definition&, const IdentityTestConfig&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"check-poisson", run_check_poisson}, {"check-pencil", run_check_pencil},
      {"check-curvature", run_check_curvature}, {"residuals", run_residuals},
      {"check-wdvv", run_check_wdvv},         {"check-algebra", run_check_algebra},
      {"canonical", run_canonical},           {"local-member", run_local_member},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_command(std::string_view command, const Definition& def, const IdentityTestConfig& cfg) {
  for (const auto& [name, fn] : handlers()) {
    if (name != command) continue;
    Report report;
    report.command = name;
    report.input = def.name;
    report.config = cfg;
    Runner run(report, coordinate_names(def.dim));
    fn(run, def, cfg);
    return report;
  }
  throw SchemaError("unknown command '" + std::string(command) + "'");
}

}  // namespace qfrob
