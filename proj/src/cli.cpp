#include "catloc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "catloc/clustergen.hpp"
#include "catloc/expr.hpp"
#include "catloc/fincat.hpp"
#include "catloc/io.hpp"
#include "catloc/modcat.hpp"

namespace catloc {

using nlohmann::json;

namespace {

struct Budgets {
  std::uint64_t seed = 0x5eed;
  bool include_sums = true;
  std::size_t max_instances = 0;
  std::size_t retries = 24;
  std::size_t exhaustive_limit = 4096;
  std::size_t candidate_ceiling = 1u << 20;
  std::size_t max_aux_objects = 4096;
  std::size_t tries_per_object = 8;

  json to_json() const {
    return {{"seed", seed},
            {"include_sums", include_sums},
            {"max_instances", max_instances},
            {"retries", retries},
            {"exhaustive_limit", exhaustive_limit},
            {"candidate_ceiling", candidate_ceiling},
            {"max_aux_objects", max_aux_objects},
            {"tries_per_object", tries_per_object}};
  }
  ScanBudget scan() const { return ScanBudget{include_sums, max_instances}; }
  SearchOptions search() const {
    SearchOptions o;
    o.seed = seed;
    o.retries = retries;
    o.exhaustive_limit = exhaustive_limit;
    o.candidate_ceiling = candidate_ceiling;
    return o;
  }
  EquivalenceBudget equivalence() const {
    EquivalenceBudget b;
    b.seed = seed;
    b.max_aux_objects = max_aux_objects;
    b.tries_per_object = tries_per_object;
    return b;
  }
};

Budgets load_budgets() {
  Budgets b;
  const char* path = std::getenv("CATLOC_CONFIG");
  if (!path || !*path) return b;
  std::ifstream in(path);
  if (!in) throw DataError(std::string("cannot read config ") + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("config ") + path + ": " + e.what());
  }
  if (!j.is_object()) throw DataError("config must be a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& k = it.key();
      const auto& v = it.value();
      if (k == "seed") b.seed = v.get<std::uint64_t>();
      else if (k == "include_sums") b.include_sums = v.get<bool>();
      else if (k == "max_instances") b.max_instances = v.get<std::size_t>();
      else if (k == "retries") b.retries = v.get<std::size_t>();
      else if (k == "exhaustive_limit") b.exhaustive_limit = v.get<std::size_t>();
      else if (k == "candidate_ceiling") b.candidate_ceiling = v.get<std::size_t>();
      else if (k == "max_aux_objects") b.max_aux_objects = v.get<std::size_t>();
      else if (k == "tries_per_object") b.tries_per_object = v.get<std::size_t>();
      else throw DataError("unknown config key '" + k + "'");
    }
  } catch (const json::type_error& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  return b;
}

struct BudgetFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_instances, retries, exhaustive_limit, candidate_ceiling, max_aux_objects,
      tries_per_object;
  bool no_sums = false;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "Seed for sampled searches");
    app->add_option("--max-instances", max_instances, "Cap on scanned instances per check (0 = exhaustive)");
    app->add_flag("--no-sums", no_sums, "Scan basis morphisms only, without two-term sums");
    app->add_option("--retries", retries, "Random retries per cokernel search candidate");
    app->add_option("--exhaustive-limit", exhaustive_limit, "Largest map space enumerated exhaustively");
    app->add_option("--candidate-ceiling", candidate_ceiling, "Search-space ceiling before BoundsExceeded");
    app->add_option("--max-aux-objects", max_aux_objects, "Auxiliary objects tried when realising module maps");
    app->add_option("--tries-per-object", tries_per_object, "Random tries per auxiliary object");
  }
  Budgets apply(Budgets b) const {
    if (seed) b.seed = *seed;
    if (max_instances) b.max_instances = *max_instances;
    if (no_sums) b.include_sums = false;
    if (retries) b.retries = *retries;
    if (exhaustive_limit) b.exhaustive_limit = *exhaustive_limit;
    if (candidate_ceiling) b.candidate_ceiling = *candidate_ceiling;
    if (max_aux_objects) b.max_aux_objects = *max_aux_objects;
    if (tries_per_object) b.tries_per_object = *tries_per_object;
    return b;
  }
};

json names_of(const CategoryPresentation& P, const IndexSet& S) {
  json out = json::array();
  for (auto i : S) out.push_back(P.name(i));
  return out;
}

json clause(const std::string& name, const std::string& status) { return {{"name", name}, {"status", status}}; }

json clause_from(const std::string& name, const std::vector<const PropertyCheck*>& checks, bool truncated) {
  bool ok = true;
  json parts = json::array();
  for (const auto* c : checks) {
    ok = ok && c->ok();
    parts.push_back({{"check", c->name},
                     {"instances", c->instances},
                     {"failures", c->failures},
                     {"counterexamples", c->counterexamples}});
  }
  json j = clause(name, ok ? (truncated ? "bounded-pass" : "pass") : "fail");
  j["checks"] = parts;
  return j;
}

bool passing(const json& c) {
  const auto s = c["status"].get<std::string>();
  return s == "pass" || s == "bounded-pass" || s == "skipped" || s == "not-applicable";
}

void emit(const json& report, const std::string& report_path, std::ostream& out) {
  if (report_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(report_path);
  if (!f) throw DataError("cannot write report " + report_path);
  f << report.dump(2) << "\n";
  for (const auto& c : report["clauses"]) out << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
}

using Clock = std::chrono::steady_clock;

struct VerifyArgs {
  std::string category;
  std::string T, subcat, perp_of;
  std::string report;
  bool search = false;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, const Budgets& budgets, std::ostream& out) {
  const CategoryPresentation P = load_category(a.category);
  json report;
  report["command"] = "verify";
  report["category"] = a.category;
  report["budgets"] = budgets.to_json();
  json clauses = json::array();

  std::optional<Obj> T;
  IndexSet S;
  if (!a.T.empty()) {
    T = parse_object(P, a.T);
    report["T"] = to_string(P, *T);
  } else if (!a.subcat.empty()) {
    S = parse_index_set(P, a.subcat);
    report["subcategory"] = names_of(P, S);
  } else {
    if (!P.has_sigma()) throw MissingSuspension("--perp-of needs a suspension");
    const IndexSet U = parse_index_set(P, a.perp_of);
    S = perp(P, U, Side::kRight);
    report["perp_of"] = names_of(P, U);
    report["subcategory"] = names_of(P, S);
  }

  auto timed = [&](json c, Clock::time_point start) {
    if (a.timing)
      c["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    clauses.push_back(std::move(c));
  };
  const std::vector<std::string> later = {"preabelian", "integral", "fractions", "abelian", "equivalence"};
  auto skip_from = [&](std::size_t first, const std::string& status) {
    for (std::size_t k = first; k < later.size(); ++k) {
      if (later[k] == "equivalence" && !T) continue;
      clauses.push_back(clause(later[k], status));
    }
  };

  // rigidity
  auto t0 = Clock::now();
  if (T) {
    if (!P.has_sigma()) throw MissingSuspension("rigidity needs a suspension");
    const bool rigid = is_rigid(P, *T);
    json c = clause("rigidity", rigid ? "pass" : "not-rigid");
    c["cluster_tilting"] = rigid && is_cluster_tilting(P, *T);
    timed(c, t0);
    if (!rigid) {
      clauses.push_back(clause("quotient", "skipped"));
      skip_from(0, "skipped");
      report["clauses"] = clauses;
      emit(report, a.report, out);
      return kExitClauseFailure;
    }
  } else {
    clauses.push_back(clause("rigidity", "not-applicable"));
  }

  // quotient
  t0 = Clock::now();
  const QuotientCategory Q = T ? build_quotient(P, *T) : build_quotient_by(P, S);
  const auto& QP = Q.presentation;
  {
    ValidationReport v = validate_category(QP);
    json c = clause("quotient", v.ok() ? "pass" : "fail");
    c["x_t"] = names_of(P, Q.xt);
    c["nonzero_objects"] = names_of(QP, nonzero_indecomposables(QP));
    if (!v.ok()) c["violations"] = v.violations;
    timed(c, t0);
    if (!v.ok()) {
      skip_from(0, "skipped");
      report["clauses"] = clauses;
      emit(report, a.report, out);
      return kExitClauseFailure;
    }
  }

  // preabelian and integral
  t0 = Clock::now();
  const ScanBudget scan = budgets.scan();
  const PropertyReport props = scan_properties(QP, scan);
  timed(clause_from("preabelian", {&props.kernels, &props.cokernels}, false), t0);
  if (a.search) {
    t0 = Clock::now();
    PropertyCheck ks{"kernel search"}, cs{"cokernel search"};
    bool bounded = false;
    for (const auto& f : basis_morphisms(QP)) {
      for (int side = 0; side < 2; ++side) {
        PropertyCheck& c = side == 0 ? cs : ks;
        ++c.instances;
        try {
          if (side == 0)
            cokernel_search(QP, f, budgets.search());
          else
            kernel_search(QP, f, budgets.search());
        } catch (const NoCokernel&) {
          ++c.failures;
          c.counterexamples.push_back(describe(QP, f));
        } catch (const NoKernel&) {
          ++c.failures;
          c.counterexamples.push_back(describe(QP, f));
        } catch (const BoundsExceeded&) {
          bounded = true;
        }
      }
    }
    json c = clause_from("preabelian_search", {&ks, &cs}, false);
    if (bounded) c["status"] = "bounds-exceeded";
    timed(c, t0);
  }
  if (!props.preabelian()) {
    skip_from(1, "skipped");
    report["clauses"] = clauses;
    emit(report, a.report, out);
    return kExitClauseFailure;
  }
  {
    std::vector<const PropertyCheck*> checks;
    for (const auto& c : props.pullback_checks) checks.push_back(&c);
    for (const auto& c : props.pushout_checks) checks.push_back(&c);
    timed(clause_from("integral", checks, props.truncated), t0);
  }

  // calculus of fractions
  t0 = Clock::now();
  {
    const AxiomReport ax = verify_rf_axioms(QP, scan);
    std::vector<const PropertyCheck*> checks;
    for (const auto& c : ax.clauses) checks.push_back(&c);
    timed(clause_from("fractions", checks, scan.max_instances != 0), t0);
  }

  // abelian localisation
  t0 = Clock::now();
  {
    const AbelianReport ab = check_abelian(QP, scan);
    json c = clause_from("abelian", {&ab.regular_middle, &ab.invertible_middle}, scan.max_instances != 0);
    report["flags"]["every_regular_invertible"] = ab.not_invertible_in_quotient == 0;
    report["regular_noninvertible"] = ab.regular_noninvertible;
    timed(c, t0);
  }

  // equivalence with mod End(T)^op
  if (T) {
    t0 = Clock::now();
    const EquivalenceReport eq = verify_equivalence(Q, *T, budgets.equivalence());
    json c = clause_from("equivalence", {&eq.faithful, &eq.full, &eq.projectives, &eq.end_dimension}, false);
    c["non_identity_denominators"] = eq.non_identity_denominators;
    c["proper_fraction_witnesses"] = eq.witnesses;
    c["localised_isomorphisms"] = eq.isomorphisms;
    timed(c, t0);
  }

  report["clauses"] = clauses;
  emit(report, a.report, out);
  for (const auto& c : clauses)
    if (!passing(c)) return kExitClauseFailure;
  return kExitPass;
}

int cmd_cotorsion(const std::string& path, const std::string& u_spec, const std::optional<std::string>& v_spec,
                  std::ostream& out) {
  const CategoryPresentation P = load_category(path);
  if (!P.has_sigma()) throw MissingSuspension("cotorsion needs a suspension");
  auto parse_set = [&](const std::string& s) {
    if (s == "all") return nonzero_indecomposables(P);
    if (s == "0" || s.empty()) return IndexSet{};
    return parse_index_set(P, s);
  };
  const IndexSet U = parse_set(u_spec);
  const IndexSet u_perp = perp(P, U, Side::kRight);
  const IndexSet V = v_spec ? parse_set(*v_spec) : u_perp;
  const IndexSet v_perp = perp(P, V, Side::kLeft);

  json report;
  report["command"] = "cotorsion";
  report["category"] = path;
  report["U"] = names_of(P, U);
  report["V"] = names_of(P, V);
  json a = clause("(a) U^perp = V", u_perp == V ? "pass" : "fail");
  a["U_perp"] = names_of(P, u_perp);
  json b = clause("(b) perp V = U", v_perp == U ? "pass" : "fail");
  b["perp_V"] = names_of(P, v_perp);
  json c = clause("(c) triangle decomposition", "unchecked");
  report["clauses"] = json::array({a, b, c});
  out << report.dump(2) << "\n";
  return (u_perp == V && v_perp == U) ? kExitPass : kExitClauseFailure;
}

int cmd_fraction(const std::string& path, const std::string& t_spec, const std::vector<std::string>& exprs,
                 std::ostream& out, std::ostream& err) {
  const CategoryPresentation P = load_category(path);
  if (!P.has_sigma()) throw MissingSuspension("fraction needs a suspension");
  const Obj T = parse_object(P, t_spec);
  const QuotientCategory Q = build_quotient(P, T);
  FractionEvaluator ev(Q, T);
  int code = kExitPass;
  for (const auto& e : exprs) {
    try {
      auto r = ev.eval(e);
      out << r.text << "\n";
      if (r.deciders_disagree) code = kExitClauseFailure;
    } catch (const ExprError& x) {
      err << "error: " << x.what() << "\n  " << e << "\n  " << std::string(x.column() - 1, ' ') << "^\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localisation of quotients of cluster categories of type A", "catloc"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string orientation, field_text = "Q", out_path;
  auto* gen = app.add_subcommand("generate", "Write the cluster category C(A_n) as a category file");
  gen->add_option("--n", n, "Rank of the quiver")->required();
  gen->add_option("--orientation", orientation, "n-1 letters, L for k <- k+1 and R for k -> k+1 (default all L)");
  gen->add_option("--field", field_text, "Q or Fp:<prime>")->capture_default_str();
  gen->add_option("--out", out_path, "Output path, - for stdout")->required();

  VerifyArgs va;
  BudgetFlags verify_flags;
  auto* ver = app.add_subcommand("verify", "Check the localisation theorems for C/X_T or C/S");
  ver->add_option("category", va.category, "Category file")->required();
  auto* t_opt = ver->add_option("--T", va.T, "Rigid object, e.g. P1+2*P2");
  auto* s_opt = ver->add_option("--subcat", va.subcat, "Quotient by these indecomposables, e.g. P1,P2");
  auto* p_opt = ver->add_option("--perp-of", va.perp_of, "Quotient by the right perp of these indecomposables");
  t_opt->excludes(s_opt)->excludes(p_opt);
  s_opt->excludes(p_opt);
  ver->add_option("--report", va.report, "Write the JSON report here and print a summary");
  ver->add_flag("--search", va.search, "Also run the bounded kernel and cokernel searches");
  ver->add_flag("--timing", va.timing, "Record clause timings (makes reports non-deterministic)");
  verify_flags.attach(ver);

  std::string cot_path, u_spec;
  std::optional<std::string> v_spec;
  auto* cot = app.add_subcommand("cotorsion", "Check conditions (a) and (b) of a cotorsion pair");
  cot->add_option("category", cot_path, "Category file")->required();
  cot->add_option("--U", u_spec, "Indecomposables of U, 'all' or '0'")->required();
  cot->add_option("--V", v_spec, "Indecomposables of V (default: U^perp)");

  std::string frac_path, frac_T;
  std::vector<std::string> exprs;
  auto* fr = app.add_subcommand("fraction", "Evaluate fraction expressions in the localisation of C/X_T");
  fr->add_option("category", frac_path, "Category file")->required();
  fr->add_option("--T", frac_T, "Rigid object")->required();
  fr->add_option("-e,--expr", exprs, "Statement to evaluate; repeatable")->required()->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Budgets config = load_budgets();
    if (*gen) {
      if (n == 0) {
        err << "error: --n must be at least 1\n";
        return kExitUsage;
      }
      const CategoryPresentation P = build_cluster_category(n, orientation, parse_field(field_text));
      if (out_path == "-")
        out << to_json(P).dump(1) << "\n";
      else
        save_category(P, out_path);
      return kExitPass;
    }
    if (*ver) {
      if (va.T.empty() && va.subcat.empty() && va.perp_of.empty()) {
        err << "error: verify needs one of --T, --subcat, --perp-of\n";
        return kExitUsage;
      }
      return cmd_verify(va, verify_flags.apply(config), out);
    }
    if (*cot) return cmd_cotorsion(cot_path, u_spec, v_spec, out);
    if (*fr) return cmd_fraction(frac_path, frac_T, exprs, out, err);
  } catch (const NotRigid& e) {
    err << "not rigid: " << e.what() << "\n";
    return kExitClauseFailure;
  } catch (const NotRegular& e) {
    err << "not regular: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoCokernel& e) {
    err << "no cokernel: " << e.what() << "\n";
    return kExitClauseFailure;
  } catch (const NoKernel& e) {
    err << "no kernel: " << e.what() << "\n";
    return kExitClauseFailure;
  } catch (const MissingSuspension& e) {
    err << "missing suspension: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundsExceeded& e) {
    err << "bounds exceeded: " << e.what() << "\n";
    return kExitClauseFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace catloc
