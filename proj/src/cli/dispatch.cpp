#include "oracle_forge/cli/dispatch.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oracle_forge/cli/group_spec.hpp"
#include "oracle_forge/frobenius/comonoid.hpp"
#include "oracle_forge/frobenius/laws.hpp"
#include "oracle_forge/frobenius/oracle.hpp"
#include "oracle_forge/groups/table_io.hpp"
#include "oracle_forge/homid/algorithm.hpp"
#include "oracle_forge/linrel/laws.hpp"
#include "oracle_forge/linrel/linrel.hpp"
#include "oracle_forge/linrel/literal.hpp"
#include "oracle_forge/numeric/cmatrix.hpp"

namespace oracle_forge::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxOracleDim = 1024;
constexpr std::size_t kMaxDumpDim = 64;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Report {
 public:
  explicit Report(const std::vector<std::string>& args) {
    body_["header"] = {{"tool", "oracle-forge"}, {"version", ORACLE_FORGE_VERSION}};
    body_["command"] = args;
  }

  void check(const std::string& name, bool pass, std::optional<double> residual = std::nullopt) {
    Json c = {{"name", name}, {"pass", pass}};
    if (residual) {
      c["residual"] = *residual;
    } else {
      c["exact"] = true;
    }
    checks_.push_back(std::move(c));
    pass_ = pass_ && pass;
  }

  Json& operator[](const char* key) { return body_[key]; }
  bool pass() const { return pass_; }
  void fail() { pass_ = false; }

  void emit(std::ostream& out, std::ostream& err, bool table) {
    body_["checks"] = checks_;
    body_["pass"] = pass_;
    out << body_.dump(2) << '\n';
    if (!table) return;
    std::size_t width = 5;
    for (const auto& c : checks_) width = std::max(width, c["name"].get<std::string>().size());
    err << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  residual\n";
    for (const auto& c : checks_) {
      err << std::left << std::setw(static_cast<int>(width)) << c["name"].get<std::string>() << "  "
          << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << "  ";
      if (c.contains("residual")) {
        err << std::scientific << std::setprecision(2) << c["residual"].get<double>();
      } else {
        err << "exact";
      }
      err << '\n';
    }
    err << (pass_ ? "overall: PASS\n" : "overall: FAIL\n");
  }

 private:
  Json body_ = Json::object();
  Json checks_ = Json::array();
  bool pass_ = true;
};

double default_tolerance() {
  const char* env = std::getenv("ORACLE_FORGE_TOL");
  if (env == nullptr || *env == '\0') return numeric::kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(tol) || tol <= 0.0) {
    throw UsageError(std::string("ORACLE_FORGE_TOL must be a positive number, got '") + env + "'");
  }
  return tol;
}

double clean(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Json dump_matrix(const numeric::CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double re = clean(m(i, j).real());
      const double im = clean(m(i, j).imag());
      if (im == 0.0) {
        row.push_back(re);
      } else {
        row.push_back({re, im});
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json character_json(const groups::CyclicCharacter& chi) {
  const auto r = chi.reduced();
  return {{"modulus", r.modulus()}, {"exponents", r.exponents()}};
}

void add_law_checks(Report& report, const std::string& prefix, const frobenius::LawReport& laws) {
  report.check(prefix + ".coassociative", laws.coassociative.holds, laws.coassociative.residual);
  report.check(prefix + ".counital", laws.counital.holds, laws.counital.residual);
  report.check(prefix + ".frobenius", laws.frobenius.holds, laws.frobenius.residual);
  report.check(prefix + ".special", laws.special.holds, laws.special.residual);
  report.check(prefix + ".symmetric", laws.symmetric.holds, laws.symmetric.residual);
}

void run_laws_hilb(Report& report, const std::string& spec, double tol) {
  const groups::FiniteGroup g = parse_group_spec(spec);
  if (g.order() > 64) throw UsageError("laws hilb supports groups of order at most 64");
  const auto white = frobenius::group_algebra_structure(g);
  const auto gray = frobenius::classical_structure(g.order());
  const auto white_laws = frobenius::law_report(white, tol);
  const auto gray_laws = frobenius::law_report(gray, tol);
  add_law_checks(report, "group_algebra", white_laws);
  add_law_checks(report, "classical", gray_laws);

  const auto residuals = frobenius::complementarity_residuals(white, gray);
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  report.check("complementarity", frobenius::check_complementarity(white, gray, tol), worst);
  const double composite = numeric::unitarity_residual(frobenius::complementarity_composite(white, gray));
  report.check("complementarity.composite_unitary", composite < tol, composite);

  report["group"] = {{"spec", spec}, {"order", g.order()}, {"abelian", g.is_abelian()}};
  const auto d_white = frobenius::dimension_scalar(white);
  const auto d_gray = frobenius::dimension_scalar(gray);
  report["dimension_scalar"] = {{"group_algebra", clean(d_white.real())},
                                {"classical", clean(d_gray.real())}};
  report["group_algebra_commutative"] = white_laws.commutative.holds;
  report["tolerance"] = tol;
}

void run_laws_linrel(Report& report, unsigned prime) {
  if (!numeric::is_prime(prime) || prime > linrel::kLawSuiteMaxPrime) {
    throw UsageError("--prime must be a prime <= 13");
  }
  const auto laws = linrel::law_report_linrel(prime);
  for (const auto& c : laws.checks) report.check(c.name, c.holds);
  report["prime"] = prime;
}

void run_oracle(Report& report, const std::string& spec, const std::string& target_text,
                const std::string& hom, double tol) {
  const groups::FiniteGroup g = parse_group_spec(spec);
  const groups::AbelianFactors a = parse_target(target_text);
  if (g.order() * a.order() > kMaxOracleDim) throw UsageError("oracle dimension exceeds 1024");
  const auto images = parse_images(hom, g.order(), a);
  const auto u = frobenius::build_oracle_diagram(images, a.group(), tol);
  const auto ud = numeric::dagger(u);
  const auto id = numeric::CMatrix::identity(u.rows());
  const double left = numeric::max_abs_diff(ud * u, id);
  const double right = numeric::max_abs_diff(u * ud, id);
  const double op = numeric::max_abs_diff(u, frobenius::build_oracle_operational(images, a.group()));
  report.check("unitary.dagger_left", left < tol, left);
  report.check("unitary.dagger_right", right < tol, right);
  report.check("matches_operational", op < tol, op);
  report["group"] = {{"spec", spec}, {"order", g.order()}};
  report["target"] = a.factors();
  report["images"] = format_images(images, a);
  report["homomorphism"] = !groups::GroupHom::first_violation(g, a.group(), images).has_value();
  report["dimension"] = u.rows();
  if (u.rows() <= kMaxDumpDim) {
    report["matrix"] = dump_matrix(u);
  } else {
    report["matrix"] = nullptr;
  }
}

Json run_json(const homid::RunResult& run, const groups::GroupHom& hidden,
              const groups::AbelianFactors& a) {
  Json per = Json::array();
  for (const auto& f : run.per_factor) {
    per.push_back({{"factor", f.factor},
                   {"modulus", a.factors()[f.factor]},
                   {"measured", character_json(f.measured)},
                   {"probability", clean(f.probability)}});
  }
  return {{"hidden", format_images(hidden.images(), a)},
          {"recovered", format_images(run.recovered.images(), a)},
          {"queries", run.queries.count},
          {"correct", run.recovered == hidden},
          {"per_factor", per}};
}

void run_homid(Report& report, const std::string& spec, const std::string& target_text,
               const std::optional<std::string>& hom, bool all, const std::string& mode,
               const std::string& oracle_kind, double tol) {
  if (all == hom.has_value()) throw UsageError("homid needs exactly one of --hom or --all");
  const groups::FiniteGroup g = parse_group_spec(spec);
  const groups::AbelianFactors a = parse_target(target_text);
  if (g.order() * a.order() > kMaxOracleDim) throw UsageError("oracle dimension exceeds 1024");
  homid::RunOptions options;
  options.mode = mode == "exact" ? homid::SimulationMode::kExact : homid::SimulationMode::kFloat;
  options.tol = tol;
  const auto kind = oracle_kind == "diagram" ? homid::OracleKind::kDiagram : homid::OracleKind::kOperational;

  report["group"] = {{"spec", spec}, {"order", g.order()}};
  report["target"] = a.factors();
  report["mode"] = homid::to_string(options.mode);
  report["oracle"] = homid::to_string(kind);
  report["expected_queries"] = a.count();

  Json runs = Json::array();
  auto judge = [&](const std::string& label, bool correct, std::size_t queries) {
    report.check(label + ".recovered", correct);
    report.check(label + ".queries", queries == a.count());
  };
  if (hom) {
    const auto images = parse_images(*hom, g.order(), a);
    if (const auto bad = groups::GroupHom::first_violation(g, a.group(), images)) {
      throw UsageError("--hom is not a homomorphism: f(" + std::to_string(bad->first) + "*" +
                       std::to_string(bad->second) + ") != f(" + std::to_string(bad->first) + ")f(" +
                       std::to_string(bad->second) + ")");
    }
    const auto hidden = groups::GroupHom::create(g, a.group(), images);
    auto oracle = homid::make_oracle(hidden, kind, tol);
    const auto run = homid::identify_hom(g, a, oracle, options);
    runs.push_back(run_json(run, hidden, a));
    judge("hom", run.recovered == hidden, run.queries.count);
  } else {
    const auto sweep = homid::identify_all(g, a, options, kind);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      const auto& entry = sweep[i];
      const std::string label = "hom[" + std::to_string(i) + "]";
      if (entry.result) {
        runs.push_back(run_json(*entry.result, entry.hidden, a));
        judge(label, entry.correct, entry.result->queries.count);
      } else {
        runs.push_back({{"hidden", format_images(entry.hidden.images(), a)}, {"error", entry.error}});
        report.check(label + ".recovered", false);
      }
    }
    report["hom_count"] = sweep.size();
  }
  report["runs"] = runs;
}

void check_field(unsigned prime) {
  if (!numeric::is_prime(prime) || prime > numeric::kMaxPrime) {
    throw UsageError("--prime must be a prime <= 97");
  }
}

void run_resistor(Report& report, unsigned prime, unsigned r) {
  check_field(prime);
  if (r >= prime) throw UsageError("--r must lie in [0, p)");
  const auto f = linrel::resistor(r, prime);
  const auto expected = linrel::LinRel::from_basis(prime, 2, 2, {{1, 0, 1, r}, {0, 1, 0, 1}});
  report.check("graph_relation", f == expected);
  report.check("unitary", linrel::is_unitary_rel(f));
  report["prime"] = prime;
  report["r"] = r;
  report["relation"] = linrel::format_relation(f);
}

void run_relation(Report& report, const std::string& literal) {
  const auto f = linrel::parse_relation(literal);
  report["relation"] = linrel::format_relation(f);
  report["dim"] = f.space().dim();
  if (f.dom() == f.cod()) {
    report.check("unitary", linrel::is_unitary_rel(f));
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const DispatchOptions& options) {
  CLI::App app{"Frobenius-algebra oracles and homomorphism identification", "oracle-forge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ORACLE_FORGE_VERSION);

  double tol = numeric::kDefaultTol;
  std::string group, target, hom_text, mode = "float", oracle_kind = "operational", literal;
  bool all = false;
  unsigned prime = 0, r = 0;

  auto* laws = app.add_subcommand("laws", "Check algebraic law suites");
  laws->require_subcommand(1);
  auto* hilb = laws->add_subcommand("hilb", "Group algebra and classical structure laws");
  hilb->add_option("--group", group, "Group spec")->required();
  auto* tol_hilb = hilb->add_option("--tol", tol, "Tolerance");
  auto* lin = laws->add_subcommand("linrel", "Linear relation laws over GF(p)");
  lin->add_option("--prime", prime, "Prime p <= 13")->required();

  auto* orc = app.add_subcommand("oracle", "Build the oracle for a function G -> A");
  orc->add_option("--group", group, "Group spec")->required();
  orc->add_option("--target", target, "Target factor orders, e.g. 2,3")->required();
  orc->add_option("--hom", hom_text, "Images of each group element")->required();
  auto* tol_orc = orc->add_option("--tol", tol, "Tolerance");

  auto* hid = app.add_subcommand("homid", "Identify a hidden homomorphism");
  hid->add_option("--group", group, "Group spec")->required();
  hid->add_option("--target", target, "Target factor orders, e.g. 2,3")->required();
  auto* hom_opt = hid->add_option("--hom", hom_text, "Images of each group element");
  auto* all_opt = hid->add_flag("--all", all, "Sweep every homomorphism");
  hom_opt->excludes(all_opt);
  hid->add_option("--mode", mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  hid->add_option("--oracle", oracle_kind, "operational or diagram")
      ->check(CLI::IsMember({"operational", "diagram"}));
  auto* tol_hid = hid->add_option("--tol", tol, "Tolerance");

  auto* res = app.add_subcommand("resistor", "Resistor relation and its unitarity");
  res->add_option("--prime", prime, "Prime p")->required();
  res->add_option("--r", r, "Resistance in [0, p)")->required();

  auto* rel = app.add_subcommand("relation", "Canonicalize a relation literal");
  rel->add_option("--rel", literal, "Relation literal")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << ORACLE_FORGE_VERSION << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitUsage;
  }

  Report report(args);
  try {
    const bool tol_given = tol_hilb->count() + tol_orc->count() + tol_hid->count() > 0;
    if (!tol_given) tol = default_tolerance();
    if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive");

    if (hilb->parsed()) {
      run_laws_hilb(report, group, tol);
    } else if (lin->parsed()) {
      run_laws_linrel(report, prime);
    } else if (orc->parsed()) {
      run_oracle(report, group, target, hom_text, tol);
    } else if (hid->parsed()) {
      run_homid(report, group, target, hom_opt->count() ? std::optional(hom_text) : std::nullopt, all,
                mode, oracle_kind, tol);
    } else if (res->parsed()) {
      run_resistor(report, prime, r);
    } else if (rel->parsed()) {
      run_relation(report, literal);
    }
  } catch (const homid::NonDeterministicOutcome& e) {
    err << "check failed: " << e.what() << '\n';
    report["error"] = e.what();
    report.fail();
    report.emit(out, err, options.table);
    return kExitCheckFailed;
  } catch (const homid::InconsistentMeasurement& e) {
    err << "check failed: " << e.what() << '\n';
    report["error"] = e.what();
    report.fail();
    report.emit(out, err, options.table);
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.emit(out, err, options.table);
  return report.pass() ? kExitPass : kExitCheckFailed;
}

int dispatch_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  DispatchOptions options;
  options.table = ::isatty(STDERR_FILENO) != 0;
  return dispatch(args, std::cout, std::cerr, options);
}

}  // namespace oracle_forge::cli
