#include "fstruct/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fstruct/errors.hpp"
#include "fstruct/generator.hpp"
#include "fstruct/integrability.hpp"
#include "fstruct/nijenhuis.hpp"

namespace fstruct {

namespace {

using nlohmann::ordered_json;

std::string term(const Rational& c, const std::string& power, bool first) {
  Rational a = abs(c);
  std::string coeff = a == 1 ? "" : to_string(a) + "*";
  std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  return sign + coeff + power;
}

std::vector<std::string> field_strings(const std::vector<VectorField>& fields, const Chart& chart) {
  std::vector<std::string> out;
  for (const auto& v : fields) out.push_back(to_string(v, chart.vars()));
  return out;
}

ordered_json suite_json(const IdentitySuite& s) {
  ordered_json failures = ordered_json::array();
  for (const auto& c : s.checks) {
    if (c.passed) continue;
    ordered_json f;
    f["name"] = c.name;
    f["residual"] = c.residual;
    failures.push_back(std::move(f));
  }
  ordered_json j;
  j["passed"] = s.all_passed();
  j["checks"] = s.checks.size();
  j["failures"] = std::move(failures);
  return j;
}

ordered_json criterion_json(const IdentityCheck& c, const Chart& chart) {
  ordered_json j;
  j["id"] = c.name;
  j["holds"] = c.passed;
  if (c.witness) {
    j["witness"] = {chart.vars()[c.witness->first], chart.vars()[c.witness->second]};
  } else {
    j["witness"] = nullptr;
  }
  j["residual"] = c.residual;
  return j;
}

ordered_json cr_json(const LoadedStructure& ls, const Audit& a) {
  if (!ls.fhat) return nullptr;
  const auto& chart = ls.structure.chart;
  ordered_json j;
  j["Fhat"] = to_strings(*ls.fhat, chart);
  j["fhat_checks"] = suite_json(*a.fhat);
  if (!a.cr) {
    j["is_cr"] = false;
    return j;
  }
  const CrReport& cr = *a.cr;
  ordered_json h = ordered_json::array();
  for (const auto& v : cr.H.basis) h.push_back(to_string(v, chart.vars()));
  j["H"] = std::move(h);
  j["complex_dim"] = cr.H.complex_dim();
  j["fhat_integrable"] = cr.fhat_integrable;
  j["disjoint"] = cr.disjoint;
  j["involutive"] = cr.involutive;
  j["eigenbundle"] = cr.eigenbundle;
  j["bracket_identities"] = suite_json(cr.fhat_checks);
  j["is_cr"] = cr.is_cr();
  return j;
}

std::string flag(const ordered_json& v) { return v.get<bool>() ? "true" : "false"; }

}  // namespace

std::string equation_string(const Rational& alpha, const Rational& beta, int K) {
  std::string out;
  bool first = true;
  if (alpha != 0) {
    out += term(alpha, "F^" + std::to_string(K + 1), first);
    first = false;
  }
  if (beta != 0) {
    out += term(beta, "F^" + std::to_string(K), first);
    first = false;
  }
  out += term(1, "F", first);
  return out + " = 0";
}

ordered_json report_json(const LoadedStructure& ls, const Audit& a) {
  const FStructure& s = ls.structure;
  const Chart& chart = s.chart;
  const IntegrabilityReport& r = a.integrability;
  ordered_json j;
  j["structure_ok"] = true;
  j["equation"] = equation_string(s.alpha, s.beta, s.K);
  j["rank"] = s.rank;
  const RankReport rank = checked_rank(s.F, chart);
  j["rank_warning"] = rank.warning.empty() ? ordered_json(nullptr) : ordered_json(rank.warning);
  j["dims"] = {{"Dl", s.rank}, {"Dm", s.dim() - s.rank}};
  j["flags"] = {{"Dl_integrable", r.Dl_integrable},
                {"Dm_integrable", r.Dm_integrable},
                {"partially", r.partially_integrable},
                {"completely", r.completely_integrable},
                {"integrable", r.F_integrable}};
  j["classification"] = classify(s.alpha, s.beta, s.K).label;
  std::vector<std::string> issues = a.failures();
  j["consistency_ok"] = issues.empty();
  j["issues"] = issues;

  ordered_json evidence = ordered_json::array();
  for (const auto& d : r.evidence) {
    ordered_json e;
    e["notion"] = d.notion;
    e["verdict"] = d.verdict;
    e["consistent"] = d.consistent;
    ordered_json crit = ordered_json::array();
    for (const auto& c : d.criteria) crit.push_back(criterion_json(c, chart));
    e["criteria"] = std::move(crit);
    evidence.push_back(std::move(e));
  }
  j["evidence"] = std::move(evidence);

  j["l"] = to_strings(s.l, chart);
  j["m"] = to_strings(s.m, chart);
  j["distributions"] = {{"Dl", field_strings(distribution_of(s.l).basis, chart)},
                        {"Dm", field_strings(distribution_of(s.m).basis, chart)},
                        {"Dl_involutive", r.frobenius_Dl},
                        {"Dm_involutive", r.frobenius_Dm}};

  const FrameTable nf = nijenhuis_of(s.F);
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t k = i + 1; k < s.dim(); ++k) {
      table.push_back({{"pair", {chart.vars()[i], chart.vars()[k]}},
                       {"value", to_string(nf.at(i, k), chart.vars())}});
    }
  }
  j["nijenhuis"] = std::move(table);
  j["identities"] = {{"projector", suite_json(a.projector)},
                     {"decomposition", suite_json(a.decomposition)},
                     {"nijenhuis", suite_json(a.nijenhuis)}};
  j["cr"] = cr_json(ls, a);
  return j;
}

ordered_json report_json(const LoadedStructure& ls) { return report_json(ls, audit(ls.structure, ls.fhat)); }

std::string report_text(const ordered_json& j) {
  std::ostringstream o;
  auto matrix = [&](const char* name, const ordered_json& m) {
    o << name << ":\n";
    for (const auto& row : m) {
      o << "  [";
      for (std::size_t k = 0; k < row.size(); ++k) o << (k ? ", " : "") << row[k].get<std::string>();
      o << "]\n";
    }
  };
  auto fields = [&](const ordered_json& list) {
    if (list.empty()) return std::string("{}");
    std::string s = "{";
    for (std::size_t k = 0; k < list.size(); ++k) s += (k ? ", " : "") + list[k].get<std::string>();
    return s + "}";
  };
  o << "structure: " << j["equation"].get<std::string>() << " holds\n";
  o << "rank: " << j["rank"] << "\n";
  if (!j["rank_warning"].is_null()) o << "warning: " << j["rank_warning"].get<std::string>() << "\n";
  o << "dims: Dl=" << j["dims"]["Dl"] << " Dm=" << j["dims"]["Dm"] << "\n";
  matrix("l", j["l"]);
  matrix("m", j["m"]);
  o << "Dl basis: " << fields(j["distributions"]["Dl"]) << "\n";
  o << "Dm basis: " << fields(j["distributions"]["Dm"]) << "\n";
  o << "N_F on frame pairs:\n";
  for (const auto& e : j["nijenhuis"]) {
    o << "  N_F(∂" << e["pair"][0].get<std::string>() << ",∂" << e["pair"][1].get<std::string>()
      << ") = " << e["value"].get<std::string>() << "\n";
  }
  o << "flags:";
  for (const auto& [k, v] : j["flags"].items()) o << " " << k << "=" << flag(v);
  o << "\n";
  o << "classification: " << j["classification"].get<std::string>() << "\n";
  o << "evidence:\n";
  for (const auto& e : j["evidence"]) {
    o << "  " << e["notion"].get<std::string>() << ": " << flag(e["verdict"])
      << (e["consistent"].get<bool>() ? "" : " (criteria disagree)") << "\n";
    for (const auto& c : e["criteria"]) {
      o << "    " << c["id"].get<std::string>() << ": " << flag(c["holds"]);
      if (!c["witness"].is_null()) {
        o << " at (∂" << c["witness"][0].get<std::string>() << ",∂" << c["witness"][1].get<std::string>()
          << ")";
      }
      if (!c["residual"].get<std::string>().empty()) o << ", residual " << c["residual"].get<std::string>();
      o << "\n";
    }
  }
  o << "identities:";
  for (const auto& [k, v] : j["identities"].items()) {
    o << " " << k << "=" << (v["passed"].get<bool>() ? "pass" : "FAIL");
  }
  o << "\n";
  if (!j["cr"].is_null()) {
    const auto& c = j["cr"];
    matrix("Fhat", c["Fhat"]);
    if (c.contains("H")) {
      o << "H basis: " << fields(c["H"]) << " (complex dim " << c["complex_dim"] << ")\n";
      o << "cr: disjoint=" << flag(c["disjoint"]) << " involutive=" << flag(c["involutive"])
        << " fhat_integrable=" << flag(c["fhat_integrable"]) << " is_cr=" << flag(c["is_cr"]) << "\n";
    } else {
      o << "cr: Fhat rejected\n";
    }
  }
  o << "consistency: " << (j["consistency_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  for (const auto& issue : j["issues"]) o << "  " << issue.get<std::string>() << "\n";
  return o.str();
}

namespace {

// Resolves a frame index given as a variable name or a 1-based position.
std::size_t frame_index(const Chart& chart, const std::string& token) {
  if (auto i = chart.index_of(token)) return *i;
  try {
    std::size_t pos = 0;
    long k = std::stol(token, &pos);
    if (pos == token.size() && k >= 1 && static_cast<std::size_t>(k) <= chart.dim()) {
      return static_cast<std::size_t>(k - 1);
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("'" + token + "' is neither a chart variable nor an index in 1.." +
                              std::to_string(chart.dim()));
}

int emit_report(const LoadedStructure& ls, bool json, std::ostream& out, std::ostream& err) {
  auto j = report_json(ls);
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << report_text(j);
  }
  if (!j["consistency_ok"].get<bool>()) {
    err << "inconsistency: " << j["issues"][0].get<std::string>() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_verify(const LoadedStructure& ls, std::ostream& out) {
  const auto& s = ls.structure;
  out << "ok: " << equation_string(s.alpha, s.beta, s.K) << "\n";
  out << "rank: " << s.rank << "\n";
  const auto rank = checked_rank(s.F, s.chart);
  if (!rank.warning.empty()) out << "warning: " << rank.warning << "\n";
  auto p = check_projector_identities(s);
  auto d = check_decomposition(s);
  out << "projector identities: " << (p.all_passed() ? "pass" : "FAIL") << "\n";
  out << "decomposition: " << (d.all_passed() ? "pass" : "FAIL") << "\n";
  if (ls.fhat) out << "Fhat: " << (verify_fhat(s, *ls.fhat).all_passed() ? "pass" : "FAIL") << "\n";
  return p.all_passed() && d.all_passed() ? kExitOk : kExitInconsistent;
}

int cmd_nijenhuis(const LoadedStructure& ls, const std::vector<std::string>& pair, std::ostream& out) {
  const auto& s = ls.structure;
  const auto& names = s.chart.vars();
  auto line = [&](std::size_t i, std::size_t k) {
    VectorField v = nijenhuis_apply(s.F, VectorField::unit(s.dim(), i), VectorField::unit(s.dim(), k));
    out << "N_F(∂" << names[i] << ",∂" << names[k] << ") = " << to_string(v, names) << "\n";
  };
  if (!pair.empty()) {
    line(frame_index(s.chart, pair[0]), frame_index(s.chart, pair[1]));
    return kExitOk;
  }
  const FrameTable t = nijenhuis_of(s.F);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t k = i + 1; k < s.dim(); ++k) {
      out << "N_F(∂" << names[i] << ",∂" << names[k] << ") = " << to_string(t.at(i, k), names) << "\n";
    }
  }
  return kExitOk;
}

int cmd_cr(const LoadedStructure& ls, std::ostream& out, std::ostream& err) {
  if (!ls.fhat) {
    err << "error: the manifest has no Fhat\n";
    return kExitUsage;
  }
  const auto& s = ls.structure;
  auto checks = verify_fhat(s, *ls.fhat);
  if (const auto* bad = checks.first_failure()) {
    out << "Fhat rejected: " << bad->name;
    if (!bad->residual.empty()) out << " (residual " << bad->residual << ")";
    out << "\nis_cr: false\n";
    return kExitOk;
  }
  CrReport r = check_cr(s, *ls.fhat);
  std::vector<std::string> h;
  for (const auto& v : r.H.basis) h.push_back(to_string(v, s.chart.vars()));
  out << "H basis:";
  for (const auto& v : h) out << " " << v;
  out << "\ncomplex dim: " << r.H.complex_dim() << "\n";
  out << "disjoint: " << (r.disjoint ? "true" : "false") << "\n";
  out << "involutive: " << (r.involutive ? "true" : "false") << "\n";
  out << "N_Fhat = 0: " << (r.fhat_integrable ? "true" : "false") << "\n";
  for (const auto& c : r.fhat_checks.checks) out << c.name << ": " << (c.passed ? "true" : "false") << "\n";
  out << "is_cr: " << (r.is_cr() ? "true" : "false") << "\n";
  if (!r.implication_ok || !r.eigenbundle) {
    err << "inconsistency: " << (!r.implication_ok ? "N_Fhat = 0 but H is not involutive"
                                                   : "H generator is not an Fhat eigenfield")
        << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

struct FuzzArgs {
  std::size_t n = 3;
  int K = 3;
  std::string alpha = "0";
  std::string beta = "1";
  std::size_t count = 10;
  std::uint64_t seed = 0;
  bool position_dependent = false;
};

int cmd_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  GeneratorSpec base;
  base.n = a.n;
  base.K = a.K;
  base.alpha = parse_rational(a.alpha);
  base.beta = parse_rational(a.beta);
  const std::size_t d = block_size(base.alpha, base.beta, base.K);
  if (d > a.n) {
    err << "error: n = " << a.n << " cannot hold a companion block of size " << d << "\n";
    return kExitUsage;
  }
  std::mt19937_64 rng(a.seed);
  std::size_t failed = 0;
  std::size_t non_involutive = 0;
  for (std::size_t k = 0; k < a.count; ++k) {
    GeneratorSpec spec = base;
    const auto blocks = std::uniform_int_distribution<std::size_t>(1, a.n / d)(rng);
    spec.kernel_dim = a.n - blocks * d;
    spec.conjugation = a.position_dependent ? Conjugation::kUnimodular : Conjugation::kConstant;
    spec.shear_count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    spec.seed = rng();
    GeneratedStructure g = generate(spec);
    Audit au = audit(g.structure, g.fhat);
    const auto& r = au.integrability;
    non_involutive += !r.Dl_integrable;
    out << "#" << k << " seed=" << spec.seed << " kernel=" << spec.kernel_dim << " rank=" << g.structure.rank
        << " Dl=" << r.Dl_integrable << " Dm=" << r.Dm_integrable << " partially=" << r.partially_integrable
        << " completely=" << r.completely_integrable << " integrable=" << r.F_integrable;
    if (au.cr) out << " cr=" << au.cr->is_cr();
    auto failures = au.failures();
    out << (failures.empty() ? " ok" : " FAIL") << "\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    failed += !failures.empty();
  }
  out << "instances: " << a.count << ", failed: " << failed << ", non-involutive Dl: " << non_involutive << "\n";
  if (failed) {
    err << "inconsistency: " << failed << " instance(s) failed\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for polynomial F-structures", "fstruct"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::vector<std::string> pair;
  std::string alpha, beta;
  int K = 0;
  int example_id = 0;
  bool emit = false;
  FuzzArgs fuzz;

  auto* verify = app.add_subcommand("verify", "Check the structure equation and projector identities");
  verify->add_option("file", file, "Manifest path")->required();
  auto* report = app.add_subcommand("report", "Integrability report");
  report->add_option("file", file, "Manifest path")->required();
  report->add_flag("--json", json, "Emit JSON");
  auto* nij = app.add_subcommand("nijenhuis", "N_F on coordinate frame pairs");
  nij->add_option("file", file, "Manifest path")->required();
  nij->add_option("--pair", pair, "Two frame fields, by variable name or 1-based index")->expected(2);
  auto* cr = app.add_subcommand("cr", "CR-structure checks for the manifest's Fhat");
  cr->add_option("file", file, "Manifest path")->required();
  auto* cls = app.add_subcommand("classify", "Match (alpha, beta, K) against the special cases");
  cls->add_option("--alpha", alpha, "Rational p/q")->required();
  cls->add_option("--beta", beta, "Rational p/q")->required();
  cls->add_option("--K", K, "Integer >= 3")->required();
  auto* ex = app.add_subcommand("example", "Built-in worked example");
  ex->add_option("id", example_id, "1..4")->required()->check(CLI::Range(1, 4));
  ex->add_flag("--emit", emit, "Print the manifest instead of the report");
  ex->add_flag("--json", json, "Emit the report as JSON");
  auto* fz = app.add_subcommand("fuzz", "Generate and audit random structures");
  fz->add_option("--n", fuzz.n, "Dimension")->required();
  fz->add_option("--K", fuzz.K, "Integer >= 3")->required();
  fz->add_option("--alpha", fuzz.alpha, "Rational p/q")->required();
  fz->add_option("--beta", fuzz.beta, "Rational p/q")->required();
  fz->add_option("--count", fuzz.count, "Number of instances");
  fz->add_option("--seed", fuzz.seed, "Random seed");
  fz->add_flag("--position-dependent", fuzz.position_dependent, "Conjugate by polynomial shears");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*cls) {
      auto c = classify(parse_rational(alpha), parse_rational(beta), K);
      out << c.label << "\n";
      if (c.matches.size() > 1) {
        out << "also matches cases:";
        for (std::size_t k = 1; k < c.matches.size(); ++k) out << " " << c.matches[k];
        out << "\n";
      }
      return kExitOk;
    }
    if (*fz) return cmd_fuzz(fuzz, out, err);
    if (*ex) {
      Manifest m = builtin_example(example_id);
      if (emit) {
        out << to_json(m).dump(2) << "\n";
        return kExitOk;
      }
      return emit_report(load(m), json, out, err);
    }
    LoadedStructure ls = load_manifest(file);
    if (*verify) return cmd_verify(ls, out);
    if (*report) return emit_report(ls, json, out, err);
    if (*nij) return cmd_nijenhuis(ls, pair, out);
    if (*cr) return cmd_cr(ls, out, err);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructure;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fstruct
