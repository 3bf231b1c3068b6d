#include "gcone/cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gcone/groebner.hpp"
#include "gcone/json_io.hpp"
#include "gcone/model.hpp"
#include "gcone/verify.hpp"

namespace gcone {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string family = "A";
  int rank = 1;
  std::string frozen;  // empty = pick per family
  std::string model = "auto";
  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  bool long_run = false;
  bool primitive_only = false;
  std::string checkname = "all";
};

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    const char c = s[0];
    if ((c >= 'A' && c <= 'G') || (c >= 'a' && c <= 'g'))
      return family_from_letter(c);
  }
  throw std::invalid_argument("family must be one letter A..G, got '" + s +
                              "'");
}

ModelKind parse_kind(const std::string& s) {
  if (s == "polygon") return ModelKind::Polygon;
  if (s == "root") return ModelKind::Root;
  return ModelKind::Auto;
}

ModelSpec spec_of(const CliConfig& cfg) {
  ModelSpec spec;
  spec.family = parse_family(cfg.family);
  spec.rank = cfg.rank;
  if (cfg.frozen.empty()) {
    // Classical families default to the frozen boundary variables; the
    // exceptional families exist only without them.
    const bool exceptional = spec.family == Family::E ||
                             spec.family == Family::F ||
                             spec.family == Family::G;
    spec.frozen_mode = exceptional ? FrozenMode::None : FrozenMode::Special;
  } else {
    spec.frozen_mode =
        cfg.frozen == "special" ? FrozenMode::Special : FrozenMode::None;
  }
  return spec;
}

std::string monomial(const ClusterModel& m, const IVec& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += m.var_name(static_cast<int>(i));
    if (t[i] != 1) s += "^" + show(t[i]);
  }
  return s.empty() ? "1" : s;
}

bool tables_capped(const ClusterModel& m) { return m.rank() > 8; }

void cmd_variables(const ClusterModel& m, std::ostream& os) {
  os << "configuration: " << to_string(m.spec()) << "\n";
  os << "variables: " << m.num_vars() << " (" << m.num_cluster()
     << " cluster, " << m.num_vars() - m.num_cluster() << " frozen)\n";
  if (tables_capped(m)) {
    os << "table suppressed (rank > 8)\n";
    return;
  }
  os << "id  kind     name\n";
  for (size_t v = 0; v < m.num_vars(); ++v) {
    os << (v < 10 ? " " : "") << v << "  "
       << (v < m.num_cluster() ? "cluster" : "frozen ") << "  "
       << m.var_name(static_cast<int>(v)) << "\n";
  }
}

void cmd_compat(const ClusterModel& m, std::ostream& os) {
  os << "configuration: " << to_string(m.spec()) << "\n";
  if (tables_capped(m)) {
    os << "matrix suppressed (rank > 8): " << m.num_vars() << " x "
       << m.num_vars() << "\n";
    return;
  }
  os << "compatibility degrees (rows: first argument):\n";
  for (size_t i = 0; i < m.num_vars(); ++i) {
    os << m.var_name(static_cast<int>(i)) << ":";
    for (size_t j = 0; j < m.num_vars(); ++j)
      os << " " << m.compat(static_cast<int>(i), static_cast<int>(j));
    os << "\n";
  }
}

void cmd_relations(const ClusterModel& m, bool primitive_only,
                   std::ostream& os) {
  os << "configuration: " << to_string(m.spec()) << "\n";
  const auto& rels = m.relations();
  // Degree vectors grouped by relation index, for the primitive listing.
  std::map<int, std::vector<const DegreeVector*>> by_relation;
  std::vector<DegreeVector> dvs;
  if (primitive_only) {
    dvs = primitive_degree_vectors(m);
    for (const DegreeVector& d : dvs) by_relation[d.relation].push_back(&d);
  }
  size_t shown = 0;
  for (size_t r = 0; r < rels.size(); ++r) {
    const Relation& rel = rels[r];
    if (primitive_only && !rel.primitive()) continue;
    ++shown;
    if (tables_capped(m)) continue;
    os << m.var_name(rel.x1) << " * " << m.var_name(rel.x2) << " = "
       << monomial(m, rel.term1) << " + " << monomial(m, rel.term2) << "\n";
    if (primitive_only) {
      for (const DegreeVector* d :
           by_relation[static_cast<int>(r)]) {
        os << "  degree vector (term " << d->term << "): " << show(d->d)
           << "\n";
      }
    }
  }
  if (tables_capped(m))
    os << "list suppressed (rank > 8)\n";
  os << (primitive_only ? "primitive relations: " : "relations: ") << shown
     << "\n";
}

void cmd_cone(const ClusterModel& m, const std::string& format,
              std::ostream& os) {
  const Cone c = groebner_cone(m);
  if (format == "json") {
    os << cone_to_json(m, c);
    return;
  }
  os << "configuration: " << to_string(m.spec()) << "\n";
  os << "coordinates (" << m.num_vars() << "):";
  if (tables_capped(m)) {
    os << " suppressed (rank > 8)\n";
  } else {
    for (size_t v = 0; v < m.num_vars(); ++v)
      os << " " << m.var_name(static_cast<int>(v));
    os << "\n";
  }
  const auto block = [&](const char* label, const IMat& rows) {
    os << label << " (" << rows.size() << "):\n";
    if (tables_capped(m)) {
      os << "  suppressed (rank > 8)\n";
      return;
    }
    for (const IVec& r : rows) os << "  " << show(r) << "\n";
  };
  block("lineality basis", c.lineality);
  block("rays", c.rays);
  block("facet inequalities", c.inequalities);
}

int cmd_verify(const ModelSpec& spec, ModelKind kind, const CliConfig& cfg,
               std::ostream& os) {
  const auto results =
      run_checks(spec, kind, cfg.checkname, cfg.jobs, cfg.long_run);
  size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& r : results) {
    std::string status = r.pass ? "PASS" : "FAIL";
    if (!r.applicable) status = "SKIP";
    os << status << " " << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
    if (!r.applicable)
      ++skipped;
    else if (r.pass)
      ++passed;
    else
      ++failed;
  }
  os << "verification: " << passed << " passed, " << failed << " failed, "
     << skipped << " skipped\n";
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact Gröbner cones of finite-type cluster algebras"};
  app.fallthrough();  // global options may follow the subcommand
  app.require_subcommand(1);

  app.add_option("-f,--family", cfg.family,
                 "Family letter A..G (default A)");
  app.add_option("-r,--rank", cfg.rank, "Rank (default 1)");
  app.add_option("--frozen", cfg.frozen,
                 "Frozen variables: special | none (default: special for "
                 "A-D, none for E/F/G)")
      ->check(CLI::IsMember({"special", "none"}));
  app.add_option("--model", cfg.model,
                 "Model: polygon | root | auto (default auto)")
      ->check(CLI::IsMember({"polygon", "root", "auto"}));
  app.add_option("--format", cfg.format,
                 "Output format for `cone`: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps (default 1)");
  app.add_flag("--long", cfg.long_run,
               "Opt in to the long-running sweeps (ranks 7-8 of family E)");
  app.add_option("--out", cfg.out_path,
                 "Write the command output to this file instead of stdout");

  CLI::App* sub_variables =
      app.add_subcommand("variables", "List the variable table");
  CLI::App* sub_compat =
      app.add_subcommand("compat", "Print the compatibility-degree matrix");
  CLI::App* sub_relations =
      app.add_subcommand("relations", "List the exchange relations");
  sub_relations->add_flag("--primitive-only", cfg.primitive_only,
                          "Only primitive relations, with degree vectors");
  CLI::App* sub_cone = app.add_subcommand(
      "cone", "Compute the Gröbner cone (lineality, rays, facets)");
  CLI::App* sub_verify =
      app.add_subcommand("verify", "Run a verification suite");
  sub_verify
      ->add_option("--check", cfg.checkname,
                   "compdegree | equality | interior | result2 | lineality "
                   "| rays | nofrozen | derivations | crossmodel | all")
      ->check(CLI::IsMember({"compdegree", "equality", "interior", "result2",
                             "lineality", "rays", "nofrozen", "derivations",
                             "crossmodel", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream payload;
  int code = kExitOk;
  try {
    if (cfg.jobs < 1)
      throw std::invalid_argument("--jobs must be at least 1");
    const ModelSpec spec = spec_of(cfg);
    const ModelKind kind = parse_kind(cfg.model);
    if (app.got_subcommand(sub_verify)) {
      code = cmd_verify(spec, kind, cfg, payload);
    } else {
      const auto model = build_model(spec, kind);
      if (app.got_subcommand(sub_variables))
        cmd_variables(*model, payload);
      else if (app.got_subcommand(sub_compat))
        cmd_compat(*model, payload);
      else if (app.got_subcommand(sub_relations))
        cmd_relations(*model, cfg.primitive_only, payload);
      else if (app.got_subcommand(sub_cone))
        cmd_cone(*model, cfg.format, payload);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }

  if (cfg.out_path.empty()) {
    out << payload.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file: " << cfg.out_path << "\n";
      return kExitUsage;
    }
    file << payload.str();
    if (!file.flush()) {
      err << "error: failed writing output file: " << cfg.out_path << "\n";
      return kExitVerificationFailure;
    }
  }
  return code;
}

}  // namespace gcone
