#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilorb/cohomology.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/orbit_enum.hpp"
#include "nilorb/realize.hpp"
#include "nilorb/structure.hpp"
#include "nilorb/verify.hpp"

namespace nilorb::cli {

/**
 * One row of the orbit table, flattened to serializable scalars. p/q hold
 * the form signature for su/so/sp(p,q), the diagram box totals for the
 * remaining signed forms, and stay empty for the sl families.
 */
struct OrbitRecord {
  std::string form;
  std::string partition;
  std::string signs;
  std::optional<int> p;
  std::optional<int> q;
  int fiber_index = 1;
  int fiber_size = 1;
  bool is_zero = false;
  std::optional<int> h1;
  std::optional<int> h2;
  std::string status;
  std::vector<std::string> centralizer_factors;
  int centralizer_dim = 0;
  std::string centralizer;
  std::vector<std::string> compact_factors;
  int compact_dim = 0;
  int compact_dim_z = 0;
  std::string compact;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;

  [[nodiscard]] nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["form"] = form;
    j["partition"] = partition;
    j["signs"] = signs;
    j["p"] = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
    j["q"] = q ? nlohmann::ordered_json(*q) : nlohmann::ordered_json(nullptr);
    j["fiber_index"] = fiber_index;
    j["fiber_size"] = fiber_size;
    j["is_zero"] = is_zero;
    j["h1"] = h1 ? nlohmann::ordered_json(*h1) : nlohmann::ordered_json(nullptr);
    j["h2"] = h2 ? nlohmann::ordered_json(*h2) : nlohmann::ordered_json(nullptr);
    j["status"] = status;
    j["centralizer"] = {{"factors", centralizer_factors},
                        {"dim", centralizer_dim},
                        {"description", centralizer}};
    j["compact"] = {{"factors", compact_factors},
                    {"dim", compact_dim},
                    {"dim_z", compact_dim_z},
                    {"description", compact}};
    return j;
  }

  [[nodiscard]] static OrbitRecord from_json(const nlohmann::ordered_json& j) {
    auto opt_int = [&j](const char* key) -> std::optional<int> {
      if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
      return j.at(key).get<int>();
    };
    OrbitRecord r;
    r.form = j.at("form").get<std::string>();
    r.partition = j.at("partition").get<std::string>();
    r.signs = j.at("signs").get<std::string>();
    r.p = opt_int("p");
    r.q = opt_int("q");
    r.fiber_index = j.at("fiber_index").get<int>();
    r.fiber_size = j.at("fiber_size").get<int>();
    r.is_zero = j.at("is_zero").get<bool>();
    r.h1 = opt_int("h1");
    r.h2 = opt_int("h2");
    r.status = j.at("status").get<std::string>();
    const auto& z = j.at("centralizer");
    r.centralizer_factors = z.at("factors").get<std::vector<std::string>>();
    r.centralizer_dim = z.at("dim").get<int>();
    r.centralizer = z.at("description").get<std::string>();
    const auto& k = j.at("compact");
    r.compact_factors = k.at("factors").get<std::vector<std::string>>();
    r.compact_dim = k.at("dim").get<int>();
    r.compact_dim_z = k.at("dim_z").get<int>();
    r.compact = k.at("description").get<std::string>();
    return r;
  }
};

[[nodiscard]] inline OrbitRecord make_record(const OrbitClass& orbit) {
  OrbitRecord r;
  r.form = orbit.form.name();
  r.partition = orbit.partition.to_text();
  if (orbit.diagram) r.signs = orbit.diagram->to_text();
  if (orbit.form.uses_pq()) {
    r.p = orbit.form.p();
    r.q = orbit.form.q();
  } else if (orbit.diagram) {
    const auto totals = orbit.diagram->signature();
    r.p = totals.first;
    r.q = totals.second;
  }
  r.fiber_index = orbit.fiber_index;
  r.fiber_size = orbit.fiber_size;
  r.is_zero = orbit.is_zero;

  const CohomologyResult c = cohomology(orbit);
  r.status = c.status == CohomologyStatus::Determined ? "determined" : "paper_gap";
  r.h1 = c.h1;
  r.h2 = c.h2;

  const ReductiveStructure z = centralizer_structure(orbit);
  for (const GroupFactor& f : z.factors)
    r.centralizer_factors.push_back(f.to_string() + "^D" + std::to_string(f.part_d));
  r.centralizer_dim = z.dim;
  r.centralizer = z.description;

  const CompactStructure k = maximal_compact_structure(orbit);
  for (const GroupFactor& f : k.factors) r.compact_factors.push_back(f.to_string());
  r.compact_dim = k.dim;
  r.compact_dim_z = k.dim_z;
  r.compact = k.description;
  return r;
}

inline constexpr const char* kCsvHeader =
    "form,partition,signs,p,q,fiber_index,fiber_size,is_zero,h1,h2,status,"
    "centralizer,centralizer_dim,compact,compact_dim,compact_dim_z";

namespace detail {

[[nodiscard]] inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

[[nodiscard]] inline std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

[[nodiscard]] inline std::string csv_row(const OrbitRecord& r) {
  std::vector<std::string> cells = {
      r.form,
      r.partition,
      r.signs,
      opt_to_string(r.p),
      opt_to_string(r.q),
      std::to_string(r.fiber_index),
      std::to_string(r.fiber_size),
      r.is_zero ? "true" : "false",
      opt_to_string(r.h1),
      opt_to_string(r.h2),
      r.status,
      r.centralizer,
      std::to_string(r.centralizer_dim),
      r.compact,
      std::to_string(r.compact_dim),
      std::to_string(r.compact_dim_z),
  };
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ",";
    row += csv_escape(cells[i]);
  }
  return row;
}

struct FormFlags {
  std::string name;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> q;
};

[[nodiscard]] inline RealForm make_form(const FormFlags& flags) {
  const std::string& f = flags.name;
  auto need_n = [&flags, &f]() -> int {
    if (flags.p || flags.q)
      throw InvalidInput("--form " + f + " takes --n, not --p/--q");
    if (!flags.n) throw InvalidInput("--form " + f + " needs --n");
    return *flags.n;
  };
  auto need_pq = [&flags, &f]() -> std::pair<int, int> {
    if (flags.n) throw InvalidInput("--form " + f + " takes --p/--q, not --n");
    if (!flags.p || !flags.q) throw InvalidInput("--form " + f + " needs --p and --q");
    return {*flags.p, *flags.q};
  };
  if (f == "sl_r") return RealForm::sl_r(need_n());
  if (f == "sl_h") return RealForm::sl_h(need_n());
  if (f == "so_star") return RealForm::so_star(need_n());
  if (f == "sp_r") return RealForm::sp_r(need_n());
  if (f == "su") {
    const auto [p, q] = need_pq();
    return RealForm::su(p, q);
  }
  if (f == "so") {
    const auto [p, q] = need_pq();
    return RealForm::so(p, q);
  }
  if (f == "sp_pq") {
    const auto [p, q] = need_pq();
    return RealForm::sp_pq(p, q);
  }
  throw InvalidInput("unknown form: " + f +
                     " (expected sl_r, sl_h, su, so, so_star, sp_r or sp_pq)");
}

/// Splits "<diagram>[:fiber]" into the diagram text and the fiber index.
[[nodiscard]] inline std::pair<std::string, int> split_orbit_text(const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) return {text, 1};
  const std::string suffix = text.substr(pos + 1);
  if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad fiber suffix in orbit: " + text);
  return {text.substr(0, pos), std::stoi(suffix)};
}

struct Sink {
  std::ostream* stream;
  std::ofstream file;

  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream = &fallback;
    } else {
      file.open(path);
      if (!file) throw InvalidInput("cannot open output file: " + path);
      stream = &file;
    }
  }
};

inline int cmd_orbits(const FormFlags& flags, bool as_json, bool as_csv,
                      const std::string& out_path, std::ostream& out) {
  const RealForm form = make_form(flags);
  Sink sink(out_path, out);
  std::vector<OrbitRecord> records;
  for (const OrbitClass& orbit : enumerate_orbits(form)) records.push_back(make_record(orbit));

  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const OrbitRecord& r : records) j.push_back(r.to_json());
    *sink.stream << j.dump(2) << "\n";
  } else if (as_csv) {
    *sink.stream << kCsvHeader << "\n";
    for (const OrbitRecord& r : records) *sink.stream << csv_row(r) << "\n";
  } else {
    *sink.stream << form.name() << ": " << records.size() << " orbit classes\n";
    for (const OrbitRecord& r : records) {
      std::string orbit_text = r.signs.empty() ? r.partition : r.signs;
      if (r.fiber_size > 1) orbit_text += ":" + std::to_string(r.fiber_index);
      *sink.stream << "  " << orbit_text << "  h1=" << opt_to_string(r.h1)
                   << " h2=" << opt_to_string(r.h2) << " status=" << r.status
                   << "  Z=" << r.centralizer << " (dim " << r.centralizer_dim << ")"
                   << "  K=" << r.compact << " (dim " << r.compact_dim << ", z "
                   << r.compact_dim_z << ")\n";
    }
  }
  return 0;
}

inline int cmd_cohomology(const FormFlags& flags, const std::string& orbit_text, bool explain,
                          bool as_json, const std::string& out_path, std::ostream& out) {
  const RealForm form = make_form(flags);
  const auto [diagram_text, fiber] = split_orbit_text(orbit_text);
  const OrbitClass orbit = parse_orbit(form, diagram_text, fiber);
  const CohomologyResult c = cohomology(orbit);
  const std::string status =
      c.status == CohomologyStatus::Determined ? "determined" : "paper_gap";

  Sink sink(out_path, out);
  if (as_json) {
    nlohmann::ordered_json j;
    j["form"] = form.name();
    j["orbit"] = orbit.orbit_text();
    j["h1"] = c.h1 ? nlohmann::ordered_json(*c.h1) : nlohmann::ordered_json(nullptr);
    j["h2"] = c.h2 ? nlohmann::ordered_json(*c.h2) : nlohmann::ordered_json(nullptr);
    j["status"] = status;
    if (explain) {
      j["h1_case"] = c.h1_case;
      j["h2_case"] = c.h2_case;
    }
    *sink.stream << j.dump(2) << "\n";
  } else {
    *sink.stream << "form: " << form.name() << "\n";
    *sink.stream << "orbit: " << orbit.orbit_text() << "\n";
    *sink.stream << "h1: " << opt_to_string(c.h1) << "\n";
    *sink.stream << "h2: " << opt_to_string(c.h2) << "\n";
    *sink.stream << "status: " << status << "\n";
    if (explain) {
      *sink.stream << "h1 case: " << c.h1_case << "\n";
      *sink.stream << "h2 case: " << c.h2_case << "\n";
    }
  }
  return c.status == CohomologyStatus::PaperGap ? 3 : 0;
}

inline int cmd_realize(const FormFlags& flags, const std::string& orbit_text, bool check,
                       const std::string& out_path, std::ostream& out, std::ostream& err) {
  const RealForm form = make_form(flags);
  const auto [diagram_text, fiber] = split_orbit_text(orbit_text);
  const OrbitClass orbit = parse_orbit(form, diagram_text, fiber);
  const MatrixRealization realization = realize_orbit(orbit);

  if (check) {
    const CheckReport report = verify_realization(realization);
    for (const CheckItem& item : report.items) {
      out << "check " << item.name << ": " << (item.pass ? "pass" : "FAIL");
      if (!item.detail.empty()) out << " (" << item.detail << ")";
      out << "\n";
    }
    if (!report.ok()) {
      err << "realization check failed for " << orbit.orbit_text() << "\n";
      return 1;
    }
  }

  Sink sink(out_path, out);
  *sink.stream << realization.to_json().dump(2) << "\n";
  return 0;
}

inline int cmd_verify(int max_n, std::ostream& out) {
  const std::vector<SuiteResult> suites = run_all_suites(max_n);
  int total_checks = 0;
  int failed_suites = 0;
  for (const SuiteResult& suite : suites) {
    total_checks += suite.checks;
    if (suite.ok()) {
      out << "suite " << suite.name << ": ok (" << suite.checks << " checks)\n";
    } else {
      ++failed_suites;
      out << "suite " << suite.name << ": FAIL (" << suite.failures.size() << " of "
          << suite.checks << " checks failed)\n";
      for (const std::string& failure : suite.failures) out << "  - " << failure << "\n";
    }
  }
  if (failed_suites == 0) {
    out << "all suites passed (" << total_checks << " checks)\n";
    return 0;
  }
  out << failed_suites << " suite(s) failed\n";
  return 1;
}

}  // namespace detail

/**
 * Runs the command line given as plain (not reversed) arguments, writing to
 * the supplied streams. Returns the process exit code: 0 ok, 1 verification
 * failure, 2 usage or input error, 3 value not determined by the case lists.
 */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent adjoint orbits of the non-compact classical real Lie algebras: "
               "classification, cohomology and exact matrix models"};
  app.require_subcommand(1);

  detail::FormFlags flags;
  std::string orbit_text;
  std::string out_path;
  bool as_json = false;
  bool as_csv = false;
  bool explain = false;
  bool check = false;
  int max_n = 5;

  auto add_form_flags = [&flags](CLI::App* cmd) {
    cmd->add_option("--form", flags.name,
                    "Real form family: sl_r, sl_h, su, so, so_star, sp_r, sp_pq")
        ->required();
    cmd->add_option("--n", flags.n, "Size parameter for sl_r, sl_h, so_star, sp_r");
    cmd->add_option("--p", flags.p, "First signature parameter for su, so, sp_pq");
    cmd->add_option("--q", flags.q, "Second signature parameter for su, so, sp_pq");
  };

  CLI::App* orbits = app.add_subcommand("orbits", "List every orbit class of a real form");
  add_form_flags(orbits);
  CLI::Option* json_flag = orbits->add_flag("--json", as_json, "Emit JSON records");
  orbits->add_flag("--csv", as_csv, "Emit CSV records")->excludes(json_flag);
  orbits->add_option("--out", out_path, "Write the table to a file");

  CLI::App* cohomology_cmd =
      app.add_subcommand("cohomology", "Second and first de Rham cohomology of one orbit");
  add_form_flags(cohomology_cmd);
  cohomology_cmd->add_option("--orbit", orbit_text, "Orbit as <diagram>[:fiber]")->required();
  cohomology_cmd->add_flag("--explain", explain, "Also print which case of the theorem fired");
  cohomology_cmd->add_flag("--json", as_json, "Emit a JSON record");
  cohomology_cmd->add_option("--out", out_path, "Write the record to a file");

  CLI::App* realize =
      app.add_subcommand("realize", "Exact matrix model (triple and invariant form) of one orbit");
  add_form_flags(realize);
  realize->add_option("--orbit", orbit_text, "Orbit as <diagram>[:fiber]")->required();
  realize->add_flag("--check", check, "Verify the model before printing it");
  realize->add_option("--out", out_path, "Write the realization JSON to a file");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--max-n", max_n, "Size bound for the swept suites (default 5, minimum 2)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(orbits))
      return detail::cmd_orbits(flags, as_json, as_csv, out_path, out);
    if (app.got_subcommand(cohomology_cmd))
      return detail::cmd_cohomology(flags, orbit_text, explain, as_json, out_path, out);
    if (app.got_subcommand(realize))
      return detail::cmd_realize(flags, orbit_text, check, out_path, out, err);
    if (app.got_subcommand(verify)) return detail::cmd_verify(max_n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nilorb::cli
