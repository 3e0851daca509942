#include "mappeel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mappeel/count_table.hpp"
#include "mappeel/enumerate.hpp"
#include "mappeel/errors.hpp"
#include "mappeel/oracle.hpp"
#include "mappeel/verify.hpp"

namespace mappeel {

namespace {

struct Options {
  std::string format = "csv";
  std::string output;

  std::string count_kind;
  int max_n = -1;
  int n = -1, p = -1, q = -1;

  std::string identity;
  int order = 30;

  std::string oracle_mode;
  std::string family;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pair_list_json(const std::vector<std::pair<int, int>>& cells) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [n, p] : cells) j.push_back({{"n", n}, {"p", p}});
  return j.dump();
}

void require_max_n(const Options& o) {
  if (o.max_n < 2) throw UsageError("--max-n must be >= 2");
}

// Returns the rendered table.
std::string cmd_count(const Options& o) {
  const bool json = o.format == "json";
  const std::string& kind = o.count_kind;
  if (kind == "quad" || kind == "tri") {
    require_max_n(o);
    const CountTable t = table_from_series(kind == "quad" ? quad_counts(o.max_n) : tri_counts(o.max_n), 2);
    return json ? t.to_json().dump(2) + "\n" : t.to_csv();
  }
  if (kind == "quad-boundary") {
    require_max_n(o);
    const CountTable t = table_from_series(quad_boundary_table(o.max_n), 1);
    return json ? t.to_json().dump(2) + "\n" : t.to_csv();
  }
  if (kind == "tri-boundary") {
    require_max_n(o);
    const TriBoundaryTable tb = tri_boundary_table(o.max_n);
    const CountTable t = table_from_series(tb.table, 1);
    if (!json) return t.to_csv();
    nlohmann::json j = t.to_json();
    j["oracle_filled"] = nlohmann::json::parse(pair_list_json(tb.oracle_filled));
    j["seeded"] = nlohmann::json::parse(pair_list_json(tb.seeded));
    return j.dump(2) + "\n";
  }
  // quad-two / tri-two
  const bool quad = kind == "quad-two";
  const bool single = o.n >= 0 || o.p >= 0 || o.q >= 0;
  CountTable t({"n", "p", "q"});
  if (single) {
    if (o.n < 1 || o.p < 1 || o.q < 1) throw UsageError("--n, --p and --q must all be given and >= 1");
    t.set({o.n, o.p, o.q}, quad ? quad_two_boundary_cell(o.n, o.p, o.q) : tri_two_boundary_cell(o.n, o.p, o.q));
  } else {
    if (o.max_n < 1) throw UsageError("give --n, --p, --q or --max-n");
    t = quad ? quad_two_boundary(o.max_n) : tri_two_boundary(o.max_n);
  }
  return json ? t.to_json().dump(2) + "\n" : t.to_csv();
}

std::string render(const std::vector<VerificationReport>& reports, bool json) {
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    return j.dump(2) + "\n";
  }
  std::string s = "identity,order,status,n,p,lhs,rhs\n";
  for (const auto& r : reports) {
    s += r.identity + "," + std::to_string(r.order) + "," + (r.passed ? "pass" : "fail");
    if (r.first_failure) {
      const Failure& f = *r.first_failure;
      s += "," + std::to_string(f.n) + "," + (f.p ? std::to_string(*f.p) : "") + "," + f.lhs.get_str() + "," +
           f.rhs.get_str();
    } else {
      s += ",,,,";
    }
    s += "\n";
  }
  return s;
}

std::string render(const OracleReport& r, bool json) {
  if (json) return to_json(r).dump(2) + "\n";
  std::string s = "family,check,max_n,instances,status,first_mismatch\n";
  for (const auto& c : r.checks)
    s += to_string(r.family) + "," + c.name + "," + std::to_string(r.max_n) + "," + std::to_string(c.instances) + "," +
         (c.ok ? "pass" : "fail") + "," + csv_field(c.first_mismatch) + "\n";
  return s;
}

int emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << o.output << " for writing\n";
    return kExitUsage;
  }
  f << text;
  return f ? kExitOk : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact enumeration of planar quadrangulations and triangulations via peeling trees", "mappeel"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "Write to this file instead of standard output");
  };

  CLI::App* count = app.add_subcommand("count", "Print an exact count table");
  count->add_option("kind", o.count_kind, "Table to compute")
      ->required()
      ->check(CLI::IsMember({"quad", "tri", "quad-boundary", "tri-boundary", "quad-two", "tri-two"}));
  count->add_option("--max-n", o.max_n, "Largest n");
  count->add_option("--n", o.n, "Two-boundary cell: n");
  count->add_option("--p", o.p, "Two-boundary cell: first perimeter label");
  count->add_option("--q", o.q, "Two-boundary cell: second perimeter label");
  add_common(count);

  CLI::App* verify = app.add_subcommand("verify", "Check generating-function identities coefficient by coefficient");
  std::vector<std::string> identity_choices = identity_names();
  identity_choices.push_back("all");
  verify->add_option("--identity", o.identity, "Identity name or 'all'")->required();
  verify->add_option("--order", o.order, "Truncation order")->capture_default_str();
  add_common(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "Cross-check against brute-force oracles");
  oracle->add_option("mode", o.oracle_mode, "compare or roundtrip")->required()->check(CLI::IsMember({"compare", "roundtrip"}));
  oracle->add_option("--family", o.family, "quad or tri")->required()->check(CLI::IsMember({"quad", "tri"}));
  oracle->add_option("--max-n", o.max_n, "Largest n (default 8 for compare, 6 for roundtrip)");
  add_common(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return emit(o, cmd_count(o), out, err);

    if (verify->parsed()) {
      if (o.identity != "all" && std::find(identity_choices.begin(), identity_choices.end(), o.identity) == identity_choices.end())
        throw UsageError("unknown identity '" + o.identity + "'");
      const std::vector<VerificationReport> reports =
          o.identity == "all" ? verify_all(o.order) : std::vector<VerificationReport>{verify_identity(o.identity, o.order)};
      const int rc = emit(o, render(reports, o.format == "json"), out, err);
      if (rc != kExitOk) return rc;
      const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
      return all_pass ? kExitOk : kExitMismatch;
    }

    // oracle
    const Family family = family_from_string(o.family);
    const bool compare = o.oracle_mode == "compare";
    if (o.max_n == -1) o.max_n = compare ? 8 : 6;
    require_max_n(o);
    const OracleReport r = compare ? oracle_compare(family, o.max_n) : oracle_roundtrip(family, o.max_n);
    const int rc = emit(o, render(r, o.format == "json"), out, err);
    if (rc != kExitOk) return rc;
    if (!r.ok()) {
      for (const auto& c : r.checks)
        if (!c.ok) err << "mismatch in " << c.name << ": " << c.first_mismatch << "\n";
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const DomainError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitIntegrity;
  }
}

}  // namespace mappeel
