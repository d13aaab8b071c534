#include "etaq/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "etaq/cli/json_io.hpp"
#include "etaq/dimension.hpp"
#include "etaq/enumerate.hpp"
#include "etaq/errors.hpp"
#include "etaq/hecke.hpp"
#include "etaq/table.hpp"
#include "etaq/verify.hpp"

namespace etaq::cli {
namespace {

struct EtaArgs {
  std::int64_t level = 0;
  std::string eta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--level", level, "Level N")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--eta", eta, "Exponents, e.g. \"1^{4}2^{-2}\"")->required();
  }
  EtaQuotient parse() const { return EtaQuotient::parse(level, eta); }
};

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("not a rational number: " + s);
  q.canonicalize();
  return q;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int cmd_expand(const EtaArgs& a, std::size_t prec, bool as_json, std::ostream& out) {
  const QSeries f = eta_quotient_expansion(a.parse(), prec);
  if (as_json) {
    out << to_json(f).dump() << '\n';
    return kSuccess;
  }
  const Rational offset = f.offset();
  for (std::size_t j = 0; j < f.precision(); ++j) {
    out << Rational(offset + static_cast<long>(j)).get_str() << '\t' << f[j].get_str() << '\n';
  }
  return kSuccess;
}

int cmd_invariants(const EtaArgs& a, bool as_json, std::ostream& out) {
  const EtaQuotient e = a.parse();
  const DerivedInvariants inv = derive(e);
  if (as_json) {
    auto j = to_json(e, inv);
    j["holomorphic"] = is_holomorphic(e);
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "level\t" << e.level() << '\n'
      << "r\t" << e.to_string() << '\n'
      << "k\t" << inv.k.get_str() << '\n'
      << "Pi\t" << inv.pi.get_str() << '\n'
      << "Pi_sf\t" << inv.pi_sf.get_str() << '\n'
      << "m_r\t" << inv.m_r << '\n'
      << "delta\t" << inv.delta << '\n'
      << "x_N\t" << inv.x_n.get_str() << '\n';
  for (const auto& [c, x] : inv.x_c) out << "x_" << c << '\t' << x.get_str() << '\n';
  out << "holomorphic\t" << (is_holomorphic(e) ? "yes" : "no") << '\n';
  return kSuccess;
}

int cmd_dim(const EtaArgs& a, std::ostream& out) {
  out << dimension(a.parse()).get_str() << '\n';
  return kSuccess;
}

int cmd_coeff(const EtaArgs& a, std::int64_t l, bool unverified, std::ostream& out) {
  const auto policy = unverified ? EntryPolicy::allow_unverified : EntryPolicy::catalog_only;
  out << closed_coefficient(HeckeContext(a.parse(), l), policy).get_str() << '\n';
  return kSuccess;
}

int cmd_hecke(const EtaArgs& a, std::int64_t l, const std::string& n_text, std::optional<std::size_t> prec,
              bool general, bool special, std::ostream& out) {
  const Rational n = parse_rational(n_text);
  const EtaQuotient e = a.parse();
  const HeckeContext ctx(e, l);
  std::size_t precision = 1;
  if (prec) {
    precision = *prec;
  } else {
    const Integer top = floor(Rational(n * l - ctx.invariants().x_n / Rational(24)));
    precision = top < 0 ? 1 : static_cast<std::size_t>(top.get_ui()) + 1;
  }
  const QSeries f = eta_quotient_expansion(e, precision);
  out << "simplified\t" << scaled_transform_simplified(ctx, n, f).to_string() << '\n';
  if (special) out << "special\t" << scaled_transform_special(ctx, n, f).to_string() << '\n';
  if (general) {
    const auto z = transform_general(ctx, n, f);
    std::ostringstream s;
    s.precision(17);
    s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    out << "general\t" << s.str() << '\n';
  }
  return kSuccess;
}

int cmd_verify(bool all, std::optional<std::size_t> id, std::size_t prec, unsigned jobs, bool as_json,
               std::ostream& out, std::ostream& err) {
  const auto& table = load_table();
  std::vector<TableEntry> rows;
  if (all) {
    rows = table;
  } else {
    if (*id < 1 || *id > table.size()) {
      err << "error: --id must be between 1 and " << table.size() << '\n';
      return kUsage;
    }
    rows.push_back(table[*id - 1]);
  }
  const auto reports = verify_entries(rows, prec, jobs);
  std::size_t ok = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    ok += r.verified() ? 1 : 0;
    if (as_json) {
      arr.push_back(to_json(r));
      continue;
    }
    out << "row " << r.entry_id << "\tN=" << r.level << '\t' << r.r_string << '\t'
        << (r.verified() ? "verified" : "MISMATCH") << "\tl tested " << r.l_tested.size() << "\teigen checks "
        << r.eigen_checks << "\tdim " << r.dimension.get_str() << '\n';
    for (const auto& m : r.mismatches) {
      out << "  " << to_string(m.kind) << ' ' << m.what << ": expected " << m.expected << ", got " << m.got << '\n';
    }
  }
  if (as_json) {
    out << arr.dump() << '\n';
  } else {
    out << "verified " << ok << '/' << reports.size() << " at precision " << prec << '\n';
  }
  return ok == reports.size() ? kSuccess : kMismatch;
}

int cmd_enumerate(std::int64_t level, std::int64_t bound, unsigned jobs, std::ostream& out) {
  const auto rec = reconstruct_level({.level = level, .bound = bound, .jobs = jobs});
  const char* found_tag = rec.candidate_only ? "candidate" : "table";
  for (const auto& e : rec.found) {
    const bool extra = std::find(rec.surplus.begin(), rec.surplus.end(), e) != rec.surplus.end();
    out << (extra && !rec.candidate_only ? "surplus" : found_tag) << '\t' << e.to_string() << '\n';
  }
  for (const auto& e : rec.missing) out << "missing\t" << e.to_string() << '\n';
  out << "found " << rec.found.size() << ", missing " << rec.missing.size() << ", surplus "
      << (rec.candidate_only ? 0 : rec.surplus.size()) << " (|r_n| <= " << bound << ")"
      << (rec.candidate_only ? ", candidate-only level" : "") << '\n';
  if (!rec.candidate_only && !rec.surplus.empty()) {
    out << "note: surplus rows are findings; the search is complete only within the box\n";
  }
  return rec.reproduces_table() ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eta-quotient expansions, invariants, dimensions and Hecke transforms", "etaq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "etaq 0.1.0");

  EtaArgs eta;
  std::size_t prec = 500;
  bool as_json = false;
  std::int64_t l = 1;
  bool unverified = false;
  std::string n_text;
  std::optional<std::size_t> hecke_prec;
  bool general = false;
  bool special = false;
  bool all = false;
  std::optional<std::size_t> id;
  unsigned jobs = default_jobs();
  std::int64_t bound = 20;
  std::int64_t level = 0;

  auto* expand = app.add_subcommand("expand", "q-expansion coefficients up to precision");
  eta.attach(expand);
  expand->add_option("--prec", prec, "Number of coefficients")->capture_default_str()->check(CLI::PositiveNumber);
  expand->add_flag("--json", as_json, "Emit the QSeries JSON schema");

  auto* invariants = app.add_subcommand("invariants", "k, Pi, Pi', m_r, delta and cusp data");
  eta.attach(invariants);
  invariants->add_flag("--json", as_json, "Emit JSON");

  auto* dim = app.add_subcommand("dim", "Dimension of the ambient space of modular forms");
  eta.attach(dim);

  auto* coeff = app.add_subcommand("coeff", "Closed-formula coefficient c_f(l)");
  eta.attach(coeff);
  coeff->add_option("--l", l, "Index, l = 1 mod m_r")->required();
  coeff->add_flag("--unverified", unverified, "Allow eta-quotients outside the table");

  auto* hecke = app.add_subcommand("hecke", "l^{k/2-1} times the n-th coefficient of T_l f");
  eta.attach(hecke);
  hecke->add_option("--l", l, "Index, l = 1 mod m_r")->required();
  hecke->add_option("--n", n_text, "Exponent n (integer or p/q)")->required();
  hecke->add_option("--prec", hecke_prec, "Expansion precision (default: floor(l n - x_N/24) + 1)");
  hecke->add_flag("--general", general, "Also evaluate the full double sum in floating point");
  hecke->add_flag("--special", special, "Also evaluate the single-sum special case");

  auto* verify = app.add_subcommand("verify", "Verify table rows end to end");
  auto* all_opt = verify->add_flag("--all", all, "Every row");
  auto* id_opt = verify->add_option("--id", id, "1-based row number");
  all_opt->excludes(id_opt);
  verify->add_option("--prec", prec, "Expansion precision B")->capture_default_str()->check(CLI::Range(2, 1000000));
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Emit reports as JSON");

  auto* enumerate = app.add_subcommand("enumerate", "Search the exponent box for dimension-one eta-quotients");
  enumerate->add_option("--level", level, "Level N")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--bound", bound, "Largest |r_n|")->capture_default_str()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Print the embedded table as TSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion& v) {
    out << v.what() << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    if (*expand) return cmd_expand(eta, prec, as_json, out);
    if (*invariants) return cmd_invariants(eta, as_json, out);
    if (*dim) return cmd_dim(eta, out);
    if (*coeff) return cmd_coeff(eta, l, unverified, out);
    if (*hecke) return cmd_hecke(eta, l, n_text, hecke_prec, general, special, out);
    if (*verify) {
      if (!all && !id) {
        err << "error: verify needs --all or --id\n";
        return kUsage;
      }
      return cmd_verify(all, id, prec, jobs, as_json, out, err);
    }
    if (*enumerate) return cmd_enumerate(level, bound, jobs, out);
    if (*table) {
      out << table_tsv();
      return kSuccess;
    }
  } catch (const InadmissibleIndex& ex) {
    err << "error: l = " << ex.l() << " is not 1 mod m_r = " << ex.m_r() << '\n';
    return kUsage;
  } catch (const NotInCatalog& ex) {
    err << "error: " << ex.what() << " (pass --unverified to evaluate anyway)\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace etaq::cli
