#include "segeuler/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "segeuler/eulerian_polys.hpp"
#include "segeuler/identities.hpp"
#include "segeuler/scqsym.hpp"
#include "segeuler/segcomp.hpp"
#include "segeuler/segperm.hpp"
#include "segeuler/tables.hpp"

namespace segeuler::cli {

namespace {

struct TableOptions {
  std::string format = "text";
  int n = -1;  // single K slice when >= 1
  int n_max = 6;
  std::string method;
  int column = -1;
  int diagonal = -1;
  int fix_i = -1;
  int fix_j = -1;
  long long offset = 0;
  int oracle_cap = SegmentedPermutation::kDefaultEnumerationCap;
};

KMethod parse_k_method(const std::string& name) {
  if (name == "enumerate") return KMethod::enumerate;
  if (name == "recurrence-n") return KMethod::recurrence_n;
  if (name == "recurrence-j") return KMethod::recurrence_j;
  if (name == "closed-form") return KMethod::closed_form;
  throw CLI::ValidationError("--method", "unknown K method '" + name + "'");
}

std::vector<CountTable> gather_tables(char kind, const TableOptions& options) {
  switch (kind) {
    case 'T':
      return t_tables_up_to(options.n_max,
                            options.method == "sum" ? TMethod::sum : TMethod::recurrence);
    case 'K': {
      KMethod method = parse_k_method(options.method.empty() ? "recurrence-n" : options.method);
      if (options.n >= 1) return {k_table(options.n, method, options.oracle_cap)};
      std::vector<CountTable> slices;
      for (int n = 1; n <= options.n_max; ++n)
        slices.push_back(k_table(n, method, options.oracle_cap));
      return slices;
    }
    case 'A': {
      std::vector<CountTable> rows;
      for (int n = 0; n <= options.n_max; ++n) {
        CountTable table;
        table.n = n;
        table.method = "recurrence";
        auto row = eulerian_row(n);
        for (int k = 0; k < static_cast<int>(row.size()); ++k) table.entries[{k}] = row[k];
        rows.push_back(std::move(table));
      }
      return rows;
    }
    case 'S': {
      std::vector<CountTable> rows;
      for (int n = 0; n <= options.n_max; ++n) {
        CountTable table;
        table.n = n;
        table.method = "recurrence";
        for (int k = 0; k <= n; ++k) table.entries[{k}] = stirling2(n, k);
        rows.push_back(std::move(table));
      }
      return rows;
    }
  }
  throw std::invalid_argument("unknown table kind");
}

std::string tables_text(char kind, const std::vector<CountTable>& tables) {
  std::string out;
  if (kind == 'K') {
    for (const auto& slice : tables) {
      out += "n=" + std::to_string(slice.n) + " (rows j, columns i):\n";
      for (int j = 0; j < slice.n; ++j) {
        out += "  j=" + std::to_string(j) + ":";
        for (int i = 0; i + j < slice.n; ++i) out += " " + slice.value({i, j}).str();
        out += "\n";
      }
    }
    return out;
  }
  for (const auto& row : tables) {
    out += std::to_string(row.n) + ":";
    for (const auto& [index, v] : row.entries) out += " " + v.str();
    out += "\n";
  }
  return out;
}

std::string tables_bfile(char kind, const std::vector<CountTable>& tables,
                         const TableOptions& options) {
  std::vector<std::pair<long long, Int>> rows;
  if (kind == 'K') {
    if (options.fix_i < 0 || options.fix_j < 0)
      throw CLI::ValidationError("--format",
                                 "bfile export of K needs --i and --j to select a sequence");
    for (const auto& slice : tables)
      if (options.fix_i + options.fix_j < slice.n)
        rows.emplace_back(slice.n + options.offset,
                          slice.value({options.fix_i, options.fix_j}));
  } else if (options.column >= 0) {
    for (const auto& table : tables)
      if (table.entries.count({options.column}) != 0)
        rows.emplace_back(table.n + options.offset, table.value({options.column}));
  } else if (options.diagonal >= 0) {
    for (const auto& table : tables) {
      int k = table.n - options.diagonal;
      if (k >= 0 && table.entries.count({k}) != 0)
        rows.emplace_back(table.n + options.offset, table.value({k}));
    }
  } else {
    throw CLI::ValidationError("--format",
                               "bfile export needs --column or --diagonal to select a sequence");
  }
  return bfile(rows);
}

std::string render_table(char kind, const TableOptions& options) {
  auto tables = gather_tables(kind, options);
  if (options.format == "text") return tables_text(kind, tables);
  if (options.format == "json") return tables_json(tables) + "\n";
  if (options.format == "csv") return tables_csv(tables);
  if (options.format == "latex") return kind == 'K' ? k_latex(tables) : t_latex(tables);
  if (options.format == "bfile") return tables_bfile(kind, tables, options);
  throw CLI::ValidationError("--format", "unknown format '" + options.format + "'");
}

std::string render_poly(const std::string& family, int n, const std::string& format) {
  BiPoly poly;
  if (family == "alpha") {
    poly = alpha_poly(n);
  } else if (family == "P") {
    poly = named_poly(PolyFamily::P, n);
  } else if (family == "A") {
    poly = named_poly(PolyFamily::A, n);
  } else if (family == "B") {
    poly = named_poly(PolyFamily::B, n);
  } else {
    throw CLI::ValidationError("poly", "unknown family '" + family + "'");
  }
  if (format == "json") return poly.json() + "\n";
  if (format == "text") return poly.str() + "\n";
  throw CLI::ValidationError("--format", "polynomials support text or json output");
}

VerificationReport aggregate(const std::string& name, const std::string& ranges,
                             const std::vector<VerificationReport>& parts) {
  VerificationReport total;
  total.name = name;
  total.ranges = ranges;
  for (const auto& part : parts) {
    total.elapsed_seconds += part.elapsed_seconds;
    if (!part.pass && total.pass) {
      total.pass = false;
      total.counterexample = part.name + ": " + part.counterexample;
    }
  }
  return total;
}

struct VerifyOptions {
  int n_max = 7;
  int order = 8;
  int samples = 0;  // 0 = (order+1)^2
  std::uint64_t seed = 42;
  int terms = 300;
  int k_max = 12;
  int r_max = 4;
  int n = -1;
  int r = 0;
  std::string t0 = "";
  std::string variant = "corrected";
  int unimodality_n_max = 40;
  std::string format = "text";

  int effective_samples() const { return samples > 0 ? samples : (order + 1) * (order + 1); }
  DobinskiVariant dobinski_variant() const {
    return variant == "printed" ? DobinskiVariant::printed : DobinskiVariant::corrected;
  }
  WorpitzkyVariant worpitzky_variant() const {
    return variant == "printed" ? WorpitzkyVariant::printed : WorpitzkyVariant::corrected;
  }
};

VerificationReport run_dobinski_grid(const VerifyOptions& options) {
  std::vector<VerificationReport> parts;
  std::vector<Rat> points{Rat(0), Rat(1, 2), Rat(-1, 2)};
  int n_top = std::min(options.n_max, 5);
  for (int n = 1; n <= n_top; ++n)
    for (const Rat& t0 : points)
      parts.push_back(verify_dobinski(n, t0, options.terms, options.dobinski_variant()));
  return aggregate(parts.front().name,
                   "n <= " + std::to_string(n_top) + ", t0 in {0, 1/2, -1/2}, " +
                       std::to_string(options.terms) + " exact terms",
                   parts);
}

VerificationReport run_worpitzky_grid(const VerifyOptions& options) {
  std::vector<VerificationReport> parts;
  int n_top = std::min(options.n_max, 6);
  KTables kt = KTables::build(n_top);
  for (int n = 1; n <= n_top; ++n)
    for (int r = 0; r <= options.r_max; ++r)
      parts.push_back(verify_worpitzky(n, r, options.k_max, options.worpitzky_variant(), &kt));
  return aggregate(parts.front().name,
                   "n <= " + std::to_string(n_top) + ", r <= " + std::to_string(options.r_max) +
                       ", k <= " + std::to_string(options.k_max),
                   parts);
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                 std::ostream& out) {
  bool all_pass = true;
  if (format == "json") {
    out << "[";
    for (std::size_t p = 0; p < reports.size(); ++p)
      out << (p > 0 ? "," : "") << reports[p].json();
    out << "]\n";
  } else {
    for (const auto& report : reports) out << report.text() << "\n";
  }
  for (const auto& report : reports) all_pass = all_pass && report.pass;
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tables, polynomials and identity checks for descent statistics "
               "on segmented permutations"};
  app.require_subcommand(1);
  std::function<int()> action;

  // --- enumerate ---------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "list segmented compositions or permutations");
  enumerate->require_subcommand(1);
  struct {
    int n = 3;
    std::string format = "text";
    int oracle_cap = SegmentedPermutation::kDefaultEnumerationCap;
    std::optional<int> des, seg;
  } enum_options;

  auto* comps = enumerate->add_subcommand("comps", "segmented compositions of n");
  comps->add_option("--n", enum_options.n, "size")->required();
  comps->add_option("--format", enum_options.format)->check(CLI::IsMember({"text", "json"}));
  comps->callback([&] {
    action = [&]() {
      bool json = enum_options.format == "json";
      if (json) out << "[";
      bool first = true;
      SegmentedComposition::for_each(enum_options.n, [&](const SegmentedComposition& c) {
        if (json) {
          out << (first ? "" : ",") << "\"" << c.str() << "\"";
        } else {
          out << c.str() << "\n";
        }
        first = false;
      });
      if (json) out << "]\n";
      return 0;
    };
  });

  auto* perms = enumerate->add_subcommand("perms", "segmented permutations of n");
  perms->add_option("--n", enum_options.n, "size")->required();
  perms->add_option("--des", enum_options.des, "keep only this descent count");
  perms->add_option("--seg", enum_options.seg, "keep only this bar count");
  perms->add_option("--format", enum_options.format)->check(CLI::IsMember({"text", "json"}));
  perms->add_option("--oracle-cap", enum_options.oracle_cap, "largest n the enumerator accepts");
  perms->callback([&] {
    action = [&]() {
      SegmentedPermutation::Filter filter{enum_options.des, enum_options.seg};
      bool json = enum_options.format == "json";
      if (json) out << "[";
      bool first = true;
      SegmentedPermutation::for_each(enum_options.n, [&](const SegmentedPermutation& s) {
        if (json) {
          out << (first ? "" : ",") << "\"" << s.str() << "\"";
        } else {
          out << s.str() << "\n";
        }
        first = false;
      }, filter, enum_options.oracle_cap);
      if (json) out << "]\n";
      return 0;
    };
  });

  // --- table / export ----------------------------------------------------
  TableOptions table_options;
  std::string table_kind;
  std::string export_what;
  std::string export_output;
  int poly_n = 3;
  std::string poly_format = "text";

  auto add_table_flags = [&](CLI::App* sub) {
    sub->add_option("--n-max", table_options.n_max, "largest n to include");
    sub->add_option("--n", table_options.n, "single K slice");
    sub->add_option("--method", table_options.method,
                    "T: recurrence|sum; K: enumerate|recurrence-n|recurrence-j|closed-form");
    sub->add_option("--format", table_options.format)
        ->check(CLI::IsMember({"text", "json", "csv", "latex", "bfile"}));
    sub->add_option("--column", table_options.column, "bfile: fix k, vary n");
    sub->add_option("--diagonal", table_options.diagonal, "bfile: fix n-k, vary n");
    sub->add_option("--i", table_options.fix_i, "bfile for K: fix the descent count");
    sub->add_option("--j", table_options.fix_j, "bfile for K: fix the bar count");
    sub->add_option("--offset", table_options.offset, "bfile index offset");
    sub->add_option("--oracle-cap", table_options.oracle_cap,
                    "largest n the enumeration method accepts");
  };

  auto* table = app.add_subcommand("table", "compute a counting table");
  table->require_subcommand(1);
  for (const char* kind : {"T", "K", "A", "S"}) {
    auto* sub = table->add_subcommand(kind);
    add_table_flags(sub);
    sub->callback([&, kind] {
      table_kind = kind;
      action = [&]() {
        out << render_table(table_kind[0], table_options);
        return 0;
      };
    });
  }

  // --- poly ----------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "print a polynomial");
  poly->require_subcommand(1);
  for (const char* family : {"alpha", "P", "A", "B"}) {
    auto* sub = poly->add_subcommand(family);
    sub->add_option("--n", poly_n, "degree index")->required();
    sub->add_option("--format", poly_format)->check(CLI::IsMember({"text", "json"}));
    sub->callback([&, family] {
      action = [&, family]() {
        out << render_poly(family, poly_n, poly_format);
        return 0;
      };
    });
  }

  // --- export --------------------------------------------------------------
  auto* exporter = app.add_subcommand("export", "write a table or polynomial to a file");
  exporter->add_option("what", export_what, "table-T|table-K|table-A|table-S|poly-alpha|poly-P|poly-A|poly-B")
      ->required();
  add_table_flags(exporter);
  exporter->add_option("--output", export_output, "destination path")->required();
  exporter->callback([&] {
    action = [&]() {
      std::string payload;
      if (export_what.rfind("table-", 0) == 0 && export_what.size() == 7) {
        payload = render_table(export_what[6], table_options);
      } else if (export_what.rfind("poly-", 0) == 0) {
        int n = table_options.n >= 0 ? table_options.n : table_options.n_max;
        payload = render_poly(export_what.substr(5), n, table_options.format);
      } else {
        throw CLI::ValidationError("what", "unknown export target '" + export_what + "'");
      }
      std::ofstream file(export_output);
      if (!file) throw std::runtime_error("cannot open '" + export_output + "' for writing");
      file << payload;
      out << "wrote " << export_output << "\n";
      return 0;
    };
  });

  // --- verify --------------------------------------------------------------
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run identity verifications");
  verify->require_subcommand(1);
  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_option("--n-max", verify_options.n_max);
    sub->add_option("--order", verify_options.order, "series truncation order N");
    sub->add_option("--samples", verify_options.samples, "sample count, at least (N+1)^2");
    sub->add_option("--seed", verify_options.seed, "seed for the sampling grids");
    sub->add_option("--terms", verify_options.terms);
    sub->add_option("--k-max", verify_options.k_max);
    sub->add_option("--r-max", verify_options.r_max);
    sub->add_option("--n", verify_options.n);
    sub->add_option("--r", verify_options.r);
    sub->add_option("--t0", verify_options.t0, "rational like -1/2");
    sub->add_option("--variant", verify_options.variant)
        ->check(CLI::IsMember({"corrected", "printed"}));
    sub->add_option("--unimodality-n-max", verify_options.unimodality_n_max);
    sub->add_option("--format", verify_options.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto set_verify_action = [&](CLI::App* sub,
                               std::function<std::vector<VerificationReport>()> runner) {
    add_verify_flags(sub);
    sub->callback([&, runner] {
      action = [&, runner]() { return emit_reports(runner(), verify_options.format, out); };
    });
  };

  set_verify_action(verify->add_subcommand("gf", "generating function"), [&] {
    return std::vector{verify_gf(verify_options.order, verify_options.effective_samples(),
                                 verify_options.seed)};
  });
  set_verify_action(verify->add_subcommand("lemma-gf", "rescaled generating function"), [&] {
    return std::vector{verify_lemma_gf(verify_options.order, verify_options.effective_samples(),
                                       verify_options.seed)};
  });
  set_verify_action(verify->add_subcommand("dobinski", "Dobinski-type series"), [&] {
    if (verify_options.n >= 1) {
      Rat t0 = verify_options.t0.empty() ? Rat(0) : parse_rational(verify_options.t0);
      return std::vector{verify_dobinski(verify_options.n, t0, verify_options.terms,
                                         verify_options.dobinski_variant())};
    }
    return std::vector{run_dobinski_grid(verify_options)};
  });
  set_verify_action(verify->add_subcommand("worpitzky", "Worpitzky-type identities"), [&] {
    if (verify_options.n >= 1) {
      return std::vector{verify_worpitzky(verify_options.n, verify_options.r,
                                          verify_options.k_max,
                                          verify_options.worpitzky_variant())};
    }
    return std::vector{run_worpitzky_grid(verify_options)};
  });
  set_verify_action(verify->add_subcommand("specializations", "alpha specializations"), [&] {
    return std::vector{verify_specializations(verify_options.n_max)};
  });
  set_verify_action(verify->add_subcommand("recurrences", "recurrences and symmetries"), [&] {
    return std::vector{verify_recurrences_and_symmetries(std::max(verify_options.n_max, 2))};
  });
  set_verify_action(verify->add_subcommand("unimodality", "unimodality scan"), [&] {
    return std::vector{unimodality_scan(verify_options.unimodality_n_max)};
  });
  set_verify_action(verify->add_subcommand("all", "the full suite"), [&] {
    std::vector<VerificationReport> reports;
    reports.push_back(verify_gf(verify_options.order, verify_options.effective_samples(),
                                verify_options.seed));
    reports.push_back(verify_lemma_gf(verify_options.order, verify_options.effective_samples(),
                                      verify_options.seed));
    reports.push_back(run_dobinski_grid(verify_options));
    reports.push_back(run_worpitzky_grid(verify_options));
    reports.push_back(verify_specializations(verify_options.n_max));
    reports.push_back(verify_recurrences_and_symmetries(std::max(verify_options.n_max, 2)));
    reports.push_back(unimodality_scan(verify_options.unimodality_n_max));
    return reports;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace segeuler::cli
