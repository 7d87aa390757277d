// Command-line front end: spectra, multiplicities, closed forms, the
// bounded maximal-multiplicity search and the claim replay harness.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "spectra/catalog.hpp"
#include "spectra/error.hpp"
#include "spectra/harmonic.hpp"
#include "spectra/integer_math.hpp"
#include "spectra/io.hpp"
#include "spectra/kernels.hpp"
#include "spectra/search.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/verify.hpp"

namespace {

using namespace spectra;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string matrix;
  std::string format = "text";
  std::uint64_t k = 1;
  std::uint64_t count = 10;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> j;
  std::optional<std::uint64_t> jmax;
  std::vector<std::uint64_t> deleted;
  std::optional<std::uint64_t> max_entry;
  std::optional<std::uint64_t> max_row_len;
  unsigned threads = 1;
  std::uint64_t budget = 200'000'000;
  bool ack = false;
  bool table = false;
  bool all = false;
  bool no_saturation = false;
  bool quiet = false;
  std::string claim;
};

SpectralMatrix resolve_matrix(const Config& cfg, std::size_t min_len) {
  if (catalog::is_named(cfg.matrix)) return catalog::named(cfg.matrix, std::max<std::size_t>(min_len, 2));
  return io::load_matrix(cfg.matrix);
}

Truncation truncation(const Config& cfg) {
  return cfg.ack ? Truncation::Acknowledge : Truncation::Reject;
}

void print(io::Format format, const json& doc, const std::string& text) {
  if (format == io::Format::Json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_spectrum(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const auto a = resolve_matrix(cfg, cfg.count);
  const auto prefix = enumerate_spectrum(a, cfg.count, truncation(cfg));
  if (format == io::Format::Json) {
    print(format, io::spectrum_to_json(prefix), {});
    return kExitOk;
  }
  std::string out = format == io::Format::Csv ? "lambda,m\n" : "";
  for (const auto& e : prefix.entries) {
    out += format == io::Format::Csv
               ? std::to_string(e.value) + ',' + std::to_string(e.multiplicity) + '\n'
               : "lambda=" + std::to_string(e.value) + " m=" + std::to_string(e.multiplicity) + '\n';
  }
  if (format == io::Format::Text) out += "covered_rank=" + std::to_string(prefix.covered_rank) + '\n';
  std::cout << out;
  return kExitOk;
}

int cmd_mult(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const auto a = resolve_matrix(cfg, cfg.k);
  const auto r = multiplicity_at(a, RankQuery(cfg.k), truncation(cfg));
  const bool bound = r.multiplicity <= saturating_pow(cfg.k, a.num_rows() - 1);
  json doc{{"k", cfg.k}, {"lambda", r.lambda}, {"m", r.multiplicity}, {"rank_bound_ok", bound}};
  std::string text = format == io::Format::Csv
                         ? "k,lambda,m\n" + std::to_string(cfg.k) + ',' + std::to_string(r.lambda) +
                               ',' + std::to_string(r.multiplicity) + '\n'
                         : "lambda=" + std::to_string(r.lambda) +
                               " m=" + std::to_string(r.multiplicity) + '\n';
  print(format, doc, text);
  return kExitOk;
}

int cmd_harmonic(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const std::uint64_t n = cfg.n.value_or(3);
  if (cfg.j) {
    const auto mu = harmonic::multiplicity(n, *cfg.j);
    const auto km = harmonic::kmin(n, *cfg.j);
    print(format, json{{"N", n}, {"j", *cfg.j}, {"mu", mu}, {"kmin", km}},
          format == io::Format::Csv
              ? "N,j,mu,kmin\n" + std::to_string(n) + ',' + std::to_string(*cfg.j) + ',' +
                    std::to_string(mu) + ',' + std::to_string(km) + '\n'
              : "mu=" + std::to_string(mu) + " kmin=" + std::to_string(km) + '\n');
    return kExitOk;
  }
  if (cfg.jmax) {
    json doc = json::array();
    std::string text = format == io::Format::Csv ? "j,mu,kmin\n" : "";
    for (std::uint64_t j = 0; j <= *cfg.jmax; ++j) {
      const auto mu = harmonic::multiplicity(n, j);
      const auto km = harmonic::kmin(n, j);
      doc.push_back({{"j", j}, {"mu", mu}, {"kmin", km}});
      text += format == io::Format::Csv
                  ? std::to_string(j) + ',' + std::to_string(mu) + ',' + std::to_string(km) + '\n'
                  : std::to_string(j) + " | " + std::to_string(km) + " | " + std::to_string(mu) + '\n';
    }
    print(format, doc, text);
    return kExitOk;
  }
  const auto level = harmonic::level_of(n, cfg.k);
  const auto mu = harmonic::multiplicity(n, level);
  print(format, json{{"N", n}, {"k", cfg.k}, {"level", level}, {"m", mu}},
        format == io::Format::Csv
            ? "N,k,level,m\n" + std::to_string(n) + ',' + std::to_string(cfg.k) + ',' +
                  std::to_string(level) + ',' + std::to_string(mu) + '\n'
            : "level=" + std::to_string(level) + " m=" + std::to_string(mu) + '\n');
  return kExitOk;
}

int cmd_mbar(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const std::uint64_t n = cfg.n.value_or(3);
  if (cfg.table) {
    const std::uint64_t jmax = cfg.jmax.value_or(6);
    const auto rows = n == 3 ? harmonic::mbar3_table(jmax) : harmonic::single_deletion_table(n, jmax);
    std::cout << io::emit_table(rows, format);
    return kExitOk;
  }
  const auto value = n == 3 ? harmonic::mbar3(cfg.k) : harmonic::single_deletion_bound(n, cfg.k);
  print(format, json{{"N", n}, {"k", cfg.k}, {"mbar", value}},
        format == io::Format::Csv ? "N,k,mbar\n" + std::to_string(n) + ',' + std::to_string(cfg.k) +
                                        ',' + std::to_string(value) + '\n'
                                  : "mbar=" + std::to_string(value) + '\n');
  return kExitOk;
}

int cmd_delete(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const auto spec = harmonic::DeletionSpec::make(
      cfg.n.value_or(4), std::set<std::uint64_t>(cfg.deleted.begin(), cfg.deleted.end()));
  std::uint64_t lo = 0, hi = cfg.jmax.value_or(4);
  if (cfg.j) lo = hi = *cfg.j;
  json doc = json::array();
  std::string text = format == io::Format::Csv ? "j,mu,kmin\n" : "";
  for (std::uint64_t j = lo; j <= hi; ++j) {
    const auto mu = harmonic::deleted_multiplicity(spec, j);
    const auto km = harmonic::deleted_kmin(spec, j);
    doc.push_back({{"j", j}, {"mu", mu}, {"kmin", km}});
    text += format == io::Format::Csv
                ? std::to_string(j) + ',' + std::to_string(mu) + ',' + std::to_string(km) + '\n'
                : "j=" + std::to_string(j) + " mu=" + std::to_string(mu) +
                      " kmin=" + std::to_string(km) + '\n';
  }
  print(format, doc, text);
  return kExitOk;
}

search::SearchOptions search_options(const Config& cfg) {
  search::SearchOptions opts;
  opts.threads = cfg.threads;
  opts.budget = cfg.budget;
  opts.check_saturation = !cfg.no_saturation;
  if (!cfg.quiet) {
    opts.progress = [](std::uint64_t examined, std::uint64_t estimate) {
      const double pct = estimate == 0 ? 100.0 : 100.0 * static_cast<double>(examined) /
                                                     static_cast<double>(estimate);
      std::fprintf(stderr, "\r%llu/%llu (%.1f%%)", static_cast<unsigned long long>(examined),
                   static_cast<unsigned long long>(estimate), pct);
    };
  }
  return opts;
}

int cmd_search(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const auto bounds =
      search::bounds_for(cfg.n.value_or(3), cfg.k, {cfg.max_entry, cfg.max_row_len});
  const auto report = search::search_max(bounds, search_options(cfg));
  if (!cfg.quiet) std::fprintf(stderr, "\n");
  std::string text = "best=" + std::to_string(report.best) +
                     " status=" + search::to_string(report.status) +
                     " examined=" + std::to_string(report.examined) +
                     " pruned=" + std::to_string(report.pruned) +
                     " wall_ms=" + std::to_string(report.wall.count()) + '\n';
  for (const auto& w : report.witnesses) text += "witness\n" + io::matrix_to_text(w);
  print(format == io::Format::Csv ? io::Format::Text : format, io::report_to_json(report), text);
  return kExitOk;
}

int cmd_table(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  const std::uint64_t n = cfg.n.value_or(3);
  const auto reports =
      search::search_table(n, cfg.k, {cfg.max_entry, cfg.max_row_len}, search_options(cfg));
  if (!cfg.quiet) std::fprintf(stderr, "\n");
  if (format == io::Format::Json) {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(io::report_to_json(r));
    std::cout << doc.dump() << '\n';
    return kExitOk;
  }
  const auto rows = io::group_by_level(n, reports);
  std::cout << io::emit_table(rows, format);
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  const auto format = io::parse_format(cfg.format);
  if (!cfg.all && cfg.claim.empty()) {
    throw Error(ErrorKind::InvalidBounds, "verify needs --all or --claim <prefix>");
  }
  verify::VerifyOptions opts;
  opts.threads = cfg.threads;
  const auto outcomes = verify::run_claims(cfg.all ? std::string_view{} : cfg.claim, opts);
  if (outcomes.empty()) throw Error(ErrorKind::InvalidBounds, "no claim matches '" + cfg.claim + "'");
  std::size_t failed = 0;
  json doc = json::array();
  std::string text = format == io::Format::Csv ? "claim,expected,computed,pass\n" : "";
  for (const auto& o : outcomes) {
    failed += !o.pass;
    doc.push_back({{"claim_id", o.claim_id},
                   {"expected", o.expected},
                   {"computed", o.computed},
                   {"pass", o.pass}});
    text += format == io::Format::Csv
                ? o.claim_id + ',' + std::to_string(o.expected) + ',' +
                      std::to_string(o.computed) + ',' + (o.pass ? "true" : "false") + '\n'
                : std::string(o.pass ? "PASS " : "FAIL ") + o.claim_id +
                      " expected=" + std::to_string(o.expected) +
                      " computed=" + std::to_string(o.computed) + '\n';
  }
  if (format == io::Format::Text) {
    text += std::to_string(outcomes.size() - failed) + "/" + std::to_string(outcomes.size()) +
            " claims pass\n";
  }
  print(format, doc, text);
  return failed == 0 ? kExitOk : kExitCompute;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and eigenvalue multiplicities of separable spectral matrices"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", cfg.matrix, "matrix file or built-in name (harmonic:N, "
                                             "harmonic:N/del:a,b, caseA4, caseB2-4, blue11, green31)")
        ->required();
    sub->add_flag("--ack", cfg.ack, "rows are complete: no entries beyond the last one");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.n, "number of rows")->check(CLI::Range(1, 64));
    sub->add_option("--B", cfg.max_entry, "largest entry searched (default k-1)");
    sub->add_option("--L", cfg.max_row_len, "longest row searched (default k)");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--budget", cfg.budget, "refuse searches whose estimate exceeds this");
    sub->add_flag("--no-saturation", cfg.no_saturation, "skip the B+1 saturation check");
    sub->add_flag("--quiet", cfg.quiet, "no progress on standard error");
  };

  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues with multiplicities");
  add_matrix(spectrum);
  spectrum->add_option("--K", cfg.count, "number of eigenvalues to cover")->check(CLI::PositiveNumber);
  add_format(spectrum);

  auto* mult = app.add_subcommand("mult", "lambda_k and its multiplicity");
  add_matrix(mult);
  mult->add_option("--k", cfg.k, "labelling")->required()->check(CLI::PositiveNumber);
  add_format(mult);

  auto* harm = app.add_subcommand("harmonic", "harmonic multiplicities and first labellings");
  harm->add_option("--N", cfg.n, "number of rows")->check(CLI::PositiveNumber);
  harm->add_option("--j", cfg.j, "level");
  harm->add_option("--k", cfg.k, "labelling")->check(CLI::PositiveNumber);
  harm->add_option("--jmax", cfg.jmax, "list levels 0..jmax");
  add_format(harm);

  auto* mbar = app.add_subcommand("mbar", "deletion lower bound (closed form for N = 3)");
  mbar->add_option("--N", cfg.n, "number of rows")->check(CLI::Range(2, 64));
  mbar->add_option("--k", cfg.k, "labelling")->check(CLI::PositiveNumber);
  mbar->add_flag("--table", cfg.table, "emit the level-block table");
  mbar->add_option("--jmax", cfg.jmax, "last level of the table");
  add_format(mbar);

  auto* del = app.add_subcommand("delete", "multiplicities of a last-row deletion matrix");
  del->add_option("--N", cfg.n, "number of rows")->check(CLI::Range(2, 64));
  del->add_option("--del", cfg.deleted, "values deleted from the last row")->delimiter(',');
  del->add_option("--j", cfg.j, "single level");
  del->add_option("--jmax", cfg.jmax, "levels 0..jmax (default 4)");
  add_format(del);

  auto* srch = app.add_subcommand("search", "bounded exhaustive maximum of m(k, A)");
  srch->add_option("--k", cfg.k, "labelling")->required()->check(CLI::PositiveNumber);
  add_search(srch);
  add_format(srch);

  auto* table = app.add_subcommand("table", "search maxima for k = 1..k, grouped by level");
  table->add_option("--k", cfg.k, "largest labelling")->required()->check(CLI::PositiveNumber);
  add_search(table);
  add_format(table);

  auto* ver = app.add_subcommand("verify", "replay reference numeric claims");
  ver->add_flag("--all", cfg.all, "run every claim");
  ver->add_option("--claim", cfg.claim, "run claims whose id starts with this prefix");
  ver->add_option("--threads", cfg.threads, "worker threads for search claims");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*mult) return cmd_mult(cfg);
    if (*harm) return cmd_harmonic(cfg);
    if (*mbar) return cmd_mbar(cfg);
    if (*del) return cmd_delete(cfg);
    if (*srch) return cmd_search(cfg);
    if (*table) return cmd_table(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownMatrix:
      case ErrorKind::InvalidBounds:
        return kExitUsage;
      default:
        return kExitCompute;
    }
  }
  return kExitUsage;
}
