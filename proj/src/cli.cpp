#include "delpezzo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "delpezzo/bridge.hpp"
#include "delpezzo/json.hpp"

namespace delpezzo::cli {

namespace {

using bridge::VerificationReport;

const std::vector<std::string> kReportColumns = {"roots",      "q1_count",   "q0_count", "arf",
                                                 "weyl_order", "autL_order", "oL2_order", "rho_image_order",
                                                 "kernel_order"};

const std::vector<std::string> kTableColumns = {"n",          "type",       "roots",     "q1",
                                                "q0",         "radical_dim", "arf",      "weyl_order",
                                                "autL_order", "oL2_order",  "rho_image_order"};

std::vector<int> parse_selector(const std::string& s) {
  if (s == "all") return {3, 4, 5, 6, 7, 8};
  if (s.size() == 1 && s[0] >= '3' && s[0] <= '8') return {s[0] - '0'};
  throw CLI::ValidationError("--n", "expected 3..8 or all, got '" + s + "'");
}

// Runs task(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class T>
std::vector<T> run_ordered(std::size_t count, int jobs, const std::function<T(std::size_t)>& task) {
  std::vector<T> results(count);
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = task(i);
    });
  for (auto& t : pool) t.join();
  return results;
}

VerificationReport failure_report(const std::string& statement, int n, const std::string& what) {
  VerificationReport r;
  r.statement = statement;
  r.n = n;
  r.lattice = "";
  r.check("computation completed", false, what);
  return r;
}

std::vector<VerificationReport> safe_verify_all(int n) {
  try {
    return bridge::verify_all(n);
  } catch (const std::exception& e) {
    return {failure_report("verify", n, e.what())};
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(json::to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "statement,n,lattice,pass";
      for (const auto& c : kReportColumns) os << ',' << c;
      os << '\n';
      for (const auto& r : reports) {
        os << r.statement << ',' << r.n << ',' << r.lattice << ',' << (r.pass ? "true" : "false");
        for (const auto& c : kReportColumns) {
          os << ',';
          if (auto it = r.numbers.find(c); it != r.numbers.end()) os << groups::to_string(it->second);
        }
        os << '\n';
      }
      break;
    }
    case Format::Plain: {
      for (const auto& r : reports) {
        os << (r.pass ? "PASS " : "FAIL ") << r.statement << " n=" << r.n;
        if (!r.lattice.empty()) os << " (" << r.lattice << ")";
        os << '\n';
        for (const auto& [k, v] : r.numbers) os << "    " << k << " = " << groups::to_string(v) << '\n';
        for (const auto& w : r.witnesses) {
          os << "  [" << (w.pass ? "ok" : "FAILED") << "] " << w.name;
          if (!w.detail.empty()) os << ": " << w.detail;
          os << '\n';
        }
      }
      break;
    }
  }
}

std::vector<std::string> table_cells(const bridge::SummaryRow& row) {
  return {std::to_string(row.n),
          row.type,
          std::to_string(row.roots),
          std::to_string(row.q1),
          std::to_string(row.q0),
          std::to_string(row.radical_dim),
          row.arf < 0 ? std::string() : std::to_string(row.arf),
          groups::to_string(row.weyl_order),
          groups::to_string(row.autL_order),
          groups::to_string(row.oL2_order),
          groups::to_string(row.rho_image_order)};
}

void write_table(const std::vector<bridge::SummaryRow>& rows, Format format, std::ostream& os) {
  if (format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(json::summary_to_json(r));
    os << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells{kTableColumns};
  for (const auto& r : rows) cells.push_back(table_cells(r));
  if (format == Format::Csv) {
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << line[i];
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(kTableColumns.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i)
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
    os << '\n';
  }
}

void write_roots(const std::vector<int>& lattices, Format format, std::ostream& os) {
  if (format == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n : lattices) {
      const auto L = lattice::build_del_pezzo(n);
      const auto S = f2::reduce(L);
      arr.push_back({{"lattice", json::lattice_to_json(L)},
                     {"roots", json::roots_to_json(lattice::enumerate_roots(L))},
                     {"space", json::space_to_json(S)},
                     {"census", json::census_to_json(f2::value_census(S))}});
    }
    os << arr.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) os << "n,type,root\n";
  for (int n : lattices) {
    const auto L = lattice::build_del_pezzo(n);
    const auto roots = lattice::enumerate_roots(L);
    if (format == Format::Plain) os << "n=" << n << " (" << L.type_name() << "): " << roots.size() << " roots\n";
    for (const auto& r : roots) {
      std::ostringstream coords;
      for (std::size_t i = 0; i < r.size(); ++i) coords << (i ? " " : "") << r[i];
      if (format == Format::Csv)
        os << n << ',' << L.type_name() << ',' << csv_escape(coords.str()) << '\n';
      else
        os << "  " << coords.str() << '\n';
    }
  }
}

int execute(const CliConfig& config, std::ostream& os) {
  if (config.subcommand == "roots") {
    write_roots(config.lattices, config.format, os);
    return 0;
  }
  if (config.subcommand == "table") {
    auto rows = run_ordered<bridge::SummaryRow>(config.lattices.size(), config.jobs, [&](std::size_t i) {
      return bridge::summarize(bridge::analyze(lattice::build_del_pezzo(config.lattices[i])));
    });
    write_table(rows, config.format, os);
    return 0;
  }
  std::vector<VerificationReport> reports;
  if (config.subcommand == "remark2") {
    try {
      reports.push_back(bridge::verify_remark2(config.rank));
    } catch (const std::exception& e) {
      reports.push_back(failure_report("remark2", config.rank, e.what()));
    }
  } else {
    auto per_n = run_ordered<std::vector<VerificationReport>>(
        config.lattices.size(), config.jobs, [&](std::size_t i) { return safe_verify_all(config.lattices[i]); });
    for (auto& batch : per_n)
      for (auto& r : batch) reports.push_back(std::move(r));
  }
  write_reports(reports, config.format, os);
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction mod 2 of del Pezzo lattices: construction and exhaustive verification"};
  app.require_subcommand(1);
  CliConfig config;
  std::string selector = "all";
  std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};

  auto add_common = [&](CLI::App* sub, bool with_n) {
    if (with_n) sub->add_option("--n", selector, "lattice index 3..8 or 'all'")->capture_default_str();
    sub->add_option("--format", config.format, "json, csv or plain")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", config.output, "write to this file instead of standard output");
  };
  auto* verify = app.add_subcommand("verify", "run every verification for the selected lattices");
  add_common(verify, true);
  verify->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1, 64));
  auto* roots = app.add_subcommand("roots", "list root coordinates");
  add_common(roots, true);
  auto* table = app.add_subcommand("table", "summary table, one row per lattice");
  add_common(table, true);
  table->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1, 64));
  auto* remark2 = app.add_subcommand("remark2", "failure of the statements for plain A_n");
  add_common(remark2, false);
  remark2->add_option("--rank", config.rank, "A_n rank in [5, 10]")->check(CLI::Range(5, 10));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();
    if (config.subcommand != "remark2") config.lattices = parse_selector(selector);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (config.output.empty()) return execute(config, out);
  std::ofstream file(config.output);
  if (!file) {
    err << "cannot open output file " << config.output << '\n';
    return 2;
  }
  return execute(config, file);
}

}  // namespace delpezzo::cli
