#include "adlv/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace adlv::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw UsageError("unknown format '" + s + "' (expected json, csv or markdown)");
}

std::vector<std::pair<CartanType, int>> selected_types(const RunConfig& cfg) {
  std::vector<std::pair<CartanType, int>> out;
  auto family = [&](CartanType t) {
    for (int n = 1; n <= kMaxRank; ++n)
      if (is_valid_type(t, n)) out.push_back({t, n});
  };
  if (cfg.type == "all") {
    if (cfg.rank != 0) throw UsageError("--rank needs a single --type");
    for (CartanType t : {CartanType::A, CartanType::B, CartanType::C, CartanType::D, CartanType::E, CartanType::F,
                         CartanType::G})
      family(t);
    return out;
  }
  CartanType t;
  try {
    t = parse_cartan_type(cfg.type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.rank == 0) {
    family(t);
    return out;
  }
  std::string reason;
  if (!is_valid_type(t, cfg.rank, &reason)) throw UsageError(reason);
  if (cfg.rank > kMaxRank) throw UsageError(type_name(t, cfg.rank) + ": rank exceeds supported maximum 8");
  out.push_back({t, cfg.rank});
  return out;
}

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

std::string verify_text(const VerifyResult& r, Format format) {
  const nlohmann::json& j = r.report;
  std::ostringstream os;
  switch (format) {
    case Format::Json: return j.dump(2) + "\n";
    case Format::Csv:
      os << "suite,type,cases,failures,expected_mismatches\n"
         << j["suite"].get<std::string>() << "," << j["type"].get<std::string>() << "," << j["cases"] << ","
         << j["failures"].size() << "," << j["expected_mismatches"].size() << "\n";
      return os.str();
    case Format::Markdown:
      os << "| suite | type | cases | failures | expected mismatches |\n|---|---|---|---|---|\n"
         << "| " << j["suite"].get<std::string>() << " | " << j["type"].get<std::string>() << " | " << j["cases"]
         << " | " << j["failures"].size() << " | " << j["expected_mismatches"].size() << " |\n";
      for (const auto& f : j["failures"]) os << "\n- " << f.get<std::string>();
      if (!j["failures"].empty()) os << "\n";
      return os.str();
  }
  return {};
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine Weyl group combinatorics: tables, queries and verification suites", "adlv"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format, out_path;
  std::size_t cap = 0;
  app.add_option("--type", cfg.type, "Cartan type letter A-G, or 'all' (tables)");
  app.add_option("--rank", cfg.rank, "rank (at most 8)");
  app.add_option("--cap", cap, "finite group size cap");
  auto* budget = app.add_option("--budget", cfg.budget, "length budget for Bruhat intervals");
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--format", format, "json, csv or markdown");
  app.add_option("--out", out_path, "write output to a file");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit wall_time from reports");

  auto* tables = app.add_subcommand("tables", "regenerate the depth, bound and weight tables");
  auto* query = app.add_subcommand("query", "evaluate one expression");
  std::vector<std::string> expr;
  query->add_option("expression", expr, "e.g. \"nu t[8,8] w0\"")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "rootsys, weyl, affine, qbg, newton, cover, adm or cascade")->required();
  for (auto* sub : {tables, query, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (cap > 0) cfg.cap = cap;
  cfg.budget_set = budget->count() > 0;
  cfg.timing = !no_timing;

  try {
    if (!format.empty()) cfg.format = parse_format(format);
    if (cfg.budget <= 0) throw UsageError("--budget must be positive");
    if (tables->parsed()) {
      std::vector<TableInstance> rows;
      for (auto [t, n] : selected_types(cfg)) rows.push_back(table_instance(t, n, cfg.cap.value_or(kTablesBruteCap)));
      emit(render_tables(rows, cfg.format.value_or(Format::Markdown)), out_path, out);
      return kOk;
    }
    if (query->parsed()) {
      if (cfg.format.value_or(Format::Json) != Format::Json) throw UsageError("query output is JSON only");
      std::string e;
      for (const std::string& part : expr) e += (e.empty() ? "" : " ") + part;
      emit(run_query(cfg, e).dump(2) + "\n", out_path, out);
      return kOk;
    }
    VerifyResult r = run_verify(cfg, suite);
    emit(verify_text(r, cfg.format.value_or(Format::Json)), out_path, out);
    return r.failures == 0 ? kOk : kVerifyFailure;
  } catch (const BudgetExceeded& e) {
    err << "adlv: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    err << "adlv: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "adlv: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "adlv: internal error: " << e.what() << "\n";
    return kVerifyFailure;
  }
}

}  // namespace adlv::cli
