#pragma once

#include "adlv/affine.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kTablesBruteCap = 4000;

enum ExitCode { kOk = 0, kVerifyFailure = 1, kUsage = 2, kBudget = 3 };
enum class Format { Json, Csv, Markdown };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type = "all";  // a Cartan letter, or "all" for tables
  int rank = 0;              // 0: every listed rank
  std::optional<std::size_t> cap;
  int budget = kDefaultLengthBudget;
  bool budget_set = false;  // verify sweeps raise an unset budget to what they need
  std::uint64_t seed = 0;
  std::optional<Format> format;
  bool timing = true;
};

Format parse_format(const std::string& s);

// Types covered by a config, validated. Throws UsageError.
std::vector<std::pair<CartanType, int>> selected_types(const RunConfig& cfg);

struct TableInstance {
  CartanType type = CartanType::A;
  int rank = 0;
  int xi = 0;
  Int m_tilde = 0;
  int s = 0;
  Int theta_two_rho_check = 0;
  int ell_r = 0;
  int ell_r_computed = 0;
  CorootVec wt_w0;
  std::optional<CorootVec> wt_w0_bfs;
  std::optional<Int> m_computed;
};

TableInstance table_instance(CartanType type, int rank, std::size_t brute_cap);
std::string render_tables(const std::vector<TableInstance>& rows, Format format);

nlohmann::json run_query(const RunConfig& cfg, const std::string& expression);

// Query expressions name the offending token and its character offset.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& token, std::size_t pos, const std::string& why);
};

// Affine element from tokens like "t[8,8] w0", "s0s1", "e".
AffineElt parse_affine(const AffineWeylGroup& g, const std::string& text, std::size_t offset = 0);
Index parse_finite(const GroupTable& G, const std::string& text, std::size_t offset = 0);
IntCoweight parse_coweight(int rank, const std::string& text, std::size_t offset = 0);

struct VerifyResult {
  nlohmann::json report;
  int failures = 0;
};

const std::vector<std::string>& suite_names();
VerifyResult run_verify(const RunConfig& cfg, const std::string& suite);

// Full command line; returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace adlv::cli
