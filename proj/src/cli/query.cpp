#include "adlv/adm.hpp"
#include "adlv/cascade.hpp"
#include "adlv/cli.hpp"
#include "adlv/cover.hpp"
#include "adlv/newton.hpp"

#include <cctype>
#include <sstream>

namespace adlv::cli {

ParseError::ParseError(const std::string& token, std::size_t pos, const std::string& why)
    : UsageError("parse error at position " + std::to_string(pos) + " near '" + token + "': " + why) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string token_at(const std::string& s, std::size_t i) {
  std::size_t j = i;
  while (j < s.size() && !is_space(s[j])) ++j;
  return s.substr(i, j - i);
}

// Comma-separated integers (or rationals) inside optional brackets.
std::vector<std::string> split_coords(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!is_space(c)) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s, std::size_t pos) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(s, pos, "expected an integer");
  }
  if (used != s.size()) throw ParseError(s, pos, "expected an integer");
  return v;
}

Rational parse_rational(const std::string& s, std::size_t pos) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, pos));
  Int den = parse_int(s.substr(slash + 1), pos);
  if (den == 0) throw ParseError(s, pos, "zero denominator");
  return Rational(parse_int(s.substr(0, slash), pos), den);
}

std::string strip_brackets(const std::string& s, std::size_t pos) {
  if (s.empty()) throw ParseError(s, pos, "expected coordinates");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError(s, pos, "missing ']'");
    return s.substr(1, s.size() - 2);
  }
  return s;
}

Coweight parse_rational_coweight(int rank, const std::string& text, std::size_t pos) {
  std::vector<std::string> parts = split_coords(strip_brackets(text, pos));
  if (static_cast<int>(parts.size()) != rank)
    throw ParseError(text, pos, "expected " + std::to_string(rank) + " coordinates");
  Coweight c = Coweight::zero(rank);
  for (int i = 0; i < rank; ++i) c[i] = parse_rational(parts[i], pos);
  return c;
}

// Splits on whitespace keeping offsets.
std::vector<std::pair<std::string, std::size_t>> words(const std::string& s, std::size_t offset) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    out.push_back({s.substr(i, j - i), offset + i});
    i = j;
  }
  return out;
}

nlohmann::json rational_json(const Rational& r) {
  if (r.den() == 1) return r.num();
  return r.to_string();
}

nlohmann::json vec_json(const RatVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(rational_json(v[i]));
  return a;
}

nlohmann::json vec_json(const IntVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

// Generic token walk shared by finite and affine parsing.
template <class OnTranslation, class OnLetter, class OnLongest>
void walk(const std::string& text, std::size_t offset, int rank, bool affine, OnTranslation on_t, OnLetter on_s,
          OnLongest on_w0) {
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t pos = offset + i;
    if (is_space(c) || c == '*') {
      ++i;
      continue;
    }
    any = true;
    if (c == 't' && affine) {
      if (i + 1 >= text.size() || text[i + 1] != '[') throw ParseError(token_at(text, i), pos, "expected 't[...]'");
      std::size_t close = text.find(']', i);
      if (close == std::string::npos) throw ParseError(token_at(text, i), pos, "missing ']'");
      on_t(parse_coweight(rank, text.substr(i + 1, close - i), pos));
      i = close + 1;
    } else if (c == 's') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw ParseError(token_at(text, i), pos, "expected a generator index after 's'");
      // Indices are single digits since rank <= 8; "s12" reads as s1 s2.
      const int k = text[i + 1] - '0';
      const int lo = affine ? 0 : 1;
      if (k < lo || k > rank)
        throw ParseError(text.substr(i, 2), pos,
                         "no such generator; rank " + std::to_string(rank) + " has s" + std::to_string(lo) + "..s" +
                             std::to_string(rank));
      on_s(k);
      i += 2;
    } else if (text.compare(i, 2, "w0") == 0) {
      on_w0();
      i += 2;
    } else if (c == 'e' && (i + 1 == text.size() || is_space(text[i + 1]) || text[i + 1] == '*')) {
      ++i;
    } else {
      throw ParseError(token_at(text, i), pos, affine ? "expected t[...], s<i>, w0 or e" : "expected s<i>, w0 or e");
    }
  }
  if (!any) throw ParseError(text, offset, "missing element");
}

void require_args(const std::vector<std::pair<std::string, std::size_t>>& args, std::size_t lo, std::size_t hi,
                  const std::string& op, std::size_t pos) {
  if (args.size() < lo || args.size() > hi)
    throw ParseError(op, pos, "'" + op + "' takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" +
                                                                              std::to_string(hi)) +
                                  " argument(s)");
}

struct Invariants {
  IntCoweight mu;
  BInvariants b;
};

Invariants parse_mu_args(int rank, const std::vector<std::pair<std::string, std::size_t>>& args) {
  if (args.empty()) throw ParseError("", 0, "missing mu");
  Invariants inv;
  inv.mu = parse_coweight(rank, args[0].first, args[0].second);
  inv.b.nu.value = Coweight::zero(rank);
  for (std::size_t k = 1; k < args.size(); k += 2) {
    const auto& [key, pos] = args[k];
    if (k + 1 >= args.size()) throw ParseError(key, pos, "missing value");
    const auto& [val, vpos] = args[k + 1];
    if (key == "nu") {
      inv.b.nu.value = parse_rational_coweight(rank, val, vpos);
    } else if (key == "def") {
      Int d = parse_int(val, vpos);
      if (d < 0 || d > rank) throw ParseError(val, vpos, "defect must lie in 0..rank");
      inv.b.defect = static_cast<int>(d);
    } else {
      throw ParseError(key, pos, "expected 'nu' or 'def'");
    }
  }
  return inv;
}

nlohmann::json dim_json(const DimResult& d) {
  if (!d.ok) return {{"refused", d.reason}};
  return rational_json(d.value);
}

void element_list(const AffineWeylGroup& g, const std::vector<AffineElt>& v, nlohmann::json& out) {
  out = nlohmann::json::array();
  for (const AffineElt& w : v) out.push_back(format_affine(g, w));
}

}  // namespace

IntCoweight parse_coweight(int rank, const std::string& text, std::size_t offset) {
  std::vector<std::string> parts = split_coords(strip_brackets(text, offset));
  if (static_cast<int>(parts.size()) != rank)
    throw ParseError(text, offset, "expected " + std::to_string(rank) + " coordinates");
  IntCoweight c = IntCoweight::zero(rank);
  for (int i = 0; i < rank; ++i) c[i] = parse_int(parts[i], offset);
  return c;
}

AffineElt parse_affine(const AffineWeylGroup& g, const std::string& text, std::size_t offset) {
  AffineElt w = g.identity();
  walk(
      text, offset, g.rank(), true, [&](const IntCoweight& l) { w = g.multiply(w, g.make(l, 0)); },
      [&](int k) { w = g.multiply(w, g.simple(k)); },
      [&] { w = g.multiply(w, g.finite_elt(g.finite().longest())); });
  return w;
}

Index parse_finite(const GroupTable& G, const std::string& text, std::size_t offset) {
  Index x = 0;
  walk(
      text, offset, G.rank(), false, [](const IntCoweight&) {}, [&](int k) { x = G.right_simple(x, k - 1); },
      [&] { x = G.multiply(x, G.longest()); });
  return x;
}

nlohmann::json run_query(const RunConfig& cfg, const std::string& expression) {
  auto types = selected_types(cfg);
  if (types.size() != 1) throw UsageError("query needs a single --type and --rank");
  const auto [type, rank] = types.front();
  RootSystem rs = RootSystem::build(type, rank);
  AffineWeylGroup g(rs, TranslationLattice::Coweight, cfg.cap.value_or(kDefaultGroupCap));
  const GroupTable& G = g.finite();

  auto all = words(expression, 0);
  if (all.empty()) throw ParseError("", 0, "empty query");
  const auto [op, op_pos] = all.front();
  std::vector<std::pair<std::string, std::size_t>> args(all.begin() + 1, all.end());
  const std::size_t rest_pos = args.empty() ? expression.size() : args.front().second;
  const std::string rest = expression.substr(std::min(rest_pos, expression.size()));

  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "query";
  j["expression"] = expression;
  j["type"] = rs.name();
  j["op"] = op;
  nlohmann::json& res = j["result"];

  auto finite_arg = [&](std::size_t k) { return parse_finite(G, args[k].first, args[k].second); };

  if (op == "wt") {
    require_args(args, 1, 2, op, op_pos);
    QuantumBruhatGraph q(G);
    Index x = finite_arg(0);
    CorootVec w = args.size() == 1 ? q.wt1(x) : q.wt(x, finite_arg(1));
    res["wt"] = vec_json(w.coeffs);
    res["wt_text"] = format_coroot(w);
    j["method"] = "bfs";
  } else if (op == "dgamma") {
    require_args(args, 2, 2, op, op_pos);
    QuantumBruhatGraph q(G);
    res["d_gamma"] = q.d_gamma(finite_arg(0), finite_arg(1));
    j["method"] = "bfs";
  } else if (op == "elldown") {
    QuantumBruhatGraph q(G);
    Index x = parse_finite(G, rest, rest_pos);
    res["ell_down"] = q.ell_down(x);
    res["rqrd"] = nlohmann::json::array();
    for (int k : q.rqrd(x)) res["rqrd"].push_back(format_root(rs.root(k)));
    j["method"] = "bfs";
  } else if (op == "newton") {
    AffineElt w = parse_affine(g, rest, rest_pos);
    res["element"] = format_affine(g, w);
    res["newton_point"] = vec_json(newton_point(g, w).value.coeffs);
    j["method"] = "average";
  } else if (op == "nu") {
    AffineElt w = parse_affine(g, rest, rest_pos);
    QuantumBruhatGraph q(G);
    res["element"] = format_affine(g, w);
    FormulaResult f = max_newton_formula(g, q, w);
    res["formula_status"] = to_string(f.status);
    NewtonPoint brute = max_newton_brute(g, w, cfg.budget);
    res["nu"] = vec_json(brute.value.coeffs);
    if (f.status == FormulaStatus::Ok) {
      j["method"] = "formula+brute";
      res["match"] = f.value == brute;
    } else {
      j["method"] = "brute";
    }
  } else if (op == "length") {
    AffineElt w = parse_affine(g, rest, rest_pos);
    res["element"] = format_affine(g, w);
    res["length"] = g.length(w);
    res["geometric_length"] = geometric_length(g, w);
    j["method"] = "closed_form+hyperplanes";
  } else if (op == "word") {
    AffineElt w = parse_affine(g, rest, rest_pos);
    AffineWord rw = reduced_word(g, w);
    res["element"] = format_affine(g, w);
    res["word"] = format_affine_word(rw.letters);
    res["omega"] = format_affine(g, rw.omega);
    j["method"] = "descent";
  } else if (op == "cocovers") {
    AffineElt w = parse_affine(g, rest, rest_pos);
    res["element"] = format_affine(g, w);
    element_list(g, cocovers(g, w), res["enumerated"]);
    Decomposition d = decompose(g, w);
    CoverReport rep = verify_cover_theorem(g, d.u, d.lambda, d.v);
    res["status"] = to_string(rep.status);
    res["predicted"] = nlohmann::json::array();
    for (const CocoverRecord& r : predicted_cocovers(g, d.u, d.lambda, d.v, true).records)
      res["predicted"].push_back({{"element", format_affine(g, r.result)},
                                  {"root", format_root(rs.root(r.root))},
                                  {"m", r.m},
                                  {"cases", r.cases}});
    res["match"] = rep.match();
    j["method"] = "cases+enumeration";
  } else if (op == "adm" || op == "dim") {
    Invariants inv = parse_mu_args(rank, args);
    res["mu"] = vec_json(inv.mu.coeffs);
    res["nu"] = vec_json(inv.b.nu.value.coeffs);
    res["def"] = inv.b.defect;
    res["dim_formula"] = dim_json(dim_X_formula(rs, inv.mu, inv.b));
    if (op == "adm") {
      if (!is_dominant(inv.mu)) throw ParseError(args[0].first, args[0].second, "mu must be dominant");
      QuantumBruhatGraph q(G);
      res["d_adm"] = dim_json(d_adm(q, inv.mu, inv.b));
      AdmSet a = adm_set(g, inv.mu, cfg.budget);
      res["size_of_adm"] = a.size();
      res["d_adm_brute"] = rational_json(d_adm_brute(g, a, inv.b));
      j["method"] = "formula+enumeration";
    } else {
      j["method"] = "formula";
    }
  } else if (op == "cascade") {
    Index x = parse_finite(G, rest, rest_pos);
    if (!is_involution(G, x)) throw ParseError(rest, rest_pos, "not an involution");
    QuantumBruhatGraph q(G);
    DepthTables t = depth_tables(G);
    CascadeResult c = cascade_r(G, x);
    res["element"] = format_word(G.word(x));
    res["levels"] = nlohmann::json::array();
    for (const auto& level : c.levels) {
      nlohmann::json l = nlohmann::json::array();
      for (int k : level) l.push_back(format_root(rs.root(k)));
      res["levels"].push_back(l);
    }
    res["r"] = vec_json(c.r.coeffs);
    res["wt"] = vec_json(q.wt1(x).coeffs);
    res["match"] = c.r == q.wt1(x);
    res["dp"] = t.dp[x];
    res["ell_red"] = t.ell_red[x];
    res["ell_down"] = q.ell_down(x);
    res["length"] = G.length(x);
    j["method"] = "levels+search";
  } else {
    throw ParseError(op, op_pos,
                     "unknown operation; expected wt, dgamma, elldown, newton, nu, length, word, cocovers, adm, dim "
                     "or cascade");
  }
  return j;
}

}  // namespace adlv::cli
