#include "adlv/cli.hpp"
#include "adlv/newton.hpp"
#include "adlv/qbg.hpp"

#include <sstream>

namespace adlv::cli {

namespace {

struct Family {
  std::string label;
  std::string xi, m_tilde, s, ell_r;
};

Family family_of(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return {"A_n", "3n+1", "n+1", "2n", "ceil(n/2)"};
    case CartanType::B: return {"B_n", "6n-2", "2n", "4n-2", "n"};
    case CartanType::C: return {"C_n", "6n-2", "2n", "4n-2", "n"};
    case CartanType::D: return {"D_n", "6n-6", "2n", "4n-6", "2floor(n/2)"};
    case CartanType::E:
      if (n == 6) return {"E_6", "23", "12", "11", "4"};
      if (n == 7) return {"E_7", "33", "16", "17", "7"};
      return {"E_8", "57", "28", "29", "8"};
    case CartanType::F: return {"F_4", "23", "12", "11", "4"};
    case CartanType::G: return {"G_2", "9", "4", "5", "2"};
  }
  return {};
}

std::vector<Family> families(const std::vector<TableInstance>& rows) {
  std::vector<Family> out;
  for (const TableInstance& r : rows) {
    Family f = family_of(r.type, r.rank);
    if (out.empty() || out.back().label != f.label) out.push_back(f);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> instance_cells(const TableInstance& r) {
  auto opt_int = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  return {type_name(r.type, r.rank),
          std::to_string(r.xi),
          std::to_string(r.m_tilde),
          opt_int(r.m_computed),
          r.m_computed ? yes_no(*r.m_computed <= r.m_tilde) : "-",
          std::to_string(r.s),
          std::to_string(r.theta_two_rho_check),
          yes_no(r.s == r.theta_two_rho_check),
          std::to_string(r.ell_r),
          std::to_string(r.ell_r_computed),
          yes_no(r.ell_r == r.ell_r_computed),
          format_coroot(r.wt_w0),
          r.wt_w0_bfs ? format_coroot(*r.wt_w0_bfs) : "-",
          r.wt_w0_bfs ? yes_no(*r.wt_w0_bfs == r.wt_w0) : "-"};
}

const std::vector<std::string> kInstanceHeader = {
    "type", "Xi", "M~", "M", "M<=M~", "S", "<theta,2rho^v>", "S match", "l_R(w0)", "l_R computed", "l_R match",
    "wt(w0)", "wt(w0) BFS", "wt match"};
const std::vector<std::string> kInstanceCsvHeader = {
    "type", "xi", "m_tilde", "m_computed", "m_bound_ok", "s", "theta_two_rho_check", "s_match", "ell_r_w0",
    "ell_r_computed", "ell_r_match", "wt_w0", "wt_w0_bfs", "wt_match"};

void md_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  os << "|";
  for (const std::string& c : cells) os << " " << c << " |";
  os << "\n";
}

void md_rule(std::ostringstream& os, std::size_t n) {
  os << "|";
  for (std::size_t i = 0; i < n; ++i) os << "---|";
  os << "\n";
}

std::string markdown(const std::vector<TableInstance>& rows) {
  std::ostringstream os;
  const std::vector<Family> fams = families(rows);
  os << "# Tables\n";
  auto family_table = [&](const std::string& title, std::string Family::*field) {
    os << "\n## " << title << "\n\n";
    md_row(os, {"type", title});
    md_rule(os, 2);
    for (const Family& f : fams) md_row(os, {f.label, f.*field});
  };
  family_table("Xi", &Family::xi);
  family_table("M~", &Family::m_tilde);
  family_table("S", &Family::s);
  family_table("l_R(w0)", &Family::ell_r);
  os << "\n## Instances\n\n";
  md_row(os, kInstanceHeader);
  md_rule(os, kInstanceHeader.size());
  for (const TableInstance& r : rows) md_row(os, instance_cells(r));
  return os.str();
}

std::string csv(const std::vector<TableInstance>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line({"family", "xi", "m_tilde", "s", "ell_r_w0"});
  for (const Family& f : families(rows)) line({f.label, f.xi, f.m_tilde, f.s, f.ell_r});
  os << "\n";
  line(kInstanceCsvHeader);
  for (const TableInstance& r : rows) line(instance_cells(r));
  return os.str();
}

nlohmann::json coroot_json(const CorootVec& c) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < c.size(); ++i) a.push_back(c[i]);
  return a;
}

nlohmann::json json_doc(const std::vector<TableInstance>& rows) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "tables";
  j["families"] = nlohmann::json::array();
  for (const Family& f : families(rows))
    j["families"].push_back({{"family", f.label}, {"xi", f.xi}, {"m_tilde", f.m_tilde}, {"s", f.s},
                             {"ell_r_w0", f.ell_r}});
  j["instances"] = nlohmann::json::array();
  for (const TableInstance& r : rows) {
    nlohmann::json o;
    o["type"] = type_name(r.type, r.rank);
    o["xi"] = r.xi;
    o["m_tilde"] = r.m_tilde;
    o["m_computed"] = r.m_computed ? nlohmann::json(*r.m_computed) : nlohmann::json();
    o["m_bound_ok"] = r.m_computed ? nlohmann::json(*r.m_computed <= r.m_tilde) : nlohmann::json();
    o["s"] = r.s;
    o["theta_two_rho_check"] = r.theta_two_rho_check;
    o["s_match"] = r.s == r.theta_two_rho_check;
    o["ell_r_w0"] = r.ell_r;
    o["ell_r_computed"] = r.ell_r_computed;
    o["ell_r_match"] = r.ell_r == r.ell_r_computed;
    o["wt_w0"] = coroot_json(r.wt_w0);
    o["wt_w0_bfs"] = r.wt_w0_bfs ? coroot_json(*r.wt_w0_bfs) : nlohmann::json();
    o["wt_match"] = r.wt_w0_bfs ? nlohmann::json(*r.wt_w0_bfs == r.wt_w0) : nlohmann::json();
    j["instances"].push_back(o);
  }
  return j;
}

}  // namespace

TableInstance table_instance(CartanType type, int rank, std::size_t brute_cap) {
  RootSystem rs = RootSystem::build(type, rank);
  TableInstance r;
  r.type = type;
  r.rank = rank;
  r.xi = xi_bound(type, rank);
  r.m_tilde = m_tilde(type, rank);
  r.s = s_bound(type, rank);
  r.theta_two_rho_check = rs.pairing(rs.theta(), rs.two_rho_check());
  r.ell_r = ell_R_w0_table(type, rank);
  r.ell_r_computed = reflection_length(rs, longest_element(rs));
  r.wt_w0 = wt_w0_closed_form(type, rank);
  if (classical_group_order(type, rank) <= brute_cap) {
    GroupTable G = GroupTable::enumerate(rs, brute_cap);
    QuantumBruhatGraph q(G);
    r.wt_w0_bfs = q.wt1(G.longest());
    r.m_computed = compute_M(q);
  }
  return r;
}

std::string render_tables(const std::vector<TableInstance>& rows, Format format) {
  switch (format) {
    case Format::Markdown: return markdown(rows);
    case Format::Csv: return csv(rows);
    case Format::Json: return json_doc(rows).dump(2) + "\n";
  }
  return {};
}

}  // namespace adlv::cli
