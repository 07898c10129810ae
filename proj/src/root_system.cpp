#include "adlv/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace adlv {

RatMat inverse_exact(const RatMat& m) {
  const int n = static_cast<int>(m.rows());
  RatMat a = m;
  RatMat inv = RatMat::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("singular matrix");
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

int rank_exact(RatMat a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    for (int r = rank + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(rank, col);
      for (int j = col; j < cols; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

char type_letter(CartanType t) { return static_cast<char>('A' + static_cast<int>(t)); }

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() != 1) throw std::invalid_argument("unknown Cartan type '" + s + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("unknown Cartan type '" + s + "'");
  return static_cast<CartanType>(c - 'A');
}

bool is_valid_type(CartanType t, int n, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  std::string name = type_name(t, n);
  switch (t) {
    case CartanType::A:
      if (n < 1) return fail(name + ": type A needs rank >= 1");
      break;
    case CartanType::B:
      if (n < 2) return fail(name + ": type B needs rank >= 2");
      break;
    case CartanType::C:
      if (n < 2) return fail(name + ": type C needs rank >= 2");
      break;
    case CartanType::D:
      if (n < 4) return fail(name + ": type D needs rank >= 4");
      break;
    case CartanType::E:
      if (n < 6 || n > 8) return fail(name + ": type E needs rank 6, 7 or 8");
      break;
    case CartanType::F:
      if (n != 4) return fail(name + ": type F needs rank 4");
      break;
    case CartanType::G:
      if (n != 2) return fail(name + ": type G needs rank 2");
      break;
  }
  return true;
}

bool is_simply_laced(CartanType t) {
  return t == CartanType::A || t == CartanType::D || t == CartanType::E;
}

std::string type_name(CartanType t, int rank) { return std::string(1, type_letter(t)) + std::to_string(rank); }

IntMat cartan_matrix(CartanType t, int n) {
  std::string reason;
  if (!is_valid_type(t, n, &reason)) throw std::invalid_argument(reason);
  if (n > kMaxRank) throw std::invalid_argument(type_name(t, n) + ": rank exceeds supported maximum 8");
  IntMat c = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {  // 1-based, simply laced bond
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  switch (t) {
    case CartanType::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case CartanType::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case CartanType::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case CartanType::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case CartanType::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case CartanType::G:
      link(1, 2);
      c(0, 1) = -3;  // alpha_1 short
      break;
  }
  return c;
}

int classical_positive_count(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return n * (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
    case CartanType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case CartanType::F: return 24;
    case CartanType::G: return 6;
  }
  return 0;
}

RootSystem RootSystem::build(CartanType type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);
  const int n = rank;
  const IntMat& C = rs.cartan_;
  rs.cartan_inv_t_ = inverse_exact(RatMat(C.transpose().cast<Rational>()));

  // Symmetrizer d with d_i C(i,j) = d_j C(j,i), smallest entry 1.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || C(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(C(i, j)) / Rational(C(j, i));
      stack.push_back(j);
    }
  }
  Rational dmin = *std::min_element(d.begin(), d.end());
  for (auto& x : d) {
    Rational s = x / dmin;
    if (!s.is_integer()) throw std::logic_error("non-integral symmetrizer");
    rs.sym_.push_back(s.num());
  }

  // Closure of the simple roots under root strings, height by height.
  std::map<std::vector<Int>, bool> seen;
  auto key = [](const RootVec& r) { return std::vector<Int>(r.coeffs.data(), r.coeffs.data() + r.size()); };
  std::vector<std::vector<RootVec>> by_height(1);
  for (int i = 0; i < n; ++i) {
    by_height[0].push_back(RootVec::unit(n, i));
    seen[key(by_height[0].back())] = true;
  }
  while (!by_height.back().empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : by_height.back()) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(key(down))) break;
          ++p;
        }
        Int pair = 0;
        for (int j = 0; j < n; ++j) pair += beta[j] * C(i, j);
        if (p - pair >= 1) {
          RootVec up = beta;
          up[i] += 1;
          if (!seen.count(key(up))) {
            seen[key(up)] = true;
            next.push_back(up);
          }
        }
      }
    }
    by_height.push_back(std::move(next));
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), [](const RootVec& a, const RootVec& b) { return b < a; });
    for (auto& r : level) rs.roots_.push_back(r);
  }
  if (rs.num_positive() != classical_positive_count(type, rank))
    throw std::logic_error(rs.name() + ": root closure produced a wrong root count");

  const int m = rs.num_positive();
  rs.simple_index_.assign(n, -1);
  Int dmax = *std::max_element(rs.sym_.begin(), rs.sym_.end());
  for (int k = 0; k < m; ++k) {
    const RootVec& b = rs.roots_[k];
    rs.index_[b] = k;
    rs.heights_.push_back(static_cast<int>(b.coeffs.sum()));
    if (rs.heights_.back() == 1) {
      for (int i = 0; i < n; ++i)
        if (b[i] == 1) rs.simple_index_[i] = k;
    }
    Int norm2 = 0;  // (beta, beta) = 2 d_beta
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += b[i] * b[j] * rs.sym_[i] * C(i, j);
    Int dbeta = norm2 / 2;
    CorootVec c = CorootVec::zero(n);
    for (int i = 0; i < n; ++i) {
      if ((b[i] * rs.sym_[i]) % dbeta != 0) throw std::logic_error("non-integral coroot");
      c[i] = b[i] * rs.sym_[i] / dbeta;
    }
    rs.coroots_.push_back(c);
    rs.coroot_pairing_.push_back(rs.to_pairing(c));
    rs.long_.push_back(dbeta == dmax);
  }

  rs.two_rho_ = RootVec::zero(n);
  rs.two_rho_check_ = CorootVec::zero(n);
  for (int k = 0; k < m; ++k) {
    rs.two_rho_ += rs.roots_[k];
    rs.two_rho_check_ += rs.coroots_[k];
  }
  for (int k = 0; k < m; ++k) {
    int len = 0;
    Int total = 0;
    for (int g = 0; g < m; ++g) {
      Int pg = rs.pairing(rs.roots_[g], rs.coroots_[k]);
      total += pg;
      RootVec img = rs.roots_[g] - pg * rs.roots_[k];
      if (!is_positive(img)) ++len;
    }
    rs.refl_len_.push_back(len);
    rs.two_rho_coroot_.push_back(total);
    rs.quantum_.push_back(len == total - 1);
  }
  rs.theta_index_ = m - 1;
  for (int k = 0; k < m; ++k) {
    if (!root_leq(rs.roots_[k], rs.roots_[rs.theta_index_]))
      throw std::logic_error(rs.name() + ": highest root is not dominance-maximal");
  }
  return rs;
}

int RootSystem::root_index(const RootVec& beta) const {
  auto it = index_.find(beta);
  return it == index_.end() ? -1 : it->second;
}

IntCoweight RootSystem::to_pairing(const CorootVec& c) const {
  return IntCoweight(IntVec(cartan_.transpose() * c.coeffs));
}

Coweight RootSystem::to_pairing(const RatCorootVec& c) const {
  return Coweight(RatVec(cartan_.transpose().cast<Rational>() * c.coeffs));
}

RatCorootVec RootSystem::to_coroot_coords(const Coweight& lambda) const {
  return RatCorootVec(RatVec(cartan_inv_t_ * lambda.coeffs));
}

CorootVec RootSystem::to_coroot_lattice(const IntCoweight& lambda) const {
  RatCorootVec c = to_coroot_coords(to_rational(lambda));
  CorootVec out = CorootVec::zero(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (!c[i].is_integer()) throw std::invalid_argument("coweight is not in the coroot lattice");
    out[i] = c[i].num();
  }
  return out;
}

bool RootSystem::in_coroot_lattice(const IntCoweight& lambda) const {
  RatCorootVec c = to_coroot_coords(to_rational(lambda));
  for (int i = 0; i < rank_; ++i)
    if (!c[i].is_integer()) return false;
  return true;
}

Int RootSystem::pairing(const RootVec& beta, const IntCoweight& lambda) const {
  if (beta.size() != lambda.size()) throw std::invalid_argument("pairing: dimension mismatch");
  return beta.coeffs.dot(lambda.coeffs);
}

Rational RootSystem::pairing(const RootVec& beta, const Coweight& lambda) const {
  if (beta.size() != lambda.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < beta.size(); ++i) s += Rational(beta[i]) * lambda[i];
  return s;
}

Int RootSystem::pairing(const RootVec& beta, const CorootVec& gamma) const {
  if (beta.size() != gamma.size()) throw std::invalid_argument("pairing: dimension mismatch");
  return gamma.coeffs.dot(cartan_ * beta.coeffs);
}

Rational RootSystem::rho_pairing(const Coweight& lambda) const {
  RatCorootVec c = to_coroot_coords(lambda);
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) s += c[i];
  return s;
}

Int RootSystem::two_rho_pairing(const IntCoweight& lambda) const { return two_rho_.coeffs.dot(lambda.coeffs); }

Rational depth(const Coweight& lambda) {
  Rational m = lambda[0];
  for (int i = 1; i < lambda.size(); ++i) m = std::min(m, lambda[i]);
  return m;
}

Int depth(const IntCoweight& lambda) { return lambda.coeffs.minCoeff(); }

bool is_dominant(const Coweight& lambda) { return depth(lambda) >= 0; }
bool is_dominant(const IntCoweight& lambda) { return depth(lambda) >= 0; }
bool is_regular_dominant(const IntCoweight& lambda) { return depth(lambda) > 0; }

bool dominance_leq(const RootSystem& rs, const Coweight& lambda, const Coweight& mu) {
  RatCorootVec d = rs.to_coroot_coords(mu - lambda);
  for (int i = 0; i < d.size(); ++i)
    if (d[i] < 0) return false;
  return true;
}

bool dominance_leq(const RootSystem&, const CorootVec& a, const CorootVec& b) {
  return ((b.coeffs - a.coeffs).array() >= 0).all();
}

bool root_leq(const RootVec& beta, const RootVec& gamma) {
  return ((gamma.coeffs - beta.coeffs).array() >= 0).all();
}

bool is_positive(const RootVec& beta) {
  for (int i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0) return beta[i] > 0;
  }
  return false;
}

Lattice lattice_of(const RootSystem& rs, const Coweight& lambda) {
  for (int i = 0; i < lambda.size(); ++i)
    if (!lambda[i].is_integer()) return Lattice::Rational;
  RatCorootVec c = rs.to_coroot_coords(lambda);
  for (int i = 0; i < c.size(); ++i)
    if (!c[i].is_integer()) return Lattice::Coweight;
  return Lattice::Coroot;
}

std::vector<RootVec> quantum_roots(const RootSystem& rs) {
  std::vector<RootVec> out;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.is_quantum(k)) out.push_back(rs.root(k));
  return out;
}

std::vector<bool> quantum_by_classification(const RootSystem& rs) {
  std::vector<bool> out;
  const int n = rs.rank();
  std::vector<bool> simple_short(n);
  for (int i = 0; i < n; ++i) simple_short[i] = !rs.is_long(rs.simple_index(i));
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (rs.is_long(k)) {
      out.push_back(true);
      continue;
    }
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (rs.root(k)[i] != 0 && !simple_short[i]) ok = false;
    out.push_back(ok);
  }
  return out;
}

namespace {
std::string format_combination(const IntVec& v, const char* suffix) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    Int c = v[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    Int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1) + suffix;
  }
  return out.empty() ? "0" : out;
}
}  // namespace

std::string format_root(const RootVec& beta) { return format_combination(beta.coeffs, ""); }
std::string format_coroot(const CorootVec& c) { return format_combination(c.coeffs, "v"); }

}  // namespace adlv
