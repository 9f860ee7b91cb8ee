#include "segeuler/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace segeuler {

BiPoly BiPoly::constant(Int c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int t_deg, int q_deg, Int c) {
  BiPoly p;
  if (c != 0) p.coeffs_[{t_deg, q_deg}] = std::move(c);
  return p;
}

int BiPoly::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, m.t);
  return d;
}

int BiPoly::deg_q() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.q;
}

Int BiPoly::coeff(int t_deg, int q_deg) const {
  auto it = coeffs_.find({t_deg, q_deg});
  return it == coeffs_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(Mono m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.coeffs_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.coeffs_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.coeffs_)
    for (const auto& [mb, cb] : b.coeffs_)
      out.add_term({ma.t + mb.t, ma.q + mb.q}, ca * cb);
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [m, c] : coeffs_) out.coeffs_[m] = -c;
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

BiPoly BiPoly::derivative_t() const {
  BiPoly out;
  for (const auto& [m, c] : coeffs_)
    if (m.t > 0) out.coeffs_[{m.t - 1, m.q}] = c * m.t;
  return out;
}

BiPoly BiPoly::derivative_q() const {
  BiPoly out;
  for (const auto& [m, c] : coeffs_)
    if (m.q > 0) out.coeffs_[{m.t, m.q - 1}] = c * m.q;
  return out;
}

Rat BiPoly::eval(const Rat& t0, const Rat& q0) const {
  std::vector<Rat> t_pow{Rat(1)}, q_pow{Rat(1)};
  for (int d = 1; d <= deg_t(); ++d) t_pow.push_back(t_pow.back() * t0);
  for (int d = 1; d <= deg_q(); ++d) q_pow.push_back(q_pow.back() * q0);
  Rat total = 0;
  for (const auto& [m, c] : coeffs_) total += Rat(c) * t_pow[m.t] * q_pow[m.q];
  return total;
}

namespace {

std::string mono_vars(const BiPoly::Mono& m) {
  std::string out;
  if (m.t == 1) out += "t";
  if (m.t > 1) out += "t^" + std::to_string(m.t);
  if (m.q >= 1) {
    if (!out.empty()) out += "*";
    out += m.q == 1 ? "q" : "q^" + std::to_string(m.q);
  }
  return out;
}

}  // namespace

std::string BiPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coeffs_) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string vars = mono_vars(m);
    std::string body;
    if (vars.empty()) {
      body = mag.str();
    } else if (mag == 1) {
      body = vars;
    } else {
      body = mag.str() + "*" + vars;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string BiPoly::json() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(m.t) + "," + std::to_string(m.q) + "\":\"" + c.str() + "\"";
  }
  return out + "}";
}

}  // namespace segeuler
