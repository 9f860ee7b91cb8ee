#include "segeuler/ratpoly.hpp"

#include <stdexcept>

namespace segeuler {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(Rat c) { return RatPoly({std::move(c)}); }

RatPoly RatPoly::monomial(int degree, Rat c) {
  if (degree < 0) throw std::invalid_argument("RatPoly::monomial: negative degree");
  std::vector<Rat> coeffs(degree + 1, Rat(0));
  coeffs[degree] = std::move(c);
  return RatPoly(std::move(coeffs));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[degree];
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

Rat RatPoly::eval(const Rat& x0) const {
  Rat total = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) total = total * x0 + *it;
  return total;
}

RatPoly RatPoly::shifted_by_one() const {
  RatPoly out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    // (X+1)^d expanded with one running binomial row
    std::vector<Rat> row(d + 1, Rat(0));
    Int b = 1;
    for (std::size_t k = 0; k <= d; ++k) {
      row[k] = coeffs_[d] * Rat(b);
      b = b * (Int(d) - Int(k)) / (Int(k) + 1);
    }
    out += RatPoly(std::move(row));
  }
  return out;
}

std::string RatPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    Rat mag = coeffs_[d] < 0 ? Rat(-coeffs_[d]) : coeffs_[d];
    std::string body;
    if (d == 0) {
      body = mag.str();
    } else {
      std::string var = d == 1 ? "X" : "X^" + std::to_string(d);
      body = mag == 1 ? var : mag.str() + "*" + var;
    }
    if (out.empty()) {
      out = (coeffs_[d] < 0 ? "-" : "") + body;
    } else {
      out += (coeffs_[d] < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

RatPoly delta(const RatPoly& p) { return p.shifted_by_one() - p; }

RatPoly delta_power(const RatPoly& p, int r) {
  if (r < 0) throw std::invalid_argument("delta_power: negative repetition count");
  RatPoly out = p;
  for (int step = 0; step < r; ++step) out = delta(out);
  return out;
}

}  // namespace segeuler
