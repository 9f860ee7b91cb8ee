#include "segeuler/series.hpp"

#include <stdexcept>

namespace segeuler {

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  coeffs_.assign(order + 1, Rat(0));
}

TruncSeries::TruncSeries(int order, std::vector<Rat> coeffs) : TruncSeries(order) {
  for (std::size_t d = 0; d < coeffs.size() && d < coeffs_.size(); ++d)
    coeffs_[d] = std::move(coeffs[d]);
}

TruncSeries TruncSeries::constant(const Rat& c, int order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::x(int order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("TruncSeries: mixed truncation orders");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("TruncSeries: mixed truncation orders");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.coeffs_.size() != b.coeffs_.size())
    throw std::invalid_argument("TruncSeries: mixed truncation orders");
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncSeries TruncSeries::scaled(const Rat& factor) const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

TruncSeries TruncSeries::exp(const TruncSeries& s) {
  if (s.coeffs_[0] != 0)
    throw std::domain_error("TruncSeries::exp needs a zero constant term");
  TruncSeries result = constant(1, s.order());
  TruncSeries power = constant(1, s.order());
  Rat inv_factorial = 1;
  for (int k = 1; k <= s.order(); ++k) {
    power *= s;
    inv_factorial /= k;
    result += power.scaled(inv_factorial);
  }
  return result;
}

TruncSeries TruncSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("TruncSeries::reciprocal needs a nonzero constant term");
  TruncSeries out(order());
  Rat lead = coeffs_[0];
  out.coeffs_[0] = Rat(1) / lead;
  for (int d = 1; d <= order(); ++d) {
    Rat acc = 0;
    for (int k = 1; k <= d; ++k) acc += coeffs_[k] * out.coeffs_[d - k];
    out.coeffs_[d] = -acc / lead;
  }
  return out;
}

}  // namespace segeuler
