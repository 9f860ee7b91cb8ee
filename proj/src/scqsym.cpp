#include "segeuler/scqsym.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace segeuler {

std::string basis_name(BasisTag b) {
  switch (b) {
    case BasisTag::R: return "R";
    case BasisTag::S: return "S";
    case BasisTag::G: return "G";
  }
  return "?";
}

namespace {

int index_degree(const BasisIndex& index) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SegmentedComposition>)
      return x.n();
    else
      return x.size();
  }, index);
}

const std::string& index_text(const BasisIndex& index) {
  return std::visit([](const auto& x) -> const std::string& { return x.str(); }, index);
}

}  // namespace

bool BasisIndexLess::operator()(const BasisIndex& a, const BasisIndex& b) const {
  int da = index_degree(a), db = index_degree(b);
  if (da != db) return da < db;
  return index_text(a) < index_text(b);
}

ModuleElement ModuleElement::ribbon(const SegmentedComposition& index, BiPoly coeff) {
  ModuleElement e(BasisTag::R);
  e.add(index, coeff);
  return e;
}

ModuleElement ModuleElement::complete(const SegmentedComposition& index, BiPoly coeff) {
  ModuleElement e(BasisTag::S);
  e.add(index, coeff);
  return e;
}

ModuleElement ModuleElement::g(const SegmentedPermutation& index, BiPoly coeff) {
  ModuleElement e(BasisTag::G);
  e.add(index, coeff);
  return e;
}

void ModuleElement::add(const BasisIndex& index, const BiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly ModuleElement::coeff(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BiPoly() : it->second;
}

ModuleElement ModuleElement::homogeneous(int n) const {
  ModuleElement out(basis_);
  for (const auto& [index, c] : terms_)
    if (index_degree(index) == n) out.terms_.emplace(index, c);
  return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("cannot add elements in different bases");
  for (const auto& [index, c] : o.terms_) add(index, c);
  return *this;
}

ModuleElement ModuleElement::scaled(const BiPoly& factor) const {
  ModuleElement out(basis_);
  if (factor.is_zero()) return out;
  for (const auto& [index, c] : terms_) out.terms_.emplace(index, c * factor);
  return out;
}

std::string ModuleElement::str() const {
  if (terms_.empty()) return "0";
  const std::string letter = basis_name(basis_);
  std::string out;
  for (const auto& [index, c] : terms_) {
    bool negative = false;
    std::string coeff_text;
    if (c.is_monomial()) {
      const auto& [mono, value] = *c.terms().begin();
      Int mag = value < 0 ? Int(-value) : value;
      negative = value < 0;
      BiPoly unsigned_mono = BiPoly::monomial(mono.t, mono.q, mag);
      if (unsigned_mono != BiPoly::constant(1)) coeff_text = unsigned_mono.str();
    } else {
      coeff_text = "(" + c.str() + ")";
    }
    std::string body = letter + "[" + index_text(index) + "]";
    if (!coeff_text.empty()) body = coeff_text + " * " + body;
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string ModuleElement::json() const {
  std::string out = "{\"basis\":\"" + basis_name(basis_) + "\",\"terms\":[";
  bool first = true;
  for (const auto& [index, c] : terms_) {
    if (!first) out += ",";
    first = false;
    out += "{\"index\":\"" + index_text(index) + "\",\"coeff\":" + c.json() + "}";
  }
  return out + "]}";
}

namespace {

const SegmentedComposition& as_composition(const BasisIndex& index) {
  return std::get<SegmentedComposition>(index);
}

const SegmentedPermutation& as_permutation(const BasisIndex& index) {
  return std::get<SegmentedPermutation>(index);
}

/// Visits the compositions coarser than or equal to I together with the number
/// of descents of I that were altered (turned into a bar or erased).
void for_each_coarser(const SegmentedComposition& fine,
                      const std::function<void(const SegmentedComposition&, int)>& visit) {
  auto [descents, bars] = fine.descent_bar_sets();
  const int m = static_cast<int>(descents.size());
  std::vector<int> choice(m, 0);  // 0 keep, 1 bar, 2 erase
  while (true) {
    std::vector<int> kept, new_bars = bars;
    int altered = 0;
    for (int p = 0; p < m; ++p) {
      if (choice[p] == 0) {
        kept.push_back(descents[p]);
      } else {
        ++altered;
        if (choice[p] == 1) new_bars.push_back(descents[p]);
      }
    }
    visit(SegmentedComposition::from_sets(fine.n(), kept, new_bars), altered);
    int p = m - 1;
    while (p >= 0 && choice[p] == 2) choice[p--] = 0;
    if (p < 0) break;
    ++choice[p];
  }
}

ModuleElement product_r(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out(BasisTag::R);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      BiPoly c = ca * cb;
      const auto& lhs = as_composition(ia);
      const auto& rhs = as_composition(ib);
      out.add(lhs.concat(rhs, ConcatMode::comma), c);
      out.add(lhs.concat(rhs, ConcatMode::bar), c);
      out.add(lhs.concat(rhs, ConcatMode::join), c);
    }
  }
  return out;
}

ModuleElement product_s(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out(BasisTag::S);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms())
      out.add(as_composition(ia).concat(as_composition(ib), ConcatMode::comma), ca * cb);
  return out;
}

ModuleElement product_g(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out(BasisTag::G);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      BiPoly c = ca * cb;
      for (const auto& mu : as_permutation(ia).convolve(as_permutation(ib))) out.add(mu, c);
    }
  }
  return out;
}

}  // namespace

ModuleElement product(const ModuleElement& a, const ModuleElement& b) {
  if (a.basis() != b.basis())
    throw std::invalid_argument("product needs both factors in the same basis; convert first");
  switch (a.basis()) {
    case BasisTag::R: return product_r(a, b);
    case BasisTag::S: return product_s(a, b);
    case BasisTag::G: return product_g(a, b);
  }
  throw std::invalid_argument("unknown basis");
}

namespace {

ModuleElement expand_s_in_r(const ModuleElement& element) {
  ModuleElement out(BasisTag::R);
  for (const auto& [index, c] : element.terms()) {
    for_each_coarser(as_composition(index), [&](const SegmentedComposition& coarser, int) {
      out.add(coarser, c);
    });
  }
  return out;
}

ModuleElement expand_r_in_s(const ModuleElement& element) {
  ModuleElement out(BasisTag::S);
  for (const auto& [index, c] : element.terms()) {
    for_each_coarser(as_composition(index), [&](const SegmentedComposition& coarser, int altered) {
      out.add(coarser, altered % 2 == 0 ? c : -c);
    });
  }
  return out;
}

std::uint32_t set_to_mask(const std::vector<int>& positions) {
  std::uint32_t mask = 0;
  for (int p : positions) mask |= 1u << (p - 1);
  return mask;
}

ModuleElement expand_r_in_g(const ModuleElement& element, int g_cap) {
  ModuleElement out(BasisTag::G);
  // per degree, the support keyed by (descent mask, bar mask)
  std::map<int, std::map<std::uint64_t, const BiPoly*>> supports;
  for (const auto& [index, c] : element.terms()) {
    int n = index_degree(index);
    if (n > g_cap)
      throw std::domain_error("change_basis to G expands over all segmented permutations and is capped at degree " +
                              std::to_string(g_cap));
    auto [descents, bars] = as_composition(index).descent_bar_sets();
    std::uint64_t key = (std::uint64_t{set_to_mask(descents)} << 32) | set_to_mask(bars);
    supports[n].emplace(key, &c);
  }
  for (const auto& [n, support] : supports) {
    const std::uint32_t bar_limit = 1u << (n - 1);
    for_each_word_descmask(n, [&](const std::vector<int>& word, std::uint32_t descmask) {
      for (std::uint32_t bars = 0; bars < bar_limit; ++bars) {
        std::uint64_t key = (std::uint64_t{descmask & ~bars} << 32) | bars;
        auto it = support.find(key);
        if (it == support.end()) continue;
        std::vector<int> bar_positions;
        for (int p = 1; p < n; ++p)
          if (bars & (1u << (p - 1))) bar_positions.push_back(p);
        out.add(SegmentedPermutation(word, bar_positions), *it->second);
      }
    });
  }
  return out;
}

}  // namespace

ModuleElement change_basis(const ModuleElement& element, BasisTag to, int g_cap) {
  if (element.basis() == BasisTag::S && to == BasisTag::R) return expand_s_in_r(element);
  if (element.basis() == BasisTag::R && to == BasisTag::S) return expand_r_in_s(element);
  if (element.basis() == BasisTag::R && to == BasisTag::G) return expand_r_in_g(element, g_cap);
  throw std::invalid_argument("unsupported basis change " + basis_name(element.basis()) + "->" +
                              basis_name(to));
}

ModuleElement nc_eulerian(int n, EulerianForm form) {
  if (n < 1) throw std::invalid_argument("nc_eulerian: n must be positive");
  ModuleElement out(form == EulerianForm::ribbon ? BasisTag::R : BasisTag::S);
  BiPoly t = BiPoly::var_t(), q = BiPoly::var_q();
  BiPoly one_minus_t = BiPoly::constant(1) - t;
  BiPoly q_minus_t = q - t;
  SegmentedComposition::for_each(n, [&](const SegmentedComposition& index) {
    if (form == EulerianForm::ribbon) {
      out.add(index, t.pow(index.des()) * q.pow(index.seg()));
    } else {
      out.add(index, t.pow(index.des()) * one_minus_t.pow(n - index.length()) *
                         q_minus_t.pow(index.seg()));
    }
  });
  return out;
}

namespace {

/// hist[m] = number of permutation words of {1..n} whose descent set has
/// bitmask m.
std::vector<long long> descmask_histogram(int n) {
  std::vector<long long> hist(std::size_t{1} << (n - 1), 0);
  for_each_word_descmask(n, [&](const std::vector<int>&, std::uint32_t mask) { ++hist[mask]; });
  return hist;
}

/// Number of segmented permutations whose descent composition is exactly I:
/// the bars are fixed and the word's descents must match Des(I) on the
/// non-bar positions, so we sum the histogram over submasks of the bar set.
Int scdes_count(const SegmentedComposition& index, const std::vector<long long>& hist) {
  auto [descents, bars] = index.descent_bar_sets();
  std::uint32_t desc = set_to_mask(descents), bar = set_to_mask(bars);
  long long total = 0;
  std::uint32_t sub = bar;
  while (true) {
    total += hist[desc | sub];
    if (sub == 0) break;
    sub = (sub - 1) & bar;
  }
  return total;
}

}  // namespace

PhiImage phi(const ModuleElement& element, int degree_cap) {
  ModuleElement in_counting_basis =
      element.basis() == BasisTag::S ? change_basis(element, BasisTag::R) : element;
  PhiImage image;
  std::map<int, std::vector<long long>> histograms;
  for (const auto& [index, c] : in_counting_basis.terms()) {
    int n = index_degree(index);
    if (n > degree_cap)
      throw std::domain_error("phi is capped at degree " + std::to_string(degree_cap));
    auto it = image.find(n);
    if (it == image.end())
      it = image.emplace(n, PhiComponent{BiPoly(), Rat(1, int_pow(2, n - 1) * factorial(n))}).first;
    if (in_counting_basis.basis() == BasisTag::G) {
      it->second.poly += c;
    } else {
      auto hit = histograms.find(n);
      if (hit == histograms.end()) hit = histograms.emplace(n, descmask_histogram(n)).first;
      it->second.poly += c * BiPoly::constant(scdes_count(as_composition(index), hit->second));
    }
  }
  for (auto it = image.begin(); it != image.end();) {
    if (it->second.poly.is_zero()) {
      it = image.erase(it);
    } else {
      ++it;
    }
  }
  return image;
}

ModuleElement pi_truncated(int i, int j, int N) {
  if (i < 1) throw std::invalid_argument("pi_truncated: i must be at least 1");
  if (j < 0) throw std::invalid_argument("pi_truncated: j must be nonnegative");
  if (N < 1) throw std::invalid_argument("pi_truncated: N must be at least 1");
  ModuleElement out(BasisTag::S);
  for (int n = 1; n <= N; ++n) {
    SegmentedComposition::for_each(n, [&](const SegmentedComposition& index) {
      if (index.des() == i && index.seg() == j) out.add(index, BiPoly::constant(1));
    });
  }
  return out;
}

}  // namespace segeuler
