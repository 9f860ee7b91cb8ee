#include "segeuler/tables.hpp"

#include <bit>
#include <stdexcept>

#include "segeuler/segperm.hpp"

namespace segeuler {

std::vector<Int> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_row: n must be nonnegative");
  std::vector<Int> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(m, 0);
    for (int k = 0; k < m; ++k) {
      Int v = (k + 1) * (k < static_cast<int>(row.size()) ? row[k] : Int(0));
      if (k >= 1) v += (m - k) * row[k - 1];
      next[k] = v;
    }
    row = std::move(next);
  }
  return row;
}

Int eulerian(int n, int k) {
  if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
  auto row = eulerian_row(n);
  if (k < 0 || k >= static_cast<int>(row.size())) return 0;
  return row[k];
}

Int stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be nonnegative");
  if (k > n) return 0;
  // triangle by S(n,k) = S(n-1,k-1) + k S(n-1,k)
  std::vector<Int> row{1};  // S(0, .)
  for (int m = 1; m <= n; ++m) {
    std::vector<Int> next(m + 1, 0);
    for (int c = 1; c <= m; ++c) {
      next[c] = (c - 1 < static_cast<int>(row.size()) ? row[c - 1] : Int(0));
      if (c < static_cast<int>(row.size())) next[c] += c * row[c];
    }
    row = std::move(next);
  }
  return row[k];
}

Int ordered_bell(int n) {
  if (n < 0) throw std::invalid_argument("ordered_bell: n must be nonnegative");
  if (n == 0) return 1;
  Int total = 0;
  for (int r = 0; r < n; ++r) total += stirling2(n, r + 1) * factorial(r + 1);
  return total;
}

std::string method_name(KMethod m) {
  switch (m) {
    case KMethod::enumerate: return "enumerate";
    case KMethod::recurrence_n: return "recurrence_n";
    case KMethod::recurrence_j: return "recurrence_j";
    case KMethod::closed_form: return "closed_form";
  }
  return "?";
}

std::string method_name(TMethod m) {
  return m == TMethod::sum ? "sum" : "recurrence";
}

Int CountTable::value(std::initializer_list<int> index) const {
  auto it = entries.find(std::vector<int>(index));
  return it == entries.end() ? Int(0) : it->second;
}

namespace {

// Dense K slice, K[i][j] for 0 <= i+j < n, zero elsewhere.
using Slice = std::vector<std::vector<Int>>;

Slice blank_slice(int n) { return Slice(n, std::vector<Int>(n, 0)); }

Int slice_at(const Slice& s, int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(s.size()) || j >= static_cast<int>(s.size()))
    return 0;
  return s[i][j];
}

Slice next_slice(const Slice& prev, int n) {
  // K(n,i,j) = (i+j+1)[K(n-1,i,j) + K(n-1,i,j-1)]
  //          + (n-i-j)[K(n-1,i-1,j) + K(n-1,i-1,j-1)]
  Slice out = blank_slice(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      out[i][j] = (i + j + 1) * (slice_at(prev, i, j) + slice_at(prev, i, j - 1)) +
                  (n - i - j) * (slice_at(prev, i - 1, j) + slice_at(prev, i - 1, j - 1));
    }
  }
  return out;
}

Slice slice_by_recurrence_n(int n) {
  Slice s = blank_slice(1);
  s[0][0] = 1;
  for (int m = 2; m <= n; ++m) s = next_slice(s, m);
  return s;
}

Slice slice_by_recurrence_j(int n) {
  Slice s = blank_slice(n);
  auto row = eulerian_row(n);
  for (int i = 0; i < n; ++i) s[i][0] = row[i];
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i + j < n; ++i) {
      Int numerator = (n - i - j) * s[i][j - 1] + (i + 1) * slice_at(s, i + 1, j - 1);
      Int quotient, remainder;
      boost::multiprecision::divide_qr(numerator, Int(j), quotient, remainder);
      if (remainder != 0)
        throw std::logic_error("recurrence_j division by j is not exact; the table is corrupt");
      s[i][j] = quotient;
    }
  }
  return s;
}

Slice slice_by_closed_form(int n) {
  Slice s = blank_slice(n);
  auto row = eulerian_row(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      Int total = 0;
      for (int k = 0; k < n; ++k)
        total += binomial(k, i) * binomial(n - 1 - k, i + j - k) * row[k];
      s[i][j] = total;
    }
  }
  return s;
}

Slice slice_by_enumeration(int n, int oracle_cap) {
  if (n > oracle_cap)
    throw std::domain_error("K enumeration for n=" + std::to_string(n) +
                            " exceeds the oracle cap " + std::to_string(oracle_cap) +
                            " (raise --oracle-cap)");
  std::vector<std::vector<unsigned long long>> counts(n, std::vector<unsigned long long>(n, 0));
  const std::uint32_t bar_limit = n >= 1 ? (1u << (n - 1)) : 1u;
  for_each_word_descmask(n, [&](const std::vector<int>&, std::uint32_t descmask) {
    for (std::uint32_t bars = 0; bars < bar_limit; ++bars) {
      int i = std::popcount(descmask & ~bars);
      int j = std::popcount(bars);
      ++counts[i][j];
    }
  });
  Slice s = blank_slice(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) s[i][j] = counts[i][j];
  return s;
}

CountTable slice_to_table(const Slice& s, int n, const std::string& method) {
  CountTable table;
  table.n = n;
  table.method = method;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) table.entries[{i, j}] = s[i][j];
  return table;
}

}  // namespace

CountTable k_table(int n, KMethod method, int oracle_cap) {
  if (n < 1) throw std::invalid_argument("k_table: n must be positive");
  Slice s;
  switch (method) {
    case KMethod::enumerate: s = slice_by_enumeration(n, oracle_cap); break;
    case KMethod::recurrence_n: s = slice_by_recurrence_n(n); break;
    case KMethod::recurrence_j: s = slice_by_recurrence_j(n); break;
    case KMethod::closed_form: s = slice_by_closed_form(n); break;
  }
  return slice_to_table(s, n, method_name(method));
}

std::vector<CountTable> k_tables_up_to(int n_max, KMethod method) {
  std::vector<CountTable> out;
  if (n_max < 1) return out;
  if (method == KMethod::recurrence_n) {
    Slice s = blank_slice(1);
    s[0][0] = 1;
    out.push_back(slice_to_table(s, 1, method_name(method)));
    for (int n = 2; n <= n_max; ++n) {
      s = next_slice(s, n);
      out.push_back(slice_to_table(s, n, method_name(method)));
    }
  } else {
    for (int n = 1; n <= n_max; ++n) out.push_back(k_table(n, method));
  }
  return out;
}

CountTable t_table(int n, TMethod method) {
  if (n < 0) throw std::invalid_argument("t_table: n must be nonnegative");
  CountTable table;
  table.n = n;
  table.method = method_name(method);
  if (n == 0) {
    table.entries[{0}] = 1;
    return table;
  }
  if (method == TMethod::sum) {
    CountTable k = k_table(n, KMethod::recurrence_n);
    for (int c = 0; c < n; ++c) {
      Int total = 0;
      for (int j = 0; c + j < n; ++j) total += k.value({c, j});
      table.entries[{c}] = total;
    }
    return table;
  }
  // T(n,k) = (n-k)T(n-1,k-1) + (n+1)T(n-1,k) + (k+1)T(n-1,k+1), T(1,0) = 1
  std::vector<Int> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(m, 0);
    auto prev = [&](int k) { return k < 0 || k >= static_cast<int>(row.size()) ? Int(0) : row[k]; };
    for (int k = 0; k < m; ++k)
      next[k] = (m - k) * prev(k - 1) + (m + 1) * prev(k) + (k + 1) * prev(k + 1);
    row = std::move(next);
  }
  for (int k = 0; k < n; ++k) table.entries[{k}] = row[k];
  return table;
}

std::vector<CountTable> t_tables_up_to(int n_max, TMethod method) {
  std::vector<CountTable> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(t_table(n, method));
  return out;
}

KTables KTables::build(int n_max, KMethod method) {
  KTables kt;
  kt.slices_ = k_tables_up_to(n_max, method);
  return kt;
}

const CountTable& KTables::at(int n) const {
  if (n < 1 || n > n_max()) throw std::out_of_range("KTables::at: n out of range");
  return slices_[n - 1];
}

void KTables::perturb(int n, int i, int j, const Int& delta) {
  if (n < 1 || n > n_max()) throw std::out_of_range("KTables::perturb: n out of range");
  slices_[n - 1].entries[{i, j}] += delta;
  slices_[n - 1].method += "+perturbed";
}

namespace {

std::string index_key(int n, const std::vector<int>& index) {
  std::string key = std::to_string(n);
  for (int v : index) key += "," + std::to_string(v);
  return key;
}

}  // namespace

std::string tables_json(std::span<const CountTable> tables) {
  std::string out = "{";
  bool first = true;
  for (const auto& table : tables) {
    for (const auto& [index, v] : table.entries) {
      if (!first) out += ",";
      first = false;
      out += "\"" + index_key(table.n, index) + "\":\"" + v.str() + "\"";
    }
  }
  out += "}";
  return out;
}

std::string tables_csv(std::span<const CountTable> tables) {
  bool k_style = !tables.empty() && tables.front().entries.begin()->first.size() == 2;
  std::string out = k_style ? "n,i,j,value\n" : "n,k,value\n";
  for (const auto& table : tables)
    for (const auto& [index, v] : table.entries)
      out += index_key(table.n, index) + "," + v.str() + "\n";
  return out;
}

std::string t_latex(std::span<const CountTable> rows) {
  std::size_t width = 1;
  for (const auto& row : rows) width = std::max(width, row.entries.size());
  std::string out = "\\begin{array}{r|" + std::string(width, 'c') + "}\n";
  out += "n\\backslash k";
  for (std::size_t k = 0; k < width; ++k) out += " & " + std::to_string(k);
  out += " \\\\ \\hline\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    for (const auto& [index, v] : row.entries) out += " & " + v.str();
    out += " \\\\\n";
  }
  out += "\\end{array}\n";
  return out;
}

std::string k_latex(std::span<const CountTable> slices) {
  std::string out;
  for (const auto& slice : slices) {
    int n = slice.n;
    out += "n=" + std::to_string(n) + ":\n";
    out += "\\begin{array}{r|" + std::string(n, 'c') + "}\n";
    out += "j\\backslash i";
    for (int i = 0; i < n; ++i) out += " & " + std::to_string(i);
    out += " \\\\ \\hline\n";
    for (int j = 0; j < n; ++j) {
      out += std::to_string(j);
      for (int i = 0; i + j < n; ++i) out += " & " + slice.value({i, j}).str();
      out += " \\\\\n";
    }
    out += "\\end{array}\n";
  }
  return out;
}

std::string bfile(std::span<const std::pair<long long, Int>> rows) {
  std::string out;
  for (const auto& [index, v] : rows) out += std::to_string(index) + " " + v.str() + "\n";
  return out;
}

}  // namespace segeuler
