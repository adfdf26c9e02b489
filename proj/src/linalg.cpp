#include "tropocat/linalg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tropocat/error.hpp"

namespace tropocat {

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols,
                                           std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
}

Rational SparseRationalMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::tie(e.row, e.col) < std::tie(k.first, k.second);
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseRationalMatrix(cols_, rows_, std::move(t));
}

bool SparseRationalMatrix::operator==(const SparseRationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = o.entries_[i];
    if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
  }
  return true;
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InconsistentDims, "matrix shapes do not chain");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b.rows());
  for (const auto& e : b.entries()) brows[e.row].emplace_back(e.col, e.value);
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  for (const auto& e : a.entries()) {
    for (const auto& [col, v] : brows[e.col]) acc[{e.row, col}] += e.value * v;
  }
  std::vector<SparseRationalMatrix::Entry> out;
  for (auto& [k, v] : acc) out.push_back({k.first, k.second, v});
  return SparseRationalMatrix(a.rows(), b.cols(), std::move(out));
}

namespace {

using Row = std::vector<std::pair<std::size_t, Integer>>;

void normalize(Row& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

const Integer* find(const Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// p·row - a·pivot, with the column of the pivot cancelling.
Row eliminate(const Row& row, const Integer& a, const Row& pivot, const Integer& p) {
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -a * pivot[j].second);
      ++j;
    } else {
      Integer v = p * row[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m) {
  std::vector<Row> rows(m.rows());
  {
    std::vector<Integer> lcm(m.rows(), 1);
    for (const auto& e : m.entries()) {
      mpz_lcm(lcm[e.row].get_mpz_t(), lcm[e.row].get_mpz_t(), e.value.get_den_mpz_t());
    }
    for (const auto& e : m.entries()) {
      Integer v = e.value.get_num() * (lcm[e.row] / e.value.get_den());
      rows[e.row].emplace_back(e.col, std::move(v));
    }
    for (auto& r : rows) normalize(r);
  }
  std::vector<std::size_t> col_count(m.cols(), 0);
  std::vector<std::size_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    active.push_back(r);
    for (const auto& [c, v] : rows[r]) ++col_count[c];
  }
  std::size_t rk = 0;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < active.size(); ++k) {
      if (rows[active[k]].size() < rows[active[best]].size()) best = k;
    }
    const std::size_t pr = active[best];
    Row pivot = std::move(rows[pr]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    std::size_t pc = pivot.front().first;
    for (const auto& [c, v] : pivot) {
      if (col_count[c] < col_count[pc]) pc = c;
    }
    for (const auto& [c, v] : pivot) --col_count[c];
    const Integer p = *find(pivot, pc);
    ++rk;

    std::vector<std::size_t> keep;
    keep.reserve(active.size());
    for (auto r : active) {
      if (const Integer* a = find(rows[r], pc)) {
        for (const auto& [c, v] : rows[r]) --col_count[c];
        rows[r] = eliminate(rows[r], *a, pivot, p);
        for (const auto& [c, v] : rows[r]) ++col_count[c];
      }
      if (!rows[r].empty()) keep.push_back(r);
    }
    active = std::move(keep);
  }
  return rk;
}

std::vector<std::int64_t> betti(const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& ranks) {
  if (dims.size() != ranks.size()) {
    throw Error(ErrorCode::InconsistentDims, "dims and ranks differ in length");
  }
  std::vector<std::int64_t> out(dims.size());
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const std::size_t next = p + 1 < ranks.size() ? ranks[p + 1] : 0;
    const std::int64_t b = static_cast<std::int64_t>(dims[p]) - static_cast<std::int64_t>(ranks[p]) -
                           static_cast<std::int64_t>(next);
    if (b < 0) throw Error(ErrorCode::InconsistentDims, "negative Betti number");
    out[p] = b;
  }
  return out;
}

}  // namespace tropocat
