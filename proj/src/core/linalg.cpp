#include "core/linalg.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace modstab {

SparseVector make_sparse(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [column, value] : entries) {
    if (!out.empty() && out.back().first == column) {
      out.back().second += value;
      if (out.back().second == 0) out.pop_back();
    } else if (value != 0) {
      out.emplace_back(column, std::move(value));
    }
  }
  return out;
}

void axpy(SparseVector& v, const Rational& factor, const SparseVector& w) {
  if (factor == 0 || w.empty()) return;
  SparseVector out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == v.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sum != 0) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

Rational entry(const SparseVector& v, std::size_t column) {
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == column) ? it->second : Rational(0);
}

EchelonBasis::EchelonBasis(std::size_t columns) : pivot_row_(columns, kNone) {}

std::size_t EchelonBasis::insert(SparseVector v) {
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    if (lead >= columns()) throw ContractViolation("vector has a column outside the ambient space");
    const std::size_t row = pivot_row_[lead];
    if (row == kNone) {
      const Rational scale = 1 / v.front().second;
      for (auto& [column, value] : v) value *= scale;
      pivot_row_[lead] = rows_.size();
      rows_.push_back(std::move(v));
      return lead;
    }
    const Rational factor = -v.front().second;
    axpy(v, factor, rows_[row]);
  }
  return columns();
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::vector<Rational> unused;
  return reduce(std::move(v), unused);
}

SparseVector EchelonBasis::reduce(SparseVector v, std::vector<Rational>& coordinates) const {
  coordinates.assign(rows_.size(), Rational(0));
  // Eliminating the smallest pivot column present only introduces larger
  // columns, so a forward cursor suffices.
  std::size_t cursor = 0;
  while (true) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& e) {
      return e.first >= cursor && pivot_row_[e.first] != kNone;
    });
    if (it == v.end()) return v;
    const std::size_t column = it->first;
    const std::size_t row = pivot_row_[column];
    const Rational factor = it->second;
    coordinates[row] += factor;
    axpy(v, -factor, rows_[row]);
    cursor = column + 1;
  }
}

std::vector<Rational> EchelonBasis::back_substitute() const {
  if (columns() == 0) return {};
  const std::size_t unknowns = columns() - 1;
  std::vector<Rational> x(unknowns, Rational(0));
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row(a) > pivot_of_row(b); });
  for (std::size_t r : order) {
    const std::size_t pivot = pivot_of_row(r);
    if (pivot == unknowns) continue;
    Rational value = 0;
    for (const auto& [column, coefficient] : rows_[r]) {
      if (column == pivot) continue;
      if (column == unknowns) value += coefficient;
      else value -= coefficient * x[column];
    }
    x[pivot] = value;
  }
  return x;
}

}  // namespace modstab
