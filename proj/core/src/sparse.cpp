#include "hopfkit/sparse.hpp"

#include <algorithm>

namespace hopfkit {

SparseVec SparseVec::single(std::size_t i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.terms.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_dense(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.terms.emplace_back(i, v[i]);
  return out;
}

Vector SparseVec::to_dense(FieldSpec f, std::size_t n) const {
  Vector out = zero_vector(f, n);
  for (const auto& [i, c] : terms) out.at(i) += c;
  return out;
}

void SparseVec::normalize() {
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Scalar>> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
  terms = std::move(merged);
}

namespace {

// a := a - f * b, both sorted
void axpy_sorted(SparseVec& a, const Scalar& f, const SparseVec& b) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  out.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.push_back(std::move(a.terms[i++]));
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.emplace_back(b.terms[j].first, -(f * b.terms[j].second));
      ++j;
    } else {
      Scalar v = std::move(a.terms[i].second);
      v -= f * b.terms[j].second;
      if (!v.is_zero()) out.emplace_back(a.terms[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a.terms = std::move(out);
}

}  // namespace

bool SparseRowReducer::insert(SparseVec row) {
  row.normalize();
  while (!row.empty()) {
    const std::size_t lead = row.terms.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Scalar inv = row.terms.front().second.inverse();
      if (!inv.is_one())
        for (auto& t : row.terms) t.second *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Scalar f = row.terms.front().second;
    axpy_sorted(row, f, it->second);
  }
  return false;
}

std::vector<SparseVec> sparse_kernel(std::vector<SparseVec> rows, std::size_t ncols, FieldSpec f) {
  std::map<std::size_t, SparseVec> pivots;
  for (auto& row : rows) {
    row.normalize();
    while (!row.empty()) {
      const std::size_t lead = row.terms.front().first;
      if (lead >= ncols) throw DimensionMismatch("sparse_kernel: column index out of range");
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Scalar inv = row.terms.front().second.inverse();
        if (!inv.is_one())
          for (auto& t : row.terms) t.second *= inv;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Scalar c = row.terms.front().second;
      axpy_sorted(row, c, it->second);
    }
  }
  // back substitution, highest pivot first, so every row ends up free of other pivot columns
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVec& row = it->second;
    for (;;) {
      bool changed = false;
      for (std::size_t k = 1; k < row.terms.size(); ++k) {
        const std::size_t col = row.terms[k].first;
        auto p = pivots.find(col);
        if (p == pivots.end()) continue;
        const Scalar c = row.terms[k].second;
        axpy_sorted(row, c, p->second);
        changed = true;
        break;
      }
      if (!changed) break;
    }
  }
  std::vector<SparseVec> out;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
  for (const auto& [p, row] : pivots)
    for (std::size_t k = 1; k < row.terms.size(); ++k) by_free[row.terms[k].first].emplace_back(p, -row.terms[k].second);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivots.count(c)) continue;
    SparseVec v;
    v.terms.emplace_back(c, Scalar::one(f));
    auto it = by_free.find(c);
    if (it != by_free.end()) v.terms.insert(v.terms.end(), it->second.begin(), it->second.end());
    v.normalize();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopfkit
