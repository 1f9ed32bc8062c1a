#pragma once

#include <map>
#include <optional>
#include <vector>

#include "divfree/rational.hpp"

namespace divfree {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact rank via fraction-preserving Gaussian elimination.
int rank(Matrix m);

/// Exact right nullspace basis of m (rows of the result are kernel vectors).
Matrix nullspace(const Matrix& m);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);

/// Solves x * m = v for a row vector x (m square, invertible use-cases);
/// absent when inconsistent.
std::optional<std::vector<Rational>> solve_row(const Matrix& m,
                                               const std::vector<Rational>& v);

/// Incrementally maintained exact row-echelon span of sparse vectors over an
/// arbitrary ordered key type.  Rows are kept mutually reduced; the pivot of
/// a new row is the surviving entry with the smallest rational bit size.
template <typename Key>
class SpanBasis {
 public:
  using Vec = std::map<Key, Rational>;

  int dimension() const { return static_cast<int>(rows_.size()); }

  /// Residual of v after elimination against the current basis.
  Vec reduce(Vec v) const {
    // Rows are mutually reduced, so one elimination per pivot key suffices.
    for (auto it = v.begin(); it != v.end();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;  // row is normalized to pivot coefficient 1
      v.erase(it);
      for (const auto& [k, rc] : row->second) {
        auto [pos, inserted] = v.try_emplace(k, 0);
        pos->second -= c * rc;
        if (pos->second == 0) v.erase(pos);
      }
      it = v.upper_bound(row->first);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when v was already contained.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto pivot = v.begin();
    for (auto it = v.begin(); it != v.end(); ++it)
      if (bit_size(it->second) < bit_size(pivot->second)) pivot = it;
    Key pkey = pivot->first;
    Rational pc = pivot->second;
    for (auto& [k, c] : v) c /= pc;
    v.erase(pkey);
    // Keep existing rows reduced against the new pivot.
    for (auto& [rk, row] : rows_) {
      auto hit = row.find(pkey);
      if (hit == row.end()) continue;
      Rational c = hit->second;
      row.erase(hit);
      for (const auto& [k, vc] : v) {
        auto [pos, inserted] = row.try_emplace(k, 0);
        pos->second -= c * vc;
        if (pos->second == 0) row.erase(pos);
      }
    }
    rows_.emplace(std::move(pkey), std::move(v));
    return true;
  }

  const std::map<Key, Vec>& rows() const { return rows_; }

 private:
  std::map<Key, Vec> rows_;  // pivot key -> remainder of the row
};

}  // namespace divfree
