#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "lndlab/errors.hpp"
#include "lndlab/polyalg/coefficient.hpp"

namespace lnd::denslab {

using polyalg::Coeff;
using Vec = std::vector<Coeff>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Rank by fraction-free (Bareiss) elimination over the Gaussian integers,
/// after clearing denominators row by row. Pivots: first nonzero row in
/// each column, scanning columns left to right.
std::size_t rank(const Matrix& m);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q(i).
Rref rref(Matrix m);

/// Basis of {x : M x = 0}, one vector per free column (that entry set to 1).
std::vector<Vec> nullspace(const Matrix& m);

/// Incrementally maintained row space with distinct leading keys.
///
/// Vectors are sparse maps ordered by `Greater` (leading key first). A vector
/// is reduced only at its leading key, which is enough to decide membership:
/// distinct row leads cannot cancel. Each row can carry a combination tag
/// recording which inserted inputs produced it.
template <typename Key, typename Greater = std::greater<Key>>
class EchelonSpan {
 public:
  using Vector = std::map<Key, Coeff, Greater>;
  using Combination = std::map<std::size_t, Coeff>;
  struct Row {
    Vector vec;
    Combination combo;
  };

  /// Returns true (and stores the reduced row) when v is independent.
  bool insert(Vector v, Combination combo = {}) {
    reduce(v, &combo);
    if (v.empty()) return false;
    const Key lead = v.begin()->first;
    const Coeff scale = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= scale;
    for (auto& [k, c] : combo) c *= scale;
    pivot_of_.emplace(lead, rows_.size());
    rows_.push_back({std::move(v), std::move(combo)});
    return true;
  }

  bool contains(Vector v) const {
    reduce(v, nullptr);
    return v.empty();
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

 private:
  void reduce(Vector& v, Combination* combo) const {
    while (!v.empty()) {
      auto hit = pivot_of_.find(v.begin()->first);
      if (hit == pivot_of_.end()) return;
      const Row& row = rows_[hit->second];
      const Coeff factor = v.begin()->second;  // row lead is 1
      for (const auto& [k, c] : row.vec) axpy(v, k, -(factor * c));
      if (combo) {
        for (const auto& [k, c] : row.combo) axpy(*combo, k, -(factor * c));
      }
    }
  }

  template <typename M, typename K>
  static void axpy(M& target, const K& key, const Coeff& delta) {
    if (delta.is_zero()) return;
    auto [it, inserted] = target.try_emplace(key, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second.is_zero()) target.erase(it);
    }
  }

  std::vector<Row> rows_;
  std::map<Key, std::size_t, Greater> pivot_of_;
};

}  // namespace lnd::denslab
