#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "huainf/scalar.hpp"

namespace huainf {

using SparseVector = std::vector<std::pair<int, mpq_class>>;  // sorted by index

SparseVector make_sparse(const std::map<int, mpq_class>& entries);

// Incremental row echelon form over Q or F_p with exact arithmetic.
class RowEchelon {
 public:
  explicit RowEchelon(Field f = Field::rationals());
  ~RowEchelon();
  RowEchelon(RowEchelon&&) noexcept;
  RowEchelon& operator=(RowEchelon&&) noexcept;

  // Adds a row; returns true when it was independent of the rows so far.
  bool insert(const SparseVector& row);
  // True when the row lies in the span of the inserted rows.
  bool contains(const SparseVector& row) const;
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::size_t rank(const std::vector<SparseVector>& rows, Field f = Field::rationals());

struct HomologyDegree {
  int degree = 0;
  std::size_t dim = 0;       // dim C^d
  std::size_t rank_out = 0;  // rank of d: C^d -> C^(d+1)
  std::size_t rank_in = 0;   // rank of d: C^(d-1) -> C^d
  std::size_t homology() const { return dim - rank_out - rank_in; }
};

}  // namespace huainf
