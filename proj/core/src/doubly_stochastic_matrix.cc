// Copyright 2026 The Koopman Forge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "koopman_forge/doubly_stochastic_matrix.h"

#include <bit>
#include <string>
#include <utility>

#include "koopman_forge/errors.h"

namespace koopman_forge {
namespace {

int LevelOfSize(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw ValidationError("matrix size must be 2^n, got " +
                          std::to_string(size) + " rows");
  }
  return std::countr_zero(size);
}

}  // namespace

DoublyStochasticMatrix::DoublyStochasticMatrix(
    const std::vector<std::vector<Rat>>& rows)
    : level_(LevelOfSize(rows.size())), size_(rows.size()) {
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) {
      throw ValidationError("matrix must be square: row has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(size_));
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  Validate();
}

DoublyStochasticMatrix::DoublyStochasticMatrix(int level, std::vector<Rat> entries)
    : level_(level), size_(std::size_t{1} << level), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw ValidationError("matrix entry count does not match level " +
                          std::to_string(level));
  }
  Validate();
}

DoublyStochasticMatrix MakeMatrixFromFlows(int level, std::vector<Rat> entries) {
  return DoublyStochasticMatrix(level, std::move(entries));
}

void DoublyStochasticMatrix::Validate() const {
  std::vector<Rat> column_sums(size_);
  for (std::size_t j = 0; j < size_; ++j) {
    Rat row_sum = 0;
    for (std::size_t k = 0; k < size_; ++k) {
      const Rat& e = (*this)(j, k);
      if (e.sign() < 0) {
        throw ValidationError("matrix entry (" + std::to_string(j) + ", " +
                              std::to_string(k) + ") = " + e.ToString() +
                              " is negative");
      }
      row_sum += e;
      column_sums[k] += e;
    }
    if (row_sum != 1) {
      throw ValidationError("matrix row " + std::to_string(j) + " sums to " +
                            row_sum.ToString() + ", not 1");
    }
  }
  for (std::size_t k = 0; k < size_; ++k) {
    if (column_sums[k] != 1) {
      throw ValidationError("matrix column " + std::to_string(k) + " sums to " +
                            column_sums[k].ToString() + ", not 1");
    }
  }
}

DoublyStochasticMatrix DoublyStochasticMatrix::Identity(int level) {
  const std::size_t size = std::size_t{1} << level;
  std::vector<Rat> entries(size * size);
  for (std::size_t j = 0; j < size; ++j) entries[j * size + j] = 1;
  return DoublyStochasticMatrix(level, std::move(entries));
}

DoublyStochasticMatrix DoublyStochasticMatrix::FromPermutation(
    std::span<const std::size_t> sigma) {
  const int level = LevelOfSize(sigma.size());
  const std::size_t size = sigma.size();
  std::vector<Rat> entries(size * size);
  for (std::size_t j = 0; j < size; ++j) {
    if (sigma[j] >= size) {
      throw ValidationError("permutation entry " + std::to_string(sigma[j]) +
                            " out of range");
    }
    entries[j * size + sigma[j]] = 1;
  }
  // A repeated image leaves some column empty, which Validate rejects.
  return DoublyStochasticMatrix(level, std::move(entries));
}

Rat DoublyStochasticMatrix::BlockMass(std::size_t j, std::size_t k) const {
  return (*this)(j, k) * Rat::Pow2(-level_);
}

std::vector<std::vector<Rat>> DoublyStochasticMatrix::Rows() const {
  std::vector<std::vector<Rat>> rows(size_);
  for (std::size_t j = 0; j < size_; ++j) {
    rows[j].assign(entries_.begin() + static_cast<std::ptrdiff_t>(j * size_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((j + 1) * size_));
  }
  return rows;
}

DoublyStochasticMatrix DoublyStochasticMatrix::Coarsen(int level) const {
  if (level < 0 || level > level_) {
    throw ValidationError("cannot coarsen a level-" + std::to_string(level_) +
                          " matrix to level " + std::to_string(level));
  }
  const int shift = level_ - level;
  const std::size_t size = std::size_t{1} << level;
  std::vector<Rat> entries(size * size);
  for (std::size_t j = 0; j < size_; ++j) {
    for (std::size_t k = 0; k < size_; ++k) {
      entries[(j >> shift) * size + (k >> shift)] += (*this)(j, k);
    }
  }
  const Rat scale = Rat::Pow2(-shift);
  for (Rat& e : entries) e *= scale;
  return DoublyStochasticMatrix(level, std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const DoublyStochasticMatrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k > 0) os << ' ';
      os << m(j, k);
    }
    os << '\n';
  }
  return os;
}

}  // namespace koopman_forge
