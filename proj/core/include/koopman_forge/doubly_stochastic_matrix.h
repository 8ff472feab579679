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

#ifndef KOOPMAN_FORGE_DOUBLY_STOCHASTIC_MATRIX_H_
#define KOOPMAN_FORGE_DOUBLY_STOCHASTIC_MATRIX_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "koopman_forge/rat.h"

namespace koopman_forge {

// A permutation of {0, ..., size-1}; sigma[j] is the image of j.
using Permutation = std::vector<std::size_t>;

// Exact 2^n x 2^n matrix with nonnegative entries and unit row and column
// sums. Entry (j, k) is the normalized block mass 2^n * a_jk, where a_jk is
// the measure carried from dyadic cell I_j into I_k.
class DoublyStochasticMatrix {
 public:
  // Throws ValidationError ("matrix size must be 2^n") if the matrix is not
  // square of power-of-two size, or if an entry is negative or a row or
  // column does not sum to exactly 1.
  explicit DoublyStochasticMatrix(const std::vector<std::vector<Rat>>& rows);

  static DoublyStochasticMatrix Identity(int level);
  // Entry (j, sigma[j]) is 1. Throws ValidationError if sigma is not a
  // permutation of power-of-two size.
  static DoublyStochasticMatrix FromPermutation(std::span<const std::size_t> sigma);

  int level() const { return level_; }
  std::size_t size() const { return size_; }
  const Rat& operator()(std::size_t j, std::size_t k) const {
    return entries_[j * size_ + k];
  }
  // Raw block entry a_jk = entry / 2^n.
  Rat BlockMass(std::size_t j, std::size_t k) const;
  std::vector<std::vector<Rat>> Rows() const;

  // The same mass flow seen on the coarser partition of level `level`.
  // Throws ValidationError unless 0 <= level <= this->level().
  DoublyStochasticMatrix Coarsen(int level) const;

  friend bool operator==(const DoublyStochasticMatrix&,
                         const DoublyStochasticMatrix&) = default;

 private:
  DoublyStochasticMatrix(int level, std::vector<Rat> entries);
  void Validate() const;

  int level_ = 0;
  std::size_t size_ = 1;
  std::vector<Rat> entries_;

  friend DoublyStochasticMatrix MakeMatrixFromFlows(int, std::vector<Rat>);
};

// Builds a matrix from row-major entries (validated).
DoublyStochasticMatrix MakeMatrixFromFlows(int level, std::vector<Rat> entries);

std::ostream& operator<<(std::ostream& os, const DoublyStochasticMatrix& m);

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_DOUBLY_STOCHASTIC_MATRIX_H_
