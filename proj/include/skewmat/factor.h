// Copyright 2026 The Authors.
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

// Factorization of ordinary polynomials over a finite field: squarefree,
// distinct-degree and Cantor-Zassenhaus equal-degree splitting.

#ifndef SKEWMAT_FACTOR_H_
#define SKEWMAT_FACTOR_H_

#include <cstdint>
#include <random>
#include <vector>

#include "skewmat/comm_poly.h"
#include "skewmat/field.h"

namespace skewmat {

struct Factor {
  CommPoly poly;  // monic
  uint32_t multiplicity = 1;
};

struct Factorization {
  FieldElem unit;
  // Sorted by degree, then by coefficient keys.
  std::vector<Factor> factors;
};

// f = prod poly^multiplicity with pairwise coprime squarefree parts; f monic
// and nonconstant gives a nonempty result.
std::vector<Factor> SquareFreeFactorization(const CommPoly& f);
// For squarefree monic f: products of all irreducible factors of each degree,
// as (product, degree).
std::vector<Factor> DistinctDegreeFactorization(const CommPoly& f);
// Splits a squarefree monic f whose irreducible factors all have degree d.
std::vector<CommPoly> EqualDegreeFactorization(const CommPoly& f, uint32_t d,
                                               std::mt19937_64& rng);

// Seed is mixed with the coefficient encoding of f, so results depend only on
// (f, seed).
Factorization Factorize(const CommPoly& f, uint64_t seed = 0);

// Distinct roots in the coefficient field, ascending key.
std::vector<FieldElem> DistinctRoots(const CommPoly& f, uint64_t seed = 0);
// Largest j with (y - r)^j | f; f nonzero.
uint32_t RootMultiplicity(const CommPoly& f, const FieldElem& r);

}  // namespace skewmat

#endif  // SKEWMAT_FACTOR_H_
