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

#ifndef SKEWMAT_BIGINT_H_
#define SKEWMAT_BIGINT_H_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewmat {

using BigInt = boost::multiprecision::cpp_int;

// Non-negative residue of k modulo m (m > 0).
inline uint64_t ModReduce(const BigInt& k, uint64_t m) {
  BigInt r = k % m;
  if (r < 0) r += m;
  return static_cast<uint64_t>(r);
}

inline BigInt IntPow(const BigInt& base, uint64_t e) {
  BigInt r = 1;
  for (uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace skewmat

#endif  // SKEWMAT_BIGINT_H_
