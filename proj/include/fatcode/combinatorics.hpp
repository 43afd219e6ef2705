#pragma once

#include <cstdint>
#include <vector>

#include "fatcode/errors.hpp"

namespace fatcode {

// C(n, k) computed exactly in unsigned 128-bit, throwing Overflow past 2^63.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// All exponent vectors (a_0, ..., a_n) with sum exactly `degree`, listed in
// descending lexicographic order. This is graded lex with x_0 > ... > x_n,
// the one monomial order used across the library: degree 2 in three
// variables enumerates as x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2.
std::vector<std::vector<int>> monomial_exponents(int num_vars_minus_one, int degree);

// Same, but all degrees from 0 up to `max_degree` inclusive, low degrees first.
std::vector<std::vector<int>> monomial_exponents_up_to(int num_vars_minus_one,
                                                       int max_degree);

// Calls visit(indices) for every strictly increasing k-subset of {0,...,n-1}
// in lexicographic order. visit returns false to abort the enumeration.
template <typename Visitor>
void for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace fatcode
