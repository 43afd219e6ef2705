#include "fatcode/combinatorics.hpp"

namespace fatcode {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  const unsigned __int128 limit = (unsigned __int128){1} << 63;
  // acc * (n-k+i) is always divisible by i at step i, so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc >= limit) {
      throw Error(ErrorKind::Overflow, "binomial coefficient exceeds 2^63");
    }
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

void enumerate(int vars_left, int degree_left, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  if (vars_left == 0) {
    prefix.push_back(degree_left);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  // Descending first exponent gives descending lex order overall.
  for (int e = degree_left; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(vars_left - 1, degree_left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> monomial_exponents(int num_vars_minus_one, int degree) {
  if (num_vars_minus_one < 0 || degree < 0) {
    throw Error(ErrorKind::IndexOutOfRange, "monomial_exponents needs n >= 0, d >= 0");
  }
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(binomial(num_vars_minus_one + degree, degree)));
  std::vector<int> prefix;
  enumerate(num_vars_minus_one, degree, prefix, out);
  return out;
}

std::vector<std::vector<int>> monomial_exponents_up_to(int num_vars_minus_one,
                                                       int max_degree) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = monomial_exponents(num_vars_minus_one, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace fatcode
