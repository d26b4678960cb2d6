#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace pegraph::nt {

constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Prime factorization as ascending (prime, exponent) pairs.
inline std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Largest power of p dividing n.
constexpr int prime_part(int n, int p) {
  int part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

constexpr bool is_prime_power_of(int n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline int totient(int n) {
  int result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

// All integer partitions of k, each in non-increasing order, lexicographically descending.
inline std::vector<std::vector<int>> partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

}  // namespace pegraph::nt
