#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pegraph/group.hpp"
#include "pegraph/number_theory.hpp"

namespace pegraph {

namespace detail {

inline std::vector<std::vector<Element>> square_table(int n) {
  return std::vector<std::vector<Element>>(n, std::vector<Element>(n, 0));
}

inline int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace detail

// Z_n with table[a][b] = (a + b) mod n.
inline FiniteGroup make_cyclic(int n) {
  if (n < 1) invalid_parameter("cyclic group order must be >= 1, got " + std::to_string(n));
  if (n > kMaxGroupOrder) invalid_parameter("cyclic group order exceeds the table limit");
  auto table = detail::square_table(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  const std::string name = "Z" + std::to_string(n);
  return FiniteGroup(name, std::move(table), name);
}

// Dihedral group of the given order 2n: a^i at index i, a^i b at index n + i.
inline FiniteGroup make_dihedral(int order) {
  if (order < 6 || order % 2 != 0) {
    invalid_parameter("dihedral group order must be even and >= 6, got " + std::to_string(order));
  }
  if (order > kMaxGroupOrder) invalid_parameter("dihedral group order exceeds the table limit");
  const int n = order / 2;
  auto table = detail::square_table(order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int i = x % n, j = y % n;
      const bool xr = x >= n, yr = y >= n;
      // a^i b a^j = a^(i-j) b
      const int rot = xr ? detail::mod(i - j, n) : detail::mod(i + j, n);
      table[x][y] = (xr != yr) ? n + rot : rot;
    }
  }
  const std::string name = "D" + std::to_string(order);
  return FiniteGroup(name, std::move(table), name);
}

// Generalized quaternion group of order 4n: x^i at index i (i < 2n), x^i y at 2n + i.
// Relations x^n = y^2, x^(2n) = e, y^-1 x y = x^-1.
inline FiniteGroup make_generalized_quaternion(int order) {
  if (order < 8 || order % 4 != 0) {
    invalid_parameter("generalized quaternion order must be a multiple of 4 and >= 8, got " +
                      std::to_string(order));
  }
  if (order > kMaxGroupOrder) invalid_parameter("quaternion group order exceeds the table limit");
  const int n = order / 4;
  const int m = 2 * n;
  auto table = detail::square_table(order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int i = x % m, j = y % m;
      const bool xs = x >= m, ys = y >= m;
      int result;
      if (!xs && !ys) {
        result = detail::mod(i + j, m);
      } else if (!xs && ys) {
        result = m + detail::mod(i + j, m);
      } else if (xs && !ys) {
        result = m + detail::mod(i - j, m);
      } else {
        // x^i y x^j y = x^(i-j) y^2 = x^(i-j+n)
        result = detail::mod(i - j + n, m);
      }
      table[x][y] = result;
    }
  }
  const std::string name = "Q" + std::to_string(order);
  return FiniteGroup(name, std::move(table), name);
}

// S_n on one-line notation, permutations in lexicographic order (identity first).
// table[a][b] is the composite "apply b, then a".
inline FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 8) invalid_parameter("symmetric group degree must be in 1..8, got " + std::to_string(n));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  if (order > kMaxGroupOrder) invalid_parameter("symmetric group order exceeds the table limit");

  auto rank = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  auto table = detail::square_table(order);
  std::vector<int> composite(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) composite[i] = perms[a][perms[b][i]];
      table[a][b] = rank(composite);
    }
  }
  const std::string name = "S" + std::to_string(n);
  return FiniteGroup(name, std::move(table), name);
}

// Upper unitriangular 3x3 matrices over Z_p. The matrix with entries
// (a above-diagonal row 1, b above-diagonal row 2, c top-right) sits at index
// a*p^2 + b*p + c, and (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
inline FiniteGroup make_heisenberg(int p) {
  if (p == 2 || !nt::is_prime(p) || p > 13) {
    invalid_parameter("Heisenberg group needs an odd prime p <= 13, got " + std::to_string(p));
  }
  const int order = p * p * p;
  auto table = detail::square_table(order);
  for (int x = 0; x < order; ++x) {
    const int a = x / (p * p), b = (x / p) % p, c = x % p;
    for (int y = 0; y < order; ++y) {
      const int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const int ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      table[x][y] = ra * p * p + rb * p + rc;
    }
  }
  const std::string name = "Heis" + std::to_string(p);
  return FiniteGroup(name, std::move(table), name);
}

// G x H with (a, b) at index a*|H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), k = h.order();
  if (static_cast<long long>(m) * k > kMaxGroupOrder) {
    invalid_parameter("direct product order " + std::to_string(static_cast<long long>(m) * k) +
                      " exceeds the table limit");
  }
  const int order = m * k;
  auto table = detail::square_table(order);
  for (int x = 0; x < order; ++x) {
    const int a = x / k, b = x % k;
    for (int y = 0; y < order; ++y) {
      table[x][y] = g.mul(a, y / k) * k + h.mul(b, y % k);
    }
  }
  return FiniteGroup(g.name() + " x " + h.name(), std::move(table),
                     g.provenance() + " x " + h.provenance());
}

// Product of cyclic groups with the given orders, left to right. An empty list gives Z1.
inline FiniteGroup make_abelian(const std::vector<int>& cyclic_orders) {
  if (cyclic_orders.empty()) return make_cyclic(1);
  FiniteGroup result = make_cyclic(cyclic_orders.front());
  for (std::size_t i = 1; i < cyclic_orders.size(); ++i) {
    result = direct_product(result, make_cyclic(cyclic_orders[i]));
  }
  return result;
}

}  // namespace pegraph
