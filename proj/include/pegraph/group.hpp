#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pegraph/error.hpp"

namespace pegraph {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Element indices are 0..order-1; index 0 is always the identity.
using Element = int;

// Sorted ascending, no duplicates.
using ElementSet = std::vector<Element>;

constexpr Element kIdentity = 0;

// Largest order any constructor will tabulate.
constexpr int kMaxGroupOrder = 4096;

struct ValidationOptions {
  // Associativity is checked on every triple up to this order and sampled above it.
  int full_associativity_limit = 512;
  // Number of sampled triples per element when the full check is skipped.
  int samples_per_element = 10;
  std::uint64_t seed = 0x5eed;
};

// A finite group given by its Cayley table. Immutable once built; element
// orders and cyclic-subgroup bitsets are computed eagerly in the constructor so
// that a const FiniteGroup can be shared freely between threads.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<Element>> table, std::string provenance = {},
              const ValidationOptions& options = {})
      : name_(std::move(name)), provenance_(std::move(provenance)) {
    const auto n = static_cast<int>(table.size());
    if (n < 1) invalid_parameter("group table must be non-empty");
    if (n > kMaxGroupOrder) {
      invalid_parameter("group order " + std::to_string(n) + " exceeds the table limit " +
                        std::to_string(kMaxGroupOrder));
    }
    order_ = n;
    table_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) invalid_parameter("group table is not square");
      table_.insert(table_.end(), row.begin(), row.end());
    }
    validate(options);
    compute_caches();
  }

  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverses_[a]; }

  bool contains(Element x) const noexcept { return x >= 0 && x < order_; }

  int element_order(Element x) const {
    check_index(x);
    return orders_[x];
  }
  const std::vector<int>& element_orders() const noexcept { return orders_; }

  // Membership bitset of the cyclic subgroup generated by z.
  const Bitset& cyclic_subgroup(Element z) const {
    check_index(z);
    return cyclic_[z];
  }

  // Bitset of all z such that x lies in the cyclic subgroup generated by z.
  const Bitset& cyclic_containers(Element x) const {
    check_index(x);
    return containers_[x];
  }

  // One generator (the lowest index) per maximal cyclic subgroup.
  const std::vector<Element>& maximal_cyclic_generators() const noexcept { return maximal_cyclic_; }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> rows(order_);
    for (int a = 0; a < order_; ++a) {
      rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                     table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
    }
    return rows;
  }

  void check_index(Element x) const {
    if (!contains(x)) {
      invalid_parameter("element index " + std::to_string(x) + " out of range for group of order " +
                        std::to_string(order_));
    }
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  void validate(const ValidationOptions& options) {
    const int n = order_;
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n; ++b) {
        const Element c = mul(a, b);
        if (c < 0 || c >= n) invalid_parameter("group table entry out of range");
        if (seen[c]) invalid_parameter("group table row " + std::to_string(a) + " is not a permutation");
        seen[c] = 1;
      }
    }
    for (int b = 0; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n; ++a) {
        const Element c = mul(a, b);
        if (seen[c]) invalid_parameter("group table column " + std::to_string(b) + " is not a permutation");
        seen[c] = 1;
      }
    }
    for (int x = 0; x < n; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x) invalid_parameter("index 0 is not a two-sided identity");
    }
    auto associative = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
    if (n <= options.full_associativity_limit) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          const Element ab = mul(a, b);
          for (int c = 0; c < n; ++c) {
            if (mul(ab, c) != mul(a, mul(b, c))) invalid_parameter("group table is not associative");
          }
        }
      }
    } else {
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const std::int64_t samples = static_cast<std::int64_t>(options.samples_per_element) * n;
      for (std::int64_t s = 0; s < samples; ++s) {
        if (!associative(pick(rng), pick(rng), pick(rng))) invalid_parameter("group table is not associative");
      }
    }
  }

  void compute_caches() {
    const int n = order_;
    inverses_.assign(n, 0);
    orders_.assign(n, 1);
    cyclic_.assign(n, Bitset(n));
    containers_.assign(n, Bitset(n));
    for (int z = 0; z < n; ++z) {
      Element power = z;
      int k = 1;
      cyclic_[z].set(0);
      while (power != kIdentity) {
        cyclic_[z].set(power);
        inverses_[z] = power;  // ends as z^(k-1) = z^-1
        power = mul(power, z);
        ++k;
      }
      orders_[z] = k;
    }
    inverses_[0] = 0;
    for (int z = 0; z < n; ++z) {
      for (auto x = cyclic_[z].find_first(); x != Bitset::npos; x = cyclic_[z].find_next(x)) {
        containers_[x].set(z);
      }
    }
    // <z> is maximal iff every w whose cyclic subgroup contains z has the same order.
    std::vector<char> claimed(n, 0);
    for (int z = 0; z < n; ++z) {
      if (claimed[z]) continue;
      bool maximal = true;
      for (auto w = containers_[z].find_first(); w != Bitset::npos; w = containers_[z].find_next(w)) {
        if (orders_[w] != orders_[z]) {
          maximal = false;
          break;
        }
      }
      // Every generator of <z> is a container of z with equal order, so claim them all.
      for (auto w = containers_[z].find_first(); w != Bitset::npos; w = containers_[z].find_next(w)) {
        if (orders_[w] == orders_[z]) claimed[w] = 1;
      }
      if (maximal) maximal_cyclic_.push_back(z);
    }
  }

  std::string name_;
  std::string provenance_;
  int order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<int> orders_;
  std::vector<Bitset> cyclic_;
  std::vector<Bitset> containers_;
  std::vector<Element> maximal_cyclic_;
};

}  // namespace pegraph
