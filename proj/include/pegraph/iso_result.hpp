#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace pegraph {

enum class IsoStatus { isomorphic, non_isomorphic, budget_exhausted };

constexpr std::string_view to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::isomorphic: return "isomorphic";
    case IsoStatus::non_isomorphic: return "non-isomorphic";
    case IsoStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

// mapping[v] is the image of source vertex (or element) v.
using IsoCertificate = std::vector<int>;

struct IsoResult {
  IsoStatus status = IsoStatus::non_isomorphic;
  IsoCertificate mapping;
  std::uint64_t nodes = 0;

  bool isomorphic() const noexcept { return status == IsoStatus::isomorphic; }
  bool exhausted() const noexcept { return status == IsoStatus::budget_exhausted; }
};

constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

}  // namespace pegraph
