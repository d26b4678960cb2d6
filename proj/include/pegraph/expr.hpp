#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pegraph/constructors.hpp"
#include "pegraph/error.hpp"
#include "pegraph/number_theory.hpp"

namespace pegraph {

// Group expression syntax tree. Atoms carry the integer written after the
// letter; for D and Q that integer is the group order (D6 is S3, Q8 the quaternions).
struct GroupExpr {
  enum class Kind { cyclic, dihedral, quaternion, symmetric, heisenberg, product };

  Kind kind = Kind::cyclic;
  int param = 1;
  std::vector<GroupExpr> operands;  // exactly two for a product

  static GroupExpr atom(Kind kind, int param) { return GroupExpr{kind, param, {}}; }
  static GroupExpr product(GroupExpr left, GroupExpr right) {
    GroupExpr e{Kind::product, 0, {}};
    e.operands.push_back(std::move(left));
    e.operands.push_back(std::move(right));
    return e;
  }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::parse_error, "at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

// expr := atom ("x" atom)* ; atom := ("Z"|"D"|"Q"|"S") int | "Heis" int
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = atom();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && lower(text_[pos_]) == 'x') {
        ++pos_;
        e = GroupExpr::product(std::move(e), atom());
      } else {
        break;
      }
    }
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  GroupExpr atom() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected a group atom, found end of input");
    GroupExpr::Kind kind;
    switch (lower(text_[pos_])) {
      case 'z': kind = GroupExpr::Kind::cyclic; ++pos_; break;
      case 'd': kind = GroupExpr::Kind::dihedral; ++pos_; break;
      case 'q': kind = GroupExpr::Kind::quaternion; ++pos_; break;
      case 's': kind = GroupExpr::Kind::symmetric; ++pos_; break;
      case 'h':
        kind = GroupExpr::Kind::heisenberg;
        for (char expected : std::string_view("heis")) {
          if (pos_ >= text_.size() || lower(text_[pos_]) != expected) throw ParseError(pos_, "expected 'Heis'");
          ++pos_;
        }
        break;
      default:
        throw ParseError(pos_, "expected one of Z, D, Q, S, Heis");
    }
    const int value = integer();
    check_atom(kind, value, start);
    return GroupExpr::atom(kind, value);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxGroupOrder) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    return static_cast<int>(value);
  }

  static void check_atom(GroupExpr::Kind kind, int v, std::size_t at) {
    auto fail = [&](const std::string& why) { throw ParseError(at, why); };
    switch (kind) {
      case GroupExpr::Kind::cyclic:
        if (v < 1) fail("Z needs an order >= 1");
        break;
      case GroupExpr::Kind::dihedral:
        if (v < 6 || v % 2 != 0) fail("D" + std::to_string(v) + ": dihedral order must be even and >= 6");
        break;
      case GroupExpr::Kind::quaternion:
        if (v < 8 || v % 4 != 0) fail("Q" + std::to_string(v) + ": quaternion order must be a multiple of 4 and >= 8");
        break;
      case GroupExpr::Kind::symmetric:
        if (v < 1 || v > 8) fail("S" + std::to_string(v) + ": symmetric degree must be in 1..8");
        break;
      case GroupExpr::Kind::heisenberg:
        if (v == 2 || !nt::is_prime(v) || v > 13) fail("Heis" + std::to_string(v) + ": needs an odd prime <= 13");
        break;
      case GroupExpr::Kind::product:
        break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExpr parse_group_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// Normalized text form, e.g. "Q8 x Z15" or "Heis3".
inline std::string to_string(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::cyclic: return "Z" + std::to_string(e.param);
    case GroupExpr::Kind::dihedral: return "D" + std::to_string(e.param);
    case GroupExpr::Kind::quaternion: return "Q" + std::to_string(e.param);
    case GroupExpr::Kind::symmetric: return "S" + std::to_string(e.param);
    case GroupExpr::Kind::heisenberg: return "Heis" + std::to_string(e.param);
    case GroupExpr::Kind::product: return to_string(e.operands[0]) + " x " + to_string(e.operands[1]);
  }
  return {};
}

inline long long expr_order(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::cyclic:
    case GroupExpr::Kind::dihedral:
    case GroupExpr::Kind::quaternion: return e.param;
    case GroupExpr::Kind::symmetric: {
      long long f = 1;
      for (int i = 2; i <= e.param; ++i) f *= i;
      return f;
    }
    case GroupExpr::Kind::heisenberg: return static_cast<long long>(e.param) * e.param * e.param;
    case GroupExpr::Kind::product: return expr_order(e.operands[0]) * expr_order(e.operands[1]);
  }
  return 0;
}

inline FiniteGroup build_group(const GroupExpr& e) {
  if (expr_order(e) > kMaxGroupOrder) {
    invalid_parameter("'" + to_string(e) + "' has order " + std::to_string(expr_order(e)) +
                      ", above the table limit " + std::to_string(kMaxGroupOrder));
  }
  switch (e.kind) {
    case GroupExpr::Kind::cyclic: return make_cyclic(e.param);
    case GroupExpr::Kind::dihedral: return make_dihedral(e.param);
    case GroupExpr::Kind::quaternion: return make_generalized_quaternion(e.param);
    case GroupExpr::Kind::symmetric: return make_symmetric(e.param);
    case GroupExpr::Kind::heisenberg: return make_heisenberg(e.param);
    case GroupExpr::Kind::product: return direct_product(build_group(e.operands[0]), build_group(e.operands[1]));
  }
  invalid_parameter("unknown expression kind");
}

inline FiniteGroup build_group(std::string_view text) { return build_group(parse_group_expr(text)); }

}  // namespace pegraph
