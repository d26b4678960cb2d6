#include <gtest/gtest.h>

#include <set>

#include "support/properties.hpp"

using namespace pegraph;

namespace {

std::set<std::string> members(const Corpus& c, int order) {
  std::set<std::string> out;
  for (int i : c.members_of_order(order)) out.insert(c.groups[i].provenance());
  return out;
}

const CheckRecord* find(const VerificationReport& r, const std::string& check, const std::string& params) {
  for (const auto& rec : r.records)
    if (rec.check == check && rec.params == params) return &rec;
  return nullptr;
}

const Corpus& corpus72() {
  static const Corpus c = build_corpus(72);
  return c;
}

}  // namespace

TEST(Corpus, Examples) {
  const auto& c = props::corpus48();
  EXPECT_EQ(members(c, 1), (std::set<std::string>{"Z1"}));
  EXPECT_EQ(members(c, 8), (std::set<std::string>{"Z8", "Z4 x Z2", "Z2 x Z2 x Z2", "D8", "Q8"}));
  EXPECT_EQ(members(c, 27), (std::set<std::string>{"Z27", "Z9 x Z3", "Z3 x Z3 x Z3", "Heis3"}));
  EXPECT_EQ(members(c, 6), (std::set<std::string>{"Z6", "D6"}));
  EXPECT_THROW(build_corpus(513), Error);
  EXPECT_THROW(build_corpus(0), Error);
}

TEST(Corpus, AbelianCounts) {
  // Number of abelian groups of order n is the product of p(e) over p^e || n.
  const std::map<int, std::size_t> expected{{1, 1}, {8, 3}, {16, 5}, {36, 4}, {64, 11}, {72, 6}};
  for (auto [n, count] : expected) EXPECT_EQ(abelian_invariants(n).size(), count) << n;
}

TEST(Corpus, MembersValidAndBounded) {
  const auto& c = corpus72();
  for (const auto& [order, idx] : c.by_order) {
    EXPECT_LE(order, 72);
    for (int i : idx) EXPECT_EQ(c.groups[i].order(), order);
  }
  // Every dropped candidate really is isomorphic to what was kept.
  for (const auto& [dropped, kept] : c.duplicates) {
    EXPECT_TRUE(groups_isomorphic(build_group(dropped), build_group(kept)).isomorphic()) << dropped << " " << kept;
  }
}

TEST(Corpus, NoTwoMembersIsomorphic) {
  const auto& c = corpus72();
  for (const auto& [order, idx] : c.by_order) {
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const auto& g = c.groups[idx[i]];
        const auto& h = c.groups[idx[j]];
        if (!(order_spectrum(g) == order_spectrum(h))) continue;
        EXPECT_EQ(groups_isomorphic(g, h).status, IsoStatus::non_isomorphic) << g.provenance() << " " << h.provenance();
      }
  }
}

TEST(Decomposition, Examples) {
  const auto r = verify_decomposition_theorem(corpus72());
  const auto* fig = find(r, "decomposition-theorem", "G=Z3 x Z3 x Z3; H=Heis3");
  ASSERT_NE(fig, nullptr);
  EXPECT_EQ(fig->verdict, Verdict::pass);
  EXPECT_EQ(fig->witness["whole_isomorphic"], true);
  EXPECT_EQ(fig->witness["H_nilpotent"], true);

  const auto* q = find(r, "decomposition-theorem", "G=Z24; H=Q8 x Z3");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->verdict, Verdict::pass);
  EXPECT_EQ(q->witness["whole_isomorphic"], false);
  EXPECT_EQ(q->witness["sylow_2"], "non-isomorphic");

  const auto* refl = find(r, "decomposition-theorem", "G=Q8 x Z3; H=Q8 x Z3");
  ASSERT_NE(refl, nullptr);
  EXPECT_EQ(refl->verdict, Verdict::pass);

  EXPECT_EQ(r.count(Verdict::fail), 0u);
  EXPECT_EQ(r.count(Verdict::skipped_budget), 0u);
}

TEST(Decomposition, NonNilpotentPartnerRecorded) {
  const auto r = verify_decomposition_theorem(corpus72());
  const auto* s = find(r, "decomposition-theorem", "G=Z6; H=D6");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->witness["H_nilpotent"], false);
  EXPECT_EQ(s->verdict, Verdict::pass);
  EXPECT_NE(find(r, "nilpotence-transfer", "G=Z6; H=D6"), nullptr);
  // Two non-nilpotent groups of equal order are never paired.
  EXPECT_EQ(find(r, "decomposition-theorem", "G=D6 x Z2; H=Q12"), nullptr);
}

TEST(Equivalences, Examples) {
  const auto r = verify_equivalences(corpus72());
  for (const char* check : {"pow-pe-equivalence", "cyclic-graph-order-reduction", "cyclic-graph-cyc-reduction"}) {
    const auto* a = find(r, check, "G=Z8; H=Z4 x Z2");
    ASSERT_NE(a, nullptr) << check;
    EXPECT_EQ(a->verdict, Verdict::pass);
    EXPECT_EQ(a->witness["pe"], false);
    const auto* b = find(r, check, "G=Z3 x Z3 x Z3; H=Heis3");
    ASSERT_NE(b, nullptr);
    EXPECT_EQ(b->verdict, Verdict::pass);
    EXPECT_EQ(b->witness["pe"], true);
    EXPECT_EQ(b->witness["cyc_G"], 1);
    EXPECT_EQ(b->witness["cyc_H"], 1);
    const auto* c = find(r, check, "G=Z1; H=Z1");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->verdict, Verdict::pass);
  }
  EXPECT_EQ(r.count(Verdict::fail), 0u);
}

TEST(Uniqueness, Examples) {
  const auto& c = corpus72();
  const auto q = verify_uniqueness(Family::Q8xZn, {3, 0, 0, 0}, c);
  const auto* sq = find(q, "uniqueness-summary/Q8xZn", "Q8xZn n=3");
  ASSERT_NE(sq, nullptr);
  EXPECT_EQ(sq->verdict, Verdict::pass);
  EXPECT_EQ(sq->witness["matched"], Json::array({"Q8 x Z3"}));

  const auto h = verify_uniqueness(Family::Zp3xZn, {1, 0, 3, 0}, c);
  const auto* sh = find(h, "uniqueness-summary/Zp3xZn", "Zp3xZn p=3, n=1");
  ASSERT_NE(sh, nullptr);
  EXPECT_EQ(sh->verdict, Verdict::pass);
  EXPECT_EQ(sh->witness["matched"].size(), 2u);

  const auto s = verify_uniqueness(Family::Sn, {3, 0, 0, 0}, c);
  const auto* ss = find(s, "uniqueness-summary/Sn", "Sn n=3");
  ASSERT_NE(ss, nullptr);
  EXPECT_EQ(ss->witness["matched"], Json::array({"D6"}));
  EXPECT_EQ(ss->verdict, Verdict::pass);
}

TEST(Uniqueness, SideConditionsValidated) {
  const auto& c = props::corpus48();
  auto kind_of = [&](Family f, FamilyParams p) {
    try {
      verify_uniqueness(f, p, c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::io_error;
  };
  EXPECT_EQ(kind_of(Family::Q8xZn, {2, 0, 0, 0}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::E2mxZn, {2, 0, 0, 0}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::ZpZpxZn, {3, 0, 3, 0}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::ZpZpxZn, {1, 0, 4, 0}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::Zp3xZn, {1, 0, 2, 0}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::D2n, {1, 0, 0, 7}), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of(Family::Q4n, {1, 0, 0, 10}), ErrorKind::invalid_parameter);
  // Target outside the corpus bound.
  EXPECT_EQ(kind_of(Family::Q8xZn, {7, 0, 0, 0}), ErrorKind::invalid_parameter);
  EXPECT_THROW(parse_family("A5"), Error);
}

TEST(Uniqueness, DefaultInstancesPass) {
  VerificationReport all;
  for (const auto& u : default_uniqueness_instances()) all.append(verify_uniqueness(u.family, u.params, corpus72()));
  EXPECT_EQ(all.count(Verdict::fail), 0u);
  EXPECT_EQ(all.count(Verdict::skipped_budget), 0u);
}

TEST(Shapes, Examples) {
  const auto r = verify_figures();
  EXPECT_EQ(r.count(Verdict::fail), 0u);
  const auto* q = find(r, "shape/Q8xZn", "Q8 x Z5");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->witness["actual"]["dom_count"], 10);
  const auto* p = find(r, "shape/ZpZpxZn", "Z5 x Z5 x Z2");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->verdict, Verdict::pass);
  EXPECT_EQ(p->witness["actual"]["block_sizes"], Json(std::vector<int>(6, 8)));
  EXPECT_EQ(p->notes["two_n_formula_mismatch"], true);
  const auto* p3 = find(r, "shape/ZpZpxZn", "Z3 x Z3 x Z2");
  ASSERT_NE(p3, nullptr);
  EXPECT_EQ(p3->notes["two_n_formula_mismatch"], false);
  const auto* ce = find(r, "counterexample/Z3^3-vs-Heis3", "G=Z3 x Z3 x Z3; H=Heis3");
  ASSERT_NE(ce, nullptr);
  EXPECT_EQ(ce->verdict, Verdict::pass);
  EXPECT_THROW(verify_figures(FigureParams{true, {2}, {}, {}}), Error);
}

TEST(Report, DeterministicAndSorted) {
  const auto a = verify_equivalences(props::corpus48());
  const auto b = verify_equivalences(build_corpus(48));
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_table(), b.to_table());
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    EXPECT_LE(std::tie(a.records[i - 1].check, a.records[i - 1].params), std::tie(a.records[i].check, a.records[i].params));
  }
}

TEST(Report, BudgetExhaustionNeverPasses) {
  // A budget of one node cannot finish any search that needs branching.
  const auto r = verify_equivalences(build_corpus(32), VerifyOptions{1});
  EXPECT_GT(r.count(Verdict::skipped_budget), 0u);
  EXPECT_FALSE(r.all_passed());
  for (const auto& rec : r.records) {
    if (rec.witness.contains("pe") && rec.witness["pe"] == "budget-exhausted") {
      EXPECT_EQ(rec.verdict, Verdict::skipped_budget) << rec.check << " " << rec.params;
    }
  }
}

TEST(Report, FailuresCarryWitnesses) {
  VerificationReport r;
  r.records.push_back({"x", "a claim", "p", Verdict::fail, Json{{"why", "demo"}}, nullptr});
  const auto j = r.to_json();
  EXPECT_EQ(j["totals"]["fail"], 1);
  EXPECT_EQ(j["records"][0]["witness"]["why"], "demo");
  EXPECT_NE(r.to_table().find("witness="), std::string::npos);
}
