#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pegraph/corpus.hpp"
#include "pegraph/graph_iso.hpp"
#include "pegraph/graph_probes.hpp"
#include "pegraph/group_graphs.hpp"
#include "pegraph/group_iso.hpp"
#include "pegraph/group_ops.hpp"
#include "pegraph/serialize.hpp"

namespace pegraph {

enum class Verdict { pass, fail, skipped_budget };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_budget: return "skipped-budget";
  }
  return "?";
}

struct CheckRecord {
  std::string check;   // e.g. "decomposition-theorem"
  std::string anchor;  // the claim being replayed, in words
  std::string params;  // instance, e.g. "G=Q8 x Z3; H=Z24"
  Verdict verdict = Verdict::pass;
  Json witness;        // certificate or counterexample data
  Json notes;          // non-failing flags
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  Json header = Json::object();

  void append(VerificationReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
  }

  void sort() {
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
      return std::tie(a.check, a.params) < std::tie(b.check, b.params);
    });
  }

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.verdict == v; }));
  }

  bool all_passed() const { return count(Verdict::fail) == 0 && count(Verdict::skipped_budget) == 0; }

  // Pass/fail/skipped totals per check name.
  std::map<std::string, std::array<std::size_t, 3>> summary() const {
    std::map<std::string, std::array<std::size_t, 3>> out;
    for (const auto& r : records) ++out[r.check][static_cast<std::size_t>(r.verdict)];
    return out;
  }

  Json to_json() const {
    Json j;
    j["header"] = header;
    Json recs = Json::array();
    for (const auto& r : records) {
      Json x;
      x["check"] = r.check;
      x["anchor"] = r.anchor;
      x["params"] = r.params;
      x["verdict"] = std::string(to_string(r.verdict));
      x["witness"] = r.witness;
      if (!r.notes.is_null()) x["notes"] = r.notes;
      recs.push_back(std::move(x));
    }
    j["records"] = std::move(recs);
    Json totals;
    totals["pass"] = count(Verdict::pass);
    totals["fail"] = count(Verdict::fail);
    totals["skipped-budget"] = count(Verdict::skipped_budget);
    j["totals"] = std::move(totals);
    return j;
  }

  std::string to_table() const {
    std::ostringstream out;
    out << "corpus: " << header.dump() << "\n\n";
    out << "check                              pass   fail  skipped\n";
    for (const auto& [check, c] : summary()) {
      out << check << std::string(check.size() < 34 ? 34 - check.size() : 1, ' ') << " " << c[0] << "\t" << c[1]
          << "\t" << c[2] << "\n";
    }
    out << "\n";
    // Only records that need attention: failures, skips and flagged notes.
    for (const auto& r : records) {
      if (r.verdict == Verdict::pass && r.notes.is_null()) continue;
      out << to_string(r.verdict) << "\t" << r.check << "\t" << r.params;
      if (!r.notes.is_null()) out << "\tnotes=" << r.notes.dump();
      if (r.verdict == Verdict::fail) out << "\twitness=" << r.witness.dump();
      out << "\n";
    }
    return out.str();
  }
};

// Lazily built graphs and Sylow data for a list of groups, plus memoized
// isomorphism verdicts between them. Not thread-safe; one per verification run.
class GraphWorkbench {
 public:
  explicit GraphWorkbench(std::uint64_t iso_budget) : budget_(iso_budget) {}

  int add(const FiniteGroup& g) {
    entries_.push_back(std::make_unique<Entry>(g));
    return static_cast<int>(entries_.size()) - 1;
  }

  const FiniteGroup& group(int id) const { return entries_[id]->group; }

  bool nilpotent(int id) {
    auto& e = *entries_[id];
    if (!e.nilpotent) e.nilpotent = is_nilpotent(e.group);
    return *e.nilpotent;
  }

  int cyc_size(int id) { return static_cast<int>(cyc_set(group(id)).size()); }

  const Graph& graph(int id, GraphKind kind) {
    auto& slot = entries_[id]->graphs[kind];
    if (!slot) slot = group_graph(group(id), kind);
    return *slot;
  }

  // Workbench id of the Sylow p-subgroup of a nilpotent member.
  int sylow(int id, int p) {
    auto& e = *entries_[id];
    if (e.sylow.empty()) {
      for (const auto& factor : sylow_decomposition(e.group).factors) {
        e.sylow.emplace(factor.prime, -1);
        pending_.emplace_back(sylow_subgroup(e.group, factor));
      }
      int k = 0;
      for (auto& [prime, slot] : e.sylow) {
        slot = add(pending_[k++]);
      }
      pending_.clear();
    }
    return entries_[id]->sylow.at(p);
  }

  const IsoResult& iso(int a, int b, GraphKind kind) {
    const auto key = std::make_tuple(a, b, kind);
    auto it = iso_cache_.find(key);
    if (it != iso_cache_.end()) return it->second;
    return iso_cache_.emplace(key, graphs_isomorphic(graph(a, kind), graph(b, kind), budget_)).first->second;
  }

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  struct Entry {
    explicit Entry(const FiniteGroup& g) : group(g) {}
    FiniteGroup group;
    std::optional<bool> nilpotent;
    std::map<GraphKind, std::optional<Graph>> graphs;
    std::map<int, int> sylow;
  };

  std::uint64_t budget_;
  std::vector<std::unique_ptr<Entry>> entries_;
  std::vector<FiniteGroup> pending_;
  std::map<std::tuple<int, int, GraphKind>, IsoResult> iso_cache_;
};

namespace detail {

inline std::string pair_params(const FiniteGroup& g, const FiniteGroup& h) {
  return "G=" + g.provenance() + "; H=" + h.provenance();
}

inline Json certificate_json(const IsoResult& r) { return r.isomorphic() ? Json(r.mapping) : Json(nullptr); }

// Tri-state predicate: nullopt when a search ran out of budget.
using Maybe = std::optional<bool>;

inline Maybe as_maybe(const IsoResult& r) {
  if (r.exhausted()) return std::nullopt;
  return r.isomorphic();
}

inline Verdict verdict_for(Maybe lhs, Maybe rhs) {
  if (!lhs || !rhs) return Verdict::skipped_budget;
  return *lhs == *rhs ? Verdict::pass : Verdict::fail;
}

inline Json maybe_json(Maybe m) { return m ? Json(*m) : Json("budget-exhausted"); }

// H nilpotent and every Sylow factor pair isomorphic under the given graph kind.
inline Maybe sylow_wise(GraphWorkbench& wb, int g, int h, GraphKind kind, Json& detail) {
  if (!wb.nilpotent(h)) {
    detail["H_nilpotent"] = false;
    return false;
  }
  detail["H_nilpotent"] = true;
  bool refuted = false, exhausted = false;
  for (int p : nt::prime_divisors(wb.group(g).order())) {
    const auto& r = wb.iso(wb.sylow(g, p), wb.sylow(h, p), kind);
    detail["sylow_" + std::to_string(p)] = std::string(to_string(r.status));
    refuted = refuted || r.status == IsoStatus::non_isomorphic;
    exhausted = exhausted || r.exhausted();
  }
  if (refuted) return false;
  if (exhausted) return std::nullopt;
  return true;
}

}  // namespace detail

struct VerifyOptions {
  std::uint64_t iso_budget = kDefaultIsoBudget;
};

// For each equal-order pair with a nilpotent member G: Pe(G) ~ Pe(H) iff H is
// nilpotent with Sylow-wise isomorphic Pe; the same for power graphs; and the
// one-way nilpotence transfer.
inline VerificationReport verify_decomposition_theorem(const Corpus& corpus, const VerifyOptions& options = {}) {
  VerificationReport report;
  GraphWorkbench wb(options.iso_budget);
  std::vector<int> ids;
  for (const auto& g : corpus.groups) ids.push_back(wb.add(g));

  for (const auto& [order, members] : corpus.by_order) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        int g = ids[members[i]], h = ids[members[j]];
        if (!wb.nilpotent(g)) std::swap(g, h);
        if (!wb.nilpotent(g)) continue;
        const std::string params = detail::pair_params(wb.group(g), wb.group(h));

        for (GraphKind kind : {GraphKind::enhanced, GraphKind::power}) {
          const auto& whole = wb.iso(g, h, kind);
          Json witness;
          const detail::Maybe lhs = detail::as_maybe(whole);
          const detail::Maybe rhs = detail::sylow_wise(wb, g, h, kind, witness);
          witness["whole_isomorphic"] = detail::maybe_json(lhs);
          witness["certificate"] = detail::certificate_json(whole);
          CheckRecord rec;
          rec.check = kind == GraphKind::enhanced ? "decomposition-theorem" : "decomposition-theorem-power";
          rec.anchor = kind == GraphKind::enhanced
                           ? "G nilpotent: Pe(G)~Pe(H) iff H nilpotent and Pe(G_p)~Pe(H_p) for all p"
                           : "G nilpotent: Pow(G)~Pow(H) iff H nilpotent and Pow(G_p)~Pow(H_p) for all p";
          rec.params = params;
          rec.verdict = detail::verdict_for(lhs, rhs);
          rec.witness = std::move(witness);
          report.records.push_back(std::move(rec));
        }

        const auto& pe = wb.iso(g, h, GraphKind::enhanced);
        CheckRecord transfer;
        transfer.check = "nilpotence-transfer";
        transfer.anchor = "G nilpotent and Pe(G)~Pe(H) implies H nilpotent";
        transfer.params = params;
        if (pe.exhausted()) {
          transfer.verdict = Verdict::skipped_budget;
        } else {
          transfer.verdict = (!pe.isomorphic() || wb.nilpotent(h)) ? Verdict::pass : Verdict::fail;
        }
        transfer.witness = {{"pe_isomorphic", detail::maybe_json(detail::as_maybe(pe))},
                            {"H_nilpotent", wb.nilpotent(h)}};
        report.records.push_back(std::move(transfer));
      }
    }
  }
  report.sort();
  return report;
}

// For each equal-order pair: Pow ~ iff Pe ~; Pe ~ iff (C ~ and |G| = |H|);
// Pe ~ iff (C ~ and |Cyc(G)| = |Cyc(H)|); Pe ~ implies equal order spectra.
inline VerificationReport verify_equivalences(const Corpus& corpus, const VerifyOptions& options = {}) {
  VerificationReport report;
  GraphWorkbench wb(options.iso_budget);
  std::vector<int> ids;
  for (const auto& g : corpus.groups) ids.push_back(wb.add(g));

  for (const auto& [order, members] : corpus.by_order) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        const int g = ids[members[i]], h = ids[members[j]];
        const std::string params = detail::pair_params(wb.group(g), wb.group(h));
        const auto& pe_r = wb.iso(g, h, GraphKind::enhanced);
        const auto& pow_r = wb.iso(g, h, GraphKind::power);
        const auto& c_r = wb.iso(g, h, GraphKind::cyclic);
        const detail::Maybe pe = detail::as_maybe(pe_r), pow = detail::as_maybe(pow_r), c = detail::as_maybe(c_r);
        const bool same_order = wb.group(g).order() == wb.group(h).order();
        const int cyc_g = wb.cyc_size(g), cyc_h = wb.cyc_size(h);
        auto both = [](detail::Maybe x, bool y) -> detail::Maybe {
          if (!x) return std::nullopt;
          return *x && y;
        };

        Json base = {{"pe", detail::maybe_json(pe)},
                     {"pow", detail::maybe_json(pow)},
                     {"cyclic", detail::maybe_json(c)},
                     {"cyc_G", cyc_g},
                     {"cyc_H", cyc_h}};

        auto add = [&](std::string check, std::string anchor, Verdict v, Json witness) {
          report.records.push_back({std::move(check), std::move(anchor), params, v, std::move(witness), nullptr});
        };
        Json w1 = base;
        w1["pe_certificate"] = detail::certificate_json(pe_r);
        w1["pow_certificate"] = detail::certificate_json(pow_r);
        add("pow-pe-equivalence", "Pow(G)~Pow(H) iff Pe(G)~Pe(H)", detail::verdict_for(pow, pe), std::move(w1));
        add("cyclic-graph-order-reduction", "Pe(G)~Pe(H) iff C(G)~C(H) and |G|=|H|",
            detail::verdict_for(pe, both(c, same_order)), base);
        add("cyclic-graph-cyc-reduction", "Pe(G)~Pe(H) iff C(G)~C(H) and |Cyc(G)|=|Cyc(H)|",
            detail::verdict_for(pe, both(c, cyc_g == cyc_h)), base);

        const bool spectra_equal = order_spectrum(wb.group(g)) == order_spectrum(wb.group(h));
        Verdict sv = Verdict::pass;
        if (!pe) {
          sv = Verdict::skipped_budget;
        } else if (*pe && !spectra_equal) {
          sv = Verdict::fail;
        }
        Json w4 = {{"pe", detail::maybe_json(pe)},
                   {"spectrum_G", spectrum_to_json(order_spectrum(wb.group(g)))},
                   {"spectrum_H", spectrum_to_json(order_spectrum(wb.group(h)))}};
        add("spectrum-preservation", "Pe(G)~Pe(H) implies equal element-order counts", sv, std::move(w4));
      }
    }
  }
  report.sort();
  return report;
}

enum class Family { Q8xZn, E2mxZn, ZpZpxZn, Zp3xZn, Sn, D2n, Q4n };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Q8xZn: return "Q8xZn";
    case Family::E2mxZn: return "E2mxZn";
    case Family::ZpZpxZn: return "ZpZpxZn";
    case Family::Zp3xZn: return "Zp3xZn";
    case Family::Sn: return "Sn";
    case Family::D2n: return "D2n";
    case Family::Q4n: return "Q4n";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : {Family::Q8xZn, Family::E2mxZn, Family::ZpZpxZn, Family::Zp3xZn, Family::Sn, Family::D2n,
                   Family::Q4n}) {
    if (s == to_string(f)) return f;
  }
  invalid_parameter("unknown family '" + std::string(s) +
                    "' (expected Q8xZn, E2mxZn, ZpZpxZn, Zp3xZn, Sn, D2n, Q4n)");
}

// n: odd cofactor (Q8xZn, E2mxZn), coprime cofactor (Zp families) or degree (Sn).
// m: rank of the elementary abelian 2-part. p: the prime. order: group order (D2n, Q4n).
struct FamilyParams {
  int n = 1;
  int m = 0;
  int p = 0;
  int order = 0;
};

inline std::string describe(Family f, const FamilyParams& q) {
  switch (f) {
    case Family::Q8xZn: return "n=" + std::to_string(q.n);
    case Family::E2mxZn: return "m=" + std::to_string(q.m) + ", n=" + std::to_string(q.n);
    case Family::ZpZpxZn:
    case Family::Zp3xZn: return "p=" + std::to_string(q.p) + ", n=" + std::to_string(q.n);
    case Family::Sn: return "n=" + std::to_string(q.n);
    case Family::D2n:
    case Family::Q4n: return "order=" + std::to_string(q.order);
  }
  return {};
}

namespace detail {

inline std::string times_zn(std::string base, int n) { return n == 1 ? base : base + " x Z" + std::to_string(n); }

inline std::string repeat_factor(const std::string& factor, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += (i ? " x " : "") + factor;
  return out;
}

}  // namespace detail

// Expressions of the target group followed by every other group the
// uniqueness statement accepts. Validates the side conditions.
inline std::vector<std::string> family_accepted(Family f, const FamilyParams& q) {
  auto require = [](bool ok, const std::string& why) {
    if (!ok) invalid_parameter(why);
  };
  switch (f) {
    case Family::Q8xZn:
      require(q.n >= 1 && q.n % 2 == 1, "Q8xZn needs odd n >= 1");
      return {detail::times_zn("Q8", q.n)};
    case Family::E2mxZn:
      require(q.n >= 1 && q.n % 2 == 1, "E2mxZn needs odd n >= 1");
      require(q.m >= 1, "E2mxZn needs m >= 1");
      return {detail::times_zn(detail::repeat_factor("Z2", q.m), q.n)};
    case Family::ZpZpxZn:
      require(nt::is_prime(q.p), "ZpZpxZn needs a prime p");
      require(q.n >= 1 && std::gcd(q.n, q.p) == 1, "ZpZpxZn needs gcd(n, p) = 1");
      return {detail::times_zn(detail::repeat_factor("Z" + std::to_string(q.p), 2), q.n)};
    case Family::Zp3xZn:
      require(nt::is_prime(q.p) && q.p > 2, "Zp3xZn needs an odd prime p");
      require(q.n >= 1 && std::gcd(q.n, q.p) == 1, "Zp3xZn needs gcd(n, p) = 1");
      return {detail::times_zn(detail::repeat_factor("Z" + std::to_string(q.p), 3), q.n),
              detail::times_zn("Heis" + std::to_string(q.p), q.n)};
    case Family::Sn:
      require(q.n >= 1 && q.n <= 8, "Sn needs 1 <= n <= 8");
      return {"S" + std::to_string(q.n)};
    case Family::D2n:
      require(q.order >= 6 && q.order % 2 == 0, "D2n needs an even order >= 6");
      return {"D" + std::to_string(q.order)};
    case Family::Q4n:
      require(q.order >= 8 && q.order % 4 == 0, "Q4n needs an order divisible by 4 and >= 8");
      return {"Q" + std::to_string(q.order)};
  }
  invalid_parameter("unknown family");
}

// Every corpus group H of the target's order satisfies Pe(H) ~ Pe(T) iff H is
// isomorphic to a group of the accepted set; the power-graph statement is
// replayed alongside. A summary record lists matches, extras and misses.
inline VerificationReport verify_uniqueness(Family family, const FamilyParams& params, const Corpus& corpus,
                                            const VerifyOptions& options = {}) {
  const auto accepted_exprs = family_accepted(family, params);
  std::vector<FiniteGroup> accepted;
  for (const auto& e : accepted_exprs) accepted.push_back(build_group(e));
  const FiniteGroup& target = accepted.front();
  const auto& members = corpus.members_of_order(target.order());
  if (members.empty() || target.order() > corpus.max_order) {
    invalid_parameter("target " + target.provenance() + " of order " + std::to_string(target.order()) +
                      " lies outside the corpus bound " + std::to_string(corpus.max_order));
  }

  VerificationReport report;
  GraphWorkbench wb(options.iso_budget);
  const int t = wb.add(target);
  const std::string family_name(to_string(family));
  const std::string instance = family_name + " " + describe(family, params);

  Json matched = Json::array(), accepted_found = Json::array(), extras = Json::array(), misses = Json::array();
  bool budget_hit = false;
  std::vector<char> accepted_seen(accepted.size(), 0);
  for (int idx : members) {
    const FiniteGroup& h_group = corpus.groups[idx];
    const int h = wb.add(h_group);
    int accepted_as = -1;
    for (std::size_t a = 0; a < accepted.size() && accepted_as < 0; ++a) {
      const auto r = groups_isomorphic(h_group, accepted[a], options.iso_budget);
      if (r.exhausted()) budget_hit = true;
      if (r.isomorphic()) accepted_as = static_cast<int>(a);
    }
    if (accepted_as >= 0) {
      accepted_seen[accepted_as] = 1;
      accepted_found.push_back(h_group.provenance());
    }
    for (GraphKind kind : {GraphKind::enhanced, GraphKind::power}) {
      const auto& r = wb.iso(t, h, kind);
      CheckRecord rec;
      rec.check = std::string(kind == GraphKind::enhanced ? "uniqueness/" : "uniqueness-power/") + family_name;
      rec.anchor = std::string(kind == GraphKind::enhanced ? "Pe" : "Pow") + "(H)~" +
                   (kind == GraphKind::enhanced ? "Pe" : "Pow") + "(T) iff H is in the accepted set";
      rec.params = instance + "; H=" + h_group.provenance();
      const detail::Maybe lhs = detail::as_maybe(r);
      rec.verdict = detail::verdict_for(lhs, accepted_as >= 0);
      rec.witness = {{"graph_isomorphic", detail::maybe_json(lhs)},
                     {"accepted_as", accepted_as >= 0 ? Json(accepted_exprs[accepted_as]) : Json(nullptr)},
                     {"certificate", detail::certificate_json(r)}};
      if (r.exhausted()) budget_hit = true;
      if (kind == GraphKind::enhanced && r.isomorphic()) {
        matched.push_back(h_group.provenance());
        if (accepted_as < 0) extras.push_back(h_group.provenance());
      }
      if (kind == GraphKind::enhanced && !r.isomorphic() && !r.exhausted() && accepted_as >= 0) {
        misses.push_back(h_group.provenance());
      }
      report.records.push_back(std::move(rec));
    }
  }
  for (std::size_t a = 0; a < accepted.size(); ++a) {
    if (!accepted_seen[a]) misses.push_back(accepted_exprs[a] + " (not in corpus)");
  }

  CheckRecord summary;
  summary.check = "uniqueness-summary/" + family_name;
  summary.anchor = "the accepted set is exactly the Pe-isomorphism class of the target";
  summary.params = instance;
  summary.witness = {{"target", target.provenance()},
                     {"accepted", accepted_exprs},
                     {"matched", matched},
                     {"accepted_in_corpus", accepted_found},
                     {"extras", extras},
                     {"misses", misses},
                     {"class_size", members.size()}};
  if (budget_hit) {
    summary.verdict = Verdict::skipped_budget;
  } else {
    summary.verdict = extras.empty() && misses.empty() ? Verdict::pass : Verdict::fail;
  }
  report.records.push_back(std::move(summary));
  report.sort();
  return report;
}

struct UniquenessInstance {
  Family family;
  FamilyParams params;
};

inline std::vector<UniquenessInstance> default_uniqueness_instances() {
  std::vector<UniquenessInstance> out;
  for (int n : {1, 3}) out.push_back({Family::Q8xZn, {n, 0, 0, 0}});
  out.push_back({Family::E2mxZn, {3, 2, 0, 0}});
  out.push_back({Family::E2mxZn, {1, 3, 0, 0}});
  out.push_back({Family::ZpZpxZn, {2, 0, 3, 0}});
  out.push_back({Family::ZpZpxZn, {2, 0, 5, 0}});
  out.push_back({Family::Zp3xZn, {1, 0, 3, 0}});
  for (int n : {3, 4}) out.push_back({Family::Sn, {n, 0, 0, 0}});
  for (int order = 6; order <= 16; order += 2) out.push_back({Family::D2n, {1, 0, 0, order}});
  for (int order = 8; order <= 16; order += 4) out.push_back({Family::Q4n, {1, 0, 0, order}});
  return out;
}

inline int instance_order(const UniquenessInstance& u) {
  return static_cast<int>(expr_order(parse_group_expr(family_accepted(u.family, u.params).front())));
}

struct FigureParams {
  bool counterexample = true;
  std::vector<int> q8_n{1, 3, 5};
  std::vector<std::pair<int, int>> elementary_mn{{2, 1}, {2, 3}, {3, 3}};
  std::vector<std::pair<int, int>> zpzp_pn{{3, 1}, {3, 2}, {5, 1}, {5, 2}};
};

namespace detail {

inline Json signature_json(const std::optional<BlockSignature>& s) {
  if (!s) return nullptr;
  return {{"dom_count", s->dom_count}, {"block_sizes", s->block_sizes}};
}

inline CheckRecord shape_record(std::string check, std::string anchor, const FiniteGroup& g,
                                const BlockSignature& expected) {
  const auto actual = block_signature(enhanced_power_graph(g));
  CheckRecord rec;
  rec.check = std::move(check);
  rec.anchor = std::move(anchor);
  rec.params = g.provenance();
  rec.verdict = actual && *actual == expected ? Verdict::pass : Verdict::fail;
  rec.witness = {{"expected", signature_json(expected)}, {"actual", signature_json(actual)}};
  return rec;
}

inline BlockSignature uniform_signature(int dom, int blocks, int size) {
  return {dom, std::vector<int>(blocks, size)};
}

}  // namespace detail

// Block signatures of the enhanced power graphs with a known closed-form shape.
inline VerificationReport verify_figures(const FigureParams& params = {}) {
  VerificationReport report;
  if (params.counterexample) {
    const FiniteGroup elementary = build_group("Z3 x Z3 x Z3");
    const FiniteGroup heis = build_group("Heis3");
    const auto expected = detail::uniform_signature(1, 13, 2);
    report.records.push_back(detail::shape_record("shape/Z3^3-vs-Heis3", "one centre, thirteen triangles",
                                                  elementary, expected));
    report.records.push_back(detail::shape_record("shape/Z3^3-vs-Heis3", "one centre, thirteen triangles", heis,
                                                  expected));
    CheckRecord rec;
    rec.check = "counterexample/Z3^3-vs-Heis3";
    rec.anchor = "Pe(Z3^3) ~ Pe(Heis3) while the groups are not isomorphic";
    rec.params = "G=Z3 x Z3 x Z3; H=Heis3";
    const auto graph_iso = graphs_isomorphic(enhanced_power_graph(elementary), enhanced_power_graph(heis));
    const auto group_iso = groups_isomorphic(elementary, heis);
    if (graph_iso.exhausted() || group_iso.exhausted()) {
      rec.verdict = Verdict::skipped_budget;
    } else {
      rec.verdict = graph_iso.isomorphic() && !group_iso.isomorphic() ? Verdict::pass : Verdict::fail;
    }
    rec.witness = {{"graph_certificate", detail::certificate_json(graph_iso)},
                   {"groups_isomorphic", std::string(to_string(group_iso.status))}};
    report.records.push_back(std::move(rec));
  }
  for (int n : params.q8_n) {
    if (n < 1 || n % 2 == 0) invalid_parameter("Q8 x Zn shape needs odd n");
    report.records.push_back(detail::shape_record("shape/Q8xZn", "three K_2n blocks around 2n dominating vertices",
                                                  build_group(detail::times_zn("Q8", n)),
                                                  detail::uniform_signature(2 * n, 3, 2 * n)));
  }
  for (auto [m, n] : params.elementary_mn) {
    if (m < 1 || n < 1 || n % 2 == 0) invalid_parameter("(Z2)^m x Zn shape needs m >= 1 and odd n");
    report.records.push_back(detail::shape_record(
        "shape/E2mxZn", "2^m - 1 K_n blocks around n dominating vertices",
        build_group(detail::times_zn(detail::repeat_factor("Z2", m), n)), detail::uniform_signature(n, (1 << m) - 1, n)));
  }
  for (auto [p, n] : params.zpzp_pn) {
    if (!nt::is_prime(p) || n < 1 || std::gcd(n, p) != 1) invalid_parameter("Zp x Zp x Zn shape needs gcd(n, p) = 1");
    auto rec = detail::shape_record("shape/ZpZpxZn", "p + 1 blocks of size (p - 1) n around n dominating vertices",
                                    build_group(detail::times_zn(detail::repeat_factor("Z" + std::to_string(p), 2), n)),
                                    detail::uniform_signature(n, p + 1, (p - 1) * n));
    // The block size (p - 1) n coincides with the simpler 2n only for p = 3.
    rec.notes = {{"two_n_formula_mismatch", (p - 1) * n != 2 * n}, {"two_n_block_size", 2 * n}};
    report.records.push_back(std::move(rec));
  }
  report.sort();
  return report;
}

inline Json corpus_header(const Corpus& corpus) {
  Json counts = Json::object();
  for (const auto& [order, members] : corpus.by_order) counts[std::to_string(order)] = members.size();
  return {{"max_order", corpus.max_order},
          {"groups", corpus.groups.size()},
          {"groups_per_order", counts},
          {"duplicates_removed", corpus.duplicates.size()}};
}

}  // namespace pegraph
