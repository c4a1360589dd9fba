#include "cqopt/oracle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cqopt {

const char* query_kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::Compare: return "compare";
    case QueryKind::Equality: return "equality";
    case QueryKind::Constant: return "constant";
    case QueryKind::CutCompare: return "cut_compare";
    case QueryKind::CutMarginal: return "cut_marginal";
    case QueryKind::WalkCompare: return "walk_compare";
  }
  return "?";
}

std::string QueryLedger::to_jsonl() const {
  std::ostringstream out;
  for (size_t i = 0; i < transcript.size(); ++i) {
    const auto& rec = transcript[i];
    nlohmann::json line;
    line["kind"] = query_kind_name(rec.kind);
    line["lhs"] = rec.lhs;
    line["rhs"] = rec.rhs;
    if (!rec.constant.empty()) line["constant"] = rec.constant;
    line["answer"] = rec.answer;
    line["index"] = i;
    out << line.dump() << "\n";
  }
  return out.str();
}

bool indicator_less(const Set& a, const Set& b, int n) {
  auto ia = indicator_of(a, n);
  auto ib = indicator_of(b, n);
  return ia < ib;
}

Set brute_force_argmin(const FeasibleFamily& family, const HiddenWeights& weights) {
  if (!family.enumerable()) throw NotEnumerable("brute_force_argmin needs an enumerable family");
  auto sets = family.enumerate();
  if (sets.empty()) throw std::invalid_argument("empty feasible family");
  const Set* best = &sets[0];
  Rational best_w = weights.weight_of(sets[0]);
  for (size_t i = 1; i < sets.size(); ++i) {
    Rational w = weights.weight_of(sets[i]);
    if (w < best_w || (w == best_w && indicator_less(sets[i], *best, family.n()))) {
      best = &sets[i];
      best_w = std::move(w);
    }
  }
  return *best;
}

}  // namespace cqopt
