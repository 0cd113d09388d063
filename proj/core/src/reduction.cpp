#include "stalg/reduction.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <unordered_map>

#include "stalg/error.hpp"

namespace stalg {

VariableOrder::VariableOrder(std::vector<VarId> order) : order_(std::move(order)) {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    const VarId v = order_[p];
    if (v == 0) throw Error(Errc::InvalidOrder, "event ids start at 1");
    if (position_.size() <= v) position_.resize(v + 1, order_.size() + 1);
    if (position_[v] != order_.size() + 1) {
      throw Error(Errc::InvalidOrder, "E" + std::to_string(v) + " appears twice in the order");
    }
    position_[v] = p;
  }
  // Absent ids map to size(), matching position()'s contract.
  for (auto& p : position_) {
    if (p == order_.size() + 1) p = order_.size();
  }
}

VariableOrder VariableOrder::ascending(std::size_t n) {
  std::vector<VarId> ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = static_cast<VarId>(k + 1);
  return VariableOrder(std::move(ids));
}

bool VariableOrder::contains(VarId i) const noexcept { return position(i) < order_.size(); }

std::size_t VariableOrder::position(VarId i) const noexcept {
  return i < position_.size() ? position_[i] : order_.size();
}

std::string ReductionStats::to_key_values() const {
  return "pairwise_checks=" + std::to_string(pairwise_checks) +
         " reductions_applied=" + std::to_string(reductions_applied) +
         " rows_in=" + std::to_string(rows_in) + " rows_out=" + std::to_string(rows_out) +
         " max_defined=" + std::to_string(max_defined);
}

std::optional<TObject> atomic_reduce(const TObject& a, const TObject& b) {
  if (a.is_null() || b.is_null() || a.rank() != b.rank() || a.rank() == 0) return std::nullopt;
  const TObject* hi = &a;  // the operand holding the 1
  const TObject* lo = &b;
  if (a.upper().size() + 1 == b.upper().size()) std::swap(hi, lo);
  if (hi->upper().size() != lo->upper().size() + 1) return std::nullopt;
  // The pivot is the first id of hi->upper missing from lo->upper.
  const auto& hu = hi->upper();
  const auto& lu = lo->upper();
  auto [h, l] = std::mismatch(hu.begin(), hu.end(), lu.begin(), lu.end());
  const VarId i = *h;
  if (!lo->has_lower(i)) return std::nullopt;
  TObject merged = hi->without(i);
  if (merged != lo->without(i)) return std::nullopt;
  return merged;
}

std::pair<StateVector, ReductionStats> reduce_heuristic(const StateVector& s) {
  ReductionStats stats;
  stats.rows_in = s.size();
  std::unordered_map<TObject, Multiplicity> live;
  live.reserve(s.size() * 2);
  std::deque<TObject> work;
  for (const Row& r : s.rows()) {
    live.emplace(r.term, r.mult);
    work.push_back(r.term);
    stats.max_defined = std::max(stats.max_defined, r.term.rank());
  }

  std::vector<VarId> columns;
  while (!work.empty()) {
    TObject r = std::move(work.front());
    work.pop_front();
    if (!live.contains(r)) continue;

    columns.clear();
    std::merge(r.upper().begin(), r.upper().end(), r.lower().begin(), r.lower().end(),
               std::back_inserter(columns));
    for (VarId i : columns) {
      auto self = live.find(r);
      if (self == live.end()) break;
      ++stats.pairwise_checks;
      TObject partner = r.has_upper(i) ? r.with_lower(i) : r.with_upper(i);
      auto other = live.find(partner);
      if (other == live.end()) continue;

      const Multiplicity k = std::min(self->second, other->second);
      self->second -= k;
      other->second -= k;
      if (self->second == 0) live.erase(self);
      if (other->second == 0) live.erase(partner);
      TObject merged = r.without(i);
      live[merged] += k;
      work.push_back(std::move(merged));
      ++stats.reductions_applied;
    }
  }

  std::vector<Row> rows;
  rows.reserve(live.size());
  for (auto& [term, mult] : live) rows.push_back({term, mult});
  StateVector out(std::move(rows));
  stats.rows_out = out.size();
  return {std::move(out), stats};
}

namespace {

void sort_unique(std::vector<TObject>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Canonical rows of the state set spanned by `rows`. Returned sorted and
// duplicate-free.
std::vector<TObject> canon_rec(std::vector<TObject> rows, const VariableOrder& order,
                               int parallel_depth) {
  if (rows.empty()) return {};
  std::size_t p = order.size();
  for (const TObject& t : rows) {
    for (VarId i : t.upper()) p = std::min(p, order.position(i));
    for (VarId i : t.lower()) p = std::min(p, order.position(i));
  }
  if (p == order.size()) return {TObject::unit()};
  const VarId v = order.order()[p];

  std::vector<TObject> ones;
  std::vector<TObject> zeros;
  for (TObject& t : rows) {
    if (t.has_upper(v)) {
      ones.push_back(t.without(v));
    } else if (t.has_lower(v)) {
      zeros.push_back(t.without(v));
    } else {
      ones.push_back(t);
      zeros.push_back(std::move(t));
    }
  }
  sort_unique(ones);
  sort_unique(zeros);

  std::vector<TObject> c1;
  std::vector<TObject> c0;
  if (parallel_depth > 0) {
    auto fut = std::async(std::launch::async, [&] {
      return canon_rec(std::move(ones), order, parallel_depth - 1);
    });
    c0 = canon_rec(std::move(zeros), order, parallel_depth - 1);
    c1 = fut.get();
  } else {
    c1 = canon_rec(std::move(ones), order, 0);
    c0 = canon_rec(std::move(zeros), order, 0);
  }

  // Twins present in both cofactors reduce by v; the rest keep their value.
  std::vector<TObject> out;
  out.reserve(c1.size() + c0.size());
  auto i = c1.begin();
  auto j = c0.begin();
  while (i != c1.end() || j != c0.end()) {
    if (j == c0.end() || (i != c1.end() && *i < *j)) {
      out.push_back(i->with_upper(v));
      ++i;
    } else if (i == c1.end() || *j < *i) {
      out.push_back(j->with_lower(v));
      ++j;
    } else {
      out.push_back(*i);
      ++i;
      ++j;
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

StateVector canonicalize(const StateVector& s, const VariableOrder& order, Execution exec) {
  for (VarId i : pivot(s)) {
    if (!order.contains(i)) {
      throw Error(Errc::InvalidOrder, "E" + std::to_string(i) + " is missing from the order");
    }
  }
  const int depth = exec == Execution::Parallel ? 3 : 0;
  return StateVector::from_terms(canon_rec(s.terms(), order, depth));
}

StateVector multiply_canonical(const StateVector& s, const StateVector& q,
                               const VariableOrder& order, OpCounters* counters,
                               Execution exec) {
  return canonicalize(multiply(s, q, counters, exec), order, exec);
}

}  // namespace stalg
