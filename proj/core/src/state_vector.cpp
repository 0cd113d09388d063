#include "stalg/state_vector.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "stalg/error.hpp"

namespace stalg {
namespace {

std::vector<Row> normalized(std::vector<Row> rows) {
  std::erase_if(rows, [](const Row& r) { return r.term.is_null() || r.mult == 0; });
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.term < b.term; });
  std::vector<Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    if (!out.empty() && out.back().term == r.term) {
      out.back().mult += r.mult;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

void check_universe(const StateVector& s, std::size_t universe) {
  if (s.max_var() > universe) {
    throw Error(Errc::UniverseTooSmall, "vector uses E" + std::to_string(s.max_var()) +
                                            " but universe has " + std::to_string(universe) +
                                            " events");
  }
}

void require_non_empty(const StateVector& s, const char* op) {
  if (s.empty()) throw Error(Errc::EmptyVector, std::string(op) + " on the zero vector");
}

void multiply_range(const std::vector<Row>& left, std::size_t begin, std::size_t end,
                    const std::vector<Row>& right, std::vector<Row>& out) {
  for (std::size_t k = begin; k < end; ++k) {
    for (const Row& b : right) {
      TObject p = multiply(left[k].term, b.term);
      if (!p.is_null()) out.push_back({std::move(p), left[k].mult * b.mult});
    }
  }
}

template <typename Fn>
StateVector map_rows(const StateVector& s, Fn&& fn) {
  std::vector<Row> rows;
  rows.reserve(s.size());
  for (const Row& r : s.rows()) rows.push_back({fn(r.term), r.mult});
  return StateVector(std::move(rows));
}

}  // namespace

StateVector::StateVector(std::vector<Row> rows) : rows_(normalized(std::move(rows))) {}

StateVector::StateVector(std::initializer_list<TObject> terms)
    : StateVector(from_terms(std::vector<TObject>(terms))) {}

StateVector StateVector::trivial() { return StateVector({Row{TObject::unit(), 1}}); }

StateVector StateVector::from_terms(std::vector<TObject> terms) {
  std::vector<Row> rows;
  rows.reserve(terms.size());
  for (auto& t : terms) rows.push_back({std::move(t), 1});
  return StateVector(std::move(rows));
}

Multiplicity StateVector::total_mass() const noexcept {
  Multiplicity m = 0;
  for (const Row& r : rows_) m += r.mult;
  return m;
}

VarId StateVector::max_var() const noexcept {
  VarId m = 0;
  for (const Row& r : rows_) m = std::max(m, r.term.max_var());
  return m;
}

std::vector<TObject> StateVector::terms() const {
  std::vector<TObject> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.term);
  return out;
}

std::ostream& operator<<(std::ostream& os, const StateVector& s) {
  if (s.empty()) return os << "0";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << " + ";
    const Row& r = s.rows()[k];
    if (r.mult != 1) os << r.mult << ' ';
    os << r.term;
  }
  return os;
}

StateVector multiply(const StateVector& s, const StateVector& q, OpCounters* counters,
                     Execution exec) {
  if (counters) counters->pairwise_products += s.size() * q.size();
  std::vector<Row> out;
  const std::size_t work = s.size() * q.size();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (exec == Execution::Parallel && hw > 1 && s.size() > 1 && work >= 4096) {
    const std::size_t chunks = std::min<std::size_t>(hw, s.size());
    std::vector<std::vector<Row>> partial(chunks);
    {
      std::vector<std::jthread> workers;
      workers.reserve(chunks);
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = s.size() * c / chunks;
        const std::size_t end = s.size() * (c + 1) / chunks;
        workers.emplace_back([&, begin, end, c] {
          multiply_range(s.rows(), begin, end, q.rows(), partial[c]);
        });
      }
    }
    for (auto& p : partial) {
      out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
  } else {
    out.reserve(work);
    multiply_range(s.rows(), 0, s.size(), q.rows(), out);
  }
  // Normalization re-sorts, so the chunking never shows in the result.
  return StateVector(std::move(out));
}

StateVector add(const StateVector& s, const StateVector& q) {
  std::vector<Row> rows = s.rows();
  rows.insert(rows.end(), q.rows().begin(), q.rows().end());
  return StateVector(std::move(rows));
}

StateVector orthogonalize_vector(const StateVector& s, OpCounters* counters) {
  std::vector<TObject> accepted;
  for (const Row& r : s.rows()) {
    std::vector<TObject> pieces{r.term};
    for (const TObject& a : accepted) {
      std::vector<TObject> next;
      for (const TObject& p : pieces) {
        if (counters) ++counters->pairwise_subtractions;
        auto diff = subtract(p, a);
        next.insert(next.end(), std::make_move_iterator(diff.begin()),
                    std::make_move_iterator(diff.end()));
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    accepted.insert(accepted.end(), std::make_move_iterator(pieces.begin()),
                    std::make_move_iterator(pieces.end()));
  }
  return StateVector::from_terms(std::move(accepted));
}

StateVector subtract_set(const StateVector& s, const StateVector& q, OpCounters* counters) {
  if (s.empty()) return {};
  StateVector minuend = orthogonalize_vector(s, counters);
  if (q.empty()) return minuend;

  // s \ q == s \ (s q); use the product when it is the smaller subtrahend.
  const StateVector* subtrahend = &q;
  StateVector product = multiply(s, q, counters);
  if (product.size() < q.size()) subtrahend = &product;

  std::vector<TObject> acc = minuend.terms();
  for (const Row& r : subtrahend->rows()) {
    std::vector<TObject> next;
    next.reserve(acc.size());
    for (const TObject& x : acc) {
      if (counters) ++counters->pairwise_subtractions;
      auto diff = subtract(x, r.term);
      next.insert(next.end(), std::make_move_iterator(diff.begin()),
                  std::make_move_iterator(diff.end()));
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return StateVector::from_terms(std::move(acc));
}

StateVector subvector(const StateVector& s, VarId i, Polarity polarity) {
  const TObject fix = polarity == Polarity::Upper ? TObject::upper_of(i) : TObject::lower_of(i);
  return map_rows(s, [&fix](const TObject& t) { return multiply(t, fix); });
}

Count cardinality(const StateVector& s, std::size_t universe) {
  check_universe(s, universe);
  Count total = 0;
  const StateVector disjoint = orthogonalize_vector(s);
  for (const Row& r : disjoint.rows()) {
    total += Count(1) << (universe - r.term.rank());
  }
  return total;
}

IndexSet pivot(const StateVector& s) {
  IndexSet out;
  for (const Row& r : s.rows()) {
    out.insert(out.end(), r.term.upper().begin(), r.term.upper().end());
    out.insert(out.end(), r.term.lower().begin(), r.term.lower().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_free(const StateVector& s, VarId i) {
  require_non_empty(s, "is_free");
  return equivalent(remove_event(subvector(s, i, Polarity::Upper), i),
                    remove_event(subvector(s, i, Polarity::Lower), i));
}

IndexSet support(const StateVector& s) {
  require_non_empty(s, "support");
  IndexSet out;
  for (VarId i : pivot(s)) {
    if (!is_free(s, i)) out.push_back(i);
  }
  return out;
}

EventStatus event_status(const StateVector& s, VarId i) {
  if (s.empty()) return EventStatus::EmptySpace;
  if (subvector(s, i, Polarity::Lower).empty()) return EventStatus::IdenticallyTrue;
  if (subvector(s, i, Polarity::Upper).empty()) return EventStatus::IdenticallyFalse;
  return EventStatus::Indefinite;
}

StateVector raise_index(const StateVector& s, VarId i) {
  return map_rows(s, [i](const TObject& t) { return t.with_upper(i); });
}

StateVector lower_index(const StateVector& s, VarId i) {
  return map_rows(s, [i](const TObject& t) { return t.with_lower(i); });
}

StateVector remove_event(const StateVector& s, VarId i) {
  return map_rows(s, [i](const TObject& t) { return t.without(i); });
}

bool is_boolean_function(const StateVector& s, VarId i) {
  require_non_empty(s, "is_boolean_function");
  return multiply(remove_event(subvector(s, i, Polarity::Lower), i),
                  remove_event(subvector(s, i, Polarity::Upper), i))
      .empty();
}

bool equivalent(const StateVector& s, const StateVector& q, OpCounters* counters) {
  if (s == q) return true;
  return subtract_set(s, q, counters).empty() && subtract_set(q, s, counters).empty();
}

StateVector complement(const StateVector& s, std::size_t universe) {
  check_universe(s, universe);
  return subtract_set(StateVector::trivial(), s);
}

StateVector absorb_subsumed(const StateVector& s) {
  const auto& rows = s.rows();
  std::vector<TObject> kept;
  kept.reserve(rows.size());
  // Rows are sorted by rank, so a container of row k has rank <= rank(k) and
  // can only appear at an index where rank is not larger.
  for (std::size_t k = 0; k < rows.size(); ++k) {
    bool absorbed = false;
    for (std::size_t j = 0; j < rows.size() && !absorbed; ++j) {
      if (j == k || rows[j].term.rank() > rows[k].term.rank()) continue;
      absorbed = is_subset(rows[k].term, rows[j].term);
    }
    if (!absorbed) kept.push_back(rows[k].term);
  }
  return StateVector::from_terms(std::move(kept));
}

const char* to_string(EventStatus status) noexcept {
  switch (status) {
    case EventStatus::IdenticallyTrue: return "IdenticallyTrue";
    case EventStatus::IdenticallyFalse: return "IdenticallyFalse";
    case EventStatus::Indefinite: return "Indefinite";
    case EventStatus::EmptySpace: return "EmptySpace";
  }
  return "?";
}

}  // namespace stalg
