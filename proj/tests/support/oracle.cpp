#include "support/oracle.hpp"

#include <algorithm>
#include <map>

namespace stalg::testing {

StateVector rows(std::initializer_list<std::string_view> text) {
  std::vector<TObject> out;
  for (auto r : text) out.push_back(parse_row(r));
  return StateVector::from_terms(std::move(out));
}

std::vector<bool> assignment(std::uint64_t k, std::size_t n) {
  std::vector<bool> v(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) v[i] = (k & dense::state_bit(static_cast<VarId>(i), n)) != 0;
  return v;
}

dense::DenseVector truth_table(const std::vector<Formula>& fs, std::size_t n) {
  dense::DenseVector d(n);
  for (std::size_t k = 0; k < d.dimension(); ++k) {
    const auto values = assignment(k, n);
    d[k] = std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return evaluate(f, values); });
  }
  return d;
}

dense::DenseVector truth_table(const Formula& f, std::size_t n) {
  return truth_table(std::vector<Formula>{f}, n);
}

StateVector pure_states(const StateVector& s, std::size_t n) {
  const dense::DenseVector d = dense::expand(s, n);
  std::vector<TObject> out;
  for (std::size_t k = 0; k < d.dimension(); ++k) {
    if (d[k] <= 0) continue;
    IndexSet upper;
    IndexSet lower;
    const auto values = assignment(k, n);
    for (VarId i = 1; i <= n; ++i) (values[i] ? upper : lower).push_back(i);
    out.push_back(TObject::make(std::move(upper), std::move(lower)));
  }
  return StateVector::from_terms(std::move(out));
}

StateVector ordered_reduction(const StateVector& s, const VariableOrder& order, std::size_t n) {
  std::vector<TObject> current = pure_states(s, n).terms();
  const auto& ids = order.order();
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
    const VarId v = *it;
    std::map<TObject, int> seen;  // bit 1: upper present, bit 2: lower present
    std::vector<TObject> untouched;
    for (const auto& r : current) {
      if (!r.fixes(v)) {
        untouched.push_back(r);
        continue;
      }
      seen[r.without(v)] |= r.has_upper(v) ? 1 : 2;
    }
    current = std::move(untouched);
    for (const auto& [rest, mask] : seen) {
      if (mask == 3) {
        current.push_back(rest);
      } else {
        current.push_back(mask == 1 ? rest.with_upper(v) : rest.with_lower(v));
      }
    }
  }
  return StateVector::from_terms(std::move(current));
}

bool same_states(const StateVector& a, const StateVector& b, std::size_t n) {
  return dense::binary_project(dense::expand(a, n)) == dense::binary_project(dense::expand(b, n));
}

TObject random_row(Rng& rng, std::size_t n, double hole_rate) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  IndexSet upper;
  IndexSet lower;
  for (VarId i = 1; i <= n; ++i) {
    if (u(rng) < hole_rate) continue;
    (u(rng) < 0.5 ? upper : lower).push_back(i);
  }
  return TObject::make(std::move(upper), std::move(lower));
}

StateVector random_vector(Rng& rng, std::size_t n, std::size_t max_rows, Multiplicity max_mult,
                          double hole_rate) {
  std::uniform_int_distribution<std::size_t> count(0, max_rows);
  std::uniform_int_distribution<Multiplicity> mult(1, max_mult);
  std::vector<Row> out;
  const std::size_t k = count(rng);
  for (std::size_t j = 0; j < k; ++j) out.push_back({random_row(rng, n, hole_rate), mult(rng)});
  return StateVector(std::move(out));
}

Formula random_formula(Rng& rng, std::size_t n, std::size_t max_depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  std::uniform_int_distribution<VarId> var(1, static_cast<VarId>(n));
  if (max_depth == 0 || pick(rng) < 25) {
    const int r = pick(rng);
    if (r < 3) return Formula::constant(r < 2);
    Formula v = Formula::variable(var(rng));
    return r < 40 ? Formula::negation(std::move(v)) : v;
  }
  auto sub = [&] { return random_formula(rng, n, max_depth - 1); };
  std::uniform_int_distribution<int> arity(2, 3);
  switch (pick(rng) % 6) {
    case 0: return Formula::negation(sub());
    case 1:
    case 2: {
      std::vector<Formula> args;
      const int k = arity(rng);
      for (int j = 0; j < k; ++j) args.push_back(sub());
      return pick(rng) < 50 ? Formula::conjunction(std::move(args))
                            : Formula::disjunction(std::move(args));
    }
    case 3: return Formula::implies(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    default: return Formula::exclusive_or({sub(), sub()});
  }
}

std::vector<Formula> random_cnf(Rng& rng, std::size_t n, std::size_t clauses,
                                std::size_t max_width) {
  std::uniform_int_distribution<std::size_t> width(1, max_width);
  std::uniform_int_distribution<VarId> var(1, static_cast<VarId>(n));
  std::bernoulli_distribution sign(0.5);
  std::vector<Formula> out;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Formula> lits;
    const std::size_t w = width(rng);
    for (std::size_t j = 0; j < w; ++j) {
      Formula v = Formula::variable(var(rng));
      lits.push_back(sign(rng) ? Formula::negation(std::move(v)) : std::move(v));
    }
    out.push_back(Formula::disjunction(std::move(lits)));
  }
  return out;
}

StateVector scramble(Rng& rng, const StateVector& s, std::size_t n, std::size_t rounds) {
  std::vector<TObject> terms = s.terms();
  if (terms.empty()) return s;
  std::uniform_int_distribution<VarId> var(1, static_cast<VarId>(n));
  for (std::size_t r = 0; r < rounds; ++r) {
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    const std::size_t k = pick(rng);
    const VarId i = var(rng);
    if (terms[k].fixes(i)) continue;
    auto [hi, lo] = decompose(terms[k], i);
    if (rng() % 2) {
      terms[k] = hi;
      terms.push_back(lo);
    } else {
      terms.push_back(rng() % 2 ? hi : lo);
    }
  }
  std::shuffle(terms.begin(), terms.end(), rng);
  std::vector<Row> out;
  for (auto& t : terms) out.push_back({std::move(t), 1 + rng() % 2});
  return StateVector(std::move(out));
}

}  // namespace stalg::testing
