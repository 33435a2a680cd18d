#include "kspp/ledger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kspp/theorems.hpp"

namespace kspp {

namespace {

void check_gap_params(std::int64_t delta, std::int64_t k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and >= 2");
  if (delta <= k) throw std::invalid_argument("gap polynomials need delta > k");
}

std::string tuple_str(std::initializer_list<std::int64_t> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::int64_t gap_cubic_value(std::int64_t s, std::int64_t n, std::int64_t delta, std::int64_t k) {
  check_gap_params(delta, k);
  std::int64_t d = delta;
  std::int64_t a = (d - k) * (d - k);
  std::int64_t b = (d - k) * (d * d + (2 - k) * d - 2 * k - 1);
  std::int64_t c = (d - k) * (2 * n - 2 * d - k - 4);
  std::int64_t tail = -2 * (d - k - 1) * n + d * d * d + (2 - 2 * k) * d * d +
                      (k * k - 2 * k + 1) * d - 3 * k - 2;
  return checked_add(checked_mul(checked_mul(checked_mul(a, s) , s), s) -
                         checked_mul(checked_mul(b, s), s) + checked_mul(c, s),
                     tail);
}

Rat gap_cubic_derivative(const Rat& x, std::int64_t n, std::int64_t delta, std::int64_t k) {
  check_gap_params(delta, k);
  std::int64_t d = delta;
  Rat a(3 * (d - k) * (d - k));
  Rat b(2 * (d - k) * (d * d + (2 - k) * d - 2 * k - 1));
  Rat c((d - k) * (2 * n - 2 * d - k - 4));
  return a * x * x - b * x + c;
}

std::int64_t gap_cubic_at_one(std::int64_t n, std::int64_t delta, std::int64_t k) {
  check_gap_params(delta, k);
  return 2 * n - delta * delta + (k - 2) * delta - 2;
}

std::int64_t gap_linear_value(std::int64_t s, std::int64_t n, std::int64_t delta, std::int64_t k) {
  check_gap_params(delta, k);
  std::int64_t d = delta;
  return checked_sub(checked_mul(2 * (d - k), n),
                     checked_mul((d - k) * (d - k + 2), s)) -
         d * d * d + (2 * k - 2) * d * d - (k * k - 2 * k + 3) * d + 3 * k - 2;
}

EdgeBudgetForms violation_edge_budget(std::int64_t n, std::int64_t s, std::int64_t t,
                                      std::int64_t k) {
  EdgeBudgetForms f;
  std::int64_t a = n - s - t;
  f.direct = checked_add(checked_mul(a, a + 1), 2 * t + 2 * k * s - 4);
  f.in_n = checked_mul(n, n) - (2 * s + 2 * t - 1) * n + s * s + (2 * t + 2 * k - 1) * s +
           t * t + t - 4;
  f.in_s = s * s - (2 * n - 2 * t - 2 * k + 1) * s + checked_mul(n - t, n - t + 1) + 2 * t - 4;
  f.in_regime = n >= s + t;
  return f;
}

Graph build_padded_family(int n, int delta, int k, int s) {
  check_gap_params(delta, k);
  if (s < 1 || s > delta) throw std::invalid_argument("padded family needs 1 <= s <= delta");
  std::int64_t parts = static_cast<std::int64_t>(delta - k) * s + 1;
  std::int64_t part_size = delta + 1 - s;
  std::int64_t big = n - s - part_size * parts;
  if (big < 1) throw std::invalid_argument("padded family: big clique empty");
  PartitionSpec spec;
  spec.clique_size = s;
  spec.parts.push_back(static_cast<int>(big));
  for (std::int64_t i = 0; i < parts; ++i) spec.parts.push_back(static_cast<int>(part_size));
  return build_join_clique_union(spec);
}

Graph build_singleton_family(int n, int delta, int k, int s) {
  check_gap_params(delta, k);
  if (s < 1) throw std::invalid_argument("singleton family needs s >= 1");
  std::int64_t parts = static_cast<std::int64_t>(delta - k) * s + 1;
  std::int64_t big = n - s - parts;
  if (big < 1) throw std::invalid_argument("singleton family: big clique empty");
  PartitionSpec spec;
  spec.clique_size = s;
  spec.parts.push_back(static_cast<int>(big));
  for (std::int64_t i = 0; i < parts; ++i) spec.parts.push_back(1);
  return build_join_clique_union(spec);
}

namespace {

IdentityReport gap_identity(int n, int delta, int k, int s, bool padded) {
  IdentityReport r;
  r.context = tuple_str({n, delta, k, s});
  Graph star, fam;
  try {
    star = build_extremal_graph(n, delta, k);
    fam = padded ? build_padded_family(n, delta, k, s)
                 : build_singleton_family(n, delta, k, s);
  } catch (const std::invalid_argument& e) {
    r.applicable = false;
    r.reason = e.what();
    return r;
  }
  r.applicable = true;
  r.lhs = Rat(star.edge_count() - fam.edge_count());
  std::int64_t poly = padded ? gap_cubic_value(s, n, delta, k) : gap_linear_value(s, n, delta, k);
  std::int64_t sign = padded ? (delta - s) : (s - delta);
  r.rhs = Rat(checked_mul(sign, poly), 2);
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace

IdentityReport verify_padded_gap_identity(int n, int delta, int k, int s) {
  return gap_identity(n, delta, k, s, true);
}

IdentityReport verify_singleton_gap_identity(int n, int delta, int k, int s) {
  return gap_identity(n, delta, k, s, false);
}

CliqueUnionReport verify_clique_union_maximum(int s, int p, int t, int n) {
  if (s < 0 || t < 2 || p < 1) throw std::invalid_argument("need s >= 0, t >= 2, p >= 1");
  if (n < s + p * t) throw std::invalid_argument("order too small: need n >= s + p*t");
  CliqueUnionReport rep;

  int rest = n - s;
  int big = rest - p * (t - 1);  // concentrated partition (big, p, ..., p)
  PartitionSpec conc;
  conc.clique_size = s;
  conc.parts.push_back(big);
  for (int i = 1; i < t; ++i) conc.parts.push_back(p);
  std::int64_t rhs = build_join_clique_union(conc).edge_count();

  // all descending partitions of rest into t parts, each >= p
  std::vector<int> parts(t);
  auto recurse = [&](auto&& self, int idx, int remaining, int hi) -> void {
    if (idx == t) {
      if (remaining != 0) return;
      PartitionCheck row;
      row.parts.assign(parts.begin(), parts.end());
      PartitionSpec spec;
      spec.clique_size = s;
      spec.parts = row.parts;
      row.lhs = build_join_clique_union(spec).edge_count();
      row.rhs = rhs;
      row.applicable = parts[0] < big;  // strict-hypothesis gate
      if (!row.applicable) {
        ++rep.counts.not_applicable;
      } else {
        row.holds = row.lhs < row.rhs;
        if (row.holds) {
          ++rep.counts.holds;
        } else {
          ++rep.counts.fails;
          std::ostringstream os;
          os << "partition (";
          for (std::size_t i = 0; i < row.parts.size(); ++i)
            os << (i ? "," : "") << row.parts[i];
          os << ") gives " << row.lhs << " !< " << row.rhs;
          rep.counts.failures.push_back(os.str());
        }
      }
      rep.rows.push_back(std::move(row));
      return;
    }
    int slots_left = t - idx - 1;
    for (int v = std::min(hi, remaining - p * slots_left); v >= p; --v) {
      parts[idx] = v;
      self(self, idx + 1, remaining - v, v);
    }
  };
  recurse(recurse, 0, rest, rest);
  return rep;
}

QBoundReport verify_q_upper_bound(const Graph& g, double tol) {
  if (g.vertex_count() < 2) throw std::invalid_argument("q bound needs n >= 2");
  QBoundReport r;
  PowerOptions opts;
  opts.tol = tol;
  auto est = q_spectral_radius(g, opts);
  r.q = est.value;
  r.bound = q_edge_bound(g);
  r.determined = est.converged;
  if (r.determined) r.holds = r.q <= r.bound.to_double() + 10.0 * tol;
  return r;
}

ChainReport verify_violation_budget_chain(int k, int n_max) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and >= 2");
  ChainReport rep;
  auto fail = [&](const std::string& what) {
    ++rep.counts.fails;
    rep.counts.failures.push_back(what);
  };
  auto pass = [&]() { ++rep.counts.holds; };

  for (int n = 2; n <= n_max; ++n) {
    if (!spectral_theorem_order_premise(n, k)) {
      ++rep.counts.not_applicable;
      continue;
    }
    Rat threshold = q_threshold(n, k);

    // everything removed: e <= (kn-2)/2 forces q strictly under threshold
    ++rep.all_removed_orders;
    Rat all_removed = Rat(static_cast<std::int64_t>(k) * n - 2, n - 1) + Rat(n - 2);
    if (all_removed < threshold) pass();
    else fail("all-removed bound not strict at " + tuple_str({n, k}));

    for (int s = 1; s <= n; ++s) {
      for (int t = 1; s + t <= n; ++t) {
        auto forms = violation_edge_budget(n, s, t, k);
        std::int64_t m = forms.direct;
        Rat final_q = Rat(m, n - 1) + Rat(n - 2);
        if (n <= s + t + k - 1) {
          ++rep.shallow_tuples;
          if (m <= 2 * static_cast<std::int64_t>(k) * n + static_cast<std::int64_t>(k) * (k - 3) - 2)
            pass();
          else fail("shallow budget exceeded at " + tuple_str({n, s, t, k}));
        } else {
          ++rep.deep_tuples;
          if (m <= static_cast<std::int64_t>(n) * n - 3 * n + 2 * k) pass();
          else fail("deep budget exceeded at " + tuple_str({n, s, t, k}));
        }
        if (final_q <= threshold) pass();
        else fail("final rational bound exceeded at " + tuple_str({n, s, t, k}));
      }
    }
  }
  return rep;
}

MonotonicityReport verify_gap_cubic_monotone(int n, int delta, int k) {
  check_gap_params(delta, k);
  MonotonicityReport r;
  std::int64_t d = delta;
  std::int64_t inner = d * d + (2 - k) * d - 2 * k - 1;
  Rat gate = Rat(checked_mul(inner, inner), 6 * (d - k)) + Rat(d + k + 1);
  if (Rat(n) < gate) {
    r.applicable = false;
    r.reason = "order below the cubic-monotonicity gate " + gate.str();
    return r;
  }
  r.applicable = true;
  Rat vertex(inner, 3 * (d - k));
  Rat lo(1), hi(d);
  if (vertex >= lo && vertex <= hi) {
    r.derivative_min = gap_cubic_derivative(vertex, n, delta, k);
  } else {
    Rat at_lo = gap_cubic_derivative(lo, n, delta, k);
    Rat at_hi = gap_cubic_derivative(hi, n, delta, k);
    r.derivative_min = at_lo < at_hi ? at_lo : at_hi;
  }
  r.at_one = gap_cubic_value(1, n, delta, k);
  r.holds = r.derivative_min >= Rat(0) && r.at_one > 0;
  return r;
}

}  // namespace kspp
