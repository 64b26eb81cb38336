#include "verify.hpp"

#include <algorithm>
#include <numeric>

#include "eaqecc.hpp"
#include "errors.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"

namespace eaqmds {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : limit_(limit), start_(Clock::now()) {}
  void check(const char* what) const {
    if (limit_.count() > 0 && Clock::now() - start_ > limit_) {
      throw BudgetExceeded(std::string(what) + ": time ceiling exceeded");
    }
  }

 private:
  std::chrono::milliseconds limit_;
  Clock::time_point start_;
};

// Gaussian elimination on an m x m scratch block; destroys it.
bool nonsingular(const Field& f, std::vector<Elem>& a, std::size_t m) {
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t sel = c;
    while (sel < m && a[sel * m + c] == 0) ++sel;
    if (sel == m) return false;
    if (sel != c) {
      std::swap_ranges(a.begin() + sel * m, a.begin() + sel * m + m, a.begin() + c * m);
    }
    const Elem inv = f.inv(a[c * m + c]);
    for (std::size_t i = c + 1; i < m; ++i) {
      const Elem x = a[i * m + c];
      if (!x) continue;
      const Elem factor = f.neg(f.mul(x, inv));
      for (std::size_t j = c; j < m; ++j) {
        const Elem v = a[c * m + j];
        if (v) a[i * m + j] = f.add(a[i * m + j], f.mul(factor, v));
      }
    }
  }
  return true;
}

}  // namespace

std::uint64_t exhaustive_min_distance(const Matrix& g, const OracleBudget& budget,
                                      std::span<const Elem> alphabet) {
  const Field& f = *g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0) throw InvalidArgument("exhaustive_min_distance: code has no nonzero codewords");

  std::vector<Elem> symbols;
  if (alphabet.empty()) {
    symbols.resize(f.order());
    std::iota(symbols.begin(), symbols.end(), Elem{0});
  } else {
    symbols.assign(alphabet.begin(), alphabet.end());
    auto zero = std::find(symbols.begin(), symbols.end(), Elem{0});
    if (zero == symbols.end()) throw InvalidArgument("exhaustive_min_distance: alphabet lacks 0");
    std::iter_swap(symbols.begin(), zero);
  }
  const std::size_t alpha = symbols.size();
  const std::uint64_t total = nt::ipow_sat(alpha, k);
  if (total > budget.max_codewords) {
    throw BudgetExceeded("exhaustive_min_distance: " + std::to_string(alpha) + "^" +
                         std::to_string(k) + " codewords exceed the budget of " +
                         std::to_string(budget.max_codewords));
  }

  // step[i][a] = (symbols[a+1] - symbols[a]) * row i, so advancing digit i
  // from a to a+1 (cyclically) adds one precomputed vector
  std::vector<Elem> step(k * alpha * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < alpha; ++a) {
      const Elem coeff = f.sub(symbols[(a + 1) % alpha], symbols[a]);
      Elem* dst = &step[(i * alpha + a) * n];
      for (std::size_t j = 0; j < n; ++j) dst[j] = f.mul(coeff, g.at(i, j));
    }
  }

  const Deadline deadline(budget.time_limit);
  std::vector<std::size_t> digit(k, 0);
  std::vector<Elem> word(n, 0);
  std::uint64_t best = n + 1;
  for (std::uint64_t iter = 1; iter < total; ++iter) {
    std::size_t i = 0;
    for (;;) {
      const Elem* s = &step[(i * alpha + digit[i]) * n];
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], s[j]);
      digit[i] = (digit[i] + 1) % alpha;
      if (digit[i] != 0) break;
      ++i;
    }
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
    best = std::min(best, w);
    if ((iter & 0xFFFF) == 0) deadline.check("exhaustive_min_distance");
  }
  return best;
}

bool mds_minor_oracle(const Matrix& g, const OracleBudget& budget, MinorSide side) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (matrix_rank(g) != k) throw InvalidArgument("mds_minor_oracle: generator is not full rank");
  const std::uint64_t count = nt::binomial_sat(n, k);
  if (count > budget.max_minors) {
    throw BudgetExceeded("mds_minor_oracle: C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") = " + std::to_string(count) + " minors exceed the budget of " +
                         std::to_string(budget.max_minors));
  }
  const bool use_dual =
      side == MinorSide::Dual || (side == MinorSide::Smaller && n - k < k);
  const Matrix m = use_dual ? nullspace_basis(g) : g;
  const std::size_t size = m.rows();
  if (size == 0) return true;

  const Field& f = *m.field();
  const Deadline deadline(budget.time_limit);
  std::vector<std::size_t> cols(size);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  std::vector<Elem> scratch(size * size);
  std::uint64_t visited = 0;
  for (;;) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) scratch[i * size + j] = m.at(i, cols[j]);
    }
    if (!nonsingular(f, scratch, size)) return false;
    if ((++visited & 0x3FF) == 0) deadline.check("mds_minor_oracle");
    // next subset in lexicographic order
    std::size_t pos = size;
    while (pos > 0 && cols[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (std::size_t j = pos; j < size; ++j) cols[j] = cols[j - 1] + 1;
  }
  return true;
}

bool dual_containment_matrix_oracle(const Matrix& h, std::uint64_t q) {
  if (h.rows() == 0) return true;
  return mat_mul(h, hermitian_adjoint(h, q)).is_zero();
}

std::string_view to_string(DistanceRoute r) {
  switch (r) {
    case DistanceRoute::Enumeration: return "enumeration";
    case DistanceRoute::Minors: return "minors";
    case DistanceRoute::DesignOnly: return "design-distance only";
  }
  return "?";
}

DistanceCertificate certify_distance(const ClassicalCode& code, std::uint32_t q,
                                     const OracleBudget& budget) {
  DistanceCertificate cert;
  cert.n = code.n;
  cert.k = code.k;
  cert.design = code.d_design;
  const std::uint64_t qsq = std::uint64_t{q} * q;
  const Field& f = *code.field;

  if (code.k > 0) {
    // Enumerate messages over GF(q^2). For a code written over a larger
    // field, its GF(q^2) generator polynomial gives a generator matrix with
    // entries in the subfield.
    std::optional<Matrix> sub_generator;
    std::vector<Elem> alphabet;
    if (f.order() == qsq) {
      if (nt::ipow_sat(qsq, code.k) <= budget.max_codewords) {
        sub_generator = generator_matrix(code);
      }
    } else if (code.kind == CodeKind::Constacyclic && code.defining_set &&
               code.defining_set->closed_under(qsq) &&
               nt::ipow_sat(qsq, code.k) <= budget.max_codewords) {
      std::vector<Elem> roots;
      for (auto z : code.defining_set->elements()) roots.push_back(f.pow(code.eta, z));
      const Polynomial g = poly_from_roots(code.field, roots);
      const bool in_subfield = std::all_of(g.coefficients().begin(), g.coefficients().end(),
                                           [&](Elem c) { return f.pow(c, qsq) == c; });
      if (in_subfield) {
        sub_generator = generator_from_polynomial(g, code.n);
        alphabet = subfield_elements(f, qsq);
      }
    }
    if (sub_generator) {
      cert.route = DistanceRoute::Enumeration;
      cert.oracle_distance = exhaustive_min_distance(*sub_generator, budget, alphabet);
      cert.mds = *cert.oracle_distance == code.n - code.k + 1;
      return cert;
    }
  }
  if (nt::binomial_sat(code.n, code.k) <= budget.max_minors) {
    cert.route = DistanceRoute::Minors;
    cert.mds = mds_minor_oracle(generator_matrix(code), budget);
    return cert;
  }
  cert.route = DistanceRoute::DesignOnly;
  return cert;
}

std::string_view to_string(Lemma l) {
  switch (l) {
    case Lemma::Rank1Plus: return "rank1";
    case Lemma::Rank1Minus: return "rank1-minus";
    case Lemma::ExtendedRs: return "rank-ers";
    case Lemma::Nega: return "nega";
    case Lemma::Consta: return "consta";
  }
  return "?";
}

std::optional<Lemma> parse_lemma(std::string_view s) {
  for (auto l : {Lemma::Rank1Plus, Lemma::Rank1Minus, Lemma::ExtendedRs, Lemma::Nega,
                 Lemma::Consta}) {
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

bool lemma_admits(Lemma l, std::uint32_t q, std::uint32_t t) {
  switch (l) {
    case Lemma::Rank1Plus: return FamilySpec::admissible(Family::I, q);
    case Lemma::Rank1Minus: return FamilySpec::admissible(Family::III, q);
    case Lemma::ExtendedRs: return FamilySpec::admissible(Family::II, q) && q >= 2;
    case Lemma::Nega: return FamilySpec::admissible(Family::IV, q);
    case Lemma::Consta: return FamilySpec::admissible(Family::V, q, t);
  }
  return false;
}

namespace {

struct GridPoint {
  FamilySpec spec;
  Delta delta;
};

std::vector<GridPoint> sweep_grid(Lemma lemma, std::uint32_t q, std::uint32_t t) {
  std::vector<GridPoint> grid;
  const std::uint64_t qsq = std::uint64_t{q} * q;
  switch (lemma) {
    case Lemma::Rank1Plus:
      for (auto n : nt::divisors(qsq + 1)) {
        if (n < 2) continue;
        const auto spec = FamilySpec::make(Family::I, q, 0, n);
        for (std::int64_t d = 0; d <= static_cast<std::int64_t>(spec.delta_cap()); ++d) {
          grid.push_back({spec, {d, d}});
        }
      }
      break;
    case Lemma::Rank1Minus:
      for (auto n : nt::divisors(qsq - 1)) {
        if (!FamilySpec::admissible(Family::III, q, 0, n)) continue;
        const auto spec = FamilySpec::make(Family::III, q, 0, n);
        const auto cap = static_cast<std::int64_t>(spec.delta_cap());
        for (std::int64_t d = 0; d <= cap - 1; ++d) grid.push_back({spec, {d, d}});
        for (std::int64_t d = 1; d <= cap - 1; ++d) grid.push_back({spec, {d, d - 1}});
      }
      break;
    case Lemma::ExtendedRs: {
      const auto spec = FamilySpec::make(Family::II, q);
      for (std::int64_t r = q; r <= 2 * static_cast<std::int64_t>(q) - 2; ++r) {
        grid.push_back({spec, {0, r}});
      }
      break;
    }
    case Lemma::Nega:
    case Lemma::Consta: {
      const auto spec = lemma == Lemma::Nega ? FamilySpec::make(Family::IV, q)
                                             : FamilySpec::make(Family::V, q, t);
      // the window bounds are the admissible extremes of delta_for_distance
      const Delta first = spec.delta_for_distance(spec.d_min());
      const Delta last = spec.delta_for_distance(spec.d_max());
      for (std::int64_t lo = first.lo; lo <= last.lo; ++lo) {
        for (std::int64_t hi = first.hi; hi <= last.hi; ++hi) grid.push_back({spec, {lo, hi}});
      }
      break;
    }
  }
  return grid;
}

SweepInstance evaluate(Lemma lemma, const GridPoint& gp) {
  const FamilySpec& spec = gp.spec;
  SweepInstance inst;
  inst.q = spec.q();
  inst.t = spec.t();
  inst.n = spec.length();
  inst.delta = gp.delta;
  inst.expected = spec.closed_form_c();
  const ClassicalCode code = build_family_code(spec, gp.delta);
  inst.computed = ebit_count(code.parity_check, spec.q());
  inst.pass = inst.computed == inst.expected;
  if (code.defining_set) {
    inst.coset_rank = intersect_minus_q(*code.defining_set, *code.defining_set, spec.q()).size();
    inst.pass = inst.pass && *inst.coset_rank == inst.expected;
  }
  if (lemma == Lemma::Consta) {
    const auto split = split_defining_set(spec, gp.delta);
    const auto inter = intersect_minus_q(split.lower, split.upper, spec.q());
    const std::int64_t t = spec.t();
    const std::int64_t q = spec.q();
    const std::int64_t s = (t - 1) / 2;
    std::vector<std::uint64_t> closed;
    for (std::int64_t x = 1; x <= s; ++x) {
      const std::int64_t num = (t - 2 * x - 1) * q - 2 * x - t - 1;
      closed.push_back(nt::mod_floor(1 + t * (num / (2 * t)), split.lower.modulus()));
    }
    std::sort(closed.begin(), closed.end());
    inst.intersection_expected = static_cast<std::uint64_t>(s);
    inst.intersection_computed = inter.size();
    inst.intersection_set_matches = inter == closed;
    inst.pass = inst.pass && inter.size() == static_cast<std::uint64_t>(s) && inter == closed;
  }
  return inst;
}

}  // namespace

SweepReport run_lemma_sweep(Lemma lemma, std::span<const std::uint32_t> q_list,
                            std::span<const std::uint32_t> t_list, unsigned jobs) {
  const auto start = Clock::now();
  SweepReport report;
  report.lemma = lemma;
  report.q_list.assign(q_list.begin(), q_list.end());
  report.t_list.assign(t_list.begin(), t_list.end());

  std::vector<GridPoint> grid;
  for (auto q : q_list) {
    if (lemma == Lemma::Consta) {
      for (auto t : t_list) {
        if (!lemma_admits(lemma, q, t)) continue;
        auto g = sweep_grid(lemma, q, t);
        grid.insert(grid.end(), g.begin(), g.end());
      }
    } else if (lemma_admits(lemma, q)) {
      auto g = sweep_grid(lemma, q, 0);
      grid.insert(grid.end(), g.begin(), g.end());
    }
  }

  report.instances.resize(grid.size());
  parallel_for(grid.size(), jobs,
               [&](std::size_t i) { report.instances[i] = evaluate(lemma, grid[i]); });
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    if (!report.instances[i].pass) report.failures.push_back(i);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace eaqmds
