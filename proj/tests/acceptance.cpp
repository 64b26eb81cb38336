// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cosets.hpp"
#include "eaqecc.hpp"
#include "errors.hpp"
#include "numtheory.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace eaqmds;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

// Shared between criteria: everything the sweeps touched.
struct SweepState {
  std::vector<SweepReport> reports;
  std::vector<FamilySpec> specs;
};

const std::vector<std::uint32_t> kSweepQ{2, 3, 4, 5, 7, 8, 9};

// Criterion 1: the published example codes, each rebuilt from its classical
// code and rank(HH^dagger).
Outcome examples() {
  Outcome o;
  struct Example {
    const char* name;
    Family family;
    std::uint32_t q;
    std::uint32_t t;
    std::vector<std::string> expect;
  };
  const std::vector<Example> list{
      {"i q=4", Family::I, 4, 0, {"[[17,8,6;1]]_4", "[[17,4,8;1]]_4"}},
      {"iii q=5", Family::III, 5, 0,
       {"[[24,17,5;1]]_5", "[[24,15,6;1]]_5", "[[24,13,7;1]]_5", "[[24,11,8;1]]_5"}},
      {"ii q=5", Family::II, 5, 0,
       {"[[25,16,6;1]]_5", "[[25,14,7;1]]_5", "[[25,12,8;1]]_5", "[[25,10,9;1]]_5"}},
      {"iv q=5", Family::IV, 5, 0, {"[[12,6,5;2]]_5", "[[12,4,6;2]]_5", "[[12,2,7;2]]_5"}},
      {"v (11,3)", Family::V, 11, 3,
       {"[[40,25,10;3]]_11", "[[40,23,11;3]]_11", "[[40,21,12;3]]_11", "[[40,19,13;3]]_11",
        "[[40,17,14;3]]_11"}},
      {"v (19,5)", Family::V, 19, 5,
       {"[[72,43,18;5]]_19", "[[72,41,19;5]]_19", "[[72,39,20;5]]_19", "[[72,37,21;5]]_19",
        "[[72,35,22;5]]_19"}},
      {"v (27,7)", Family::V, 27, 7,
       {"[[104,61,26;7]]_27", "[[104,59,27;7]]_27", "[[104,57,28;7]]_27", "[[104,55,29;7]]_27",
        "[[104,53,30;7]]_27"}},
  };
  double worst = 0;
  for (const auto& ex : list) {
    const auto t0 = Clock::now();
    const auto spec = FamilySpec::make(ex.family, ex.q, ex.t);
    for (const auto& want : ex.expect) {
      // Parse d back out of "[[n,k,d;c]]_q".
      const auto a = want.find(',', want.find(',') + 1) + 1;
      const std::uint64_t d = std::stoull(want.substr(a, want.find(';') - a));
      const auto got = format_params(construct_member(spec, d));
      if (got != want) o.fail(std::string(ex.name) + ": " + got + " != " + want);
    }
    const double ms = ms_since(t0);
    worst = std::max(worst, ms);
    if (ms >= 1000) o.fail(std::string(ex.name) + " took " + std::to_string(ms) + " ms");
  }
  if (o.pass) o.detail << list.size() << " example sets, slowest " << worst << " ms";
  return o;
}

// Criterion 2.
Outcome sweeps(SweepState& st) {
  Outcome o;
  const auto t0 = Clock::now();
  auto run = [&](Lemma l, const std::vector<std::uint32_t>& qs,
                 const std::vector<std::uint32_t>& ts) {
    st.reports.push_back(run_lemma_sweep(l, qs, ts, 0));
    const auto& r = st.reports.back();
    if (!r.passed()) {
      o.fail(std::string(to_string(l)) + ": " + std::to_string(r.failures.size()) + " of " +
             std::to_string(r.instances.size()) + " instances failed");
    }
  };
  run(Lemma::Rank1Plus, kSweepQ, {});
  run(Lemma::Rank1Minus, kSweepQ, {});
  run(Lemma::ExtendedRs, {3, 4, 5, 7, 8}, {});
  run(Lemma::Nega, {3, 5, 7, 9, 11, 13}, {});
  for (auto [t, q] : {std::pair{3u, 5u}, {3u, 11u}, {5u, 9u}, {5u, 19u}, {7u, 13u}}) {
    run(Lemma::Consta, {q}, {t});
  }

  // Every lemma must have exercised each requested q (or (q, t)).
  for (auto q : kSweepQ) {
    st.specs.push_back(FamilySpec::make(Family::I, q));
    st.specs.push_back(FamilySpec::make(Family::III, q));
  }
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) st.specs.push_back(FamilySpec::make(Family::II, q));
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) st.specs.push_back(FamilySpec::make(Family::IV, q));
  for (auto [t, q] : {std::pair{3u, 5u}, {3u, 11u}, {5u, 9u}, {5u, 19u}, {7u, 13u}}) {
    st.specs.push_back(FamilySpec::make(Family::V, q, t));
  }
  std::size_t total = 0;
  for (const auto& r : st.reports) {
    total += r.instances.size();
    std::set<std::uint32_t> seen;
    for (const auto& in : r.instances) seen.insert(in.q);
    if (seen.size() != r.q_list.size()) {
      o.fail(std::string(to_string(r.lemma)) + ": some q produced no instances");
    }
  }
  const double ms = ms_since(t0);
  if (ms >= 5 * 60 * 1000) o.fail("sweeps took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail << st.reports.size() << " sweeps, " << total << " instances, " << ms << " ms";
  return o;
}

// Criterion 3.
Outcome oracle_equivalence(const SweepState& st) {
  Outcome o;
  std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> tested;
  std::size_t disagreements = 0;
  auto check = [&](std::uint32_t q, const DefiningSet& z) {
    if (!tested.insert({z.modulus(), z.elements()}).second) return;
    const std::uint64_t r = z.order();
    const auto ctx = make_constacyclic_context(q, z.modulus() / r, static_cast<std::uint32_t>(r));
    const auto code = constacyclic_code(ctx, z);
    if (is_hermitian_dual_containing(z, q) != dual_containment_matrix_oracle(code.parity_check, q)) {
      ++disagreements;
      o.fail("disagreement at q=" + std::to_string(q) + ", modulus " + std::to_string(z.modulus()));
    }
  };

  // Sub-sets Z1, Z2 and Z of every family instance swept.
  std::size_t family_sets = 0;
  for (const auto& r : st.reports) {
    if (r.lemma == Lemma::ExtendedRs) continue;
    for (const auto& in : r.instances) {
      const Family fam = r.lemma == Lemma::Rank1Plus    ? Family::I
                         : r.lemma == Lemma::Rank1Minus ? Family::III
                         : r.lemma == Lemma::Nega       ? Family::IV
                                                        : Family::V;
      const auto spec = FamilySpec::make(fam, in.q, fam == Family::V ? in.t : 0,
                                         fam == Family::I || fam == Family::III ? in.n : 0);
      const auto split = split_defining_set(spec, in.delta);
      const auto before = tested.size();
      check(in.q, split.lower);
      check(in.q, split.upper);
      check(in.q, defining_set(spec, in.delta));
      family_sets += tested.size() - before;
    }
  }

  // Random unions of whole cosets, fixed seed.
  std::mt19937_64 rng(20241015);
  std::size_t random_sets = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const std::uint64_t qsq = std::uint64_t{q} * q;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> shapes{{qsq + 1, 1}, {qsq - 1, 1}};
    if (q % 2 == 1) shapes.push_back({(qsq - 1) / 2, 2});
    for (auto [n, r] : shapes) {
      if (n < 3) continue;
      std::vector<CyclotomicCoset> pool;
      for (const auto& c : cyclotomic_cosets(n * r, qsq)) {
        if (c.representative % r == 1 % r) pool.push_back(c);
      }
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::uint64_t> elems;
        for (const auto& c : pool) {
          if (rng() % 4 == 0) elems.insert(elems.end(), c.elements.begin(), c.elements.end());
        }
        const auto before = tested.size();
        check(q, DefiningSet(n, r, elems));
        random_sets += tested.size() - before;
      }
    }
  }
  if (tested.size() < 200) o.fail("only " + std::to_string(tested.size()) + " distinct sets");
  if (o.pass) {
    o.detail << tested.size() << " distinct defining sets (" << family_sets << " family, "
             << random_sets << " random), " << disagreements << " disagreements";
  }
  return o;
}

// Criterion 4.
Outcome distance_certification(const SweepState& st) {
  Outcome o;
  const auto t0 = Clock::now();
  const OracleBudget budget;  // 10^7 codewords, 10^6 minors
  std::map<std::string, std::size_t> by_route;
  std::size_t certified = 0;
  std::size_t design_only = 0;
  for (const auto& spec : st.specs) {
    for (auto d : spec.distances()) {
      const auto code = build_family_code(spec, spec.delta_for_distance(d));
      const auto cert = certify_distance(code, spec.q(), budget);
      ++by_route[std::string(to_string(cert.route))];
      if (cert.route == DistanceRoute::DesignOnly) {
        ++design_only;
        const bool must = (spec.family() == Family::I || spec.family() == Family::II ||
                           spec.family() == Family::III) && spec.q() <= 4;
        const bool must_iv = spec.family() == Family::IV && spec.q() == 3;
        if (must || must_iv) o.fail(spec.label() + " d=" + std::to_string(d) + " not certified");
        continue;
      }
      if (!cert.certified() || cert.design != d ||
          (cert.oracle_distance && *cert.oracle_distance != d)) {
        o.fail(spec.label() + " d=" + std::to_string(d) + " is not MDS");
        continue;
      }
      ++certified;
    }
  }
  const double ms = ms_since(t0);
  if (ms >= 10 * 60 * 1000) o.fail("certification took " + std::to_string(ms) + " ms");
  if (o.pass) {
    o.detail << certified << " certified (";
    bool first = true;
    for (const auto& [route, n] : by_route) {
      if (route == "design-distance only") continue;
      o.detail << (first ? "" : ", ") << route << " " << n;
      first = false;
    }
    o.detail << "), " << design_only << " beyond budget, " << ms << " ms";
  }
  return o;
}

// Criterion 5.
Outcome saturation(const SweepState& st) {
  Outcome o;
  std::size_t records = 0;
  std::vector<FamilySpec> specs = st.specs;
  // Every divisor length the rank1 sweeps touched.
  for (auto q : kSweepQ) {
    const std::uint64_t qsq = std::uint64_t{q} * q;
    for (auto n : nt::divisors(qsq + 1)) {
      if (FamilySpec::admissible(Family::I, q, 0, n)) specs.push_back(FamilySpec::make(Family::I, q, 0, n));
    }
    for (auto n : nt::divisors(qsq - 1)) {
      if (FamilySpec::admissible(Family::III, q, 0, n)) specs.push_back(FamilySpec::make(Family::III, q, 0, n));
    }
  }
  specs.push_back(FamilySpec::make(Family::V, 19, 5));
  specs.push_back(FamilySpec::make(Family::V, 27, 7));
  for (const auto& spec : specs) {
    for (const auto& p : enumerate_family(spec, 0)) {
      ++records;
      const auto lhs = static_cast<std::int64_t>(p.n + p.c) - p.k;
      const auto rhs = 2 * static_cast<std::int64_t>(p.d - 1);
      if (lhs != rhs || !p.saturated || !ea_singleton_check(p)) {
        o.fail(format_params(p) + " is not saturated");
      }
    }
  }
  if (o.pass) o.detail << records << " records from " << specs.size() << " families";
  return o;
}

// Criterion 6: the comparison table against its closed forms, written out
// independently of the library.
Outcome table_formulas() {
  Outcome o;
  struct Row {
    std::uint64_t n;
    std::int64_t k_offset;  // k = k_offset - 2d
    std::uint64_t c;
    std::uint64_t d_lo, d_hi;
    bool even;
    std::int64_t qmds_offset;
    std::uint64_t qmds_hi;
  };
  auto expected = [](std::int64_t q, std::int64_t t) {
    const std::int64_t qsq = q * q;
    std::vector<Row> rows{
        {std::uint64_t(qsq + 1), qsq + 4, 1, 2, std::uint64_t(2 * q), true, qsq + 3, std::uint64_t(q + 1)},
        {std::uint64_t(qsq), qsq + 3, 1, std::uint64_t(q + 1), std::uint64_t(2 * q - 1), false, qsq + 2, std::uint64_t(q)},
        {std::uint64_t(qsq - 1), qsq + 2, 1, 2, std::uint64_t(2 * q - 2), false, qsq + 1, std::uint64_t(q - 1)},
    };
    if (q % 2 == 1) {
      const std::int64_t n = (qsq - 1) / 2;
      rows.push_back({std::uint64_t(n), n + 4, 2, std::uint64_t((q + 1) / 2 + 2),
                      std::uint64_t((3 * q - 1) / 2), false, n + 2, std::uint64_t(q)});
      if (t) {
        const std::int64_t nt = (qsq - 1) / t;
        rows.push_back({std::uint64_t(nt), nt + t + 2, std::uint64_t(t),
                        std::uint64_t((t - 1) * (q + 1) / t + 2),
                        std::uint64_t((t + 1) * (q + 1) / t - 2), false, nt + 2,
                        std::uint64_t((t + 1) * (q + 1) / (2 * t) - 1)});
      }
    }
    return rows;
  };
  std::size_t checked = 0;
  for (auto [q, t] : {std::pair{5u, 0u}, {11u, 3u}}) {
    const auto got = build_table(q, t, 0);
    const auto want = expected(q, t);
    if (got.size() != want.size()) {
      o.fail("q=" + std::to_string(q) + ": " + std::to_string(got.size()) + " rows");
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      const auto& g = got[i];
      const auto& w = want[i];
      const bool same = g.n == w.n && g.k_offset == w.k_offset && g.c == w.c && g.d_lo == w.d_lo &&
                        g.d_hi == w.d_hi && g.even_only == w.even && g.qmds_k_offset == w.qmds_offset &&
                        g.qmds_d_lo == 2 && g.qmds_d_hi == w.qmds_hi;
      if (!same) o.fail("q=" + std::to_string(q) + " row n=" + std::to_string(w.n) + " differs");
      // The constructed records themselves must follow the row, d by d.
      std::uint64_t d = w.d_lo;
      for (const auto& p : g.records) {
        if (p.d != d || p.k != w.k_offset - 2 * static_cast<std::int64_t>(d) || p.c != w.c) {
          o.fail("q=" + std::to_string(q) + " record " + format_params(p) + " off the row");
        }
        d += w.even ? 2 : 1;
      }
      if (d - (w.even ? 2 : 1) != w.d_hi) o.fail("q=" + std::to_string(q) + " row n=" +
                                                  std::to_string(w.n) + " incomplete");
      ++checked;
    }
  }
  if (o.pass) o.detail << checked << " rows for q = 5 and (q, t) = (11, 3)";
  return o;
}

// Criterion 7.
Outcome intersection(const SweepState& st) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& r : st.reports) {
    if (r.lemma != Lemma::Consta) continue;
    for (const auto& in : r.instances) {
      ++n;
      const std::uint64_t want = (in.t - 1) / 2;
      if (in.intersection_computed != want || in.intersection_set_matches != true) {
        o.fail("(q,t)=(" + std::to_string(in.q) + "," + std::to_string(in.t) + ") delta=(" +
               std::to_string(in.delta.lo) + "," + std::to_string(in.delta.hi) + ")");
      }
    }
  }
  if (n == 0) o.fail("no constacyclic instances");
  if (o.pass) o.detail << n << " constacyclic instances";
  return o;
}

// Criterion 8.
Outcome representation() {
  Outcome o;
  const auto spec = FamilySpec::make(Family::III, 5);
  const auto alt = Field::with_modulus(5, {3, 0, 1});
  const auto std_field = Field::create(5, 2);
  if (alt->modulus() == std_field->modulus()) o.fail("alternative modulus is the default one");
  std::size_t n = 0;
  for (auto d : spec.distances()) {
    const auto a = construct_member(spec, d);
    const auto b = construct_member(spec, d, alt);
    if (b.field.modulus != std::vector<std::uint32_t>{3, 0, 1}) o.fail("alt field not used");
    if (a.n != b.n || a.k != b.k || a.d != b.d || a.c != b.c) {
      o.fail(format_params(a) + " vs " + format_params(b));
    }
    ++n;
  }
  if (o.pass) o.detail << n << " records identical under x^2+3";
  return o;
}

}  // namespace

int main() {
  SweepState st;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"example reproduction", examples},
      {"rank sweeps", [&] { return sweeps(st); }},
      {"dual-containment oracle equivalence", [&] { return oracle_equivalence(st); }},
      {"distance certification", [&] { return distance_certification(st); }},
      {"EA-Singleton saturation", [&] { return saturation(st); }},
      {"comparison table", table_formulas},
      {"constacyclic intersection", [&] { return intersection(st); }},
      {"representation invariance", representation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << ": "
              << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "FAIL" : "PASS") << "  acceptance: " << criteria.size() - failed << "/"
            << criteria.size() << " criteria" << std::endl;
  return failed ? 1 : 0;
}
