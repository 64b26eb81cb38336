#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"
#include "family.hpp"

namespace eaqmds {

struct OracleBudget {
  std::uint64_t max_codewords = 10'000'000;
  std::uint64_t max_minors = 1'000'000;
  // Zero disables the wall-clock ceiling.
  std::chrono::milliseconds time_limit{0};
};

// Minimum Hamming weight over all nonzero combinations of the rows of g with
// coefficients from `alphabet` (default: every element of g's field). Throws
// BudgetExceeded when |alphabet|^k exceeds the codeword budget.
std::uint64_t exhaustive_min_distance(const Matrix& g, const OracleBudget& budget,
                                      std::span<const Elem> alphabet = {});

enum class MinorSide {
  Generator,  // k x k minors of g itself
  Dual,       // (n-k) x (n-k) minors of a parity check derived from g
  Smaller,    // whichever of the two is cheaper
};

// True iff every k x k submatrix of the full-rank generator g is
// nonsingular, equivalently the code is MDS. Column subsets are visited in
// lexicographic order. Throws BudgetExceeded when C(n, k) exceeds the minor
// budget.
bool mds_minor_oracle(const Matrix& g, const OracleBudget& budget,
                      MinorSide side = MinorSide::Smaller);

// H H^dagger == 0
bool dual_containment_matrix_oracle(const Matrix& h, std::uint64_t q);

enum class DistanceRoute { Enumeration, Minors, DesignOnly };
std::string_view to_string(DistanceRoute r);

struct DistanceCertificate {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t design = 0;
  DistanceRoute route = DistanceRoute::DesignOnly;
  std::optional<std::uint64_t> oracle_distance;  // set by enumeration
  std::optional<bool> mds;                       // set by either oracle
  // Oracle confirmed d = n - k + 1 = design distance.
  bool certified() const { return mds.value_or(false) && design == n - k + 1; }
};

// Message enumeration when it fits the codeword budget, else the minor
// oracle when C(n, k) fits, else design-distance only. Codes over an
// extension of GF(q^2) are enumerated through their GF(q^2) generator
// polynomial.
DistanceCertificate certify_distance(const ClassicalCode& code, std::uint32_t q,
                                     const OracleBudget& budget);

enum class Lemma {
  Rank1Plus,   // cyclic, n | q^2+1          -> 1   ("rank1")
  Rank1Minus,  // cyclic, n | q^2-1          -> 1   ("rank1-minus")
  ExtendedRs,  // extended RS, q <= r <= 2q-2 -> 1  ("rank-ers")
  Nega,        // negacyclic, n = (q^2-1)/2   -> 2  ("nega")
  Consta,      // constacyclic, n = (q^2-1)/t -> t  ("consta")
};
std::string_view to_string(Lemma l);
std::optional<Lemma> parse_lemma(std::string_view s);
bool lemma_admits(Lemma l, std::uint32_t q, std::uint32_t t = 0);

struct SweepInstance {
  std::uint32_t q = 0;
  std::uint32_t t = 0;
  std::uint64_t n = 0;
  Delta delta;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  // |Z ∩ Z^{-q}|, the rank read off the defining set (constacyclic only).
  std::optional<std::uint64_t> coset_rank;
  // Consta only: |Z1 ∩ Z2^{-q}| and whether the set equals the closed form.
  std::optional<std::uint64_t> intersection_expected;
  std::optional<std::uint64_t> intersection_computed;
  std::optional<bool> intersection_set_matches;
  bool pass = false;
};

struct SweepReport {
  Lemma lemma = Lemma::Rank1Plus;
  std::vector<std::uint32_t> q_list;
  std::vector<std::uint32_t> t_list;
  std::vector<SweepInstance> instances;
  std::vector<std::size_t> failures;  // indices into instances
  double elapsed_ms = 0;
  bool passed() const { return failures.empty() && !instances.empty(); }
};

SweepReport run_lemma_sweep(Lemma lemma, std::span<const std::uint32_t> q_list,
                            std::span<const std::uint32_t> t_list = {}, unsigned jobs = 1);

}  // namespace eaqmds
