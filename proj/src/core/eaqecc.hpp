#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "codes.hpp"
#include "family.hpp"

namespace eaqmds {

// [[n, k, d; c]]_q together with where it came from.
struct EaqeccParams {
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t c = 0;
  bool saturated = false;

  std::optional<Family> family;
  std::uint32_t t = 0;
  Delta delta;
  std::uint64_t classical_n = 0;
  std::uint64_t classical_k = 0;
  std::uint64_t classical_d = 0;
  std::optional<DefiningSet> defining_set;
  std::optional<std::uint32_t> rs_r;
  FieldDescriptor field;
};

// rank(H H^dagger): the number of maximally entangled pairs.
std::uint64_t ebit_count(const Matrix& h, std::uint64_t q);

// rank(HX HZ^T - HZ HX^T) / 2 over GF(q); both matrices over GF(q) with the
// same shape. An odd rank means the inputs are malformed.
std::uint64_t ebit_count_symplectic(const Matrix& hx, const Matrix& hz, std::uint64_t q);

// [[n, 2k - n + c, d_design; c]] from a classical code over GF(q^2)
// (or its extension).
EaqeccParams derive_eaqecc(const ClassicalCode& code, std::uint64_t q);

// True iff n + c - k = 2(d - 1); throws VerificationFailure when the
// EA-Singleton inequality is violated or c lies outside [0, n-1].
bool ea_singleton_check(const EaqeccParams& p);

// Constructs the family member of distance d and derives its parameters.
// The theorem's closed form is asserted against the construction.
EaqeccParams construct_member(const FamilySpec& spec, std::uint64_t d, FieldPtr field = nullptr);

// One constructed and verified record per admissible d, sorted by d.
std::vector<EaqeccParams> enumerate_family(const FamilySpec& spec, unsigned jobs = 1);

}  // namespace eaqmds
