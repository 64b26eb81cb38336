#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "algebra.hpp"
#include "cosets.hpp"
#include "family.hpp"

namespace eaqmds {

// Root data for lambda-constacyclic codes of length n over GF(q^2):
// eta is a primitive rn-th root of unity with eta^n = lambda, zeta = eta^r.
// The evaluation field is the smallest GF(q^{2s}) containing eta.
struct ConstacyclicContext {
  FieldPtr field;
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  std::uint32_t r = 1;
  Elem lambda = 1;
  Elem eta = 1;
  Elem zeta = 1;
};

// Builds the evaluation field (shared cache) and the roots.
ConstacyclicContext make_constacyclic_context(std::uint32_t q, std::uint64_t n, std::uint32_t r);
// Uses the given field; it must be an extension of GF(q^2) containing a
// primitive rn-th root of unity.
ConstacyclicContext make_constacyclic_context(FieldPtr field, std::uint32_t q, std::uint64_t n,
                                              std::uint32_t r);
// Degree s of the smallest GF(q^{2s}) holding the rn-th roots of unity.
std::uint64_t evaluation_extension(std::uint32_t q, std::uint64_t rn);

enum class CodeKind { Constacyclic, ReedSolomon, ExtendedReedSolomon };

struct ClassicalCode {
  FieldPtr field;
  CodeKind kind = CodeKind::Constacyclic;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  // BCH (or Reed-Solomon) lower bound on the minimum distance.
  std::uint64_t d_design = 0;
  // Filled only once an oracle has confirmed the true distance.
  std::optional<std::uint64_t> d_verified;
  std::optional<DefiningSet> defining_set;
  std::optional<std::uint32_t> rs_r;
  // Shift constant lambda and the constacyclic order (1 for RS codes).
  Elem lambda = 1;
  std::uint32_t r = 1;
  Matrix parity_check;
  std::string family;
  // Primitive rn-th root of unity the rows are built from (constacyclic only).
  Elem eta = 0;
};

// One parity-check row (1, eta^z, eta^{2z}, ...) per z in Z.
ClassicalCode constacyclic_code(const ConstacyclicContext& ctx, const DefiningSet& z);
// RS(n, r) over GF(qm), n = qm - 1: rows alpha^{ij}, i = 1..r-1.
ClassicalCode rs_parity_check(std::uint64_t qm, std::uint32_t r);
// Extended RS over GF(q^2): r rows of powers 0..r-1 of the evaluation
// points (0, 1, alpha, ..., alpha^{q^2-2}), with 0^0 = 1.
ClassicalCode extended_rs_code(std::uint32_t q, std::uint32_t r, FieldPtr field = nullptr);

Matrix generator_matrix(const ClassicalCode& c);

// Generator polynomial prod_{z in Z} (x - eta^z) of a constacyclic code.
Polynomial generator_polynomial(const ConstacyclicContext& ctx, const DefiningSet& z);
// k x n matrix of the shifts x^i g(x), i < k.
Matrix generator_from_polynomial(const Polynomial& g, std::uint64_t n);

// Builds the classical code behind a family member. `field` overrides the
// default evaluation field (used to rebuild under another modulus).
ClassicalCode build_family_code(const FamilySpec& spec, const Delta& delta,
                                FieldPtr field = nullptr);

// GF(q^2) as the subfield of a larger field: the elements fixed by a -> a^{q^2}.
std::vector<Elem> subfield_elements(const Field& field, std::uint64_t qsq);

}  // namespace eaqmds
