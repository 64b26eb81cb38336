#include "codes.hpp"

#include <numeric>

#include "errors.hpp"
#include "numtheory.hpp"

namespace eaqmds {

std::uint64_t evaluation_extension(std::uint32_t q, std::uint64_t rn) {
  const std::uint64_t qsq = std::uint64_t{q} * q;
  if (std::gcd(qsq, rn) != 1) {
    throw InvalidArgument("constacyclic length must be coprime to q");
  }
  return nt::multiplicative_order(qsq % rn, rn);
}

ConstacyclicContext make_constacyclic_context(std::uint32_t q, std::uint64_t n, std::uint32_t r) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  if (n == 0 || r == 0) throw InvalidArgument("constacyclic context needs n, r >= 1");
  const std::uint64_t s = evaluation_extension(q, n * r);
  return make_constacyclic_context(
      Field::shared(pp->p, static_cast<std::uint32_t>(2 * pp->e * s)), q, n, r);
}

ConstacyclicContext make_constacyclic_context(FieldPtr field, std::uint32_t q, std::uint64_t n,
                                              std::uint32_t r) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const Field& f = *field;
  if (f.characteristic() != pp->p || f.degree() % (2 * pp->e) != 0) {
    throw InvalidArgument(f.name() + " is not an extension of GF(" + std::to_string(q) + "^2)");
  }
  const std::uint64_t rn = n * r;
  if (f.group_order() % rn != 0) {
    throw InvalidArgument(f.name() + " has no primitive " + std::to_string(rn) +
                          "-th root of unity");
  }
  const std::uint64_t qsq = std::uint64_t{q} * q;
  if ((qsq - 1) % r != 0) {
    throw InvalidArgument("lambda of order " + std::to_string(r) + " does not lie in GF(q^2)");
  }
  ConstacyclicContext ctx;
  ctx.field = field;
  ctx.q = q;
  ctx.n = n;
  ctx.r = r;
  ctx.eta = f.exp(f.group_order() / rn);
  ctx.lambda = f.pow(ctx.eta, n);
  ctx.zeta = f.pow(ctx.eta, r);
  if (f.element_order(ctx.eta) != rn || f.element_order(ctx.lambda) != r ||
      f.element_order(ctx.zeta) != n || f.pow(ctx.lambda, qsq) != ctx.lambda) {
    throw VerificationFailure("constacyclic roots have the wrong orders in " + f.name());
  }
  return ctx;
}

ClassicalCode constacyclic_code(const ConstacyclicContext& ctx, const DefiningSet& z) {
  if (z.length() != ctx.n || z.order() != ctx.r) {
    throw InvalidArgument("defining set does not match the constacyclic context");
  }
  const Field& f = *ctx.field;
  Matrix h(ctx.field, z.size(), ctx.n);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Elem root = f.pow(ctx.eta, z.elements()[i]);
    Elem x = 1;
    for (std::uint64_t j = 0; j < ctx.n; ++j) {
      h.set(i, j, x);
      x = f.mul(x, root);
    }
  }
  ClassicalCode c{ctx.field, CodeKind::Constacyclic, ctx.n, ctx.n - z.size(),
                  z.empty() ? 1 : bch_design_distance(z), std::nullopt, z, std::nullopt,
                  ctx.lambda, ctx.r, std::move(h), z.annotation(), ctx.eta};
  return c;
}

ClassicalCode rs_parity_check(std::uint64_t qm, std::uint32_t r) {
  const auto pp = nt::prime_power(qm);
  if (!pp) throw InvalidArgument("RS field order " + std::to_string(qm) + " is not a prime power");
  const std::uint64_t n = qm - 1;
  if (r < 1 || r + 2 > n) {
    throw InvalidArgument("rs_parity_check: r = " + std::to_string(r) + " outside [1, n-2]");
  }
  auto field = Field::shared(pp->p, pp->e);
  const Field& f = *field;
  Matrix h(field, r - 1, n);
  for (std::uint64_t i = 1; i < r; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) h.set(i - 1, j, f.exp(i * j));
  }
  return ClassicalCode{field, CodeKind::ReedSolomon, n, n - r + 1, r, std::nullopt,
                       std::nullopt, r, 1, 1, std::move(h), "rs", 0};
}

ClassicalCode extended_rs_code(std::uint32_t q, std::uint32_t r, FieldPtr field) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  const std::uint64_t n = std::uint64_t{q} * q;
  if (r < 1 || r + 2 > n) {
    throw InvalidArgument("extended_rs_code: r = " + std::to_string(r) + " outside [1, q^2-2]");
  }
  if (!field) field = Field::shared(pp->p, 2 * pp->e);
  const Field& f = *field;
  if (f.order() != n) throw InvalidArgument("extended_rs_code: field must be GF(q^2)");
  std::vector<Elem> points(n);
  points[0] = 0;
  for (std::uint64_t j = 1; j < n; ++j) points[j] = f.exp(j - 1);
  Matrix h(field, r, n);
  for (std::uint64_t i = 0; i < r; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) h.set(i, j, f.pow(points[j], i));  // 0^0 = 1
  }
  return ClassicalCode{field, CodeKind::ExtendedReedSolomon, n, n - r, r + 1, std::nullopt,
                       std::nullopt, r, 1, 1, std::move(h), "ii", 0};
}

Matrix generator_matrix(const ClassicalCode& c) { return nullspace_basis(c.parity_check); }

Polynomial generator_polynomial(const ConstacyclicContext& ctx, const DefiningSet& z) {
  std::vector<Elem> roots;
  roots.reserve(z.size());
  for (auto e : z.elements()) roots.push_back(ctx.field->pow(ctx.eta, e));
  return poly_from_roots(ctx.field, roots);
}

Matrix generator_from_polynomial(const Polynomial& g, std::uint64_t n) {
  if (g.is_zero() || static_cast<std::uint64_t>(g.degree()) > n) {
    throw InvalidArgument("generator polynomial degree exceeds the length");
  }
  const std::uint64_t k = n - static_cast<std::uint64_t>(g.degree());
  Matrix m(g.field(), k, n);
  const auto& c = g.coefficients();
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) m.set(i, i + j, c[j]);
  }
  return m;
}

ClassicalCode build_family_code(const FamilySpec& spec, const Delta& delta, FieldPtr field) {
  if (spec.family() == Family::II) {
    if (!spec.admits_delta(delta)) {
      throw InvalidArgument("r = " + std::to_string(delta.hi) + " outside the range of " +
                            spec.label());
    }
    return extended_rs_code(spec.q(), static_cast<std::uint32_t>(delta.hi), std::move(field));
  }
  const auto ctx = field ? make_constacyclic_context(std::move(field), spec.q(), spec.length(),
                                                     spec.constacyclic_order())
                         : make_constacyclic_context(spec.q(), spec.length(),
                                                     spec.constacyclic_order());
  auto code = constacyclic_code(ctx, defining_set(spec, delta));
  code.family = std::string(to_string(spec.family()));
  return code;
}

std::vector<Elem> subfield_elements(const Field& field, std::uint64_t qsq) {
  const std::uint64_t big = field.group_order();
  if (qsq < 2 || big % (qsq - 1) != 0) {
    throw InvalidArgument(field.name() + " has no subfield of order " + std::to_string(qsq));
  }
  std::vector<Elem> out{0};
  const std::uint64_t step = big / (qsq - 1);
  for (std::uint64_t i = 0; i + 1 < qsq; ++i) out.push_back(field.exp(i * step));
  return out;
}

}  // namespace eaqmds
