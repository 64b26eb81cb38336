#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eaqmds {

// Raw element encoding: the coefficient vector of the residue polynomial,
// read as a base-p integer (coefficient of x^i is digit i). 0 and 1 are the
// field zero and one; the encoding is canonical so equality is integer
// equality.
using Elem = std::uint32_t;

struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;  // ascending degree, monic, size m + 1
  Elem primitive = 0;
};

class Element;

// GF(p^m) with a fixed irreducible modulus and primitive element.
//
// Two arithmetic backends share one contract: discrete-log/Zech tables
// (default) and direct polynomial arithmetic modulo the modulus. Contexts
// are immutable after construction and safe to share between threads.
class Field {
 public:
  struct Options {
    std::uint64_t max_order = std::uint64_t{1} << 20;
    bool use_tables = true;
  };

  // Lexicographically smallest monic irreducible modulus of degree m.
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t m,
                                             Options opts);
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t m) {
    return create(p, m, Options{});
  }
  // Caller-chosen modulus (ascending coefficients, monic). Irreducibility is
  // verified.
  static std::shared_ptr<const Field> with_modulus(
      std::uint32_t p, std::vector<std::uint32_t> modulus, Options opts);
  static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus) {
    return with_modulus(p, std::move(modulus), Options{});
  }
  // Process-wide cache of create(p, m) with default options.
  static std::shared_ptr<const Field> shared(std::uint32_t p, std::uint32_t m);

  // Monic irreducible polynomials of degree m over GF(p), in the same order
  // create() searches them. Stops after `limit` hits.
  static std::vector<std::vector<std::uint32_t>> irreducible_polynomials(
      std::uint32_t p, std::uint32_t m, std::size_t limit);
  static bool is_irreducible(std::uint32_t p,
                             const std::vector<std::uint32_t>& poly);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t group_order() const { return order_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }
  bool has_tables() const { return !exp_.empty(); }
  FieldDescriptor descriptor() const;

  bool contains(Elem a) const { return a < order_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Image of the integer v under Z -> GF(p) -> this field.
  Elem from_int(std::int64_t v) const;

  // Unchecked: operands must satisfy contains().
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // primitive^i
  Elem exp(std::uint64_t i) const;
  // Discrete log base primitive(); a must be nonzero.
  std::uint64_t log(Elem a) const;

  // a^q. q must be a power of p whose exponent divides m.
  Elem frobenius(Elem a, std::uint64_t q) const;
  // Smallest e >= 1 with a^e = 1.
  std::uint64_t element_order(Elem a) const;
  // True iff q = p^e with e | m.
  bool admits_frobenius(std::uint64_t q) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t>& c) const;

  Element element(Elem v) const;

  std::string name() const;

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus, Options opts);

  Elem poly_add(Elem a, Elem b) const;
  Elem poly_neg(Elem a) const;
  Elem poly_mul(Elem a, Elem b) const;
  Elem poly_pow(Elem a, std::uint64_t e) const;
  void check(Elem a) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
  std::vector<std::uint64_t> group_factors_;
  Elem primitive_ = 0;

  // Populated only with use_tables.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;  // log(1 + g^i), -1 when 1 + g^i = 0
  std::int64_t log_minus_one_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

// An element bound to its field. Operations across different fields throw
// InvalidArgument; the field must outlive the element.
class Element {
 public:
  Element(const Field* field, Elem value);

  const Field& field() const { return *field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element operator-() const;
  Element pow(std::uint64_t e) const;
  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field* field_;
  Elem value_;
};

// a^q, the conjugation used by the Hermitian inner product.
Element conjugate(const Element& a, std::uint64_t q);
std::uint64_t element_order(const Element& a);

}  // namespace eaqmds
