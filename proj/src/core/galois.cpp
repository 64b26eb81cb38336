#include "galois.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "errors.hpp"
#include "numtheory.hpp"

namespace eaqmds {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = f * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t v, std::uint32_t p, std::size_t len) {
  Poly c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return c;
}

}  // namespace

bool Field::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    const std::uint64_t count = nt::ipow_sat(p, deg);
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly d = poly_from_index(v, p, deg);
      d.push_back(1);
      if (poly_rem(f, d, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> Field::irreducible_polynomials(
    std::uint32_t p, std::uint32_t m, std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t count = nt::ipow_sat(p, m);
  for (std::uint64_t v = 0; v < count && out.size() < limit; ++v) {
    Poly f = poly_from_index(v, p, m);
    f.push_back(1);
    if (is_irreducible(p, f)) out.push_back(std::move(f));
  }
  return out;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t m, Options opts) {
  if (!nt::is_prime(p)) {
    throw InvalidArgument("build_field: characteristic " + std::to_string(p) + " is not prime");
  }
  if (m < 1) throw InvalidArgument("build_field: extension degree must be >= 1");
  const std::uint64_t order = nt::ipow_sat(p, m);
  if (order > opts.max_order) {
    throw InvalidArgument("build_field: GF(" + std::to_string(p) + "^" + std::to_string(m) +
                          ") exceeds the size ceiling " + std::to_string(opts.max_order));
  }
  auto moduli = irreducible_polynomials(p, m, 1);
  return with_modulus(p, std::move(moduli.front()), opts);
}

std::shared_ptr<const Field> Field::with_modulus(std::uint32_t p,
                                                 std::vector<std::uint32_t> modulus,
                                                 Options opts) {
  if (!nt::is_prime(p)) {
    throw InvalidArgument("build_field: characteristic " + std::to_string(p) + " is not prime");
  }
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw InvalidArgument("build_field: modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("build_field: modulus coefficient out of range");
  }
  const std::uint64_t order = nt::ipow_sat(p, modulus.size() - 1);
  if (order > opts.max_order) {
    throw InvalidArgument("build_field: field order " + std::to_string(order) +
                          " exceeds the size ceiling " + std::to_string(opts.max_order));
  }
  if (!is_irreducible(p, modulus)) {
    throw InvalidArgument("build_field: modulus is reducible");
  }
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus), opts));
}

std::shared_ptr<const Field> Field::shared(std::uint32_t p, std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot = create(p, m);
  return slot;
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus, Options opts)
    : p_(p),
      m_(static_cast<std::uint32_t>(modulus.size() - 1)),
      order_(static_cast<std::uint32_t>(nt::ipow_sat(p, modulus.size() - 1))),
      modulus_(std::move(modulus)) {
  digit_weight_.resize(m_);
  std::uint32_t w = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    digit_weight_[i] = w;
    w *= p_;
  }
  group_factors_ = nt::prime_factors(order_ - 1);

  for (Elem g = 1; g < order_; ++g) {
    bool full = true;
    for (auto l : group_factors_) {
      if (poly_pow(g, (order_ - 1) / l) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_ = g;
      break;
    }
  }

  if (!opts.use_tables) return;
  const std::uint32_t n = order_ - 1;
  exp_.resize(n);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = poly_mul(x, primitive_);
  }
  zech_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Elem s = poly_add(1, exp_[i]);
    zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }
  log_minus_one_ = p_ == 2 ? 0 : static_cast<std::int64_t>(n / 2);
}

FieldDescriptor Field::descriptor() const { return {p_, m_, modulus_, primitive_}; }

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

void Field::check(Elem a) const {
  if (a >= order_) throw InvalidArgument("element " + std::to_string(a) + " not in " + name());
}

Elem Field::from_int(std::int64_t v) const {
  return static_cast<Elem>(nt::mod_floor(v, p_));
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  check(a);
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > m_) throw InvalidArgument("from_coefficients: too many coefficients");
  Elem v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw InvalidArgument("from_coefficients: coefficient out of range");
    v += c[i] * digit_weight_[i];
  }
  return v;
}

Elem Field::poly_add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_ && (a | b); ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * digit_weight_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::poly_neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_ && a; ++i) {
    const std::uint32_t d = a % p_;
    r += ((p_ - d) % p_) * digit_weight_[i];
    a /= p_;
  }
  return r;
}

Elem Field::poly_mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (!ca[i]) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
  }
  // modulus is monic: x^m = -sum_{i<m} modulus[i] x^i
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t f = prod[k];
    if (!f) continue;
    prod[k] = 0;
    const std::size_t shift = k - m_;
    for (std::uint32_t i = 0; i < m_; ++i) {
      prod[shift + i] = (prod[shift + i] + f * (p_ - modulus_[i])) % p_;
    }
  }
  Elem r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) r += static_cast<Elem>(prod[i]) * digit_weight_[i];
  return r;
}

Elem Field::poly_pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = poly_mul(r, b);
    b = poly_mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!has_tables()) return poly_add(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = order_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t diff = lb >= la ? lb - la : lb + n - la;
  const std::int64_t z = zech_[diff];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint64_t>(z)) % n];
}

Elem Field::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  if (!has_tables()) return poly_neg(a);
  const std::uint32_t n = order_ - 1;
  return exp_[(log_[a] + static_cast<std::uint64_t>(log_minus_one_)) % n];
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!has_tables()) return poly_mul(a, b);
  const std::uint32_t n = order_ - 1;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= n) s -= n;
  return exp_[s];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("division by zero in " + name());
  if (!has_tables()) return poly_pow(a, order_ - 2);
  const std::uint32_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!has_tables()) return poly_pow(a, e);
  const std::uint64_t n = order_ - 1;
  return exp_[(log_[a] * (e % n)) % n];
}

Elem Field::exp(std::uint64_t i) const {
  const std::uint64_t n = order_ - 1;
  if (!has_tables()) return poly_pow(primitive_, i % n);
  return exp_[i % n];
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0) throw InvalidArgument("log of zero");
  check(a);
  if (has_tables()) return log_[a];
  Elem x = 1;
  for (std::uint64_t i = 0; i + 1 < order_; ++i) {
    if (x == a) return i;
    x = poly_mul(x, primitive_);
  }
  throw VerificationFailure("log: element not reached by primitive powers");
}

bool Field::admits_frobenius(std::uint64_t q) const {
  const auto pp = nt::prime_power(q);
  return pp && pp->p == p_ && m_ % pp->e == 0;
}

Elem Field::frobenius(Elem a, std::uint64_t q) const {
  if (!admits_frobenius(q)) {
    throw InvalidArgument("conjugate: " + name() + " is not an extension of GF(" +
                          std::to_string(q) + ")");
  }
  return pow(a, q);
}

std::uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw InvalidArgument("element_order: zero has no multiplicative order");
  check(a);
  std::uint64_t e = order_ - 1;
  for (auto l : group_factors_) {
    while (e % l == 0 && pow(a, e / l) == 1) e /= l;
  }
  return e;
}

Element Field::element(Elem v) const {
  check(v);
  return Element(this, v);
}

Element::Element(const Field* field, Elem value) : field_(field), value_(value) {}

namespace {
const Field& same_field(const Element& a, const Element& b) {
  if (&a.field() != &b.field()) {
    throw InvalidArgument("arithmetic on elements of different field contexts");
  }
  return a.field();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  const auto& f = same_field(a, b);
  return {&f, f.add(a.value_, b.value_)};
}
Element operator-(const Element& a, const Element& b) {
  const auto& f = same_field(a, b);
  return {&f, f.sub(a.value_, b.value_)};
}
Element operator*(const Element& a, const Element& b) {
  const auto& f = same_field(a, b);
  return {&f, f.mul(a.value_, b.value_)};
}
Element operator/(const Element& a, const Element& b) {
  const auto& f = same_field(a, b);
  return {&f, f.div(a.value_, b.value_)};
}
Element Element::operator-() const { return {field_, field_->neg(value_)}; }
Element Element::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
bool operator==(const Element& a, const Element& b) {
  return &a.field() == &b.field() && a.value_ == b.value_;
}

Element conjugate(const Element& a, std::uint64_t q) {
  return a.field().element(a.field().frobenius(a.value(), q));
}

std::uint64_t element_order(const Element& a) { return a.field().element_order(a.value()); }

}  // namespace eaqmds
