#include "family.hpp"

#include <algorithm>

#include "errors.hpp"
#include "numtheory.hpp"

namespace eaqmds {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I: return "i";
    case Family::II: return "ii";
    case Family::III: return "iii";
    case Family::IV: return "iv";
    case Family::V: return "v";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "i" || s == "1") return Family::I;
  if (s == "ii" || s == "2") return Family::II;
  if (s == "iii" || s == "3") return Family::III;
  if (s == "iv" || s == "4") return Family::IV;
  if (s == "v" || s == "5") return Family::V;
  return std::nullopt;
}

namespace {

struct Window {
  std::int64_t lo_min, lo_max, hi_min, hi_max;
};

Window window_of(const FamilySpec& s) {
  const auto q = static_cast<std::int64_t>(s.q());
  const auto cap = static_cast<std::int64_t>(s.delta_cap());
  switch (s.family()) {
    case Family::I: return {0, cap, 0, cap};
    case Family::II: return {0, 0, q, 2 * q - 2};
    case Family::III: return {0, cap - 1, 0, cap - 1};
    case Family::IV: return {0, (q - 1) / 2 - 1, (q + 1) / 2, q - 1};
    case Family::V: {
      const auto t = static_cast<std::int64_t>(s.t());
      const std::int64_t lo = (t - 1) * (q + 1) / (2 * t);
      const std::int64_t hi = (t + 1) * (q + 1) / (2 * t) - 2;
      return {lo, hi, lo, hi};
    }
  }
  return {0, -1, 0, -1};
}

std::string why_inadmissible(Family family, std::uint32_t q, std::uint32_t t, std::uint64_t n) {
  const auto pp = nt::prime_power(q);
  if (!pp) return "q = " + std::to_string(q) + " is not a prime power";
  const std::uint64_t qsq = std::uint64_t{q} * q;
  switch (family) {
    case Family::I:
      if (n < 2 || (qsq + 1) % n != 0) return "length must divide q^2+1 and be at least 2";
      return {};
    case Family::II:
      return {};
    case Family::III:
      if (n < 2 || (qsq - 1) % n != 0) return "length must divide q^2-1";
      if (n / (q + 1) < 1) return "length must be at least q+1";
      return {};
    case Family::IV:
      if (pp->p == 2) return "family iv needs odd q";
      return {};
    case Family::V:
      if (pp->p == 2) return "family v needs odd q";
      if (t < 3 || t % 2 == 0) return "family v needs odd t >= 3";
      if ((q + 1) % t != 0) return "family v needs t | q+1";
      return {};
  }
  return "unknown family";
}

std::uint64_t default_length(Family family, std::uint32_t q, std::uint32_t t) {
  const std::uint64_t qsq = std::uint64_t{q} * q;
  switch (family) {
    case Family::I: return qsq + 1;
    case Family::II: return qsq;
    case Family::III: return qsq - 1;
    case Family::IV: return (qsq - 1) / 2;
    case Family::V: return t ? (qsq - 1) / t : 0;
  }
  return 0;
}

}  // namespace

bool FamilySpec::admissible(Family family, std::uint32_t q, std::uint32_t t, std::uint64_t n) {
  if (n == 0 || family == Family::II || family == Family::IV || family == Family::V) {
    n = default_length(family, q, t);
  }
  return why_inadmissible(family, q, t, n).empty();
}

FamilySpec FamilySpec::make(Family family, std::uint32_t q, std::uint32_t t, std::uint64_t n) {
  const bool custom_length = family == Family::I || family == Family::III;
  if (!custom_length && n != 0 && n != default_length(family, q, t)) {
    throw InvalidArgument("family " + std::string(to_string(family)) +
                          " has a fixed length; --n only applies to families i and iii");
  }
  if (n == 0 || !custom_length) n = default_length(family, q, t);
  if (auto why = why_inadmissible(family, q, t, n); !why.empty()) {
    throw InvalidArgument("family " + std::string(to_string(family)) + ": " + why);
  }
  std::uint32_t tt = 0;
  if (family == Family::IV) tt = 2;
  if (family == Family::V) tt = t;
  return FamilySpec(family, q, tt, n);
}

std::uint32_t FamilySpec::constacyclic_order() const {
  switch (family_) {
    case Family::I:
    case Family::III: return 1;
    case Family::II: return 0;
    case Family::IV: return 2;
    case Family::V: return t_;
  }
  return 0;
}

std::uint64_t FamilySpec::d_min() const {
  switch (family_) {
    case Family::I:
    case Family::III: return 2;
    case Family::II: return q_ + 1;
    case Family::IV: return (q_ + 1) / 2 + 2;
    case Family::V: return std::uint64_t{t_ - 1} * (q_ + 1) / t_ + 2;
  }
  return 0;
}

std::uint64_t FamilySpec::d_max() const {
  switch (family_) {
    case Family::I: return 2 * delta_cap() + 2;
    case Family::II: return 2 * std::uint64_t{q_} - 1;
    case Family::III: return 2 * delta_cap();
    case Family::IV: return (3 * std::uint64_t{q_} - 1) / 2;
    case Family::V: return std::uint64_t{t_ + 1} * (q_ + 1) / t_ - 2;
  }
  return 0;
}

bool FamilySpec::admits_distance(std::uint64_t d) const {
  if (d < d_min() || d > d_max()) return false;
  return family_ != Family::I || d % 2 == 0;
}

std::vector<std::uint64_t> FamilySpec::distances() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = d_min(); d <= d_max(); ++d) {
    if (admits_distance(d)) out.push_back(d);
  }
  return out;
}

std::int64_t FamilySpec::closed_form_k(std::uint64_t d) const {
  const auto n = static_cast<std::int64_t>(n_);
  const auto dd = static_cast<std::int64_t>(d);
  switch (family_) {
    case Family::I:
    case Family::II:
    case Family::III: return n - 2 * dd + 3;
    case Family::IV: return n - 2 * dd + 4;
    case Family::V: return n - 2 * dd + t_ + 2;
  }
  return 0;
}

std::uint64_t FamilySpec::closed_form_c() const {
  switch (family_) {
    case Family::IV: return 2;
    case Family::V: return t_;
    default: return 1;
  }
}

bool FamilySpec::admits_delta(const Delta& delta) const {
  const Window w = window_of(*this);
  switch (family_) {
    case Family::I:
      return delta.lo == delta.hi && delta.hi >= w.hi_min && delta.hi <= w.hi_max;
    case Family::II:
      return delta.lo == 0 && delta.hi >= w.hi_min && delta.hi <= w.hi_max;
    case Family::III:
      // symmetric window (even d) or one-short window (odd d)
      if (delta.lo == delta.hi) return delta.lo >= 0 && delta.lo <= w.lo_max;
      return delta.hi == delta.lo - 1 && delta.lo >= 1 && delta.lo <= w.lo_max;
    case Family::IV:
    case Family::V:
      return delta.lo >= w.lo_min && delta.lo <= w.lo_max && delta.hi >= w.hi_min &&
             delta.hi <= w.hi_max;
  }
  return false;
}

Delta FamilySpec::delta_for_distance(std::uint64_t d) const {
  if (!admits_distance(d)) {
    throw InvalidArgument("d = " + std::to_string(d) + " outside the admissible range of " +
                          label());
  }
  const auto dd = static_cast<std::int64_t>(d);
  switch (family_) {
    case Family::I: return {(dd - 2) / 2, (dd - 2) / 2};
    case Family::II: return {0, dd - 1};
    case Family::III:
      if (dd % 2 == 0) return {(dd - 2) / 2, (dd - 2) / 2};
      return {(dd - 1) / 2, (dd - 1) / 2 - 1};
    case Family::IV:
    case Family::V: {
      const Window w = window_of(*this);
      const std::int64_t span = dd - 2;
      const std::int64_t lo = std::min(w.lo_max, span - w.hi_min);
      return {lo, span - lo};
    }
  }
  return {};
}

std::string FamilySpec::label() const {
  std::string s = "family " + std::string(to_string(family_)) + " (q=" + std::to_string(q_);
  if (family_ == Family::V) s += ", t=" + std::to_string(t_);
  s += ", n=" + std::to_string(n_) + ")";
  return s;
}

}  // namespace eaqmds
