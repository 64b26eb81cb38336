#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eaqmds {

// The five EAQMDS constructions:
//   I    cyclic, n | q^2+1,        [[n, n-2d+3, d; 1]], d even
//   II   extended Reed-Solomon,    [[q^2, q^2-2d+3, d; 1]]
//   III  cyclic, n | q^2-1,        [[n, n-2d+3, d; 1]]
//   IV   negacyclic, (q^2-1)/2,    [[n, n-2d+4, d; 2]]
//   V    lambda-constacyclic, (q^2-1)/t, [[n, n-2d+t+2, d; t]]
enum class Family { I, II, III, IV, V };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

// Index window of a defining set: cosets C_{a(i)} for i in [-lo, hi], where
// a(i) is the family's anchor map. Family I uses lo = hi = delta (its cosets
// C_0..C_delta are symmetric); family II stores the Reed-Solomon r in hi.
struct Delta {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Delta&, const Delta&) = default;
};

class FamilySpec {
 public:
  // Validates q (and t, n) for the family. n = 0 selects the default length
  // (q^2+1 for I, q^2-1 for III); t is only read by family V.
  static FamilySpec make(Family family, std::uint32_t q, std::uint32_t t = 0,
                         std::uint64_t n = 0);
  static bool admissible(Family family, std::uint32_t q, std::uint32_t t = 0,
                         std::uint64_t n = 0);

  Family family() const { return family_; }
  std::uint32_t q() const { return q_; }
  std::uint64_t qsq() const { return std::uint64_t{q_} * q_; }
  // t for V, 2 for IV, 0 otherwise.
  std::uint32_t t() const { return t_; }
  std::uint64_t length() const { return n_; }
  // Constacyclic order (1 cyclic, 2 negacyclic, t); 0 for extended RS.
  std::uint32_t constacyclic_order() const;

  std::uint64_t d_min() const;
  std::uint64_t d_max() const;
  bool admits_distance(std::uint64_t d) const;
  std::vector<std::uint64_t> distances() const;

  // The theorem's parameters, used only as assertions against constructions.
  std::int64_t closed_form_k(std::uint64_t d) const;
  std::uint64_t closed_form_c() const;

  // Admissible window for the defining-set indices.
  bool admits_delta(const Delta& delta) const;
  // Deterministic choice of window for distance d.
  Delta delta_for_distance(std::uint64_t d) const;
  // floor(n / (q+1)) for the cyclic families.
  std::uint64_t delta_cap() const { return n_ / (q_ + 1); }

  std::string label() const;

 private:
  FamilySpec(Family f, std::uint32_t q, std::uint32_t t, std::uint64_t n)
      : family_(f), q_(q), t_(t), n_(n) {}

  Family family_;
  std::uint32_t q_;
  std::uint32_t t_;
  std::uint64_t n_;
};

}  // namespace eaqmds
