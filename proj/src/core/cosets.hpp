#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "family.hpp"

namespace eaqmds {

// Orbit of a residue under multiplication by q^2 modulo `modulus`.
struct CyclotomicCoset {
  std::uint64_t representative = 0;  // smallest member
  std::uint64_t modulus = 0;
  std::uint64_t multiplier = 0;
  std::vector<std::uint64_t> elements;  // sorted
};

CyclotomicCoset cyclotomic_coset(std::int64_t i, std::uint64_t modulus, std::uint64_t qsq);
// All cosets modulo `modulus`, ordered by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t modulus, std::uint64_t qsq);

// Exponent set Z of the roots of a constacyclic code's generator polynomial
// (roots eta^z, eta a primitive rn-th root of unity). Elements are canonical
// residues modulo rn, sorted.
class DefiningSet {
 public:
  DefiningSet(std::uint64_t n, std::uint32_t r, std::vector<std::uint64_t> elements,
              std::string annotation = {});

  std::uint64_t length() const { return n_; }
  std::uint32_t order() const { return r_; }
  std::uint64_t modulus() const { return n_ * r_; }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::uint64_t z) const;
  const std::string& annotation() const { return annotation_; }

  // Position of z in Omega = {1 + r i}: i = (z - 1) / r (z itself for r = 1).
  std::uint64_t omega_index(std::uint64_t z) const;
  // True iff Z is a union of whole q^2-cyclotomic cosets.
  bool closed_under(std::uint64_t qsq) const;

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

 private:
  std::uint64_t n_;
  std::uint32_t r_;
  std::vector<std::uint64_t> elements_;
  std::string annotation_;
};

// Union of the cosets C_i (i taken modulo rn, may be negative).
DefiningSet union_of_cosets(std::uint64_t n, std::uint32_t r, std::uint64_t qsq,
                            std::span<const std::int64_t> indices, std::string annotation = {});

// Coset index of the i-th step of a family's window (C_i for I/III,
// C_{2i-1} for IV, C_{1+t(A+i)} for V).
std::int64_t family_coset_index(const FamilySpec& spec, std::int64_t i);

// Defining set a family construction prescribes for the given window.
DefiningSet defining_set(const FamilySpec& spec, const Delta& delta);

// The two dual-containing halves of a family defining set, with the anchor
// coset removed: Z1 = indices [-lo, -1], Z2 = [1, hi] (I: Z1 = C_1..C_delta,
// Z2 empty).
struct DefiningSetSplit {
  DefiningSet anchor;
  DefiningSet lower;
  DefiningSet upper;
};
DefiningSetSplit split_defining_set(const FamilySpec& spec, const Delta& delta);

// {-q z mod rn : z in Z}
std::vector<std::uint64_t> minus_q_image(const DefiningSet& z, std::uint64_t q);
// A ∩ B^{-q}; both sets must share the modulus.
std::vector<std::uint64_t> intersect_minus_q(const DefiningSet& a, const DefiningSet& b,
                                             std::uint64_t q);
// Z ∩ Z^{-q} = ∅
bool is_hermitian_dual_containing(const DefiningSet& z, std::uint64_t q);

// Longest run of indices of Omega consecutive modulo n, plus one.
std::uint64_t bch_design_distance(const DefiningSet& z);

// Cosets partition Z_modulus; when modulus | q^2+1 additionally checks the
// {0}, {i, n-i}, {n/2} shape.
bool coset_partition_check(std::uint64_t modulus, std::uint64_t qsq);

}  // namespace eaqmds
