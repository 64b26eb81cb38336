#include "cosets.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "numtheory.hpp"

namespace eaqmds {

CyclotomicCoset cyclotomic_coset(std::int64_t i, std::uint64_t modulus, std::uint64_t qsq) {
  if (modulus == 0) throw InvalidArgument("cyclotomic_coset: modulus must be positive");
  const std::uint64_t start = nt::mod_floor(i, modulus);
  CyclotomicCoset c{start, modulus, qsq, {}};
  std::uint64_t x = start;
  do {
    c.elements.push_back(x);
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * qsq % modulus);
  } while (x != start && c.elements.size() <= modulus);
  std::sort(c.elements.begin(), c.elements.end());
  c.elements.erase(std::unique(c.elements.begin(), c.elements.end()), c.elements.end());
  c.representative = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint64_t modulus, std::uint64_t qsq) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(modulus, false);
  for (std::uint64_t i = 0; i < modulus; ++i) {
    if (seen[i]) continue;
    auto c = cyclotomic_coset(static_cast<std::int64_t>(i), modulus, qsq);
    for (auto e : c.elements) seen[e] = true;
    out.push_back(std::move(c));
  }
  return out;
}

DefiningSet::DefiningSet(std::uint64_t n, std::uint32_t r, std::vector<std::uint64_t> elements,
                         std::string annotation)
    : n_(n), r_(r), elements_(std::move(elements)), annotation_(std::move(annotation)) {
  if (n_ == 0 || r_ == 0) throw InvalidArgument("defining set: n and r must be positive");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (auto z : elements_) {
    if (z >= modulus()) throw InvalidArgument("defining set element outside Z_rn");
    if (r_ > 1 && z % r_ != 1 % r_) {
      throw InvalidArgument("defining set element " + std::to_string(z) +
                            " is not in Omega = {1 + r i}");
    }
  }
}

bool DefiningSet::contains(std::uint64_t z) const {
  return std::binary_search(elements_.begin(), elements_.end(), z);
}

std::uint64_t DefiningSet::omega_index(std::uint64_t z) const {
  return r_ == 1 ? z : (z - 1) / r_;
}

bool DefiningSet::closed_under(std::uint64_t qsq) const {
  for (auto z : elements_) {
    const auto next = static_cast<std::uint64_t>(static_cast<unsigned __int128>(z) * qsq %
                                                 modulus());
    if (!contains(next)) return false;
  }
  return true;
}

DefiningSet union_of_cosets(std::uint64_t n, std::uint32_t r, std::uint64_t qsq,
                            std::span<const std::int64_t> indices, std::string annotation) {
  std::set<std::uint64_t> all;
  for (auto i : indices) {
    const auto c = cyclotomic_coset(i, n * r, qsq);
    all.insert(c.elements.begin(), c.elements.end());
  }
  return DefiningSet(n, r, {all.begin(), all.end()}, std::move(annotation));
}

std::int64_t family_coset_index(const FamilySpec& spec, std::int64_t i) {
  switch (spec.family()) {
    case Family::I:
    case Family::III: return i;
    case Family::IV: return 2 * i - 1;
    case Family::V: {
      const auto q = static_cast<std::int64_t>(spec.q());
      const auto t = static_cast<std::int64_t>(spec.t());
      const std::int64_t num = (t - 1) * (q - 1) - 2;
      if (num % (2 * t) != 0) {
        throw InvalidArgument("family v anchor exponent is not integral for " + spec.label());
      }
      return 1 + t * (num / (2 * t) + i);
    }
    case Family::II: break;
  }
  throw InvalidArgument("family ii has no defining set");
}

namespace {

std::vector<std::int64_t> coset_indices(const FamilySpec& spec, std::int64_t from,
                                        std::int64_t to) {
  std::vector<std::int64_t> idx;
  for (std::int64_t i = from; i <= to; ++i) idx.push_back(family_coset_index(spec, i));
  return idx;
}

std::string annotate(const FamilySpec& spec, const Delta& delta, const char* part) {
  return std::string(to_string(spec.family())) + part + " lo=" + std::to_string(delta.lo) +
         " hi=" + std::to_string(delta.hi);
}

}  // namespace

DefiningSet defining_set(const FamilySpec& spec, const Delta& delta) {
  if (spec.family() == Family::II) throw InvalidArgument("family ii has no defining set");
  if (!spec.admits_delta(delta)) {
    throw InvalidArgument("defining_set: window [-" + std::to_string(delta.lo) + ", " +
                          std::to_string(delta.hi) + "] outside the admissible range of " +
                          spec.label());
  }
  const std::uint32_t r = spec.constacyclic_order();
  // Family I takes C_0..C_delta; each C_i = {i, -i} already covers -i.
  const std::int64_t from = spec.family() == Family::I ? 0 : -delta.lo;
  return union_of_cosets(spec.length(), r, spec.qsq(), coset_indices(spec, from, delta.hi),
                         annotate(spec, delta, ""));
}

DefiningSetSplit split_defining_set(const FamilySpec& spec, const Delta& delta) {
  if (spec.family() == Family::II) throw InvalidArgument("family ii has no defining set");
  const std::uint32_t r = spec.constacyclic_order();
  const auto n = spec.length();
  const auto qsq = spec.qsq();
  const std::vector<std::int64_t> anchor{family_coset_index(spec, 0)};
  if (spec.family() == Family::I) {
    return {union_of_cosets(n, r, qsq, anchor, annotate(spec, delta, " anchor")),
            union_of_cosets(n, r, qsq, coset_indices(spec, 1, delta.hi),
                            annotate(spec, delta, " Z1")),
            DefiningSet(n, r, {}, annotate(spec, delta, " Z2"))};
  }
  return {union_of_cosets(n, r, qsq, anchor, annotate(spec, delta, " anchor")),
          union_of_cosets(n, r, qsq, coset_indices(spec, -delta.lo, -1),
                          annotate(spec, delta, " Z1")),
          union_of_cosets(n, r, qsq, coset_indices(spec, 1, delta.hi),
                          annotate(spec, delta, " Z2"))};
}

std::vector<std::uint64_t> minus_q_image(const DefiningSet& z, std::uint64_t q) {
  const std::uint64_t mod = z.modulus();
  std::vector<std::uint64_t> out;
  out.reserve(z.size());
  for (auto e : z.elements()) {
    const auto qz = static_cast<std::uint64_t>(static_cast<unsigned __int128>(q % mod) * e % mod);
    out.push_back((mod - qz) % mod);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> intersect_minus_q(const DefiningSet& a, const DefiningSet& b,
                                             std::uint64_t q) {
  if (a.modulus() != b.modulus()) {
    throw InvalidArgument("intersect_minus_q: defining sets have different moduli");
  }
  const auto img = minus_q_image(b, q);
  std::vector<std::uint64_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), img.begin(), img.end(),
                        std::back_inserter(out));
  return out;
}

bool is_hermitian_dual_containing(const DefiningSet& z, std::uint64_t q) {
  return intersect_minus_q(z, z, q).empty();
}

std::uint64_t bch_design_distance(const DefiningSet& z) {
  if (z.empty()) throw InvalidArgument("bch_design_distance: empty defining set");
  const std::uint64_t n = z.length();
  std::vector<bool> hit(n, false);
  for (auto e : z.elements()) hit[z.omega_index(e)] = true;
  if (z.size() >= n) return n + 1;
  // start scanning just after a gap so circular runs are counted once
  std::uint64_t start = 0;
  while (hit[start]) ++start;
  std::uint64_t best = 0;
  std::uint64_t run = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (hit[(start + k) % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

bool coset_partition_check(std::uint64_t modulus, std::uint64_t qsq) {
  if (modulus == 0) return false;
  const auto cosets = cyclotomic_cosets(modulus, qsq);
  std::vector<int> count(modulus, 0);
  for (const auto& c : cosets) {
    for (auto e : c.elements) ++count[e];
    // closure under the multiplier
    for (auto e : c.elements) {
      const auto next = static_cast<std::uint64_t>(static_cast<unsigned __int128>(e) * qsq %
                                                   modulus);
      if (!std::binary_search(c.elements.begin(), c.elements.end(), next)) return false;
    }
  }
  for (auto k : count) {
    if (k != 1) return false;
  }
  if ((qsq + 1) % modulus != 0) return true;
  const std::uint64_t s = modulus / 2;
  for (const auto& c : cosets) {
    const std::uint64_t i = c.representative;
    std::vector<std::uint64_t> expect;
    if (i == 0 || (modulus % 2 == 0 && i == s)) {
      expect = {i};
    } else {
      expect = {i, modulus - i};
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    }
    if (c.elements != expect) return false;
  }
  return true;
}

}  // namespace eaqmds
