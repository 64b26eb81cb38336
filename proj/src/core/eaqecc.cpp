#include "eaqecc.hpp"

#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace eaqmds {

std::uint64_t ebit_count(const Matrix& h, std::uint64_t q) {
  if (h.rows() == 0) return 0;
  return matrix_rank(mat_mul(h, hermitian_adjoint(h, q)));
}

std::uint64_t ebit_count_symplectic(const Matrix& hx, const Matrix& hz, std::uint64_t q) {
  if (hx.field().get() != hz.field().get()) {
    throw InvalidArgument("ebit_count_symplectic: HX and HZ live in different fields");
  }
  if (hx.field()->order() != q) {
    throw InvalidArgument("ebit_count_symplectic: check matrices must be over GF(q)");
  }
  if (hx.rows() != hz.rows() || hx.cols() != hz.cols()) {
    throw InvalidArgument("ebit_count_symplectic: HX and HZ shapes differ");
  }
  const Field& f = *hx.field();
  const Matrix a = mat_mul(hx, hz.transpose());
  const Matrix b = mat_mul(hz, hx.transpose());
  Matrix diff(hx.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) diff.set(i, j, f.sub(a.at(i, j), b.at(i, j)));
  }
  const std::size_t rank = matrix_rank(diff);
  if (rank % 2 != 0) {
    throw InvalidArgument("ebit_count_symplectic: symplectic form has odd rank " +
                          std::to_string(rank));
  }
  return rank / 2;
}

EaqeccParams derive_eaqecc(const ClassicalCode& code, std::uint64_t q) {
  EaqeccParams p;
  p.q = static_cast<std::uint32_t>(q);
  p.n = code.n;
  p.c = ebit_count(code.parity_check, q);
  p.k = 2 * static_cast<std::int64_t>(code.k) - static_cast<std::int64_t>(code.n) +
        static_cast<std::int64_t>(p.c);
  if (p.k < 0) {
    throw InvalidArgument("derive_eaqecc: negative quantum dimension " + std::to_string(p.k));
  }
  p.d = code.d_design;
  p.classical_n = code.n;
  p.classical_k = code.k;
  p.classical_d = code.d_design;
  p.defining_set = code.defining_set;
  p.rs_r = code.rs_r;
  p.field = code.field->descriptor();
  p.saturated = ea_singleton_check(p);
  return p;
}

bool ea_singleton_check(const EaqeccParams& p) {
  const auto n = static_cast<std::int64_t>(p.n);
  const auto c = static_cast<std::int64_t>(p.c);
  const auto d = static_cast<std::int64_t>(p.d);
  if (p.n > 0 && p.c > p.n - 1) {
    throw VerificationFailure("ebit count " + std::to_string(p.c) + " exceeds n - 1");
  }
  const std::int64_t lhs = n + c - p.k;
  const std::int64_t rhs = 2 * (d - 1);
  if (lhs < rhs) {
    std::ostringstream os;
    os << "EA-Singleton bound violated by [[" << p.n << "," << p.k << "," << p.d << ";" << p.c
       << "]]: n + c - k = " << lhs << " < 2(d - 1) = " << rhs;
    throw VerificationFailure(os.str());
  }
  return lhs == rhs;
}

EaqeccParams construct_member(const FamilySpec& spec, std::uint64_t d, FieldPtr field) {
  const Delta delta = spec.delta_for_distance(d);
  const ClassicalCode code = build_family_code(spec, delta, std::move(field));
  EaqeccParams p = derive_eaqecc(code, spec.q());
  p.family = spec.family();
  p.t = spec.t();
  p.delta = delta;

  std::ostringstream err;
  if (code.d_design != d) err << " design distance " << code.d_design << " != " << d << ';';
  if (code.d_design != code.n - code.k + 1) err << " classical code is not MDS by design;";
  if (p.n != spec.length()) err << " length " << p.n << " != " << spec.length() << ';';
  if (p.k != spec.closed_form_k(d)) err << " k " << p.k << " != " << spec.closed_form_k(d) << ';';
  if (p.c != spec.closed_form_c()) err << " c " << p.c << " != " << spec.closed_form_c() << ';';
  if (!p.saturated) err << " EA-Singleton bound not met with equality;";
  if (!err.str().empty()) {
    throw VerificationFailure(spec.label() + ", d = " + std::to_string(d) + ":" + err.str());
  }
  return p;
}

std::vector<EaqeccParams> enumerate_family(const FamilySpec& spec, unsigned jobs) {
  const auto ds = spec.distances();
  std::vector<EaqeccParams> out(ds.size());
  parallel_for(ds.size(), jobs, [&](std::size_t i) { out[i] = construct_member(spec, ds[i]); });
  return out;
}

}  // namespace eaqmds
