#include "eaqmds/eaqmds.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "../core/eaqecc.hpp"
#include "../core/errors.hpp"
#include "../core/numtheory.hpp"
#include "../core/report.hpp"
#include "../core/verify.hpp"

struct eaqmds_field {
  eaqmds::FieldPtr field;
};

struct eaqmds_records {
  std::vector<eaqmds::EaqeccParams> records;
};

struct eaqmds_report {
  eaqmds::SweepReport report;
};

namespace {

thread_local std::string g_last_error;

eaqmds_status fail(eaqmds_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <class Fn>
eaqmds_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const eaqmds::InvalidArgument& e) {
    return fail(EAQMDS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const eaqmds::BudgetExceeded& e) {
    return fail(EAQMDS_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const eaqmds::VerificationFailure& e) {
    return fail(EAQMDS_ERR_VERIFICATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EAQMDS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EAQMDS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EAQMDS_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

eaqmds::FamilySpec spec_from(const eaqmds_family_request* req) {
  if (!req || !req->family) throw eaqmds::InvalidArgument("family request is null");
  const auto fam = eaqmds::parse_family(req->family);
  if (!fam) throw eaqmds::InvalidArgument(std::string("unknown family '") + req->family + "'");
  return eaqmds::FamilySpec::make(*fam, req->q, req->t, req->n);
}

#define EAQMDS_REQUIRE(cond, msg) \
  do {                            \
    if (!(cond)) return fail(EAQMDS_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) return fallback;
  return x;
}

}  // namespace

extern "C" {

const char* eaqmds_version(void) { return "1.0.0"; }

const char* eaqmds_last_error(void) { return g_last_error.c_str(); }

void eaqmds_string_free(char* s) { std::free(s); }

int eaqmds_is_prime_power(uint64_t q) { return eaqmds::nt::prime_power(q).has_value() ? 1 : 0; }

eaqmds_status eaqmds_field_create(uint32_t p, uint32_t m, eaqmds_field** out) {
  EAQMDS_REQUIRE(out, "out is null");
  return guarded([&] {
    *out = new eaqmds_field{eaqmds::Field::create(p, m)};
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_field_create_with_modulus(uint32_t p, const uint32_t* modulus, size_t len,
                                               eaqmds_field** out) {
  EAQMDS_REQUIRE(out, "out is null");
  EAQMDS_REQUIRE(modulus && len >= 2, "modulus must have degree at least 1");
  return guarded([&] {
    std::vector<std::uint32_t> poly(modulus, modulus + len);
    *out = new eaqmds_field{eaqmds::Field::with_modulus(p, std::move(poly))};
    return EAQMDS_OK;
  });
}

void eaqmds_field_destroy(eaqmds_field* f) { delete f; }

uint32_t eaqmds_field_order(const eaqmds_field* f) { return f ? f->field->order() : 0; }

uint32_t eaqmds_field_primitive(const eaqmds_field* f) { return f ? f->field->primitive() : 0; }

eaqmds_status eaqmds_field_apply(const eaqmds_field* f, eaqmds_field_op op, uint32_t a,
                                 uint32_t b, uint32_t* out) {
  EAQMDS_REQUIRE(f && out, "null argument");
  EAQMDS_REQUIRE(f->field->contains(a) && f->field->contains(b), "element outside the field");
  return guarded([&] {
    const auto& F = *f->field;
    switch (op) {
      case EAQMDS_FIELD_ADD: *out = F.add(a, b); break;
      case EAQMDS_FIELD_SUB: *out = F.sub(a, b); break;
      case EAQMDS_FIELD_MUL: *out = F.mul(a, b); break;
      case EAQMDS_FIELD_DIV: *out = F.div(a, b); break;
      default: return fail(EAQMDS_ERR_INVALID_ARGUMENT, "unknown field operation");
    }
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_field_conjugate(const eaqmds_field* f, uint32_t a, uint64_t q,
                                     uint32_t* out) {
  EAQMDS_REQUIRE(f && out, "null argument");
  EAQMDS_REQUIRE(f->field->contains(a), "element outside the field");
  return guarded([&] {
    *out = f->field->frobenius(a, q);
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_field_element_order(const eaqmds_field* f, uint32_t a, uint64_t* out) {
  EAQMDS_REQUIRE(f && out, "null argument");
  EAQMDS_REQUIRE(f->field->contains(a), "element outside the field");
  return guarded([&] {
    *out = f->field->element_order(a);
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_field_descriptor_json(const eaqmds_field* f, char** out) {
  EAQMDS_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = dup_string(eaqmds::to_json(f->field->descriptor()).dump());
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_enumerate(const eaqmds_family_request* req, eaqmds_records** out) {
  EAQMDS_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto spec = spec_from(req);
    auto recs = eaqmds::enumerate_family(spec, req->jobs);
    // enumerate_family already asserts saturation; re-check what leaves here.
    for (const auto& r : recs) {
      if (!eaqmds::ea_singleton_check(r)) {
        throw eaqmds::VerificationFailure("record " + eaqmds::format_params(r) +
                                          " does not meet the EA-Singleton bound with equality");
      }
    }
    *out = new eaqmds_records{std::move(recs)};
    return EAQMDS_OK;
  });
}

size_t eaqmds_records_count(const eaqmds_records* r) { return r ? r->records.size() : 0; }

eaqmds_status eaqmds_records_get(const eaqmds_records* r, size_t index, eaqmds_record* out) {
  EAQMDS_REQUIRE(r && out, "null argument");
  EAQMDS_REQUIRE(index < r->records.size(), "record index out of range");
  const auto& p = r->records[index];
  *out = eaqmds_record{};
  const std::string fam = p.family ? std::string(eaqmds::to_string(*p.family)) : "";
  std::memcpy(out->family, fam.data(), std::min(fam.size(), sizeof(out->family) - 1));
  out->q = p.q;
  out->t = p.t;
  out->n = p.n;
  out->k = p.k;
  out->d = p.d;
  out->c = p.c;
  out->classical_n = p.classical_n;
  out->classical_k = p.classical_k;
  out->classical_d = p.classical_d;
  out->saturated = p.saturated ? 1 : 0;
  return EAQMDS_OK;
}

eaqmds_status eaqmds_records_serialize(const eaqmds_records* r, eaqmds_format fmt, char** out) {
  EAQMDS_REQUIRE(r && out, "null argument");
  return guarded([&] {
    switch (fmt) {
      case EAQMDS_FORMAT_JSON: *out = dup_string(eaqmds::records_to_json(r->records)); break;
      case EAQMDS_FORMAT_CSV: *out = dup_string(eaqmds::records_to_csv(r->records)); break;
      case EAQMDS_FORMAT_MARKDOWN:
        *out = dup_string(eaqmds::records_to_markdown(r->records));
        break;
      default: return fail(EAQMDS_ERR_INVALID_ARGUMENT, "unknown format");
    }
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_records_append(eaqmds_records* dst, const eaqmds_records* src) {
  EAQMDS_REQUIRE(dst && src, "null argument");
  return guarded([&] {
    dst->records.insert(dst->records.end(), src->records.begin(), src->records.end());
    return EAQMDS_OK;
  });
}

void eaqmds_records_destroy(eaqmds_records* r) { delete r; }

eaqmds_status eaqmds_verify_lemma(const char* lemma, const uint32_t* qs, size_t nq,
                                  const uint32_t* ts, size_t nt, unsigned jobs,
                                  eaqmds_report** out) {
  EAQMDS_REQUIRE(lemma && out, "null argument");
  EAQMDS_REQUIRE(qs || nq == 0, "q list is null");
  EAQMDS_REQUIRE(ts || nt == 0, "t list is null");
  return guarded([&] {
    const auto l = eaqmds::parse_lemma(lemma);
    if (!l) return fail(EAQMDS_ERR_INVALID_ARGUMENT, std::string("unknown lemma '") + lemma + "'");
    std::span<const std::uint32_t> q_list(qs, nq);
    std::span<const std::uint32_t> t_list(ts, nt);
    *out = new eaqmds_report{eaqmds::run_lemma_sweep(*l, q_list, t_list, jobs)};
    return EAQMDS_OK;
  });
}

int eaqmds_report_passed(const eaqmds_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t eaqmds_report_instance_count(const eaqmds_report* r) {
  return r ? r->report.instances.size() : 0;
}

size_t eaqmds_report_failure_count(const eaqmds_report* r) {
  return r ? r->report.failures.size() : 0;
}

double eaqmds_report_elapsed_ms(const eaqmds_report* r) { return r ? r->report.elapsed_ms : 0; }

eaqmds_status eaqmds_report_json(const eaqmds_report* r, int include_timing, char** out) {
  EAQMDS_REQUIRE(r && out, "null argument");
  return guarded([&] {
    *out = dup_string(eaqmds::to_json(r->report, include_timing != 0).dump(2) + "\n");
    return EAQMDS_OK;
  });
}

eaqmds_status eaqmds_report_text(const eaqmds_report* r, char** out) {
  EAQMDS_REQUIRE(r && out, "null argument");
  return guarded([&] {
    *out = dup_string(eaqmds::report_to_text(r->report));
    return EAQMDS_OK;
  });
}

void eaqmds_report_destroy(eaqmds_report* r) { delete r; }

eaqmds_status eaqmds_table(uint32_t q, uint32_t t, unsigned jobs, eaqmds_format fmt, char** out) {
  EAQMDS_REQUIRE(out, "out is null");
  return guarded([&] {
    if (!eaqmds::nt::prime_power(q)) {
      return fail(EAQMDS_ERR_INVALID_ARGUMENT, std::to_string(q) + " is not a prime power");
    }
    const auto rows = eaqmds::build_table(q, t, jobs);
    switch (fmt) {
      case EAQMDS_FORMAT_JSON: *out = dup_string(eaqmds::table_to_json(rows).dump(2) + "\n"); break;
      case EAQMDS_FORMAT_MARKDOWN: *out = dup_string(eaqmds::table_to_markdown(rows)); break;
      default: return fail(EAQMDS_ERR_INVALID_ARGUMENT, "table supports json and md only");
    }
    return EAQMDS_OK;
  });
}

eaqmds_budget eaqmds_default_budget(void) {
  const eaqmds::OracleBudget def;
  eaqmds_budget b;
  b.max_codewords = env_or("EAQMDS_MAX_CODEWORDS", def.max_codewords);
  b.max_minors = env_or("EAQMDS_MAX_MINORS", def.max_minors);
  b.time_limit_ms = 0;
  return b;
}

eaqmds_status eaqmds_distance(const eaqmds_family_request* req, uint64_t d,
                              const eaqmds_budget* budget, char** out) {
  EAQMDS_REQUIRE(out, "out is null");
  return guarded([&] {
    const auto spec = spec_from(req);
    if (!spec.admits_distance(d)) {
      return fail(EAQMDS_ERR_INVALID_ARGUMENT,
                  "d = " + std::to_string(d) + " is not admissible for " + spec.label());
    }
    eaqmds::OracleBudget ob;
    const eaqmds_budget b = budget ? *budget : eaqmds_default_budget();
    ob.max_codewords = b.max_codewords;
    ob.max_minors = b.max_minors;
    ob.time_limit = std::chrono::milliseconds(b.time_limit_ms);

    const auto params = eaqmds::construct_member(spec, d);
    const auto code = eaqmds::build_family_code(spec, params.delta);
    eaqmds::DistanceCertificate cert;
    std::string note;
    try {
      cert = eaqmds::certify_distance(code, spec.q(), ob);
    } catch (const eaqmds::BudgetExceeded& e) {
      cert = eaqmds::DistanceCertificate{code.n, code.k, code.d_design,
                                         eaqmds::DistanceRoute::DesignOnly, {}, {}};
      note = e.what();
    }

    nlohmann::ordered_json j;
    j["record"] = eaqmds::to_json(params);
    j["certificate"] = eaqmds::to_json(cert);
    std::string status;
    if (cert.route == eaqmds::DistanceRoute::DesignOnly) {
      status = "design-distance only";
    } else if (cert.certified()) {
      status = "certified";
    } else {
      status = "refuted";
    }
    j["status"] = status;
    if (!note.empty()) j["note"] = note;
    *out = dup_string(j.dump(2) + "\n");
    if (status == "refuted") {
      return fail(EAQMDS_ERR_VERIFICATION, "oracle contradicts the design distance of " +
                                               eaqmds::format_params(params));
    }
    return EAQMDS_OK;
  });
}

}  // extern "C"
