#include "report.hpp"

#include <iomanip>
#include <sstream>

#include "errors.hpp"

namespace eaqmds {

using nlohmann::ordered_json;

ordered_json to_json(const FieldDescriptor& f) {
  ordered_json j;
  j["p"] = f.p;
  j["m"] = f.m;
  j["modulus"] = f.modulus;
  // primitive element as its coefficient vector, ascending degree
  std::vector<std::uint32_t> prim;
  Elem v = f.primitive;
  for (std::uint32_t i = 0; i < f.m; ++i) {
    prim.push_back(v % f.p);
    v /= f.p;
  }
  j["primitive"] = prim;
  return j;
}

ordered_json to_json(const EaqeccParams& p) {
  ordered_json j;
  j["family"] = p.family ? std::string(to_string(*p.family)) : std::string{};
  j["q"] = p.q;
  if (p.t) {
    j["t"] = p.t;
  } else {
    j["t"] = nullptr;
  }
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  j["c"] = p.c;
  j["classical"] = {{"n", p.classical_n}, {"k", p.classical_k}, {"d", p.classical_d}};
  j["saturated"] = p.saturated;
  if (p.defining_set) {
    j["defining_set"] = p.defining_set->elements();
  } else {
    j["defining_set"] = nullptr;
  }
  if (p.rs_r) j["r"] = *p.rs_r;
  j["delta"] = {{"lo", p.delta.lo}, {"hi", p.delta.hi}};
  j["field"] = to_json(p.field);
  return j;
}

ordered_json to_json(const SweepReport& r, bool include_timing) {
  ordered_json j;
  j["lemma"] = std::string(to_string(r.lemma));
  j["q"] = r.q_list;
  j["t"] = r.t_list;
  ordered_json items = ordered_json::array();
  for (const auto& in : r.instances) {
    ordered_json e;
    e["q"] = in.q;
    e["t"] = in.t;
    e["n"] = in.n;
    e["delta"] = {{"lo", in.delta.lo}, {"hi", in.delta.hi}};
    e["expected"] = in.expected;
    e["computed"] = in.computed;
    if (in.coset_rank) e["coset_rank"] = *in.coset_rank;
    if (in.intersection_computed) {
      e["intersection"] = {{"expected", *in.intersection_expected},
                           {"computed", *in.intersection_computed},
                           {"set_matches", *in.intersection_set_matches}};
    }
    e["pass"] = in.pass;
    items.push_back(std::move(e));
  }
  j["instances"] = std::move(items);
  j["failures"] = r.failures.size();
  j["passed"] = r.passed();
  if (include_timing) j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j;
}

ordered_json to_json(const DistanceCertificate& c) {
  ordered_json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["design_distance"] = c.design;
  j["route"] = std::string(to_string(c.route));
  if (c.oracle_distance) {
    j["oracle_distance"] = *c.oracle_distance;
  } else {
    j["oracle_distance"] = nullptr;
  }
  if (c.mds) {
    j["mds"] = *c.mds;
  } else {
    j["mds"] = nullptr;
  }
  j["certified"] = c.certified();
  return j;
}

std::string report_to_text(const SweepReport& r) {
  std::ostringstream os;
  os << "lemma " << to_string(r.lemma) << "\n";
  os << std::setw(6) << "q" << std::setw(4) << "t" << std::setw(8) << "n" << std::setw(6) << "lo"
     << std::setw(6) << "hi" << std::setw(10) << "expected" << std::setw(10) << "computed"
     << std::setw(8) << "cosets" << std::setw(8) << "Z1^Z2" << "  result\n";
  for (const auto& in : r.instances) {
    os << std::setw(6) << in.q << std::setw(4) << in.t << std::setw(8) << in.n << std::setw(6)
       << in.delta.lo << std::setw(6) << in.delta.hi << std::setw(10) << in.expected
       << std::setw(10) << in.computed << std::setw(8)
       << (in.coset_rank ? std::to_string(*in.coset_rank) : "-") << std::setw(8)
       << (in.intersection_computed ? std::to_string(*in.intersection_computed) : "-") << "  "
       << (in.pass ? "pass" : "FAIL") << "\n";
  }
  os << r.instances.size() << " instances, " << r.failures.size() << " failures: "
     << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_params(const EaqeccParams& p) {
  std::ostringstream os;
  os << "[[" << p.n << "," << p.k << "," << p.d << ";" << p.c << "]]_" << p.q;
  return os.str();
}

std::string records_to_json(const std::vector<EaqeccParams>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

namespace {
std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}
}  // namespace

std::string records_to_csv(const std::vector<EaqeccParams>& records) {
  std::ostringstream os;
  os << "family,q,t,n,k,d,c,classical_n,classical_k,classical_d,saturated,defining_set\n";
  for (const auto& p : records) {
    os << (p.family ? to_string(*p.family) : "") << ',' << p.q << ',';
    if (p.t) os << p.t;
    os << ',' << p.n << ',' << p.k << ',' << p.d << ',' << p.c << ',' << p.classical_n << ','
       << p.classical_k << ',' << p.classical_d << ',' << (p.saturated ? "true" : "false")
       << ',';
    if (p.defining_set) os << join(p.defining_set->elements(), " ");
    os << '\n';
  }
  return os.str();
}

std::string records_to_markdown(const std::vector<EaqeccParams>& records) {
  std::ostringstream os;
  os << "| Family | Code | Classical | Construction |\n";
  os << "|---|---|---|---|\n";
  for (const auto& p : records) {
    os << "| " << (p.family ? to_string(*p.family) : "") << " | " << format_params(p) << " | ["
       << p.classical_n << "," << p.classical_k << "," << p.classical_d << "]_" << p.q * p.q
       << " | ";
    if (p.defining_set) {
      os << "Z = {" << join(p.defining_set->elements(), ",") << "} mod "
         << p.defining_set->modulus();
    } else if (p.rs_r) {
      os << "extended RS, r = " << *p.rs_r;
    }
    os << " |\n";
  }
  return os.str();
}

std::vector<TableRow> build_table(std::uint32_t q, std::uint32_t t, unsigned jobs) {
  std::vector<TableRow> rows;
  const std::int64_t qsq = static_cast<std::int64_t>(q) * q;
  auto add = [&](Family fam, std::uint32_t tt, std::string label, std::int64_t qmds_offset,
                 std::uint64_t qmds_hi, std::string provenance) {
    const auto spec = FamilySpec::make(fam, q, tt);
    TableRow row;
    row.family = fam;
    row.q = q;
    row.t = spec.t();
    row.n = spec.length();
    row.length_label = std::move(label);
    row.records = enumerate_family(spec, jobs);
    if (row.records.empty()) return;
    row.k_offset = row.records.front().k + 2 * static_cast<std::int64_t>(row.records.front().d);
    row.c = row.records.front().c;
    row.d_lo = row.records.front().d;
    row.d_hi = row.records.back().d;
    for (const auto& r : row.records) {
      if (r.k + 2 * static_cast<std::int64_t>(r.d) != row.k_offset || r.c != row.c) {
        throw VerificationFailure("table row " + spec.label() + " is not a single formula");
      }
    }
    row.even_only = fam == Family::I;
    row.qmds_k_offset = qmds_offset;
    row.qmds_d_lo = 2;
    row.qmds_d_hi = qmds_hi;
    row.provenance = std::move(provenance) + "; " + std::to_string(row.records.size()) +
                     " codes constructed, c = rank(HH^dagger) = " + std::to_string(row.c);
    rows.push_back(std::move(row));
  };

  add(Family::I, 0, "q^2+1", qsq + 3, q + 1, "cyclic, Z = C_0 u ... u C_delta");
  add(Family::II, 0, "q^2", qsq + 2, q, "extended Reed-Solomon, r = d - 1");
  add(Family::III, 0, "q^2-1", qsq + 1, q - 1, "cyclic, Z = C_-delta u ... u C_delta'");
  if (q % 2 == 1) {
    const std::int64_t n2 = (qsq - 1) / 2;
    add(Family::IV, 0, "(q^2-1)/2", n2 + 2, q, "negacyclic, Z = C_{2j-1}, -delta1 <= j <= delta2");
    if (t != 0 && FamilySpec::admissible(Family::V, q, t)) {
      const std::int64_t nt = (qsq - 1) / t;
      add(Family::V, t, "(q^2-1)/t", nt + 2, static_cast<std::uint64_t>((t + 1) * (q + 1) / (2 * t) - 1),
          "constacyclic, Z = C_{1+t(A+i)}, -delta1 <= i <= delta2");
    }
  }
  return rows;
}

std::string table_to_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| Length | EAQMDS | QMDS | Construction |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.n << " (" << r.length_label << ") | [[" << r.n << "," << r.k_offset
       << "-2d,d;" << r.c << "]]_" << r.q << ", " << r.d_lo << "<=d<=" << r.d_hi
       << (r.even_only ? ", d even" : "") << " | [[" << r.n << "," << r.qmds_k_offset
       << "-2d,d]]_" << r.q << ", " << r.qmds_d_lo << "<=d<=" << r.qmds_d_hi << " | "
       << r.provenance << " |\n";
  }
  return os.str();
}

ordered_json table_to_json(const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["length"] = r.n;
    j["length_label"] = r.length_label;
    j["family"] = std::string(to_string(r.family));
    j["q"] = r.q;
    if (r.t) {
      j["t"] = r.t;
    } else {
      j["t"] = nullptr;
    }
    j["eaqmds"] = {{"k_offset", r.k_offset}, {"c", r.c}, {"d_min", r.d_lo}, {"d_max", r.d_hi},
                   {"d_even_only", r.even_only}};
    j["qmds"] = {{"k_offset", r.qmds_k_offset}, {"d_min", r.qmds_d_lo}, {"d_max", r.qmds_d_hi}};
    j["provenance"] = r.provenance;
    ordered_json recs = ordered_json::array();
    for (const auto& p : r.records) recs.push_back(to_json(p));
    j["records"] = std::move(recs);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace eaqmds
