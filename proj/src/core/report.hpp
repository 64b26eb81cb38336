#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eaqecc.hpp"
#include "verify.hpp"

namespace eaqmds {

nlohmann::ordered_json to_json(const FieldDescriptor& f);
nlohmann::ordered_json to_json(const EaqeccParams& p);
// Timing is left out unless asked for so that the data section is
// reproducible byte for byte.
nlohmann::ordered_json to_json(const SweepReport& r, bool include_timing = false);
nlohmann::ordered_json to_json(const DistanceCertificate& c);

// Fixed-width text, one line per sweep instance, then a summary line.
std::string report_to_text(const SweepReport& r);

std::string records_to_json(const std::vector<EaqeccParams>& records);
std::string records_to_csv(const std::vector<EaqeccParams>& records);
std::string records_to_markdown(const std::vector<EaqeccParams>& records);

// "[[n,k,d;c]]_q"
std::string format_params(const EaqeccParams& p);

// One row of the EAQMDS vs QMDS comparison for a given length.
struct TableRow {
  Family family;
  std::uint32_t q = 0;
  std::uint32_t t = 0;
  std::uint64_t n = 0;
  std::string length_label;  // symbolic, e.g. "q^2+1"
  // Instantiated from the constructed records: k = k_offset - 2d.
  std::int64_t k_offset = 0;
  std::uint64_t c = 0;
  std::uint64_t d_lo = 0;
  std::uint64_t d_hi = 0;
  bool even_only = false;
  // Standard QMDS comparison column, from its closed form.
  std::int64_t qmds_k_offset = 0;
  std::uint64_t qmds_d_lo = 0;
  std::uint64_t qmds_d_hi = 0;
  std::string provenance;
  std::vector<EaqeccParams> records;
};

// Rows for q^2+1, q^2, q^2-1 and, for odd q, (q^2-1)/2 and (q^2-1)/t when t
// is admissible (t = 0 omits the last row). Every EAQMDS entry is built by
// enumerate_family.
std::vector<TableRow> build_table(std::uint32_t q, std::uint32_t t = 0, unsigned jobs = 1);
std::string table_to_markdown(const std::vector<TableRow>& rows);
nlohmann::ordered_json table_to_json(const std::vector<TableRow>& rows);

}  // namespace eaqmds
