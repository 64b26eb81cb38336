// eaqmds: enumerate EAQMDS families, verify the rank lemmas, certify
// distances and regenerate the comparison table.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eaqmds/eaqmds.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StringDeleter {
  void operator()(char* s) const { eaqmds_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_for(eaqmds_status s) {
  switch (s) {
    case EAQMDS_OK: return kExitOk;
    case EAQMDS_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitVerification;
  }
}

int report_error(eaqmds_status s) {
  std::cerr << "eaqmds: " << eaqmds_last_error() << "\n";
  return exit_for(s);
}

std::uint64_t parse_uint(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw UsageError("not a non-negative integer: '" + s + "'");
  return v;
}

// "5", "2..9", "3,5,7..11"; values are returned sorted and deduplicated.
std::vector<std::uint32_t> parse_int_list(const std::string& text) {
  std::set<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.insert(static_cast<std::uint32_t>(parse_uint(item)));
    } else {
      const auto a = parse_uint(item.substr(0, dots));
      const auto b = parse_uint(item.substr(dots + 2));
      if (a > b) throw UsageError("empty range '" + item + "'");
      if (b > 1'000'000) throw UsageError("range bound too large in '" + item + "'");
      for (auto v = a; v <= b; ++v) out.insert(static_cast<std::uint32_t>(v));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {out.begin(), out.end()};
}

bool is_range(const std::string& text) {
  return text.find("..") != std::string::npos || text.find(',') != std::string::npos;
}

// Prime powers from --q. A single explicit value that is not a prime power
// is a usage error; ranges silently keep only the prime powers.
std::vector<std::uint32_t> parse_q(const std::string& text) {
  std::vector<std::uint32_t> qs;
  for (auto q : parse_int_list(text)) {
    if (eaqmds_is_prime_power(q)) {
      qs.push_back(q);
    } else if (!is_range(text)) {
      throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    }
  }
  if (qs.empty()) throw UsageError("no prime power in '" + text + "'");
  return qs;
}

eaqmds_format parse_format(const std::string& f) {
  if (f == "json") return EAQMDS_FORMAT_JSON;
  if (f == "csv") return EAQMDS_FORMAT_CSV;
  if (f == "md") return EAQMDS_FORMAT_MARKDOWN;
  throw UsageError("unknown format '" + f + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
  f << text;
}

struct Options {
  std::string family;
  std::string lemma;
  std::string q;
  std::string t;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::string format = "json";
  std::string out;
  unsigned jobs = 0;
  bool timing = false;
  std::optional<std::uint64_t> max_codewords;
  std::optional<std::uint64_t> max_minors;
  std::uint64_t time_limit_ms = 0;
};

std::uint32_t single_t(const Options& o) {
  if (o.t.empty()) return 0;
  const auto ts = parse_int_list(o.t);
  if (ts.size() != 1) throw UsageError("--t takes a single value here");
  return ts.front();
}

int cmd_enumerate(const Options& o) {
  const auto qs = parse_q(o.q);
  const std::uint32_t t = single_t(o);
  const bool range = qs.size() > 1 || is_range(o.q);
  eaqmds_records* all = nullptr;
  int status = kExitOk;
  for (auto q : qs) {
    eaqmds_family_request req{o.family.c_str(), q, t, o.n, o.jobs};
    eaqmds_records* recs = nullptr;
    const auto s = eaqmds_enumerate(&req, &recs);
    if (s == EAQMDS_ERR_INVALID_ARGUMENT && range) continue;  // not admissible for this q
    if (s != EAQMDS_OK) {
      status = report_error(s);
      break;
    }
    if (!all) {
      all = recs;
    } else {
      eaqmds_records_append(all, recs);
      eaqmds_records_destroy(recs);
    }
  }
  if (status == kExitOk && !all) {
    std::cerr << "eaqmds: no admissible q for family " << o.family << " in '" << o.q << "'\n";
    status = kExitUsage;
  }
  if (status == kExitOk) {
    char* text = nullptr;
    const auto s = eaqmds_records_serialize(all, parse_format(o.format), &text);
    if (s != EAQMDS_OK) {
      status = report_error(s);
    } else {
      OwnedString owned(text);
      emit(text, o.out);
    }
  }
  eaqmds_records_destroy(all);
  return status;
}

int cmd_verify(const Options& o) {
  const auto qs = parse_q(o.q);
  const auto ts = o.t.empty() ? std::vector<std::uint32_t>{} : parse_int_list(o.t);
  if (o.format != "json" && o.format != "md") throw UsageError("verify supports json and md");
  eaqmds_report* rep = nullptr;
  const auto s = eaqmds_verify_lemma(o.lemma.c_str(), qs.data(), qs.size(), ts.data(), ts.size(),
                                     o.jobs, &rep);
  if (s != EAQMDS_OK) return report_error(s);
  std::unique_ptr<eaqmds_report, void (*)(eaqmds_report*)> owned(rep, eaqmds_report_destroy);
  char* text = nullptr;
  const auto s2 = o.format == "json" ? eaqmds_report_json(rep, o.timing ? 1 : 0, &text)
                                     : eaqmds_report_text(rep, &text);
  if (s2 != EAQMDS_OK) return report_error(s2);
  OwnedString owned_text(text);
  emit(text, o.out);
  if (o.timing && o.format != "json") {
    std::cerr << "elapsed " << eaqmds_report_elapsed_ms(rep) << " ms\n";
  }
  if (eaqmds_report_instance_count(rep) == 0) {
    std::cerr << "eaqmds: no admissible instances for lemma " << o.lemma << "\n";
    return kExitUsage;
  }
  return eaqmds_report_passed(rep) ? kExitOk : kExitVerification;
}

int cmd_table(const Options& o) {
  const auto qs = parse_q(o.q);
  const std::uint32_t t = single_t(o);
  if (o.format != "json" && o.format != "md") throw UsageError("table supports json and md");
  std::string all;
  for (auto q : qs) {
    char* text = nullptr;
    const auto s = eaqmds_table(q, t, o.jobs, parse_format(o.format), &text);
    if (s != EAQMDS_OK) return report_error(s);
    OwnedString owned(text);
    if (qs.size() > 1 && o.format == "md") all += "q = " + std::to_string(q) + "\n\n";
    all += text;
    if (qs.size() > 1 && o.format == "md") all += "\n";
  }
  emit(all, o.out);
  return kExitOk;
}

int cmd_distance(const Options& o) {
  const auto qs = parse_q(o.q);
  if (qs.size() != 1) throw UsageError("distance takes a single q");
  if (o.format != "json") throw UsageError("distance supports json only");
  eaqmds_family_request req{o.family.c_str(), qs.front(), single_t(o), o.n, o.jobs};
  eaqmds_budget b = eaqmds_default_budget();
  if (o.max_codewords) b.max_codewords = *o.max_codewords;
  if (o.max_minors) b.max_minors = *o.max_minors;
  b.time_limit_ms = o.time_limit_ms;
  char* text = nullptr;
  const auto s = eaqmds_distance(&req, o.d, &b, &text);
  if (text) {
    OwnedString owned(text);
    emit(text, o.out);
  }
  if (s != EAQMDS_OK) return report_error(s);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted quantum MDS code constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eaqmds_version()));
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "q as a value, a..b range or comma list")->required();
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  };

  auto* en = app.add_subcommand("enumerate", "One record per admissible d of a family");
  en->add_option("--family", o.family, "i, ii, iii, iv or v")->required();
  en->add_option("--t", o.t, "t for family v");
  en->add_option("--n", o.n, "Length for families i and iii (a divisor of q^2+1 or q^2-1)");
  en->add_option("--format", o.format, "json, csv or md");
  add_common(en);

  auto* ve = app.add_subcommand("verify", "Sweep a rank lemma over its parameter grid");
  ve->add_option("--lemma", o.lemma, "rank1, rank1-minus, rank-ers, nega or consta")->required();
  ve->add_option("--t", o.t, "t values for consta (list or range)");
  ve->add_option("--format", o.format, "json or md");
  ve->add_flag("--timing", o.timing, "Include timing");
  add_common(ve);

  auto* ta = app.add_subcommand("table", "EAQMDS vs QMDS comparison by length");
  ta->add_option("--t", o.t, "t for the (q^2-1)/t row");
  ta->add_option("--format", o.format, "json or md");
  add_common(ta);

  auto* di = app.add_subcommand("distance", "Certify the classical distance of one member");
  di->add_option("--family", o.family, "i, ii, iii, iv or v")->required();
  di->add_option("--t", o.t, "t for family v");
  di->add_option("--n", o.n, "Length for families i and iii");
  di->add_option("--d", o.d, "Quantum distance d")->required();
  di->add_option("--max-codewords", o.max_codewords,
                 "Enumeration budget (default EAQMDS_MAX_CODEWORDS or 1e7)");
  di->add_option("--max-minors", o.max_minors,
                 "Minor budget (default EAQMDS_MAX_MINORS or 1e6)");
  di->add_option("--time-limit-ms", o.time_limit_ms, "Per-instance wall clock ceiling");
  di->add_option("--format", o.format, "json");
  add_common(di);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*en) {
      parse_format(o.format);
      return cmd_enumerate(o);
    }
    if (*ve) return cmd_verify(o);
    if (*ta) return cmd_table(o);
    if (*di) return cmd_distance(o);
  } catch (const UsageError& e) {
    std::cerr << "eaqmds: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
