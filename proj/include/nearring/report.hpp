#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearring/classify.hpp"
#include "nearring/nearring.hpp"
#include "nearring/theorems.hpp"

namespace nearring {

enum class Format { text, json, csv };

/// Throws FormatError on anything but "text", "json" or "csv".
Format parse_format(const std::string& s);

/// Space-separated names of the flags that hold, e.g. "near-ring ring unital".
std::string flag_names(const NearRing& N);

std::string render_violation(const AxiomViolation& v);

/// Per-element table plus structure flags, or a single element profile.
/// Unit-dependent fields read "n/a" on a non-unital near-ring.
std::string render_classification(const Analysis& A, Format f,
                                  std::optional<Elem> element = std::nullopt);

/// Fixed CSV header of the element table.
extern const char* const kElementCsvHeader;

std::string render_suite(const SuiteReport& s, Format f, bool chain_summary);

/// One row of the corpus digest.
struct DigestRow {
  std::string file;
  int exit_code = 0;   // per-file exit code under the cli contract
  std::string error;   // set when the file did not classify
  std::string name;
  std::size_t order = 0;
  std::string flags;
  std::size_t units = 0, idempotents = 0, regular = 0, unit_regular = 0, lsr = 0, morphic = 0;
  bool unital = false;
};

DigestRow digest_row(const std::string& file, const Analysis& A);
std::string render_digest(const std::vector<DigestRow>& rows, Format f);

}  // namespace nearring
