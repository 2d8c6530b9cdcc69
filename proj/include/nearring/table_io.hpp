#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nearring/nearring.hpp"

namespace nearring {

inline constexpr const char* kTableFormat = "nearring-table/1";

/// Tables exactly as written in a document; only the shape is checked.
struct RawTables {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> labels;  // empty when absent
  Table add;
  Table mul;
  std::optional<Elem> one;
};

/// Parses a nearring-table/1 JSON document. Throws FormatError naming the
/// offending field on malformed input, non-square tables, out-of-range
/// indices or duplicate labels.
RawTables parse_table(std::string_view bytes);

/// Moves the additive identity to index 0 (swapping it with the element
/// there), then validates.
std::variant<NearRing, AxiomViolation> load_nearring(const RawTables& raw,
                                                     Exec exec = Exec::parallel);

/// Deterministic document: keys in the order format, name, order, labels,
/// add, mul, one; one table row per line.
std::string emit_table(const NearRing& N);

/// Reads a whole file; throws FormatError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace nearring
