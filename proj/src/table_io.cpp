#include "nearring/table_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace nearring {

using nlohmann::json;

namespace {

Table read_square(const json& doc, const char* field, std::size_t n) {
  if (!doc.contains(field)) throw FormatError(std::string("missing field '") + field + "'");
  const json& rows = doc.at(field);
  if (!rows.is_array() || rows.size() != n)
    throw FormatError(std::string("field '") + field + "' must have " + std::to_string(n) +
                      " rows");
  Table t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw FormatError(std::string("field '") + field + "' row " + std::to_string(i) +
                        " must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& v = row[j];
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() >= static_cast<long long>(n))
        throw FormatError(std::string("field '") + field + "' entry (" + std::to_string(i) +
                          "," + std::to_string(j) + ") is not an index in [0," +
                          std::to_string(n) + ")");
      t(i, j) = static_cast<Elem>(v.get<long long>());
    }
  }
  return t;
}

}  // namespace

RawTables parse_table(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  if (!doc.contains("format") || doc.at("format") != kTableFormat)
    throw FormatError(std::string("field 'format' must be \"") + kTableFormat + "\"");

  RawTables raw;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw FormatError("field 'name' must be a string");
    raw.name = doc.at("name").get<std::string>();
  }
  if (!doc.contains("order")) throw FormatError("missing field 'order'");
  const json& order = doc.at("order");
  if (!order.is_number_integer() || order.get<long long>() < 1)
    throw FormatError("field 'order' must be a positive integer");
  raw.order = static_cast<std::size_t>(order.get<long long>());

  if (doc.contains("labels")) {
    const json& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != raw.order)
      throw FormatError("field 'labels' must list " + std::to_string(raw.order) + " strings");
    std::set<std::string> seen;
    for (const json& l : labels) {
      if (!l.is_string()) throw FormatError("field 'labels' must contain strings");
      if (!seen.insert(l.get<std::string>()).second)
        throw FormatError("duplicate label '" + l.get<std::string>() + "'");
      raw.labels.push_back(l.get<std::string>());
    }
  }
  raw.add = read_square(doc, "add", raw.order);
  raw.mul = read_square(doc, "mul", raw.order);
  if (doc.contains("one") && !doc.at("one").is_null()) {
    const json& one = doc.at("one");
    if (!one.is_number_integer() || one.get<long long>() < 0 ||
        one.get<long long>() >= static_cast<long long>(raw.order))
      throw FormatError("field 'one' is not an index in [0," + std::to_string(raw.order) + ")");
    raw.one = static_cast<Elem>(one.get<long long>());
  }
  return raw;
}

std::variant<NearRing, AxiomViolation> load_nearring(const RawTables& raw, Exec exec) {
  const std::size_t n = raw.order;
  std::optional<std::size_t> zero;
  for (std::size_t e = 0; e < n && !zero; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = raw.add(e, x) == x && raw.add(x, e) == x;
    if (ok) zero = e;
  }
  if (!zero || *zero == 0)
    return validate_nearring(raw.add, raw.mul, raw.one, raw.labels, raw.name, exec);

  // Swap indices 0 and z everywhere.
  const Elem z = static_cast<Elem>(*zero);
  auto p = [&](Elem x) -> Elem { return x == 0 ? z : (x == z ? 0 : x); };
  Table add(n, n), mul(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add(p(static_cast<Elem>(i)), p(static_cast<Elem>(j))) = p(raw.add(i, j));
      mul(p(static_cast<Elem>(i)), p(static_cast<Elem>(j))) = p(raw.mul(i, j));
    }
  auto labels = raw.labels;
  if (!labels.empty()) std::swap(labels[0], labels[z]);
  std::optional<Elem> one;
  if (raw.one) one = p(*raw.one);
  return validate_nearring(add, mul, one, std::move(labels), raw.name, exec);
}

std::string emit_table(const NearRing& N) {
  const std::size_t n = N.order();
  std::ostringstream os;
  auto table = [&](const Table& t) {
    os << "[\n";
    for (std::size_t i = 0; i < n; ++i) {
      os << "    [";
      for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << t(i, j);
      os << (i + 1 < n ? "],\n" : "]\n");
    }
    os << "  ]";
  };
  os << "{\n";
  os << "  \"format\": " << json(kTableFormat).dump() << ",\n";
  os << "  \"name\": " << json(N.name()).dump() << ",\n";
  os << "  \"order\": " << n << ",\n";
  os << "  \"labels\": " << json(N.labels()).dump() << ",\n";
  os << "  \"add\": ";
  table(N.add_table());
  os << ",\n  \"mul\": ";
  table(N.mul_table());
  if (auto one = N.one()) os << ",\n  \"one\": " << *one;
  os << "\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nearring
