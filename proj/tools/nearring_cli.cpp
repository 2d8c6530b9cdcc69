// nearring: validate, classify and verify finite right near-rings given as
// Cayley tables.
//
// Exit codes: 0 clean, 1 axiom or validation failure, 2 theorem
// counterexample, 3 I/O or format error. Multi-input runs return the
// numerically largest code seen.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nearring/catalog.hpp"
#include "nearring/classify.hpp"
#include "nearring/report.hpp"
#include "nearring/table_io.hpp"
#include "nearring/theorems.hpp"

namespace fs = std::filesystem;
using namespace nearring;

namespace {

constexpr int kOk = 0, kAxiom = 1, kTheorem = 2, kFormat = 3;

struct RunConfig {
  std::string format = "text";
  std::string theorems = "all";
  std::string element;
  std::vector<std::string> inputs;
  std::string builtin_name, out;
  bool list = false;
  bool allow_nonunital = false;
  bool serial = false;
  std::size_t max_order = Caps{}.classify;
  std::size_t max_ideal_order = Caps{}.ideal_enumeration;
  std::size_t max_iso_order = Caps{}.iso_bruteforce;

  Caps caps() const {
    Caps c;
    c.classify = max_order;
    c.ideal_enumeration = max_ideal_order;
    c.iso_bruteforce = max_iso_order;
    return c;
  }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

// One input after loading: a near-ring or the exit code explaining why not.
struct Loaded {
  std::string source;
  std::optional<NearRing> ring;
  int code = kOk;
  std::string message;
};

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

Loaded load_file(const std::string& path, Exec exec) {
  Loaded l{path, std::nullopt, kOk, {}};
  try {
    RawTables raw = parse_table(read_file(path));
    if (raw.name.empty()) raw.name = stem_of(path);
    auto v = load_nearring(raw, exec);
    if (auto* bad = std::get_if<AxiomViolation>(&v)) {
      l.code = kAxiom;
      l.message = render_violation(*bad);
    } else {
      l.ring = std::get<NearRing>(std::move(v));
    }
  } catch (const FormatError& e) {
    l.code = kFormat;
    l.message = e.what();
  }
  return l;
}

// PATH may be a file, a directory of *.json files, builtin:NAME or
// builtin:default (the default corpus).
std::vector<Loaded> expand(const std::string& path, Exec exec) {
  std::vector<Loaded> out;
  const std::string prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) {
    const std::string name = path.substr(prefix.size());
    try {
      if (name == "default") {
        for (auto& N : default_corpus()) out.push_back({path, std::move(N), kOk, {}});
      } else {
        out.push_back({path, builtin(name), kOk, {}});
      }
    } catch (const Error& e) {
      out.push_back({path, std::nullopt, kFormat, e.what()});
    }
    return out;
  }
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path, ec))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_file(f, exec));
    return out;
  }
  out.push_back(load_file(path, exec));
  return out;
}

int emit(const std::string& text) {
  std::cout << text;
  std::cout.flush();
  return std::cout ? kOk : kFormat;
}

// validate and classify take one near-ring: a file or builtin:NAME.
Loaded load_one(const std::string& path, Exec exec) {
  if (path.rfind("builtin:", 0) == 0 && path != "builtin:default") return expand(path, exec).front();
  return load_file(path, exec);
}

int cmd_validate(const RunConfig& cfg) {
  Loaded l = load_one(cfg.inputs.front(), cfg.exec());
  if (!l.ring) {
    std::cout << (l.code == kAxiom ? "invalid: " : "error: ") << l.message << "\n";
    return l.code;
  }
  const NearRing& N = *l.ring;
  std::cout << "valid near-ring " << N.name() << " (order " << N.order() << ")\n";
  std::cout << "flags: " << flag_names(N) << "\n";
  if (N.one()) std::cout << "unity: " << N.label(*N.one()) << "\n";
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  Format fmt = parse_format(cfg.format);
  Loaded l = load_one(cfg.inputs.front(), cfg.exec());
  if (!l.ring) {
    std::cerr << l.message << "\n";
    return l.code;
  }
  const NearRing& N = *l.ring;
  if (!N.is_unital() && !cfg.allow_nonunital) {
    std::cerr << "near-ring '" << N.name()
              << "' is not unital; pass --allow-nonunital to classify it anyway\n";
    return kAxiom;
  }
  std::optional<Elem> element;
  if (!cfg.element.empty()) {
    element = N.find(cfg.element);
    if (!element) {
      std::cerr << "unknown element '" << cfg.element << "'\n";
      return kFormat;
    }
  }
  Analysis A(N, cfg.exec(), cfg.caps());
  return emit(render_classification(A, fmt, element));
}

std::vector<std::string> theorem_ids(const std::string& list) {
  std::vector<std::string> ids;
  if (list == "all") return ids;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');) {
    if (id.empty()) continue;
    if (!is_theorem_id(id)) throw FormatError("unknown theorem id '" + id + "'");
    ids.push_back(id);
  }
  return ids;
}

int cmd_verify(const RunConfig& cfg) {
  Format fmt = parse_format(cfg.format);
  auto ids = theorem_ids(cfg.theorems);
  std::vector<Loaded> loaded;
  for (const auto& p : cfg.inputs)
    for (auto& l : expand(p, cfg.exec())) loaded.push_back(std::move(l));

  int worst = kOk;
  for (const auto& l : loaded)
    if (!l.ring) {
      std::cerr << l.source << ": " << (l.code == kAxiom ? "invalid: " : "error: ") << l.message
                << "\n";
      worst = std::max(worst, l.code);
    }
  if (worst != kOk) return worst;

  std::vector<NearRing> corpus;
  for (auto& l : loaded) corpus.push_back(std::move(*l.ring));
  SuiteReport report = run_suite(corpus, ids, cfg.exec());
  int code = emit(render_suite(report, fmt, corpus.size() > 1));
  if (!report.aggregate_pass) code = std::max(code, kTheorem);
  if (report.errors > 0) code = std::max(code, kFormat);
  return code;
}

int cmd_builtin(const RunConfig& cfg) {
  if (cfg.list) {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return kOk;
  }
  if (cfg.builtin_name.empty()) {
    std::cerr << "builtin: give a NAME or --list\n";
    return kFormat;
  }
  std::string doc;
  try {
    doc = emit_table(builtin(cfg.builtin_name));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFormat;
  }
  if (cfg.out.empty()) return emit(doc);
  std::ofstream f(cfg.out, std::ios::binary);
  f << doc;
  if (!f) {
    std::cerr << "cannot write '" << cfg.out << "'\n";
    return kFormat;
  }
  return kOk;
}

int cmd_corpus(const RunConfig& cfg) {
  Format fmt = parse_format(cfg.format);
  const std::string& dir = cfg.inputs.front();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "'" << dir << "' is not a directory\n";
    return kFormat;
  }
  std::vector<DigestRow> rows;
  int worst = kOk;
  for (auto& l : expand(dir, cfg.exec())) {
    const std::string file = fs::path(l.source).filename().string();
    DigestRow row;
    if (!l.ring) {
      row.file = file;
      row.exit_code = l.code;
      row.error = l.message;
    } else if (!l.ring->is_unital() && !cfg.allow_nonunital) {
      row.file = file;
      row.exit_code = kAxiom;
      row.error = "not unital (pass --allow-nonunital)";
    } else {
      try {
        row = digest_row(file, Analysis(*l.ring, cfg.exec(), cfg.caps()));
      } catch (const Error& e) {
        row.file = file;
        row.exit_code = kFormat;
        row.error = e.what();
      }
    }
    worst = std::max(worst, row.exit_code);
    rows.push_back(std::move(row));
  }
  return std::max(worst, emit(render_digest(rows, fmt)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite right near-ring workbench"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-order", cfg.max_order, "Largest order classified")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-ideal-order", cfg.max_ideal_order,
                    "Largest order for left-ideal enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iso-order", cfg.max_iso_order,
                    "Largest module order for brute-force isomorphism")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--serial", cfg.serial, "Use the serial kernels");
  };
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  auto* validate = app.add_subcommand("validate", "Check the near-ring axioms of a table file");
  validate->add_option("file", cfg.inputs, "Table file")->required()->expected(1);
  validate->add_flag("--serial", cfg.serial, "Use the serial kernels");

  auto* classify = app.add_subcommand("classify", "Per-element and structure classification");
  classify->add_option("file", cfg.inputs, "Table file")->required()->expected(1);
  classify->add_option("--element", cfg.element, "Single element, by label or index");
  classify->add_option("--format", cfg.format, "text, json or csv")->check(formats);
  classify->add_flag("--allow-nonunital", cfg.allow_nonunital,
                     "Report unit-dependent fields as n/a instead of refusing");
  add_caps(classify);

  auto* verify = app.add_subcommand("verify", "Run theorem checks over files or builtins");
  verify->add_option("paths", cfg.inputs, "Files, directories, builtin:NAME or builtin:default")
      ->required();
  verify->add_option("--theorems", cfg.theorems, "all, or comma-separated ids");
  verify->add_option("--format", cfg.format, "text, json or csv")->check(formats);
  add_caps(verify);

  auto* builtin_cmd = app.add_subcommand("builtin", "List or export catalog near-rings");
  builtin_cmd->add_flag("--list", cfg.list, "List catalog names");
  builtin_cmd->add_option("name", cfg.builtin_name, "Catalog name");
  builtin_cmd->add_option("--out", cfg.out, "Write the table document here");

  auto* corpus = app.add_subcommand("corpus", "Classification digest of a directory");
  corpus->add_option("dir", cfg.inputs, "Directory of table files")->required()->expected(1);
  corpus->add_option("--format", cfg.format, "text, json or csv")->check(formats);
  corpus->add_flag("--allow-nonunital", cfg.allow_nonunital,
                   "Report unit-dependent counts as n/a instead of flagging the file");
  add_caps(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kFormat;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*builtin_cmd) return cmd_builtin(cfg);
    if (*corpus) return cmd_corpus(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kFormat;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  }
  return kFormat;
}
