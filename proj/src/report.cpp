#include "nearring/report.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"

namespace nearring {

using ojson = nlohmann::ordered_json;

const char* const kElementCsvHeader =
    "index,label,unit,idempotent,central,nilpotency,regular,unit_regular,lsr,rsr,morphic,"
    "witness,|Na|,|annL|";

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw FormatError("unknown format '" + s + "' (expected text, json or csv)");
}

std::string flag_names(const NearRing& N) {
  const auto& f = N.flags();
  std::string out = "near-ring";
  auto add = [&](bool on, const char* name) {
    if (on) out += std::string(" ") + name;
  };
  add(f.abelian_add.holds, "abelian");
  add(f.left_distributive.holds, "left_distributive");
  add(N.is_ring(), "ring");
  add(f.zero_symmetric.holds, "zero_symmetric");
  add(f.unital.holds, "unital");
  add(f.commutative_mul.holds, "commutative");
  return out;
}

std::string render_violation(const AxiomViolation& v) { return v.describe(); }

namespace {

std::string labels_of(const NearRing& N, const std::vector<Elem>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + N.label(xs[i]);
  return s + ")";
}

std::string set_text(const NearRing& N, const Subset& S) {
  std::string s = "{";
  bool first = true;
  S.for_each([&](Elem x) {
    s += (first ? "" : ",") + N.label(x);
    first = false;
  });
  return s + "}";
}

ojson set_json(const NearRing& N, const Subset& S) {
  ojson a = ojson::array();
  S.for_each([&](Elem x) { a.push_back(N.label(x)); });
  return a;
}

std::vector<std::pair<const char*, std::optional<Flag>>> structure_flags(const StructureProfile& s) {
  return {{"zero_symmetric", s.zero_symmetric},
          {"abelian_add", s.abelian_add},
          {"ring", s.is_ring},
          {"near_field", s.is_near_field},
          {"reduced", s.reduced},
          {"ifp", s.has_ifp},
          {"subcommutative", s.subcommutative},
          {"boolean", s.boolean},
          {"weakly_divisible", s.weakly_divisible},
          {"idempotents_central", s.idempotents_central},
          {"regular", s.regular},
          {"left_strongly_regular", s.left_strongly_regular},
          {"right_strongly_regular", s.right_strongly_regular},
          {"generalised_near_field", s.generalised_near_field},
          {"left_duo", s.left_duo},
          {"unit_regular", s.unit_regular},
          {"left_morphic", s.left_morphic}};
}

// Fields of one element as strings, in CSV column order.
std::vector<std::string> element_cells(const Analysis& A, const ElementProfile& p) {
  const NearRing& N = A.ring();
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  auto opt = [&](const std::optional<Elem>& w) { return w ? N.label(*w) : std::string("-"); };
  const std::string na = "n/a";
  std::vector<std::string> c;
  c.push_back(std::to_string(p.index));
  c.push_back(p.label);
  c.push_back(p.unital ? yn(p.is_unit()) : na);
  c.push_back(yn(p.is_idempotent));
  c.push_back(yn(p.is_central));
  c.push_back(std::to_string(p.nilpotency_index));
  c.push_back(opt(p.regular));
  c.push_back(p.unital ? opt(p.unit_regular) : na);
  c.push_back(opt(p.left_strongly_regular));
  c.push_back(opt(p.right_strongly_regular));
  c.push_back(p.morphic ? yn(p.is_left_morphic()) : na);
  c.push_back(p.is_left_morphic() ? N.label(p.morphic->witness) : (p.morphic ? "-" : na));
  c.push_back(std::to_string(p.left_orbit_size));
  c.push_back(std::to_string(p.left_ann_size));
  return c;
}

ojson witness_json(const std::optional<Elem>& w) { return w ? ojson(*w) : ojson(nullptr); }

ojson element_json(const Analysis& A, const ElementProfile& p) {
  const NearRing& N = A.ring();
  ojson j;
  j["index"] = p.index;
  j["label"] = p.label;
  j["unit"] = p.unital ? ojson(p.is_unit()) : ojson(nullptr);
  j["inverse"] = witness_json(p.inverse);
  j["idempotent"] = p.is_idempotent;
  j["central"] = p.is_central;
  j["nilpotency_index"] = p.nilpotency_index;
  j["regular_witness"] = witness_json(p.regular);
  j["unit_regular_witness"] = p.unital ? witness_json(p.unit_regular) : ojson(nullptr);
  j["lsr_witness"] = witness_json(p.left_strongly_regular);
  j["rsr_witness"] = witness_json(p.right_strongly_regular);
  if (p.morphic) {
    j["left_morphic"] = p.is_left_morphic();
    j["morphic_status"] = to_string(p.morphic->status);
    j["morphic_witness"] = p.is_left_morphic() ? ojson(p.morphic->witness) : ojson(nullptr);
  } else {
    j["left_morphic"] = nullptr;
    j["morphic_status"] = "n/a";
    j["morphic_witness"] = nullptr;
  }
  j["left_orbit"] = set_json(N, A.left_orbit(p.index));
  j["left_annihilator"] = set_json(N, A.left_ann(p.index));
  j["right_orbit"] = set_json(N, A.right_orbit(p.index));
  j["right_annihilator"] = set_json(N, A.right_ann(p.index));
  return j;
}

ojson structure_json(const Analysis& A) {
  ojson j;
  for (const auto& [name, f] : structure_flags(A.structure())) {
    if (!f) {
      j[name] = nullptr;
      continue;
    }
    ojson e;
    e["holds"] = f->holds;
    e["witness"] = f->holds ? ojson(nullptr) : ojson(f->witness);
    j[name] = e;
  }
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void text_profile(std::ostream& os, const Analysis& A, const ElementProfile& p) {
  const NearRing& N = A.ring();
  const auto c = element_cells(A, p);
  os << "element " << p.label << " (index " << p.index << ")\n";
  os << "  Na = " << set_text(N, A.left_orbit(p.index)) << "\n";
  os << "  (0:_l " << p.label << ") = " << set_text(N, A.left_ann(p.index)) << "\n";
  os << "  aN = " << set_text(N, A.right_orbit(p.index)) << "\n";
  os << "  (0:_r " << p.label << ") = " << set_text(N, A.right_ann(p.index)) << "\n";
  os << "  unit: " << c[2];
  if (p.inverse) os << " (inverse " << N.label(*p.inverse) << ")";
  os << "\n  idempotent: " << c[3] << "\n  central: " << c[4] << "\n  nilpotency: " << c[5]
     << "\n  regular witness: " << c[6] << "\n  unit-regular witness: " << c[7]
     << "\n  left strongly regular witness: " << c[8]
     << "\n  right strongly regular witness: " << c[9] << "\n  left morphic: " << c[10];
  if (p.is_left_morphic()) os << " (witness " << c[11] << ")";
  else if (p.morphic) os << " (" << to_string(p.morphic->status) << ")";
  os << "\n";
}

}  // namespace

std::string render_classification(const Analysis& A, Format f, std::optional<Elem> element) {
  const NearRing& N = A.ring();
  std::vector<const ElementProfile*> rows;
  if (element) rows.push_back(&A.profile(*element));
  else
    for (const auto& p : A.profiles()) rows.push_back(&p);

  std::ostringstream os;
  switch (f) {
    case Format::json: {
      ojson j;
      j["nearring"] = N.name();
      j["order"] = N.order();
      j["unity"] = N.one() ? ojson(*N.one()) : ojson(nullptr);
      j["labels"] = N.labels();
      j["flags"] = flag_names(N);
      j["structure"] = structure_json(A);
      ojson els = ojson::array();
      for (const auto* p : rows) els.push_back(element_json(A, *p));
      j["elements"] = els;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << kElementCsvHeader << "\n";
      for (const auto* p : rows) {
        const auto c = element_cells(A, *p);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << csv_quote(c[i]);
        os << "\n";
      }
      break;
    }
    case Format::text: {
      os << "near-ring " << N.name() << " (order " << N.order() << ")\n";
      os << "flags: " << flag_names(N) << "\n";
      if (N.one()) os << "unity: " << N.label(*N.one()) << "\n";
      if (element) {
        text_profile(os, A, *rows.front());
        break;
      }
      os << "structure:\n";
      for (const auto& [name, fl] : structure_flags(A.structure())) {
        os << "  " << name << ": ";
        if (!fl) os << "n/a";
        else if (fl->holds) os << "yes";
        else os << "no" << (fl->witness.empty() ? "" : " " + labels_of(N, fl->witness));
        os << "\n";
      }
      os << "elements:\n";
      for (const auto* p : rows) text_profile(os, A, *p);
      break;
    }
  }
  return os.str();
}

namespace {

ojson cell_json(const TheoremReport& r) {
  ojson j;
  j["nearring"] = r.nearring;
  j["theorem"] = r.theorem;
  j["status"] = to_string(r.status);
  j["instantiations"] = r.instantiations;
  if (r.counterexample) {
    ojson c;
    c["elements"] = r.counterexample->elements;
    c["clause"] = r.counterexample->clause;
    j["counterexample"] = c;
  }
  if (r.status == TheoremStatus::not_applicable) j["hypothesis"] = r.hypothesis_witness;
  if (r.status == TheoremStatus::error) j["error"] = r.error;
  return j;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return v.empty() ? "(none)" : s;
}

}  // namespace

std::string render_suite(const SuiteReport& s, Format f, bool chain_summary) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      ojson j;
      ojson cells = ojson::array();
      for (const auto& c : s.cells) cells.push_back(cell_json(c));
      j["cells"] = cells;
      j["aggregate"] = s.aggregate_pass ? "pass" : "fail";
      j["errors"] = s.errors;
      if (chain_summary) {
        ojson chain = ojson::array();
        for (const auto& r : s.chain) {
          ojson row;
          row["nearring"] = r.nearring;
          row["in_scope"] = r.in_scope;
          row["left_strongly_regular"] = r.left_strongly_regular;
          row["left_morphic_regular"] = r.left_morphic_regular;
          row["unit_regular"] = r.unit_regular;
          chain.push_back(row);
        }
        ojson summary;
        summary["members"] = chain;
        summary["lmr_not_lsr"] = s.lmr_not_lsr;
        summary["ur_not_lmr"] = s.ur_not_lmr;
        summary["inclusion_violations"] = s.inclusion_violations;
        j["chain"] = summary;
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "nearring,theorem,status,instantiations,elements,clause\n";
      for (const auto& c : s.cells) {
        std::string el, clause;
        if (c.counterexample) {
          for (std::size_t i = 0; i < c.counterexample->elements.size(); ++i)
            el += (i ? " " : "") + std::to_string(c.counterexample->elements[i]);
          clause = c.counterexample->clause;
        } else if (c.status == TheoremStatus::not_applicable) {
          clause = c.hypothesis_witness;
        } else if (c.status == TheoremStatus::error) {
          clause = c.error;
        }
        os << csv_quote(c.nearring) << "," << c.theorem << "," << to_string(c.status) << ","
           << c.instantiations << "," << el << "," << csv_quote(clause) << "\n";
      }
      break;
    }
    case Format::text: {
      std::size_t pass = 0, fail = 0, na = 0;
      for (const auto& c : s.cells) {
        os << c.nearring << "  " << c.theorem << "  " << to_string(c.status) << "  ("
           << c.instantiations << " instantiations)";
        if (c.counterexample) {
          os << "  counterexample [";
          for (std::size_t i = 0; i < c.counterexample->elements.size(); ++i)
            os << (i ? "," : "") << c.counterexample->elements[i];
          os << "]: " << c.counterexample->clause;
        }
        if (c.status == TheoremStatus::not_applicable) os << "  " << c.hypothesis_witness;
        if (c.status == TheoremStatus::error) os << "  " << c.error;
        os << "\n";
        pass += c.status == TheoremStatus::pass;
        fail += c.status == TheoremStatus::fail;
        na += c.status == TheoremStatus::not_applicable;
      }
      os << "aggregate: " << (s.aggregate_pass ? "pass" : "fail") << " (" << pass << " pass, "
         << fail << " fail, " << na << " not_applicable, " << s.errors << " error)\n";
      if (chain_summary) {
        os << "inclusion chain (unital zero-symmetric members):\n";
        for (const auto& r : s.chain) {
          if (!r.in_scope) continue;
          os << "  " << r.nearring << ":";
          if (r.left_strongly_regular) os << " left_strongly_regular";
          if (r.left_morphic_regular) os << " left_morphic_regular";
          if (r.unit_regular) os << " unit_regular";
          if (!r.unit_regular) os << " none";
          os << "\n";
        }
        os << "  left morphic regular but not left strongly regular: " << join(s.lmr_not_lsr) << "\n";
        os << "  unit-regular but not left morphic regular: " << join(s.ur_not_lmr) << "\n";
        os << "  inclusion violations: " << join(s.inclusion_violations) << "\n";
      }
      break;
    }
  }
  return os.str();
}

DigestRow digest_row(const std::string& file, const Analysis& A) {
  const NearRing& N = A.ring();
  DigestRow r;
  r.file = file;
  r.name = N.name();
  r.order = N.order();
  r.flags = flag_names(N);
  r.unital = N.is_unital();
  for (const auto& p : A.profiles()) {
    r.units += p.is_unit();
    r.idempotents += p.is_idempotent;
    r.regular += p.is_regular();
    r.unit_regular += p.is_unit_regular();
    r.lsr += p.is_lsr();
    r.morphic += p.is_left_morphic();
  }
  return r;
}

std::string render_digest(const std::vector<DigestRow>& rows, Format f) {
  std::ostringstream os;
  auto counts = [](const DigestRow& r) {
    std::vector<std::string> c = {std::to_string(r.order),
                                  r.unital ? std::to_string(r.units) : "n/a",
                                  std::to_string(r.idempotents),
                                  std::to_string(r.regular),
                                  r.unital ? std::to_string(r.unit_regular) : "n/a",
                                  std::to_string(r.lsr),
                                  r.unital ? std::to_string(r.morphic) : "n/a"};
    return c;
  };
  switch (f) {
    case Format::json: {
      ojson a = ojson::array();
      for (const auto& r : rows) {
        ojson j;
        j["file"] = r.file;
        j["exit_code"] = r.exit_code;
        if (!r.error.empty()) {
          j["error"] = r.error;
        } else {
          j["name"] = r.name;
          j["order"] = r.order;
          j["flags"] = r.flags;
          auto opt = [&](std::size_t v) { return r.unital ? ojson(v) : ojson(nullptr); };
          j["units"] = opt(r.units);
          j["idempotents"] = r.idempotents;
          j["regular"] = r.regular;
          j["unit_regular"] = opt(r.unit_regular);
          j["left_strongly_regular"] = r.lsr;
          j["left_morphic"] = opt(r.morphic);
        }
        a.push_back(j);
      }
      os << a.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "file,status,name,order,units,idempotents,regular,unit_regular,lsr,morphic,flags\n";
      for (const auto& r : rows) {
        os << csv_quote(r.file) << ",";
        if (!r.error.empty()) {
          os << "error,,,,,,,,," << csv_quote(r.error) << "\n";
          continue;
        }
        os << "ok," << csv_quote(r.name);
        for (const auto& c : counts(r)) os << "," << c;
        os << "," << csv_quote(r.flags) << "\n";
      }
      break;
    }
    case Format::text: {
      for (const auto& r : rows) {
        if (!r.error.empty()) {
          os << r.file << ": ERROR (exit " << r.exit_code << ") " << r.error << "\n";
          continue;
        }
        const auto c = counts(r);
        os << r.file << ": " << r.name << " order " << c[0] << ", units " << c[1]
           << ", idempotents " << c[2] << ", regular " << c[3] << ", unit-regular " << c[4]
           << ", lsr " << c[5] << ", left morphic " << c[6] << "; " << r.flags << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace nearring
