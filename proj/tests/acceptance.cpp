// Acceptance run: one PASS/FAIL line per criterion. Thresholds are fixed
// here; the exit status is nonzero when any criterion fails.
//
// Usage: acceptance PATH_TO_CLI

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "nearring/build.hpp"
#include "nearring/catalog.hpp"
#include "nearring/classify.hpp"
#include "nearring/theorems.hpp"
#include "oracle.hpp"

using namespace nearring;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kC1Seconds = 1.0;
constexpr double kC2Seconds = 1.0;
constexpr double kC3Seconds = 10.0;
constexpr double kC4Seconds = 5.0;
constexpr double kC6Seconds = 60.0;
constexpr std::size_t kC7MinAssertions = 10000;
constexpr std::uint32_t kC7Seed = 20240601;

std::string cli;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Subset set_of(std::size_t n, std::initializer_list<Elem> xs) { return Subset(n, xs); }

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  Analysis A(builtin("klein4_ring"));
  const NearRing& N = A.ring();
  const Elem z = 0, a = *N.find("a"), b = *N.find("b"), c = *N.find("c");
  o.require(A.left_orbit(a) == set_of(4, {z, a}), "Na != {0,a}");
  o.require(A.left_ann(c) == set_of(4, {z, a}), "(0:_l c) != {0,a}");
  o.require(A.left_orbit(c) == set_of(4, {z, c}), "Nc != {0,c}");
  o.require(A.left_ann(a) == set_of(4, {z, c}), "(0:_l a) != {0,c}");
  o.require(A.left_ann(b) == set_of(4, {z}), "(0:_l b) != {0}");
  o.require(A.left_ann(z) == Subset::full(4) && A.left_orbit(b) == Subset::full(4),
            "(0:_l 0) = Nb = N fails");
  for (Elem x = 0; x < 4; ++x) o.require(A.morphic(x).is_morphic(), "element not left morphic");
  o.require(A.structure().is_left_morphic(), "structure not left morphic");
  // The tool itself must print the same sets for element a.
  const Run r = run_cli("classify builtin:klein4_ring --element a");
  o.require(r.code == 0, "cli exit code " + std::to_string(r.code));
  o.require(r.out.find("Na = {0,a}") != std::string::npos &&
                r.out.find("(0:_l a) = {0,c}") != std::string::npos &&
                r.out.find("left morphic: yes (witness c)") != std::string::npos,
            "cli profile of a differs");
  const double s = seconds_since(t0);
  o.require(s < kC1Seconds, "runtime " + std::to_string(s) + " s");
  if (o.ok) o.detail = "Na=(0:_l c)={0,a}, Nc=(0:_l a)={0,c}, (0:_l b)={0}, (0:_l 0)=Nb=N; all morphic";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  Analysis A(builtin("m0_z3"));
  const NearRing& N = A.ring();
  auto idx = [&](const char* l) { return *N.find(l); };
  o.require(N.order() == 9, "order != 9");
  o.require(A.units() == Subset(9, {idx("f6"), idx("f8")}), "units != {f6,f8}");
  std::vector<Elem> idem;
  for (const char* l : {"f1", "f3", "f4", "f5", "f6", "f9"}) idem.push_back(idx(l));
  o.require(A.idempotents() == idem, "idempotents != {f1,f3,f4,f5,f6,f9}");
  for (Elem x = 0; x < 9; ++x) o.require(A.profile(x).is_unit_regular(), "element not unit-regular");
  const Elem f5 = idx("f5");
  const Elem one_minus = N.sub(N.unity(), f5);
  // e(1-e) evaluated at input 2: value vector position 2.
  const auto values = m0_values(3, N.mul(f5, one_minus));
  o.require(values[2] != 0, "f5(1-f5) vanishes at 2");
  const auto st = idempotent_statements(A, f5);
  o.require(!st[3] && !st[4], "clauses (4)/(5) hold for f5");
  o.require(A.structure().is_unit_regular() && !A.structure().is_left_morphic(),
            "structure verdict is not unit-regular-but-not-left-morphic");
  const double s = seconds_since(t0);
  o.require(s < kC2Seconds, "runtime " + std::to_string(s) + " s");
  if (o.ok) o.detail = "units {f6,f8}, 6 idempotents, all unit-regular, f5(1-f5)(2) != 0, not left morphic";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  const NearRing N = builtin("ext_mat2f2_f2sq");
  o.require(N.order() == 64, "order != 64");
  o.require(N.is_unital() && !N.flags().zero_symmetric.holds, "not unital non-zero-symmetric");
  const NearRing R = builtin("mat2_f2");
  oracle::Tables TR(R), TN(N);
  auto vec_neg_act = [&](Elem u, Elem v) {
    // u acting on column vector v = (v1, v2) at index 2 v1 + v2; -x = x over F2.
    const unsigned p = u >> 3 & 1, q = u >> 2 & 1, r = u >> 1 & 1, s = u & 1;
    const unsigned v1 = v >> 1 & 1, v2 = v & 1;
    return static_cast<Elem>(2 * ((p * v1 + q * v2) & 1) + ((r * v1 + s * v2) & 1));
  };
  Analysis A(N);
  std::size_t nonmorphic = 0;
  for (Elem x = 0; x < 64; ++x) {
    const Elem a = x / 4, m = x % 4;
    std::optional<Elem> unit;
    for (Elem u = 0; u < 16 && !unit; ++u)
      if (TR.is_unit(u) && TR.mul[TR.mul[a][u]][a] == a) unit = u;
    o.require(unit.has_value(), "no unit u with aua = a in R");
    if (!unit) break;
    const Elem w = *unit * 4 + vec_neg_act(*unit, m);
    o.require(TN.is_unit(w), "<u,-um> is not a unit");
    o.require(N.mul(x, w, x) == x, "<a,m><u,-um><a,m> != <a,m>");
    if (m != 0) {
      o.require(!A.morphic(x).is_morphic() && !TN.morphic(x), "<a,m> with m != 0 is left morphic");
      ++nonmorphic;
    }
  }
  o.require(nonmorphic == 48, "expected 48 elements with m != 0");
  const double s = seconds_since(t0);
  o.require(s < kC3Seconds, "runtime " + std::to_string(s) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << "order 64 unital, not zero-symmetric; 64/64 unit-regular via <u,-um>; " << nonmorphic
       << "/48 with m != 0 not left morphic; " << s << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  Analysis A(builtin("mat2_f2"));
  const auto& st = A.structure();
  o.require(A.ring().is_ring(), "not a ring");
  o.require(st.regular.holds, "not regular");
  o.require(st.is_left_morphic(), "not left morphic");
  o.require(!st.left_strongly_regular.holds, "left strongly regular");
  const Elem w = st.left_strongly_regular.witness.empty() ? 0 : st.left_strongly_regular.witness[0];
  o.require(A.profile(w).nilpotency_index == 2, "lsr witness is not nilpotent of index 2");
  o.require(st.left_duo && !st.left_duo->holds && st.left_duo_counterexample, "left duo");
  if (st.left_duo_counterexample) {
    const Subset& L = *st.left_duo_counterexample;
    auto all = enumerate_left_ideals(A.ring());
    bool minimal = true;
    for (const auto& I : all.ideals)
      if (I.size() > 1 && I.size() < L.size() && I.is_subset_of(L)) minimal = false;
    o.require(minimal, "left ideal witnessing non-duo is not minimal");
    o.require(is_ideal(A.ring(), L).kind == IdealKind::left_ideal, "witness is two-sided");
  }
  const double s = seconds_since(t0);
  o.require(s < kC4Seconds, "runtime " + std::to_string(s) + " s");
  if (o.ok)
    o.detail = "regular left morphic ring; lsr fails at " + A.ring().label(w) +
               " (nilpotent, index 2); minimal left ideal " +
               st.left_duo_counterexample->to_string() + " not two-sided";
  return o;
}

const ChainRow* row_of(const SuiteReport& s, const std::string& name) {
  for (const auto& r : s.chain)
    if (r.nearring == name) return &r;
  return nullptr;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Outcome criterion5() {
  Outcome o;
  const SuiteReport s = run_suite(default_corpus());
  const ChainRow* k = row_of(s, "klein4_ring");
  const ChainRow* m = row_of(s, "mat2_f2");
  const ChainRow* z = row_of(s, "m0_z3");
  o.require(k && k->left_strongly_regular && k->left_morphic_regular && k->unit_regular,
            "klein4_ring not in all three classes");
  o.require(m && !m->left_strongly_regular && m->left_morphic_regular && m->unit_regular,
            "mat2_f2 not in LMR \\ LSR");
  o.require(z && !z->left_strongly_regular && !z->left_morphic_regular && z->unit_regular,
            "m0_z3 not in UR \\ LMR");
  o.require(contains(s.lmr_not_lsr, "mat2_f2") && contains(s.ur_not_lmr, "m0_z3"),
            "strictness witnesses missing");
  o.require(s.inclusion_violations.empty(), "inclusion violated");
  const Run r = run_cli("verify builtin:default");
  o.require(r.code == 0, "cli exit code " + std::to_string(r.code));
  o.require(r.out.find("klein4_ring: left_strongly_regular left_morphic_regular unit_regular") !=
                    std::string::npos &&
                r.out.find("not left strongly regular: mat2_f2") != std::string::npos &&
                r.out.find("m0_z3: unit_regular\n") != std::string::npos,
            "cli summary does not name the chain witnesses");
  if (o.ok) o.detail = "klein4_ring in LSR; mat2_f2 in LMR \\ LSR; m0_z3 in UR \\ LMR; cli exit 0";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto corpus = default_corpus();
  const SuiteReport s = run_suite(corpus);
  std::size_t pass = 0, na = 0;
  for (const auto& c : s.cells) {
    pass += c.status == TheoremStatus::pass;
    na += c.status == TheoremStatus::not_applicable;
    o.require(c.status == TheoremStatus::pass || c.status == TheoremStatus::not_applicable,
              c.nearring + " " + c.theorem + " is " + to_string(c.status));
  }
  o.require(s.cells.size() == corpus.size() * theorem_catalog().size(), "missing cells");

  // Witness search against brute-force module isomorphism on every builtin of order <= 8.
  std::size_t compared = 0, agreed = 0;
  for (const auto& name : catalog_names()) {
    const NearRing N = builtin(name);
    if (N.order() > 8 || !N.is_unital()) continue;
    for (Elem a = 0; a < N.order(); ++a) {
      ++compared;
      const bool w = is_left_morphic(N, a).is_morphic();
      const bool i = morphic_by_isomorphism(N, a, IsoMode::bruteforce).holds();
      agreed += w == i;
    }
  }
  o.require(compared > 0 && agreed == compared, "lemma1 cross-oracle disagreement");

  // u = xax + b is a unit with aua = a wherever thm62 applies.
  std::size_t constructs = 0;
  for (const auto& N : corpus) {
    if (!N.is_unital() || !N.flags().zero_symmetric.holds) continue;
    Analysis A(N);
    if (!A.structure().is_left_morphic() || !A.structure().regular.holds) continue;
    oracle::Tables T(N);
    for (Elem a = 0; a < N.order(); ++a) {
      const Elem x = *A.profile(a).regular, b = A.morphic(a).witness;
      const Elem u = T.add[T.mul[T.mul[x][a]][x]][b];
      o.require(T.is_unit(u) && T.mul[T.mul[a][u]][a] == a,
                N.name() + ": u = xax + b fails at " + N.label(a));
      ++constructs;
    }
  }
  const double sec = seconds_since(t0);
  o.require(sec < kC6Seconds, "runtime " + std::to_string(sec) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << s.cells.size() << " cells: " << pass << " pass, " << na << " not_applicable, 0 fail; "
       << agreed << "/" << compared << " lemma1 agreements; " << constructs
       << " thm62 constructs verified; " << sec << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(kC7Seed);
  const auto corpus = default_corpus();
  std::vector<Analysis> analyses;
  for (const auto& N : corpus) analyses.emplace_back(N);
  std::size_t assertions = 0, violations = 0;
  auto check = [&](bool cond) {
    ++assertions;
    if (!cond) ++violations;
  };
  std::uniform_int_distribution<std::size_t> pick(0, analyses.size() - 1);
  while (assertions < 2 * kC7MinAssertions) {
    const Analysis& A = analyses[pick(rng)];
    const NearRing& N = A.ring();
    const std::size_t n = N.order();
    std::uniform_int_distribution<Elem> el(0, static_cast<Elem>(n - 1));
    const Elem a = el(rng);

    check(A.left_orbit(a).size() * A.left_ann(a).size() == n);
    check(is_N_ideal(N, A.regular_module(), A.left_ann(a)).is_ideal());

    const auto& units = A.units().members();
    std::uniform_int_distribution<std::size_t> upick(0, units.size() - 1);
    const Elem u = units[upick(rng)];
    const Elem ui = *A.inverse(u);
    if (A.morphic(a).is_morphic()) {
      check(A.morphic(N.mul(u, a)).is_morphic());
      check(A.morphic(N.mul(a, u)).is_morphic());
      const Elem b = A.morphic(a).witness;
      check(N.mul(a, b) == 0 && N.mul(b, a) == 0);
    }
    // Unit-translation clauses.
    check(A.left_orbit(u).size() == n);
    check(A.left_ann(a) == A.left_ann(N.mul(a, ui)));
    Subset shifted(n), image(n);
    A.left_ann(a).for_each([&](Elem x) {
      shifted.insert(N.mul(x, ui));
      image.insert(N.mul(x, u));
    });
    check(shifted == A.left_ann(N.mul(u, a)));
    bool iso = image.size() == A.left_ann(a).size();
    const Elem r = el(rng);
    A.left_ann(a).for_each([&](Elem x) {
      iso = iso && N.mul(N.mul(r, x), u) == N.mul(r, N.mul(x, u));
    });
    check(iso);
  }
  o.require(assertions >= kC7MinAssertions, "too few assertions");
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) o.detail = std::to_string(assertions) + " assertions, 0 violations, seed " + std::to_string(kC7Seed);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Run a = run_cli("verify builtin:default --format json");
  const Run b = run_cli("verify builtin:default --format json");
  o.require(a.code == 0 && b.code == 0, "nonzero exit");
  o.require(!a.out.empty() && a.out == b.out, "reports differ");
  if (o.ok) o.detail = std::to_string(a.out.size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance PATH_TO_CLI\n";
    return 2;
  }
  cli = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 klein4_ring annihilators and left morphic", criterion1},
      {"2 m0_z3 units, idempotents, unit-regular not left morphic", criterion2},
      {"3 ext_mat2f2_f2sq unit-regular via <u,-um>, m != 0 not morphic", criterion3},
      {"4 mat2_f2 regular left morphic, not lsr, not left duo", criterion4},
      {"5 inclusion chain over default corpus", criterion5},
      {"6 theorem regression suite", criterion6},
      {"7 randomized property suites", criterion7},
      {"8 deterministic verify JSON", criterion8},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << "\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
