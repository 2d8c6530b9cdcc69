#include "nearring/theorems.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nearring/build.hpp"
#include "nearring/catalog.hpp"

namespace nearring {

std::string to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::pass: return "pass";
    case TheoremStatus::fail: return "fail";
    case TheoremStatus::not_applicable: return "not_applicable";
    case TheoremStatus::error: return "error";
  }
  return "?";
}

namespace {

// Which standing assumptions a result needs before its own hypothesis.
enum class Gate { unital, unital_zero_symmetric };

class Eval {
 public:
  Eval(const Analysis& A, std::string id) : A_(A), N_(A.ring()) {
    r_.nearring = N_.name();
    r_.theorem = std::move(id);
  }

  const Analysis& A() const { return A_; }
  const NearRing& N() const { return N_; }
  std::size_t n() const { return N_.order(); }
  const StructureProfile& S() const { return A_.structure(); }
  bool morphic(Elem a) const { return A_.morphic(a).is_morphic(); }
  Elem one_minus(Elem e) const { return N_.add(N_.unity(), N_.neg(e)); }

  void count(std::size_t k = 1) { r_.instantiations += k; }

  // Records the first failure only; later calls are ignored.
  bool fail(std::vector<Elem> elements, std::string clause) {
    if (r_.status != TheoremStatus::fail) {
      r_.status = TheoremStatus::fail;
      r_.counterexample = Counterexample{std::move(elements), std::move(clause)};
    }
    return false;
  }
  bool failed() const { return r_.status == TheoremStatus::fail; }

  TheoremReport not_applicable(std::string why) {
    r_.status = TheoremStatus::not_applicable;
    r_.hypothesis_witness = std::move(why);
    r_.instantiations = 0;
    return r_;
  }
  TheoremReport done() { return r_; }

  std::string label(Elem x) const { return N_.label(x); }

 private:
  const Analysis& A_;
  const NearRing& N_;
  TheoremReport r_;
};

std::string flag_text(const char* name, const Flag& f, const NearRing& N) {
  std::ostringstream os;
  os << name << " fails";
  if (!f.witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < f.witness.size(); ++i)
      os << (i ? "," : "") << N.label(f.witness[i]);
    os << ')';
  }
  return os.str();
}

std::string bools(std::initializer_list<bool> v) {
  std::string s;
  for (bool b : v) s += b ? 'T' : 'F';
  return s;
}

bool all_equal(std::initializer_list<bool> v) {
  return std::all_of(v.begin(), v.end(), [&](bool b) { return b == *v.begin(); });
}

// ---------------------------------------------------------------------------

TheoremReport lemma1_equiv(Eval& ev) {
  const auto& A = ev.A();
  const auto mode = ev.n() <= A.caps().iso_bruteforce ? IsoMode::bruteforce : IsoMode::generator;
  for (Elem a = 0; a < ev.n(); ++a) {
    ev.count();
    const auto& w = A.morphic(a);
    if (w.is_morphic() && !(A.left_orbit(a) == A.left_ann(w.witness) &&
                            A.left_orbit(w.witness) == A.left_ann(a)))
      return ev.fail({a, w.witness}, "morphic witness does not satisfy Na=(0:_l b), Nb=(0:_l a)"),
             ev.done();
    bool iso = morphic_by_isomorphism(ev.N(), a, mode, A.caps()).holds();
    if (iso != w.is_morphic())
      return ev.fail({a}, "witness search disagrees with module isomorphism"), ev.done();
  }
  return ev.done();
}

TheoremReport lemma10(Eval& ev) {
  const auto& A = ev.A();
  const auto& N = ev.N();
  const Subset all = Subset::full(ev.n());
  for (Elem a = 0; a < ev.n(); ++a)
    for (Elem u : A.units().members()) {
      ev.count(4);
      const Elem uinv = *A.inverse(u);
      if (!(A.left_orbit(u) == all)) return ev.fail({a, u}, "(1) Nu != N"), ev.done();
      if (!(A.left_ann(a) == A.left_ann(N.mul(a, uinv))))
        return ev.fail({a, u}, "(2) (0:_l a) != (0:_l a u^-1)"), ev.done();
      const Subset& L = A.left_ann(a);
      Subset translate(ev.n()), image(ev.n());
      L.for_each([&](Elem x) {
        translate.insert(N.mul(x, uinv));
        image.insert(N.mul(x, u));
      });
      if (!(translate == A.left_ann(N.mul(u, a))))
        return ev.fail({a, u}, "(3) (0:_l a)u^-1 != (0:_l ua)"), ev.done();
      bool iso = image.size() == L.size();
      auto ls = L.members();
      for (Elem x : ls)
        for (Elem y : ls)
          if (iso && N.mul(N.add(x, y), u) != N.add(N.mul(x, u), N.mul(y, u))) iso = false;
      for (Elem r = 0; r < ev.n() && iso; ++r)
        for (Elem x : ls)
          if (N.mul(N.mul(r, x), u) != N.mul(r, N.mul(x, u))) iso = false;
      if (!iso) return ev.fail({a, u}, "(4) x -> xu is not an N-isomorphism onto (0:_l a)u"), ev.done();
    }
  return ev.done();
}

TheoremReport prop2(Eval& ev) {
  const auto& A = ev.A();
  for (Elem a = 0; a < ev.n(); ++a) {
    if (!ev.morphic(a)) continue;
    for (Elem u : A.units().members()) {
      ev.count(2);
      if (!ev.morphic(ev.N().mul(u, a))) return ev.fail({a, u}, "ua not left morphic"), ev.done();
      if (!ev.morphic(ev.N().mul(a, u))) return ev.fail({a, u}, "au not left morphic"), ev.done();
    }
  }
  return ev.done();
}

TheoremReport prop64(Eval& ev) {
  const auto& A = ev.A();
  for (Elem a = 0; a < ev.n(); ++a) {
    if (!ev.morphic(a)) continue;
    ev.count();
    bool c1 = A.left_ann(a).size() == 1;
    bool c2 = A.left_orbit(a).size() == ev.n();
    bool c3 = A.is_unit(a);
    if (!all_equal({c1, c2, c3}))
      return ev.fail({a}, "(0:_l a)={0}, Na=N, a unit disagree: " + bools({c1, c2, c3})), ev.done();
  }
  return ev.done();
}

const Provenance* product_provenance(const NearRing& N, std::optional<NearRing>& holder) {
  const Provenance* p = N.provenance();
  if (!p) {
    holder = recognise(N);
    if (holder) p = holder->provenance();
  }
  return p && p->kind == Provenance::Kind::product ? p : nullptr;
}

TheoremReport product_morphic(Eval& ev) {
  std::optional<NearRing> holder;
  const Provenance* p = product_provenance(ev.N(), holder);
  if (!p) return ev.not_applicable("not a recorded direct product");
  std::vector<Analysis> parts;
  std::vector<std::size_t> orders;
  for (const auto& f : p->factors) {
    if (!f.is_unital()) return ev.not_applicable("factor " + f.name() + " is not unital");
    parts.emplace_back(f, ev.A().exec(), ev.A().caps());
    orders.push_back(f.order());
  }
  const auto& A = ev.A();
  for (Elem a = 0; a < ev.n(); ++a) {
    ev.count(2);
    auto pa = product_parts(orders, a);
    bool factors_morphic = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
      factors_morphic = factors_morphic && parts[i].morphic(pa[i]).is_morphic();
    if (factors_morphic != ev.morphic(a))
      return ev.fail({a}, "morphic in product differs from morphic in every factor"), ev.done();
    for (Elem x = 0; x < ev.n(); ++x) {
      auto px = product_parts(orders, x);
      bool in_factors = true;
      for (std::size_t i = 0; i < parts.size(); ++i)
        in_factors = in_factors && parts[i].left_ann(pa[i]).contains(px[i]);
      if (in_factors != A.left_ann(a).contains(x))
        return ev.fail({a, x}, "(0:_l a) is not the product of the factor annihilators"), ev.done();
    }
  }
  ev.count();
  bool all_factors = std::all_of(parts.begin(), parts.end(),
                                 [](const Analysis& F) { return F.structure().is_left_morphic(); });
  if (all_factors != ev.S().is_left_morphic())
    return ev.fail({}, "product left morphic differs from all factors left morphic"), ev.done();
  return ev.done();
}

TheoremReport ccc_decomposition(Eval& ev) {
  const auto& S = ev.S();
  if (!S.generalised_near_field)
    return ev.not_applicable(flag_text("regular and subcommutative", S.generalised_near_field, ev.N()));
  const auto& A = ev.A();
  const Subset zero(ev.n(), {0});
  for (Elem a = 0; a < ev.n(); ++a) {
    ev.count(4);
    if (!A.left_orbit_ideal(a).is_ideal()) return ev.fail({a}, "Na is not an N-ideal"), ev.done();
    if (!((A.left_ann(a) & A.left_orbit(a)) == zero))
      return ev.fail({a}, "(0:_l a) and Na meet outside 0"), ev.done();
    Subset sum(ev.n());
    A.left_ann(a).for_each([&](Elem l) {
      A.left_orbit(a).for_each([&](Elem k) { sum.insert(ev.N().add(l, k)); });
    });
    if (sum.size() != ev.n()) return ev.fail({a}, "(0:_l a) + Na != N"), ev.done();
    if (!ev.morphic(a)) return ev.fail({a}, "a not left morphic"), ev.done();
  }
  return ev.done();
}

template <typename Pred>
TheoremReport all_elements(Eval& ev, Pred&& ok, const char* clause) {
  for (Elem a = 0; a < ev.n(); ++a) {
    ev.count();
    if (!ok(a)) return ev.fail({a}, clause), ev.done();
  }
  return ev.done();
}

TheoremReport wsw_morphic(Eval& ev) {
  if (!ev.S().weakly_divisible)
    return ev.not_applicable(flag_text("weakly divisible", ev.S().weakly_divisible, ev.N()));
  return all_elements(ev, [&](Elem a) { return ev.morphic(a); }, "a not left morphic");
}

TheoremReport lemma213(Eval& ev) {
  const auto& S = ev.S();
  if (ev.n() < 2) return ev.not_applicable("zero near-ring");
  if (!S.regular) return ev.not_applicable(flag_text("regular", S.regular, ev.N()));
  ev.count();
  if (S.reduced.holds != S.idempotents_central.holds) {
    auto w = S.reduced.holds ? S.idempotents_central.witness : S.reduced.witness;
    return ev.fail(w, "reduced, idempotents central disagree: " +
                          bools({S.reduced.holds, S.idempotents_central.holds})),
           ev.done();
  }
  return ev.done();
}

TheoremReport lemma_hdt(Eval& ev) {
  const auto& S = ev.S();
  ev.count();
  bool c1 = S.left_strongly_regular.holds;
  bool c2 = S.regular.holds && S.reduced.holds;
  bool c3 = S.regular.holds && S.idempotents_central.holds;
  if (!all_equal({c1, c2, c3}))
    return ev.fail({}, "lsr, regular+reduced, regular+central idempotents disagree: " +
                           bools({c1, c2, c3})),
           ev.done();
  return ev.done();
}

bool lsr_gate(Eval& ev, TheoremReport& out) {
  if (ev.S().left_strongly_regular) return true;
  out = ev.not_applicable(flag_text("left strongly regular", ev.S().left_strongly_regular, ev.N()));
  return false;
}

TheoremReport lemma13(Eval& ev) {
  TheoremReport na;
  if (!lsr_gate(ev, na)) return na;
  const auto& N = ev.N();
  for (Elem a = 0; a < ev.n(); ++a) {
    const Elem sq = N.mul(a, a);
    for (Elem x = 0; x < ev.n(); ++x) {
      if (N.mul(x, sq) != a) continue;
      ev.count();
      if (N.mul(a, x, a) != a) return ev.fail({a, x}, "a = x a^2 but a != a x a"), ev.done();
      if (N.mul(a, x) != N.mul(x, a)) return ev.fail({a, x}, "a = x a^2 but ax != xa"), ev.done();
    }
  }
  return ev.done();
}

TheoremReport lemma_ffff(Eval& ev) {
  TheoremReport na;
  if (!lsr_gate(ev, na)) return na;
  return all_elements(ev, [&](Elem a) { return ev.A().profile(a).is_unit_regular(); },
                      "a not unit-regular");
}

TheoremReport prop_ff_square(Eval& ev) {
  TheoremReport na;
  if (!lsr_gate(ev, na)) return na;
  return all_elements(
      ev, [&](Elem a) { return ev.A().profile(ev.N().mul(a, a)).is_regular(); },
      "a^2 not regular");
}

TheoremReport prop_ff_morphic(Eval& ev) {
  TheoremReport na;
  if (!lsr_gate(ev, na)) return na;
  return all_elements(ev, [&](Elem a) { return ev.morphic(a); }, "a not left morphic");
}

TheoremReport lemma_this_thm217(Eval& ev) {
  const auto& A = ev.A();
  const auto& N = ev.N();
  for (Elem e : A.idempotents()) {
    ev.count(7);
    auto s = idempotent_statements(A, e);
    if (!std::all_of(s.begin(), s.end(), [&](bool b) { return b == s[0]; }))
      return ev.fail({e}, "statements (1)-(7) disagree: " +
                              bools({s[0], s[1], s[2], s[3], s[4], s[5], s[6]})),
             ev.done();
    if (s[0]) {
      const Elem f = ev.one_minus(e);
      if (ev.one_minus(f) != e) return ev.fail({e}, "1-(1-e) != e"), ev.done();
      if (!(A.left_orbit(f) == A.left_ann(e))) return ev.fail({e}, "N(1-e) != (0:_l e)"), ev.done();
    }
  }
  (void)N;
  return ev.done();
}

TheoremReport prop_cccxi(Eval& ev) {
  const auto& S = ev.S();
  if (!S.boolean) return ev.not_applicable(flag_text("boolean", S.boolean, ev.N()));
  const auto& f = ev.N().flags();
  ev.count(4);
  if (!f.abelian_add) return ev.fail(f.abelian_add.witness, "(N,+) not abelian"), ev.done();
  if (!f.left_distributive)
    return ev.fail(f.left_distributive.witness, "left distributivity fails"), ev.done();
  if (!f.commutative_mul)
    return ev.fail(f.commutative_mul.witness, "multiplication not commutative"), ev.done();
  if (!S.is_left_morphic())
    return ev.fail(S.left_morphic->witness, "a not left morphic"), ev.done();
  return ev.done();
}

TheoremReport prop226(Eval& ev) {
  const auto& S = ev.S();
  if (!S.left_duo)
    throw CapExceeded("left duo undecided: ideal enumeration is capped at order " +
                      std::to_string(ev.A().caps().ideal_enumeration));
  ev.count();
  bool c1 = S.reduced.holds && S.is_left_morphic();
  bool c2 = S.left_strongly_regular.holds;
  bool c3 = S.regular.holds && S.left_duo->holds;
  if (!all_equal({c1, c2, c3}))
    return ev.fail({}, "reduced+left morphic, lsr, regular+left duo disagree: " + bools({c1, c2, c3})),
           ev.done();
  return ev.done();
}

TheoremReport thm62(Eval& ev) {
  const auto& S = ev.S();
  if (!S.is_left_morphic())
    return ev.not_applicable(flag_text("left morphic", *S.left_morphic, ev.N()));
  if (!S.regular) return ev.not_applicable(flag_text("regular", S.regular, ev.N()));
  const auto& A = ev.A();
  const auto& N = ev.N();
  for (Elem a = 0; a < ev.n(); ++a) {
    ev.count(2);
    if (!A.profile(a).is_unit_regular()) return ev.fail({a}, "a not unit-regular"), ev.done();
    const Elem x = *A.profile(a).regular;
    const Elem b = A.morphic(a).witness;
    const Elem u = N.add(N.mul(x, a, x), b);
    if (!A.is_unit(u)) return ev.fail({a, x, b, u}, "u = xax + b is not a unit"), ev.done();
    if (N.mul(a, u, a) != a) return ev.fail({a, x, b, u}, "a != a u a for u = xax + b"), ev.done();
  }
  return ev.done();
}

TheoremReport prop_tttt(Eval& ev) {
  const auto& S = ev.S();
  if (!S.has_ifp) return ev.not_applicable(flag_text("IFP", S.has_ifp, ev.N()));
  ev.count();
  bool c1 = S.left_strongly_regular.holds;
  bool c2 = S.is_left_morphic_regular();
  bool c3 = S.is_unit_regular();
  if (!all_equal({c1, c2, c3}))
    return ev.fail({}, "lsr, left morphic+regular, unit-regular disagree: " + bools({c1, c2, c3})),
           ev.done();
  return ev.done();
}

TheoremReport ehrlich_T(Eval& ev) {
  const auto& S = ev.S();
  if (!S.is_ring) return ev.not_applicable(flag_text("ring", S.is_ring, ev.N()));
  ev.count();
  bool ur = S.is_unit_regular();
  bool rm = S.is_left_morphic_regular();
  if (ur != rm)
    return ev.fail({}, "unit-regular, regular+left morphic disagree: " + bools({ur, rm})), ev.done();
  return ev.done();
}

bool recognised_as(const NearRing& N, const char* name) {
  if (N.name() == name && N.provenance()) return true;
  auto B = recognise(N);
  return B && B->name() == name;
}

TheoremReport ex20_claim(Eval& ev) {
  if (!recognised_as(ev.N(), "m0_z3")) return ev.not_applicable("not M0(Z3)");
  const auto& S = ev.S();
  ev.count(2);
  if (!S.is_unit_regular()) return ev.fail(S.unit_regular->witness, "a not unit-regular"), ev.done();
  if (S.is_left_morphic()) return ev.fail({}, "every element left morphic"), ev.done();
  return ev.done();
}

TheoremReport ex20c_claim(Eval& ev) {
  const NearRing& N = ev.N();
  std::optional<NearRing> holder;
  const Provenance* p = N.provenance();
  if (!p || p->kind != Provenance::Kind::extension) {
    holder = recognise(N);
    p = holder ? holder->provenance() : nullptr;
  }
  if (!p || p->kind != Provenance::Kind::extension) return ev.not_applicable("not an R x M extension");
  const NearRing& R = p->ext->base;
  const FiniteGroup& G = p->ext->module_group;
  const Table& act = p->ext->action;
  const std::size_t m = G.order();
  auto Ru = units(R);
  std::vector<Elem> witness_unit(R.order());
  for (Elem a = 0; a < R.order(); ++a) {
    bool found = false;
    for (Elem u : Ru.units.members())
      if (R.mul(a, u, a) == a) {
        witness_unit[a] = u;
        found = true;
        break;
      }
    if (!found) return ev.not_applicable("base element " + R.label(a) + " is not unit-regular");
  }
  const Elem one = N.unity();
  for (Elem idx = 0; idx < ev.n(); ++idx) {
    const Elem a = static_cast<Elem>(idx / m), v = static_cast<Elem>(idx % m);
    const Elem u = witness_unit[a];
    const Elem w = static_cast<Elem>(u * m + G.neg(act(u, v)));
    const Elem winv = static_cast<Elem>(*Ru.inverse[u] * m + v);
    ev.count(3);
    if (N.mul(idx, w, idx) != idx) return ev.fail({idx, w}, "x <u,-um> x != x"), ev.done();
    if (N.mul(w, winv) != one || N.mul(winv, w) != one)
      return ev.fail({idx, w, winv}, "<u,-um> <u^-1,m> is not the unity"), ev.done();
    if (!ev.A().profile(idx).is_unit_regular()) return ev.fail({idx}, "x not unit-regular"), ev.done();
    if (v != 0) {
      ev.count();
      if (ev.morphic(idx)) return ev.fail({idx}, "<a,m> with m != 0 is left morphic"), ev.done();
    }
  }
  return ev.done();
}

TheoremReport ex_gggg_claim(Eval& ev) {
  if (!recognised_as(ev.N(), "mat2_f2")) return ev.not_applicable("not M2(F2)");
  const auto& S = ev.S();
  ev.count(5);
  if (!S.is_left_morphic()) return ev.fail(S.left_morphic->witness, "a not left morphic"), ev.done();
  if (!S.regular) return ev.fail(S.regular.witness, "a not regular"), ev.done();
  if (!S.left_duo || S.left_duo->holds) return ev.fail({}, "left duo"), ev.done();
  if (S.left_strongly_regular) return ev.fail({}, "left strongly regular"), ev.done();
  auto e12 = ev.N().find("[01;00]");
  if (!e12 || ev.A().profile(*e12).nilpotency_index != 2)
    return ev.fail({}, "[01;00] is not nilpotent of index 2"), ev.done();
  return ev.done();
}

struct Entry {
  TheoremInfo info;
  Gate gate;
  TheoremReport (*run)(Eval&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"lemma1_equiv", "a left morphic iff some b has Na = (0:_l b) and Nb = (0:_l a) iff N/Na ~ (0:_l a)"},
       Gate::unital, &lemma1_equiv},
      {{"lemma10", "for units u: Nu = N, (0:_l a) = (0:_l au^-1), (0:_l a)u^-1 = (0:_l ua), (0:_l a) ~ (0:_l a)u"},
       Gate::unital, &lemma10},
      {{"prop2", "a left morphic implies au and ua left morphic for every unit u"}, Gate::unital, &prop2},
      {{"prop64", "for left morphic a: (0:_l a) = 0 iff Na = N iff a is a unit"}, Gate::unital, &prop64},
      {{"product_morphic", "a direct product is left morphic iff every factor is"}, Gate::unital,
       &product_morphic},
      {{"ccc_decomposition", "regular subcommutative: N = (0:_l a) + Na directly and a left morphic"},
       Gate::unital_zero_symmetric, &ccc_decomposition},
      {{"wsw_morphic", "weakly divisible implies left morphic"}, Gate::unital_zero_symmetric, &wsw_morphic},
      {{"lemma213", "regular: reduced iff idempotents central"}, Gate::unital_zero_symmetric, &lemma213},
      {{"lemma_hdt", "left strongly regular iff regular and reduced iff regular with central idempotents"},
       Gate::unital_zero_symmetric, &lemma_hdt},
      {{"lemma13", "left strongly regular and a = xa^2 imply a = axa and ax = xa"},
       Gate::unital_zero_symmetric, &lemma13},
      {{"lemma_ffff", "left strongly regular implies unit-regular"}, Gate::unital_zero_symmetric, &lemma_ffff},
      {{"prop_ff_square", "left strongly regular implies a^2 regular"}, Gate::unital_zero_symmetric,
       &prop_ff_square},
      {{"prop_ff_morphic", "left strongly regular implies left morphic"}, Gate::unital_zero_symmetric,
       &prop_ff_morphic},
      {{"lemma_this_thm217", "idempotent e: seven characterisations of e left morphic agree"},
       Gate::unital_zero_symmetric, &lemma_this_thm217},
      {{"prop_cccxi", "boolean implies commutative left morphic ring"}, Gate::unital_zero_symmetric,
       &prop_cccxi},
      {{"prop226", "reduced left morphic iff left strongly regular iff regular left duo"},
       Gate::unital_zero_symmetric, &prop226},
      {{"thm62", "left morphic regular implies unit-regular via u = xax + b"}, Gate::unital_zero_symmetric,
       &thm62},
      {{"prop_tttt", "IFP: left strongly regular iff left morphic regular iff unit-regular"},
       Gate::unital_zero_symmetric, &prop_tttt},
      {{"ehrlich_T", "rings: unit-regular iff regular and left morphic"}, Gate::unital_zero_symmetric,
       &ehrlich_T},
      {{"ex20_claim", "M0(Z3) is unit-regular but not left morphic"}, Gate::unital_zero_symmetric,
       &ex20_claim},
      {{"ex20c_claim", "R x M is unit-regular via <u,-um>; <a,m> with m != 0 is not left morphic"},
       Gate::unital, &ex20c_claim},
      {{"ex_gggg_claim", "M2(F2) is left morphic regular, not left duo, not left strongly regular"},
       Gate::unital_zero_symmetric, &ex_gggg_claim},
  };
  return list;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_theorem_id(const std::string& id) {
  const auto& c = theorem_catalog();
  return std::any_of(c.begin(), c.end(), [&](const TheoremInfo& t) { return t.id == id; });
}

std::array<bool, 7> idempotent_statements(const Analysis& A, Elem e) {
  const NearRing& N = A.ring();
  const Elem f = N.add(N.unity(), N.neg(e));
  const std::size_t n = N.order();
  const bool ef_zero = N.mul(e, f) == 0;
  bool s3 = true, s5 = true;
  for (Elem x = 0; x < n; ++x) {
    const Elem xf = N.mul(x, f), xe = N.mul(x, e);
    s3 = s3 && xf == N.add(N.neg(xe), x);
    s5 = s5 && xf == N.add(x, N.neg(xe));
  }
  return {A.morphic(e).is_morphic(),
          A.left_orbit(e) == A.left_ann(f),
          s3,
          (A.left_ann(e) & A.left_ann(f)).size() == 1 && ef_zero,
          s5,
          A.left_orbit(f) == A.left_ann(e) && ef_zero,
          A.morphic(f).is_morphic() && N.mul(f, f) == f};
}

TheoremReport check(const Analysis& A, const std::string& id, const CheckOptions& opts) {
  const auto& list = entries();
  auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == list.end()) throw Error("unknown theorem id '" + id + "'");
  Eval ev(A, id);
  const NearRing& N = A.ring();
  if (!N.is_unital()) return ev.not_applicable("not unital");
  if (it->gate == Gate::unital_zero_symmetric && opts.require_zero_symmetric &&
      !N.flags().zero_symmetric)
    return ev.not_applicable(flag_text("zero-symmetric", N.flags().zero_symmetric, N));
  return it->run(ev);
}

TheoremReport check(const NearRing& N, const std::string& id, const CheckOptions& opts) {
  if (!is_theorem_id(id)) throw Error("unknown theorem id '" + id + "'");
  return check(Analysis(N), id, opts);
}

SuiteReport run_suite(const std::vector<NearRing>& corpus, const std::vector<std::string>& ids,
                      Exec exec, const CheckOptions& opts) {
  std::vector<std::string> wanted = ids;
  if (wanted.empty())
    for (const auto& t : theorem_catalog()) wanted.push_back(t.id);
  for (const auto& id : wanted)
    if (!is_theorem_id(id)) throw Error("unknown theorem id '" + id + "'");

  SuiteReport out;
  for (const NearRing& N : corpus) {
    std::optional<Analysis> A;
    std::string analysis_error;
    try {
      A.emplace(N, exec);
    } catch (const std::exception& e) {
      analysis_error = e.what();
    }
    for (const auto& id : wanted) {
      TheoremReport r;
      if (A) {
        try {
          r = check(*A, id, opts);
        } catch (const std::exception& e) {
          r = TheoremReport{N.name(), id, TheoremStatus::error, 0, {}, {}, e.what()};
        }
      } else {
        r = TheoremReport{N.name(), id, TheoremStatus::error, 0, {}, {}, analysis_error};
      }
      out.cells.push_back(std::move(r));
    }
    ChainRow row;
    row.nearring = N.name();
    if (A) {
      const auto& S = A->structure();
      row.in_scope = N.is_unital() && N.flags().zero_symmetric.holds;
      row.left_strongly_regular = S.left_strongly_regular.holds;
      row.left_morphic_regular = S.is_left_morphic_regular();
      row.unit_regular = S.is_unit_regular();
      if (row.in_scope) {
        if (row.left_morphic_regular && !row.left_strongly_regular)
          out.lmr_not_lsr.push_back(N.name());
        if (row.unit_regular && !row.left_morphic_regular) out.ur_not_lmr.push_back(N.name());
        if (row.left_strongly_regular && !row.left_morphic_regular)
          out.inclusion_violations.push_back(N.name() + ": left strongly regular but not left morphic regular");
        if (row.left_morphic_regular && !row.unit_regular)
          out.inclusion_violations.push_back(N.name() + ": left morphic regular but not unit-regular");
      }
    }
    out.chain.push_back(row);
  }
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     return std::tie(a.nearring, a.theorem) < std::tie(b.nearring, b.theorem);
                   });
  for (const auto& c : out.cells) {
    if (c.status == TheoremStatus::fail) out.aggregate_pass = false;
    if (c.status == TheoremStatus::error) ++out.errors;
  }
  return out;
}

}  // namespace nearring
