// Independent re-check of theorem counterexamples. Everything here is
// recomputed from the raw Cayley tables with plain loops; nothing from the
// classification or module layers is consulted.

#include <algorithm>
#include <functional>
#include <set>

#include "nearring/build.hpp"
#include "nearring/catalog.hpp"
#include "nearring/theorems.hpp"

namespace nearring {
namespace {

using Set = std::set<Elem>;

class Raw {
 public:
  explicit Raw(const NearRing& N)
      : n_(N.order()), add_(N.add_table()), mul_(N.mul_table()), one_(N.one()) {}

  std::size_t n() const { return n_; }
  Elem add(Elem x, Elem y) const { return add_(x, y); }
  Elem mul(Elem x, Elem y) const { return mul_(x, y); }
  Elem mul(Elem x, Elem y, Elem z) const { return mul_(mul_(x, y), z); }
  Elem neg(Elem x) const {
    for (Elem y = 0; y < n_; ++y)
      if (add_(x, y) == 0) return y;
    return 0;
  }
  bool unital() const { return one_.has_value(); }
  Elem one() const { return *one_; }

  Set left_orbit(Elem a) const {
    Set s;
    for (Elem r = 0; r < n_; ++r) s.insert(mul(r, a));
    return s;
  }
  Set left_ann(Elem a) const {
    Set s;
    for (Elem x = 0; x < n_; ++x)
      if (mul(x, a) == 0) s.insert(x);
    return s;
  }
  Set right_orbit(Elem a) const {
    Set s;
    for (Elem r = 0; r < n_; ++r) s.insert(mul(a, r));
    return s;
  }

  // Normal subgroup of (N,+) with r(l+m) - rm in L.
  bool left_ideal(const Set& L) const {
    if (!L.count(0)) return false;
    for (Elem x : L)
      for (Elem y : L)
        if (!L.count(add(x, neg(y)))) return false;
    for (Elem m = 0; m < n_; ++m)
      for (Elem l : L)
        if (!L.count(add(add(m, l), neg(m)))) return false;
    for (Elem r = 0; r < n_; ++r)
      for (Elem l : L)
        for (Elem m = 0; m < n_; ++m)
          if (!L.count(add(mul(r, add(l, m)), neg(mul(r, m))))) return false;
    return true;
  }
  bool two_sided(const Set& L) const {
    if (!left_ideal(L)) return false;
    for (Elem l : L)
      for (Elem r = 0; r < n_; ++r)
        if (!L.count(mul(l, r))) return false;
    return true;
  }

  bool unit(Elem a) const {
    if (!unital()) return false;
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == one() && mul(b, a) == one()) return true;
    return false;
  }
  Elem inverse(Elem a) const {
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == one() && mul(b, a) == one()) return b;
    return 0;
  }
  bool regular(Elem a) const {
    for (Elem x = 0; x < n_; ++x)
      if (mul(a, x, a) == a) return true;
    return false;
  }
  bool unit_regular(Elem a) const {
    for (Elem x = 0; x < n_; ++x)
      if (unit(x) && mul(a, x, a) == a) return true;
    return false;
  }
  bool lsr(Elem a) const {
    const Elem sq = mul(a, a);
    for (Elem x = 0; x < n_; ++x)
      if (mul(x, sq) == a) return true;
    return false;
  }
  bool nilpotent(Elem a) const {
    Elem p = a;
    for (std::size_t k = 0; k <= n_; ++k) {
      if (p == 0) return true;
      p = mul(p, a);
    }
    return false;
  }
  std::optional<Elem> morphic_witness(Elem a) const {
    const Set na = left_orbit(a), ann = left_ann(a);
    if (!left_ideal(na)) return std::nullopt;
    for (Elem b = 0; b < n_; ++b)
      if (left_ann(b) == na && left_orbit(b) == ann) return b;
    return std::nullopt;
  }
  bool morphic(Elem a) const { return morphic_witness(a).has_value(); }

  // N/Na isomorphic to (0:_l a): the quotient is generated by the coset of 1,
  // so every N-map out of it is r + Na -> r b for some b.
  bool morphic_iso(Elem a) const {
    const Set na = left_orbit(a), ann = left_ann(a);
    if (!left_ideal(na)) return false;
    std::vector<Elem> coset(n_);
    for (Elem r = 0; r < n_; ++r) {
      Elem least = r;
      for (Elem k : na) least = std::min(least, add(r, k));
      coset[r] = least;
    }
    for (Elem b : ann) {
      std::vector<std::optional<Elem>> phi(n_);
      bool ok = true;
      for (Elem r = 0; r < n_ && ok; ++r) {
        const Elem v = mul(r, b);
        if (phi[coset[r]] && *phi[coset[r]] != v) ok = false;
        phi[coset[r]] = v;
      }
      if (!ok) continue;
      Set image;
      std::size_t cosets = 0;
      for (Elem c = 0; c < n_; ++c)
        if (phi[c]) {
          ++cosets;
          image.insert(*phi[c]);
        }
      if (image == ann && image.size() == cosets) return true;
    }
    return false;
  }

  bool all(const std::function<bool(Elem)>& p) const {
    for (Elem a = 0; a < n_; ++a)
      if (!p(a)) return false;
    return true;
  }
  bool reduced() const {
    return all([&](Elem a) { return a == 0 || !nilpotent(a); });
  }
  bool all_regular() const { return all([&](Elem a) { return regular(a); }); }
  bool all_lsr() const { return all([&](Elem a) { return lsr(a); }); }
  bool all_unit_regular() const {
    return unital() && all([&](Elem a) { return unit_regular(a); });
  }
  bool all_morphic() const { return unital() && all([&](Elem a) { return morphic(a); }); }
  bool idempotents_central() const {
    for (Elem e = 0; e < n_; ++e)
      if (mul(e, e) == e)
        for (Elem x = 0; x < n_; ++x)
          if (mul(e, x) != mul(x, e)) return false;
    return true;
  }
  bool abelian() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (add(x, y) != add(y, x)) return false;
    return true;
  }
  bool left_distributive() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z)
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return false;
    return true;
  }
  bool commutative() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (mul(x, y) != mul(y, x)) return false;
    return true;
  }
  // Every left ideal is a sum of principal ones and sums of two-sided
  // ideals are two-sided, so principal left ideals decide left duo.
  bool left_duo() const {
    for (Elem a = 0; a < n_; ++a)
      if (!two_sided(principal_left_ideal(a))) return false;
    return true;
  }
  Set principal_left_ideal(Elem a) const {
    Set L{0, a};
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Elem> add_now;
      for (Elem x : L)
        for (Elem y : L) add_now.push_back(add(x, neg(y)));
      for (Elem m = 0; m < n_; ++m)
        for (Elem l : L) {
          add_now.push_back(add(add(m, l), neg(m)));
          for (Elem r = 0; r < n_; ++r) add_now.push_back(add(mul(r, add(l, m)), neg(mul(r, m))));
        }
      for (Elem x : add_now) grew = L.insert(x).second || grew;
    }
    return L;
  }

 private:
  std::size_t n_;
  const Table& add_;
  const Table& mul_;
  std::optional<Elem> one_;
};

bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

std::string bools(std::initializer_list<bool> v) {
  std::string s;
  for (bool b : v) s += b ? 'T' : 'F';
  return s;
}

// A disagreement clause ends with the T/F vector; it re-verifies when the
// raw values match that vector and are not all equal.
bool disagreement(const std::string& clause, std::initializer_list<bool> raw) {
  const std::string v = bools(raw);
  const bool mixed = v.find('T') != std::string::npos && v.find('F') != std::string::npos;
  return mixed && clause.size() >= v.size() && clause.compare(clause.size() - v.size(), v.size(), v) == 0;
}

bool seven_statements_disagree(const Raw& R, Elem e, const std::string& clause) {
  const Elem f = R.add(R.one(), R.neg(e));
  const bool ef0 = R.mul(e, f) == 0;
  bool s3 = true, s5 = true;
  for (Elem x = 0; x < R.n(); ++x) {
    s3 = s3 && R.mul(x, f) == R.add(R.neg(R.mul(x, e)), x);
    s5 = s5 && R.mul(x, f) == R.add(x, R.neg(R.mul(x, e)));
  }
  Set both;
  for (Elem x : R.left_ann(e))
    if (R.left_ann(f).count(x)) both.insert(x);
  return disagreement(clause, {R.morphic(e), R.left_orbit(e) == R.left_ann(f), s3,
                               both.size() == 1 && ef0, s5,
                               R.left_orbit(f) == R.left_ann(e) && ef0,
                               R.morphic(f) && R.mul(f, f) == f});
}

bool unit_clause(const Raw& R, const std::vector<Elem>& el, const std::string& c) {
  if (el.size() != 2) return false;
  const Elem a = el[0], u = el[1];
  if (!R.unit(u)) return false;
  const Elem ui = R.inverse(u);
  if (starts_with(c, "(1)")) return R.left_orbit(u).size() != R.n();
  if (starts_with(c, "(2)")) return R.left_ann(a) != R.left_ann(R.mul(a, ui));
  if (starts_with(c, "(3)")) {
    Set t;
    for (Elem x : R.left_ann(a)) t.insert(R.mul(x, ui));
    return t != R.left_ann(R.mul(u, a));
  }
  if (starts_with(c, "(4)")) {
    const Set L = R.left_ann(a);
    Set img;
    for (Elem x : L) img.insert(R.mul(x, u));
    if (img.size() != L.size()) return true;
    for (Elem x : L)
      for (Elem y : L)
        if (R.mul(R.add(x, y), u) != R.add(R.mul(x, u), R.mul(y, u))) return true;
    for (Elem r = 0; r < R.n(); ++r)
      for (Elem x : L)
        if (R.mul(R.mul(r, x), u) != R.mul(r, R.mul(x, u))) return true;
    return false;
  }
  return false;
}

bool product_clause(const NearRing& N, const Raw& R, const std::vector<Elem>& el,
                    const std::string& c) {
  std::optional<NearRing> holder;
  const Provenance* p = N.provenance();
  if (!p) {
    holder = recognise(N);
    p = holder ? holder->provenance() : nullptr;
  }
  if (!p || p->kind != Provenance::Kind::product) return false;
  std::vector<Raw> F;
  std::vector<std::size_t> orders;
  for (const auto& f : p->factors) {
    F.emplace_back(f);
    orders.push_back(f.order());
  }
  if (starts_with(c, "morphic in product")) {
    if (el.size() != 1) return false;
    auto parts = product_parts(orders, el[0]);
    bool every = true;
    for (std::size_t i = 0; i < F.size(); ++i) every = every && F[i].morphic(parts[i]);
    return every != R.morphic(el[0]);
  }
  if (starts_with(c, "(0:_l a) is not the product")) {
    if (el.size() != 2) return false;
    auto pa = product_parts(orders, el[0]), px = product_parts(orders, el[1]);
    bool in = true;
    for (std::size_t i = 0; i < F.size(); ++i) in = in && F[i].left_ann(pa[i]).count(px[i]);
    return in != static_cast<bool>(R.left_ann(el[0]).count(el[1]));
  }
  if (starts_with(c, "product left morphic")) {
    bool every = true;
    for (const auto& f : F) every = every && f.all_morphic();
    return every != R.all_morphic();
  }
  return false;
}

bool confirm(const NearRing& N, const std::string& id, const std::vector<Elem>& el,
             const std::string& c) {
  const Raw R(N);
  for (Elem x : el)
    if (x >= R.n()) return false;
  const auto one_elem = [&]() { return el.size() == 1; };

  if (id == "lemma1_equiv") {
    if (starts_with(c, "morphic witness") && el.size() == 2)
      return !(R.left_orbit(el[0]) == R.left_ann(el[1]) && R.left_orbit(el[1]) == R.left_ann(el[0]));
    if (starts_with(c, "witness search disagrees") && one_elem())
      return R.morphic(el[0]) != R.morphic_iso(el[0]);
    return false;
  }
  if (id == "lemma10") return unit_clause(R, el, c);
  if (id == "prop2") {
    if (el.size() != 2 || !R.morphic(el[0]) || !R.unit(el[1])) return false;
    if (c == "ua not left morphic") return !R.morphic(R.mul(el[1], el[0]));
    if (c == "au not left morphic") return !R.morphic(R.mul(el[0], el[1]));
    return false;
  }
  if (id == "prop64") {
    if (!one_elem() || !R.morphic(el[0])) return false;
    const Elem a = el[0];
    return disagreement(c, {R.left_ann(a).size() == 1, R.left_orbit(a).size() == R.n(), R.unit(a)});
  }
  if (id == "product_morphic") return product_clause(N, R, el, c);
  if (id == "ccc_decomposition") {
    if (!one_elem()) return false;
    const Elem a = el[0];
    const Set na = R.left_orbit(a), ann = R.left_ann(a);
    if (c == "Na is not an N-ideal") return !R.left_ideal(na);
    if (c == "(0:_l a) and Na meet outside 0") {
      for (Elem x : na)
        if (x != 0 && ann.count(x)) return true;
      return false;
    }
    if (c == "(0:_l a) + Na != N") {
      Set s;
      for (Elem l : ann)
        for (Elem k : na) s.insert(R.add(l, k));
      return s.size() != R.n();
    }
    if (c == "a not left morphic") return !R.morphic(a);
    return false;
  }
  if (id == "wsw_morphic" || id == "prop_ff_morphic")
    return one_elem() && c == "a not left morphic" && !R.morphic(el[0]);
  if (id == "lemma_ffff") return one_elem() && c == "a not unit-regular" && !R.unit_regular(el[0]);
  if (id == "prop_ff_square")
    return one_elem() && c == "a^2 not regular" && !R.regular(R.mul(el[0], el[0]));
  if (id == "lemma213") return R.all_regular() && disagreement(c, {R.reduced(), R.idempotents_central()});
  if (id == "lemma_hdt") {
    const bool reg = R.all_regular();
    return disagreement(c, {R.all_lsr(), reg && R.reduced(), reg && R.idempotents_central()});
  }
  if (id == "lemma13") {
    if (el.size() != 2) return false;
    const Elem a = el[0], x = el[1];
    if (R.mul(x, R.mul(a, a)) != a) return false;
    if (c == "a = x a^2 but a != a x a") return R.mul(a, x, a) != a;
    if (c == "a = x a^2 but ax != xa") return R.mul(a, x) != R.mul(x, a);
    return false;
  }
  if (id == "lemma_this_thm217") {
    if (!one_elem() || !R.unital()) return false;
    const Elem e = el[0];
    if (R.mul(e, e) != e) return false;
    const Elem f = R.add(R.one(), R.neg(e));
    if (starts_with(c, "statements")) return seven_statements_disagree(R, e, c);
    if (c == "1-(1-e) != e") return R.add(R.one(), R.neg(f)) != e;
    if (c == "N(1-e) != (0:_l e)") return R.left_orbit(f) != R.left_ann(e);
    return false;
  }
  if (id == "prop_cccxi") {
    if (c == "(N,+) not abelian") return !R.abelian();
    if (c == "left distributivity fails") return !R.left_distributive();
    if (c == "multiplication not commutative") return !R.commutative();
    if (c == "a not left morphic") return one_elem() && !R.morphic(el[0]);
    return false;
  }
  if (id == "prop226") {
    const bool reg = R.all_regular();
    return disagreement(c, {R.reduced() && R.all_morphic(), R.all_lsr(), reg && R.left_duo()});
  }
  if (id == "thm62") {
    if (c == "a not unit-regular") return one_elem() && !R.unit_regular(el[0]);
    if (el.size() != 4) return false;
    const Elem a = el[0], x = el[1], b = el[2], u = el[3];
    if (R.mul(a, x, a) != a || u != R.add(R.mul(R.mul(x, a), x), b)) return false;
    auto w = R.morphic_witness(a);
    if (!w || *w != b) return false;
    if (c == "u = xax + b is not a unit") return !R.unit(u);
    if (c == "a != a u a for u = xax + b") return R.mul(a, u, a) != a;
    return false;
  }
  if (id == "prop_tttt") {
    return disagreement(c, {R.all_lsr(), R.all_morphic() && R.all_regular(), R.all_unit_regular()});
  }
  if (id == "ehrlich_T")
    return disagreement(c, {R.all_unit_regular(), R.all_regular() && R.all_morphic()});
  if (id == "ex20_claim") {
    if (c == "a not unit-regular") return one_elem() && !R.unit_regular(el[0]);
    if (c == "every element left morphic") return R.all_morphic();
    return false;
  }
  if (id == "ex20c_claim") {
    if (c == "x <u,-um> x != x" && el.size() == 2) return R.mul(el[0], el[1], el[0]) != el[0];
    if (c == "<u,-um> <u^-1,m> is not the unity" && el.size() == 3)
      return R.mul(el[1], el[2]) != R.one() || R.mul(el[2], el[1]) != R.one();
    if (c == "x not unit-regular") return one_elem() && !R.unit_regular(el[0]);
    if (c == "<a,m> with m != 0 is left morphic") return one_elem() && R.morphic(el[0]);
    return false;
  }
  if (id == "ex_gggg_claim") {
    if (c == "a not left morphic") return one_elem() && !R.morphic(el[0]);
    if (c == "a not regular") return one_elem() && !R.regular(el[0]);
    if (c == "left duo") return R.left_duo();
    if (c == "left strongly regular") return R.all_lsr();
    if (c == "[01;00] is not nilpotent of index 2") {
      auto e = N.find("[01;00]");
      return !e || R.mul(*e, *e) != 0 || *e == 0;
    }
    return false;
  }
  return false;
}

}  // namespace

bool reverify(const NearRing& N, const TheoremReport& report) {
  if (report.status != TheoremStatus::fail || !report.counterexample) return false;
  return confirm(N, report.theorem, report.counterexample->elements, report.counterexample->clause);
}

}  // namespace nearring
