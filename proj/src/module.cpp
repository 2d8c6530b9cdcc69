#include "nearring/module.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nearring {

namespace {

FiniteGroup checked_group(const Table& add, std::vector<std::string> labels) {
  auto g = validate_group(add, std::move(labels), Exec::serial);
  if (auto* v = std::get_if<AxiomViolation>(&g))
    throw Error("internal: derived carrier is not a group: " + v->describe());
  return std::get<FiniteGroup>(std::move(g));
}

// Worklist closure to the smallest N-ideal containing L. L must already be
// closed with respect to every element not in `pending`.
void close_N_ideal(const NearRing& N, const NModule& M, Subset& L, std::deque<Elem> pending) {
  const auto& G = M.carrier;
  const std::size_t n = N.order(), m = M.order();
  std::vector<Elem> members = L.members();
  auto put = [&](Elem x) {
    if (!L.contains(x)) {
      L.insert(x);
      members.push_back(x);
      pending.push_back(x);
    }
  };
  while (!pending.empty()) {
    Elem l = pending.front();
    pending.pop_front();
    put(G.neg(l));
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem k = members[i];
      put(G.add(l, k));
      put(G.add(k, l));
    }
    for (std::size_t x = 0; x < m; ++x) {
      Elem mx = static_cast<Elem>(x);
      put(G.sub(G.add(mx, l), mx));
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t x = 0; x < m; ++x) {
        Elem mx = static_cast<Elem>(x);
        Elem rr = static_cast<Elem>(r);
        put(G.sub(M.act(rr, G.add(l, mx)), M.act(rr, mx)));
      }
  }
}

}  // namespace

std::optional<Triple> module_law_violation(const NearRing& N, const NModule& M, Exec exec) {
  const std::size_t n = N.order(), m = M.order();
  const auto& G = M.carrier;
  auto additive_row = [&](Elem r1) -> std::optional<Pair> {
    for (std::size_t r2 = 0; r2 < n; ++r2)
      for (std::size_t x = 0; x < m; ++x) {
        Elem lhs = M.act(N.add(r1, static_cast<Elem>(r2)), static_cast<Elem>(x));
        Elem rhs = G.add(M.act(r1, static_cast<Elem>(x)),
                         M.act(static_cast<Elem>(r2), static_cast<Elem>(x)));
        if (lhs != rhs) return Pair{static_cast<Elem>(r2), static_cast<Elem>(x)};
      }
    return std::nullopt;
  };
  auto assoc_row = [&](Elem r1) -> std::optional<Pair> {
    for (std::size_t r2 = 0; r2 < n; ++r2)
      for (std::size_t x = 0; x < m; ++x) {
        Elem lhs = M.act(N.mul(r1, static_cast<Elem>(r2)), static_cast<Elem>(x));
        Elem rhs = M.act(r1, M.act(static_cast<Elem>(r2), static_cast<Elem>(x)));
        if (lhs != rhs) return Pair{static_cast<Elem>(r2), static_cast<Elem>(x)};
      }
    return std::nullopt;
  };
  if (auto r1 = find_first(n, [&](Elem r) { return additive_row(r).has_value(); }, exec)) {
    auto p = *additive_row(*r1);
    return Triple{*r1, p[0], p[1]};
  }
  if (auto r1 = find_first(n, [&](Elem r) { return assoc_row(r).has_value(); }, exec)) {
    auto p = *assoc_row(*r1);
    return Triple{*r1, p[0], p[1]};
  }
  if (auto one = N.one()) {
    for (std::size_t x = 0; x < m; ++x)
      if (M.act(*one, static_cast<Elem>(x)) != x)
        return Triple{*one, static_cast<Elem>(x), static_cast<Elem>(x)};
  }
  return std::nullopt;
}

NModule make_module(const NearRing& N, FiniteGroup carrier, Table action, std::string name) {
  if (action.rows() != N.order() || action.cols() != carrier.order())
    throw FormatError("action table must be |N| x |M|");
  for (Elem e : action.data())
    if (e >= carrier.order()) throw FormatError("action table entry out of range");
  NModule M{std::move(carrier), std::move(action), std::move(name)};
  if (auto bad = module_law_violation(N, M))
    throw Error("module law fails at (" + std::to_string((*bad)[0]) + "," +
                std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
  return M;
}

NModule regular_representation(const NearRing& N) {
  return NModule{N.group(), N.mul_table(), N.name()};
}

NModule submodule(const NearRing& N, const NModule& M, const Subset& S) {
  auto members = S.members();
  if (members.empty() || members[0] != 0) throw PreconditionError("submodule must contain 0");
  std::vector<Elem> pos(M.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<Elem>(i);
  const std::size_t k = members.size();
  Table add(k, k), action(N.order(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem s = M.carrier.add(members[i], members[j]);
      if (!S.contains(s)) throw PreconditionError("subset is not closed under +");
      add(i, j) = pos[s];
    }
  for (std::size_t r = 0; r < N.order(); ++r)
    for (std::size_t i = 0; i < k; ++i) {
      Elem s = M.act(static_cast<Elem>(r), members[i]);
      if (!S.contains(s)) throw PreconditionError("subset is not closed under the action");
      action(r, i) = pos[s];
    }
  std::vector<std::string> labels;
  for (Elem x : members) labels.push_back(M.carrier.label(x));
  return NModule{checked_group(add, std::move(labels)), std::move(action), M.name + "|sub"};
}

Subset annihilator(const NearRing& N, Side side, const Subset& S) {
  Subset out(N.order());
  auto ms = S.members();
  for (std::size_t x = 0; x < N.order(); ++x) {
    Elem e = static_cast<Elem>(x);
    bool all = std::all_of(ms.begin(), ms.end(), [&](Elem s) {
      return (side == Side::left ? N.mul(e, s) : N.mul(s, e)) == 0;
    });
    if (all) out.insert(e);
  }
  return out;
}

Subset annihilator(const NearRing& N, Side side, Elem a) {
  return annihilator(N, side, Subset(N.order(), {a}));
}

Subset orbit(const NearRing& N, Side side, Elem a) {
  Subset out(N.order());
  for (std::size_t x = 0; x < N.order(); ++x)
    out.insert(side == Side::left ? N.mul(static_cast<Elem>(x), a)
                                  : N.mul(a, static_cast<Elem>(x)));
  return out;
}

std::string to_string(IdealVerdict::Kind k) {
  switch (k) {
    case IdealVerdict::Kind::not_subgroup: return "not_subgroup";
    case IdealVerdict::Kind::not_normal: return "not_normal";
    case IdealVerdict::Kind::not_N_ideal: return "not_N_ideal";
    case IdealVerdict::Kind::N_ideal: return "N_ideal";
  }
  return "?";
}

IdealVerdict is_N_ideal(const NearRing& N, const NModule& M, const Subset& L) {
  using K = IdealVerdict::Kind;
  const auto& G = M.carrier;
  const std::size_t m = M.order();
  if (!L.contains(0)) return {K::not_subgroup, {0}};
  auto ls = L.members();
  for (Elem a : ls)
    for (Elem b : ls)
      if (!L.contains(G.add(a, b))) return {K::not_subgroup, {a, b}};
  for (Elem a : ls)
    if (!L.contains(G.neg(a))) return {K::not_subgroup, {a}};
  for (std::size_t x = 0; x < m; ++x)
    for (Elem l : ls) {
      Elem mx = static_cast<Elem>(x);
      if (!L.contains(G.sub(G.add(mx, l), mx))) return {K::not_normal, {mx, l}};
    }
  auto row = [&](Elem r) -> std::optional<Pair> {
    for (Elem l : ls)
      for (std::size_t x = 0; x < m; ++x) {
        Elem mx = static_cast<Elem>(x);
        if (!L.contains(G.sub(M.act(r, G.add(l, mx)), M.act(r, mx)))) return Pair{l, mx};
      }
    return std::nullopt;
  };
  for (std::size_t r = 0; r < N.order(); ++r)
    if (auto p = row(static_cast<Elem>(r)))
      return {K::not_N_ideal, {static_cast<Elem>(r), (*p)[0], (*p)[1]}};
  return {K::N_ideal, {}};
}

bool ideal_witness_reproduces(const NearRing& N, const NModule& M, const Subset& L,
                              const IdealVerdict& v) {
  using K = IdealVerdict::Kind;
  const auto& G = M.carrier;
  const auto& w = v.witness;
  switch (v.kind) {
    case K::N_ideal: return w.empty();
    case K::not_subgroup:
      if (w.size() == 1 && w[0] == 0 && !L.contains(0)) return true;
      if (w.size() == 1) return L.contains(w[0]) && !L.contains(G.neg(w[0]));
      return w.size() == 2 && L.contains(w[0]) && L.contains(w[1]) &&
             !L.contains(G.add(w[0], w[1]));
    case K::not_normal:
      return w.size() == 2 && L.contains(w[1]) &&
             !L.contains(G.sub(G.add(w[0], w[1]), w[0]));
    case K::not_N_ideal:
      return w.size() == 3 && w[0] < N.order() && L.contains(w[1]) &&
             !L.contains(G.sub(M.act(w[0], G.add(w[1], w[2])), M.act(w[0], w[2])));
  }
  return false;
}

IdealClass is_ideal(const NearRing& N, const Subset& L) {
  IdealClass c{IdealKind::not_left_ideal, is_N_ideal(N, regular_representation(N), L), {}};
  if (!c.left.is_ideal()) return c;
  for (Elem l : L.members())
    for (std::size_t x = 0; x < N.order(); ++x)
      if (!L.contains(N.mul(l, static_cast<Elem>(x)))) {
        c.kind = IdealKind::left_ideal;
        c.not_closed_right = Pair{l, static_cast<Elem>(x)};
        return c;
      }
  c.kind = IdealKind::two_sided_ideal;
  return c;
}

Subset generate_N_ideal(const NearRing& N, const NModule& M, const Subset& S) {
  Subset L(M.order());
  std::deque<Elem> pending;
  L.insert(0);
  pending.push_back(0);
  S.for_each([&](Elem x) {
    if (!L.contains(x)) {
      L.insert(x);
      pending.push_back(x);
    }
  });
  close_N_ideal(N, M, L, std::move(pending));
  return L;
}

IdealEnumeration enumerate_left_ideals(const NearRing& N, const Caps& caps, Exec exec) {
  const std::size_t n = N.order();
  if (n > caps.ideal_enumeration)
    throw CapExceeded("left ideal enumeration is capped at order " +
                      std::to_string(caps.ideal_enumeration));
  const NModule R = regular_representation(N);
  auto principal = map_indices<Subset>(
      n, [&](Elem x) { return generate_N_ideal(N, R, Subset(n, {x})); }, exec);
  std::set<Subset> distinct_principal(principal.begin(), principal.end());

  IdealEnumeration out;
  std::set<Subset> found(distinct_principal.begin(), distinct_principal.end());
  std::vector<Subset> frontier(found.begin(), found.end());
  if (found.size() >= caps.ideal_count) {
    out.complete = false;
    frontier.clear();
  }
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& I : frontier) {
      for (const Subset& P : distinct_principal) {
        if (P.is_subset_of(I)) continue;
        Subset J = I;
        std::deque<Elem> pending;
        P.for_each([&](Elem x) {
          if (!J.contains(x)) {
            J.insert(x);
            pending.push_back(x);
          }
        });
        close_N_ideal(N, R, J, std::move(pending));
        if (found.insert(J).second) {
          next.push_back(std::move(J));
          if (found.size() >= caps.ideal_count) {
            out.complete = false;
            next.clear();
            break;
          }
        }
      }
      if (!out.complete) break;
    }
    frontier = std::move(next);
  }
  out.ideals.assign(found.begin(), found.end());
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const Subset& a, const Subset& b) { return lattice_less(a, b); });
  return out;
}

Quotient quotient_module(const NearRing& N, const NModule& M, const Subset& L) {
  auto verdict = is_N_ideal(N, M, L);
  if (!verdict.is_ideal())
    throw PreconditionError("quotient by a non-N-ideal (" + to_string(verdict.kind) + ")");
  const auto& G = M.carrier;
  const std::size_t m = M.order();
  constexpr Elem unset = ~Elem{0};
  Quotient q;
  q.coset_of.assign(m, unset);
  auto ls = L.members();
  for (std::size_t x = 0; x < m; ++x) {
    if (q.coset_of[x] != unset) continue;
    Elem idx = static_cast<Elem>(q.representative.size());
    q.representative.push_back(static_cast<Elem>(x));
    for (Elem l : ls) q.coset_of[G.add(static_cast<Elem>(x), l)] = idx;
  }
  const std::size_t k = q.representative.size();
  Table add(k, k), action(N.order(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      add(i, j) = q.coset_of[G.add(q.representative[i], q.representative[j])];
  for (std::size_t r = 0; r < N.order(); ++r)
    for (std::size_t i = 0; i < k; ++i)
      action(r, i) = q.coset_of[M.act(static_cast<Elem>(r), q.representative[i])];
  // Independent of the representative: exhaustive over every member.
  for (std::size_t x = 0; x < m; ++x) {
    Elem c = q.coset_of[x];
    for (std::size_t y = 0; y < m; ++y)
      if (q.coset_of[G.add(static_cast<Elem>(x), static_cast<Elem>(y))] != add(c, q.coset_of[y]))
        throw Error("internal: coset addition is not well defined");
    for (std::size_t r = 0; r < N.order(); ++r)
      if (q.coset_of[M.act(static_cast<Elem>(r), static_cast<Elem>(x))] != action(r, c))
        throw Error("internal: quotient action is not well defined");
  }
  std::vector<std::string> labels;
  for (Elem rep : q.representative) labels.push_back(G.label(rep) + "+L");
  q.module = NModule{checked_group(add, std::move(labels)), std::move(action), M.name + "/L"};
  return q;
}

Subset generated_submodule(const NearRing& N, const NModule& M, Elem g) {
  const auto& G = M.carrier;
  Subset S(M.order());
  std::vector<Elem> members;
  std::deque<Elem> pending;
  auto put = [&](Elem x) {
    if (!S.contains(x)) {
      S.insert(x);
      members.push_back(x);
      pending.push_back(x);
    }
  };
  put(0);
  put(g);
  while (!pending.empty()) {
    Elem x = pending.front();
    pending.pop_front();
    put(G.neg(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      put(G.add(x, members[i]));
      put(G.add(members[i], x));
    }
    for (std::size_t r = 0; r < N.order(); ++r) put(M.act(static_cast<Elem>(r), x));
  }
  return S;
}

HomResult hom_from_cyclic_generator(const NearRing& N, const NModule& M1, Elem g,
                                    const NModule& M2, Elem b) {
  if (generated_submodule(N, M1, g).size() != M1.order())
    throw PreconditionError("element " + std::to_string(g) + " does not generate the module");
  constexpr Elem unset = ~Elem{0};
  const auto& G1 = M1.carrier;
  const auto& G2 = M2.carrier;
  HomResult res;
  std::vector<Elem> img(M1.order(), unset);
  std::vector<Elem> known;
  std::deque<Elem> pending;
  auto put = [&](Elem x, Elem y) -> bool {
    if (img[x] == unset) {
      img[x] = y;
      known.push_back(x);
      pending.push_back(x);
      return true;
    }
    if (img[x] != y) {
      res.conflict = Triple{x, img[x], y};
      return false;
    }
    return true;
  };
  if (!put(0, 0) || !put(g, b)) return res;
  while (!pending.empty()) {
    Elem x = pending.front();
    pending.pop_front();
    if (!put(G1.neg(x), G2.neg(img[x]))) return res;
    for (std::size_t i = 0; i < known.size(); ++i) {
      Elem y = known[i];
      if (!put(G1.add(x, y), G2.add(img[x], img[y]))) return res;
      if (!put(G1.add(y, x), G2.add(img[y], img[x]))) return res;
    }
    for (std::size_t r = 0; r < N.order(); ++r) {
      Elem rr = static_cast<Elem>(r);
      if (!put(M1.act(rr, x), M2.act(rr, img[x]))) return res;
    }
  }
  res.well_defined = true;
  res.map = std::move(img);
  return res;
}

bool is_module_isomorphism(const NearRing& N, const NModule& M1, const NModule& M2,
                           const Subset& target, const std::vector<Elem>& map) {
  const std::size_t k = M1.order();
  if (map.size() != k || target.size() != k) return false;
  Subset image(M2.order());
  for (Elem y : map) {
    if (y >= M2.order() || !target.contains(y) || image.contains(y)) return false;
    image.insert(y);
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (map[M1.carrier.add(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          M2.carrier.add(map[x], map[y]))
        return false;
  for (std::size_t r = 0; r < N.order(); ++r)
    for (std::size_t x = 0; x < k; ++x)
      if (map[M1.act(static_cast<Elem>(r), static_cast<Elem>(x))] !=
          M2.act(static_cast<Elem>(r), map[x]))
        return false;
  return true;
}

namespace {

std::optional<Elem> find_generator(const NearRing& N, const NModule& M) {
  for (std::size_t g = 0; g < M.order(); ++g)
    if (generated_submodule(N, M, static_cast<Elem>(g)).size() == M.order())
      return static_cast<Elem>(g);
  return std::nullopt;
}

std::optional<std::vector<Elem>> iso_by_generator(const NearRing& N, const NModule& M1,
                                                  Elem g, const NModule& M2,
                                                  const Subset& target) {
  for (Elem b : target.members()) {
    auto h = hom_from_cyclic_generator(N, M1, g, M2, b);
    if (h.well_defined && is_module_isomorphism(N, M1, M2, target, h.map)) return h.map;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> iso_by_bruteforce(const NearRing& N, const NModule& M1,
                                                   const NModule& M2, const Subset& target) {
  if (!target.contains(0)) return std::nullopt;
  std::vector<Elem> rest;
  for (Elem y : target.members())
    if (y != 0) rest.push_back(y);
  std::vector<Elem> map(M1.order());
  do {
    map[0] = 0;
    std::copy(rest.begin(), rest.end(), map.begin() + 1);
    if (is_module_isomorphism(N, M1, M2, target, map)) return map;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Elem>> modules_isomorphic(const NearRing& N, const NModule& M1,
                                                    const NModule& M2,
                                                    const Subset& target, IsoMode mode,
                                                    const Caps& caps) {
  const bool small = M1.order() <= caps.iso_bruteforce;
  std::optional<Elem> gen;
  if (mode != IsoMode::bruteforce) gen = find_generator(N, M1);
  if (mode == IsoMode::generator && !gen)
    throw PreconditionError("generator mode needs a cyclic module");
  if (mode == IsoMode::bruteforce && !small)
    throw CapExceeded("brute-force isomorphism is capped at order " +
                      std::to_string(caps.iso_bruteforce));
  if (mode == IsoMode::automatic && !gen && !small)
    throw CapExceeded("module is not cyclic and exceeds the brute-force cap");
  if (M1.order() != target.size()) return std::nullopt;
  if (gen && mode != IsoMode::bruteforce) return iso_by_generator(N, M1, *gen, M2, target);
  return iso_by_bruteforce(N, M1, M2, target);
}

std::optional<std::vector<Elem>> modules_isomorphic(const NearRing& N, const NModule& M1,
                                                    const NModule& M2, IsoMode mode,
                                                    const Caps& caps) {
  return modules_isomorphic(N, M1, M2, Subset::full(M2.order()), mode, caps);
}

}  // namespace nearring
