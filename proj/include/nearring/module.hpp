#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearring/nearring.hpp"
#include "nearring/subset.hpp"

namespace nearring {

/// Left N-module over a fixed near-ring N: a group (M,+) with an action
/// table action(r, m) = r m satisfying (r1+r2)m = r1 m + r2 m and
/// (r1 r2)m = r1(r2 m). When N is unital the module is unitary.
struct NModule {
  FiniteGroup carrier;
  Table action;  // |N| x |M|
  std::string name;

  std::size_t order() const { return carrier.order(); }
  Elem act(Elem r, Elem m) const { return action(r, m); }
};

/// First (r1, r2, m) breaking a module law, scanning the additive law over
/// all triples, then the associative law, then unitarity as (one, m, m).
std::optional<Triple> module_law_violation(const NearRing& N, const NModule& M,
                                           Exec exec = Exec::parallel);

/// Builds a module and checks its laws (throws Error on failure, FormatError
/// on shape mismatch).
NModule make_module(const NearRing& N, FiniteGroup carrier, Table action, std::string name);

/// N as a left module over itself.
NModule regular_representation(const NearRing& N);

/// S as a module in its own right; S must be a subgroup closed under the
/// action. Elements are renumbered in ascending order of their index in M.
NModule submodule(const NearRing& N, const NModule& M, const Subset& S);

enum class Side { left, right };

/// left: {x : x s = 0 for all s in S}; right: {x : s x = 0 for all s in S}.
Subset annihilator(const NearRing& N, Side side, const Subset& S);
Subset annihilator(const NearRing& N, Side side, Elem a);

/// left: Na = {n a}; right: aN = {a n}.
Subset orbit(const NearRing& N, Side side, Elem a);

struct IdealVerdict {
  enum class Kind { not_subgroup, not_normal, not_N_ideal, N_ideal };
  Kind kind = Kind::N_ideal;
  // not_subgroup: (0) when 0 is missing, else (l1, l2) with l1 + l2 outside
  //   or (l) with -l outside; not_normal: (m, l); not_N_ideal: (r, l, m).
  std::vector<Elem> witness;

  bool is_ideal() const { return kind == Kind::N_ideal; }
};

std::string to_string(IdealVerdict::Kind k);

/// Subgroup, then normality, then r(l+m) - rm in L, each scanned in
/// ascending index order.
IdealVerdict is_N_ideal(const NearRing& N, const NModule& M, const Subset& L);

/// Re-evaluates a verdict's witness directly against the tables.
bool ideal_witness_reproduces(const NearRing& N, const NModule& M, const Subset& L,
                              const IdealVerdict& v);

enum class IdealKind { not_left_ideal, left_ideal, two_sided_ideal };

struct IdealClass {
  IdealKind kind;
  IdealVerdict left;                  // verdict over the regular representation
  std::optional<Pair> not_closed_right; // (l, n) with l n outside L
};

IdealClass is_ideal(const NearRing& N, const Subset& L);

/// Smallest N-ideal of M containing S.
Subset generate_N_ideal(const NearRing& N, const NModule& M, const Subset& S);

struct IdealEnumeration {
  std::vector<Subset> ideals;  // ascending by size, then lexicographic
  bool complete = true;        // false when the count cap stopped the search
};

/// All left ideals of N: principal ideals generated from each singleton,
/// then closed under joins. Throws CapExceeded when |N| exceeds
/// caps.ideal_enumeration; a hit on caps.ideal_count returns a partial,
/// incomplete list.
IdealEnumeration enumerate_left_ideals(const NearRing& N, const Caps& caps = {},
                                       Exec exec = Exec::parallel);

/// M/L with cosets represented by their least member. Throws
/// PreconditionError if L is not an N-ideal.
struct Quotient {
  NModule module;
  std::vector<Elem> coset_of;        // M index -> quotient index
  std::vector<Elem> representative;  // quotient index -> least M index
};
Quotient quotient_module(const NearRing& N, const NModule& M, const Subset& L);

/// Homomorphism M1 -> M2 fixed by g -> b, or the relation that b fails.
struct HomResult {
  bool well_defined = false;
  std::vector<Elem> map;  // M1 index -> M2 index, when well_defined
  // When not well defined: x in M1 reached with two images (x, y1, y2).
  std::optional<Triple> conflict;
};

/// Closes {(g, b)} under addition, negation and the N-action. Throws
/// PreconditionError if g does not generate M1.
HomResult hom_from_cyclic_generator(const NearRing& N, const NModule& M1, Elem g,
                                    const NModule& M2, Elem b);

/// Submodule of M generated by g (closure of {g} under +, - and the action).
Subset generated_submodule(const NearRing& N, const NModule& M, Elem g);

enum class IsoMode { generator, bruteforce, automatic };

/// Additive N-linear bijection from M1 onto the subset `target` of M2
/// (target = all of M2 when omitted). Images are evaluated in M2, so a
/// target not closed under the action admits no isomorphism.
std::optional<std::vector<Elem>> modules_isomorphic(const NearRing& N, const NModule& M1,
                                                    const NModule& M2,
                                                    const Subset& target, IsoMode mode,
                                                    const Caps& caps = {});
std::optional<std::vector<Elem>> modules_isomorphic(const NearRing& N, const NModule& M1,
                                                    const NModule& M2, IsoMode mode,
                                                    const Caps& caps = {});

/// True iff `map` is an additive N-linear bijection M1 -> target.
bool is_module_isomorphism(const NearRing& N, const NModule& M1, const NModule& M2,
                           const Subset& target, const std::vector<Elem>& map);

}  // namespace nearring
