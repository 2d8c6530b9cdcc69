#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearring/module.hpp"
#include "nearring/nearring.hpp"
#include "nearring/subset.hpp"

namespace nearring {

/// Outcome of the left-morphic test for one element.
struct MorphicVerdict {
  enum class Status { morphic, na_not_ideal, no_witness };
  Status status = Status::no_witness;
  Elem witness = 0;      // b with Na = (0:_l b) and Nb = (0:_l a), when morphic
  IdealVerdict ideal;    // why Na is not an N-ideal, when na_not_ideal
  bool cross_checked = false;

  bool is_morphic() const { return status == Status::morphic; }
};

std::string to_string(MorphicVerdict::Status s);

/// Exhaustive per-element classification; every witness is the least index
/// that works.
struct ElementProfile {
  Elem index = 0;
  std::string label;
  bool unital = false;  // unit-dependent fields are meaningful only when set

  std::optional<Elem> inverse;            // present iff a is a unit
  bool is_idempotent = false;
  bool is_central = false;                // a x = x a for all x
  std::size_t nilpotency_index = 0;       // least k with a^k = 0, 0 if none
  std::optional<Elem> regular;            // x with a = a x a
  std::optional<Elem> unit_regular;       // unit u with a = a u a
  std::optional<Elem> left_strongly_regular;   // x with a = x a^2
  std::optional<Elem> right_strongly_regular;  // x with a = a^2 x
  std::optional<MorphicVerdict> morphic;  // absent when not unital

  std::size_t left_orbit_size = 0;   // |Na|
  std::size_t right_orbit_size = 0;  // |aN|
  std::size_t left_ann_size = 0;     // |(0:_l a)|
  std::size_t right_ann_size = 0;    // |(0:_r a)|

  bool is_unit() const { return inverse.has_value(); }
  bool is_regular() const { return regular.has_value(); }
  bool is_unit_regular() const { return unit_regular.has_value(); }
  bool is_lsr() const { return left_strongly_regular.has_value(); }
  bool is_rsr() const { return right_strongly_regular.has_value(); }
  bool is_left_morphic() const { return morphic && morphic->is_morphic(); }
};

/// Structure-level predicates. A false flag carries the first
/// counterexample tuple in ascending scan order.
struct StructureProfile {
  Flag zero_symmetric;
  Flag abelian_add;
  Flag is_ring;
  Flag is_near_field;            // (a): nonzero non-unit, () if not unital
  Flag reduced;                  // (a): nonzero nilpotent
  Flag has_ifp;                  // (a, b, n): ab = 0, anb != 0
  Flag subcommutative;           // (a): Na != aN
  Flag boolean;                  // (a): a^2 != a
  Flag weakly_divisible;         // (a, b)
  Flag idempotents_central;      // (e, x): ex != xe
  Flag regular;                  // (a)
  Flag left_strongly_regular;    // (a)
  Flag right_strongly_regular;   // (a)
  Flag generalised_near_field;   // regular and subcommutative
  std::optional<Flag> left_duo;  // (l, n) with l n outside a left ideal; absent above the cap
  std::optional<Subset> left_duo_counterexample;
  std::optional<Flag> unit_regular;  // absent when not unital
  std::optional<Flag> left_morphic;  // absent when not unital

  bool is_unit_regular() const { return unit_regular && unit_regular->holds; }
  bool is_left_morphic() const { return left_morphic && left_morphic->holds; }
  bool is_left_morphic_regular() const { return is_left_morphic() && regular.holds; }
};

/// Everything the classifier knows about one near-ring, computed once.
/// Immutable after construction; safe to share across threads.
class Analysis {
 public:
  /// Throws CapExceeded above caps.classify.
  explicit Analysis(NearRing N, Exec exec = Exec::parallel, Caps caps = {});

  const NearRing& ring() const { return N_; }
  std::size_t order() const { return N_.order(); }
  const Caps& caps() const { return caps_; }
  Exec exec() const { return exec_; }

  const Subset& left_orbit(Elem a) const { return left_orbit_[a]; }
  const Subset& right_orbit(Elem a) const { return right_orbit_[a]; }
  const Subset& left_ann(Elem a) const { return left_ann_[a]; }
  const Subset& right_ann(Elem a) const { return right_ann_[a]; }
  const IdealVerdict& left_orbit_ideal(Elem a) const { return *orbit_ideal_[a]; }

  /// Throws PreconditionError when not unital.
  const Subset& units() const;
  std::optional<Elem> inverse(Elem a) const { return inverse_[a]; }
  bool is_unit(Elem a) const { return inverse_[a].has_value(); }

  const ElementProfile& profile(Elem a) const { return profiles_[a]; }
  const std::vector<ElementProfile>& profiles() const { return profiles_; }
  const StructureProfile& structure() const { return structure_; }

  /// Witness-search verdict; throws PreconditionError when not unital.
  const MorphicVerdict& morphic(Elem a) const;

  const NModule& regular_module() const { return regular_; }

  std::vector<Elem> idempotents() const;

 private:
  void compute_profiles();
  void compute_structure();

  NearRing N_;
  Exec exec_;
  Caps caps_;
  NModule regular_;
  std::vector<Subset> left_orbit_, right_orbit_, left_ann_, right_ann_;
  std::vector<std::shared_ptr<const IdealVerdict>> orbit_ideal_;
  Subset units_;
  std::vector<std::optional<Elem>> inverse_;
  std::vector<ElementProfile> profiles_;
  StructureProfile structure_;
};

/// All units with their inverses; throws PreconditionError if not unital.
struct UnitGroup {
  Subset units;
  std::vector<std::optional<Elem>> inverse;
};
UnitGroup units(const NearRing& N);

ElementProfile element_profile(const NearRing& N, Elem a);

/// Witness search: Na must be an N-ideal, then the least b with
/// Na = (0:_l b) and Nb = (0:_l a). With cross_check on |N| <= 8 the
/// module-isomorphism route also runs and must agree (throws Error if not).
MorphicVerdict is_left_morphic(const NearRing& N, Elem a, bool cross_check = false,
                               const Caps& caps = {});

/// Module route: Na is an N-ideal and N/Na is isomorphic to (0:_l a) as a
/// subset of the regular module. Returns the isomorphism when one exists.
struct IsoVerdict {
  bool na_is_ideal = false;
  std::optional<std::vector<Elem>> iso;  // quotient index -> element of (0:_l a)
  bool holds() const { return na_is_ideal && iso.has_value(); }
};
IsoVerdict morphic_by_isomorphism(const NearRing& N, Elem a, IsoMode mode,
                                  const Caps& caps = {});

StructureProfile structure_profile(const NearRing& N, Exec exec = Exec::parallel);

}  // namespace nearring
