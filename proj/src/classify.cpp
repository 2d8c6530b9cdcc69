#include "nearring/classify.hpp"

#include <map>

namespace nearring {

std::string to_string(MorphicVerdict::Status s) {
  switch (s) {
    case MorphicVerdict::Status::morphic: return "morphic";
    case MorphicVerdict::Status::na_not_ideal: return "na_not_ideal";
    case MorphicVerdict::Status::no_witness: return "no_witness";
  }
  return "?";
}

namespace {

std::vector<std::optional<Elem>> inverse_table(const NearRing& N) {
  const std::size_t n = N.order();
  std::vector<std::optional<Elem>> inv(n);
  if (!N.is_unital()) return inv;
  const Elem one = N.unity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (N.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == one &&
          N.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == one) {
        inv[a] = static_cast<Elem>(b);
        break;
      }
  return inv;
}

MorphicVerdict witness_search(const IdealVerdict& na_ideal, Elem a, std::size_t n,
                              const std::vector<Subset>& left_orbit,
                              const std::vector<Subset>& left_ann) {
  MorphicVerdict v;
  if (!na_ideal.is_ideal()) {
    v.status = MorphicVerdict::Status::na_not_ideal;
    v.ideal = na_ideal;
    return v;
  }
  for (std::size_t b = 0; b < n; ++b)
    if (left_ann[b] == left_orbit[a] && left_orbit[b] == left_ann[a]) {
      v.status = MorphicVerdict::Status::morphic;
      v.witness = static_cast<Elem>(b);
      return v;
    }
  v.status = MorphicVerdict::Status::no_witness;
  return v;
}

}  // namespace

Analysis::Analysis(NearRing N, Exec exec, Caps caps)
    : N_(std::move(N)), exec_(exec), caps_(caps) {
  const std::size_t n = N_.order();
  if (n > caps_.classify)
    throw CapExceeded("classification is capped at order " + std::to_string(caps_.classify));
  regular_ = regular_representation(N_);
  left_orbit_ = map_indices<Subset>(n, [&](Elem a) { return orbit(N_, Side::left, a); }, exec_);
  right_orbit_ = map_indices<Subset>(n, [&](Elem a) { return orbit(N_, Side::right, a); }, exec_);
  left_ann_ = map_indices<Subset>(n, [&](Elem a) { return annihilator(N_, Side::left, a); }, exec_);
  right_ann_ = map_indices<Subset>(n, [&](Elem a) { return annihilator(N_, Side::right, a); }, exec_);

  // Many elements share Na; decide each distinct set once.
  std::map<Subset, std::size_t> slot;
  std::vector<Subset> distinct;
  for (const auto& s : left_orbit_)
    if (slot.emplace(s, distinct.size()).second) distinct.push_back(s);
  auto verdicts = map_indices<IdealVerdict>(
      distinct.size(), [&](Elem i) { return is_N_ideal(N_, regular_, distinct[i]); }, exec_);
  std::vector<std::shared_ptr<const IdealVerdict>> shared;
  for (auto& v : verdicts) shared.push_back(std::make_shared<const IdealVerdict>(std::move(v)));
  orbit_ideal_.resize(n);
  for (std::size_t a = 0; a < n; ++a) orbit_ideal_[a] = shared[slot.at(left_orbit_[a])];

  inverse_ = inverse_table(N_);
  units_ = Subset(n);
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a]) units_.insert(static_cast<Elem>(a));

  compute_profiles();
  compute_structure();
}

const Subset& Analysis::units() const {
  if (!N_.is_unital()) throw PreconditionError("units of a non-unital near-ring");
  return units_;
}

const MorphicVerdict& Analysis::morphic(Elem a) const {
  if (!N_.is_unital())
    throw PreconditionError("left-morphic test refused on non-unital '" + N_.name() + "'");
  return *profiles_[a].morphic;
}

std::vector<Elem> Analysis::idempotents() const {
  std::vector<Elem> out;
  for (const auto& p : profiles_)
    if (p.is_idempotent) out.push_back(p.index);
  return out;
}

void Analysis::compute_profiles() {
  const std::size_t n = N_.order();
  const bool unital = N_.is_unital();
  profiles_ = map_indices<ElementProfile>(
      n,
      [&](Elem a) {
        ElementProfile p;
        p.index = a;
        p.label = N_.label(a);
        p.unital = unital;
        p.inverse = inverse_[a];
        const Elem sq = N_.mul(a, a);
        p.is_idempotent = sq == a;
        p.is_central = true;
        for (std::size_t x = 0; x < n && p.is_central; ++x)
          p.is_central = N_.mul(a, static_cast<Elem>(x)) == N_.mul(static_cast<Elem>(x), a);
        Elem power = a;
        for (std::size_t k = 1; k <= n; ++k) {
          if (power == 0) {
            p.nilpotency_index = k;
            break;
          }
          power = N_.mul(power, a);
        }
        for (std::size_t x = 0; x < n; ++x) {
          Elem e = static_cast<Elem>(x);
          if (!p.regular && N_.mul(a, e, a) == a) p.regular = e;
          if (unital && !p.unit_regular && inverse_[x] && N_.mul(a, e, a) == a)
            p.unit_regular = e;
          if (!p.left_strongly_regular && N_.mul(e, sq) == a) p.left_strongly_regular = e;
          if (!p.right_strongly_regular && N_.mul(sq, e) == a) p.right_strongly_regular = e;
        }
        if (unital) p.morphic = witness_search(*orbit_ideal_[a], a, n, left_orbit_, left_ann_);
        p.left_orbit_size = left_orbit_[a].size();
        p.right_orbit_size = right_orbit_[a].size();
        p.left_ann_size = left_ann_[a].size();
        p.right_ann_size = right_ann_[a].size();
        return p;
      },
      exec_);
}

void Analysis::compute_structure() {
  const std::size_t n = N_.order();
  const auto& f = N_.flags();
  StructureProfile& s = structure_;
  s.zero_symmetric = f.zero_symmetric;
  s.abelian_add = f.abelian_add;
  if (!f.abelian_add) s.is_ring = f.abelian_add;
  else s.is_ring = f.left_distributive;

  auto first_elem = [&](auto pred) -> Flag {
    for (std::size_t a = 0; a < n; ++a)
      if (pred(profiles_[a])) return Flag::no({static_cast<Elem>(a)});
    return Flag::yes();
  };

  if (!N_.is_unital()) s.is_near_field = Flag::no({});
  else
    s.is_near_field =
        first_elem([](const ElementProfile& p) { return p.index != 0 && !p.is_unit(); });
  s.reduced = first_elem(
      [](const ElementProfile& p) { return p.index != 0 && p.nilpotency_index > 0; });
  s.boolean = first_elem([](const ElementProfile& p) { return !p.is_idempotent; });
  s.regular = first_elem([](const ElementProfile& p) { return !p.is_regular(); });
  s.left_strongly_regular = first_elem([](const ElementProfile& p) { return !p.is_lsr(); });
  s.right_strongly_regular = first_elem([](const ElementProfile& p) { return !p.is_rsr(); });
  s.subcommutative = Flag::yes();
  for (std::size_t a = 0; a < n; ++a)
    if (!(left_orbit_[a] == right_orbit_[a])) {
      s.subcommutative = Flag::no({static_cast<Elem>(a)});
      break;
    }

  if (auto t = find_first_triple(
          n,
          [&](Elem a, Elem b, Elem m) {
            return N_.mul(a, b) == 0 && N_.mul(a, m, b) != 0;
          },
          exec_))
    s.has_ifp = Flag::no({(*t)[0], (*t)[1], (*t)[2]});

  if (auto p = find_first_pair(
          n,
          [&](Elem a, Elem b) {
            for (std::size_t x = 0; x < n; ++x)
              if (N_.mul(static_cast<Elem>(x), a) == b || N_.mul(static_cast<Elem>(x), b) == a)
                return false;
            return true;
          },
          exec_))
    s.weakly_divisible = Flag::no({(*p)[0], (*p)[1]});

  if (auto p = find_first_pair(
          n,
          [&](Elem e, Elem x) {
            return profiles_[e].is_idempotent && N_.mul(e, x) != N_.mul(x, e);
          },
          exec_))
    s.idempotents_central = Flag::no({(*p)[0], (*p)[1]});

  s.generalised_near_field = !s.regular.holds ? s.regular : s.subcommutative;

  if (N_.is_unital()) {
    s.unit_regular = first_elem([](const ElementProfile& p) { return !p.is_unit_regular(); });
    s.left_morphic = first_elem([](const ElementProfile& p) { return !p.is_left_morphic(); });
  }

  if (n <= caps_.ideal_enumeration) {
    auto ideals = enumerate_left_ideals(N_, caps_, exec_);
    for (const Subset& L : ideals.ideals) {
      auto cls = is_ideal(N_, L);
      if (cls.kind == IdealKind::left_ideal) {
        s.left_duo = Flag::no({(*cls.not_closed_right)[0], (*cls.not_closed_right)[1]});
        s.left_duo_counterexample = L;
        break;
      }
    }
    if (!s.left_duo && ideals.complete) s.left_duo = Flag::yes();
  }
}

UnitGroup units(const NearRing& N) {
  if (!N.is_unital()) throw PreconditionError("units of a non-unital near-ring");
  UnitGroup g{Subset(N.order()), inverse_table(N)};
  for (std::size_t a = 0; a < N.order(); ++a)
    if (g.inverse[a]) g.units.insert(static_cast<Elem>(a));
  return g;
}

ElementProfile element_profile(const NearRing& N, Elem a) {
  if (a >= N.order()) throw PreconditionError("element index out of range");
  return Analysis(N).profile(a);
}

IsoVerdict morphic_by_isomorphism(const NearRing& N, Elem a, IsoMode mode, const Caps& caps) {
  if (!N.is_unital()) throw PreconditionError("left-morphic test refused on non-unital near-ring");
  IsoVerdict v;
  NModule R = regular_representation(N);
  Subset Na = orbit(N, Side::left, a);
  v.na_is_ideal = is_N_ideal(N, R, Na).is_ideal();
  if (!v.na_is_ideal) return v;
  Quotient q = quotient_module(N, R, Na);
  v.iso = modules_isomorphic(N, q.module, R, annihilator(N, Side::left, a), mode, caps);
  return v;
}

MorphicVerdict is_left_morphic(const NearRing& N, Elem a, bool cross_check, const Caps& caps) {
  if (!N.is_unital()) throw PreconditionError("left-morphic test refused on non-unital near-ring");
  const std::size_t n = N.order();
  if (a >= n) throw PreconditionError("element index out of range");
  std::vector<Subset> left_orbit(n), left_ann(n);
  for (std::size_t x = 0; x < n; ++x) {
    left_orbit[x] = orbit(N, Side::left, static_cast<Elem>(x));
    left_ann[x] = annihilator(N, Side::left, static_cast<Elem>(x));
  }
  auto ideal = is_N_ideal(N, regular_representation(N), left_orbit[a]);
  MorphicVerdict v = witness_search(ideal, a, n, left_orbit, left_ann);
  if (cross_check && n <= caps.iso_bruteforce) {
    auto iso = morphic_by_isomorphism(N, a, IsoMode::bruteforce, caps);
    if (iso.holds() != v.is_morphic())
      throw Error("internal: witness search and module isomorphism disagree on element " +
                  std::to_string(a));
    v.cross_checked = true;
  }
  return v;
}

StructureProfile structure_profile(const NearRing& N, Exec exec) {
  return Analysis(N, exec).structure();
}

}  // namespace nearring
