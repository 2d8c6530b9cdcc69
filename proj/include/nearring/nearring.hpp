#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nearring/kernels.hpp"
#include "nearring/types.hpp"

namespace nearring {

enum class Law { add_assoc, add_identity, add_inverse, mul_assoc, right_dist, unity };

std::string to_string(Law law);

/// A failed axiom together with the element tuple that breaks it.
struct AxiomViolation {
  Law law;
  std::vector<Elem> witness;

  std::string describe() const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Additive group given by its Cayley table. Index 0 is the identity.
/// Commutativity is not assumed.
class FiniteGroup {
 public:
  std::size_t order() const { return add_.rows(); }
  Elem add(Elem x, Elem y) const { return add_(x, y); }
  Elem neg(Elem x) const { return neg_[x]; }
  /// x - y, i.e. x + (-y).
  Elem sub(Elem x, Elem y) const { return add_(x, neg_[y]); }

  const Table& add_table() const { return add_; }
  const std::vector<Elem>& neg_table() const { return neg_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }

  /// First (x, y) with x + y != y + x, if any.
  std::optional<Pair> noncommuting_pair() const;

 private:
  friend std::variant<FiniteGroup, AxiomViolation> validate_group(
      const Table&, std::vector<std::string>, Exec);
  Table add_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
};

/// Checks shape (throws FormatError), identity at index 0, two-sided
/// inverses and associativity, in that order. Missing labels default to
/// decimal indices.
std::variant<FiniteGroup, AxiomViolation> validate_group(
    const Table& add, std::vector<std::string> labels = {}, Exec exec = Exec::parallel);

/// A law that either holds or carries the tuple that breaks it.
struct Flag {
  bool holds = true;
  std::vector<Elem> witness;

  static Flag yes() { return {}; }
  static Flag no(std::vector<Elem> w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

struct NearRingFlags {
  Flag right_distributive;
  Flag left_distributive;   // witness (x, y, z): x(y+z) != xy + xz
  Flag abelian_add;         // witness (x, y)
  Flag zero_symmetric;      // witness (x): x*0 != 0
  Flag unital;              // no witness
  Flag commutative_mul;     // witness (x, y)
};

struct Provenance;

/// Finite right near-ring: (N,+) a group, (N,*) a semigroup and
/// (x+y)*z = x*z + y*z. Only obtainable through validate_nearring, so every
/// instance satisfies the axioms.
class NearRing {
 public:
  std::size_t order() const { return group_.order(); }
  const std::string& name() const { return name_; }

  const FiniteGroup& group() const& { return group_; }
  const FiniteGroup& group() const&& = delete;
  Elem add(Elem x, Elem y) const { return group_.add(x, y); }
  Elem neg(Elem x) const { return group_.neg(x); }
  Elem sub(Elem x, Elem y) const { return group_.sub(x, y); }
  Elem mul(Elem x, Elem y) const { return mul_(x, y); }
  Elem mul(Elem x, Elem y, Elem z) const { return mul_(mul_(x, y), z); }

  const Table& add_table() const { return group_.add_table(); }
  const Table& mul_table() const { return mul_; }
  const std::vector<std::string>& labels() const { return group_.labels(); }
  const std::string& label(Elem x) const { return group_.label(x); }

  std::optional<Elem> one() const { return one_; }
  bool is_unital() const { return one_.has_value(); }
  /// The unity; throws PreconditionError on a non-unital near-ring.
  Elem unity() const;

  const NearRingFlags& flags() const { return flags_; }
  bool is_ring() const {
    return flags_.abelian_add.holds && flags_.left_distributive.holds;
  }

  /// Construction recipe, when built by one of the builders.
  const Provenance* provenance() const { return provenance_.get(); }

  NearRing renamed(std::string name) const;
  NearRing with_provenance(std::shared_ptr<const Provenance> p) const;

  /// Finds an element by label or decimal index.
  std::optional<Elem> find(const std::string& label_or_index) const;

  /// Same tables, unity and labels.
  bool same_tables(const NearRing& other) const {
    return add_table() == other.add_table() && mul_ == other.mul_ &&
           one_ == other.one_;
  }

 private:
  friend std::variant<NearRing, AxiomViolation> validate_nearring(
      const Table&, const Table&, std::optional<Elem>, std::vector<std::string>,
      std::string, Exec);
  FiniteGroup group_;
  Table mul_;
  std::optional<Elem> one_;
  NearRingFlags flags_;
  std::string name_;
  std::shared_ptr<const Provenance> provenance_;
};

/// Validates the near-ring axioms (group, multiplicative associativity,
/// right distributivity), then computes every flag exhaustively. When `one`
/// is absent the unity is searched; a declared `one` that fails the unity
/// law is reported as Law::unity. Shape errors throw FormatError.
std::variant<NearRing, AxiomViolation> validate_nearring(
    const Table& add, const Table& mul, std::optional<Elem> one = std::nullopt,
    std::vector<std::string> labels = {}, std::string name = {},
    Exec exec = Exec::parallel);

/// validate_nearring for tables known to be valid (builders, catalog);
/// throws Error with the violation text otherwise.
NearRing make_nearring(const Table& add, const Table& mul, std::optional<Elem> one,
                       std::vector<std::string> labels, std::string name);

/// True iff `v` is really broken by its witness on the raw tables.
bool violation_reproduces(const Table& add, const Table& mul, std::optional<Elem> one,
                          const AxiomViolation& v);

/// Additive group of an NModule or a module base, kept separate from
/// NearRing so a Provenance can hold it without a cycle.
struct ExtensionParts {
  NearRing base;            // ring R
  FiniteGroup module_group; // (M,+)
  Table action;             // |R| x |M|, action(r, m) = r m
};

struct Provenance {
  enum class Kind { product, extension, maps };
  Kind kind;
  std::vector<NearRing> factors;         // product
  std::optional<ExtensionParts> ext;     // extension
  std::optional<FiniteGroup> maps_group; // M0(G)
};

}  // namespace nearring
