#include "nearring/nearring.hpp"

#include <sstream>

#include "nearring/subset.hpp"

namespace nearring {

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Elem x) {
    if (!first) os << ',';
    os << x;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string to_string(Law law) {
  switch (law) {
    case Law::add_assoc: return "add_assoc";
    case Law::add_identity: return "add_identity";
    case Law::add_inverse: return "add_inverse";
    case Law::mul_assoc: return "mul_assoc";
    case Law::right_dist: return "right_dist";
    case Law::unity: return "unity";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << to_string(law) << " violated at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ')';
  return os.str();
}

namespace {

void check_square(const Table& t, std::size_t n, const char* what) {
  if (t.rows() != n || t.cols() != n)
    throw FormatError(std::string(what) + " table is not " + std::to_string(n) + "x" +
                      std::to_string(n));
  for (Elem e : t.data())
    if (e >= n) throw FormatError(std::string(what) + " table entry out of range");
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw FormatError("label count does not match order");
  return labels;
}

}  // namespace

std::optional<Pair> FiniteGroup::noncommuting_pair() const {
  return find_first_pair(order(), [&](Elem x, Elem y) { return add(x, y) != add(y, x); },
                         Exec::serial);
}

std::variant<FiniteGroup, AxiomViolation> validate_group(const Table& add,
                                                         std::vector<std::string> labels,
                                                         Exec exec) {
  const std::size_t n = add.rows();
  if (n == 0) throw FormatError("group order must be positive");
  check_square(add, n, "add");

  for (std::size_t x = 0; x < n; ++x)
    if (add(0, x) != x || add(x, 0) != x)
      return AxiomViolation{Law::add_identity, {static_cast<Elem>(x)}};

  std::vector<Elem> neg(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      if (add(x, y) == 0 && add(y, x) == 0) {
        neg[x] = static_cast<Elem>(y);
        found = true;
      }
    }
    if (!found) return AxiomViolation{Law::add_inverse, {static_cast<Elem>(x)}};
  }

  auto bad = find_first_triple(
      n, [&](Elem x, Elem y, Elem z) { return add(add(x, y), z) != add(x, add(y, z)); },
      exec);
  if (bad) return AxiomViolation{Law::add_assoc, {(*bad)[0], (*bad)[1], (*bad)[2]}};

  FiniteGroup g;
  g.add_ = add;
  g.neg_ = std::move(neg);
  g.labels_ = default_labels(n, std::move(labels));
  return g;
}

Elem NearRing::unity() const {
  if (!one_) throw PreconditionError("near-ring '" + name_ + "' has no unity");
  return *one_;
}

NearRing NearRing::renamed(std::string name) const {
  NearRing r = *this;
  r.name_ = std::move(name);
  return r;
}

NearRing NearRing::with_provenance(std::shared_ptr<const Provenance> p) const {
  NearRing r = *this;
  r.provenance_ = std::move(p);
  return r;
}

std::optional<Elem> NearRing::find(const std::string& key) const {
  for (std::size_t i = 0; i < order(); ++i)
    if (label(static_cast<Elem>(i)) == key) return static_cast<Elem>(i);
  if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
    auto v = std::stoull(key);
    if (v < order()) return static_cast<Elem>(v);
  }
  return std::nullopt;
}

std::variant<NearRing, AxiomViolation> validate_nearring(const Table& add, const Table& mul,
                                                         std::optional<Elem> one,
                                                         std::vector<std::string> labels,
                                                         std::string name, Exec exec) {
  auto g = validate_group(add, std::move(labels), exec);
  if (auto* v = std::get_if<AxiomViolation>(&g)) return *v;
  auto& group = std::get<FiniteGroup>(g);
  const std::size_t n = group.order();
  check_square(mul, n, "mul");
  if (one && *one >= n) throw FormatError("declared one is out of range");

  auto m = [&](Elem x, Elem y) { return mul(x, y); };
  auto a = [&](Elem x, Elem y) { return add(x, y); };

  if (auto bad = find_first_triple(
          n, [&](Elem x, Elem y, Elem z) { return m(m(x, y), z) != m(x, m(y, z)); }, exec))
    return AxiomViolation{Law::mul_assoc, {(*bad)[0], (*bad)[1], (*bad)[2]}};

  if (auto bad = find_first_triple(
          n, [&](Elem x, Elem y, Elem z) { return m(a(x, y), z) != a(m(x, z), m(y, z)); },
          exec))
    return AxiomViolation{Law::right_dist, {(*bad)[0], (*bad)[1], (*bad)[2]}};

  auto is_unity = [&](Elem e) -> std::optional<Elem> {
    for (std::size_t x = 0; x < n; ++x)
      if (m(e, static_cast<Elem>(x)) != x || m(static_cast<Elem>(x), e) != x)
        return static_cast<Elem>(x);
    return std::nullopt;
  };
  std::optional<Elem> unity;
  if (one) {
    if (*one == 0 && n > 1) return AxiomViolation{Law::unity, {0}};
    if (auto x = is_unity(*one)) return AxiomViolation{Law::unity, {*one, *x}};
    if (n > 1) unity = one;
  } else if (n > 1) {
    for (std::size_t e = 1; e < n && !unity; ++e)
      if (!is_unity(static_cast<Elem>(e))) unity = static_cast<Elem>(e);
  }

  NearRingFlags flags;
  flags.right_distributive = Flag::yes();
  if (auto bad = find_first_triple(
          n, [&](Elem x, Elem y, Elem z) { return m(x, a(y, z)) != a(m(x, y), m(x, z)); },
          exec))
    flags.left_distributive = Flag::no({(*bad)[0], (*bad)[1], (*bad)[2]});
  if (auto p = group.noncommuting_pair()) flags.abelian_add = Flag::no({(*p)[0], (*p)[1]});
  for (std::size_t x = 0; x < n; ++x)
    if (m(static_cast<Elem>(x), 0) != 0) {
      flags.zero_symmetric = Flag::no({static_cast<Elem>(x)});
      break;
    }
  flags.unital = unity ? Flag::yes() : Flag::no({});
  if (auto p = find_first_pair(n, [&](Elem x, Elem y) { return m(x, y) != m(y, x); },
                               Exec::serial))
    flags.commutative_mul = Flag::no({(*p)[0], (*p)[1]});

  NearRing r;
  r.group_ = std::move(group);
  r.mul_ = mul;
  r.one_ = unity;
  r.flags_ = std::move(flags);
  r.name_ = std::move(name);
  // Right distributivity forces 0*x = 0.
  for (std::size_t x = 0; x < n; ++x)
    if (r.mul_(0, x) != 0) throw Error("internal: 0*x != 0 after validation");
  return r;
}

NearRing make_nearring(const Table& add, const Table& mul, std::optional<Elem> one,
                       std::vector<std::string> labels, std::string name) {
  auto v = validate_nearring(add, mul, one, std::move(labels), name);
  if (auto* bad = std::get_if<AxiomViolation>(&v))
    throw Error("construction of '" + name + "' produced invalid tables: " +
                bad->describe());
  return std::get<NearRing>(std::move(v));
}

bool violation_reproduces(const Table& add, const Table& mul, std::optional<Elem> one,
                          const AxiomViolation& v) {
  const std::size_t n = add.rows();
  const auto& w = v.witness;
  auto in_range = [&](std::size_t k) {
    if (w.size() != k) return false;
    for (Elem e : w)
      if (e >= n) return false;
    return true;
  };
  switch (v.law) {
    case Law::add_identity:
      return in_range(1) && (add(0, w[0]) != w[0] || add(w[0], 0) != w[0]);
    case Law::add_inverse:
      if (!in_range(1)) return false;
      for (std::size_t y = 0; y < n; ++y)
        if (add(w[0], y) == 0 && add(y, w[0]) == 0) return false;
      return true;
    case Law::add_assoc:
      return in_range(3) && add(add(w[0], w[1]), w[2]) != add(w[0], add(w[1], w[2]));
    case Law::mul_assoc:
      return in_range(3) && mul(mul(w[0], w[1]), w[2]) != mul(w[0], mul(w[1], w[2]));
    case Law::right_dist:
      return in_range(3) &&
             mul(add(w[0], w[1]), w[2]) != add(mul(w[0], w[2]), mul(w[1], w[2]));
    case Law::unity:
      if (w.size() == 1) return w[0] == 0 && n > 1 && one == Elem{0};
      return in_range(2) && one == w[0] &&
             (mul(w[0], w[1]) != w[1] || mul(w[1], w[0]) != w[1]);
  }
  return false;
}

}  // namespace nearring
