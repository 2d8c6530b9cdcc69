#include "nearring/build.hpp"

#include <numeric>

namespace nearring {

namespace {

FiniteGroup checked_group(const Table& add, std::vector<std::string> labels = {}) {
  auto g = validate_group(add, std::move(labels));
  if (auto* v = std::get_if<AxiomViolation>(&g)) throw Error("invalid group: " + v->describe());
  return std::get<FiniteGroup>(std::move(g));
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) throw CapExceeded("order exceeds cap " + std::to_string(cap));
  }
  return v;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  Table add(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) add(i, j) = static_cast<Elem>((i + j) % n);
  return checked_group(add);
}

Elem product_index(const std::vector<std::size_t>& orders, const std::vector<Elem>& parts) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + parts[i];
  return static_cast<Elem>(idx);
}

std::vector<Elem> product_parts(const std::vector<std::size_t>& orders, Elem index) {
  std::vector<Elem> parts(orders.size());
  std::size_t rest = index;
  for (std::size_t i = orders.size(); i-- > 0;) {
    parts[i] = static_cast<Elem>(rest % orders[i]);
    rest /= orders[i];
  }
  return parts;
}

FiniteGroup product_group(const std::vector<FiniteGroup>& factors) {
  std::vector<std::size_t> orders;
  std::size_t n = 1;
  for (const auto& g : factors) {
    orders.push_back(g.order());
    n *= g.order();
  }
  Table add(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto pi = product_parts(orders, static_cast<Elem>(i));
    for (std::size_t j = 0; j < n; ++j) {
      auto pj = product_parts(orders, static_cast<Elem>(j));
      std::vector<Elem> s(orders.size());
      for (std::size_t f = 0; f < orders.size(); ++f) s[f] = factors[f].add(pi[f], pj[f]);
      add(i, j) = product_index(orders, s);
    }
  }
  return checked_group(add);
}

std::vector<Elem> m0_values(std::size_t n, Elem k) {
  std::vector<Elem> v(n, 0);
  std::size_t rest = k;
  for (std::size_t x = n - 1; x >= 1; --x) {
    v[x] = static_cast<Elem>(rest % n);
    rest /= n;
  }
  return v;
}

NearRing build_M0(const FiniteGroup& G, const Caps& caps) {
  const std::size_t g = G.order();
  if (g < 2) throw PreconditionError("M0(G) needs |G| >= 2");
  const std::size_t n = checked_power(g, g - 1, caps.construct);

  std::vector<std::vector<Elem>> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = m0_values(g, static_cast<Elem>(k));
  auto index_of = [&](const std::vector<Elem>& v) {
    std::size_t idx = 0;
    for (std::size_t x = 1; x < g; ++x) idx = idx * g + v[x];
    return static_cast<Elem>(idx);
  };

  Table add(n, n), mul(n, n);
  std::vector<Elem> tmp(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < g; ++x) tmp[x] = G.add(values[i][x], values[j][x]);
      add(i, j) = index_of(tmp);
      for (std::size_t x = 0; x < g; ++x) tmp[x] = values[i][values[j][x]];
      mul(i, j) = index_of(tmp);
    }
  std::vector<Elem> id(g);
  std::iota(id.begin(), id.end(), Elem{0});

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("f" + std::to_string(k + 1));
  auto prov = std::make_shared<Provenance>();
  prov->kind = Provenance::Kind::maps;
  prov->maps_group = G;
  return make_nearring(add, mul, index_of(id), std::move(labels), "M0")
      .with_provenance(std::move(prov));
}

NearRing build_product(const std::vector<NearRing>& factors, const Caps& caps) {
  if (factors.empty()) throw PreconditionError("product needs at least one factor");
  std::vector<std::size_t> orders;
  std::size_t n = 1;
  for (const auto& f : factors) {
    orders.push_back(f.order());
    n *= f.order();
    if (n > caps.construct) throw CapExceeded("product order exceeds cap " + std::to_string(caps.construct));
  }
  Table add(n, n), mul(n, n);
  std::vector<Elem> s(orders.size()), p(orders.size());
  std::vector<std::vector<Elem>> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = product_parts(orders, static_cast<Elem>(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t f = 0; f < orders.size(); ++f) {
        s[f] = factors[f].add(parts[i][f], parts[j][f]);
        p[f] = factors[f].mul(parts[i][f], parts[j][f]);
      }
      add(i, j) = product_index(orders, s);
      mul(i, j) = product_index(orders, p);
    }
  std::optional<Elem> one;
  bool unital = true;
  std::vector<Elem> ones;
  for (const auto& f : factors) {
    unital = unital && f.is_unital();
    ones.push_back(f.one().value_or(0));
  }
  if (unital) one = product_index(orders, ones);

  std::vector<std::string> labels;
  std::string name;
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = "(";
    for (std::size_t f = 0; f < orders.size(); ++f)
      l += (f ? "," : "") + factors[f].label(parts[i][f]);
    labels.push_back(l + ")");
  }
  for (std::size_t f = 0; f < factors.size(); ++f)
    name += (f ? "_x_" : "") + factors[f].name();

  auto prov = std::make_shared<Provenance>();
  prov->kind = Provenance::Kind::product;
  prov->factors = factors;
  return make_nearring(add, mul, one, std::move(labels), name).with_provenance(std::move(prov));
}

NearRing build_extension(const NearRing& R, const NModule& M, const Caps& caps) {
  if (!R.is_unital() || !R.is_ring())
    throw PreconditionError("extension base must be a unital ring");
  if (M.carrier.noncommuting_pair())
    throw PreconditionError("extension module must have an abelian carrier");
  if (M.action.rows() != R.order() || M.action.cols() != M.order())
    throw FormatError("module action does not match the base ring");
  if (module_law_violation(R, M)) throw PreconditionError("M is not an R-module");
  const std::size_t r = R.order(), m = M.order();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (M.act(static_cast<Elem>(a), M.carrier.add(static_cast<Elem>(x), static_cast<Elem>(y))) !=
            M.carrier.add(M.act(static_cast<Elem>(a), static_cast<Elem>(x)),
                          M.act(static_cast<Elem>(a), static_cast<Elem>(y))))
          throw PreconditionError("M is not an R-module (left distributivity)");
  const std::size_t n = r * m;
  if (n > caps.construct) throw CapExceeded("extension order exceeds cap " + std::to_string(caps.construct));

  auto idx = [&](std::size_t a, std::size_t x) { return static_cast<Elem>(a * m + x); };
  Table add(n, n), mul(n, n);
  for (std::size_t a1 = 0; a1 < r; ++a1)
    for (std::size_t m1 = 0; m1 < m; ++m1)
      for (std::size_t a2 = 0; a2 < r; ++a2)
        for (std::size_t m2 = 0; m2 < m; ++m2) {
          auto A1 = static_cast<Elem>(a1), A2 = static_cast<Elem>(a2);
          auto X1 = static_cast<Elem>(m1), X2 = static_cast<Elem>(m2);
          add(idx(a1, m1), idx(a2, m2)) = idx(R.add(A1, A2), M.carrier.add(X1, X2));
          mul(idx(a1, m1), idx(a2, m2)) =
              idx(R.mul(A1, A2), M.carrier.add(M.act(A1, X2), X1));
        }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t x = 0; x < m; ++x)
      labels.push_back("<" + R.label(static_cast<Elem>(a)) + "," +
                       M.carrier.label(static_cast<Elem>(x)) + ">");
  auto prov = std::make_shared<Provenance>();
  prov->kind = Provenance::Kind::extension;
  prov->ext = ExtensionParts{R, M.carrier, M.action};
  return make_nearring(add, mul, idx(R.unity(), 0), std::move(labels),
                       "ext_" + R.name() + "_" + M.name)
      .with_provenance(std::move(prov));
}

}  // namespace nearring
