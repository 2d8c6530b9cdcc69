#include "nearring/catalog.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "nearring/build.hpp"

namespace nearring {

namespace {

Table table_from(std::initializer_list<std::initializer_list<Elem>> rows) {
  Table t(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (Elem e : row) t(i, j++) = e;
    ++i;
  }
  return t;
}

NearRing klein4_ring() {
  Table add = table_from({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  Table mul = table_from({{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 2, 3}, {0, 0, 3, 3}});
  return make_nearring(add, mul, 2, {"0", "a", "b", "c"}, "klein4_ring");
}

NearRing zn_ring(std::size_t n) {
  Table add(n, n), mul(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add(i, j) = static_cast<Elem>((i + j) % n);
      mul(i, j) = static_cast<Elem>((i * j) % n);
    }
  return make_nearring(add, mul, 1, {}, "zn_ring(" + std::to_string(n) + ")");
}

// 2x2 matrices over F2, [[p,q],[r,s]] at index 8p + 4q + 2r + s.
NearRing mat2_f2() {
  auto entries = [](std::size_t i) {
    return std::array<unsigned, 4>{unsigned(i >> 3) & 1u, unsigned(i >> 2) & 1u,
                                   unsigned(i >> 1) & 1u, unsigned(i) & 1u};
  };
  Table add(16, 16), mul(16, 16);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 16; ++i) {
    auto [p, q, r, s] = entries(i);
    labels.push_back("[" + std::to_string(p) + std::to_string(q) + ";" + std::to_string(r) +
                     std::to_string(s) + "]");
    for (std::size_t j = 0; j < 16; ++j) {
      auto [p2, q2, r2, s2] = entries(j);
      add(i, j) = static_cast<Elem>(i ^ j);
      unsigned a = (p * p2 + q * r2) & 1u, b = (p * q2 + q * s2) & 1u;
      unsigned c = (r * p2 + s * r2) & 1u, d = (r * q2 + s * s2) & 1u;
      mul(i, j) = static_cast<Elem>(8 * a + 4 * b + 2 * c + d);
    }
  }
  return make_nearring(add, mul, 9, std::move(labels), "mat2_f2");
}

NearRing ext_f2_f2() {
  NearRing F2 = zn_ring(2).renamed("f2");
  Table action(2, 2);
  for (Elem r = 0; r < 2; ++r)
    for (Elem m = 0; m < 2; ++m) action(r, m) = r * m;
  NModule M = make_module(F2, cyclic_group(2), action, "f2");
  return build_extension(F2, M).renamed("ext_f2_f2");
}

NearRing ext_mat2f2_f2sq() {
  NearRing R = mat2_f2();
  // Column vectors (v1, v2) at index 2 v1 + v2.
  Table add(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) add(i, j) = static_cast<Elem>(i ^ j);
  auto g = validate_group(add, {"00", "01", "10", "11"});
  Table action(16, 4);
  for (std::size_t a = 0; a < 16; ++a) {
    unsigned p = (a >> 3) & 1u, q = (a >> 2) & 1u, r = (a >> 1) & 1u, s = a & 1u;
    for (std::size_t v = 0; v < 4; ++v) {
      unsigned v1 = (v >> 1) & 1u, v2 = v & 1u;
      unsigned w1 = (p * v1 + q * v2) & 1u, w2 = (r * v1 + s * v2) & 1u;
      action(a, v) = static_cast<Elem>(2 * w1 + w2);
    }
  }
  NModule M = make_module(R, std::get<FiniteGroup>(std::move(g)), action, "f2sq");
  return build_extension(R, M).renamed("ext_mat2f2_f2sq");
}

NearRing m0_klein4() {
  const NearRing K = klein4_ring();
  return build_M0(K.group()).renamed("m0_klein4");
}

using Factory = NearRing (*)();

const std::map<std::string, Factory>& fixed_entries() {
  static const std::map<std::string, Factory> entries = {
      {"klein4_ring", &klein4_ring},
      {"m0_z2", [] { return build_M0(cyclic_group(2)).renamed("m0_z2"); }},
      {"m0_z3", [] { return build_M0(cyclic_group(3)).renamed("m0_z3"); }},
      {"m0_z4", [] { return build_M0(cyclic_group(4)).renamed("m0_z4"); }},
      {"m0_klein4", &m0_klein4},
      {"mat2_f2", &mat2_f2},
      {"ext_f2_f2", &ext_f2_f2},
      {"ext_mat2f2_f2sq", &ext_mat2f2_f2sq},
      {"klein4_x_f2",
       [] { return build_product({klein4_ring(), zn_ring(2)}).renamed("klein4_x_f2"); }},
      {"z2_x_z4", [] { return build_product({zn_ring(2), zn_ring(4)}).renamed("z2_x_z4"); }},
      {"m0_z3_x_f2",
       [] {
         return build_product({build_M0(cyclic_group(3)).renamed("m0_z3"), zn_ring(2)})
             .renamed("m0_z3_x_f2");
       }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : fixed_entries()) names.push_back(name);
  for (std::size_t n = 2; n <= 64; ++n) names.push_back("zn_ring(" + std::to_string(n) + ")");
  std::sort(names.begin(), names.end());
  return names;
}

NearRing builtin(const std::string& name) {
  const auto& fixed = fixed_entries();
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  static const std::regex zn(R"(zn_ring\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, zn)) {
    auto n = std::stoul(m[1].str());
    if (n < 2 || n > 64) throw Error("zn_ring parameter must lie in [2, 64]");
    return zn_ring(n);
  }
  throw Error("unknown builtin '" + name + "'");
}

std::vector<std::string> default_corpus_names() {
  std::vector<std::string> names = {"klein4_ring", "m0_z2",       "m0_z3",     "m0_z4",
                                    "m0_klein4",   "mat2_f2",     "ext_f2_f2", "ext_mat2f2_f2sq",
                                    "klein4_x_f2", "z2_x_z4",     "m0_z3_x_f2"};
  for (std::size_t n = 2; n <= 16; ++n) names.push_back("zn_ring(" + std::to_string(n) + ")");
  return names;
}

std::vector<NearRing> default_corpus() {
  std::vector<NearRing> out;
  for (const auto& n : default_corpus_names()) out.push_back(builtin(n));
  return out;
}

std::optional<NearRing> recognise(const NearRing& N) {
  static const std::vector<NearRing> all = [] {
    std::vector<NearRing> v;
    for (const auto& [name, make] : fixed_entries()) v.push_back(make());
    return v;
  }();
  for (const auto& B : all)
    if (B.order() == N.order() && B.same_tables(N)) return B;
  return std::nullopt;
}

}  // namespace nearring
