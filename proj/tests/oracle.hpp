#pragma once

// Naive reference computations for tests. Everything works on std::set and
// the raw Cayley tables, so none of the library's bitsets, kernels or
// module code is involved.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nearring/nearring.hpp"

namespace oracle {

using nearring::Elem;
using Set = std::set<Elem>;

struct Tables {
  std::size_t n;
  std::vector<std::vector<Elem>> add, mul;
  std::optional<Elem> one;

  explicit Tables(const nearring::NearRing& N) : n(N.order()), one(N.one()) {
    add.assign(n, std::vector<Elem>(n));
    mul.assign(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        add[i][j] = N.add_table()(i, j);
        mul[i][j] = N.mul_table()(i, j);
      }
  }

  Elem neg(Elem x) const {
    for (Elem y = 0; y < n; ++y)
      if (add[x][y] == 0) return y;
    return 0;
  }
  Elem sub(Elem x, Elem y) const { return add[x][neg(y)]; }

  Set orbit(Elem a) const {
    Set s;
    for (Elem r = 0; r < n; ++r) s.insert(mul[r][a]);
    return s;
  }
  Set right_orbit(Elem a) const {
    Set s;
    for (Elem r = 0; r < n; ++r) s.insert(mul[a][r]);
    return s;
  }
  Set ann(Elem a) const {
    Set s;
    for (Elem x = 0; x < n; ++x)
      if (mul[x][a] == 0) s.insert(x);
    return s;
  }

  bool left_ideal(const Set& L) const {
    if (!L.count(0)) return false;
    for (Elem x : L)
      for (Elem y : L)
        if (!L.count(sub(x, y))) return false;
    for (Elem m = 0; m < n; ++m)
      for (Elem l : L)
        if (!L.count(sub(add[m][l], m))) return false;
    for (Elem r = 0; r < n; ++r)
      for (Elem l : L)
        for (Elem m = 0; m < n; ++m)
          if (!L.count(sub(mul[r][add[l][m]], mul[r][m]))) return false;
    return true;
  }
  bool right_closed(const Set& L) const {
    for (Elem l : L)
      for (Elem r = 0; r < n; ++r)
        if (!L.count(mul[l][r])) return false;
    return true;
  }

  bool is_unit(Elem a) const {
    if (!one) return false;
    for (Elem b = 0; b < n; ++b)
      if (mul[a][b] == *one && mul[b][a] == *one) return true;
    return false;
  }
  std::vector<Elem> units() const {
    std::vector<Elem> u;
    for (Elem a = 0; a < n; ++a)
      if (is_unit(a)) u.push_back(a);
    return u;
  }
  std::vector<Elem> idempotents() const {
    std::vector<Elem> e;
    for (Elem a = 0; a < n; ++a)
      if (mul[a][a] == a) e.push_back(a);
    return e;
  }
  bool regular(Elem a) const {
    for (Elem x = 0; x < n; ++x)
      if (mul[mul[a][x]][a] == a) return true;
    return false;
  }
  bool unit_regular(Elem a) const {
    for (Elem x = 0; x < n; ++x)
      if (is_unit(x) && mul[mul[a][x]][a] == a) return true;
    return false;
  }
  bool lsr(Elem a) const {
    for (Elem x = 0; x < n; ++x)
      if (mul[x][mul[a][a]] == a) return true;
    return false;
  }
  std::optional<Elem> morphic_witness(Elem a) const {
    if (!left_ideal(orbit(a))) return std::nullopt;
    for (Elem b = 0; b < n; ++b)
      if (ann(b) == orbit(a) && orbit(b) == ann(a)) return b;
    return std::nullopt;
  }
  bool morphic(Elem a) const { return morphic_witness(a).has_value(); }

  // All left ideals by exhaustive subset enumeration (n <= 16 only).
  std::vector<Set> all_left_ideals() const {
    std::vector<Set> out;
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // must contain 0
      Set s;
      for (Elem i = 0; i < n; ++i)
        if (mask >> i & 1u) s.insert(i);
      if (left_ideal(s)) out.push_back(s);
    }
    return out;
  }
};

inline Set to_set(const std::vector<Elem>& v) { return Set(v.begin(), v.end()); }

}  // namespace oracle
