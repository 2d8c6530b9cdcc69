#pragma once

#include <string>
#include <vector>

#include "nearring/module.hpp"
#include "nearring/nearring.hpp"

namespace nearring {

/// Cyclic group Z_n with the usual residue addition.
FiniteGroup cyclic_group(std::size_t n);

/// Direct product of groups, indexed row-major.
FiniteGroup product_group(const std::vector<FiniteGroup>& factors);

/// M0(G): maps G -> G fixing 0 under pointwise addition and composition
/// (f*g)(x) = f(g(x)). Element k is the map whose value vector
/// (f(e1), ..., f(e_{n-1})) is k written in base n, most significant digit
/// first, so the ordering is lexicographic. Labels are f1, f2, ...
NearRing build_M0(const FiniteGroup& G, const Caps& caps = {});

/// Value vector (f(e0), ..., f(e_{n-1})) of element `k` of M0(G).
std::vector<Elem> m0_values(std::size_t group_order, Elem k);

/// Componentwise sum and product; element (i1, ..., ik) has index
/// ((i1 * n2) + i2) * n3 + ... .
NearRing build_product(const std::vector<NearRing>& factors, const Caps& caps = {});

/// Index of the tuple in a product of the given orders, and back.
Elem product_index(const std::vector<std::size_t>& orders, const std::vector<Elem>& parts);
std::vector<Elem> product_parts(const std::vector<std::size_t>& orders, Elem index);

/// R x M with <a1,m1> + <a2,m2> = <a1+a2, m1+m2> and
/// <a1,m1> * <a2,m2> = <a1 a2, a1 m2 + m1>. Index of <a,m> is a*|M| + m.
/// R must be a unital ring and M an R-module with abelian carrier.
NearRing build_extension(const NearRing& R, const NModule& M, const Caps& caps = {});

}  // namespace nearring
