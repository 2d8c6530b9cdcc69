#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nearring/nearring.hpp"

namespace nearring {

// Catalog of built-in near-rings. Element orderings:
//   klein4_ring          0, a, b, c with b the unity
//   m0_<g>               lexicographic value vectors, labels f1, f2, ...
//   zn_ring(n)           residues 0..n-1, 2 <= n <= 64
//   mat2_f2              [[p,q],[r,s]] has index 8p + 4q + 2r + s
//   ext_f2_f2            <a,m> has index 2a + m
//   ext_mat2f2_f2sq      <A,v> has index 4A + 2v1 + v2 (v a column vector)
//   <a>_x_<b>            row-major over the factor indices

/// Fixed catalog names followed by zn_ring(2) .. zn_ring(64), sorted.
std::vector<std::string> catalog_names();

/// Throws Error on an unknown name or bad parameter.
NearRing builtin(const std::string& name);

/// Names making up the default verification corpus.
std::vector<std::string> default_corpus_names();
std::vector<NearRing> default_corpus();

/// The catalog entry with identical tables and the same order, if any.
/// Used to recover the construction recipe of a near-ring read from a file.
std::optional<NearRing> recognise(const NearRing& N);

}  // namespace nearring
