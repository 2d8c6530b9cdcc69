#pragma once

// Exhaustive-scan kernels. Every kernel has a serial reference path and an
// OpenMP path; both return the same lexicographically-first hit, so witness
// tuples do not depend on scheduling.

#include <array>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nearring/types.hpp"

namespace nearring {

enum class Exec { serial, parallel };

using Pair = std::array<Elem, 2>;
using Triple = std::array<Elem, 3>;

namespace detail {

inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t cur = target.load(std::memory_order_relaxed);
  while (value < cur &&
         !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace detail

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// First i in [0, n) with pred(i).
template <typename Pred>
std::optional<Elem> find_first(std::size_t n, Pred&& pred, Exec exec = Exec::parallel) {
  if (exec == Exec::serial || n < 64) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(static_cast<Elem>(i))) return static_cast<Elem>(i);
    return std::nullopt;
  }
  std::atomic<std::size_t> best{detail::kNone};
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    auto i = static_cast<std::size_t>(si);
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (pred(static_cast<Elem>(i))) detail::atomic_min(best, i);
  }
  auto b = best.load();
  if (b == detail::kNone) return std::nullopt;
  return static_cast<Elem>(b);
}

/// Lexicographically first (i, j) in [0, n)^2 with pred(i, j).
template <typename Pred>
std::optional<Pair> find_first_pair(std::size_t n, Pred&& pred, Exec exec = Exec::parallel) {
  auto scan_row = [&](std::size_t i) -> std::optional<Elem> {
    for (std::size_t j = 0; j < n; ++j)
      if (pred(static_cast<Elem>(i), static_cast<Elem>(j))) return static_cast<Elem>(j);
    return std::nullopt;
  };
  if (exec == Exec::serial || n < 16) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto j = scan_row(i)) return Pair{static_cast<Elem>(i), *j};
    return std::nullopt;
  }
  std::vector<Elem> hit(n, 0);
  std::atomic<std::size_t> best{detail::kNone};
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    auto i = static_cast<std::size_t>(si);
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (auto j = scan_row(i)) {
      hit[i] = *j;
      detail::atomic_min(best, i);
    }
  }
  auto b = best.load();
  if (b == detail::kNone) return std::nullopt;
  return Pair{static_cast<Elem>(b), hit[b]};
}

/// Lexicographically first (i, j, k) in [0, n)^3 with pred(i, j, k).
template <typename Pred>
std::optional<Triple> find_first_triple(std::size_t n, Pred&& pred,
                                        Exec exec = Exec::parallel) {
  auto scan_plane = [&](std::size_t i) -> std::optional<Pair> {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (pred(static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(k)))
          return Pair{static_cast<Elem>(j), static_cast<Elem>(k)};
    return std::nullopt;
  };
  if (exec == Exec::serial || n < 8) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto jk = scan_plane(i)) return Triple{static_cast<Elem>(i), (*jk)[0], (*jk)[1]};
    return std::nullopt;
  }
  std::vector<Pair> hit(n);
  std::atomic<std::size_t> best{detail::kNone};
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    auto i = static_cast<std::size_t>(si);
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (auto jk = scan_plane(i)) {
      hit[i] = *jk;
      detail::atomic_min(best, i);
    }
  }
  auto b = best.load();
  if (b == detail::kNone) return std::nullopt;
  return Triple{static_cast<Elem>(b), hit[b][0], hit[b][1]};
}

/// out[i] = f(i) for i in [0, n). f must not throw.
template <typename T, typename F>
std::vector<T> map_indices(std::size_t n, F&& f, Exec exec = Exec::parallel) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(static_cast<Elem>(i));
    return out;
  }
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t si = 0; si < sn; ++si) out[static_cast<std::size_t>(si)] = f(static_cast<Elem>(si));
  return out;
}

}  // namespace nearring
