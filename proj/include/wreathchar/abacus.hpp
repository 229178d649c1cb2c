#pragma once

// r-abacus machinery: beta-sets, r-cores, r-quotients and the inverse map
// (hat) from r-partite partitions to partitions with empty r-core.
//
// Convention: a partition with l parts is encoded by N beads, N the smallest
// multiple of r with N >= l and N >= r, at positions lambda_i + N - i. The
// bead at position v sits on runner v mod r at level v / r. Runner j of the
// abacus decodes to component j of the quotient. Because N is a multiple of
// r, adding r more beads shifts every runner by one level and leaves the
// labelling unchanged.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wreathchar/error.hpp"
#include "wreathchar/partition.hpp"

namespace wreathchar {

struct BetaConfiguration {
  int runners = 1;
  int total_beads = 0;
  /// levels[j] lists the occupied levels on runner j in increasing order.
  std::vector<std::vector<int>> levels;

  /// All bead positions, decreasing.
  std::vector<int> beta_set() const {
    std::vector<int> out;
    for (int j = 0; j < runners; ++j)
      for (int lvl : levels[static_cast<std::size_t>(j)]) out.push_back(j + runners * lvl);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  friend bool operator==(const BetaConfiguration&, const BetaConfiguration&) = default;
};

/// Decodes a set of distinct non-negative bead positions (any order).
inline Partition partition_from_beta_set(std::span<const int> beads) {
  std::vector<int> b(beads.begin(), beads.end());
  std::sort(b.begin(), b.end(), std::greater<>());
  if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InvalidInput("beta-set positions must be distinct");
  if (!b.empty() && b.back() < 0) throw InvalidInput("beta-set positions must be non-negative");
  const int n = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) parts.push_back(b[static_cast<std::size_t>(i)] - (n - 1 - i));
  return Partition(std::move(parts));
}

/// Beta-set of p with exactly `beads` beads (beads >= length of p).
inline std::vector<int> beta_set(const Partition& p, int beads) {
  if (beads < p.length()) throw InvalidInput("too few beads for the partition");
  std::vector<int> out;
  for (int i = 0; i < beads; ++i) out.push_back(p[static_cast<std::size_t>(i)] + beads - 1 - i);
  return out;
}

inline int minimal_bead_count(int length, int r) {
  const int q = std::max(1, (length + r - 1) / r);
  return q * r;
}

/// Abacus with an explicit bead count (a positive multiple of r that is at
/// least the length of p).
inline BetaConfiguration to_beta(const Partition& p, int r, int beads) {
  if (r < 1) throw InvalidInput("abacus needs r >= 1");
  if (beads <= 0 || beads % r != 0 || beads < p.length())
    throw InvalidInput("bead count must be a positive multiple of r covering the partition");
  BetaConfiguration cfg;
  cfg.runners = r;
  cfg.total_beads = beads;
  cfg.levels.assign(static_cast<std::size_t>(r), {});
  for (int v : beta_set(p, beads)) cfg.levels[static_cast<std::size_t>(v % r)].push_back(v / r);
  for (auto& lv : cfg.levels) std::sort(lv.begin(), lv.end());
  return cfg;
}

inline BetaConfiguration to_beta(const Partition& p, int r) {
  if (r < 1) throw InvalidInput("abacus needs r >= 1");
  return to_beta(p, r, minimal_bead_count(p.length(), r));
}

inline Partition from_beta(const BetaConfiguration& cfg) {
  auto b = cfg.beta_set();
  return partition_from_beta_set(b);
}

namespace detail {

inline void require_r(int r) {
  if (r < 2) throw InvalidInput("cores and quotients need r >= 2");
}

inline Partition core_of(const BetaConfiguration& cfg) {
  std::vector<int> beads;
  for (int j = 0; j < cfg.runners; ++j) {
    const int count = static_cast<int>(cfg.levels[static_cast<std::size_t>(j)].size());
    for (int lvl = 0; lvl < count; ++lvl) beads.push_back(j + cfg.runners * lvl);
  }
  return partition_from_beta_set(beads);
}

inline RPartitePartition quotient_of(const BetaConfiguration& cfg) {
  std::vector<Partition> comps;
  for (const auto& lv : cfg.levels) comps.push_back(partition_from_beta_set(lv));
  return RPartitePartition(std::move(comps));
}

}  // namespace detail

/// Slides every bead on every runner as far down as it goes.
inline Partition r_core(const Partition& p, int r) {
  detail::require_r(r);
  return detail::core_of(to_beta(p, r));
}

inline RPartitePartition r_quotient(const Partition& p, int r) {
  detail::require_r(r);
  return detail::quotient_of(to_beta(p, r));
}

/// The partition of r*n with empty r-core whose r-quotient is q (r = arity).
inline Partition hat(const RPartitePartition& q) {
  const int r = q.arity();
  detail::require_r(r);
  int levels = 1;
  for (const auto& c : q.components()) levels = std::max(levels, c.length());
  std::vector<int> beads;
  for (int j = 0; j < r; ++j)
    for (int b : beta_set(q[static_cast<std::size_t>(j)], levels)) beads.push_back(j + r * b);
  return partition_from_beta_set(beads);
}

/// Number of parts of p whose length is odd.
inline int odd_parts(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x % 2 != 0; }));
}

}  // namespace wreathchar
