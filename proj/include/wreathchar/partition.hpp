#pragma once

// Integer partitions, compositions and r-partite partitions, together with
// the diagram-level operations the character machinery is built on:
// conjugation, hook-length degrees, 0/1 boundary words and rim-hook removal.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreathchar/error.hpp"

namespace wreathchar {

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Validates the parts; trailing zeros are dropped, anything else that is
  /// not weakly decreasing and positive is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw InvalidInput("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidInput("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); 0 past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordered sequence of positive integers (a Murnaghan-Nakayama weight).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw InvalidInput("composition parts must be positive");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  Composition(const Partition& p) : parts_(p.parts()) {}  // NOLINT: implicit widening is intended

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// The partition obtained by sorting the parts.
  Partition sorted() const {
    auto v = parts_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
  }

  /// Every part multiplied by k.
  Composition scaled(int k) const {
    auto v = parts_;
    for (int& p : v) p *= k;
    return Composition(std::move(v));
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition scaled(const Partition& p, int k) {
  auto v = p.parts();
  for (int& x : v) x *= k;
  return Partition(std::move(v));
}

/// Ordered r-tuple of partitions; indexes irreducible characters of a
/// wreath product once the characters of the color group are labelled.
class RPartitePartition {
 public:
  RPartitePartition() = default;
  explicit RPartitePartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidInput("r-partite partition needs arity >= 1");
  }
  RPartitePartition(std::initializer_list<Partition> c) : RPartitePartition(std::vector<Partition>(c)) {}

  /// The all-empty tuple of the given arity.
  static RPartitePartition empty_of_arity(int r) {
    return RPartitePartition(std::vector<Partition>(static_cast<std::size_t>(r)));
  }

  int arity() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& operator[](std::size_t i) const { return components_.at(i); }

  int total() const noexcept {
    int n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
  }
  std::vector<int> sizes() const {
    std::vector<int> s;
    s.reserve(components_.size());
    for (const auto& c : components_) s.push_back(c.size());
    return s;
  }
  /// Indices of the nonempty components.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < arity(); ++i)
      if (!components_[static_cast<std::size_t>(i)].empty()) s.push_back(i);
    return s;
  }
  /// The same tuple followed by empty components up to arity r.
  RPartitePartition padded(int r) const {
    if (r < arity()) throw InvalidInput("cannot pad an r-partite partition to a smaller arity");
    auto c = components_;
    c.resize(static_cast<std::size_t>(r));
    return RPartitePartition(std::move(c));
  }

  friend bool operator==(const RPartitePartition&, const RPartitePartition&) = default;
  friend auto operator<=>(const RPartitePartition&, const RPartitePartition&) = default;

 private:
  std::vector<Partition> components_;
};

// ---------------------------------------------------------------------------
// Text literals: partitions "3,1,1" ("" / "0" / "∅" / "-" for the empty one),
// r-partite partitions "[3,1|∅|2]".

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool is_empty_literal(std::string_view s) {
  s = trim(s);
  return s.empty() || s == "0" || s == "\xE2\x88\x85" /* ∅ */ || s == "-";
}

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  s = trim(s);
  if (is_empty_literal(s) && s != "0") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto tok = trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidInput("malformed integer list '" + std::string(s) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(std::string_view s) {
  auto v = detail::parse_int_list(s);
  if (v.size() == 1 && v[0] == 0) v.clear();
  return Partition(std::move(v));
}

inline Composition parse_composition(std::string_view s) {
  return Composition(detail::parse_int_list(s));
}

inline RPartitePartition parse_rpartite(std::string_view s) {
  s = detail::trim(s);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidInput("unbalanced brackets in '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    auto bar = s.find('|', pos);
    comps.push_back(parse_partition(s.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return RPartitePartition(std::move(comps));
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

inline std::string to_string(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.parts()[i]);
  }
  return s;
}

inline std::string to_string(const RPartitePartition& p) {
  std::string s = "[";
  for (int i = 0; i < p.arity(); ++i) {
    if (i) s += '|';
    s += p[static_cast<std::size_t>(i)].empty() ? std::string("\xE2\x88\x85") : to_string(p[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << '(' << to_string(c) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const RPartitePartition& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Number of standard Young tableaux of shape p, by the hook-length formula.
inline Integer degree(const Partition& p) {
  const auto conj = conjugate(p);
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
      hooks *= p[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
  return factorial(p.size()) / hooks;
}

/// Southeast boundary walk from the southwest corner to the northeast
/// corner; a horizontal step is '1', a vertical step is '0'.
inline std::string boundary_word(const Partition& p) {
  std::string w;
  for (int i = p.length() - 1; i >= 0; --i) {
    w.append(static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i) + 1]), '1');
    w.push_back('0');
  }
  return w;
}

/// Inverse of boundary_word; leading '0's and trailing '1's are ignored.
inline Partition partition_from_boundary_word(std::string_view w) {
  std::vector<int> rows;  // bottom to top
  int ones = 0;
  for (char c : w) {
    if (c == '1') {
      ++ones;
    } else if (c == '0') {
      if (ones > 0) rows.push_back(ones);
    } else {
      throw InvalidInput("boundary word must consist of '0' and '1'");
    }
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

/// A box of a Young diagram, 0-based (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct RimHookRemoval {
  Partition before;
  Partition after;
  int length = 0;
  int height = 0;  // rows met by the removed cells, minus one
  std::vector<Cell> cells;
};

namespace detail {

/// Calls fn(after_parts, height) for every rim hook of length k removable
/// from the diagram with the given parts. Uses the beta-set with one bead per
/// row: a k-hook is a bead moved k positions down onto an empty position, and
/// its height is the number of beads jumped over.
template <class Fn>
void for_each_rim_hook(std::span<const int> parts, int k, Fn&& fn) {
  const int n = static_cast<int>(parts.size());
  if (k <= 0 || n == 0) return;
  std::vector<int> beta(parts.size());
  for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + n - 1 - i;
  // beta is strictly decreasing
  std::vector<int> after;
  after.reserve(parts.size());
  for (int i = 0; i < n; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0) continue;
    // beads strictly between to and from sit at indices i+1 .. j-1
    int j = i + 1;
    while (j < n && beta[static_cast<std::size_t>(j)] > to) ++j;
    if (j < n && beta[static_cast<std::size_t>(j)] == to) continue;
    const int height = j - i - 1;
    // new beta: drop from, insert to before index j (after removal index shifts)
    after.clear();
    for (int t = 0; t < n; ++t) {
      if (t == i) continue;
      if (t == j) after.push_back(to);
      after.push_back(beta[static_cast<std::size_t>(t)]);
    }
    if (j == n) after.push_back(to);
    for (int t = 0; t < n; ++t) after[static_cast<std::size_t>(t)] -= n - 1 - t;
    while (!after.empty() && after.back() == 0) after.pop_back();
    fn(std::span<const int>(after), height);
  }
}

inline std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int i = 0; i < outer.length(); ++i)
    for (int j = inner[static_cast<std::size_t>(i)]; j < outer[static_cast<std::size_t>(i)]; ++j)
      cells.push_back({i, j});
  return cells;
}

}  // namespace detail

/// All removals of a rim hook (border strip) of length k, ordered by the row
/// in which the hook starts.
inline std::vector<RimHookRemoval> removable_rim_hooks(const Partition& p, int k) {
  if (k < 1) throw InvalidInput("rim hook length must be positive");
  std::vector<RimHookRemoval> out;
  detail::for_each_rim_hook(p.parts(), k, [&](std::span<const int> after, int height) {
    RimHookRemoval r;
    r.before = p;
    r.after = Partition(std::vector<int>(after.begin(), after.end()));
    r.length = k;
    r.height = height;
    r.cells = detail::skew_cells(p, r.after);
    out.push_back(std::move(r));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration. Partitions come in decreasing lexicographic order: (n) first,
// (1^n) last.

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidInput("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

/// All r-partite partitions of n: component sizes run over weak compositions
/// of n in decreasing lexicographic order, and within one size vector the
/// components vary like an odometer with the last component fastest.
inline std::vector<RPartitePartition> enumerate_rpartite(int n, int r) {
  if (n < 0 || r < 1) throw InvalidInput("enumerate_rpartite needs n >= 0 and r >= 1");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = enumerate_partitions(k);

  std::vector<RPartitePartition> out;
  std::vector<int> sizes(static_cast<std::size_t>(r), 0);
  std::vector<Partition> comps(static_cast<std::size_t>(r));

  auto fill = [&](auto&& self, int idx) -> void {
    if (idx == r) {
      out.emplace_back(comps);
      return;
    }
    for (const auto& p : by_size[static_cast<std::size_t>(sizes[static_cast<std::size_t>(idx)])]) {
      comps[static_cast<std::size_t>(idx)] = p;
      self(self, idx + 1);
    }
  };
  auto sizes_rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == r - 1) {
      sizes[static_cast<std::size_t>(idx)] = remaining;
      fill(fill, 0);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      sizes[static_cast<std::size_t>(idx)] = k;
      self(self, idx + 1, remaining - k);
    }
  };
  sizes_rec(sizes_rec, 0, n);
  return out;
}

}  // namespace wreathchar
