#pragma once

// Irreducible characters of the symmetric group via the Murnaghan-Nakayama
// recursion, full character tables, and the sign_r statistic.

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreathchar/abacus.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/partition.hpp"

namespace wreathchar {

/// Memo table for chi keyed on (remaining shape, remaining sorted weight).
/// Thread-safe; when a cap is set and reached the whole table is cleared.
class CharacterCache {
 public:
  explicit CharacterCache(std::size_t cap = 0) : cap_(cap) {}

  void set_cap(std::size_t cap) {
    std::lock_guard lock(mutex_);
    cap_ = cap;
    if (cap_ != 0 && table_.size() >= cap_) table_.clear();
  }
  std::size_t cap() const {
    std::lock_guard lock(mutex_);
    return cap_;
  }
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }
  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

  bool lookup(const std::string& key, Integer& out) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const std::string& key, const Integer& value) {
    std::lock_guard lock(mutex_);
    if (cap_ != 0 && table_.size() >= cap_) table_.clear();
    table_.emplace(key, value);
  }

  /// Process-wide cache used by the convenience overloads of chi.
  static CharacterCache& shared() {
    static CharacterCache instance;
    return instance;
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Integer> table_;
  std::size_t cap_;
};

namespace detail {

inline std::string chi_key(std::span<const int> shape, std::span<const int> weight) {
  std::string key;
  key.reserve(4 * (shape.size() + weight.size()) + 1);
  for (int p : shape) key.append(std::to_string(p)).push_back(',');
  key.push_back('/');
  for (int p : weight) key.append(std::to_string(p)).push_back(',');
  return key;
}

// weight is sorted decreasingly; strips of the largest part are removed first.
inline Integer chi_rec(std::span<const int> shape, std::span<const int> weight, CharacterCache& cache) {
  if (weight.empty()) return shape.empty() ? 1 : 0;
  if (shape.empty()) return 0;
  if (weight.size() == 1 && weight[0] == 1) return 1;
  const auto key = chi_key(shape, weight);
  Integer value;
  if (cache.lookup(key, value)) return value;
  value = 0;
  const auto rest = weight.subspan(1);
  for_each_rim_hook(shape, weight[0], [&](std::span<const int> after, int height) {
    std::vector<int> copy(after.begin(), after.end());
    Integer v = chi_rec(copy, rest, cache);
    if (height % 2 == 0) value += v;
    else value -= v;
  });
  cache.store(key, value);
  return value;
}

}  // namespace detail

/// chi_shape evaluated at a permutation of cycle type `cycle_type`.
inline Integer chi(const Partition& shape, const Composition& cycle_type, CharacterCache& cache) {
  if (shape.size() != cycle_type.size())
    throw InvalidInput("chi: shape has size " + std::to_string(shape.size()) + " but class has size " +
                       std::to_string(cycle_type.size()));
  const Partition sorted = cycle_type.sorted();
  return detail::chi_rec(shape.parts(), sorted.parts(), cache);
}

inline Integer chi(const Partition& shape, const Composition& cycle_type) {
  return chi(shape, cycle_type, CharacterCache::shared());
}

/// n! / z_mu, the number of permutations of cycle type mu.
inline Integer class_size(const Partition& mu) {
  Integer z = 1;
  std::size_t i = 0;
  const auto& p = mu.parts();
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int k = 0; k < mult; ++k) z *= p[i];
    z *= factorial(mult);
    i = j;
  }
  return factorial(mu.size()) / z;
}

struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;   // rows
  std::vector<Partition> classes;  // columns
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Integer>> values;  // values[row][col]
};

/// Rows and columns are both in enumerate_partitions order.
inline CharacterTable character_table(int n) {
  if (n < 1) throw InvalidInput("character table needs n >= 1");
  CharacterTable t;
  t.n = n;
  t.shapes = enumerate_partitions(n);
  t.classes = t.shapes;
  for (const auto& mu : t.classes) t.class_sizes.push_back(class_size(mu));
  for (const auto& lambda : t.shapes) {
    std::vector<Integer> row;
    for (const auto& mu : t.classes) row.push_back(chi(lambda, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

/// Height parity of a full peeling of `shape` by strips of length r; shape
/// must have size divisible by r and empty r-core. Any peeling gives the
/// same parity, so the greedy one (always the first removable hook) is used.
inline int sign_r(const Partition& shape, int r) {
  if (r < 1) throw InvalidInput("sign_r needs r >= 1");
  if (shape.size() % r != 0)
    throw InvalidInput("sign_r: size " + std::to_string(shape.size()) + " is not divisible by " + std::to_string(r));
  if (r >= 2 && !r_core(shape, r).empty())
    throw InvalidInput("sign_r: " + to_string(shape) + " has nonempty " + std::to_string(r) + "-core");
  Partition cur = shape;
  int height = 0;
  while (!cur.empty()) {
    auto hooks = removable_rim_hooks(cur, r);
    if (hooks.empty()) throw InvalidInput("sign_r: peeling got stuck");  // unreachable for empty cores
    height += hooks.front().height;
    cur = hooks.front().after;
  }
  return height % 2 == 0 ? 1 : -1;
}

}  // namespace wreathchar
