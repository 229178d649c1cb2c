#pragma once

// Elements, conjugacy types and irreducible character values of wreath
// products G wr S_n.
//
// An element x = (g_1, ..., g_n; pi) acts on tensors by moving factor
// pi^-1(i) to slot i and applying g_i there, so
//   (g; pi) * (h; sigma) = (g_i h_{pi^-1(i)}; pi sigma).
// The cycle product of a cycle (i_1 i_2 ... i_t) of pi (i_{k+1} = pi(i_k),
// i_1 the smallest entry) is g_{i_t} g_{i_{t-1}} ... g_{i_1}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/groups.hpp"
#include "wreathchar/partition.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

struct ColoredPermutation {
  std::vector<GroupElement> colors;
  std::vector<int> perm;  // 0-based images: perm[i] = pi(i)

  int n() const noexcept { return static_cast<int>(perm.size()); }

  void validate(const AbelianGroup& g) const {
    if (colors.size() != perm.size()) throw InvalidInput("colored permutation: colors and permutation differ in length");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
      if (p < 0 || p >= n() || seen[static_cast<std::size_t>(p)])
        throw InvalidInput("colored permutation: not a bijection");
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (const auto& c : colors) g.require(c);
  }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
};

inline ColoredPermutation wreath_identity(const AbelianGroup& g, int n) {
  ColoredPermutation x;
  x.colors.assign(static_cast<std::size_t>(n), g.identity());
  for (int i = 0; i < n; ++i) x.perm.push_back(i);
  return x;
}

/// (a, ..., a; w_mu) with w_mu = (1 .. mu_1)(mu_1+1 .. mu_1+mu_2)...
inline ColoredPermutation constant_colored(const AbelianGroup& g, const GroupElement& a, const Composition& mu) {
  g.require(a);
  ColoredPermutation x;
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) x.perm.push_back(start + (k + 1) % len);
    start += len;
  }
  x.colors.assign(x.perm.size(), a);
  return x;
}

inline ColoredPermutation multiply(const AbelianGroup& g, const ColoredPermutation& x, const ColoredPermutation& y) {
  if (x.n() != y.n()) throw InvalidInput("multiply: degree mismatch");
  const int n = x.n();
  std::vector<int> x_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x_inv[static_cast<std::size_t>(x.perm[static_cast<std::size_t>(i)])] = i;
  ColoredPermutation z;
  z.perm.resize(static_cast<std::size_t>(n));
  z.colors.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    z.perm[ui] = x.perm[static_cast<std::size_t>(y.perm[ui])];
    z.colors[ui] = g.multiply(x.colors[ui], y.colors[static_cast<std::size_t>(x_inv[ui])]);
  }
  return z;
}

inline ColoredPermutation inverse(const AbelianGroup& g, const ColoredPermutation& x) {
  const int n = x.n();
  ColoredPermutation z;
  z.perm.resize(static_cast<std::size_t>(n));
  z.colors.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    z.perm[static_cast<std::size_t>(x.perm[ui])] = i;
    z.colors[ui] = g.inverse(x.colors[static_cast<std::size_t>(x.perm[ui])]);
  }
  return z;
}

/// y x y^-1
inline ColoredPermutation conjugate_by(const AbelianGroup& g, const ColoredPermutation& x, const ColoredPermutation& y) {
  return multiply(g, multiply(g, y, x), inverse(g, y));
}

/// All |G|^n n! elements, permutations in lexicographic order, colors in
/// lexicographic order of element indices.
inline std::vector<ColoredPermutation> all_elements(const AbelianGroup& g, int n) {
  std::vector<ColoredPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  const auto elems = g.elements();
  do {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      ColoredPermutation x;
      x.perm = perm;
      for (int i : idx) x.colors.push_back(elems[static_cast<std::size_t>(i)]);
      out.push_back(std::move(x));
      int pos = n - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == g.order()) idx[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct CycleProduct {
  int length = 0;
  GroupElement product;
  friend bool operator==(const CycleProduct&, const CycleProduct&) = default;
};

/// One entry per cycle of pi, cycles ordered by their smallest entry.
inline std::vector<CycleProduct> cycle_products(const AbelianGroup& g, const ColoredPermutation& x) {
  x.validate(g);
  std::vector<CycleProduct> out;
  std::vector<bool> seen(x.perm.size(), false);
  for (int start = 0; start < x.n(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    CycleProduct cp;
    cp.product = g.identity();
    int i = start;
    do {
      seen[static_cast<std::size_t>(i)] = true;
      // left-multiply: later entries of the cycle go further left
      cp.product = g.multiply(x.colors[static_cast<std::size_t>(i)], cp.product);
      ++cp.length;
      i = x.perm[static_cast<std::size_t>(i)];
    } while (i != start);
    out.push_back(std::move(cp));
  }
  return out;
}

/// Class (for abelian G: element) -> partition of the lengths of the cycles
/// whose cycle product lies in that class. Classes mapping to the empty
/// partition are omitted.
using ConjugacyType = std::map<GroupElement, Partition>;

inline ConjugacyType ty(const AbelianGroup& g, const ColoredPermutation& x) {
  std::map<GroupElement, std::vector<int>> lengths;
  for (const auto& cp : cycle_products(g, x)) lengths[cp.product].push_back(cp.length);
  ConjugacyType out;
  for (auto& [c, v] : lengths) {
    std::sort(v.begin(), v.end(), std::greater<>());
    out.emplace(c, Partition(std::move(v)));
  }
  return out;
}

namespace detail {

template <ColorGroupModel M>
void require_shape(const RPartitePartition& shape, const M& model) {
  if (shape.arity() != model.character_count())
    throw InvalidInput("shape has arity " + std::to_string(shape.arity()) + " but " + model.name() + " labels " +
                       std::to_string(model.character_count()) + " characters");
}

/// exps[j][i] = exponent of chi_j at the i-th cycle product, for j in the
/// support of the shape. Evaluates eagerly so unsupported characters fail
/// regardless of whether any tableau uses them.
template <ColorGroupModel M>
std::vector<std::vector<int>> exponent_table(const RPartitePartition& shape, const M& model,
                                             const std::vector<CycleProduct>& cps) {
  std::vector<std::vector<int>> exps(static_cast<std::size_t>(shape.arity()));
  for (int j : shape.support())
    for (const auto& cp : cps) exps[static_cast<std::size_t>(j)].push_back(model.eval_exponent(j, cp.product));
  return exps;
}

inline Composition cycle_type_of(const std::vector<CycleProduct>& cps) {
  std::vector<int> mu;
  for (const auto& cp : cps) mu.push_back(cp.length);
  return Composition(std::move(mu));
}

}  // namespace detail

/// psi_shape(x) = sum over border-strip tableaux T of shape `shape` and
/// weight the cycle lengths of x, of prod_i (-1)^ht_T(i) chi_{f_T(i)}(g_i(x)).
template <ColorGroupModel M>
CyclotomicInt psi(const RPartitePartition& shape, const M& model, const ColoredPermutation& x) {
  detail::require_shape(shape, model);
  const auto cps = cycle_products(model.group(), x);
  if (shape.total() != x.n())
    throw InvalidInput("psi: shape has size " + std::to_string(shape.total()) + " but x has degree " +
                       std::to_string(x.n()));
  const auto exps = detail::exponent_table(shape, model, cps);
  const int lvl = model.level();
  std::vector<long long> counts(static_cast<std::size_t>(lvl), 0);
  BorderStripStream stream(shape, detail::cycle_type_of(cps));
  while (stream.next()) {
    const auto& t = stream.current();
    long long e = 0;
    int h = 0;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      e += exps[static_cast<std::size_t>(t.steps[i].component)][i];
      h += t.steps[i].height;
    }
    counts[static_cast<std::size_t>(e % lvl)] += (h % 2 == 0) ? 1 : -1;
  }
  std::vector<Integer> coeffs(counts.begin(), counts.end());
  return CyclotomicInt::from_coefficients(lvl, coeffs);
}

/// psi at (a, ..., a; w_mu). For linear characters chi_s(a^mu_i) = chi_s(a)^mu_i,
/// so every tableau contributes prod_s chi_s(a)^{n_s} times its sign; the
/// value is that root of unity times the signed tableau count.
template <ColorGroupModel M>
CyclotomicInt psi_constant_color(const RPartitePartition& shape, const M& model, const GroupElement& a,
                                 const Composition& mu) {
  detail::require_shape(shape, model);
  model.group().require(a);
  if (shape.total() != mu.size()) throw InvalidInput("psi_constant_color: shape and class sizes differ");
  const int lvl = model.level();
  long long e = 0;
  for (int j : shape.support())
    e += static_cast<long long>(model.eval_exponent(j, a)) * shape[static_cast<std::size_t>(j)].size();
  auto value = CyclotomicInt::zeta(lvl, e);
  value.scale_by_int(signed_sum(shape, mu));
  return value;
}

/// Distinct values (as exponents of zeta_L) of prod_i chi_{f_T(i)}(g_i(x))
/// over all tableaux T.
template <ColorGroupModel M>
std::set<int> tableau_product_exponents(const RPartitePartition& shape, const M& model, const ColoredPermutation& x) {
  detail::require_shape(shape, model);
  const auto cps = cycle_products(model.group(), x);
  const auto exps = detail::exponent_table(shape, model, cps);
  const int lvl = model.level();
  std::set<int> out;
  BorderStripStream stream(shape, detail::cycle_type_of(cps));
  while (stream.next()) {
    long long e = 0;
    const auto& t = stream.current();
    for (std::size_t i = 0; i < t.steps.size(); ++i) e += exps[static_cast<std::size_t>(t.steps[i].component)][i];
    out.insert(static_cast<int>(e % lvl));
  }
  return out;
}

/// Degree of psi_shape when every component is indexed by a linear
/// character: n! / prod n_i! * prod f^{shape_i}.
inline Integer wreath_degree(const RPartitePartition& shape) {
  Integer d = factorial(shape.total());
  for (const auto& c : shape.components()) d = d / factorial(c.size()) * degree(c);
  return d;
}

}  // namespace wreathchar
