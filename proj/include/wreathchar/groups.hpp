#pragma once

// Color-group models. Both models evaluate characters that are roots of
// unity, so evaluation is reported as an exponent e meaning zeta_L^e at the
// model's ambient level L.
//
//  * AbelianModel: a finite abelian group given by cyclic factors
//    Z/m_1 x ... x Z/m_k. Elements and character labels are tuples, ordered
//    lexicographically; label (j_1..j_k) is the character
//    a -> prod_t zeta_{m_t}^{j_t a_t}. For a cyclic group this is
//    chi_j : 1 -> zeta^j.
//  * QuotientLinearModel: an arbitrary finite group known only through its
//    abelianization G/G'. Characters 0..s-1 are the linear characters (the
//    characters of G/G' in lexicographic order, pulled back); the remaining
//    ones cannot be evaluated. Group elements are represented by their image
//    in G/G'.

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/partition.hpp"

namespace wreathchar {

using GroupElement = std::vector<int>;

class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int m : factors_)
      if (m < 2) throw InvalidInput("cyclic factors must be >= 2");
  }

  const std::vector<int>& factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const {
    int d = 1;
    for (int m : factors_) d *= m;
    return d;
  }
  int exponent() const {
    int e = 1;
    for (int m : factors_) e = std::lcm(e, m);
    return e;
  }

  GroupElement identity() const { return GroupElement(factors_.size(), 0); }

  bool contains(const GroupElement& g) const {
    if (g.size() != factors_.size()) return false;
    for (std::size_t t = 0; t < g.size(); ++t)
      if (g[t] < 0 || g[t] >= factors_[t]) return false;
    return true;
  }
  void require(const GroupElement& g) const {
    if (!contains(g)) throw InvalidInput("element " + format(g) + " is not in " + name());
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement c(factors_.size());
    for (std::size_t t = 0; t < c.size(); ++t) c[t] = (a[t] + b[t]) % factors_[t];
    return c;
  }
  GroupElement inverse(const GroupElement& a) const {
    GroupElement c(factors_.size());
    for (std::size_t t = 0; t < c.size(); ++t) c[t] = (factors_[t] - a[t]) % factors_[t];
    return c;
  }
  GroupElement power(const GroupElement& a, long long k) const {
    GroupElement c(factors_.size());
    for (std::size_t t = 0; t < c.size(); ++t) c[t] = static_cast<int>(detail::positive_mod(a[t] * k, factors_[t]));
    return c;
  }
  int element_order(const GroupElement& a) const {
    int r = 1;
    for (std::size_t t = 0; t < a.size(); ++t) r = std::lcm(r, factors_[t] / std::gcd(factors_[t], a[t]));
    return r;
  }

  /// Position of g in the lexicographic element order.
  int index_of(const GroupElement& g) const {
    int idx = 0;
    for (std::size_t t = 0; t < g.size(); ++t) idx = idx * factors_[t] + g[t];
    return idx;
  }
  GroupElement element_at(int idx) const {
    GroupElement g(factors_.size());
    for (std::size_t t = factors_.size(); t-- > 0;) {
      g[t] = idx % factors_[t];
      idx /= factors_[t];
    }
    return g;
  }
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    for (int i = 0; i < order(); ++i) out.push_back(element_at(i));
    return out;
  }

  std::string name() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t t = 0; t < factors_.size(); ++t) s += (t ? "xZ" : "Z") + std::to_string(factors_[t]);
    return s;
  }
  static std::string format(const GroupElement& g) {
    std::string s;
    for (std::size_t t = 0; t < g.size(); ++t) s += (t ? "," : "") + std::to_string(g[t]);
    return s.empty() ? "e" : s;
  }

  /// "Z6", "Z2xZ2", "Z4xZ2"; "Z1" or "1" is the trivial group.
  static AbelianGroup parse(std::string_view spec) {
    spec = detail::trim(spec);
    if (spec == "1" || spec == "Z1") return AbelianGroup();
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      if (spec[pos] != 'Z') throw InvalidInput("malformed group '" + std::string(spec) + "'");
      std::size_t end = pos + 1;
      while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
      if (end == pos + 1) throw InvalidInput("malformed group '" + std::string(spec) + "'");
      factors.push_back(std::stoi(std::string(spec.substr(pos + 1, end - pos - 1))));
      if (end < spec.size()) {
        if (spec[end] != 'x' || end + 1 == spec.size())
          throw InvalidInput("malformed group '" + std::string(spec) + "'");
        ++end;
      }
      pos = end;
    }
    if (factors.empty()) throw InvalidInput("malformed group '" + std::string(spec) + "'");
    return AbelianGroup(std::move(factors));
  }

  /// Element literal: "3" for cyclic groups, "1,1" for products, "e" or
  /// "" for the identity.
  GroupElement parse_element(std::string_view s) const {
    s = detail::trim(s);
    if (s.empty() || s == "e") return identity();
    auto v = detail::parse_int_list(s);
    if (v.size() != factors_.size())
      throw InvalidInput("element '" + std::string(s) + "' has the wrong number of coordinates for " + name());
    require(v);
    return v;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> factors_;
};

/// Full character model of a finite abelian group.
class AbelianModel {
 public:
  AbelianModel() = default;
  explicit AbelianModel(AbelianGroup g) : group_(std::move(g)) {}

  const AbelianGroup& group() const noexcept { return group_; }
  int character_count() const { return group_.order(); }
  int linear_count() const { return group_.order(); }
  int level() const { return group_.exponent(); }
  std::optional<int> degree(int j) const {
    check_index(j);
    return 1;
  }
  /// Tuple (j_1..j_k) naming character j.
  GroupElement label(int j) const {
    check_index(j);
    return group_.element_at(j);
  }
  /// chi_j(g) = zeta_L^result.
  int eval_exponent(int j, const GroupElement& g) const {
    const auto lab = label(j);
    group_.require(g);
    const int lvl = level();
    long long e = 0;
    for (std::size_t t = 0; t < g.size(); ++t)
      e += static_cast<long long>(lab[t]) * g[t] * (lvl / group_.factors()[t]);
    return static_cast<int>(detail::positive_mod(e, lvl));
  }
  CyclotomicInt eval_char(int j, const GroupElement& g) const { return CyclotomicInt::zeta(level(), eval_exponent(j, g)); }
  std::string name() const { return group_.name(); }

 private:
  void check_index(int j) const {
    if (j < 0 || j >= character_count()) throw InvalidInput("character index out of range");
  }
  AbelianGroup group_;
};

/// Linear characters of an arbitrary finite group, through G/G'.
class QuotientLinearModel {
 public:
  /// d: number of labelled characters (the arity of shapes), s = |G/G'|,
  /// distinguished: the image aG' of the element the model is built for.
  QuotientLinearModel(int d, AbelianGroup abelianization, GroupElement distinguished, std::string name = "")
      : d_(d), ab_(std::move(abelianization)), a_(std::move(distinguished)), name_(std::move(name)) {
    ab_.require(a_);
    if (d_ < ab_.order()) throw InvalidInput("quotient model needs d >= s");
    if (d_ % ab_.order() != 0) throw InvalidInput("quotient model needs s to divide d");
  }

  /// The S3 preset: Irr = {trivial, sign, 2-dim}, padded to d = |S3| = 6
  /// labels, G/G' = S3/A3 = Z2, distinguished image the odd coset.
  static QuotientLinearModel s3() { return QuotientLinearModel(6, AbelianGroup({2}), {1}, "S3"); }

  /// "quot:d=6,s=2,ab=Z2,a=1" or "S3".
  static QuotientLinearModel parse(std::string_view spec) {
    spec = detail::trim(spec);
    if (spec == "S3") return s3();
    if (spec.substr(0, 5) != "quot:") throw InvalidInput("malformed quotient spec '" + std::string(spec) + "'");
    std::optional<int> d, s;
    std::optional<AbelianGroup> ab;
    std::string a_text;
    std::string_view rest = spec.substr(5);
    // split on commas that start a new key=value; the element may contain commas
    std::vector<std::string> fields;
    std::string cur;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == ',') {
        auto eq = rest.find('=', i + 1);
        auto comma = rest.find(',', i + 1);
        if (eq != std::string_view::npos && (comma == std::string_view::npos || eq < comma)) {
          fields.push_back(cur);
          cur.clear();
          continue;
        }
      }
      cur.push_back(rest[i]);
    }
    fields.push_back(cur);
    for (const auto& f : fields) {
      auto eq = f.find('=');
      if (eq == std::string::npos) throw InvalidInput("malformed quotient field '" + f + "'");
      auto key = f.substr(0, eq);
      auto val = f.substr(eq + 1);
      try {
        if (key == "d") d = std::stoi(val);
        else if (key == "s") s = std::stoi(val);
        else if (key == "ab") ab = AbelianGroup::parse(val);
        else if (key == "a") a_text = val;
        else throw InvalidInput("unknown quotient field '" + key + "'");
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const InvalidInput*>(&e)) throw;
        throw InvalidInput("malformed quotient field '" + f + "'");
      }
    }
    if (!d || !ab) throw InvalidInput("quotient spec needs d= and ab=");
    if (s && *s != ab->order()) throw InvalidInput("quotient spec: s must equal |ab|");
    return QuotientLinearModel(*d, *ab, ab->parse_element(a_text), std::string(spec));
  }

  const AbelianGroup& group() const noexcept { return ab_; }
  const AbelianGroup& abelianization() const noexcept { return ab_; }
  const GroupElement& distinguished() const noexcept { return a_; }
  int group_order() const noexcept { return d_; }
  int character_count() const noexcept { return d_; }
  int linear_count() const { return ab_.order(); }
  int commutator_index() const { return ab_.order(); }
  int level() const { return ab_.exponent(); }
  std::optional<int> degree(int j) const {
    if (j < 0 || j >= d_) throw InvalidInput("character index out of range");
    if (j < linear_count()) return 1;
    return std::nullopt;
  }
  GroupElement label(int j) const {
    if (j < 0 || j >= linear_count()) throw UnsupportedEvaluation("character " + std::to_string(j) + " is not linear");
    return ab_.element_at(j);
  }

  bool in_distinguished_subgroup(const GroupElement& g) const {
    const int r = ab_.element_order(a_);
    for (int k = 0; k < r; ++k)
      if (ab_.power(a_, k) == g) return true;
    return false;
  }

  int eval_exponent(int j, const GroupElement& g) const {
    if (j < 0 || j >= d_) throw InvalidInput("character index out of range");
    if (j >= linear_count())
      throw UnsupportedEvaluation("character " + std::to_string(j) + " is not linear; " + name() +
                                  " can only evaluate characters 0.." + std::to_string(linear_count() - 1));
    ab_.require(g);
    if (!in_distinguished_subgroup(g))
      throw UnsupportedEvaluation("element " + AbelianGroup::format(g) + " is not a power of the distinguished element");
    return AbelianModel(ab_).eval_exponent(j, g);
  }
  CyclotomicInt eval_char(int j, const GroupElement& g) const { return CyclotomicInt::zeta(level(), eval_exponent(j, g)); }

  std::string name() const {
    if (!name_.empty()) return name_;
    return "quot:d=" + std::to_string(d_) + ",s=" + std::to_string(ab_.order()) + ",ab=" + ab_.name() +
           ",a=" + AbelianGroup::format(a_);
  }

 private:
  int d_;
  AbelianGroup ab_;
  GroupElement a_;
  std::string name_;
};

/// What the wreath-product machinery needs from a color-group model.
template <class M>
concept ColorGroupModel = requires(const M& m, int j, const GroupElement& g) {
  { m.group() } -> std::convertible_to<const AbelianGroup&>;
  { m.character_count() } -> std::convertible_to<int>;
  { m.linear_count() } -> std::convertible_to<int>;
  { m.level() } -> std::convertible_to<int>;
  { m.eval_exponent(j, g) } -> std::convertible_to<int>;
  { m.degree(j) } -> std::convertible_to<std::optional<int>>;
  { m.name() } -> std::convertible_to<std::string>;
};

using GroupModel = std::variant<AbelianModel, QuotientLinearModel>;

/// Abelian specs ("Z6", "Z2xZ2") or quotient specs ("S3", "quot:...").
inline GroupModel parse_group_model(std::string_view spec) {
  spec = detail::trim(spec);
  if (spec == "S3" || spec.substr(0, 5) == "quot:") return QuotientLinearModel::parse(spec);
  return AbelianModel(AbelianGroup::parse(spec));
}

/// Linear characters grouped by their restriction to <a>: fibers[k] holds
/// the indices whose restriction is theta_k : a -> zeta_r^k.
struct FiberPartition {
  int order = 1;  // r = |a|
  std::vector<std::vector<int>> fibers;
};

template <ColorGroupModel M>
FiberPartition fiber_partition(const M& model, const GroupElement& a) {
  model.group().require(a);
  FiberPartition fp;
  fp.order = model.group().element_order(a);
  fp.fibers.assign(static_cast<std::size_t>(fp.order), {});
  const int lvl = model.level();
  const int step = lvl / fp.order;
  for (int j = 0; j < model.linear_count(); ++j) {
    const int e = model.eval_exponent(j, a);
    // chi_j(a) is an r-th root of unity, so e is a multiple of L/r
    fp.fibers[static_cast<std::size_t>(e / step)].push_back(j);
  }
  return fp;
}

/// sum_k k * (sizes of the components indexed by fiber k), reduced mod r.
inline int alpha(const RPartitePartition& shape, const FiberPartition& fp) {
  long long a = 0;
  for (int k = 0; k < fp.order; ++k)
    for (int i : fp.fibers[static_cast<std::size_t>(k)]) {
      if (i >= shape.arity()) throw InvalidInput("fiber index exceeds the arity of the shape");
      a += static_cast<long long>(k) * shape[static_cast<std::size_t>(i)].size();
    }
  return static_cast<int>(detail::positive_mod(a, fp.order));
}

}  // namespace wreathchar
