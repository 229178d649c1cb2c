#pragma once

// JSON forms of the value types:
//   Partition          [3,1,1]
//   RPartitePartition  [[2,1],[],[1]]
//   CyclotomicInt      {"level": 6, "coeffs": [1, -1]}   (reduced form)
// Coefficients outside the int64 range are written as decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/error.hpp"
#include "wreathchar/groups.hpp"
#include "wreathchar/partition.hpp"

namespace wreathchar {

inline nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("expected an integer");
}

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

inline void to_json(nlohmann::json& j, const Composition& c) { j = c.parts(); }
inline void from_json(const nlohmann::json& j, Composition& c) { c = Composition(j.get<std::vector<int>>()); }

inline void to_json(nlohmann::json& j, const RPartitePartition& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.components()) j.push_back(c);
}
inline void from_json(const nlohmann::json& j, RPartitePartition& p) {
  p = RPartitePartition(j.get<std::vector<Partition>>());
}

inline void to_json(nlohmann::json& j, const CyclotomicInt& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(integer_to_json(c));
  j = {{"level", x.level()}, {"coeffs", coeffs}};
}
inline void from_json(const nlohmann::json& j, CyclotomicInt& x) {
  const int level = j.at("level").get<int>();
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  x = CyclotomicInt::from_coefficients(level, coeffs);
}

/// The character labelling of a model, echoed into every wreath output.
inline nlohmann::json labelling_json(const AbelianModel& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (int j = 0; j < m.character_count(); ++j) labels.push_back(m.label(j));
  return {{"group", m.name()},
          {"factors", m.group().factors()},
          {"level", m.level()},
          {"rule", "chi_j(a) = prod_t zeta_{m_t}^{j_t * a_t}, j = (j_1..j_k) the j-th tuple in lexicographic order"},
          {"labels", labels}};
}

inline nlohmann::json labelling_json(const QuotientLinearModel& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (int j = 0; j < m.linear_count(); ++j) labels.push_back(m.label(j));
  return {{"group", m.name()},
          {"characters", m.character_count()},
          {"abelianization", m.abelianization().name()},
          {"distinguished", m.distinguished()},
          {"level", m.level()},
          {"rule", "chi_j = phi_j o tau for j < s, phi_j the j-th character of G/G' in lexicographic order; "
                   "characters j >= s are not evaluated"},
          {"linear_labels", labels}};
}

inline nlohmann::json labelling_json(const GroupModel& m) {
  return std::visit([](const auto& model) { return labelling_json(model); }, m);
}

}  // namespace wreathchar
