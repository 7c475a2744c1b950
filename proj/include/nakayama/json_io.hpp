#ifndef NAKAYAMA_JSON_IO_HPP
#define NAKAYAMA_JSON_IO_HPP

#include <json.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/census.hpp"
#include "nakayama/dyck.hpp"
#include "nakayama/perm.hpp"

namespace nakayama {

/// {"steps":"UUD...","semilength":n,"a":[...],"d":[...],"A":[...],"D":[...],"k":[...]}
nlohmann::json to_json(const DyckPath& path);

/// {"n":..,"images":[...],"excedance_locations":[...],"excedance_values":[...],
///  "fixed_points":..,"support_size":..,"connectivity":[...]}
nlohmann::json to_json(const Permutation& p);

/// {"kupisch":[...],"d":[...],"gldim":..,"proj_id1":..,"inj_pd1":..,
///  "radical_id_le1":..,"dim_ext1_JJ":..}
nlohmann::json algebra_stats_json(const Algebra& alg);

/// The full per-object report: dyck, permutation and algebra blocks plus
/// the closed-form statistic values side by side.
nlohmann::json stats_report_json(const DyckPath& path);

nlohmann::json to_json(const CensusReport& report);

} // namespace nakayama

#endif
