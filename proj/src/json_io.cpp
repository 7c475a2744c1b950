#include "nakayama/json_io.hpp"

#include "nakayama/bridge.hpp"

namespace nakayama {

nlohmann::json to_json(const DyckPath& path) {
    nlohmann::json j;
    j["steps"] = path.str();
    j["semilength"] = path.semilength();
    if (path.empty()) {
        j["a"] = nlohmann::json::array();
        j["d"] = nlohmann::json::array();
        j["A"] = nlohmann::json::array();
        j["D"] = nlohmann::json::array();
        j["k"] = nlohmann::json::array();
        return j;
    }
    const AscentDescent runs = ascent_descent(path);
    const PartialSumCode code = partial_code(path);
    j["a"] = runs.ascents;
    j["d"] = runs.descents;
    j["A"] = code.ascent_code;
    j["D"] = code.descent_code;
    j["k"] = valley_levels(runs);
    return j;
}

nlohmann::json to_json(const Permutation& p) {
    const ExcedanceData exc = excedances(p);
    nlohmann::json j;
    j["n"] = p.size();
    j["images"] = p.images();
    j["excedance_locations"] = exc.locations;
    j["excedance_values"] = exc.values;
    j["fixed_points"] = fixed_points(p);
    j["support_size"] = support_size(p);
    j["connectivity"] = connectivity_set(p);
    return j;
}

nlohmann::json algebra_stats_json(const Algebra& alg) {
    nlohmann::json j;
    j["kupisch"] = alg.kupisch().entries();
    j["d"] = alg.injective_dims();
    j["gldim"] = alg.global_dimension();
    j["proj_id1"] = alg.count_proj_inj_dim_one();
    j["inj_pd1"] = alg.count_inj_proj_dim_one();
    j["radical_id_le1"] = alg.radical_id_le_one_count();
    j["dim_ext1_JJ"] = alg.ext1_jj_dim();
    return j;
}

nlohmann::json stats_report_json(const DyckPath& path) {
    const Permutation perm = bjs(path);
    const Algebra alg(dyck_to_kupisch(path));
    nlohmann::json j;
    j["dyck"] = to_json(path);
    j["permutation"] = to_json(perm);
    j["algebra"] = algebra_stats_json(alg);
    nlohmann::json formulas;
    formulas["fixed_points_formula"] = fixed_points_formula(perm);
    formulas["connectivity_formula"] =
        perm.is_identity() ? nlohmann::json(nullptr)
                           : nlohmann::json(connectivity_formula(perm));
    formulas["inj_pd1_from_path"] = inj_pd1_formula(path);
    formulas["inj_pd1_from_perm"] = inj_pd1_formula(perm);
    formulas["radical_id_le1_from_path"] = radical_id_le1_formula(path);
    formulas["radical_id_le1_from_perm"] = radical_id_le1_formula(perm);
    j["formulas"] = formulas;
    return j;
}

nlohmann::json to_json(const CensusReport& report) {
    nlohmann::json j;
    j["size"] = report.size;
    j["total"] = report.total;
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, outcome] : report.checks) {
        nlohmann::json entry;
        entry["pass"] = outcome.pass;
        if (outcome.counterexample) {
            const Counterexample& ce = *outcome.counterexample;
            entry["counterexample"] = {{"path", ce.path},         {"kupisch", ce.kupisch},
                                       {"perm", ce.permutation},  {"lhs", ce.lhs},
                                       {"rhs", ce.rhs},           {"detail", ce.detail}};
        }
        checks[name] = entry;
    }
    j["checks"] = checks;
    nlohmann::json distribution = nlohmann::json::object();
    for (const auto& [k, count] : report.distribution)
        distribution[std::to_string(k)] = count;
    j["distribution"] = distribution;
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

} // namespace nakayama
