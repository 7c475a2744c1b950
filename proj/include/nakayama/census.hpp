#ifndef NAKAYAMA_CENSUS_HPP
#define NAKAYAMA_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/dyck.hpp"
#include "nakayama/errors.hpp"

namespace nakayama {

/// Number of standard Young tableaux of the two-row shape (n, k), by the
/// closed form binom(n+k, k) * (n-k+1) / (n+1).  Throws BadShape unless
/// 0 <= k <= n.
std::uint64_t syt_two_row(int n, int k);

/// All valid Kupisch series on `simples` vertices, generated directly from
/// the series constraints in lexicographic order; there are
/// Catalan(simples - 1) of them.
std::vector<KupischSeries> enumerate_kupisch(int simples);

/// Identity checks the census can run per object, named as they appear in
/// reports and in the CLI --checks selection.
enum class Check : unsigned {
    theorem1 = 1u << 0,           // projectives with id 1 == fixed points
    theorem2 = 1u << 1,           // dim Ext^1(J,J) == support size
    dual_oracle = 1u << 2,        // count route == Hom-route Ext sum
    propP = 1u << 3,              // path formula == injectives with pd 1
    corollaryP = 1u << 4,         // permutation formula == same count
    propPP = 1u << 5,             // path formula == radicals with id <= 1
    corollaryPP = 1u << 6,        // permutation formula == same count
    theoremP = 1u << 7,           // fixed-point formula == direct scan
    theoremPP = 1u << 8,          // connectivity formula == direct scan
    omega_bijection = 1u << 9,    // proj-id-1 count == inj-pd-1 count
    lemma_ext1jj = 1u << 10,      // radical count == syzygies of injectives
    bijection_roundtrips = 1u << 11,
    distribution_vs_syt = 1u << 12,
};

class CheckSet {
public:
    static CheckSet all();
    static CheckSet none() { return CheckSet{}; }

    /// "all" or a comma-separated list of check names.  Throws ParseError
    /// on an unknown name.
    static CheckSet parse(std::string_view text);

    CheckSet& add(Check c) {
        mask_ |= static_cast<unsigned>(c);
        return *this;
    }
    bool contains(Check c) const { return (mask_ & static_cast<unsigned>(c)) != 0; }
    bool empty() const { return mask_ == 0; }

private:
    unsigned mask_ = 0;
};

/// Canonical check order and the name <-> id mapping.
const std::vector<std::pair<std::string, Check>>& check_catalog();

/// A failing object, serialized fully so the failure replays as a unit test.
struct Counterexample {
    std::string path;
    std::string kupisch;
    std::string permutation;
    long long lhs = 0;
    long long rhs = 0;
    std::string detail;
};

struct CheckOutcome {
    bool pass = true;
    std::optional<Counterexample> counterexample;
};

struct CensusReport {
    int size = 0;
    std::uint64_t total = 0;
    std::vector<std::pair<std::string, CheckOutcome>> checks; // canonical order
    std::map<int, std::uint64_t> distribution;                // dim Ext^1(J,J) -> count
    double elapsed_seconds = 0.0;

    bool all_pass() const;
};

/// Sweeps every Dyck path of semilength n, derives the permutation and the
/// algebra, evaluates the selected checks and tallies the distribution of
/// dim Ext^1(J,J).  The sweep is split into `threads` contiguous shards of
/// the canonical enumeration; each shard is a pure fold and the merged
/// report is identical for every thread count (the first counterexample in
/// canonical order wins).
CensusReport run_census(int n, const CheckSet& checks = CheckSet::all(), int threads = 1);

/// One row per object at size n:
/// path,kupisch,perm,fixed_points,support,proj_id1,dim_ext1_jj
void write_census_csv(int n, std::ostream& out);

} // namespace nakayama

#endif
