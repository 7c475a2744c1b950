#ifndef NAKAYAMA_DYCK_HPP
#define NAKAYAMA_DYCK_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nakayama/errors.hpp"

namespace nakayama {

enum class Step : unsigned char { Up, Down };

/// A Dyck path: a balanced word of up/down steps from (0,0) to (2n,0) whose
/// prefixes never dip below the axis.  The empty path (n = 0) is allowed.
/// Immutable after construction; every accessor is const.
class DyckPath {
public:
    DyckPath() = default;

    /// Reads a step word over {U,D}, case-insensitive; '1'/'0' are accepted
    /// as up/down.  Throws BadAlphabet or NonLatticeWord.
    static DyckPath parse(std::string_view text);

    /// Validates an explicit step sequence.  Throws NonLatticeWord.
    static DyckPath from_steps(std::vector<Step> steps);

    int semilength() const { return static_cast<int>(steps_.size() / 2); }
    bool empty() const { return steps_.empty(); }
    const std::vector<Step>& steps() const { return steps_; }

    /// Canonical text form, e.g. "UUDD".
    std::string str() const;

    bool operator==(const DyckPath&) const = default;

private:
    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}
    std::vector<Step> steps_;
};

/// Maximal-run factorization u^{a_1} d^{d_1} ... u^{a_l} d^{d_l} of a
/// non-empty path.  All run lengths are >= 1 and sum(ascents) =
/// sum(descents) = semilength.
struct AscentDescent {
    std::vector<int> ascents;
    std::vector<int> descents;
    int blocks() const { return static_cast<int>(ascents.size()); }
};

/// Strictly increasing prefix sums A_1..A_{l-1} and D_1..D_{l-1} of the run
/// lengths (the final sums, both equal to n, are omitted).  Both sequences
/// are empty exactly for u^n d^n.
struct PartialSumCode {
    std::vector<int> ascent_code;
    std::vector<int> descent_code;
};

/// Throws EmptyPath on the empty path.
AscentDescent ascent_descent(const DyckPath& path);

/// Rebuilds the path u^{a_1} d^{d_1} ... from run lengths.
DyckPath path_from_runs(const AscentDescent& runs);

/// Throws EmptyPath on the empty path.
PartialSumCode partial_code(const DyckPath& path);

/// Levels k_1..k_l with k_1 = 1 and k_i = k_{i-1} + a_{i-1} - d_{i-1};
/// k_1 is the level of the origin and k_2..k_l are the valley levels.
std::vector<int> valley_levels(const AscentDescent& runs);

/// Peak vertices as (x, level) pairs, left to right.  The level of a point
/// (x, y) is y + 1; peak i sits at level k_i + a_i.  Throws EmptyPath.
std::vector<std::pair<int, int>> peaks_and_levels(const DyckPath& path);

/// Heights h(0..2n) of the path's vertices.
std::vector<int> height_profile(const DyckPath& path);

/// Catalan number C_n; valid for 0 <= n <= 33 (fits in 64 bits).
std::uint64_t catalan(int n);

/// All Dyck paths of semilength n in lexicographic order with U < D.
std::vector<DyckPath> enumerate_dyck(int n);

} // namespace nakayama

#endif
