#ifndef NAKAYAMA_PERM_HPP
#define NAKAYAMA_PERM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nakayama/dyck.hpp"
#include "nakayama/errors.hpp"

namespace nakayama {

/// A permutation of {1..n} in one-line notation, 1-indexed throughout.
/// n = 0 (the empty permutation) is allowed.
class Permutation {
public:
    Permutation() = default;

    /// Takes the images pi(1)..pi(n); throws std::invalid_argument if they
    /// are not a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    /// Reads space- or comma-separated one-line notation, e.g.
    /// "4 1 2 7 3 5 8 6".  Throws ParseError.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }

    /// pi(i) for 1 <= i <= n.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    /// Canonical text form: space-separated images.
    std::string str() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Excedance locations i_1 < ... < i_r and their values pi(i_1)..pi(i_r).
/// For a 321-avoiding permutation the values are strictly increasing.
struct ExcedanceData {
    std::vector<int> locations;
    std::vector<int> values;
    int count() const { return static_cast<int>(locations.size()); }
};

/// True iff there is no triple i < j < k with pi(i) > pi(j) > pi(k).
bool is_321_avoiding(const Permutation& p);

ExcedanceData excedances(const Permutation& p);

/// Billey-Jockusch-Stanley bijection: the partial-sum code (A, D) of the
/// path places value A_j + 1 at position D_j; the remaining positions are
/// filled left to right with the unused values in increasing order.
Permutation bjs(const DyckPath& path);

/// Inverse direction: run lengths are rebuilt from the excedance data; the
/// identity maps to u^n d^n.  Throws Not321Avoiding.
DyckPath bjs_inverse(const Permutation& p);

int fixed_points(const Permutation& p);

/// Closed form for the number of fixed points of a 321-avoiding
/// permutation in terms of its excedance data (n for the identity).
/// Throws Not321Avoiding.
int fixed_points_formula(const Permutation& p);

/// Indices i with pi(k) < i for all k < i; i = 1 always qualifies.
std::vector<int> connectivity_set(const Permutation& p);

/// Closed form for |connectivity_set| of a non-identity 321-avoiding
/// permutation.  Throws IdentityNotCovered on the identity and
/// Not321Avoiding otherwise.
int connectivity_formula(const Permutation& p);

/// Number of prefixes {1..k} mapped onto themselves.
int block_number(const Permutation& p);

/// Number of distinct adjacent transpositions in any reduced factorization;
/// computed as n - block_number.
int support_size(const Permutation& p);

/// Verifies that the run-length prefix sums of bjs_inverse(p) recover the
/// excedance data: a_1+..+a_j = pi(i_j) - 1 and d_1+..+d_j = i_j.
/// Throws Not321Avoiding.
bool partial_sums_check(const Permutation& p);

} // namespace nakayama

#endif
