#ifndef NAKAYAMA_ALGEBRA_HPP
#define NAKAYAMA_ALGEBRA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nakayama/dyck.hpp"
#include "nakayama/errors.hpp"
#include "nakayama/perm.hpp"

namespace nakayama {

/// Kupisch series [c_0..c_n]: the dimensions of the indecomposable
/// projectives e_iA of a Nakayama algebra whose quiver is the linear
/// A_{n+1} quiver 0 -> 1 -> ... -> n.  Constraints:
///   c_n = 1,  c_i >= 2 for i < n,  c_{i+1} >= c_i - 1,  c_i + i <= n + 1.
/// There are exactly Catalan(n) valid series on n+1 vertices.
class KupischSeries {
public:
    /// Throws InvalidKupisch naming the first violated constraint.
    static KupischSeries validate(std::vector<int> entries);

    /// Reads comma-separated entries, e.g. "4,6,5,4,4,3,2,2,1".
    /// Throws ParseError or InvalidKupisch.
    static KupischSeries parse(std::string_view text);

    /// The staircase [m, m-1, ..., 1]: the unique hereditary algebra.
    static KupischSeries hereditary(int simples);

    int simples() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Canonical comma-separated text form.
    std::string str() const;

    bool operator==(const KupischSeries&) const = default;

private:
    explicit KupischSeries(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

/// The uniserial module M(top, length) = e_top A / e_top J^length, with
/// composition factors S_top, ..., S_{top+length-1} from top to socle.
/// length = 0 encodes the zero module, canonically as (0, 0).
struct UniserialModule {
    int top = 0;
    int length = 0;

    static UniserialModule zero() { return {}; }
    bool is_zero() const { return length == 0; }
    int socle() const { return top + length - 1; }

    /// Reads "M(i,k)" or "0".  Throws ParseError.
    static UniserialModule parse(std::string_view text);
    std::string str() const;

    bool operator==(const UniserialModule&) const = default;
};

enum class InjDimClass { Injective, DimOne, DimAtLeastTwo };

/// A linear Nakayama algebra, held as its Kupisch series together with the
/// dimension vector d of the indecomposable injectives D(Ae_j).  All module
/// arithmetic is exact integer arithmetic on (top, length) pairs:
///
///   syzygy    O(M(i,k))    = M(i+k, c_i - k)         (zero if k = c_i)
///   cosyzygy  O^{-}(M(i,k)) = M(i+k-d_j, d_j - k)    with j = i+k-1
///                                                    (zero if k = d_j)
///
/// Everything is characteristic-free; Hom and Ext^1 spaces between
/// uniserials have dimension 0 or 1.
class Algebra {
public:
    explicit Algebra(KupischSeries series);

    const KupischSeries& kupisch() const { return series_; }
    int simples() const { return series_.simples(); }

    /// d_0..d_n, where d_j = min{k >= 1 : k >= c_{j-k}} (c_{<0} := 0).
    /// The equivalent max-form is cross-checked at construction.
    const std::vector<int>& injective_dims() const { return d_; }

    UniserialModule simple(int i) const;
    UniserialModule projective(int i) const; // e_i A = M(i, c_i)
    UniserialModule injective(int j) const;  // D(Ae_j) = M(j-d_j+1, d_j)
    UniserialModule radical(int i) const;    // e_i J = M(i+1, c_i-1), zero if c_i = 1

    /// Throws BadModule unless m is zero or M(i,k) with 0 <= i <= n,
    /// 1 <= k <= c_i.
    void require_valid(const UniserialModule& m) const;

    bool is_projective(const UniserialModule& m) const;
    bool is_injective(const UniserialModule& m) const;

    UniserialModule syzygy(const UniserialModule& m) const;
    UniserialModule cosyzygy(const UniserialModule& m) const;

    /// Lengths of the minimal resolutions (number of nonzero (co)syzygies);
    /// zero module and (co)resolved-at-once modules give 0.
    int proj_dim(const UniserialModule& m) const;
    int inj_dim(const UniserialModule& m) const;

    /// Classifies id(m) as 0 (injective), exactly 1, or >= 2 from the d
    /// vector alone: injective iff k = d_{i+k-1}; dimension one iff
    /// k < d_{i+k-1} and d_{i+k-1} - k = d_{i-1} (with d_{-1} := 0).
    /// Throws ZeroModule.
    InjDimClass id_at_most_one(const UniserialModule& m) const;

    /// |{i : id(e_i A) = 1}|.
    int count_proj_inj_dim_one() const;

    /// |{j : pd(D(Ae_j)) = 1}|, by iterating syzygies.
    int count_inj_proj_dim_one() const;

    /// |{i : id(e_i J) <= 1}|; e_n J = 0 always qualifies.
    int radical_id_le_one_count() const;

    /// dim Ext^1(J, J) = simples - radical_id_le_one_count.
    int ext1_jj_dim() const;

    /// dim Hom(M(a,b), M(c,d)) = 1 iff c <= a <= c+d-1 and c+d <= a+b,
    /// else 0.
    int hom_dim(const UniserialModule& ma, const UniserialModule& mb) const;

    /// dim Ext^1 via 0 -> OM -> P(M) -> M -> 0:
    /// hom(OM, N) - hom(P(M), N) + hom(M, N).
    int ext1_dim(const UniserialModule& ma, const UniserialModule& mb) const;

    /// dim Ext^degree by dimension shift onto the (degree-1)-st syzygy;
    /// degree >= 1.
    int ext_dim(const UniserialModule& ma, const UniserialModule& mb, int degree) const;

    /// max over simples of proj_dim; always finite here.
    int global_dimension() const;

private:
    int d_at(int j) const { return j < 0 ? 0 : d_[static_cast<std::size_t>(j)]; }

    KupischSeries series_;
    std::vector<int> d_;
};

/// Run-length formula for the number of indecomposable injectives with
/// projective dimension one: n for u^n d^n, otherwise
/// d_1 - 1 + sum_{i=2}^{l-1} max(d_i - k_i - 1, 0) + a_l - 1.
int inj_pd1_formula(const DyckPath& path);

/// Same count from the excedance data of the corresponding 321-avoiding
/// permutation (n for the identity).  Throws Not321Avoiding.
int inj_pd1_formula(const Permutation& p);

/// Run-length formula for the number of radicals e_iJ with id <= 1:
/// n + 1 for u^n d^n, otherwise
/// d_1 + sum_{i=2}^{l-1} max(d_i - k_i, 0) + a_l.
int radical_id_le1_formula(const DyckPath& path);

/// Same count from the excedance data (n + 1 for the identity).
/// Throws Not321Avoiding.
int radical_id_le1_formula(const Permutation& p);

} // namespace nakayama

#endif
