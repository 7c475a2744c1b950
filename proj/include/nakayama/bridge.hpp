#ifndef NAKAYAMA_BRIDGE_HPP
#define NAKAYAMA_BRIDGE_HPP

#include "nakayama/algebra.hpp"
#include "nakayama/dyck.hpp"
#include "nakayama/perm.hpp"

namespace nakayama {

/// The algebra <-> path dictionary places the module M(i,k) at the plot
/// point (2i+k-1, k-1), so the level of a point equals the module's
/// dimension.  The path of the algebra is the upper envelope of the module
/// positions:
///
///   h(x) = max{x - 2i : 0 <= i <= n, x - 2i >= 0, c_i >= x - 2i + 1}.
///
/// A series [c_0..c_n] maps to a path of semilength n; the staircase
/// [n+1,n,...,1] maps to u^n d^n and the first peak of the path has level
/// c_0.  kupisch_to_dyck and dyck_to_kupisch are mutually inverse.
DyckPath kupisch_to_dyck(const KupischSeries& series);

KupischSeries dyck_to_kupisch(const DyckPath& path);

/// The algebra of a 321-avoiding permutation: dyck_to_kupisch of its
/// inverse-BJS path; it has p.size() + 1 simples.  Throws Not321Avoiding.
KupischSeries algebra_for_permutation(const Permutation& p);

} // namespace nakayama

#endif
