#pragma once

#include <cwf/ancestry.hpp>
#include <cwf/params.hpp>
#include <cwf/rational.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cwf {

/// All reduced a/b with 1 <= a,b <= bound lying in the closed orphan
/// interval [1/u, v], ascending.  Only (1,1) has finitely many orphans
/// overall; for every other family the count keeps growing with the bound.
std::vector<Rational> orphans_in_box(const UVParams& params,
                                     std::int64_t bound);

struct ForestAssignment {
    Rational root;
    BigInt depth;
};

/// Result of sweeping every reduced fraction in a box through
/// orphan_ancestor and cross-checking the forest partition.
struct ForestReport {
    UVParams params;
    std::int64_t bound{0};
    /// Distinct orphan roots reached.
    std::size_t orphan_count{0};
    /// Every reduced a/b with a,b <= bound, mapped to its orphan root and
    /// depth below it.
    std::map<Rational, ForestAssignment> assignments;
    /// Empty iff every fraction reached exactly one orphan and passed the
    /// descendant-conditions and depth cross-checks.
    std::vector<std::string> violations;
};

/// Runs orphan_ancestor on every reduced fraction in the box and verifies,
/// per fraction, that the reached root is an orphan, that the
/// continued-fraction descendant conditions confirm membership in its tree,
/// and that the formula depth equals the chain length.  Throws
/// std::length_error above max_bound.
ForestReport verify_partition(const UVParams& params, std::int64_t bound,
                              std::int64_t max_bound = 2000);

struct SubsetCheck {
    /// Every vertex of the inner tree up to the requested depth belongs to
    /// the outer tree.
    bool subset_holds{false};
    /// The divisibility criterion: z in the outer tree, u' | u and v' | v.
    bool criterion_holds{false};
};

/// Bounded-depth test of the vertex-set containment
/// T^{(u,v)}(z) subset of T^{(u',v')}(z'), with membership decided by the
/// descendant conditions, alongside the criterion that characterizes full
/// containment.
SubsetCheck subtree_subset_check(const Rational& z, const UVParams& inner,
                                 const Rational& zprime,
                                 const UVParams& outer, int depth,
                                 int max_depth = 12);

/// Tests T^{(lcm U, lcm V)}(z) = intersection of the T^{(u',v')}(z) over
/// (u',v') in U x V, on a bounded window: every lcm-tree vertex to the
/// given depth must lie in all factor trees, and every vertex common to all
/// factor trees (enumerated from the first factor tree, deep enough to
/// cover the lcm window) must lie in the lcm tree.
bool intersection_check(const std::vector<std::int64_t>& us,
                        const std::vector<std::int64_t>& vs,
                        const Rational& z, int depth, int max_depth = 12);

}  // namespace cwf
