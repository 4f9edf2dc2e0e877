#include <cwf/forest.hpp>

#include <cwf/tree.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cwf {

std::vector<Rational> orphans_in_box(const UVParams& params,
                                     std::int64_t bound) {
    if (bound < 1) {
        throw std::domain_error("box bound must be >= 1");
    }
    std::vector<Rational> out;
    for (std::int64_t a = 1; a <= bound; ++a) {
        for (std::int64_t b = 1; b <= bound; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            Rational w{BigInt(a), BigInt(b)};
            if (is_orphan(w, params)) {
                out.push_back(std::move(w));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ForestReport verify_partition(const UVParams& params, std::int64_t bound,
                              std::int64_t max_bound) {
    if (bound < 1) {
        throw std::domain_error("box bound must be >= 1");
    }
    if (bound > max_bound) {
        throw std::length_error("partition bound " + std::to_string(bound) +
                                " exceeds the cap " +
                                std::to_string(max_bound));
    }
    ForestReport report;
    report.params = params;
    report.bound = bound;
    std::set<Rational> roots;
    for (std::int64_t a = 1; a <= bound; ++a) {
        for (std::int64_t b = 1; b <= bound; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const Rational w{BigInt(a), BigInt(b)};
            auto [root, trace] = orphan_ancestor(w, params);
            if (!is_orphan(root, params)) {
                report.violations.push_back(w.str() +
                                            ": reached non-orphan " +
                                            root.str());
            }
            // Cross-check by the independent continued-fraction route.
            if (!is_descendant(w, root, params)) {
                report.violations.push_back(
                    w.str() + ": descendant conditions reject root " +
                    root.str());
            } else if (depth_of(w, root, params) !=
                       BigInt(trace.chain.size())) {
                report.violations.push_back(
                    w.str() + ": depth formula disagrees with chain length");
            }
            roots.insert(root);
            report.assignments.emplace(
                w, ForestAssignment{root, BigInt(trace.chain.size())});
        }
    }
    report.orphan_count = roots.size();
    return report;
}

SubsetCheck subtree_subset_check(const Rational& z, const UVParams& inner,
                                 const Rational& zprime,
                                 const UVParams& outer, int depth,
                                 int max_depth) {
    if (depth < 0) {
        throw std::domain_error("depth must be nonnegative");
    }
    if (depth > max_depth) {
        throw std::length_error("subset check depth exceeds the cap");
    }
    SubsetCheck result;
    result.criterion_holds = inner.u % outer.u == 0 &&
                             inner.v % outer.v == 0 &&
                             is_descendant(z, zprime, outer);
    result.subset_holds = true;
    RowStream rows(z, inner);
    for (int n = 0;; ++n) {
        for (const Rational& w : rows.current()) {
            if (!is_descendant(w, zprime, outer)) {
                result.subset_holds = false;
                return result;
            }
        }
        if (n == depth) {
            break;
        }
        rows.advance();
    }
    return result;
}

bool intersection_check(const std::vector<std::int64_t>& us,
                        const std::vector<std::int64_t>& vs,
                        const Rational& z, int depth, int max_depth) {
    if (us.empty() || vs.empty()) {
        throw std::domain_error("factor sets must be nonempty");
    }
    for (std::int64_t u : us) {
        if (u < 1) throw std::domain_error("factor u must be >= 1");
    }
    for (std::int64_t v : vs) {
        if (v < 1) throw std::domain_error("factor v must be >= 1");
    }
    if (depth < 0 || depth > max_depth) {
        throw std::length_error("intersection check depth out of range");
    }

    std::int64_t u = 1;
    for (std::int64_t x : us) u = std::lcm(u, x);
    std::int64_t v = 1;
    for (std::int64_t x : vs) v = std::lcm(v, x);
    const UVParams lcm_params(u, v);

    // Every lcm-tree vertex down to `depth` must lie in all factor trees.
    {
        RowStream rows(z, lcm_params);
        for (int n = 0;; ++n) {
            for (const Rational& w : rows.current()) {
                for (std::int64_t fu : us) {
                    for (std::int64_t fv : vs) {
                        if (!is_descendant(w, z, UVParams(fu, fv))) {
                            return false;
                        }
                    }
                }
            }
            if (n == depth) {
                break;
            }
            rows.advance();
        }
    }

    // Conversely, everything common to all factor trees must be an lcm-tree
    // vertex.  A depth-d lcm vertex sits at depth <= d * max(u/u', v/v') in
    // a factor tree, so a window that deep in the first factor tree covers
    // all candidates relevant to the lcm window above.
    const UVParams first(us.front(), vs.front());
    const int window = static_cast<int>(
        depth * std::max(u / us.front(), v / vs.front()));
    if (window > 2 * max_depth + 8) {
        throw std::length_error("intersection check window too deep");
    }
    RowStream rows(z, first);
    for (int n = 0;; ++n) {
        for (const Rational& w : rows.current()) {
            bool common = true;
            for (std::int64_t fu : us) {
                for (std::int64_t fv : vs) {
                    common =
                        common && is_descendant(w, z, UVParams(fu, fv));
                }
            }
            if (common && !is_descendant(w, z, lcm_params)) {
                return false;
            }
        }
        if (n == window) {
            break;
        }
        rows.advance();
    }
    return true;
}

}  // namespace cwf
