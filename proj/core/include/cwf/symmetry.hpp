#pragma once

#include <cwf/mat2.hpp>
#include <cwf/params.hpp>
#include <cwf/rational.hpp>
#include <cwf/tree.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace cwf {

/// Word matrix of a position: applying it to any root z yields the vertex
/// value at (n,i).  Independent of the root.
Mat2 position_matrix(const Position& pos, const UVParams& params);

/// Entry map of the general symmetry formula: [[a,b],[c,d]] ->
/// [[d, cv/u],[bu/v, a]].  On word matrices it realizes the row mirror
/// i -> 2^n+1-i and is an involution.  Requires u | c and v | b (always
/// true for word matrices); throws std::domain_error otherwise.
Mat2 mirror_matrix(const Mat2& m, const UVParams& params);

/// First counterexample of a row identity check.
struct RowWitness {
    BigInt index;  // 1-based i
    Rational product;
};

/// Outcome of one row-level identity check, serializable as a record
/// {identity, z, u, v, n, holds, witness?}.
struct RowCheck {
    std::string identity;
    Rational z;
    UVParams params;
    int n{0};
    bool holds{true};
    std::optional<RowWitness> witness;
};

/// Tests c(n,i) * c(n,2^n+1-i) = 1 across row n of the tree rooted at z.
/// Holds exactly when u = v and z = 1; otherwise the witness carries the
/// first failing index and its product.
RowCheck check_symmetry_formula(const Rational& z, const UVParams& params,
                                int n, int max_row = kDefaultRowCap);

/// Tests the skew symmetry c_z(n,i) * c_{(v/u)/z}(n,2^n+1-i) = v/u between
/// the (u,v)-trees rooted at z and (v/u)*z^-1.  Holds unconditionally.
RowCheck check_skew_symmetry(const Rational& z, const UVParams& params,
                             int n, int max_row = kDefaultRowCap);

/// Tests Nathanson's symmetry c_z^{(u,v)}(n,i) * c_{1/z}^{(v,u)}(n,2^n+1-i)
/// = 1 between the (u,v)-tree at z and the (v,u)-tree at 1/z.  Holds
/// unconditionally.
RowCheck check_nathanson(const Rational& z, const UVParams& params, int n,
                         int max_row = kDefaultRowCap);

/// Verifies the reciprocal-conjugation identities sigma L_k sigma = R_k and
/// sigma R_k sigma = L_k exactly at x, i.e. 1/(L_k(1/x)) = x+k and
/// 1/(R_k(1/x)) = L_k(x).
bool sigma_conjugation_check(const Rational& x, std::int64_t k);

}  // namespace cwf
