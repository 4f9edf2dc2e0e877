#pragma once

#include <cwf/params.hpp>
#include <cwf/rational.hpp>
#include <cwf/word.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cwf {

/// Default cap on the row index for whole-row enumeration: a row holds 2^n
/// values, so this guards against accidental exponential blowups.  Override
/// per call where a deeper walk is intended.
inline constexpr int kDefaultRowCap = 24;

/// Breadth-first coordinates of a vertex: row n (the root row is 0) and
/// 1-based index i, counted left to right, 1 <= i <= 2^n.
struct Position {
    int n{0};
    BigInt i{1};

    Position() = default;
    /// Throws std::domain_error unless n >= 0 and 1 <= i <= 2^n.
    Position(int n_, BigInt i_);

    bool operator==(const Position& rhs) const = default;

    std::string str() const;  // "(n,i)"
};

/// Both children of w: (w/(uw+1), w+v).
std::pair<Rational, Rational> children(const Rational& w,
                                       const UVParams& params);

struct ParentResult {
    enum class Kind { left_child, right_child, orphan };
    Kind kind{Kind::orphan};
    /// The parent; empty for orphans.
    std::optional<Rational> parent;
};

/// Inverts the child maps.  Exactly one case applies:
///   w < 1/u        -> w is the left child of w/(1-uw),
///   w > v          -> w is the right child of w-v,
///   1/u <= w <= v  -> w is an orphan (no parent in any (u,v)-tree).
ParentResult parent(const Rational& w, const UVParams& params);

/// Streaming row enumerator: holds the current row only and derives the
/// next one from it.  Single consumer per instance; distinct instances are
/// independent.
class RowStream {
public:
    RowStream(Rational root, UVParams params);

    int n() const { return n_; }
    const std::vector<Rational>& current() const { return row_; }

    /// Derives row n+1 from row n (doubling its size).
    void advance();

private:
    UVParams params_;
    int n_{0};
    std::vector<Rational> row_;
};

/// Row n of the tree rooted at z, left to right (2^n values).  The first
/// element is z/(nuz+1) and the last is z+nv.  Throws std::length_error if
/// n exceeds max_row.
std::vector<Rational> row(const Rational& z, const UVParams& params, int n,
                          int max_row = kDefaultRowCap);

/// Vertex value at a position, computed in O(n) by walking the path word —
/// the row is never materialized.
Rational vertex_at(const Rational& z, const UVParams& params,
                   const Position& pos);

/// Position -> path word codec: write 2^n + (i-1) in binary, drop the
/// leading 1, and read the remaining bits root-to-vertex with 0 = L, 1 = R.
PathWord index_to_word(const Position& pos);

/// Inverse of index_to_word.
Position word_to_index(const PathWord& word);

/// The element to the right of alpha in its row, from integer and
/// fractional parts alone.  Preconditions (checked): v | [alpha] and
/// 0 < {alpha} < 1/u; every interior row element of every (u,v)-tree
/// satisfies them.  Throws std::domain_error("not an interior row element")
/// otherwise.
Rational successor(const Rational& alpha, const UVParams& params);

/// The classical successor map x -> 1/(2[x]+1-x) of the (1,1) tree.  Unlike
/// the generalized formula it also wraps the last element of a row onto the
/// first element of the next.
Rational classic_successor(const Rational& x);

struct AdjacentAncestor {
    /// Deepest common ancestor w of positions (n,i) and (n,i+1).
    Position ancestor;
    /// Fan-out k: (n,i) is the k-th right child of w's left child, and
    /// (n,i+1) the k-th left child of w's right child.
    int fanout{0};
};

/// Common-ancestor data of the adjacent pair (n,i), (n,i+1); k equals the
/// number of trailing 1-bits of 2^n + i - 1.  Requires 1 <= i <= 2^n - 1.
AdjacentAncestor adjacent_lca(int n, const BigInt& i);

/// Both sides of the numerator-denominator relation for the adjacent pair
/// (n,i), (n,i+1) in the tree rooted at z: lhs = v*d_i + (1-uv)*w' and
/// rhs = n_{i+1}, where d_i is the denominator of c(n,i), n_{i+1} the
/// numerator of c(n,i+1) and w' the numerator of their common ancestor.
/// The relation lhs = rhs always holds; d_i = n_{i+1} itself only at
/// u = v = 1.
std::pair<BigInt, BigInt> dn_relation(int n, const BigInt& i,
                                      const Rational& z,
                                      const UVParams& params);

}  // namespace cwf
