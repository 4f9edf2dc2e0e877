#pragma once

#include <cwf/mat2.hpp>
#include <cwf/params.hpp>
#include <cwf/rational.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cwf {

enum class Move { left, right };

inline char move_letter(Move m) { return m == Move::left ? 'L' : 'R'; }
inline Move opposite(Move m) {
    return m == Move::left ? Move::right : Move::left;
}

/// A path from a root to a vertex, as a sequence of L/R moves in
/// root-to-vertex order.
///
/// Ordering convention: when the same path is written as an operator word
/// over the matrices L_u and R_v, the leftmost letter acts last, so the
/// operator word reads as the reversed move sequence.  E.g. the moves
/// R,L,L,R,R,L,R are the operator word R_v L_u R_v^2 L_u^2 R_v.
///
/// Runs of equal letters are stored run-length encoded; counts are
/// arbitrary-precision because paths reconstructed from continued-fraction
/// coefficients can be astronomically long.
class PathWord {
public:
    PathWord() = default;

    static PathWord from_letters(const std::vector<Move>& moves);

    /// Parses a letter string such as "RLLR" ("" is the empty path).
    /// Throws std::invalid_argument on anything but 'L'/'R'.
    static PathWord parse(std::string_view text);

    /// Appends `count` copies of `m` at the vertex end, merging with the
    /// last run if the letter matches.  count == 0 is a no-op.
    void append(Move m, const BigInt& count = 1);

    const std::vector<std::pair<Move, BigInt>>& runs() const { return runs_; }

    bool empty() const { return runs_.empty(); }

    /// Number of moves (= depth of the vertex below the root).
    BigInt depth() const;

    /// Materialized letter sequence, root to vertex.  Requires the depth to
    /// fit in memory; prefer runs() for reconstructed paths.
    std::vector<Move> letters() const;

    /// "RLLRRLR" (root-to-vertex move order; "" for the empty path).
    std::string letters_string() const;

    /// Operator-word form, leftmost letter acting last, with run exponents:
    /// "R L R^2 L^2 R".  The empty path renders as "e".
    std::string operator_string() const;

    /// The word with L and R exchanged everywhere.
    PathWord swapped_letters() const;

    bool operator==(const PathWord& rhs) const = default;

private:
    std::vector<std::pair<Move, BigInt>> runs_;
};

/// Matrix of the path acting on a root value: the product of one L_u per L
/// and one R_v per R with the last move applied first, i.e. the operator
/// word read left to right.  The empty word gives the identity.
///
/// Every matrix produced here satisfies det = 1, v | b and u | c.
Mat2 word_to_matrix(const PathWord& word, const UVParams& params);

}  // namespace cwf
