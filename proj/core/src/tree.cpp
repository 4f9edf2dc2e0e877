#include <cwf/tree.hpp>

#include <stdexcept>
#include <utility>

namespace cwf {

namespace {

BigInt pow2(int n) {
    return BigInt(1) << n;
}

}  // namespace

Position::Position(int n_, BigInt i_) : n(n_), i(std::move(i_)) {
    if (n < 0) {
        throw std::domain_error("row index must be nonnegative");
    }
    if (i < 1 || i > pow2(n)) {
        throw std::domain_error("position index out of range 1..2^n");
    }
}

std::string Position::str() const {
    return "(" + std::to_string(n) + "," + i.str() + ")";
}

std::pair<Rational, Rational> children(const Rational& w,
                                       const UVParams& params) {
    return {apply_left(w, params), apply_right(w, params)};
}

ParentResult parent(const Rational& w, const UVParams& params) {
    if (!w.is_positive()) {
        throw std::domain_error("parent requires a positive vertex");
    }
    const BigInt& a = w.num();
    const BigInt& b = w.den();
    if (b > params.u * a) {
        // w < 1/u: left child of w/(1-uw) = a/(b-ua).
        return {ParentResult::Kind::left_child,
                Rational(a, b - params.u * a)};
    }
    if (a > params.v * b) {
        // w > v: right child of w-v.
        return {ParentResult::Kind::right_child,
                Rational(a - params.v * b, b)};
    }
    return {ParentResult::Kind::orphan, std::nullopt};
}

RowStream::RowStream(Rational root, UVParams params)
    : params_(params), row_{std::move(root)} {
    if (!row_.front().is_positive()) {
        throw std::domain_error("tree root must be positive");
    }
}

void RowStream::advance() {
    std::vector<Rational> next;
    next.reserve(row_.size() * 2);
    for (const Rational& w : row_) {
        next.push_back(apply_left(w, params_));
        next.push_back(apply_right(w, params_));
    }
    row_ = std::move(next);
    ++n_;
}

std::vector<Rational> row(const Rational& z, const UVParams& params, int n,
                          int max_row) {
    if (n < 0) {
        throw std::domain_error("row index must be nonnegative");
    }
    if (n > max_row) {
        throw std::length_error("row " + std::to_string(n) +
                                " exceeds the row cap " +
                                std::to_string(max_row));
    }
    RowStream stream(z, params);
    while (stream.n() < n) {
        stream.advance();
    }
    return stream.current();
}

Rational vertex_at(const Rational& z, const UVParams& params,
                   const Position& pos) {
    if (!z.is_positive()) {
        throw std::domain_error("tree root must be positive");
    }
    Rational value = z;
    for (Move m : index_to_word(pos).letters()) {
        value = m == Move::left ? apply_left(value, params)
                                : apply_right(value, params);
    }
    return value;
}

PathWord index_to_word(const Position& pos) {
    // 2^n + (i-1) in binary, leading 1 dropped, 0 = L / 1 = R.
    BigInt code = pow2(pos.n) + (pos.i - 1);
    PathWord word;
    for (int bit = pos.n - 1; bit >= 0; --bit) {
        word.append(boost::multiprecision::bit_test(code, bit) ? Move::right
                                                               : Move::left);
    }
    return word;
}

Position word_to_index(const PathWord& word) {
    BigInt depth = word.depth();
    if (depth > 1000000) {
        throw std::length_error("path word too long for a position index");
    }
    int n = depth.convert_to<int>();
    BigInt code = 1;
    for (const auto& [m, count] : word.runs()) {
        int k = count.convert_to<int>();
        if (m == Move::left) {
            code <<= k;
        } else {
            code = (code << k) | ((BigInt(1) << k) - 1);
        }
    }
    return Position(n, code - pow2(n) + 1);
}

Rational successor(const Rational& alpha, const UVParams& params) {
    if (!alpha.is_positive()) {
        throw std::domain_error("successor requires a positive value");
    }
    BigInt whole = alpha.floor_part();
    Rational frac = alpha.frac_part();
    // Interior row elements have the shape kv + w/(uw+1): the integer part
    // is a multiple of v and the fractional part lies strictly inside
    // (0, 1/u).
    if (whole % params.v != 0 || frac.is_zero() ||
        Rational(params.u) * frac >= Rational(1)) {
        throw std::domain_error("not an interior row element");
    }
    Rational v(params.v);
    Rational u(params.u);
    Rational slack = Rational(1) - u * frac;  // 1 - u{a} > 0
    Rational numerator = v * frac + v * v * slack;
    Rational denominator = u * Rational(whole) * (frac + v * slack) + v * slack;
    return numerator / denominator;
}

Rational classic_successor(const Rational& x) {
    if (!x.is_positive()) {
        throw std::domain_error("successor requires a positive value");
    }
    // 1/(2[x] + 1 - x)
    return (Rational(2 * x.floor_part()) + Rational(1) - x).reciprocal();
}

AdjacentAncestor adjacent_lca(int n, const BigInt& i) {
    if (n < 1 || i < 1 || i > pow2(n) - 1) {
        throw std::domain_error("adjacent pair requires 1 <= i <= 2^n - 1");
    }
    BigInt code = pow2(n) + (i - 1);
    int k = 0;
    while (boost::multiprecision::bit_test(code, k)) {
        ++k;
    }
    // i < 2^n guarantees a 0 bit below the sentinel, so k <= n-1.
    int ancestor_row = n - k - 1;
    BigInt ancestor_code = code >> (k + 1);
    return {Position(ancestor_row, ancestor_code - pow2(ancestor_row) + 1),
            k};
}

std::pair<BigInt, BigInt> dn_relation(int n, const BigInt& i,
                                      const Rational& z,
                                      const UVParams& params) {
    AdjacentAncestor lca = adjacent_lca(n, i);
    Rational left = vertex_at(z, params, Position(n, i));
    Rational right = vertex_at(z, params, Position(n, i + 1));
    Rational ancestor = vertex_at(z, params, lca.ancestor);
    BigInt lhs =
        params.v * left.den() + (1 - BigInt(params.u) * params.v) * ancestor.num();
    return {lhs, right.num()};
}

}  // namespace cwf
