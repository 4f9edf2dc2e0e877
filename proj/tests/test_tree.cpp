#include <cwf/tree.hpp>

#include <doctest.h>

#include "oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

using namespace cwf;

namespace {

std::vector<Rational> parse_row(const std::vector<std::string>& values) {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(Rational::parse(v));
    }
    return out;
}

const UVParams kUnit(1, 1);
const UVParams k23(2, 3);
const UVParams k32(3, 2);

}  // namespace

TEST_CASE("children") {
    CHECK(children(Rational(5, 2), k23) ==
          std::pair(Rational(5, 12), Rational(11, 2)));
    CHECK(children(Rational(1), kUnit) ==
          std::pair(Rational(1, 2), Rational(2)));
    CHECK(children(Rational(41, 12), k23) ==
          std::pair(Rational(41, 94), Rational(77, 12)));
}

TEST_CASE("parent inverts the child maps") {
    ParentResult r = parent(Rational(5, 12), k23);
    CHECK(r.kind == ParentResult::Kind::left_child);
    CHECK(*r.parent == Rational(5, 2));

    r = parent(Rational(5, 2), k23);
    CHECK(r.kind == ParentResult::Kind::orphan);
    CHECK(!r.parent.has_value());

    r = parent(Rational(287, 620), k23);
    CHECK(r.kind == ParentResult::Kind::left_child);
    CHECK(*r.parent == Rational(287, 46));

    r = parent(Rational(11, 2), k23);
    CHECK(r.kind == ParentResult::Kind::right_child);
    CHECK(*r.parent == Rational(5, 2));
}

TEST_CASE("parent of child is identity over the 200-box") {
    const UVParams params_set[] = {kUnit, k23, k32, UVParams(2, 2)};
    for (const auto& params : params_set) {
        for (long long a = 1; a <= 200; ++a) {
            for (long long b = 1; b <= 200; ++b) {
                if (std::gcd(a, b) != 1) {
                    continue;
                }
                Rational w(a, b);
                auto [left, right] = children(w, params);
                ParentResult pl = parent(left, params);
                REQUIRE(pl.kind == ParentResult::Kind::left_child);
                REQUIRE(*pl.parent == w);
                ParentResult pr = parent(right, params);
                REQUIRE(pr.kind == ParentResult::Kind::right_child);
                REQUIRE(*pr.parent == w);
            }
        }
    }
}

TEST_CASE("row regression: classical tree") {
    CHECK(row(Rational(1), kUnit, 0) == parse_row({"1"}));
    CHECK(row(Rational(1), kUnit, 1) == parse_row({"1/2", "2"}));
    CHECK(row(Rational(1), kUnit, 2) == parse_row({"1/3", "3/2", "2/3", "3"}));
    CHECK(row(Rational(1), kUnit, 3) ==
          parse_row({"1/4", "4/3", "3/5", "5/2", "2/5", "5/3", "3/4", "4"}));
}

TEST_CASE("row regression: (2,3) tree at 5/2") {
    Rational z(5, 2);
    CHECK(row(z, k23, 1) == parse_row({"5/12", "11/2"}));
    CHECK(row(z, k23, 2) == parse_row({"5/22", "41/12", "11/24", "17/2"}));
    CHECK(row(z, k23, 3) ==
          parse_row({"5/32", "71/22", "41/94", "77/12", "11/46", "83/24",
                     "17/36", "23/2"}));
}

TEST_CASE("row regression: table rows") {
    CHECK(row(Rational(3, 5), k23, 2) ==
          parse_row({"3/17", "36/11", "18/41", "33/5"}));
    CHECK(row(Rational(2, 5), k32, 2) ==
          parse_row({"2/17", "24/11", "12/41", "22/5"}));
    CHECK(row(Rational(1), kUnit, 2) == parse_row({"1/3", "3/2", "2/3", "3"}));
}

TEST_CASE("row boundaries have closed forms") {
    struct Sample {
        Rational z;
        UVParams params;
    };
    const Sample samples[] = {
        {Rational(1), kUnit},          {Rational(5, 2), k23},
        {Rational(3, 5), k23},         {Rational(2, 5), k32},
        {Rational(7, 3), UVParams(1, 4)},
    };
    for (const auto& [z, params] : samples) {
        RowStream rows(z, params);
        for (int n = 0; n <= 10; ++n) {
            const auto& r = rows.current();
            // First: z/(nuz+1); last: z+nv.
            REQUIRE(r.front() ==
                    z / (Rational(n) * Rational(params.u) * z + Rational(1)));
            REQUIRE(r.back() == z + Rational(n) * Rational(params.v));
            rows.advance();
        }
    }
}

TEST_CASE("row cap guards exponential blowup") {
    CHECK_THROWS_AS(row(Rational(1), kUnit, 25), std::length_error);
    CHECK_THROWS_AS(row(Rational(1), kUnit, 11, 10), std::length_error);
    CHECK_NOTHROW(row(Rational(1), kUnit, 5, 5));
    CHECK_THROWS_AS(row(Rational(1), kUnit, -1), std::domain_error);
}

TEST_CASE("vertex_at matches rows without materializing them") {
    CHECK(vertex_at(Rational(1), kUnit, Position(2, 3)) == Rational(2, 3));
    CHECK(vertex_at(Rational(5, 2), k23, Position(2, 4)) == Rational(17, 2));
    for (int n = 0; n <= 6; ++n) {
        auto r = row(Rational(5, 2), k23, n);
        for (std::size_t k = 0; k < r.size(); ++k) {
            REQUIRE(vertex_at(Rational(5, 2), k23,
                              Position(n, BigInt(k + 1))) == r[k]);
        }
    }
    // c(n,1) = z/(nuz+1) for arbitrary roots.
    Rational z(9, 7);
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(vertex_at(z, k23, Position(n, 1)) ==
                z / (Rational(n) * Rational(2) * z + Rational(1)));
    }
    CHECK_THROWS_AS(Position(2, 5), std::domain_error);
    CHECK_THROWS_AS(Position(2, 0), std::domain_error);
}

TEST_CASE("position to word codec") {
    CHECK(index_to_word(Position(2, 3)).letters_string() == "RL");
    CHECK(index_to_word(Position(0, 1)) == PathWord());
    // Code 1100 = 2^3 + 4, position (3,5); bits "100" read R,L,L.
    CHECK(index_to_word(Position(3, 5)).letters_string() == "RLL");
    CHECK(vertex_at(Rational(1), kUnit, Position(3, 5)) == Rational(2, 5));
    // Operator form reverses: L_1^2 R_1.
    CHECK(index_to_word(Position(3, 5)).operator_string() == "L^2 R");

    CHECK(word_to_index(PathWord::parse("RL")) == Position(2, 3));
    CHECK(word_to_index(PathWord()) == Position(0, 1));
    CHECK(word_to_index(PathWord::parse("LLR")) == Position(3, 2));
    CHECK(vertex_at(Rational(1), kUnit, Position(3, 2)) == Rational(4, 3));

    for (int n = 0; n <= 8; ++n) {
        for (std::uint64_t i = 1; i <= (1ull << n); ++i) {
            Position pos(n, BigInt(i));
            PathWord word = index_to_word(pos);
            REQUIRE(word.letters() == testing::brute_index_word(n, i));
            REQUIRE(word_to_index(word) == pos);
        }
    }
}

TEST_CASE("successor formula on known adjacencies") {
    CHECK(successor(Rational(1, 3), kUnit) == Rational(3, 2));
    CHECK(successor(Rational(41, 12), k23) == Rational(11, 24));
    CHECK(successor(Rational(71, 22), k23) == Rational(41, 94));
}

TEST_CASE("successor rejects non-interior values") {
    // Fractional part not below 1/u.
    CHECK_THROWS_AS(successor(Rational(3, 5) + Rational(3), k23),
                    std::domain_error);
    // Integer part not a multiple of v.
    CHECK_THROWS_AS(successor(Rational(5, 2), k23), std::domain_error);
    // Integers have zero fractional part.
    CHECK_THROWS_AS(successor(Rational(4), kUnit), std::domain_error);
}

TEST_CASE("successor walks every sampled row") {
    struct Sample {
        Rational z;
        UVParams params;
    };
    const Sample samples[] = {
        {Rational(1), kUnit},        {Rational(5, 2), k23},
        {Rational(3, 5), k23},       {Rational(2, 5), k32},
        {Rational(1), UVParams(2, 2)},
    };
    for (const auto& [z, params] : samples) {
        RowStream rows(z, params);
        for (int n = 0; n <= 6; ++n) {
            const auto& r = rows.current();
            for (std::size_t k = 0; k + 1 < r.size(); ++k) {
                REQUIRE(successor(r[k], params) == r[k + 1]);
            }
            rows.advance();
        }
    }
}

TEST_CASE("classical successor agrees and wraps rows") {
    RowStream rows(Rational(1), kUnit);
    for (int n = 0; n <= 10; ++n) {
        const auto& r = rows.current();
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            REQUIRE(classic_successor(r[k]) == r[k + 1]);
            REQUIRE(successor(r[k], kUnit) == r[k + 1]);
        }
        // Last of row n is n+1; the classical formula wraps to 1/(n+2).
        REQUIRE(r.back() == Rational(n + 1));
        REQUIRE(classic_successor(r.back()) == Rational(1, n + 2));
        rows.advance();
    }
}

TEST_CASE("common ancestor of adjacent positions") {
    AdjacentAncestor lca = adjacent_lca(1, 1);
    CHECK(lca.ancestor == Position(0, 1));
    CHECK(lca.fanout == 0);

    lca = adjacent_lca(2, 2);
    CHECK(lca.ancestor == Position(0, 1));
    CHECK(lca.fanout == 1);

    // Brute-force equivalence plus the fan-out contract
    // c(n,i) = R^k L (w) and c(n,i+1) = L^k R (w).
    Rational z(5, 2);
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t i = 1; i < (1ull << n); ++i) {
            AdjacentAncestor got = adjacent_lca(n, BigInt(i));
            testing::BruteLca want = testing::brute_adjacent_lca(n, i);
            REQUIRE(got.ancestor.n == want.row);
            REQUIRE(got.ancestor.i == BigInt(want.index));
            REQUIRE(got.fanout == want.fanout);

            Rational w = vertex_at(z, k23, got.ancestor);
            Rational a = apply_left(w, k23);
            Rational b = apply_right(w, k23);
            for (int t = 0; t < got.fanout; ++t) {
                a = apply_right(a, k23);
                b = apply_left(b, k23);
            }
            REQUIRE(a == vertex_at(z, k23, Position(n, BigInt(i))));
            REQUIRE(b == vertex_at(z, k23, Position(n, BigInt(i + 1))));
        }
    }
    CHECK_THROWS_AS(adjacent_lca(2, 4), std::domain_error);
    CHECK_THROWS_AS(adjacent_lca(0, 1), std::domain_error);
}

TEST_CASE("denominator-numerator relation") {
    // (2,3), z = 5/2: 3*22 + (1-6)*5 = 41, the next numerator.
    auto [lhs, rhs] = dn_relation(2, 1, Rational(5, 2), k23);
    CHECK(lhs == 41);
    CHECK(rhs == 41);
    std::tie(lhs, rhs) = dn_relation(2, 2, Rational(5, 2), k23);
    CHECK(lhs == 11);
    CHECK(rhs == 11);

    struct Sample {
        Rational z;
        UVParams params;
    };
    const Sample samples[] = {
        {Rational(1), kUnit},
        {Rational(5, 2), k23},
        {Rational(2, 5), k32},
        {Rational(1), UVParams(2, 2)},
    };
    for (const auto& [z, params] : samples) {
        for (int n = 1; n <= 6; ++n) {
            for (std::uint64_t i = 1; i < (1ull << n); ++i) {
                auto [l, r] = dn_relation(n, BigInt(i), z, params);
                REQUIRE(l == r);
            }
        }
    }
}

TEST_CASE("denominator equals next numerator only in the classical tree") {
    RowStream rows(Rational(1), kUnit);
    for (int n = 0; n <= 10; ++n) {
        const auto& r = rows.current();
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            REQUIRE(r[k].den() == r[k + 1].num());
        }
        rows.advance();
    }
    // Concrete counterexample at (2,3): c(2,1) = 5/22, c(2,2) = 41/12.
    auto r2 = row(Rational(5, 2), k23, 2);
    CHECK(r2[0].den() != r2[1].num());
}
