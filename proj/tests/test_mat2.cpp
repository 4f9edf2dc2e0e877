#include <cwf/mat2.hpp>
#include <cwf/word.hpp>

#include <doctest.h>

#include "oracle.hpp"

#include <random>

using namespace cwf;

namespace {

// Each L expands to u unit lefts and each R to v unit rights; the value and
// matrix must not care which way the word is spelled.
PathWord expand_to_unit(const PathWord& word, const UVParams& params) {
    PathWord out;
    for (const auto& [m, count] : word.runs()) {
        out.append(m, count * (m == Move::left ? params.u : params.v));
    }
    return out;
}

}  // namespace

TEST_CASE("matrix product") {
    UVParams p11(1, 1);
    Mat2 l1 = left_generator(p11);
    CHECK(l1 * l1 == Mat2{1, 0, 2, 1});
    CHECK(l1 * l1 == left_generator(UVParams(2, 1)));

    Mat2 m{7, 5, 4, 3};
    CHECK(mat2_identity() * m == m);
    CHECK(m * mat2_identity() == m);

    Mat2 r3 = right_generator(UVParams(1, 3));
    Mat2 l2 = left_generator(UVParams(2, 1));
    CHECK(r3 * l2 == Mat2{7, 3, 2, 1});
}

TEST_CASE("linear fractional transformation") {
    Mat2 m{187, 606, 54, 175};
    CHECK(mat_apply(m, Rational(5, 2)) == Rational(2147, 620));
    CHECK(mat_apply(mat2_identity(), Rational(7, 3)) == Rational(7, 3));
    CHECK(mat_apply(Mat2{1, 0, 2, 1}, Rational(5, 2)) == Rational(5, 12));
    CHECK_THROWS_AS(mat_apply(m, Rational(0)), std::domain_error);
}

TEST_CASE("word matrix of the 2147/620 path") {
    // Operator word R_v L_u R_v^2 L_u^2 R_v; moves root-to-vertex are the
    // reverse: R L L R R L R.
    PathWord word = PathWord::parse("RLLRRLR");
    CHECK(word.operator_string() == "R L R^2 L^2 R");
    CHECK(word_to_matrix(word, UVParams(2, 3)) == Mat2{187, 606, 54, 175});
    CHECK(word_to_matrix(PathWord(), UVParams(2, 3)) == mat2_identity());
    CHECK(word_to_matrix(PathWord::parse("L"), UVParams(2, 3)) ==
          Mat2{1, 0, 2, 1});
}

TEST_CASE("generator power lemma: L_u = L_1^u and R_v = R_1^v") {
    for (std::int64_t k = 1; k <= 20; ++k) {
        Mat2 lpow = mat2_identity();
        Mat2 rpow = mat2_identity();
        for (std::int64_t j = 0; j < k; ++j) {
            lpow = lpow * left_generator(UVParams(1, 1));
            rpow = rpow * right_generator(UVParams(1, 1));
        }
        CHECK(lpow == left_generator(UVParams(k, 1)));
        CHECK(rpow == right_generator(UVParams(1, k)));
    }
}

TEST_CASE("random word matrices: det 1, divisibility, unit expansion") {
    std::mt19937_64 rng(991);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<std::int64_t> small(1, 4);
    for (int trial = 0; trial < 10000; ++trial) {
        UVParams params(small(rng), small(rng));
        PathWord word;
        int length = len(rng);
        for (int k = 0; k < length; ++k) {
            word.append(coin(rng) ? Move::right : Move::left);
        }
        Mat2 m = word_to_matrix(word, params);
        CHECK(m.det() == 1);
        CHECK(m.b % params.v == 0);
        CHECK(m.c % params.u == 0);
        CHECK(word_to_matrix(expand_to_unit(word, params), UVParams(1, 1)) ==
              m);
    }
}

TEST_CASE("path word basics") {
    PathWord word = PathWord::parse("RLLRRLR");
    CHECK(word.depth() == 7);
    CHECK(word.letters_string() == "RLLRRLR");
    CHECK(word.runs().size() == 5);
    CHECK(PathWord().operator_string() == "e");
    CHECK(PathWord::parse("") == PathWord());
    CHECK(word.swapped_letters().letters_string() == "LRRLLRL");
    CHECK_THROWS_AS(PathWord::parse("RLX"), std::invalid_argument);

    PathWord rle;
    rle.append(Move::right, 1);
    rle.append(Move::left, 2);
    rle.append(Move::right, 0);  // no-op
    rle.append(Move::right, 2);
    rle.append(Move::left, 1);
    rle.append(Move::right, 1);
    CHECK(rle == word);
}
