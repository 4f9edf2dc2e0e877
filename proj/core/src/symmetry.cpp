#include <cwf/symmetry.hpp>

#include <stdexcept>

namespace cwf {

Mat2 position_matrix(const Position& pos, const UVParams& params) {
    return word_to_matrix(index_to_word(pos), params);
}

Mat2 mirror_matrix(const Mat2& m, const UVParams& params) {
    if (m.c % params.u != 0 || m.b % params.v != 0) {
        throw std::domain_error(
            "matrix is not a (u,v) word matrix: u | c and v | b required");
    }
    return Mat2{m.d, (m.c / params.u) * params.v, (m.b / params.v) * params.u,
                m.a};
}

namespace {

RowCheck check_rows(std::string identity, const Rational& z,
                    const UVParams& params, int n, int max_row,
                    const Rational& mirror_root,
                    const UVParams& mirror_params,
                    const Rational& expected_product) {
    RowCheck result{std::move(identity), z, params, n, true, std::nullopt};
    const std::vector<Rational> forward = row(z, params, n, max_row);
    const std::vector<Rational> mirrored =
        row(mirror_root, mirror_params, n, max_row);
    for (std::size_t k = 0; k < forward.size(); ++k) {
        Rational product = forward[k] * mirrored[forward.size() - 1 - k];
        if (product != expected_product) {
            result.holds = false;
            result.witness = RowWitness{BigInt(k + 1), product};
            break;
        }
    }
    return result;
}

}  // namespace

RowCheck check_symmetry_formula(const Rational& z, const UVParams& params,
                                int n, int max_row) {
    return check_rows("symmetry", z, params, n, max_row, z, params,
                      Rational(1));
}

RowCheck check_skew_symmetry(const Rational& z, const UVParams& params,
                             int n, int max_row) {
    const Rational ratio(params.v, params.u);  // v/u
    return check_rows("skew-symmetry", z, params, n, max_row,
                      ratio / z, params, ratio);
}

RowCheck check_nathanson(const Rational& z, const UVParams& params, int n,
                         int max_row) {
    return check_rows("nathanson", z, params, n, max_row, z.reciprocal(),
                      params.swapped(), Rational(1));
}

bool sigma_conjugation_check(const Rational& x, std::int64_t k) {
    if (!x.is_positive()) {
        throw std::domain_error("sigma conjugation requires x > 0");
    }
    const UVParams kk(k, k);
    const Rational inv = x.reciprocal();
    bool left_to_right =
        apply_left(inv, kk).reciprocal() == apply_right(x, kk);
    bool right_to_left =
        apply_right(inv, kk).reciprocal() == apply_left(x, kk);
    return left_to_right && right_to_left;
}

}  // namespace cwf
