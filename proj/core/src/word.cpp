#include <cwf/word.hpp>

#include <stdexcept>

namespace cwf {

PathWord PathWord::from_letters(const std::vector<Move>& moves) {
    PathWord word;
    for (Move m : moves) {
        word.append(m);
    }
    return word;
}

PathWord PathWord::parse(std::string_view text) {
    PathWord word;
    for (char ch : text) {
        if (ch == 'L' || ch == 'l') {
            word.append(Move::left);
        } else if (ch == 'R' || ch == 'r') {
            word.append(Move::right);
        } else {
            throw std::invalid_argument(
                std::string("malformed path word: unexpected '") + ch + "'");
        }
    }
    return word;
}

void PathWord::append(Move m, const BigInt& count) {
    if (count < 0) {
        throw std::domain_error("negative run length in path word");
    }
    if (count == 0) {
        return;
    }
    if (!runs_.empty() && runs_.back().first == m) {
        runs_.back().second += count;
    } else {
        runs_.emplace_back(m, count);
    }
}

BigInt PathWord::depth() const {
    BigInt total = 0;
    for (const auto& [m, count] : runs_) {
        total += count;
    }
    return total;
}

std::vector<Move> PathWord::letters() const {
    std::vector<Move> out;
    for (const auto& [m, count] : runs_) {
        for (BigInt k = 0; k < count; ++k) {
            out.push_back(m);
        }
    }
    return out;
}

std::string PathWord::letters_string() const {
    std::string out;
    for (const auto& [m, count] : runs_) {
        for (BigInt k = 0; k < count; ++k) {
            out.push_back(move_letter(m));
        }
    }
    return out;
}

std::string PathWord::operator_string() const {
    if (runs_.empty()) {
        return "e";
    }
    std::string out;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out.push_back(move_letter(it->first));
        if (it->second != 1) {
            out += "^" + it->second.str();
        }
    }
    return out;
}

PathWord PathWord::swapped_letters() const {
    PathWord out;
    for (const auto& [m, count] : runs_) {
        out.append(opposite(m), count);
    }
    return out;
}

Mat2 word_to_matrix(const PathWord& word, const UVParams& params) {
    // The last move acts first, so multiply the runs out in reverse.
    // Generator powers have closed forms: L_u^k = [[1,0],[ku,1]] and
    // R_v^k = [[1,kv],[0,1]].
    Mat2 m;
    const auto& runs = word.runs();
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        const auto& [move, count] = *it;
        if (move == Move::left) {
            m = m * Mat2{1, 0, count * params.u, 1};
        } else {
            m = m * Mat2{1, count * params.v, 0, 1};
        }
    }
    return m;
}

}  // namespace cwf
