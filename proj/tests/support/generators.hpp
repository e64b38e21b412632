#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grunit/group_ring.hpp"
#include "grunit/rings.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random word text over the given names, length 0..max_len, exponents in [-3, 3] \ {0}.
inline std::string word_text(Rng& rng, const std::vector<std::string>& names, int max_len) {
    const int len = uniform(rng, 0, max_len);
    if (len == 0) return "1";
    std::string out;
    for (int k = 0; k < len; ++k) {
        int e = uniform(rng, -3, 2);
        if (e >= 0) ++e;
        if (k) out += '*';
        out += names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))];
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline grunit::CycloBivariate cyclo(Rng& rng, int bound = 5) {
    grunit::CycloBivariate x;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x.set_coeff(i, j, uniform(rng, -bound, bound));
    return x;
}

inline grunit::CyclotomicZeta8 zeta8(Rng& rng, int bound = 5) {
    grunit::CyclotomicZeta8 x;
    for (int k = 0; k < 4; ++k) x = x + grunit::CyclotomicZeta8::monomial(uniform(rng, -bound, bound), k);
    return x;
}

inline grunit::GaussianInt gaussian(Rng& rng, int bound = 9) {
    return grunit::GaussianInt(uniform(rng, -bound, bound), uniform(rng, -bound, bound));
}

inline grunit::PrimeField prime_field(Rng& rng, std::uint64_t p) {
    return grunit::PrimeField(p, std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(p) - 1)(rng));
}

inline grunit::QuadExtField quad(Rng& rng, const grunit::QuadExtField::Modulus& m) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(m.p) - 1);
    return grunit::QuadExtField(m, d(rng), d(rng));
}

// Random element of R[P] with up to max_terms terms on short words.
inline grunit::GroupRingElem<grunit::CycloBivariate> r_element(Rng& rng, int max_terms = 5) {
    const auto& group = grunit::shared_group_P();
    grunit::GroupRingElem<grunit::CycloBivariate> out(group);
    const int terms = uniform(rng, 1, max_terms);
    for (int k = 0; k < terms; ++k) {
        const auto w = grunit::parse_word(word_text(rng, {"a", "b"}, 4), *group);
        out.add_term(group->eval(w), cyclo(rng, 3), w);
    }
    return out;
}

// Distinct elements of P from short words.
inline std::vector<grunit::Word> distinct_words(Rng& rng, int count, int max_len = 3) {
    const auto& group = grunit::shared_group_P();
    std::vector<grunit::Word> out;
    std::vector<grunit::GroupElement> seen;
    while (static_cast<int>(out.size()) < count) {
        const auto w = grunit::parse_word(word_text(rng, {"a", "b"}, max_len), *group);
        const auto g = group->eval(w);
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        out.push_back(w);
    }
    return out;
}

}  // namespace gen
