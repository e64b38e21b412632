#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "grunit/group.hpp"
#include "grunit/rings.hpp"

namespace grunit {

class MissingWitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sum of lambda_g * g with finitely many nonzero lambda_g. Zero coefficients are
// never stored. Witnesses are optional words evaluating to their keys.
template <CoefficientRing K>
class GroupRingElem {
public:
    using TermMap = std::map<GroupElement, K>;

    explicit GroupRingElem(GroupHandle group) : group_(std::move(group)) {
        if (!group_) throw std::invalid_argument("group ring element needs a group");
    }

    static GroupRingElem one(GroupHandle group, const K& unit) {
        GroupRingElem out(std::move(group));
        out.add_term(out.group_->identity(), unit.scalar(1), Word{});
        return out;
    }

    // lambda * g; the witness is checked against g.
    static GroupRingElem basis(GroupHandle group, const GroupElement& g, const K& coeff,
                               std::optional<Word> witness = std::nullopt) {
        GroupRingElem out(std::move(group));
        if (witness && !(out.group_->eval(*witness) == g))
            throw std::invalid_argument("witness " + witness->to_string() + " does not evaluate to its key");
        out.add_term(g, coeff, std::move(witness));
        return out;
    }

    static GroupRingElem from_word(GroupHandle group, const Word& w, const K& coeff) {
        const GroupElement g = group->eval(w);
        return basis(std::move(group), g, coeff, w);
    }

    // Accumulates coeff at g. An existing witness is kept.
    void add_term(const GroupElement& g, const K& coeff, std::optional<Word> witness = std::nullopt) {
        if (g.dim() != group_->dim()) throw std::invalid_argument("element dimension does not match group");
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (coeff.is_zero()) return;
            terms_.emplace(g, coeff);
            if (witness) witnesses_.emplace(g, std::move(*witness));
            return;
        }
        it->second = it->second + coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
            witnesses_.erase(g);
        } else if (witness && !witnesses_.contains(g)) {
            witnesses_.emplace(g, std::move(*witness));
        }
    }

    const GroupHandle& group() const noexcept { return group_; }
    const TermMap& terms() const noexcept { return terms_; }
    const std::map<GroupElement, Word>& witnesses() const noexcept { return witnesses_; }

    std::size_t support_size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_identity() && terms_.begin()->second.is_one();
    }

    std::optional<K> coeff(const GroupElement& g) const {
        auto it = terms_.find(g);
        if (it == terms_.end()) return std::nullopt;
        return it->second;
    }

    const Word* witness(const GroupElement& g) const {
        auto it = witnesses_.find(g);
        return it == witnesses_.end() ? nullptr : &it->second;
    }

    // The word used for display and serialization: the P normal form, else the witness.
    Word display_word(const GroupElement& g) const {
        if (group_->name() == "P") return normal_word_P(decompose_P(g));
        if (const Word* w = witness(g)) return *w;
        if (g.is_identity()) return {};
        throw MissingWitnessError("no word witness for " + g.to_string());
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string word;
            try {
                word = display_word(g).to_string();
            } catch (const MissingWitnessError&) {
                word = g.to_string();
            }
            if (c.is_one())
                out += word;
            else if (word == "1")
                out += "(" + c.to_string() + ")";
            else
                out += "(" + c.to_string() + ")*" + word;
        }
        return out;
    }

    friend bool operator==(const GroupRingElem& lhs, const GroupRingElem& rhs) {
        return lhs.group_->name() == rhs.group_->name() && lhs.terms_ == rhs.terms_;
    }

private:
    GroupHandle group_;
    TermMap terms_;
    std::map<GroupElement, Word> witnesses_;
};

namespace detail {

template <CoefficientRing K>
void require_same_group(const GroupRingElem<K>& a, const GroupRingElem<K>& b) {
    if (a.group()->name() != b.group()->name()) throw std::invalid_argument("group ring elements over different groups");
}

}  // namespace detail

template <CoefficientRing K>
GroupRingElem<K> gr_add(const GroupRingElem<K>& a, const GroupRingElem<K>& b) {
    detail::require_same_group(a, b);
    GroupRingElem<K> out = a;
    for (const auto& [g, c] : b.terms()) {
        const Word* w = b.witness(g);
        out.add_term(g, c, w ? std::optional<Word>(*w) : std::nullopt);
    }
    return out;
}

template <CoefficientRing K>
GroupRingElem<K> gr_scale(const K& c, const GroupRingElem<K>& a) {
    GroupRingElem<K> out(a.group());
    for (const auto& [g, lambda] : a.terms()) {
        const Word* w = a.witness(g);
        out.add_term(g, c * lambda, w ? std::optional<Word>(*w) : std::nullopt);
    }
    return out;
}

template <CoefficientRing K>
GroupRingElem<K> gr_neg(const GroupRingElem<K>& a) {
    GroupRingElem<K> out(a.group());
    for (const auto& [g, lambda] : a.terms()) {
        const Word* w = a.witness(g);
        out.add_term(g, -lambda, w ? std::optional<Word>(*w) : std::nullopt);
    }
    return out;
}

template <CoefficientRing K>
GroupRingElem<K> gr_mul(const GroupRingElem<K>& a, const GroupRingElem<K>& b) {
    detail::require_same_group(a, b);
    GroupRingElem<K> out(a.group());
    for (const auto& [g, lg] : a.terms()) {
        const Word* wg = a.witness(g);
        for (const auto& [h, lh] : b.terms()) {
            const Word* wh = b.witness(h);
            std::optional<Word> w;
            if (wg && wh) w = *wg * *wh;
            out.add_term(elem_mul(g, h), lg * lh, std::move(w));
        }
    }
    return out;
}

// Linear extension of g -> g^-1.
template <CoefficientRing K>
GroupRingElem<K> gr_star(const GroupRingElem<K>& a) {
    GroupRingElem<K> out(a.group());
    for (const auto& [g, lambda] : a.terms()) {
        const Word* w = a.witness(g);
        out.add_term(elem_inv(g), lambda, w ? std::optional<Word>(w->inverse()) : std::nullopt);
    }
    return out;
}

// Applies f to every coefficient, moving into another ring.
template <CoefficientRing K, class F>
auto gr_map_coeffs(const GroupRingElem<K>& a, F&& f) {
    using L = std::decay_t<decltype(f(std::declval<const K&>()))>;
    GroupRingElem<L> out(a.group());
    for (const auto& [g, lambda] : a.terms()) {
        const Word* w = a.witness(g);
        out.add_term(g, f(lambda), w ? std::optional<Word>(*w) : std::nullopt);
    }
    return out;
}

template <CoefficientRing K>
bool gr_verify_unit(const GroupRingElem<K>& a, const GroupRingElem<K>& b) {
    return gr_mul(a, b).is_one() && gr_mul(b, a).is_one();
}

// Support of size >= 2 certifies non-triviality; size 1 is only "possibly trivial".
template <CoefficientRing K>
bool gr_is_nontrivial(const GroupRingElem<K>& a) {
    return a.support_size() >= 2;
}

// A word for g: the stored witness, or the P normal form.
template <CoefficientRing K>
Word witness_for(const GroupRingElem<K>& a, const GroupElement& g) {
    if (const Word* w = a.witness(g)) return *w;
    if (a.group()->name() == "P") return normal_word_P(decompose_P(g));
    if (g.is_identity()) return {};
    throw MissingWitnessError("term " + g.to_string() + " has no word witness");
}

// Homomorphism from the group into the units of K, given on generators.
template <CoefficientRing K>
class GroupCharacter {
public:
    GroupCharacter() = default;
    explicit GroupCharacter(std::map<std::string, K, std::less<>> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("character needs at least one generator value");
    }

    const std::map<std::string, K, std::less<>>& values() const noexcept { return values_; }
    const K& at(const std::string& gen) const {
        auto it = values_.find(gen);
        if (it == values_.end()) throw std::invalid_argument("character undefined on '" + gen + "'");
        return it->second;
    }

    // Multiplicative extension along a word (derived names expanded first).
    K eval(const Word& w, const AffineGroup& group) const {
        K acc = values_.begin()->second.scalar(1);
        for (const auto& f : group.expand_derived(w).factors) acc = acc * ring_pow(at(f.name), f.exp);
        return acc;
    }

    // Values are units and all relators map to 1.
    bool is_valid(const AffineGroup& group) const {
        for (const auto& name : group.generator_names()) {
            auto it = values_.find(name);
            if (it == values_.end()) return false;
            try {
                if (!(it->second * it->second.inverse()).is_one()) return false;
            } catch (const std::domain_error&) {
                return false;
            }
        }
        for (const auto& r : group.relators())
            if (!eval(r, group).is_one()) return false;
        return true;
    }

private:
    std::map<std::string, K, std::less<>> values_;
};

template <CoefficientRing K>
GroupCharacter<K> trivial_character(const AffineGroup& group, const K& unit) {
    std::map<std::string, K, std::less<>> values;
    for (const auto& name : group.generator_names()) values.emplace(name, unit.scalar(1));
    return GroupCharacter<K>(std::move(values));
}

// Evaluates a character of P through the abelianization; valid since every
// character of P kills its commutators and satisfies chi(a)^4 = chi(b)^4 = 1.
template <CoefficientRing K>
K character_via_abelianization_P(const GroupCharacter<K>& chi, const GroupElement& g) {
    const auto [u, v] = abelianize_P(g);
    return ring_pow(chi.at("a"), u) * ring_pow(chi.at("b"), v);
}

enum class CoeffAuto { identity, conjugate };

inline CycloBivariate conjugate(const CycloBivariate& x) { return conj_R(x); }
inline CyclotomicZeta8 conjugate(const CyclotomicZeta8& x) { return conj_zeta8(x); }
inline GaussianInt conjugate(const GaussianInt& x) { return conj_gaussian(x); }

template <CoefficientRing K>
K apply_coeff_auto(CoeffAuto tag, const K& x) {
    if (tag == CoeffAuto::identity) return x;
    if constexpr (requires { conjugate(x); })
        return conjugate(x);
    else
        throw std::invalid_argument("coefficient ring has no conjugation automorphism");
}

// theta(sum lambda_g g) = sum chi(g) sigma(lambda_g) phi(g).
template <CoefficientRing K>
struct TwistedAutomorphism {
    GeneratorMap group_auto;
    GeneratorMap group_auto_inverse;
    GroupCharacter<K> character;
    CoeffAuto coeff_auto = CoeffAuto::identity;

    Word map_word(const Word& w, const AffineGroup& group) const {
        return apply_generator_map(group_auto, group.expand_derived(w));
    }

    // Relator images are trivial, the declared inverse undoes the map on every
    // generator, and the character is valid.
    bool is_valid(const AffineGroup& group) const {
        for (const auto& r : group.relators())
            if (!group.eval(map_word(r, group)).is_identity()) return false;
        for (const auto& name : group.generator_names()) {
            const Word gen{{{name, 1}}};
            if (!(group.eval(apply_generator_map(group_auto_inverse, map_word(gen, group))) == group.generator(name)))
                return false;
            if (!(group.eval(map_word(apply_generator_map(group_auto_inverse, gen), group)) == group.generator(name)))
                return false;
        }
        return character.is_valid(group);
    }
};

template <CoefficientRing K>
TwistedAutomorphism<K> group_automorphism_only(const AffineGroup& group, GeneratorMap forward, GeneratorMap inverse,
                                               const K& unit) {
    return {std::move(forward), std::move(inverse), trivial_character(group, unit), CoeffAuto::identity};
}

template <CoefficientRing K>
GroupRingElem<K> gr_apply_twisted(const TwistedAutomorphism<K>& theta, const GroupRingElem<K>& a) {
    const AffineGroup& group = *a.group();
    GroupRingElem<K> out(a.group());
    for (const auto& [g, lambda] : a.terms()) {
        const Word w = witness_for(a, g);
        Word image = theta.map_word(w, group);
        const GroupElement g_image = group.eval(image);
        const K c = theta.character.eval(w, group) * apply_coeff_auto(theta.coeff_auto, lambda);
        out.add_term(g_image, c, std::move(image));
    }
    return out;
}

// Image in K[Z/4 + Z/4] under the abelianization of P; zero entries omitted.
template <CoefficientRing K>
std::map<std::pair<int, int>, K> gr_abelianize_P(const GroupRingElem<K>& a) {
    if (a.group()->name() != "P") throw std::invalid_argument("abelianization is implemented for P only");
    std::map<std::pair<int, int>, K> out;
    for (const auto& [g, lambda] : a.terms()) {
        const auto key = abelianize_P(g);
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, lambda);
        } else {
            it->second = it->second + lambda;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// A homomorphism into K^x / {+-1}, stored by representatives on generators.
template <CoefficientRing K>
struct SignedCharacter {
    std::map<std::string, K, std::less<>> values;

    K representative(const Word& w, const AffineGroup& group) const {
        return GroupCharacter<K>(values).eval(w, group);
    }
    bool contains(const K& lambda, const Word& w, const AffineGroup& group) const {
        const K m = representative(w, group);
        return lambda == m || lambda == -m;
    }
};

// Every nonzero lambda_g lies in rho(g) = {+-m(g)}.
template <CoefficientRing K>
bool gr_check_rho_grading(const GroupRingElem<K>& a, const SignedCharacter<K>& rho) {
    for (const auto& [g, lambda] : a.terms())
        if (!rho.contains(lambda, witness_for(a, g), *a.group())) return false;
    return true;
}

}  // namespace grunit
