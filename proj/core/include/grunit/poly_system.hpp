#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "grunit/catalog.hpp"
#include "grunit/group_ring.hpp"
#include "grunit/rings.hpp"

namespace grunit {

inline constexpr std::uint64_t default_modular_prime = 1000000007;

// u_i and v_j are 1-based; w is the localization inverse.
struct Variable {
    enum class Kind { u, v, w };
    Kind kind = Kind::u;
    int index = 0;

    static Variable u(int i) { return {Kind::u, i}; }
    static Variable v(int j) { return {Kind::v, j}; }
    static Variable w() { return {Kind::w, 0}; }

    std::string name() const;
    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;
};

// Sorted multiset of variables.
using Monomial = std::vector<Variable>;

// Higher degree first, then lexicographic on the sorted variable lists.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianInt, MonomialOrder>;

    void add_term(const GaussianInt& c, Monomial vars);
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_integral() const;
    // Number of terms of the given degree.
    std::size_t count_degree(std::size_t degree) const;
    std::optional<GaussianInt> coeff(const Monomial& m) const;

    // Text form like "u1*v1+u2*v2-1"; throws for non-integral coefficients.
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend bool operator<(const Polynomial& a, const Polynomial& b);

private:
    TermMap terms_;
};

// Each variable maps to a linear form c * var, or to a constant c when var is empty.
struct LinearImage {
    GaussianInt coeff{1};
    std::optional<Variable> var;
};

Polynomial substitute_linear(const Polynomial& p, const std::map<Variable, LinearImage>& images);

struct Equation {
    enum class Kind { product, normalization, localization };
    Kind kind = Kind::product;
    Polynomial poly;
    std::optional<GroupElement> label;  // the product element for product equations
    std::string label_word;

    friend bool operator==(const Equation&, const Equation&) = default;
};

struct BilinearSystem {
    SupportPair support;
    std::vector<Variable> vars;
    std::vector<Equation> equations;
    bool normalized = false;
    std::optional<std::pair<int, int>> localized;
    bool character_reduced = false;

    int m() const { return static_cast<int>(support.g_list.size()); }
    int n() const { return static_cast<int>(support.h_list.size()); }
    bool is_integral() const;
    const Equation* equation_for(const GroupElement& label) const;
};

// One equation per distinct product g_i h_j, identity first then canonical element order:
// sum over g_i h_j = w of u_i v_j = [w = 1].
BilinearSystem generate_bilinear_system(const SupportPair& sp);
// Appends sum u_i = 1 and sum v_j = 1. Throws std::logic_error if already normalized or localized.
BilinearSystem add_normalization(const BilinearSystem& sys);
// Sets u_i = 1, replaces the normalization equations, adds w with u_j w - 1.
BilinearSystem localize(const BilinearSystem& sys, int i, int j);

using VariablePermutation = std::map<Variable, Variable>;

BilinearSystem permute_variables(const BilinearSystem& sys, const VariablePermutation& perm);
// True iff the permuted equations form the same set.
bool is_invariant_under(const BilinearSystem& sys, const VariablePermutation& perm);
VariablePermutation uv_swap(int size);
// Fixes u1, v1; swaps u_{2k} <-> u_{2k+1} and v_{2k} <-> v_{2k+1}.
VariablePermutation pairwise_index_swap(int size);

struct SwapSymmetryReport {
    bool uv_swap = false;
    bool pairwise_swap = false;
    bool all() const { return uv_swap && pairwise_swap; }
};

SwapSymmetryReport check_swap_symmetries(const BilinearSystem& sys);

// Every product equation not labeled by the identity has an even number of monomials.
bool check_parity(const BilinearSystem& sys);

struct ReductionReport {
    std::vector<int> phi0_fixpoints;           // 1-based indices g_i with phi0(g_i) = g_i
    std::vector<int> free_u;                   // surviving u indices
    std::vector<int> pinned_u;                 // forced to zero by an inconsistent constraint
    std::map<Variable, LinearImage> images;    // every u_i and v_j in terms of free u
};

struct ReducedSystem {
    BilinearSystem system;
    ReductionReport report;
};

// Imposes u_{phi0(g)} = chi0(g) u_g and v_{phi1(g)^-1} = chi1(g) u_g and eliminates
// dependent variables. Throws std::invalid_argument when phi0 does not permute the
// g-support or g -> phi1(g)^-1 does not map it onto the h-support.
ReducedSystem reduce_by_characters(const BilinearSystem& sys, const GeneratorMap& phi0, const GeneratorMap& phi1,
                                   const GroupCharacter<GaussianInt>& chi0, const GroupCharacter<GaussianInt>& chi1);

struct CharacterPair {
    int index = 0;  // ((e0a * 4 + e0b) * 4 + e1a) * 4 + e1b with values iota^e
    GroupCharacter<GaussianInt> chi0;
    GroupCharacter<GaussianInt> chi1;
    bool relators_ok = false;
    // g -> chi1(g) phi1(g)^-1 squares to the identity.
    bool anti_involution = false;
};

// All 4^4 assignments of (chi0(a), chi0(b), chi1(a), chi1(b)) in {1, iota, -1, -iota}.
std::vector<CharacterPair> enumerate_character_pairs();
int character_pair_index(int e0a, int e0b, int e1a, int e1b);
// Index of chi0 = (-iota, -iota), chi1 = (iota, -1).
int remark_character_pair_index();

class IncompleteAssignmentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluates every equation. iota_image is required only for non-integral coefficients.
template <CoefficientRing K>
std::vector<K> substitute(const BilinearSystem& sys, const std::map<Variable, K>& assignment, const K& unit,
                          const std::optional<std::type_identity_t<K>>& iota_image = std::nullopt) {
    for (const auto& v : sys.vars)
        if (!assignment.contains(v)) throw IncompleteAssignmentError("assignment misses variable " + v.name());
    std::vector<K> residuals;
    residuals.reserve(sys.equations.size());
    for (const auto& eq : sys.equations) {
        K acc = unit.scalar(0);
        for (const auto& [mono, c] : eq.poly.terms()) {
            K term = unit.scalar(c.re());
            if (c.im() != 0) {
                if (!iota_image) throw std::invalid_argument("non-integral coefficient needs an image of iota");
                term = map_gaussian(c, *iota_image);
            }
            for (const auto& v : mono) {
                auto it = assignment.find(v);
                if (it == assignment.end()) throw IncompleteAssignmentError("assignment misses variable " + v.name());
                term = term * it->second;
            }
            acc = acc + term;
        }
        residuals.push_back(acc);
    }
    return residuals;
}

class ExportFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ExportFormat { json, msolve, singular };

// characteristic is 0 or a prime. msolve and Singular need integral coefficients.
std::string export_system(const BilinearSystem& sys, ExportFormat format, std::uint64_t characteristic = 0);

}  // namespace grunit
