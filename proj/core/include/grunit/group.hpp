#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grunit {

// An element of a group given by a faithful integer matrix representation.
// The full matrix is the canonical key: equality, ordering and hashing are
// entrywise, and the ordering is lexicographic on row-major entries.
class GroupElement {
public:
    static constexpr int max_dim = 4;

    GroupElement() = default;

    static GroupElement identity(int dim);
    static GroupElement from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int dim() const noexcept { return dim_; }
    std::int64_t at(int row, int col) const noexcept { return entries_[static_cast<std::size_t>(row * dim_ + col)]; }
    std::vector<std::vector<std::int64_t>> rows() const;

    bool is_identity() const noexcept;
    // Last row is (0, ..., 0, 1).
    bool is_affine() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    friend GroupElement elem_mul(const GroupElement&, const GroupElement&);
    friend GroupElement elem_inv(const GroupElement&);

    int dim_ = 0;
    std::array<std::int64_t, max_dim * max_dim> entries_{};
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

// Throws std::invalid_argument on dimension mismatch, std::overflow_error on overflow.
GroupElement elem_mul(const GroupElement& g, const GroupElement& h);
// Throws std::domain_error when the matrix is not unimodular.
GroupElement elem_inv(const GroupElement& g);
GroupElement elem_pow(const GroupElement& g, std::int64_t e);
std::int64_t determinant(const GroupElement& g);

struct Factor {
    std::string name;
    std::int64_t exp = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

// A product of generator powers, evaluated left to right. The empty word is the identity.
struct Word {
    std::vector<Factor> factors;

    bool empty() const noexcept { return factors.empty(); }
    Word inverse() const;
    // Adjacent factors with the same name are merged; zero exponents vanish.
    Word normalized() const;
    std::string to_string() const;

    friend Word operator*(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;
};

class WordSyntaxError : public std::invalid_argument {
public:
    WordSyntaxError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownGeneratorError : public std::invalid_argument {
public:
    explicit UnknownGeneratorError(const std::string& name);
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Signals that a matrix does not lie in the group it was decomposed against.
class NotInGroupError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class AffineGroup {
public:
    // Derived names expand to words in the generators and are valid parse tokens.
    AffineGroup(std::string name, int dim, std::vector<std::pair<std::string, GroupElement>> generators,
                std::vector<std::pair<std::string, Word>> derived, std::vector<Word> relators);

    const std::string& name() const noexcept { return name_; }
    int dim() const noexcept { return dim_; }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
    const GroupElement& generator(const std::string& name) const;
    const std::vector<std::pair<std::string, Word>>& derived() const noexcept { return derived_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }

    bool is_generator(std::string_view name) const;
    bool is_known_name(std::string_view name) const;

    // Replaces derived names by their defining words.
    Word expand_derived(const Word& w) const;
    GroupElement eval(const Word& w) const;
    GroupElement identity() const { return GroupElement::identity(dim_); }

private:
    std::string name_;
    int dim_;
    std::vector<std::string> generator_names_;
    std::map<std::string, GroupElement, std::less<>> generators_;
    std::vector<std::pair<std::string, Word>> derived_;
    std::vector<Word> relators_;
};

using GroupHandle = std::shared_ptr<const AffineGroup>;

// P = <a, b | b^-1 a^2 b a^2, a^-1 b^2 a b^2> acting on R^3 by affine isometries,
// with derived names x = a^2, y = b^2, z = (ab)^2.
AffineGroup make_group_P();
// S = <x, y | (xy)^2 (xy^-1)^2, (yx)^2 (yx^-1)^2> via its 3x3 integer representation.
AffineGroup make_group_S();
const GroupHandle& shared_group_P();
const GroupHandle& shared_group_S();
// "P" or "S"; throws std::invalid_argument otherwise.
const GroupHandle& group_by_name(std::string_view name);

// Grammar: word := "1" | term ("*" term)*; term := name ("^" signed-integer)?
Word parse_word(std::string_view text, const AffineGroup& group);
GroupElement eval_word(const Word& w, const AffineGroup& group);

bool check_relators(const AffineGroup& group);

using GeneratorMap = std::map<std::string, Word, std::less<>>;

// Substitutes name^e by map(name)^e. Throws std::invalid_argument on an unmapped name.
Word apply_generator_map(const GeneratorMap& map, const Word& w);

enum class PCoset { one, a, b, ab };

struct PDecomposition {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;
    PCoset coset = PCoset::one;

    friend bool operator==(const PDecomposition&, const PDecomposition&) = default;
    friend auto operator<=>(const PDecomposition&, const PDecomposition&) = default;
};

std::string_view coset_name(PCoset c);

// g = x^i y^j z^k * coset. Throws NotInGroupError for matrices outside P.
PDecomposition decompose_P(const GroupElement& g);
GroupElement reconstruct_P(const PDecomposition& d);
// The normal-form word x^i*y^j*z^k*<coset> for g.
Word normal_word_P(const PDecomposition& d);
// Image in Z/4 + Z/4 under a -> (1,0), b -> (0,1).
std::pair<int, int> abelianize_P(const GroupElement& g);

}  // namespace grunit
