#include "grunit/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "grunit/checked.hpp"

namespace grunit {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::int64_t det_rows(const Rows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return checked_sub(checked_mul(m[0][0], m[1][1]), checked_mul(m[0][1], m[1][0]));
    std::int64_t det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Rows minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        std::int64_t term = checked_mul(m[0][c], det_rows(minor));
        det = (c % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
    }
    return det;
}

Rows minor_of(const Rows& m, std::size_t skip_r, std::size_t skip_c) {
    Rows out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == skip_r) continue;
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < m.size(); ++c)
            if (c != skip_c) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

GroupElement GroupElement::identity(int dim) {
    if (dim < 1 || dim > max_dim) throw std::invalid_argument("matrix dimension out of range");
    GroupElement g;
    g.dim_ = dim;
    for (int i = 0; i < dim; ++i) g.entries_[static_cast<std::size_t>(i * dim + i)] = 1;
    return g;
}

GroupElement GroupElement::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const auto n = static_cast<int>(rows.size());
    if (n < 1 || n > max_dim) throw std::invalid_argument("matrix dimension out of range");
    GroupElement g;
    g.dim_ = n;
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n)
            throw std::invalid_argument("matrix is not square");
        for (int c = 0; c < n; ++c)
            g.entries_[static_cast<std::size_t>(r * n + c)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return g;
}

std::vector<std::vector<std::int64_t>> GroupElement::rows() const {
    Rows out(static_cast<std::size_t>(dim_), std::vector<std::int64_t>(static_cast<std::size_t>(dim_)));
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

bool GroupElement::is_identity() const noexcept {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return dim_ > 0;
}

bool GroupElement::is_affine() const noexcept {
    for (int c = 0; c < dim_; ++c)
        if (at(dim_ - 1, c) != (c == dim_ - 1 ? 1 : 0)) return false;
    return dim_ > 0;
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < dim_; ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < dim_; ++c) os << (c ? "," : "") << at(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.dim());
    for (int r = 0; r < g.dim(); ++r)
        for (int c = 0; c < g.dim(); ++c)
            h = h * 1000003u ^ static_cast<std::size_t>(g.at(r, c) + 0x9e3779b9);
    return h;
}

GroupElement elem_mul(const GroupElement& g, const GroupElement& h) {
    if (g.dim_ != h.dim_) throw std::invalid_argument("dimension mismatch in group element product");
    const int n = g.dim_;
    GroupElement out;
    out.dim_ = n;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::int64_t acc = 0;
            for (int k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(g.at(r, k), h.at(k, c)));
            out.entries_[static_cast<std::size_t>(r * n + c)] = acc;
        }
    return out;
}

std::int64_t determinant(const GroupElement& g) { return det_rows(g.rows()); }

GroupElement elem_inv(const GroupElement& g) {
    const Rows m = g.rows();
    const std::int64_t det = det_rows(m);
    if (det != 1 && det != -1) throw std::domain_error("matrix is not unimodular");
    const std::size_t n = m.size();
    Rows inv(n, std::vector<std::int64_t>(n));
    if (n == 1) {
        inv[0][0] = det;
    } else {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::int64_t cof = det_rows(minor_of(m, r, c));
                if ((r + c) % 2) cof = checked_neg(cof);
                inv[c][r] = checked_mul(cof, det);
            }
    }
    return GroupElement::from_rows(inv);
}

GroupElement elem_pow(const GroupElement& g, std::int64_t e) {
    GroupElement base = e < 0 ? elem_inv(g) : g;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    GroupElement acc = GroupElement::identity(g.dim());
    while (n) {
        if (n & 1u) acc = elem_mul(acc, base);
        n >>= 1;
        if (n) base = elem_mul(base, base);
    }
    return acc;
}

Word Word::inverse() const {
    Word out;
    out.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.factors.push_back({it->name, -it->exp});
    return out;
}

Word Word::normalized() const {
    Word out;
    for (const auto& f : factors) {
        if (!out.factors.empty() && out.factors.back().name == f.name) {
            out.factors.back().exp += f.exp;
            if (out.factors.back().exp == 0) out.factors.pop_back();
        } else if (f.exp != 0) {
            out.factors.push_back(f);
        }
    }
    return out;
}

std::string Word::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += '*';
        out += factors[i].name;
        if (factors[i].exp != 1) out += '^' + std::to_string(factors[i].exp);
    }
    return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
    Word out = lhs;
    out.factors.insert(out.factors.end(), rhs.factors.begin(), rhs.factors.end());
    return out.normalized();
}

WordSyntaxError::WordSyntaxError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

UnknownGeneratorError::UnknownGeneratorError(const std::string& name)
    : std::invalid_argument("unknown generator '" + name + "'"), name_(name) {}

AffineGroup::AffineGroup(std::string name, int dim, std::vector<std::pair<std::string, GroupElement>> generators,
                         std::vector<std::pair<std::string, Word>> derived, std::vector<Word> relators)
    : name_(std::move(name)), dim_(dim), derived_(std::move(derived)), relators_(std::move(relators)) {
    for (auto& [gen_name, g] : generators) {
        if (g.dim() != dim_) throw std::invalid_argument("generator " + gen_name + " has wrong dimension");
        const auto det = determinant(g);
        if (det != 1 && det != -1) throw std::invalid_argument("generator " + gen_name + " is not unimodular");
        generator_names_.push_back(gen_name);
        generators_.emplace(gen_name, g);
    }
    for (const auto& [dname, w] : derived_) {
        if (generators_.contains(dname)) throw std::invalid_argument("derived name shadows generator " + dname);
        for (const auto& f : w.factors)
            if (!generators_.contains(f.name)) throw UnknownGeneratorError(f.name);
    }
}

const GroupElement& AffineGroup::generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end()) throw UnknownGeneratorError(name);
    return it->second;
}

bool AffineGroup::is_generator(std::string_view name) const { return generators_.find(name) != generators_.end(); }

bool AffineGroup::is_known_name(std::string_view name) const {
    if (is_generator(name)) return true;
    return std::any_of(derived_.begin(), derived_.end(), [&](const auto& d) { return d.first == name; });
}

Word AffineGroup::expand_derived(const Word& w) const {
    Word out;
    for (const auto& f : w.factors) {
        if (is_generator(f.name)) {
            out.factors.push_back(f);
            continue;
        }
        auto it = std::find_if(derived_.begin(), derived_.end(), [&](const auto& d) { return d.first == f.name; });
        if (it == derived_.end()) throw UnknownGeneratorError(f.name);
        const Word& base = f.exp < 0 ? it->second.inverse() : it->second;
        for (std::int64_t k = 0; k < (f.exp < 0 ? -f.exp : f.exp); ++k)
            out.factors.insert(out.factors.end(), base.factors.begin(), base.factors.end());
    }
    return out.normalized();
}

GroupElement AffineGroup::eval(const Word& w) const {
    GroupElement acc = identity();
    for (const auto& f : expand_derived(w).factors) acc = elem_mul(acc, elem_pow(generator(f.name), f.exp));
    return acc;
}

AffineGroup make_group_P() {
    auto a = GroupElement::from_rows({{1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, 1}});
    auto b = GroupElement::from_rows({{-1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, -1, 1}, {0, 0, 0, 1}});
    std::vector<std::pair<std::string, Word>> derived = {
        {"x", Word{{{"a", 2}}}},
        {"y", Word{{{"b", 2}}}},
        {"z", Word{{{"a", 1}, {"b", 1}, {"a", 1}, {"b", 1}}}},
    };
    std::vector<Word> relators = {
        Word{{{"b", -1}, {"a", 2}, {"b", 1}, {"a", 2}}},
        Word{{{"a", -1}, {"b", 2}, {"a", 1}, {"b", 2}}},
    };
    return AffineGroup("P", 4, {{"a", a}, {"b", b}}, std::move(derived), std::move(relators));
}

AffineGroup make_group_S() {
    auto x = GroupElement::from_rows({{-1, 1, 0}, {0, -1, 0}, {0, 0, 1}});
    // Entry (0,1) of y is 0: with 1 there, (xy)^2 = 1 and the relators fail.
    auto y = GroupElement::from_rows({{1, 0, 0}, {0, -1, 1}, {0, 0, -1}});
    std::vector<Word> relators = {
        Word{{{"x", 1}, {"y", 1}, {"x", 1}, {"y", 1}, {"x", 1}, {"y", -1}, {"x", 1}, {"y", -1}}},
        Word{{{"y", 1}, {"x", 1}, {"y", 1}, {"x", 1}, {"y", 1}, {"x", -1}, {"y", 1}, {"x", -1}}},
    };
    return AffineGroup("S", 3, {{"x", x}, {"y", y}}, {}, std::move(relators));
}

const GroupHandle& shared_group_P() {
    static const GroupHandle p = std::make_shared<const AffineGroup>(make_group_P());
    return p;
}

const GroupHandle& shared_group_S() {
    static const GroupHandle s = std::make_shared<const AffineGroup>(make_group_S());
    return s;
}

const GroupHandle& group_by_name(std::string_view name) {
    if (name == "P") return shared_group_P();
    if (name == "S") return shared_group_S();
    throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

Word parse_word(std::string_view text, const AffineGroup& group) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw WordSyntaxError("unexpected input after identity", pos);
        return {};
    }
    Word w;
    while (true) {
        skip_ws();
        if (pos >= text.size() || !is_name_start(text[pos])) throw WordSyntaxError("expected generator name", pos);
        const std::size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        if (!group.is_known_name(name)) throw UnknownGeneratorError(name);
        std::int64_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t num_start = pos;
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
            std::uint64_t value = 0;
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc() || end == text.data() + pos) throw WordSyntaxError("expected integer exponent", num_start);
            pos = static_cast<std::size_t>(end - text.data());
            if (value == 0) throw WordSyntaxError("zero exponent", num_start);
            if (value > static_cast<std::uint64_t>(INT32_MAX)) throw WordSyntaxError("exponent too large", num_start);
            exp = negative ? -static_cast<std::int64_t>(value) : static_cast<std::int64_t>(value);
        }
        w.factors.push_back({std::move(name), exp});
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw WordSyntaxError("expected '*'", pos);
        ++pos;
    }
    return w;
}

GroupElement eval_word(const Word& w, const AffineGroup& group) { return group.eval(w); }

bool check_relators(const AffineGroup& group) {
    return std::all_of(group.relators().begin(), group.relators().end(),
                       [&](const Word& r) { return group.eval(r).is_identity(); });
}

Word apply_generator_map(const GeneratorMap& map, const Word& w) {
    Word out;
    for (const auto& f : w.factors) {
        auto it = map.find(f.name);
        if (it == map.end()) throw std::invalid_argument("generator map does not cover '" + f.name + "'");
        const Word image = f.exp < 0 ? it->second.inverse() : it->second;
        for (std::int64_t k = 0; k < (f.exp < 0 ? -f.exp : f.exp); ++k)
            out.factors.insert(out.factors.end(), image.factors.begin(), image.factors.end());
    }
    return out.normalized();
}

std::string_view coset_name(PCoset c) {
    switch (c) {
        case PCoset::one: return "1";
        case PCoset::a: return "a";
        case PCoset::b: return "b";
        case PCoset::ab: return "ab";
    }
    return "?";
}

namespace {

const GroupElement& coset_rep(PCoset c) {
    static const std::array<GroupElement, 4> reps = [] {
        const auto& p = *shared_group_P();
        return std::array<GroupElement, 4>{p.identity(), p.generator("a"), p.generator("b"),
                                           elem_mul(p.generator("a"), p.generator("b"))};
    }();
    return reps[static_cast<std::size_t>(c)];
}

}  // namespace

PDecomposition decompose_P(const GroupElement& g) {
    if (g.dim() != 4 || !g.is_affine()) throw NotInGroupError("element is not a 4x4 affine matrix");
    for (PCoset c : {PCoset::one, PCoset::a, PCoset::b, PCoset::ab}) {
        const GroupElement& rep = coset_rep(c);
        bool same_linear = true;
        for (int r = 0; r < 3 && same_linear; ++r)
            for (int col = 0; col < 3; ++col)
                if (g.at(r, col) != rep.at(r, col)) {
                    same_linear = false;
                    break;
                }
        if (!same_linear) continue;
        // Translation of x^i y^j z^k is (2i, 2j, -2k); the coset rep is applied first.
        std::array<std::int64_t, 3> residual{};
        for (int r = 0; r < 3; ++r) residual[static_cast<std::size_t>(r)] = checked_sub(g.at(r, 3), rep.at(r, 3));
        for (auto v : residual)
            if (v % 2 != 0) throw NotInGroupError("translation has wrong parity for P");
        return {residual[0] / 2, residual[1] / 2, -residual[2] / 2, c};
    }
    throw NotInGroupError("linear part is not in the point group of P");
}

GroupElement reconstruct_P(const PDecomposition& d) {
    auto t = GroupElement::from_rows({{1, 0, 0, checked_mul(2, d.i)},
                                      {0, 1, 0, checked_mul(2, d.j)},
                                      {0, 0, 1, checked_mul(-2, d.k)},
                                      {0, 0, 0, 1}});
    return elem_mul(t, coset_rep(d.coset));
}

Word normal_word_P(const PDecomposition& d) {
    Word w;
    if (d.i) w.factors.push_back({"x", d.i});
    if (d.j) w.factors.push_back({"y", d.j});
    if (d.k) w.factors.push_back({"z", d.k});
    if (d.coset == PCoset::a || d.coset == PCoset::ab) w.factors.push_back({"a", 1});
    if (d.coset == PCoset::b || d.coset == PCoset::ab) w.factors.push_back({"b", 1});
    return w;
}

std::pair<int, int> abelianize_P(const GroupElement& g) {
    const PDecomposition d = decompose_P(g);
    auto mod4 = [](std::int64_t v) { return static_cast<int>(((v % 4) + 4) % 4); };
    const int ea = (d.coset == PCoset::a || d.coset == PCoset::ab) ? 1 : 0;
    const int eb = (d.coset == PCoset::b || d.coset == PCoset::ab) ? 1 : 0;
    return {mod4(2 * d.i + 2 * d.k + ea), mod4(2 * d.j + 2 * d.k + eb)};
}

}  // namespace grunit
