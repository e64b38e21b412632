#include "grunit/poly_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace grunit {

std::string Variable::name() const {
    switch (kind) {
        case Kind::u: return "u" + std::to_string(index);
        case Kind::v: return "v" + std::to_string(index);
        case Kind::w: return "w";
    }
    return "?";
}

void Polynomial::add_term(const GaussianInt& c, Monomial vars) {
    if (c.is_zero()) return;
    std::sort(vars.begin(), vars.end());
    auto [it, inserted] = terms_.try_emplace(std::move(vars), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integral(); });
}

std::size_t Polynomial::count_degree(std::size_t degree) const {
    return static_cast<std::size_t>(
        std::count_if(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.size() == degree; }));
}

std::optional<GaussianInt> Polynomial::coeff(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!c.is_integral()) throw ExportFormatError("polynomial has non-integral coefficients");
        const std::int64_t v = c.re();
        if (v < 0)
            out += '-';
        else if (!first)
            out += '+';
        first = false;
        const std::int64_t mag = v < 0 ? -v : v;
        std::string vars;
        for (std::size_t k = 0; k < mono.size(); ++k) vars += (k ? "*" : "") + mono[k].name();
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += std::to_string(mag) + "*" + vars;
    }
    return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    auto key = [](const GaussianInt& c) { return std::make_pair(c.re(), c.im()); };
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [&](const auto& x, const auto& y) {
            if (x.first != y.first) return MonomialOrder{}(x.first, y.first);
            return key(x.second) < key(y.second);
        });
}

Polynomial substitute_linear(const Polynomial& p, const std::map<Variable, LinearImage>& images) {
    Polynomial out;
    for (const auto& [mono, c] : p.terms()) {
        GaussianInt coeff = c;
        Monomial vars;
        for (const auto& v : mono) {
            auto it = images.find(v);
            if (it == images.end()) {
                vars.push_back(v);
                continue;
            }
            coeff = coeff * it->second.coeff;
            if (it->second.var) vars.push_back(*it->second.var);
        }
        out.add_term(coeff, std::move(vars));
    }
    return out;
}

bool BilinearSystem::is_integral() const {
    return std::all_of(equations.begin(), equations.end(), [](const Equation& e) { return e.poly.is_integral(); });
}

const Equation* BilinearSystem::equation_for(const GroupElement& label) const {
    for (const auto& eq : equations)
        if (eq.label && *eq.label == label) return &eq;
    return nullptr;
}

BilinearSystem generate_bilinear_system(const SupportPair& sp) {
    if (sp.g_list.empty() || sp.h_list.empty()) throw std::invalid_argument("supports must be nonempty");
    const AffineGroup& group = *sp.group;
    std::map<GroupElement, std::vector<std::pair<int, int>>> products;
    std::map<GroupElement, std::string> words;
    for (std::size_t i = 0; i < sp.g_list.size(); ++i)
        for (std::size_t j = 0; j < sp.h_list.size(); ++j) {
            const GroupElement w = elem_mul(sp.g_list[i], sp.h_list[j]);
            products[w].emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            if (!words.contains(w)) {
                if (group.name() == "P")
                    words.emplace(w, normal_word_P(decompose_P(w)).to_string());
                else
                    words.emplace(w, (sp.g_words[i] * sp.h_words[j]).to_string());
            }
        }

    BilinearSystem sys;
    sys.support = sp;
    for (int i = 1; i <= sys.m(); ++i) sys.vars.push_back(Variable::u(i));
    for (int j = 1; j <= sys.n(); ++j) sys.vars.push_back(Variable::v(j));

    auto emit = [&](const GroupElement& w, const std::vector<std::pair<int, int>>& pairs) {
        Equation eq;
        for (const auto& [i, j] : pairs) eq.poly.add_term(GaussianInt(1), {Variable::u(i), Variable::v(j)});
        if (w.is_identity()) eq.poly.add_term(GaussianInt(-1), {});
        eq.label = w;
        eq.label_word = words.at(w);
        sys.equations.push_back(std::move(eq));
    };
    const GroupElement id = group.identity();
    if (auto it = products.find(id); it != products.end()) emit(id, it->second);
    for (const auto& [w, pairs] : products)
        if (!w.is_identity()) emit(w, pairs);
    return sys;
}

BilinearSystem add_normalization(const BilinearSystem& sys) {
    if (sys.normalized) throw std::logic_error("system is already normalized");
    if (sys.localized) throw std::logic_error("localized systems replace the normalization equations");
    BilinearSystem out = sys;
    Equation eu, ev;
    eu.kind = ev.kind = Equation::Kind::normalization;
    for (int i = 1; i <= sys.m(); ++i) eu.poly.add_term(GaussianInt(1), {Variable::u(i)});
    for (int j = 1; j <= sys.n(); ++j) ev.poly.add_term(GaussianInt(1), {Variable::v(j)});
    eu.poly.add_term(GaussianInt(-1), {});
    ev.poly.add_term(GaussianInt(-1), {});
    out.equations.push_back(std::move(eu));
    out.equations.push_back(std::move(ev));
    out.normalized = true;
    return out;
}

BilinearSystem localize(const BilinearSystem& sys, int i, int j) {
    if (sys.localized) throw std::logic_error("system is already localized");
    if (sys.character_reduced) throw std::logic_error("localize before character reduction");
    if (i == j) throw std::invalid_argument("localization needs two distinct indices");
    if (i < 1 || j < 1 || i > sys.m() || j > sys.m()) throw std::invalid_argument("localization index out of range");
    BilinearSystem out;
    out.support = sys.support;
    const std::map<Variable, LinearImage> fix{{Variable::u(i), LinearImage{GaussianInt(1), std::nullopt}}};
    for (const auto& eq : sys.equations) {
        if (eq.kind == Equation::Kind::normalization) continue;
        Equation copy = eq;
        copy.poly = substitute_linear(eq.poly, fix);
        out.equations.push_back(std::move(copy));
    }
    Equation loc;
    loc.kind = Equation::Kind::localization;
    loc.poly.add_term(GaussianInt(1), {Variable::u(j), Variable::w()});
    loc.poly.add_term(GaussianInt(-1), {});
    out.equations.push_back(std::move(loc));
    for (const auto& v : sys.vars)
        if (!(v == Variable::u(i))) out.vars.push_back(v);
    out.vars.push_back(Variable::w());
    out.localized = std::make_pair(i, j);
    return out;
}

BilinearSystem permute_variables(const BilinearSystem& sys, const VariablePermutation& perm) {
    std::map<Variable, LinearImage> images;
    for (const auto& [from, to] : perm) images.emplace(from, LinearImage{GaussianInt(1), to});
    BilinearSystem out = sys;
    for (auto& eq : out.equations) eq.poly = substitute_linear(eq.poly, images);
    return out;
}

bool is_invariant_under(const BilinearSystem& sys, const VariablePermutation& perm) {
    std::multiset<Polynomial> before, after;
    for (const auto& eq : sys.equations) before.insert(eq.poly);
    for (const auto& eq : permute_variables(sys, perm).equations) after.insert(eq.poly);
    return before == after;
}

VariablePermutation uv_swap(int size) {
    VariablePermutation perm;
    for (int i = 1; i <= size; ++i) {
        perm[Variable::u(i)] = Variable::v(i);
        perm[Variable::v(i)] = Variable::u(i);
    }
    return perm;
}

VariablePermutation pairwise_index_swap(int size) {
    VariablePermutation perm;
    for (int i = 2; i + 1 <= size; i += 2) {
        perm[Variable::u(i)] = Variable::u(i + 1);
        perm[Variable::u(i + 1)] = Variable::u(i);
        perm[Variable::v(i)] = Variable::v(i + 1);
        perm[Variable::v(i + 1)] = Variable::v(i);
    }
    return perm;
}

SwapSymmetryReport check_swap_symmetries(const BilinearSystem& sys) {
    SwapSymmetryReport report;
    if (sys.m() == sys.n()) report.uv_swap = is_invariant_under(sys, uv_swap(sys.m()));
    if (sys.m() == sys.n() && sys.m() % 2 == 1) report.pairwise_swap = is_invariant_under(sys, pairwise_index_swap(sys.m()));
    return report;
}

bool check_parity(const BilinearSystem& sys) {
    for (const auto& eq : sys.equations) {
        if (eq.kind != Equation::Kind::product || !eq.label || eq.label->is_identity()) continue;
        if (eq.poly.size() % 2 != 0) return false;
    }
    return true;
}

namespace {

int index_in(const std::vector<GroupElement>& list, const GroupElement& g) {
    auto it = std::find(list.begin(), list.end(), g);
    return it == list.end() ? 0 : static_cast<int>(it - list.begin()) + 1;
}

}  // namespace

ReducedSystem reduce_by_characters(const BilinearSystem& sys, const GeneratorMap& phi0, const GeneratorMap& phi1,
                                   const GroupCharacter<GaussianInt>& chi0, const GroupCharacter<GaussianInt>& chi1) {
    if (sys.character_reduced) throw std::logic_error("system is already character-reduced");
    if (sys.localized) throw std::logic_error("character reduction applies to the unlocalized system");
    const SupportPair& sp = sys.support;
    const AffineGroup& group = *sp.group;
    const int m = sys.m();

    // perm[i] = index of phi0(g_i); factor[i] = chi0(g_i).
    std::vector<int> perm(static_cast<std::size_t>(m) + 1);
    std::vector<GaussianInt> factor(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        const Word& w = sp.g_words[static_cast<std::size_t>(i - 1)];
        const GroupElement image = group.eval(apply_generator_map(phi0, group.expand_derived(w)));
        const int k = index_in(sp.g_list, image);
        if (k == 0) throw std::invalid_argument("phi0 does not permute the g-support (image of g" + std::to_string(i) + ")");
        perm[static_cast<std::size_t>(i)] = k;
        factor[static_cast<std::size_t>(i)] = chi0.eval(w, group);
    }

    ReductionReport report;
    // u_i = value[i] * u_{root[i]}; root 0 marks a pinned orbit.
    std::vector<int> root(static_cast<std::size_t>(m) + 1, -1);
    std::vector<GaussianInt> value(static_cast<std::size_t>(m) + 1);
    for (int start = 1; start <= m; ++start) {
        if (root[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> orbit{start};
        root[static_cast<std::size_t>(start)] = start;
        value[static_cast<std::size_t>(start)] = GaussianInt(1);
        bool pinned = false;
        for (int cur = start;;) {
            const int next = perm[static_cast<std::size_t>(cur)];
            const GaussianInt val = factor[static_cast<std::size_t>(cur)] * value[static_cast<std::size_t>(cur)];
            if (root[static_cast<std::size_t>(next)] != -1) {
                if (!(value[static_cast<std::size_t>(next)] == val)) pinned = true;
                break;
            }
            root[static_cast<std::size_t>(next)] = start;
            value[static_cast<std::size_t>(next)] = val;
            orbit.push_back(next);
            cur = next;
        }
        if (perm[static_cast<std::size_t>(start)] == start) report.phi0_fixpoints.push_back(start);
        if (pinned) {
            for (int i : orbit) root[static_cast<std::size_t>(i)] = 0;
            report.pinned_u.insert(report.pinned_u.end(), orbit.begin(), orbit.end());
        } else {
            report.free_u.push_back(start);
        }
    }
    std::sort(report.pinned_u.begin(), report.pinned_u.end());

    auto u_image = [&](int i) -> LinearImage {
        const int r = root[static_cast<std::size_t>(i)];
        if (r == 0) return {GaussianInt(0), std::nullopt};
        return {value[static_cast<std::size_t>(i)], Variable::u(r)};
    };
    for (int i = 1; i <= m; ++i) report.images[Variable::u(i)] = u_image(i);

    std::vector<bool> hit(sp.h_list.size() + 1, false);
    for (int i = 1; i <= m; ++i) {
        const Word& w = sp.g_words[static_cast<std::size_t>(i - 1)];
        const GroupElement image = elem_inv(group.eval(apply_generator_map(phi1, group.expand_derived(w))));
        const int k = index_in(sp.h_list, image);
        if (k == 0 || hit[static_cast<std::size_t>(k)])
            throw std::invalid_argument("g -> phi1(g)^-1 does not map the g-support onto the h-support");
        hit[static_cast<std::size_t>(k)] = true;
        LinearImage img = u_image(i);
        img.coeff = chi1.eval(w, group) * img.coeff;
        report.images[Variable::v(k)] = img;
    }
    if (sp.h_list.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("g -> phi1(g)^-1 does not map the g-support onto the h-support");

    ReducedSystem out;
    out.system.support = sp;
    out.system.normalized = sys.normalized;
    out.system.character_reduced = true;
    for (int r : report.free_u) out.system.vars.push_back(Variable::u(r));
    for (const auto& eq : sys.equations) {
        Equation copy = eq;
        copy.poly = substitute_linear(eq.poly, report.images);
        if (!copy.poly.is_zero()) out.system.equations.push_back(std::move(copy));
    }
    out.report = std::move(report);
    return out;
}

int character_pair_index(int e0a, int e0b, int e1a, int e1b) { return ((e0a * 4 + e0b) * 4 + e1a) * 4 + e1b; }

int remark_character_pair_index() { return character_pair_index(3, 3, 1, 2); }

std::vector<CharacterPair> enumerate_character_pairs() {
    const GroupHandle& group = shared_group_P();
    const GeneratorMap phi1 = catalog_phi1();
    std::vector<CharacterPair> out;
    out.reserve(256);
    for (int e0a = 0; e0a < 4; ++e0a)
        for (int e0b = 0; e0b < 4; ++e0b)
            for (int e1a = 0; e1a < 4; ++e1a)
                for (int e1b = 0; e1b < 4; ++e1b) {
                    CharacterPair cp;
                    cp.index = character_pair_index(e0a, e0b, e1a, e1b);
                    cp.chi0 = GroupCharacter<GaussianInt>(
                        {{"a", GaussianInt::iota_pow(e0a)}, {"b", GaussianInt::iota_pow(e0b)}});
                    cp.chi1 = GroupCharacter<GaussianInt>(
                        {{"a", GaussianInt::iota_pow(e1a)}, {"b", GaussianInt::iota_pow(e1b)}});
                    cp.relators_ok = cp.chi0.is_valid(*group) && cp.chi1.is_valid(*group);
                    const TwistedAutomorphism<GaussianInt> theta1{phi1, phi1, cp.chi1, CoeffAuto::identity};
                    cp.anti_involution = true;
                    for (const auto& name : group->generator_names()) {
                        const auto g = GroupRingElem<GaussianInt>::from_word(group, Word{{{name, 1}}}, GaussianInt(1));
                        const auto once = gr_star(gr_apply_twisted(theta1, g));
                        if (!(gr_star(gr_apply_twisted(theta1, once)) == g)) cp.anti_involution = false;
                    }
                    out.push_back(std::move(cp));
                }
    return out;
}

std::string export_system(const BilinearSystem& sys, ExportFormat format, std::uint64_t characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw ExportFormatError("characteristic must be 0 or a prime");
    if (format != ExportFormat::json && !sys.is_integral())
        throw ExportFormatError("msolve and Singular exports need integer coefficients");

    std::ostringstream os;
    std::string var_list;
    for (std::size_t k = 0; k < sys.vars.size(); ++k) var_list += (k ? "," : "") + sys.vars[k].name();

    switch (format) {
        case ExportFormat::msolve: {
            os << var_list << '\n' << characteristic << '\n';
            for (std::size_t k = 0; k < sys.equations.size(); ++k)
                os << sys.equations[k].poly.to_string() << (k + 1 < sys.equations.size() ? ",\n" : "\n");
            break;
        }
        case ExportFormat::singular: {
            os << "ring r = " << characteristic << ",(" << var_list << "),dp;\n";
            os << "ideal i =\n";
            for (std::size_t k = 0; k < sys.equations.size(); ++k)
                os << "  " << sys.equations[k].poly.to_string() << (k + 1 < sys.equations.size() ? ",\n" : ";\n");
            break;
        }
        case ExportFormat::json: {
            nlohmann::ordered_json doc;
            doc["vars"] = nlohmann::ordered_json::array();
            for (const auto& v : sys.vars) doc["vars"].push_back(v.name());
            doc["char"] = characteristic;
            doc["eqs"] = nlohmann::ordered_json::array();
            const bool integral = sys.is_integral();
            for (const auto& eq : sys.equations) {
                nlohmann::ordered_json e;
                e["label"] = eq.label ? eq.label_word : "";
                e["monomials"] = nlohmann::ordered_json::array();
                for (const auto& [mono, c] : eq.poly.terms()) {
                    nlohmann::ordered_json names = nlohmann::ordered_json::array();
                    for (const auto& v : mono) names.push_back(v.name());
                    nlohmann::ordered_json coeff =
                        integral ? nlohmann::ordered_json(c.re()) : nlohmann::ordered_json::array({c.re(), c.im()});
                    e["monomials"].push_back(nlohmann::ordered_json::array({coeff, names}));
                }
                doc["eqs"].push_back(std::move(e));
            }
            os << doc.dump() << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace grunit
