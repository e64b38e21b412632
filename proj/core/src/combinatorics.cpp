#include "grunit/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

namespace grunit {

MultiplicityTable multiplicity_table(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
    MultiplicityTable table;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            table[elem_mul(a[i], b[j])].emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return table;
}

std::size_t min_multiplicity(const MultiplicityTable& table) {
    std::size_t best = 0;
    for (const auto& [w, pairs] : table)
        if (best == 0 || pairs.size() < best) best = pairs.size();
    return best;
}

std::optional<UniqueProduct> has_unique_product(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
    for (const auto& [w, pairs] : multiplicity_table(a, b))
        if (pairs.size() == 1) return UniqueProduct{w, pairs[0].first, pairs[0].second};
    return std::nullopt;
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream os;
    os << "c two-unique-product encoding: satisfiable iff some proper subpair has no unique product\n";
    for (std::size_t k = 0; k < legend.size(); ++k) os << "c var " << k + 1 << ' ' << legend[k] << '\n';
    os << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (int lit : clause) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfFormula encode_two_unique_product_cnf(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                                         const std::vector<std::string>& a_names,
                                         const std::vector<std::string>& b_names) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m == 0 || n == 0) throw std::invalid_argument("supports must be nonempty");
    CnfFormula f;
    f.membership_vars = m + n;
    f.auxiliary_vars = m * n;
    f.num_vars = m + n + m * n;
    auto x = [](int i) { return i; };
    auto y = [m](int j) { return m + j; };
    auto p = [m, n](int i, int j) { return m + n + (i - 1) * n + j; };

    for (int i = 1; i <= m; ++i)
        f.legend.push_back("x" + std::to_string(i) + " A " +
                           (a_names.empty() ? std::to_string(i) : a_names[static_cast<std::size_t>(i - 1)]));
    for (int j = 1; j <= n; ++j)
        f.legend.push_back("y" + std::to_string(j) + " B " +
                           (b_names.empty() ? std::to_string(j) : b_names[static_cast<std::size_t>(j - 1)]));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            f.legend.push_back("aux p" + std::to_string(i) + "_" + std::to_string(j) + " = x" + std::to_string(i) +
                               " & y" + std::to_string(j));

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            f.clauses.push_back({-p(i, j), x(i)});
            f.clauses.push_back({-p(i, j), y(j)});
            f.clauses.push_back({p(i, j), -x(i), -y(j)});
        }
    for (const auto& [w, pairs] : multiplicity_table(a, b)) {
        for (const auto& [i, j] : pairs) {
            std::vector<int> clause{-p(i, j)};
            for (const auto& [k, l] : pairs)
                if (k != i || l != j) clause.push_back(p(k, l));
            f.clauses.push_back(std::move(clause));
        }
    }
    std::vector<int> some_x, some_y, proper;
    for (int i = 1; i <= m; ++i) {
        some_x.push_back(x(i));
        proper.push_back(-x(i));
    }
    for (int j = 1; j <= n; ++j) {
        some_y.push_back(y(j));
        proper.push_back(-y(j));
    }
    f.clauses.push_back(std::move(some_x));
    f.clauses.push_back(std::move(some_y));
    f.clauses.push_back(std::move(proper));
    return f;
}

namespace {

// value: 0 unassigned, 1 true, -1 false
bool dpll(const CnfFormula& f, std::vector<int>& value) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& clause : f.clauses) {
            int unassigned = 0, last = 0;
            bool satisfied = false;
            for (int lit : clause) {
                const int v = value[static_cast<std::size_t>(std::abs(lit))];
                if (v == 0) {
                    ++unassigned;
                    last = lit;
                } else if ((v > 0) == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (unassigned == 0) return false;
            if (unassigned == 1) {
                value[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
                changed = true;
            }
        }
    }
    const auto it = std::find(value.begin() + 1, value.end(), 0);
    if (it == value.end()) return true;
    for (int choice : {1, -1}) {
        std::vector<int> trial = value;
        trial[static_cast<std::size_t>(it - value.begin())] = choice;
        if (dpll(f, trial)) {
            value = std::move(trial);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<bool>> solve_cnf_naive(const CnfFormula& f) {
    std::vector<int> value(static_cast<std::size_t>(f.num_vars) + 1, 0);
    if (!dpll(f, value)) return std::nullopt;
    std::vector<bool> model(value.size(), false);
    for (std::size_t k = 1; k < value.size(); ++k) model[k] = value[k] > 0;
    return model;
}

namespace {

// Products of A and B as dense indices: prod[i * n + j].
struct ProductIndex {
    std::vector<int> prod;
    int count = 0;
    int identity = -1;
};

ProductIndex index_products(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
    ProductIndex out;
    std::map<GroupElement, int> seen;
    out.prod.reserve(a.size() * b.size());
    for (const auto& g : a)
        for (const auto& h : b) {
            const GroupElement w = elem_mul(g, h);
            auto [it, inserted] = seen.try_emplace(w, out.count);
            if (inserted) {
                if (w.is_identity()) out.identity = out.count;
                ++out.count;
            }
            out.prod.push_back(it->second);
        }
    return out;
}

}  // namespace

SubpairVerdict exhaustive_subpair_check(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                                        int cap) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m + n > cap || m >= 63 || n >= 63)
        throw ResourceBoundError("|A| + |B| = " + std::to_string(m + n) + " exceeds the exhaustive cap " +
                                 std::to_string(cap) + "; export the CNF and use an external SAT solver");
    if (m == 0 || n == 0) throw std::invalid_argument("supports must be nonempty");
    const ProductIndex idx = index_products(a, b);
    const std::uint64_t full_a = (std::uint64_t{1} << m) - 1;
    const std::uint64_t full_b = (std::uint64_t{1} << n) - 1;
    std::vector<int> count(static_cast<std::size_t>(idx.count));
    SubpairVerdict verdict;
    for (std::uint64_t ma = 1; ma <= full_a; ++ma)
        for (std::uint64_t mb = 1; mb <= full_b; ++mb) {
            if (ma == full_a && mb == full_b) continue;
            ++verdict.subpairs_checked;
            std::fill(count.begin(), count.end(), 0);
            for (int i = 0; i < m; ++i) {
                if (!(ma >> i & 1)) continue;
                for (int j = 0; j < n; ++j)
                    if (mb >> j & 1) ++count[static_cast<std::size_t>(idx.prod[static_cast<std::size_t>(i * n + j)])];
            }
            if (std::find(count.begin(), count.end(), 1) == count.end()) {
                verdict.counterexample = std::make_pair(ma, mb);
                return verdict;
            }
        }
    return verdict;
}

namespace {

struct F2Workspace {
    int words = 0;
    int n = 0;
    std::vector<std::uint64_t> columns;  // n columns of `words` words
    std::vector<std::uint64_t> basis;
    std::vector<int> pivot;
    std::vector<std::uint64_t> basis_mask;
    std::vector<std::uint64_t> kernel;
    std::vector<std::uint64_t> vec;

    F2Workspace(int words_, int n_)
        : words(words_), n(n_), columns(static_cast<std::size_t>(words_ * n_)), basis(columns.size()),
          pivot(static_cast<std::size_t>(n_)), basis_mask(static_cast<std::size_t>(n_)),
          vec(static_cast<std::size_t>(words_)) {}

    void toggle(int col, int bit) {
        columns[static_cast<std::size_t>(col * words + bit / 64)] ^= std::uint64_t{1} << (bit % 64);
    }

    // Reduces vec against the current basis, returning the combination mask.
    std::uint64_t reduce(std::size_t rank, std::uint64_t mask) {
        for (std::size_t k = 0; k < rank; ++k) {
            const int pb = pivot[k];
            if (vec[static_cast<std::size_t>(pb / 64)] >> (pb % 64) & 1) {
                const std::uint64_t* bv = &basis[k * static_cast<std::size_t>(words)];
                for (int w = 0; w < words; ++w) vec[static_cast<std::size_t>(w)] ^= bv[w];
                mask ^= basis_mask[k];
            }
        }
        return mask;
    }

    int first_bit() const {
        for (int w = 0; w < words; ++w)
            if (vec[static_cast<std::size_t>(w)]) return w * 64 + std::countr_zero(vec[static_cast<std::size_t>(w)]);
        return -1;
    }

    // Solves sum v_j column_j = e_target; returns the particular solution or nothing.
    std::optional<std::uint64_t> solve(int target) {
        std::size_t rank = 0;
        kernel.clear();
        for (int j = 0; j < n; ++j) {
            std::copy_n(&columns[static_cast<std::size_t>(j * words)], words, vec.begin());
            const std::uint64_t mask = reduce(rank, std::uint64_t{1} << j);
            const int pb = first_bit();
            if (pb < 0) {
                kernel.push_back(mask);
                continue;
            }
            std::copy(vec.begin(), vec.end(), &basis[rank * static_cast<std::size_t>(words)]);
            pivot[rank] = pb;
            basis_mask[rank] = mask;
            ++rank;
        }
        std::fill(vec.begin(), vec.end(), 0);
        vec[static_cast<std::size_t>(target / 64)] = std::uint64_t{1} << (target % 64);
        const std::uint64_t mask = reduce(rank, 0);
        if (first_bit() >= 0) return std::nullopt;
        return mask;
    }
};

struct ChunkResult {
    std::vector<F2Solution> solutions;
    std::vector<F2Family> families;
    std::uint64_t candidates = 0;
};

bool invariant_under(std::uint64_t u, const std::vector<int>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((u >> i & 1) != (u >> perm[i] & 1)) return false;
    return true;
}

void search_range(const ProductIndex& idx, int m, int n, std::uint64_t lo, std::uint64_t hi,
                  const F2SearchOptions& options, ChunkResult& out) {
    const int words = (idx.count + 63) / 64;
    F2Workspace ws(words, n);
    auto toggle_row = [&](int i) {
        for (int j = 0; j < n; ++j) ws.toggle(j, idx.prod[static_cast<std::size_t>(i * n + j)]);
    };
    for (int i = 0; i < m; ++i)
        if (lo >> i & 1) toggle_row(i);
    for (std::uint64_t u = lo; u < hi; ++u) {
        if (u != lo) {
            const std::uint64_t changed = u ^ (u - 1);
            for (int i = 0; i < m; ++i)
                if (changed >> i & 1) toggle_row(i);
        }
        if (options.symmetric_perm && !invariant_under(u, *options.symmetric_perm)) continue;
        ++out.candidates;
        const auto particular = ws.solve(idx.identity);
        if (!particular) continue;
        const int dim = static_cast<int>(ws.kernel.size());
        if (dim > options.kernel_cap) {
            out.families.push_back({u, *particular, ws.kernel});
            continue;
        }
        std::vector<std::uint64_t> vs;
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << dim); ++c) {
            std::uint64_t v = *particular;
            for (int k = 0; k < dim; ++k)
                if (c >> k & 1) v ^= ws.kernel[static_cast<std::size_t>(k)];
            vs.push_back(v);
        }
        std::sort(vs.begin(), vs.end());
        for (auto v : vs) out.solutions.push_back({u, v});
    }
}

}  // namespace

F2SearchResult search_units_f2(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                               const F2SearchOptions& options) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m > f2_search_max_a) throw ResourceBoundError("|A| = " + std::to_string(m) + " exceeds the search bound 24");
    if (n > f2_search_max_b) throw ResourceBoundError("|B| = " + std::to_string(n) + " exceeds the search bound 64");
    if (m == 0 || n == 0) throw std::invalid_argument("supports must be nonempty");
    if (options.symmetric_perm && options.symmetric_perm->size() != a.size())
        throw std::invalid_argument("symmetry permutation has the wrong length");

    F2SearchResult result;
    const ProductIndex idx = index_products(a, b);
    const std::uint64_t end = std::uint64_t{1} << m;
    if (idx.identity < 0) {
        // No product hits the identity, so no candidate can satisfy the identity equation.
        result.candidates = end - 1;
        return result;
    }
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 256));
    std::vector<ChunkResult> chunks(threads);
    const std::uint64_t span = end - 1;
    auto bound = [&](unsigned t) { return 1 + span * t / threads; };
    if (threads == 1) {
        search_range(idx, m, n, 1, end, options, chunks[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(search_range, std::cref(idx), m, n, bound(t), bound(t + 1), std::cref(options),
                              std::ref(chunks[t]));
        for (auto& th : pool) th.join();
    }
    for (auto& c : chunks) {
        result.candidates += c.candidates;
        result.solutions.insert(result.solutions.end(), c.solutions.begin(), c.solutions.end());
        result.families.insert(result.families.end(), c.families.begin(), c.families.end());
    }
    return result;
}

std::vector<int> support_permutation(const SupportPair& sp, const GeneratorMap& phi) {
    const AffineGroup& group = *sp.group;
    std::vector<int> perm;
    for (const auto& w : sp.g_words) {
        const GroupElement image = group.eval(apply_generator_map(phi, group.expand_derived(w)));
        auto it = std::find(sp.g_list.begin(), sp.g_list.end(), image);
        if (it == sp.g_list.end()) throw std::invalid_argument("automorphism does not permute the support");
        perm.push_back(static_cast<int>(it - sp.g_list.begin()));
    }
    return perm;
}

std::string bitstring(std::uint64_t bits, int length) {
    std::string s;
    for (int i = 0; i < length; ++i) s += (bits >> i & 1) ? '1' : '0';
    return s;
}

std::uint64_t parse_bitstring(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("bitstring longer than 64");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            bits |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring must contain only 0 and 1");
    }
    return bits;
}

std::pair<GroupRingElem<PrimeField>, GroupRingElem<PrimeField>> f2_elements(const SupportPair& sp,
                                                                             const F2Solution& sol) {
    GroupRingElem<PrimeField> alpha(sp.group), beta(sp.group);
    for (std::size_t i = 0; i < sp.g_list.size(); ++i)
        if (sol.u >> i & 1) alpha.add_term(sp.g_list[i], PrimeField(2, 1), sp.g_words[i]);
    for (std::size_t j = 0; j < sp.h_list.size(); ++j)
        if (sol.v >> j & 1) beta.add_term(sp.h_list[j], PrimeField(2, 1), sp.h_words[j]);
    return {alpha, beta};
}

}  // namespace grunit
