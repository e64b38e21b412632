#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grunit/catalog.hpp"
#include "grunit/group.hpp"
#include "grunit/group_ring.hpp"
#include "grunit/rings.hpp"

namespace grunit {

class ResourceBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Product element -> 1-based (i, j) with A[i] B[j] equal to it.
using MultiplicityTable = std::map<GroupElement, std::vector<std::pair<int, int>>>;

MultiplicityTable multiplicity_table(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b);
std::size_t min_multiplicity(const MultiplicityTable& table);

struct UniqueProduct {
    GroupElement product;
    int i = 0;
    int j = 0;
};

// First uniquely represented product in element order, if any.
std::optional<UniqueProduct> has_unique_product(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b);

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    // legend[k] describes variable k + 1.
    std::vector<std::string> legend;
    int membership_vars = 0;
    int auxiliary_vars = 0;

    std::string to_dimacs() const;
};

// Satisfying assignments are nonempty proper subpairs (A', B') without a unique product.
// Variables: x_i = i, y_j = m + j, p_ij = m + n + (i - 1) n + j.
// Names label the membership variables in the legend; indices are used when empty.
CnfFormula encode_two_unique_product_cnf(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                                         const std::vector<std::string>& a_names = {},
                                         const std::vector<std::string>& b_names = {});

// Unit propagation plus branching; returns a model (index 0 unused) or nothing when UNSAT.
std::optional<std::vector<bool>> solve_cnf_naive(const CnfFormula& f);

struct SubpairVerdict {
    // Bitmasks over A and B of a subpair lacking a unique product; empty when every subpair has one.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
    std::uint64_t subpairs_checked = 0;
    bool all_have_unique_product() const { return !counterexample.has_value(); }
};

inline constexpr int default_subpair_cap = 24;

// Throws ResourceBoundError when |A| + |B| exceeds cap.
SubpairVerdict exhaustive_subpair_check(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                                        int cap = default_subpair_cap);

struct F2Solution {
    std::uint64_t u = 0;  // bit i is u_{i+1}
    std::uint64_t v = 0;  // bit j is v_{j+1}
};

// A solution set with kernel dimension above the cap: particular solution plus kernel basis.
struct F2Family {
    std::uint64_t u = 0;
    std::uint64_t v_particular = 0;
    std::vector<std::uint64_t> kernel;
};

struct F2SearchOptions {
    unsigned threads = 1;
    int kernel_cap = 8;
    // When set, only u with u_i = u_{perm[i]} are tried (perm is 0-based over A).
    std::optional<std::vector<int>> symmetric_perm;
};

struct F2SearchResult {
    std::vector<F2Solution> solutions;
    std::vector<F2Family> families;
    std::uint64_t candidates = 0;
};

inline constexpr int f2_search_max_a = 24;
inline constexpr int f2_search_max_b = 64;

// Enumerates every nonzero u over A and solves for v over F_2. Results are ordered by u.
// Throws ResourceBoundError when |A| > 24 or |B| > 64.
F2SearchResult search_units_f2(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b,
                               const F2SearchOptions& options = {});

// phi0 as a permutation of the g-support, for the symmetric pre-filter.
std::vector<int> support_permutation(const SupportPair& sp, const GeneratorMap& phi);

std::string bitstring(std::uint64_t bits, int length);
std::uint64_t parse_bitstring(const std::string& s);

// The group-ring elements over F_2 encoded by a solution.
std::pair<GroupRingElem<PrimeField>, GroupRingElem<PrimeField>> f2_elements(const SupportPair& sp,
                                                                             const F2Solution& sol);

}  // namespace grunit
