#include "grunit_tools/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "grunit/catalog.hpp"
#include "grunit/combinatorics.hpp"
#include "grunit/json_io.hpp"
#include "grunit/poly_system.hpp"

namespace grunit::cli {

namespace {

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

std::string schema(const std::string& name) { return "grunit." + name + "/1"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(exit_usage, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw CliError(exit_usage, path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CliError(exit_usage, "cannot write " + path);
    out << text;
}

SupportPair load_supports(const std::string& path) {
    return path.empty() ? catalog_supports() : supports_from_json(read_json_file(path));
}

unsigned default_threads() {
    if (const char* env = std::getenv("GRUNIT_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        throw CliError(exit_usage, "GRUNIT_THREADS must be a positive integer");
    }
    return 1;
}

std::string field_string(const FiniteFieldElem& x) {
    return std::visit([](const auto& v) { return v.to_string(); }, x);
}

// Specializes an R[P] pair at s = t = root and verifies the result.
json specialize_pair(const GroupRingElem<CycloBivariate>& alpha, const GroupRingElem<CycloBivariate>& beta,
                     std::uint64_t p, bool include_elements, bool& ok) {
    const EighthRoot root = find_eighth_root(p);
    json report{{"p", p}, {"field", root.field_name()}, {"root", field_string(root.root)}};
    std::visit(
        [&](const auto& r) {
            auto spec = [&](const CycloBivariate& c) { return specialize_R(c, r, r); };
            const auto a = gr_map_coeffs(alpha, spec);
            const auto b = gr_map_coeffs(beta, spec);
            const bool unit = gr_verify_unit(a, b);
            ok = ok && unit;
            report["unit"] = unit;
            report["nontrivial"] = gr_is_nontrivial(a);
            report["support"] = {a.support_size(), b.support_size()};
            if (include_elements) {
                report["alpha"] = group_ring_to_json(a);
                report["beta"] = group_ring_to_json(b);
            }
        },
        root.root);
    return report;
}

std::uint64_t identity_pairs(const SupportPair& sp) {
    const auto table = multiplicity_table(sp.g_list, sp.h_list);
    auto it = table.find(sp.group->identity());
    return it == table.end() ? 0 : it->second.size();
}

CommandResult verify_theorem1() {
    const auto alpha = catalog_alpha_R();
    const auto beta = catalog_beta_R();
    const auto ab = gr_mul(alpha, beta);
    const auto ba = gr_mul(beta, alpha);
    const std::uint64_t pairs = identity_pairs(catalog_supports());
    const bool ok = ab.is_one() && ba.is_one() && alpha.support_size() == 21 && beta.support_size() == 21 && pairs == 17;
    json report{{"schema", schema("verify.theorem1")},
                {"alpha_beta", ab.to_string()},
                {"beta_alpha", ba.to_string()},
                {"support", {alpha.support_size(), beta.support_size()}},
                {"identity_pairs", pairs},
                {"ok", ok}};
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "theorem1: verification failed\n"};
}

CommandResult verify_remarks() {
    const auto alpha = catalog_alpha_R();
    const auto beta = catalog_beta_R();
    const bool theta0 = gr_apply_twisted(catalog_theta0(), alpha) == alpha;
    const bool theta1 = gr_star(gr_apply_twisted(catalog_theta1(), alpha)) == beta;
    const bool gauge = gr_apply_twisted(catalog_conjugation_gauge(), alpha) == alpha;
    const bool rho = gr_check_rho_grading(alpha, catalog_rho());
    const auto image = gr_abelianize_P(alpha);
    const bool abel = image.size() == 1 && image.begin()->first == std::make_pair(0, 0) && image.begin()->second.is_one();
    const bool valid = catalog_theta0().is_valid(*shared_group_P()) && catalog_theta1().is_valid(*shared_group_P());
    const bool ok = theta0 && theta1 && gauge && rho && abel && valid;
    json report{{"schema", schema("verify.remarks")},
                {"automorphisms_valid", valid},
                {"theta0_symmetric", theta0},
                {"theta1_unitary", theta1},
                {"conjugation_gauge_invariant", gauge},
                {"rho_graded", rho},
                {"abelianization_is_one", abel},
                {"ok", ok}};
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "remarks: verification failed\n"};
}

CommandResult verify_nu() {
    const GroupHandle& s = shared_group_S();
    const auto nu = catalog_nu_F2();
    const auto phi = catalog_phi_S_twisted();
    const auto phi_nu_star = gr_star(gr_apply_twisted(phi, nu));
    const bool left = gr_mul(nu, phi_nu_star).is_one();
    const bool right = gr_mul(phi_nu_star, nu).is_one();

    auto iterate = [&](const Word& w, int times) {
        Word out = w;
        for (int k = 0; k < times; ++k) out = apply_generator_map(catalog_phi_S(), out);
        return s->eval(out);
    };
    bool order4 = true, square_nontrivial = false;
    for (const auto& name : s->generator_names()) {
        const Word gen{{{name, 1}}};
        order4 = order4 && iterate(gen, 4) == s->generator(name);
        square_nontrivial = square_nontrivial || !(iterate(gen, 2) == s->generator(name));
    }
    const bool square_fixes = gr_apply_twisted(phi, gr_apply_twisted(phi, nu)) == nu;
    const bool relators = check_relators(*s);
    const bool ok = left && right && nu.support_size() == 29 && order4 && square_nontrivial && square_fixes &&
                    relators && phi.is_valid(*s);
    json report{{"schema", schema("verify.nu")},
                {"nu_phi_star", left},
                {"phi_star_nu", right},
                {"support", nu.support_size()},
                {"phi_order_4", order4},
                {"phi_squared_nontrivial", square_nontrivial},
                {"phi_squared_fixes_nu", square_fixes},
                {"relators_hold", relators},
                {"ok", ok}};
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "nu: verification failed\n"};
}

CommandResult verify_corollary(const std::vector<std::uint64_t>& primes) {
    const auto alpha = catalog_alpha_R();
    const auto beta = catalog_beta_R();
    bool ok = true;
    json fields = json::array();
    for (auto p : primes) {
        if (!is_prime(p)) throw CliError(exit_usage, std::to_string(p) + " is not prime");
        fields.push_back(specialize_pair(alpha, beta, p, false, ok));
    }
    const CyclotomicZeta8 z = CyclotomicZeta8::zeta();
    auto spec = [&](const CycloBivariate& c) { return specialize_R(c, z, z); };
    const bool char0 = gr_verify_unit(gr_map_coeffs(alpha, spec), gr_map_coeffs(beta, spec));
    ok = ok && char0;
    json report{{"schema", schema("verify.corollary")},
                {"zeta8", {{"field", "Z[zeta8]"}, {"root", z.to_string()}, {"unit", char0}}},
                {"fields", fields},
                {"ok", ok}};
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "corollary: verification failed\n"};
}

CommandResult group_info(const std::string& name) {
    const GroupHandle& group = group_by_name(name);
    json gens = json::object();
    for (const auto& g : group->generator_names()) gens[g] = element_to_json(group->generator(g));
    json relators = json::array();
    bool ok = true;
    for (const auto& r : group->relators()) {
        const bool holds = group->eval(r).is_identity();
        ok = ok && holds;
        relators.push_back({{"word", r.to_string()}, {"holds", holds}});
    }
    json derived = json::object();
    for (const auto& [dname, w] : group->derived())
        derived[dname] = {{"word", w.to_string()}, {"element", element_to_json(group->eval(w))}};
    json report{{"schema", schema("group.info")},
                {"name", group->name()},
                {"dim", group->dim()},
                {"generators", gens},
                {"derived", derived},
                {"relators", relators},
                {"relators_ok", ok}};
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "group: a relator fails\n"};
}

CommandResult catalog_dump(const std::string& what) {
    json body;
    if (what == "alpha")
        body = group_ring_to_json(catalog_alpha_R());
    else if (what == "beta")
        body = group_ring_to_json(catalog_beta_R());
    else if (what == "nu")
        body = group_ring_to_json(catalog_nu_F2());
    else
        body = supports_to_json(catalog_supports());
    json report{{"schema", schema("catalog." + what)}};
    for (auto& [k, v] : body.items()) report[k] = v;
    return {exit_ok, dump(report), ""};
}

struct GensysOptions {
    bool normalize = false;
    bool no_normalize = false;
    std::vector<int> localize;
    std::optional<int> reduce;
    std::string format = "json";
    std::uint64_t characteristic = 0;
    std::string out;
    std::string supports;
};

CommandResult gensys(const GensysOptions& o) {
    if (o.normalize && o.no_normalize) throw CliError(exit_usage, "--normalize and --no-normalize conflict");
    if (!o.localize.empty() && o.reduce) throw CliError(exit_usage, "--localize and --reduce-characters conflict");
    const SupportPair sp = load_supports(o.supports);
    BilinearSystem sys = generate_bilinear_system(sp);
    std::string diag;
    if (!o.localize.empty()) {
        sys = localize(sys, o.localize[0], o.localize[1]);
    } else {
        if (!o.no_normalize) sys = add_normalization(sys);
        if (o.reduce) {
            if (*o.reduce < 0 || *o.reduce > 255) throw CliError(exit_usage, "--reduce-characters takes 0..255");
            if (sp.group->name() != "P") throw CliError(exit_usage, "character reduction needs supports in P");
            const CharacterPair cp = enumerate_character_pairs()[static_cast<std::size_t>(*o.reduce)];
            if (!cp.anti_involution)
                diag += "warning: character pair " + std::to_string(cp.index) + " does not define an anti-involution\n";
            sys = reduce_by_characters(sys, catalog_phi0(), catalog_phi1(), cp.chi0, cp.chi1).system;
        }
    }
    const ExportFormat fmt = o.format == "msolve"     ? ExportFormat::msolve
                             : o.format == "singular" ? ExportFormat::singular
                                                      : ExportFormat::json;
    const std::string text = export_system(sys, fmt, o.characteristic);
    if (o.out.empty()) return {exit_ok, text, diag};
    write_file(o.out, text);
    json report{{"schema", schema("gensys")},
                {"out", o.out},
                {"format", o.format},
                {"char", o.characteristic},
                {"vars", sys.vars.size()},
                {"equations", sys.equations.size()}};
    return {exit_ok, dump(report), diag};
}

struct SearchOptions {
    std::string supports;
    unsigned threads = 0;
    bool symmetric = false;
};

CommandResult search_f2(const SearchOptions& o) {
    const SupportPair sp = load_supports(o.supports);
    F2SearchOptions opts;
    opts.threads = o.threads ? o.threads : default_threads();
    if (o.symmetric) {
        if (sp.group->name() != "P") throw CliError(exit_usage, "--symmetric needs supports in P");
        try {
            opts.symmetric_perm = support_permutation(sp, catalog_phi0());
        } catch (const std::invalid_argument& e) {
            throw CliError(exit_usage, std::string("--symmetric: ") + e.what());
        }
    }
    const F2SearchResult res = search_units_f2(sp.g_list, sp.h_list, opts);
    const int m = static_cast<int>(sp.g_list.size());
    const int n = static_cast<int>(sp.h_list.size());
    json solutions = json::array();
    bool verified = true;
    for (const auto& s : res.solutions) {
        const auto [a, b] = f2_elements(sp, s);
        verified = verified && gr_verify_unit(a, b);
        solutions.push_back({{"u", bitstring(s.u, m)}, {"v", bitstring(s.v, n)}});
    }
    json families = json::array();
    for (const auto& f : res.families) {
        json kernel = json::array();
        for (auto k : f.kernel) kernel.push_back(bitstring(k, n));
        families.push_back({{"u", bitstring(f.u, m)}, {"v", bitstring(f.v_particular, n)}, {"kernel", kernel}});
    }
    json report{{"schema", schema("search-f2")},
                {"group", sp.group->name()},
                {"m", m},
                {"n", n},
                {"symmetric", o.symmetric},
                {"candidates", res.candidates},
                {"count", res.solutions.size()},
                {"verified", verified},
                {"solutions", solutions},
                {"families", families}};
    return {verified ? exit_ok : exit_verification, dump(report), verified ? "" : "search-f2: a solution failed verification\n"};
}

struct UniqueOptions {
    std::string supports;
    std::string cnf;
    bool exhaustive = false;
    int cap = default_subpair_cap;
};

CommandResult uniqueprod(const UniqueOptions& o) {
    const SupportPair sp = load_supports(o.supports);
    const auto table = multiplicity_table(sp.g_list, sp.h_list);
    json report{{"schema", schema("uniqueprod")},
                {"group", sp.group->name()},
                {"m", sp.g_list.size()},
                {"n", sp.h_list.size()},
                {"products", table.size()},
                {"identity_pairs", identity_pairs(sp)},
                {"min_multiplicity", min_multiplicity(table)}};
    if (const auto w = has_unique_product(sp.g_list, sp.h_list))
        report["unique_product"] = {{"word", (sp.g_words[static_cast<std::size_t>(w->i - 1)] *
                                              sp.h_words[static_cast<std::size_t>(w->j - 1)])
                                                 .to_string()},
                                    {"i", w->i},
                                    {"j", w->j}};
    else
        report["unique_product"] = nullptr;
    if (!o.cnf.empty()) {
        std::vector<std::string> a_names, b_names;
        for (const auto& w : sp.g_words) a_names.push_back(w.to_string());
        for (const auto& w : sp.h_words) b_names.push_back(w.to_string());
        const CnfFormula f = encode_two_unique_product_cnf(sp.g_list, sp.h_list, a_names, b_names);
        write_file(o.cnf, f.to_dimacs());
        report["cnf"] = {{"path", o.cnf}, {"vars", f.num_vars}, {"clauses", f.clauses.size()},
                         {"membership_vars", f.membership_vars}, {"auxiliary_vars", f.auxiliary_vars}};
    }
    if (o.exhaustive) {
        const SubpairVerdict v = exhaustive_subpair_check(sp.g_list, sp.h_list, o.cap);
        json ex{{"subpairs_checked", v.subpairs_checked}, {"all_have_unique_product", v.all_have_unique_product()}};
        if (v.counterexample) {
            ex["counterexample"] = {{"a", bitstring(v.counterexample->first, static_cast<int>(sp.g_list.size()))},
                                    {"b", bitstring(v.counterexample->second, static_cast<int>(sp.h_list.size()))}};
        }
        report["exhaustive"] = ex;
    }
    return {exit_ok, dump(report), ""};
}

CommandResult specialize(std::uint64_t p, const std::string& in) {
    if (!is_prime(p)) throw CliError(exit_usage, std::to_string(p) + " is not prime");
    GroupRingElem<CycloBivariate> alpha = catalog_alpha_R(), beta = catalog_beta_R();
    if (!in.empty()) {
        const json doc = read_json_file(in);
        try {
            alpha = group_ring_from_json<CycloBivariate>(doc.at("alpha"), cyclo_from_json);
            beta = group_ring_from_json<CycloBivariate>(doc.at("beta"), cyclo_from_json);
        } catch (const nlohmann::json::exception& e) {
            throw CliError(exit_usage, in + ": expected {\"alpha\": ..., \"beta\": ...} (" + e.what() + ")");
        }
    }
    bool ok = true;
    json report{{"schema", schema("specialize")}};
    const json fields = specialize_pair(alpha, beta, p, true, ok);
    for (const auto& [k, v] : fields.items()) report[k] = v;
    return {ok ? exit_ok : exit_verification, dump(report), ok ? "" : "specialize: the images are not inverse\n"};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    CLI::App app{"Exact group-ring unit verification and search", "grunit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Verify a catalogued claim");
    verify->require_subcommand(1);
    auto* v_theorem1 = verify->add_subcommand("theorem1", "alpha * beta = beta * alpha = 1 over R[P]");
    auto* v_remarks = verify->add_subcommand("remarks", "Symmetry, gauge, grading and abelianization checks");
    auto* v_nu = verify->add_subcommand("nu", "The phi-unitary unit over F_2[S]");
    auto* v_corollary = verify->add_subcommand("corollary", "Specializations to finite fields");
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 17};
    v_corollary->add_option("--prime", primes, "Primes to specialize at")->expected(1, -1);

    auto* group = app.add_subcommand("group", "Group models");
    group->require_subcommand(1);
    auto* g_info = group->add_subcommand("info", "Generators, derived names and relators");
    std::string group_name;
    g_info->add_option("name", group_name, "P or S")->required()->check(CLI::IsMember({"P", "S"}));

    auto* catalog = app.add_subcommand("catalog", "Catalogued elements");
    catalog->require_subcommand(1);
    auto* c_dump = catalog->add_subcommand("dump", "Dump an element as JSON");
    std::string what, dump_format = "json";
    c_dump->add_option("--what", what)->required()->check(CLI::IsMember({"alpha", "beta", "nu", "supports"}));
    c_dump->add_option("--format", dump_format)->check(CLI::IsMember({"json"}));

    auto* gen = app.add_subcommand("gensys", "Generate the bilinear system for a support pair");
    GensysOptions gopts;
    gen->add_flag("--normalize", gopts.normalize, "Append the normalization equations (default)");
    gen->add_flag("--no-normalize", gopts.no_normalize, "Omit the normalization equations");
    gen->add_option("--localize", gopts.localize, "Set u_i = 1 and invert u_j")->expected(2);
    gen->add_option("--reduce-characters", gopts.reduce, "Character pair index 0..255");
    gen->add_option("--format", gopts.format)->check(CLI::IsMember({"json", "msolve", "singular"}));
    gen->add_option("--char", gopts.characteristic, "0 or a prime");
    gen->add_option("--out", gopts.out, "Write the export here");
    gen->add_option("--supports", gopts.supports, "Supports JSON file");

    auto* search = app.add_subcommand("search-f2", "Exhaustive unit search over F_2");
    SearchOptions sopts;
    search->add_option("--supports", sopts.supports, "Supports JSON file");
    search->add_option("--threads", sopts.threads, "Worker threads (default: GRUNIT_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    search->add_flag("--symmetric", sopts.symmetric, "Only try u fixed by a -> a^-1, b -> b^-1");

    auto* unique = app.add_subcommand("uniqueprod", "Product multiplicities and unique products");
    UniqueOptions uopts;
    unique->add_option("--supports", uopts.supports, "Supports JSON file");
    unique->add_option("--cnf", uopts.cnf, "Write the two-unique-product DIMACS formula here");
    unique->add_flag("--exhaustive", uopts.exhaustive, "Check every proper subpair directly");
    unique->add_option("--cap", uopts.cap, "Size cap for --exhaustive");

    auto* spec = app.add_subcommand("specialize", "Specialize s = t = a root of q^4 + 1 over a finite field");
    std::uint64_t spec_prime = 0;
    std::string spec_in;
    spec->add_option("--prime", spec_prime)->required();
    spec->add_option("--in", spec_in, "JSON {\"alpha\": ..., \"beta\": ...} over R");

    std::vector<const char*> raw{"grunit"};
    for (const auto& a : argv) raw.push_back(a.c_str());

    CommandResult result;
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
        if (v_theorem1->parsed()) return verify_theorem1();
        if (v_remarks->parsed()) return verify_remarks();
        if (v_nu->parsed()) return verify_nu();
        if (v_corollary->parsed()) return verify_corollary(primes);
        if (g_info->parsed()) return group_info(group_name);
        if (c_dump->parsed()) return catalog_dump(what);
        if (gen->parsed()) return gensys(gopts);
        if (search->parsed()) return search_f2(sopts);
        if (unique->parsed()) return uniqueprod(uopts);
        if (spec->parsed()) return specialize(spec_prime, spec_in);
        return {exit_usage, "", app.help()};
    } catch (const CLI::CallForHelp&) {
        // help for the innermost parsed subcommand
        const CLI::App* target = &app;
        for (bool descended = true; descended;) {
            descended = false;
            for (const auto* sub : target->get_subcommands())
                if (sub->parsed()) {
                    target = sub;
                    descended = true;
                    break;
                }
        }
        return {exit_ok, target->help(), ""};
    } catch (const CLI::ParseError& e) {
        return {exit_usage, "", std::string(e.what()) + "\nRun with --help for usage.\n"};
    } catch (const CliError& e) {
        result = {e.code(), "", std::string("error: ") + e.what() + "\n"};
    } catch (const ExportFormatError& e) {
        result = {exit_format, "", std::string("error: ") + e.what() + "\n"};
    } catch (const ResourceBoundError& e) {
        result = {exit_resource, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        result = {exit_usage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        result = {exit_usage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        result = {exit_internal, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return result;
}

}  // namespace grunit::cli
