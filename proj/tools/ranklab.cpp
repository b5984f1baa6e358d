// Command-line surface: invariants, build, rank, verify, table.
// Exit codes: 0 success, 2 domain error, 3 resource cap, 4 verification
// mismatch.

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ranklab/arith.hpp"
#include "ranklab/constructions.hpp"
#include "ranklab/crosscheck.hpp"
#include "ranklab/formulas.hpp"
#include "ranklab/groupfile.hpp"
#include "ranklab/instances.hpp"
#include "ranklab/latmod.hpp"
#include "ranklab/subgroups.hpp"

using namespace ranklab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

struct cli_exit {
    int code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw domain_error("cannot open output file: " + path);
    out << text;
}

/// Parse a builder descriptor ("xgroup l=2 a=2 r=1", "ygroup c=3 r=0",
/// "wgroup l=2 r=2", "gl d=2 p=5 l=2") into a crosscheck target.
std::optional<CrosscheckTarget> parse_descriptor(const std::string& desc) {
    std::istringstream ss(desc);
    std::string kind;
    ss >> kind;
    std::map<std::string, std::uint64_t> kv;
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) return std::nullopt;
        kv[tok.substr(0, eq)] = std::stoull(tok.substr(eq + 1));
    }
    auto need = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw domain_error("descriptor missing parameter: " + std::string(key));
        return it->second;
    };
    if (kind == "xgroup") return CrosscheckTarget::xgroup(need("l"), need("a"), need("r"));
    if (kind == "ygroup") return CrosscheckTarget::ygroup(need("c"), need("r"));
    if (kind == "wgroup") return CrosscheckTarget::wgroup(need("l"), need("r"));
    if (kind == "gl") return CrosscheckTarget::gl(need("d"), need("p"), need("l"));
    return std::nullopt;
}

// --- invariants ----------------------------------------------------------

void cmd_invariants(std::uint64_t p, std::uint64_t ell) {
    InvariantTriple t = invariants(p, ell);
    ordered_json j;
    j["p"] = t.p;
    j["ell"] = t.ell;
    j["m"] = t.m;
    j["a"] = t.a;
    if (t.c) j["c"] = *t.c;
    std::cout << j.dump() << "\n";
}

// --- rank ----------------------------------------------------------------

void cmd_rank(const std::string& path, const std::string& method, std::size_t budget,
              bool no_cache) {
    ParsedGroupFile f = parse_group(read_file(path));
    std::string target =
        !f.descriptor.empty() ? f.descriptor : (!f.spec.name.empty() ? f.spec.name : path);

    ResultCache cache;
    std::string cache_key = f.descriptor.empty() ? "" : f.descriptor + "|" + method;
    if (!no_cache && !cache_key.empty()) {
        if (auto hit = cache.lookup(cache_key)) {
            std::cout << hit->dump() << "\n";
            if (hit->value("status", "") == "Mismatch") throw cli_exit{kExitMismatch};
            return;
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    ordered_json out;
    CheckStatus status = CheckStatus::Match;

    if (method == "formula") {
        auto tgt = parse_descriptor(f.descriptor);
        if (!tgt)
            throw domain_error("rank --method formula requires a recognized descriptor "
                               "(xgroup/ygroup/wgroup/gl)");
        out["target"] = target;
        out["formula_value"] = tgt->formula();
        out["status"] = "Match";
    } else if (method == "brute") {
        out["target"] = target;
        GroupTable G = GroupTable::closure(f.spec);
        try {
            BruteRank r = rank_brute(G, budget);
            out["brute_value"] = r.value;
            ordered_json w = ordered_json::array();
            for (EltId i : r.witness) w.push_back(G.elements[i].images);
            out["witness"] = std::move(w);
            out["status"] = "Match";
        } catch (const budget_exceeded&) {
            // rank is at least d(G); report only the bound
            out["brute_lower_bound"] = d_search(G);
            out["status"] = to_string(CheckStatus::LowerBoundOnly);
            status = CheckStatus::LowerBoundOnly;
        }
    } else if (method == "both") {
        auto tgt = parse_descriptor(f.descriptor);
        if (!tgt)
            throw domain_error("rank --method both requires a recognized descriptor "
                               "(xgroup/ygroup/wgroup/gl)");
        RankReport rep = crosscheck(*tgt, budget);
        out = report_to_json(rep);
        status = rep.status;
    } else {
        throw domain_error("unknown --method '" + method + "' (brute|formula|both)");
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (!no_cache && !cache_key.empty()) cache.store(cache_key, out);
    std::cout << out.dump() << "\n";
    std::cerr << "wall_ms=" << ms << "\n";
    if (status == CheckStatus::Mismatch) {
        std::cerr << out.dump() << "\n";
        throw cli_exit{kExitMismatch};
    }
}

// --- verify suites -------------------------------------------------------

int run_crosscheck_rows(const std::vector<CrosscheckTarget>& targets, std::size_t budget) {
    int failures = 0;
    for (const auto& t : targets) {
        RankReport rep = crosscheck(t, budget);
        std::cout << report_to_json(rep).dump() << "\n";
        if (rep.status == CheckStatus::Mismatch) ++failures;
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << targets.size() << " targets, "
              << failures << " mismatches)\n";
    return failures;
}

void verify_xgroups(std::uint64_t ell, std::uint64_t amax, std::uint64_t rmax,
                    std::size_t budget) {
    std::vector<CrosscheckTarget> targets;
    for (std::uint64_t a = 1; a <= amax; ++a)
        for (std::uint64_t r = 0; r <= rmax; ++r)
            targets.push_back(CrosscheckTarget::xgroup(ell, a, r));
    if (run_crosscheck_rows(targets, budget) != 0) throw cli_exit{kExitMismatch};
}

void verify_ygroups(std::uint64_t cmax, std::uint64_t rmax, std::size_t budget) {
    std::vector<CrosscheckTarget> targets;
    for (std::uint64_t c = 3; c <= cmax; ++c)
        for (std::uint64_t r = 0; r <= rmax; ++r)
            targets.push_back(CrosscheckTarget::ygroup(c, r));
    if (run_crosscheck_rows(targets, budget) != 0) throw cli_exit{kExitMismatch};
}

void verify_gl(std::uint64_t p, std::uint64_t ell, std::uint64_t d, std::size_t budget) {
    if (run_crosscheck_rows({CrosscheckTarget::gl(d, p, ell)}, budget) != 0)
        throw cli_exit{kExitMismatch};
}

void verify_lemma_monomial(std::uint64_t ell, std::uint64_t n, std::uint32_t k,
                           std::uint64_t trials, std::uint64_t seed) {
    Lemma32Report rep = verify_lemma32(ell, n, k, trials, seed);
    ordered_json j;
    j["ell"] = rep.ell;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["bound"] = rep.bound;
    j["violations"] = rep.violations;
    j["max_observed"] = rep.max_observed;
    std::cout << j.dump() << "\n";
    std::cout << (rep.violations == 0 ? "PASS" : "FAIL") << "\n";
    if (rep.violations != 0) throw cli_exit{kExitMismatch};
}

void verify_prop_key_suite(const std::vector<std::uint64_t>& ps, std::size_t count,
                           std::uint64_t seed) {
    std::size_t failures = 0, total = 0;
    for (std::uint64_t p : ps) {
        auto instances = random_pgroup_instances(p, 2, count, seed + p);
        for (const auto& M : instances) {
            PropKeyReport rep = verify_prop_key(p, M);
            ordered_json j;
            j["name"] = M.name;
            j["p"] = p;
            j["d_group"] = rep.d_group;
            j["d_module"] = rep.d_module;
            j["rank"] = rep.rank;
            j["holds"] = rep.holds;
            std::cout << j.dump() << "\n";
            ++total;
            if (!rep.holds) ++failures;
        }
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << total << " instances, " << failures
              << " violations)\n";
    if (failures != 0) throw cli_exit{kExitMismatch};
}

std::vector<std::pair<std::string, GroupSpec>> small_corpus() {
    std::vector<std::pair<std::string, GroupSpec>> corpus;
    GroupSpec s4;
    s4.degree = 4;
    s4.generators.push_back(Perm{std::vector<std::uint32_t>{1, 0, 2, 3}});
    s4.generators.push_back(Perm{std::vector<std::uint32_t>{1, 2, 3, 0}});
    s4.name = "Sym(4)";
    corpus.emplace_back("Sym(4)", s4);

    MatrixGroupSpec gl23;
    gl23.d = 2;
    gl23.p = 3;
    gl23.k = 1;
    gl23.modulus = 3;
    gl23.name = "GL2(F3)";
    gl23.generators = {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}};
    corpus.emplace_back("GL2(F3)", matrix_to_perm(gl23));

    corpus.emplace_back("W_2(2)", iterated_wreath(2, 2));
    corpus.emplace_back("W_3(2)", iterated_wreath(2, 3));
    corpus.emplace_back("W_2(3)", iterated_wreath(3, 2));
    corpus.emplace_back("X_{2,1}(2)", xgroup(2, 2, 1));
    corpus.emplace_back("Y_{3,0}", ygroup(3, 0));
    corpus.emplace_back("S(5) image", matrix_to_perm(remark_s_group(5)));
    corpus.emplace_back("C2 x| (Z/9)^2", remark_affine(3, 2, 2, 2));
    return corpus;
}

void verify_gl_bound(std::size_t budget) {
    int failures = 0;
    auto corpus = small_corpus();
    for (const auto& [name, spec] : corpus) {
        GroupTable G = GroupTable::closure(spec);
        GLCheckDetail det = guralnick_lucchini_check(G, budget);
        ordered_json j;
        j["name"] = name;
        j["rank"] = det.rank;
        ordered_json sr = ordered_json::array();
        for (auto [l, rk] : det.sylow_ranks) sr.push_back({{"ell", l}, {"rank", rk}});
        j["sylow_ranks"] = std::move(sr);
        j["holds"] = det.holds;
        std::cout << j.dump() << "\n";
        if (!det.holds) ++failures;
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << corpus.size() << " groups)\n";
    if (failures != 0) throw cli_exit{kExitMismatch};
}

void verify_remark_examples(std::size_t budget) {
    int failures = 0;
    auto row = [&](const std::string& name, std::uint64_t got, std::uint64_t want) {
        ordered_json j;
        j["name"] = name;
        j["value"] = got;
        j["expected"] = want;
        std::cout << j.dump() << "\n";
        if (got != want) ++failures;
    };
    GroupTable S = GroupTable::closure(matrix_to_perm(remark_s_group(5)));
    row("d(S(5))", d_frattini(S, 2), 3);
    row("rk(S(5))", rank_brute(S, budget).value, thmA_rk2_bound(5, 2));
    GroupTable A = GroupTable::closure(remark_affine(3, 2, 2, 2));
    row("rk(C2 x| (Z/9)^2)", rank_brute(A, budget).value, 3);
    GroupTable D = GroupTable::closure(
        direct_product(dihedral_model(2), dihedral_model(2)));
    row("rk(D8 x D8)", rank_brute(D, budget).value, 4);
    std::cout << (failures == 0 ? "PASS" : "FAIL") << "\n";
    if (failures != 0) throw cli_exit{kExitMismatch};
}

// --- table ---------------------------------------------------------------

void cmd_table(std::vector<std::uint64_t> ps, std::vector<std::uint64_t> ells,
               std::vector<std::uint64_t> ds, const std::string& format) {
    if (ps.empty() || ells.empty() || ds.empty())
        throw domain_error("table: --p, --l and --d must each list at least one value");
    for (auto* v : {&ps, &ells, &ds}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    if (format == "csv") std::cout << "p,ell,d,value,case\n";
    for (auto p : ps)
        for (auto ell : ells)
            for (auto d : ds) {
                GlRankValue v = gl_rank_formula(p, ell, d);
                if (format == "csv") {
                    std::cout << p << "," << ell << "," << d << "," << v.value << ","
                              << v.case_tag << "\n";
                } else if (format == "structured") {
                    ordered_json j;
                    j["p"] = p;
                    j["ell"] = ell;
                    j["d"] = d;
                    j["value"] = v.value;
                    j["case"] = v.case_tag;
                    std::cout << j.dump() << "\n";
                } else {
                    throw domain_error("table: unknown format '" + format + "'");
                }
            }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ranklab: ranks of finite wreath, semidihedral and linear groups"};
    app.require_subcommand(1);

    // invariants
    std::uint64_t inv_p = 0, inv_l = 0;
    auto* inv = app.add_subcommand("invariants", "numerical invariants m, a (and c) of (p, l)");
    inv->add_option("--p", inv_p, "odd prime p (or 2 when l is odd)")->required();
    inv->add_option("--l", inv_l, "prime l")->required();

    // build
    auto* build = app.add_subcommand("build", "construct a group and write its group file");
    build->require_subcommand(1);
    build->fallthrough(); // allow --out after the family subcommand
    std::string build_out;
    build->add_option("--out", build_out, "output path (default stdout)");
    struct Builder {
        CLI::App* cmd;
        std::function<std::pair<GroupSpec, std::string>()> make;
    };
    std::vector<Builder> builders;
    std::map<std::string, std::uint64_t> bp; // shared parameter storage
    auto addb = [&](const char* name, const char* help,
                    std::vector<std::pair<const char*, const char*>> opts,
                    std::function<std::pair<GroupSpec, std::string>()> make) {
        auto* c = build->add_subcommand(name, help);
        for (auto& [flag, ohelp] : opts)
            c->add_option(std::string("--") + flag, bp[std::string(name) + "." + flag], ohelp)
                ->required();
        builders.push_back({c, std::move(make)});
    };
    auto P = [&bp](const char* cmd, const char* flag) {
        return bp.at(std::string(cmd) + "." + flag);
    };
    addb("cyclic", "cyclic group C_n", {{"n", "order"}}, [&] {
        auto n = P("cyclic", "n");
        return std::make_pair(cyclic(n), "cyclic n=" + std::to_string(n));
    });
    addb("semidihedral", "semidihedral group of order 2^(c+1)", {{"c", "depth, >= 3"}}, [&] {
        auto c = P("semidihedral", "c");
        return std::make_pair(semidihedral(c), "semidihedral c=" + std::to_string(c));
    });
    addb("iterated-wreath", "r-fold wreath power of C_l", {{"l", "prime"}, {"r", "depth"}}, [&] {
        auto l = P("iterated-wreath", "l"), r = P("iterated-wreath", "r");
        return std::make_pair(iterated_wreath(l, r),
                              "wgroup l=" + std::to_string(l) + " r=" + std::to_string(r));
    });
    addb("xgroup", "C_{l^a} wr W_r(l)", {{"l", "prime"}, {"a", ">= 1"}, {"r", "depth"}}, [&] {
        auto l = P("xgroup", "l"), a = P("xgroup", "a"), r = P("xgroup", "r");
        return std::make_pair(xgroup(l, a, r), "xgroup l=" + std::to_string(l) + " a=" +
                                                   std::to_string(a) + " r=" + std::to_string(r));
    });
    addb("ygroup", "SD_{2^(c+1)} wr W_r(2)", {{"c", ">= 3"}, {"r", "depth"}}, [&] {
        auto c = P("ygroup", "c"), r = P("ygroup", "r");
        return std::make_pair(ygroup(c, r),
                              "ygroup c=" + std::to_string(c) + " r=" + std::to_string(r));
    });
    addb("sylow-sym", "Sylow l-subgroup of Sym(n)", {{"n", "points"}, {"l", "prime"}}, [&] {
        auto n = P("sylow-sym", "n"), l = P("sylow-sym", "l");
        return std::make_pair(sylow_sym(n, l),
                              "sylowsym n=" + std::to_string(n) + " l=" + std::to_string(l));
    });
    addb("gl-sylow", "Sylow l-subgroup of GL_d(F_p), permutation image",
         {{"d", "dimension"}, {"p", "odd prime"}, {"l", "prime != p"}}, [&] {
             auto d = P("gl-sylow", "d"), p = P("gl-sylow", "p"), l = P("gl-sylow", "l");
             return std::make_pair(
                 matrix_to_perm(gl_sylow_matrix(static_cast<std::uint32_t>(d), p, l)),
                 "gl d=" + std::to_string(d) + " p=" + std::to_string(p) +
                     " l=" + std::to_string(l));
         });
    addb("remark-s", "order-16 irreducible 2-group over F_p, permutation image",
         {{"p", "prime, 1 mod 4"}}, [&] {
             auto p = P("remark-s", "p");
             return std::make_pair(matrix_to_perm(remark_s_group(p)),
                                   "remark-s p=" + std::to_string(p));
         });
    addb("remark-affine", "C_m acting by scalars on (Z/p^k)^d",
         {{"p", "prime"}, {"m", "divisor of p-1"}, {"d", "dimension"}, {"k", "precision"}}, [&] {
             auto p = P("remark-affine", "p"), m = P("remark-affine", "m"),
                  d = P("remark-affine", "d"), k = P("remark-affine", "k");
             return std::make_pair(remark_affine(p, m, d, k),
                                   "remark-affine p=" + std::to_string(p) + " m=" +
                                       std::to_string(m) + " d=" + std::to_string(d) +
                                       " k=" + std::to_string(k));
         });
    addb("dihedral", "C_2 acting by inversion on Z/2^k", {{"k", "precision, >= 2"}}, [&] {
        auto k = P("dihedral", "k");
        return std::make_pair(dihedral_model(k), "dihedral k=" + std::to_string(k));
    });

    // rank
    std::string rank_file, rank_method = "both";
    std::size_t rank_budget = kDefaultClassBudget;
    bool rank_no_cache = false;
    auto* rank = app.add_subcommand("rank", "rank of a group file, by formula and/or search");
    rank->add_option("file", rank_file, "group file path")->required();
    rank->add_option("--method", rank_method, "brute | formula | both (default both)");
    rank->add_option("--budget", rank_budget, "subgroup class budget");
    rank->add_flag("--no-cache", rank_no_cache, "bypass the result cache");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->require_subcommand(1);
    std::uint64_t v_l = 2, v_amax = 2, v_rmax = 1, v_cmax = 3, v_p = 5, v_d = 2, v_n = 2,
                  v_trials = 200, v_seed = 7;
    std::uint32_t v_k = 2;
    std::size_t v_budget = kDefaultClassBudget, v_count = 25;
    std::vector<std::uint64_t> v_ps{3, 5};
    auto* vx = verify->add_subcommand("xgroups", "formula vs search over an xgroup grid");
    vx->add_option("--l", v_l, "prime l");
    vx->add_option("--amax", v_amax, "max a");
    vx->add_option("--rmax", v_rmax, "max r");
    vx->add_option("--budget", v_budget, "class budget");
    auto* vy = verify->add_subcommand("ygroups", "formula vs search over a ygroup grid");
    vy->add_option("--cmax", v_cmax, "max c");
    vy->add_option("--rmax", v_rmax, "max r");
    vy->add_option("--budget", v_budget, "class budget");
    auto* vgl = verify->add_subcommand("gl", "formula vs search for a GL Sylow subgroup");
    vgl->add_option("--p", v_p, "odd prime p");
    vgl->add_option("--l", v_l, "prime l != p");
    vgl->add_option("--d", v_d, "dimension");
    vgl->add_option("--budget", v_budget, "class budget");
    auto* vlm = verify->add_subcommand("lemma-monomial",
                                       "generator-count bound for monomial cyclic actions");
    vlm->add_option("--l", v_l, "prime l");
    vlm->add_option("--n", v_n, "module rank, multiple of l");
    vlm->add_option("--k", v_k, "precision");
    vlm->add_option("--trials", v_trials, "number of seeded trials");
    vlm->add_option("--seed", v_seed, "master seed");
    auto* vpk = verify->add_subcommand("prop-key",
                                       "d(G) + d_RG(M) <= rank(M) on random p-group instances");
    vpk->add_option("--p", v_ps, "primes to test")->expected(-1);
    vpk->add_option("--count", v_count, "instances per prime");
    vpk->add_option("--seed", v_seed, "master seed");
    auto* vgb = verify->add_subcommand("gl-bound", "rk(G) <= max_l rk_l(G) + 1 on the corpus");
    vgb->add_option("--budget", v_budget, "class budget");
    auto* vre = verify->add_subcommand("remark-examples", "known-value spot checks");
    vre->add_option("--budget", v_budget, "class budget");

    // table
    std::vector<std::uint64_t> t_ps, t_ls, t_ds;
    std::string t_format = "csv";
    auto* table = app.add_subcommand("table", "tabulate rk_l(GL_d(F_p)) over a grid");
    table->add_option("--p", t_ps, "primes p")->required()->expected(-1);
    table->add_option("--l", t_ls, "primes l")->required()->expected(-1);
    table->add_option("--d", t_ds, "dimensions d")->required()->expected(-1);
    table->add_option("--format", t_format, "csv | structured (default csv)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) cmd_invariants(inv_p, inv_l);
        for (auto& b : builders)
            if (*b.cmd) {
                auto [spec, desc] = b.make();
                write_output(build_out, serialize_group(spec, desc));
            }
        if (*rank) cmd_rank(rank_file, rank_method, rank_budget, rank_no_cache);
        if (*vx) verify_xgroups(v_l, v_amax, v_rmax, v_budget);
        if (*vy) verify_ygroups(v_cmax, v_rmax, v_budget);
        if (*vgl) verify_gl(v_p, v_l, v_d, v_budget);
        if (*vlm) verify_lemma_monomial(v_l, v_n, v_k, v_trials, v_seed);
        if (*vpk) verify_prop_key_suite(v_ps, v_count, v_seed);
        if (*vgb) verify_gl_bound(v_budget);
        if (*vre) verify_remark_examples(v_budget);
        if (*table) cmd_table(t_ps, t_ls, t_ds, t_format);
    } catch (const cli_exit& e) {
        return e.code;
    } catch (const cap_exceeded& e) {
        std::cerr << "error (cap): " << e.what() << "\n";
        return kExitCap;
    } catch (const budget_exceeded& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return kExitCap;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
