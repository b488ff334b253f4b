// rampw: ramp secret sharing schemes from nested code pairs, their weight
// hierarchies and thresholds, semigroup bounds for one-point codes, exact
// subspace counting, and asymptotic bound evaluation.
//
// Exit codes: 0 ok, 2 usage or validation, 3 file I/O, 4 enumeration budget
// exceeded, 5 theorem hypothesis violated.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rampw/ag_codes.hpp"
#include "rampw/asymptotic.hpp"
#include "rampw/counting.hpp"
#include "rampw/errors.hpp"
#include "rampw/scheme.hpp"
#include "rampw/semigroup.hpp"
#include "rampw/weight_oracle.hpp"

using namespace rampw;

namespace {

uint64_t env_budget(uint64_t fallback) {
    if (const char* env = std::getenv("RAMPW_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::stringstream item(token);
        long v;
        while (item >> v) out.push_back(v);
    }
    return out;
}

std::vector<uint8_t> parse_vector(const std::string& text, unsigned q, const char* what) {
    std::vector<uint8_t> out;
    for (long v : parse_int_list(text)) {
        if (v < 0 || unsigned(v) >= q)
            throw std::invalid_argument(std::string(what) + ": element out of [0, q)");
        out.push_back(uint8_t(v));
    }
    return out;
}

// 1-based index list from the CLI to 0-based positions
std::vector<size_t> parse_index_set(const std::string& text, size_t n) {
    std::vector<size_t> out;
    for (long v : parse_int_list(text)) {
        if (v < 1 || size_t(v) > n)
            throw std::invalid_argument("index set: positions are 1-based and must be <= n");
        out.push_back(size_t(v - 1));
    }
    return out;
}

SweepGrid parse_grid(const std::string& text) {
    SweepGrid g;
    char c1 = 0, c2 = 0;
    std::stringstream ss(text);
    if (!(ss >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("grid: expected lo:hi:step");
    return g;
}

std::string real12(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

NestedCodePair load_pair(const std::string& c1_path, const std::string& c2_path) {
    return make_pair(read_code_file(c1_path), read_code_file(c2_path));
}

int dispatch(int argc, char** argv) {
    CLI::App app{"ramp secret sharing scheme workbench"};
    app.require_subcommand(1);

    // --- weight oracles -----------------------------------------------------
    std::string code_path, c1_path, c2_path, m_list, d_list, set_list, values_list;
    uint64_t budget = env_budget(kDefaultSubspaceBudget);

    auto* ghw_cmd = app.add_subcommand("ghw", "generalized Hamming weights by brute force");
    ghw_cmd->add_option("--code", code_path, "code file")->required();
    ghw_cmd->add_option("--m", m_list, "weight indices, comma separated")->required();
    ghw_cmd->add_option("--budget", budget, "enumeration budget");
    ghw_cmd->callback([&] {
        LinearCode c = read_code_file(code_path);
        for (long m : parse_int_list(m_list)) {
            if (m < 1) throw std::invalid_argument("ghw: m must be >= 1");
            std::cout << ghw_bruteforce(c, size_t(m), budget) << '\n';
        }
    });

    auto* rghw_cmd = app.add_subcommand("rghw", "relative generalized Hamming weights");
    rghw_cmd->add_option("--c1", c1_path, "outer code file")->required();
    rghw_cmd->add_option("--c2", c2_path, "subcode file")->required();
    rghw_cmd->add_option("--m", m_list, "weight indices")->required();
    rghw_cmd->add_option("--budget", budget, "enumeration budget");
    rghw_cmd->callback([&] {
        auto pair = load_pair(c1_path, c2_path);
        for (long m : parse_int_list(m_list)) {
            if (m < 1) throw std::invalid_argument("rghw: m must be >= 1");
            std::cout << rghw_bruteforce(pair, size_t(m), budget) << '\n';
        }
    });

    auto* rdlp_cmd = app.add_subcommand("rdlp", "relative dimension/length profile");
    rdlp_cmd->add_option("--c1", c1_path, "outer code file")->required();
    rdlp_cmd->add_option("--c2", c2_path, "subcode file")->required();
    rdlp_cmd->add_option("--d", d_list, "set sizes")->required();
    rdlp_cmd->callback([&] {
        auto pair = load_pair(c1_path, c2_path);
        for (long d : parse_int_list(d_list)) {
            if (d < 1) throw std::invalid_argument("rdlp: d must be >= 1");
            std::cout << rdlp(pair, size_t(d)) << '\n';
        }
    });

    // --- scheme verbs -------------------------------------------------------
    bool verify = false;
    auto* thr_cmd = app.add_subcommand("thresholds", "privacy/reconstruction thresholds");
    thr_cmd->add_option("--c1", c1_path)->required();
    thr_cmd->add_option("--c2", c2_path)->required();
    thr_cmd->add_flag("--verify", verify, "cross-check against exhaustive mutual information");
    thr_cmd->add_option("--budget", budget, "enumeration budget");
    thr_cmd->callback([&] {
        auto scheme = build_scheme(load_pair(c1_path, c2_path));
        auto profile = thresholds(scheme, budget);
        std::cout << "t:";
        for (int t : profile.t) std::cout << ' ' << t;
        std::cout << "\nr:";
        for (int r : profile.r) std::cout << ' ' << r;
        std::cout << '\n';
        if (verify) {
            auto by_def = thresholds_by_definition(scheme, budget);
            if (by_def.t != profile.t || by_def.r != profile.r)
                throw std::logic_error("threshold verification failed");
            std::cout << "verified\n";
        }
    });

    auto* mi_cmd = app.add_subcommand("mi", "mutual information of a share set, in q-bits");
    mi_cmd->add_option("--c1", c1_path)->required();
    mi_cmd->add_option("--c2", c2_path)->required();
    mi_cmd->add_option("--set", set_list, "share positions (1-based)");
    mi_cmd->add_option("--budget", budget, "enumeration budget");
    mi_cmd->callback([&] {
        auto scheme = build_scheme(load_pair(c1_path, c2_path));
        auto I = parse_index_set(set_list, scheme.n());
        std::cout << real12(mutual_information_exhaustive(scheme, I, budget)) << '\n';
    });

    std::string secret_text, rand_text, rand_coeff_text;
    uint64_t seed = 0;
    auto* share_cmd = app.add_subcommand("share", "split a secret into shares");
    share_cmd->add_option("--c1", c1_path)->required();
    share_cmd->add_option("--c2", c2_path)->required();
    share_cmd->add_option("--secret", secret_text, "secret, ell elements")->required();
    auto* rand_opt = share_cmd->add_option("--rand", rand_text, "randomness codeword of C2");
    auto* coeff_opt =
        share_cmd->add_option("--rand-coeffs", rand_coeff_text, "randomness coefficients, k2 elements");
    auto* seed_opt = share_cmd->add_option("--seed", seed, "derive randomness from a seed");
    rand_opt->excludes(coeff_opt)->excludes(seed_opt);
    coeff_opt->excludes(seed_opt);
    share_cmd->callback([&] {
        auto scheme = build_scheme(load_pair(c1_path, c2_path));
        unsigned q = scheme.pair.c1.field()->q();
        auto secret = parse_vector(secret_text, q, "secret");
        std::vector<uint8_t> out;
        if (!rand_text.empty()) {
            out = share(scheme, secret, parse_vector(rand_text, q, "rand"));
        } else if (!rand_coeff_text.empty()) {
            out = share_with_coeffs(scheme, secret, parse_vector(rand_coeff_text, q, "rand-coeffs"));
        } else {
            // deterministic coefficients from the seed
            std::vector<uint8_t> coeffs(scheme.k2());
            uint64_t state = seed;
            for (auto& c : coeffs) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                c = uint8_t((state >> 33) % q);
            }
            out = share_with_coeffs(scheme, secret, coeffs);
        }
        for (size_t i = 0; i < out.size(); ++i) std::cout << (i ? " " : "") << unsigned(out[i]);
        std::cout << '\n';
    });

    auto* rec_cmd = app.add_subcommand("reconstruct", "recover the secret from shares");
    rec_cmd->add_option("--c1", c1_path)->required();
    rec_cmd->add_option("--c2", c2_path)->required();
    rec_cmd->add_option("--set", set_list, "share positions (1-based)")->required();
    rec_cmd->add_option("--values", values_list, "share values at those positions")->required();
    rec_cmd->callback([&] {
        auto scheme = build_scheme(load_pair(c1_path, c2_path));
        auto I = parse_index_set(set_list, scheme.n());
        auto values = parse_vector(values_list, scheme.pair.c1.field()->q(), "values");
        auto rec = reconstruct(scheme, I, values);
        if (rec.unique) {
            std::cout << "secret:";
            for (uint8_t s : rec.secret) std::cout << ' ' << unsigned(s);
            std::cout << '\n';
        } else {
            std::cout << "underdetermined known_qbits=" << rec.known_qbits
                      << " free_dims=" << rec.candidate_directions.rows() << '\n';
        }
    });

    // --- semigroup bounds ---------------------------------------------------
    std::string gens_text;
    long mu1 = 0, mu2 = -1, bound_n = 0;
    long bound_m = 1;
    bool dual_side = false;
    uint64_t tuple_budget = env_budget(1'000'000);
    auto* sg_cmd = app.add_subcommand("semigroup-bound", "weight bounds for one-point codes");
    sg_cmd->add_option("--gens", gens_text, "semigroup generators, e.g. 2,3")->required();
    sg_cmd->add_option("--mu1", mu1, "outer pole-order cap")->required();
    sg_cmd->add_option("--mu2", mu2, "inner pole-order cap (-1 for the zero code)");
    sg_cmd->add_option("--n", bound_n, "code length")->required();
    sg_cmd->add_option("--m", bound_m, "weight index")->required();
    sg_cmd->add_flag("--dual", dual_side, "bound the dual pair instead");
    sg_cmd->add_option("--budget", tuple_budget, "tuple search budget");
    sg_cmd->callback([&] {
        auto h = NumericalSemigroup::from_generators(parse_int_list(gens_text));
        const long g = h.genus();
        if (bound_m < 1) throw std::invalid_argument("semigroup-bound: m must be >= 1");
        auto count_below = [&](long mu) {
            long k = 0;
            for (long x = 0; x <= mu; ++x)
                if (h.contains(x)) ++k;
            return k;
        };
        int best = 0;
        std::string source;
        auto consider = [&](int value, const char* tag) {
            if (source.empty() || value > best) {
                best = value;
                source = tag;
            }
        };
        if (!dual_side) {
            long k1 = count_below(std::min(mu1, bound_n - 1));
            consider(theorem44_primary_bound(h, mu1, mu2, bound_n, int(bound_m), tuple_budget),
                     "shift-tuple");
            if (int(bound_m) <= std::min(k1, g) && mu1 < bound_n)
                consider(prop45_bound(int(bound_n), int(k1), int(bound_m), h), "gap-count");
            if (bound_m <= k1)
                consider(goppa_ghw_bound(int(bound_n), int(k1), int(g), int(bound_m)).value,
                         "genus");
        } else {
            long k2 = count_below(std::min(mu2, bound_n - 1));
            long k_perp = bound_n - k2;
            consider(theorem44_dual_bound(h, mu1, mu2, int(bound_m), tuple_budget), "shift-tuple");
            if (int(bound_m) <= std::min(k_perp, g) && mu2 > 2 * g - 2)
                consider(prop46_bound(int(bound_n), int(k_perp), int(bound_m), mu2, h),
                         "gap-count");
            if (bound_m <= k_perp)
                consider(goppa_ghw_bound(int(bound_n), int(k_perp), int(g), int(bound_m)).value,
                         "genus");
        }
        std::cout << "bound=" << best << " source=" << source << '\n';
    });

    // --- code constructions -------------------------------------------------
    unsigned her_q0 = 2;
    long her_mu = 0;
    std::string out_path;
    auto* her_cmd = app.add_subcommand("hermitian", "one-point Hermitian code");
    her_cmd->add_option("--q0", her_q0, "2 or 3")->required();
    her_cmd->add_option("--mu", her_mu, "pole-order cap")->required();
    her_cmd->add_option("--out", out_path, "output code file");
    her_cmd->callback([&] {
        auto code = hermitian_code(her_q0, her_mu);
        if (!out_path.empty()) write_code_file(out_path, code.code);
        std::cout << "q=" << code.code.field()->q() << " n=" << code.code.n()
                  << " k=" << code.code.k() << '\n';
    });

    unsigned rs_q = 0;
    size_t rs_n = 0, rs_k = 0;
    std::string rs_points;
    auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon code");
    rs_cmd->add_option("--q", rs_q)->required();
    rs_cmd->add_option("--n", rs_n)->required();
    rs_cmd->add_option("--k", rs_k)->required();
    rs_cmd->add_option("--points", rs_points, "evaluation points (default 0..n-1)");
    rs_cmd->add_option("--out", out_path, "output code file");
    rs_cmd->callback([&] {
        std::vector<uint8_t> points;
        if (rs_points.empty())
            for (size_t i = 0; i < rs_n; ++i) points.push_back(uint8_t(i));
        else
            points = parse_vector(rs_points, rs_q, "points");
        auto code = reed_solomon(rs_q, rs_n, rs_k, points);
        if (!out_path.empty()) write_code_file(out_path, code.code);
        std::cout << "q=" << rs_q << " n=" << rs_n << " k=" << code.code.k() << '\n';
    });

    unsigned gs_q = 0;
    int gs_i = 1;
    auto* gs_cmd = app.add_subcommand("gs-params", "tower level parameters");
    gs_cmd->add_option("--q", gs_q, "perfect square")->required();
    gs_cmd->add_option("--i", gs_i, "tower level")->required();
    gs_cmd->callback([&] {
        auto p = gs_tower_params(gs_q, gs_i);
        std::cout << "g=" << p.genus << " c=" << p.conductor << " N>" << p.n_places_lower << '\n';
    });

    // --- exact counting -----------------------------------------------------
    long cw = 0, cu = 0, cv = 0, ca = 0, cn = 0, ck1 = 0, ck2 = 0, cd = 0, cs = 0, cq = 0;
    auto* counts_cmd = app.add_subcommand("counts", "exact subspace counts");
    counts_cmd->require_subcommand(1);
    auto* n1_cmd = counts_cmd->add_subcommand("n1", "subspaces of a given dimension");
    n1_cmd->add_option("--w", cw)->required();
    n1_cmd->add_option("--u", cu)->required();
    n1_cmd->add_option("--q", cq)->required();
    n1_cmd->callback([&] { std::cout << n1(cw, cu, cq).str() << '\n'; });
    auto* n2_cmd = counts_cmd->add_subcommand("n2", "subspaces meeting a fixed one trivially");
    n2_cmd->add_option("--w", cw)->required();
    n2_cmd->add_option("--u", cu)->required();
    n2_cmd->add_option("--v", cv)->required();
    n2_cmd->add_option("--q", cq)->required();
    n2_cmd->callback([&] { std::cout << n2(cw, cu, cv, cq).str() << '\n'; });
    auto* n3_cmd = counts_cmd->add_subcommand("n3", "subspaces with a fixed intersection dimension");
    n3_cmd->add_option("--w", cw)->required();
    n3_cmd->add_option("--u", cu)->required();
    n3_cmd->add_option("--v", cv)->required();
    n3_cmd->add_option("--a", ca)->required();
    n3_cmd->add_option("--q", cq)->required();
    n3_cmd->callback([&] { std::cout << n3(cw, cu, cv, ca, cq).str() << '\n'; });
    auto* n4_cmd = counts_cmd->add_subcommand("n4", "nested pairs with a fixed profile at one set");
    n4_cmd->add_option("--n", cn)->required();
    n4_cmd->add_option("--k1", ck1)->required();
    n4_cmd->add_option("--k2", ck2)->required();
    n4_cmd->add_option("--d", cd)->required();
    n4_cmd->add_option("--s", cs)->required();
    n4_cmd->add_option("--q", cq)->required();
    n4_cmd->callback([&] { std::cout << n4(cn, ck1, ck2, cd, cs, cq).str() << '\n'; });

    ExistenceQuery query{};
    auto* ex_cmd = app.add_subcommand("existence", "counting certificate for a good pair");
    ex_cmd->add_option("--n", query.n)->required();
    ex_cmd->add_option("--k1", query.k1)->required();
    ex_cmd->add_option("--k2", query.k2)->required();
    ex_cmd->add_option("--d", query.d)->required();
    ex_cmd->add_option("--dperp", query.d_perp)->required();
    ex_cmd->add_option("--s", query.s)->required();
    ex_cmd->add_option("--sperp", query.s_perp)->required();
    ex_cmd->add_option("--q", query.q)->required();
    ex_cmd->callback([&] {
        auto r = ryu3_check(query);
        std::cout << "holds=" << (r.holds ? "true" : "false") << '\n'
                  << "lhs=" << r.lhs.str() << '\n'
                  << "rhs=" << r.rhs.str() << '\n';
    });

    double fr1 = 0, fr2 = 0, fdelta = 0, fdelta_perp = 0, ftau = 0, ftau_perp = 0;
    long fq = 2, fn_max = 64;
    auto* feas_cmd = app.add_subcommand("feasible", "rate-condition check plus exact scan");
    feas_cmd->add_option("--r1", fr1)->required();
    feas_cmd->add_option("--r2", fr2)->required();
    feas_cmd->add_option("--delta", fdelta)->required();
    feas_cmd->add_option("--deltaperp", fdelta_perp)->required();
    feas_cmd->add_option("--tau", ftau)->required();
    feas_cmd->add_option("--tauperp", ftau_perp)->required();
    feas_cmd->add_option("--q", fq)->required();
    feas_cmd->add_option("--nmax", fn_max);
    feas_cmd->callback([&] {
        auto r = theorem37_feasible(fr1, fr2, fdelta, fdelta_perp, ftau, ftau_perp, fq, fn_max);
        std::cout << "conditions=" << (r.conditions_hold ? "true" : "false") << " smallest_n=";
        if (r.smallest_n)
            std::cout << *r.smallest_n << '\n';
        else
            std::cout << "none\n";
    });

    // --- asymptotics ----------------------------------------------------------
    unsigned aq = 0;
    std::string r_grid_text, rho_grid_text, v_grid_text = "0:0:1", sweep_out;
    double a_override_value = 0.0;
    auto* sweep_cmd = app.add_subcommand("asymptotic-sweep", "CSV of all bounds over a grid");
    sweep_cmd->add_option("--q", aq)->required();
    sweep_cmd->add_option("--r", r_grid_text, "R grid lo:hi:step")->required();
    sweep_cmd->add_option("--rho", rho_grid_text, "rho grid lo:hi:step")->required();
    sweep_cmd->add_option("--v", v_grid_text, "V grid lo:hi:step (default single 0)");
    auto* aq_opt = sweep_cmd->add_option("--aq", a_override_value, "A(q) for non-square q");
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
    sweep_cmd->callback([&] {
        std::ofstream os(sweep_out);
        if (!os) throw IoError("cannot write " + sweep_out);
        std::optional<double> a_override;
        if (aq_opt->count()) a_override = a_override_value;
        sweep_csv(os, aq, parse_grid(r_grid_text), parse_grid(rho_grid_text),
                  parse_grid(v_grid_text), a_override);
        std::cout << "wrote " << sweep_out << '\n';
    });

    double comp_r = 0.5;
    auto* comp_cmd = app.add_subcommand("compare-regions", "where each bound wins");
    comp_cmd->add_option("--q", aq)->required();
    comp_cmd->add_option("--r", comp_r, "rate R (default 0.5)");
    comp_cmd->callback([&] {
        auto p61 = comparison_prop61(aq, comp_r);
        std::cout << "rho_lo=" << real12(p61.lo) << " rho_hi=" << real12(p61.hi)
                  << " length=" << rational_str(p61.exact_length) << '\n';
        auto p62 = comparison_prop62(aq, comp_r);
        std::cout << "v_lo=" << real12(p62.v_lo) << " v_hi=" << real12(p62.v_hi)
                  << " min_v_length=" << rational_str(p62.exact_min_v_length) << '\n';
    });

    int fp_thm = 1;
    double fp_r1 = 0, fp_r2 = 0, fp_eps = 0, fp_eps2 = -1, fp_v = 0;
    auto* fp_cmd = app.add_subcommand("final-params", "deficiencies of the four constructions");
    fp_cmd->add_option("--thm", fp_thm, "theorem 1..4")->required();
    fp_cmd->add_option("--r1", fp_r1)->required();
    fp_cmd->add_option("--r2", fp_r2)->required();
    fp_cmd->add_option("--q", aq)->required();
    fp_cmd->add_option("--eps", fp_eps, "defect")->required();
    fp_cmd->add_option("--eps2", fp_eps2, "second defect (theorem 2)");
    auto* fp_v_opt = fp_cmd->add_option("--v", fp_v, "V (theorem 4)");
    auto* fp_aq_opt = fp_cmd->add_option("--aq", a_override_value, "A(q) for non-square q");
    fp_cmd->callback([&] {
        std::optional<double> v, a_override;
        if (fp_v_opt->count()) v = fp_v;
        if (fp_aq_opt->count()) a_override = a_override_value;
        double eps2 = fp_eps2 < 0 ? fp_eps : fp_eps2;
        auto fp = final_params(fp_thm, aq, fp_r1, fp_r2, fp_eps, eps2, v, a_override);
        std::cout << "lambda1=" << real12(fp.lambda1) << " lambda2=" << real12(fp.lambda2) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
