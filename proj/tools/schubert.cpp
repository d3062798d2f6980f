// Command-line front end: every engine operation behind a subcommand, JSON on
// stdout, budgets from an optional config file (SCHUBERT_CONFIG or --config).
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schubert/config.hpp"
#include "schubert/curvature.hpp"
#include "schubert/errors.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/json_io.hpp"
#include "schubert/lambda_ring.hpp"
#include "schubert/schur_functor.hpp"
#include "schubert/schur_ring.hpp"
#include "schubert/verify.hpp"
#include "schubert/version.hpp"

namespace {

using nlohmann::json;
using namespace schubert;

struct Options {
    bool pretty = false;
    std::string config_path;
    Budget budget;
};

void emit(const json& j, const Options& opts) {
    if (opts.pretty) std::cout << j.dump(2) << "\n";
    else std::cout << j.dump() << "\n";
}

json load_json_document(const std::string& arg) {
    std::string text = arg;
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw input_error("cannot open file '" + arg.substr(1) + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

RationalMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed matrix JSON: ") + e.what());
    }
    return rational_matrix_from_json(j);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact engine for Grassmannian structure constants: Schubert calculus,"
                 " Schur functors, lambda-ring Chern classes, and curvature forms"};
    app.set_version_flag("--version", std::string(engine_version));
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--pretty", opts.pretty, "indent JSON output");
    app.add_option("--config", opts.config_path, "budget config file (overrides SCHUBERT_CONFIG)");

    // mult
    std::string mult_la, mult_mu;
    std::vector<int> mult_rect;
    bool mult_sp = false;
    auto* mult = app.add_subcommand("mult", "product in the Schur / Schubert basis");
    mult->add_option("lambda", mult_la, "first partition, e.g. 2,1")->required();
    mult->add_option("mu", mult_mu, "second partition")->required();
    mult->add_option("--rect", mult_rect, "truncate in G(m,n)")->expected(2);
    mult->add_flag("--sp", mult_sp, "degree-doubled quaternionic classes");

    // lr
    std::string lr_la, lr_mu, lr_nu;
    auto* lr = app.add_subcommand("lr", "a single Littlewood-Richardson coefficient");
    lr->add_option("lambda", lr_la)->required();
    lr->add_option("mu", lr_mu)->required();
    lr->add_option("nu", lr_nu)->required();

    // pieri
    std::string pieri_la;
    int pieri_k = 1;
    auto* pieri_cmd = app.add_subcommand("pieri", "multiply by a special class");
    pieri_cmd->add_option("lambda", pieri_la)->required();
    pieri_cmd->add_option("k", pieri_k, "weight of the special class")->required();

    // giambelli
    std::string gia_la;
    auto* gia = app.add_subcommand("giambelli", "determinant expansion in special classes");
    gia->add_option("lambda", gia_la)->required();

    // rho
    std::string rho_arg;
    std::vector<int> rho_rect;
    auto* rho_cmd = app.add_subcommand("rho", "push a Schur combination into H*(G(m,n))");
    rho_cmd->add_option("combination", rho_arg, "SchurCombination JSON, @file, or - for stdin")->required();
    rho_cmd->add_option("--rect", rho_rect, "target Grassmannian")->expected(2)->required();

    // betti
    int betti_m = 0, betti_n = 0, betti_k = -1;
    auto* betti = app.add_subcommand("betti", "Betti numbers of G(m,n)");
    betti->add_option("m", betti_m)->required();
    betti->add_option("n", betti_n)->required();
    betti->add_option("k", betti_k, "single codimension (all when omitted)");

    // schur-matrix
    std::string sm_la, sm_file;
    auto* sm = app.add_subcommand("schur-matrix", "Schur matrix of a rational matrix");
    sm->add_option("lambda", sm_la)->required();
    sm->add_option("matrix-file", sm_file, "JSON array of arrays, entries integer or p/q")->required();

    // trace
    std::string tr_la, tr_file;
    auto* tr = app.add_subcommand("trace", "character trace without building the tensor space");
    tr->add_option("lambda", tr_la)->required();
    tr->add_option("matrix-file", tr_file)->required();

    // exterior
    int ext_k = 1;
    std::string ext_file;
    auto* ext = app.add_subcommand("exterior", "compound matrix of k x k minors");
    ext->add_option("k", ext_k)->required();
    ext->add_option("matrix-file", ext_file)->required();

    // chern
    int chern_k = 1, chern_rank = 0, chern_sympl = 0;
    std::string chern_element;
    auto* chern = app.add_subcommand("chern", "Chern class in gr R(T)");
    chern->add_option("k", chern_k)->required();
    auto* opt_rank = chern->add_option("--rank", chern_rank, "standard character of this rank");
    auto* opt_sympl = chern->add_option("--symplectic", chern_sympl, "symplectic standard character");
    auto* opt_elem = chern->add_option("--element", chern_element, "TorusElement JSON, @file, or -");
    opt_rank->excludes(opt_sympl)->excludes(opt_elem);
    opt_sympl->excludes(opt_elem);

    // forms
    std::string forms_la, forms_mu;
    int forms_m = 0, forms_n = 0;
    bool forms_monomials = false;
    auto* forms = app.add_subcommand("forms", "decompose a product of Schubert forms");
    forms->add_option("lambda", forms_la)->required();
    forms->add_option("mu", forms_mu)->required();
    forms->add_option("m", forms_m)->required();
    forms->add_option("n", forms_n)->required();
    forms->add_flag("--monomials", forms_monomials, "dump the exterior monomials of the product");

    // verify
    std::string verify_suite;
    int verify_weight = -1;
    std::vector<int> verify_shape;
    unsigned verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", verify_suite, "theorem|oracle|forms|lambda|symmetrizer|all")->required();
    verify->add_option("--max-weight", verify_weight, "partition weight bound");
    verify->add_option("--max-shape", verify_shape, "shape bound m n")->expected(2);
    verify->add_option("--seed", verify_seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opts.config_path.empty()) {
        if (const char* env = std::getenv("SCHUBERT_CONFIG")) opts.config_path = env;
    }
    if (!opts.config_path.empty()) opts.budget = parse_budget_file(opts.config_path);

    if (*mult) {
        Partition la = Partition::parse(mult_la), mu = Partition::parse(mult_mu);
        if (mult_rect.empty()) {
            if (mult_sp) throw input_error("--sp needs --rect");
            emit(to_json(schur_multiply(la, mu)), opts);
        } else {
            GrassmannianShape shape{mult_rect[0], mult_rect[1]};
            emit(to_json(mult_sp ? sp_product(la, mu, shape) : schubert_product(la, mu, shape)), opts);
        }
    } else if (*lr) {
        long long c = lr_coefficient(Partition::parse(lr_la), Partition::parse(lr_mu), Partition::parse(lr_nu));
        emit(json{{"coefficient", c}}, opts);
    } else if (*pieri_cmd) {
        if (pieri_k < 1) throw input_error("pieri needs k >= 1");
        emit(to_json(pieri(Partition::parse(pieri_la), pieri_k)), opts);
    } else if (*gia) {
        emit(to_json(giambelli(Partition::parse(gia_la))), opts);
    } else if (*rho_cmd) {
        SchurCombination c = schur_combination_from_json(load_json_document(rho_arg));
        emit(to_json(rho(c, GrassmannianShape{rho_rect[0], rho_rect[1]})), opts);
    } else if (*betti) {
        if (betti_m < 1 || betti_n < 1) throw input_error("betti needs m,n >= 1");
        GrassmannianShape shape{betti_m, betti_n};
        if (betti_k >= 0) {
            emit(json{{"m", betti_m}, {"n", betti_n}, {"k", betti_k}, {"betti", betti_number(shape, betti_k)}},
                 opts);
        } else {
            json all = json::array();
            for (int k = 0; k <= shape.capacity(); ++k) all.push_back(betti_number(shape, k));
            emit(json{{"m", betti_m}, {"n", betti_n}, {"betti", all}}, opts);
        }
    } else if (*sm) {
        RationalMatrix a = load_matrix(sm_file);
        RationalMatrix s = schur_matrix(Partition::parse(sm_la), a, opts.budget);
        emit(json{{"matrix", to_json(s)}, {"order", s.rows()}, {"trace", rational_to_json(s.trace())}}, opts);
    } else if (*tr) {
        mpq_class t = schur_trace(Partition::parse(tr_la), load_matrix(tr_file), opts.budget);
        emit(json{{"trace", rational_to_json(t)}}, opts);
    } else if (*ext) {
        RationalMatrix e = exterior_matrix(ext_k, load_matrix(ext_file));
        emit(json{{"matrix", to_json(e)}, {"order", e.rows()}, {"trace", rational_to_json(e.trace())}}, opts);
    } else if (*chern) {
        if (chern_k < 1) throw input_error("chern needs k >= 1");
        TorusElement x(1);
        if (opt_rank->count()) {
            if (chern_rank < 1) throw input_error("--rank must be positive");
            x = standard_character(chern_rank);
        } else if (opt_sympl->count()) {
            if (chern_sympl < 1) throw input_error("--symplectic must be positive");
            x = symplectic_standard_character(chern_sympl);
        } else if (opt_elem->count()) {
            x = laurent_from_json(load_json_document(chern_element));
        } else {
            throw input_error("chern needs one of --rank, --symplectic, --element");
        }
        emit(to_json(chern_class(chern_k, x, opts.budget)), opts);
    } else if (*forms) {
        Partition la = Partition::parse(forms_la), mu = Partition::parse(forms_mu);
        if (forms_m < 1 || forms_n < 1) throw input_error("forms needs m,n >= 1");
        json out;
        out["lambda"] = la.to_string();
        out["mu"] = mu.to_string();
        out["m"] = forms_m;
        out["n"] = forms_n;
        out["decomposition"] = to_json(wedge_decompose(la, mu, forms_m, forms_n, opts.budget));
        if (forms_monomials) {
            GrassmannElement product = schubert_form(la, forms_m, forms_n, opts.budget) *
                                       schubert_form(mu, forms_m, forms_n, opts.budget);
            json monos = json::object();
            for (const auto& [mask, c] : product.terms()) monos[product.monomial_name(mask)] = rational_to_json(c);
            out["monomials"] = monos;
        }
        emit(out, opts);
    } else if (*verify) {
        VerifyOptions vopts;
        vopts.max_weight = verify_weight;
        if (!verify_shape.empty()) {
            vopts.max_m = verify_shape[0];
            vopts.max_n = verify_shape[1];
        }
        vopts.seed = verify_seed;
        vopts.budget = opts.budget;
        bool failed = false;
        if (verify_suite == "all") {
            json reports = json::array();
            for (const auto& r : verify_all(vopts)) {
                reports.push_back(to_json(r));
                failed = failed || !r.ok();
            }
            emit(reports, opts);
        } else {
            VerificationReport r = run_suite(verify_suite, vopts);
            failed = !r.ok();
            emit(to_json(r), opts);
        }
        if (failed) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schubert::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const schubert::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
