// Command-line surface for the fusion-ring, Hopf-link and modular-data
// computations: table generation, identity verification, machine emission.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "logverlinde/fusion.hpp"
#include "logverlinde/hopf.hpp"
#include "logverlinde/linalg.hpp"
#include "logverlinde/modular.hpp"
#include "logverlinde/suites.hpp"

namespace {

using namespace verlinde;

struct Options {
    int p = 2;
    int d = 1;
    int trunc = 400;
    int precision = 64;
    double tol = 1e-8;
    std::string tau = "2i";
    std::string format = "text";
    std::string suite = "all";
    std::string ring = "simple";
    std::string kind = "open";
    std::string insertion = "modP";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "triplet parameter p")->check(CLI::Range(2, 64));
    cmd->add_option("--d", o.d, "symplectic fermion parameter d")->check(CLI::Range(1, 16));
    cmd->add_option("--trunc", o.trunc, "q-series truncation")->check(CLI::Range(50, 100000));
    cmd->add_option("--precision", o.precision, "embedding precision in bits")->check(CLI::Range(53, 4096));
    cmd->add_option("--tol", o.tol, "numeric tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--tau", o.tau, "upper half-plane point, e.g. 0.3+1.7i");
    cmd->add_option("--format", o.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int emit_report(const Report& rep, const Options& o) {
    if (o.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion rings, Hopf link invariants and modular data for the triplet models"};
    app.require_subcommand(1);
    Options o;

    auto* fusion = app.add_subcommand("fusion", "emit a fusion table");
    add_common(fusion, o);
    fusion->add_option("--ring", o.ring, "simple|grothendieck|semisimple|affine|sf")
        ->check(CLI::IsMember({"simple", "grothendieck", "semisimple", "affine", "sf"}));

    auto* hopf = app.add_subcommand("hopf", "emit Hopf link tables");
    add_common(hopf, o);
    hopf->add_option("--kind", o.kind, "open|ordinary|log")->check(CLI::IsMember({"open", "ordinary", "log"}));
    hopf->add_option("--insertion", o.insertion, "id|x|modP")->check(CLI::IsMember({"id", "x", "modP"}));

    auto* smatrix = app.add_subcommand("smatrix", "emit the exact modular S-matrix");
    add_common(smatrix, o);

    auto* chars = app.add_subcommand("chars", "evaluate characters at tau (CSV)");
    add_common(chars, o);

    auto* jordan = app.add_subcommand("jordan", "emit the block-diagonalization reports");
    add_common(jordan, o);

    auto* sf = app.add_subcommand("sf", "emit the symplectic fermion table and law residuals");
    add_common(sf, o);

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "all|fusion|hopf|modular|jordan|sf")
        ->check(CLI::IsMember({"all", "fusion", "hopf", "modular", "jordan", "sf"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Tau tau{0, 2};
        try {
            tau = Tau::parse(o.tau);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }

        if (fusion->parsed()) {
            FusionTable t;
            if (o.ring == "simple")
                t = build_wp_fusion_table(o.p);
            else if (o.ring == "grothendieck")
                t = grothendieck_table(o.p);
            else if (o.ring == "semisimple")
                t = semisimplify(build_wp_fusion_table(o.p));
            else if (o.ring == "affine")
                t = affine_sl2_fusion(o.p - 2);
            else
                t = sf_fusion_table(o.d);
            emit(t.to_json());
            return 0;
        }
        if (hopf->parsed()) {
            std::string ins = (o.kind == "log") ? o.insertion : "id";
            emit(hopf_table_json(o.p, o.kind, ins));
            return 0;
        }
        if (smatrix->parsed()) {
            emit(assemble_schi(o.p).to_json(o.format == "json" ? 0 : o.precision));
            return 0;
        }
        if (chars->parsed()) {
            SChiMatrix s = assemble_schi(o.p);
            std::cout << "char,re,im\n";
            for (const auto& c : s.basis()) {
                auto v = char_value(c, o.p, tau, o.trunc);
                std::cout << c.str() << "," << v.real() << "," << v.imag() << "\n";
            }
            return 0;
        }
        if (jordan->parsed()) {
            FusionTable gr = grothendieck_table(o.p);
            FusionTable simp = build_wp_fusion_table(o.p);
            nlohmann::json j;
            auto jg = ExactMatrix::from_int(gr.fusion_matrix(wp_simple(-1, 1)), o.p);
            auto yg = ExactMatrix::from_int(gr.fusion_matrix(wp_simple(+1, 2)), o.p);
            j["grothendieck"] = block_diagonalize_pair(jg, yg, o.p).to_json();
            auto jt = ExactMatrix::from_int(simp.fusion_matrix(wp_simple(-1, 1)), o.p);
            auto yt = ExactMatrix::from_int(simp.fusion_matrix(wp_simple(+1, 2)), o.p);
            j["tensor"] = block_diagonalize_pair(jt, yt, o.p).to_json();
            emit(j);
            return 0;
        }
        if (sf->parsed()) {
            SuiteConfig cfg{o.p, o.d, o.trunc, o.tol, tau};
            return emit_report(run_sf_suite(cfg), o);
        }
        if (verify->parsed()) {
            SuiteConfig cfg{o.p, o.d, o.trunc, o.tol, tau};
            Report rep;
            if (o.suite == "all")
                rep = run_all_suites(cfg);
            else if (o.suite == "fusion")
                rep = run_fusion_suite(cfg);
            else if (o.suite == "hopf")
                rep = run_hopf_suite(cfg);
            else if (o.suite == "modular")
                rep = run_modular_suite(cfg);
            else if (o.suite == "jordan")
                rep = run_jordan_suite(cfg);
            else
                rep = run_sf_suite(cfg);
            return emit_report(rep, o);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
