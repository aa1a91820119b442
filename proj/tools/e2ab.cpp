// Command-line front end: ring abelianizations, closed-form tables, word
// evaluation, and the verification suites.
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "e2ab/finite_ring.hpp"
#include "e2ab/matrix_group.hpp"
#include "e2ab/report.hpp"

namespace {

// exit codes: 0 all verdicts AGREE / NOT-APPLICABLE, 1 disagreement or failed
// check, 2 parse error, 3 enumeration cap exceeded, 4 invalid argument
constexpr int kExitDisagree = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvalid = 4;

int emit(const e2ab::Report &rep, bool as_json) {
    std::cout << (as_json ? rep.to_json() : rep.to_text()) << std::endl;
    return rep.ok() ? 0 : kExitDisagree;
}

int run_verify(const std::string &suite, const e2ab::Options &opt) {
    auto checks = e2ab::run_suite(suite, opt);
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    size_t failed = 0;
    std::string first_failure;
    for (const auto &c : checks) {
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        if (!c.passed) {
            if (failed == 0) first_failure = c.name + (c.detail.empty() ? "" : ": " + c.detail);
            ++failed;
        }
    }
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    if (failed) j["first_failure"] = first_failure;
    std::cout << j.dump(2) << std::endl;
    return failed == 0 ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"abelianization of the rank-2 elementary group E2(A) over concrete rings"};
    app.require_subcommand(1);
    app.fallthrough(true);  // accept the shared flags after the subcommand too

    e2ab::Options opt;
    bool as_json = false;
    std::string d_range;
    app.add_option("--cap", opt.cap, "enumeration cap for brute-force group generation");
    app.add_option("--seed", opt.seed, "seed for sampled property checks");
    app.add_flag("--json", as_json, "emit a JSON report instead of text");
    app.add_flag("!--bruteforce,--no-bruteforce", opt.bruteforce,
                 "skip the matrix-group oracle, report formulas only");
    app.add_option("--d-range", d_range, "sweep range lo:hi for the quadratic suites");

    std::string ring_spec, word_literal, suite;
    long m_arg = 0, d_arg = 0;

    auto *ab = app.add_subcommand("abelianization", "A/M, A/N and the brute-force E2(A)^ab");
    ab->add_option("ring", ring_spec, "ring spec, e.g. \"Z/12\" or \"Z/2[x]/(x^2)\"")->required();

    auto *zi = app.add_subcommand("zinv", "SL2(Z[1/m])^ab for square-free m");
    zi->add_option("m", m_arg)->required();

    auto *pi = app.add_subcommand("pslinv", "PSL2(Z[1/m])^ab for square-free m");
    pi->add_option("m", m_arg)->required();

    auto *qd = app.add_subcommand("quad", "E2(O_d)^ab data for a square-free d != 0, 1");
    qd->add_option("d", d_arg)->required();

    auto *wd = app.add_subcommand("word", "evaluate a Steinberg word over a ring");
    wd->add_option("ring", ring_spec)->required();
    wd->add_option("word", word_literal, "e.g. \"x12(3) x21(-1) h12(5)^-1\" or \"DS(2,2)\"")
        ->required();

    auto *vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "tables | oracle-vs-formula | identities")->required();

    CLI11_PARSE(app, argc, argv);

    if (!d_range.empty()) {
        auto colon = d_range.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
            opt.d_lo = std::stol(d_range.substr(0, colon));
            opt.d_hi = std::stol(d_range.substr(colon + 1));
        } catch (const std::exception &) {
            std::cerr << "error: --d-range expects lo:hi, got '" << d_range << "'\n";
            return kExitInvalid;
        }
    }

    try {
        if (ab->parsed()) return emit(e2ab::cmd_abelianization(ring_spec, opt), as_json);
        if (zi->parsed()) return emit(e2ab::cmd_zinv(m_arg), as_json);
        if (pi->parsed()) return emit(e2ab::cmd_pslinv(m_arg), as_json);
        if (qd->parsed()) return emit(e2ab::cmd_quad(d_arg, opt), as_json);
        if (wd->parsed()) return emit(e2ab::cmd_word(ring_spec, word_literal), as_json);
        if (vf->parsed()) return run_verify(suite, opt);
    } catch (const e2ab::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const e2ab::CapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
