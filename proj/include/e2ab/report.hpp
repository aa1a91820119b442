#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "e2ab/abelian.hpp"
#include "e2ab/finite_ring.hpp"

namespace e2ab {

struct Options {
    size_t cap = 200000;
    uint64_t seed = 0;
    bool bruteforce = true;
    long d_lo = 2;
    long d_hi = 200;
};

struct Verdict {
    std::string name;
    std::string status;  // AGREE / DISAGREE / NOT-APPLICABLE
    std::string detail;
};

struct Report {
    std::string command;
    std::string input;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<Verdict> verdicts;
    double elapsed_seconds = 0.0;

    bool ok() const;
    std::string to_text() const;
    std::string to_json() const;  // schema 1
};

Report cmd_abelianization(const std::string &ring_spec, const Options &opt = {});
Report cmd_zinv(long m);
Report cmd_pslinv(long m);
Report cmd_quad(long d, const Options &opt = {});
Report cmd_word(const std::string &ring_spec, const std::string &word_literal);

/// Named check with outcome, used by the verification suites.
struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Rings every property/identity suite runs over.
std::vector<std::string> corpus_ring_specs();

/// Matrix identities (1), (2), (3'), the E/D/E12/E21 interconversions, the
/// Steinberg-word identities and the Dennis-Stein coincidence, over one ring.
std::vector<CheckResult> identity_suite(const RingPtr &ring, size_t samples, uint64_t seed);

/// Suites runnable from the CLI: "tables", "oracle-vs-formula", "identities".
std::vector<CheckResult> run_suite(const std::string &name, const Options &opt = {});

}  // namespace e2ab
