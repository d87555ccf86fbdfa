// Acceptance gate: one PASS/FAIL line per numbered criterion, nonzero exit
// on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "specgraph/claims.hpp"

using specgraph::ClaimOptions;
using specgraph::ClaimResult;

namespace {

struct Criterion {
    int number;
    const char* claim_id;
};

constexpr Criterion kCriteria[] = {
    {1, "lemma2.1:paths"},
    {2, "lemma2.3:line-identity"},
    {3, "lemma2.4:subdivision-identity"},
    {4, "lemma2.8:discriminants"},
    {5, "lemma2.10:pendant-recurrence"},
    {6, "lemma2.11-2.12:cospectral-invariants"},
    {7, "lemma3.1:lambda2"},
    {8, "lemma3.3:kite-bounds"},
    {9, "theorem3.1:n<=9"},
    {10, "lemma2.13:odd-lollipops"},
    {11, "census:counts"},
    {12, "census:smallest-pair"},
    {13, "lemma2.6:smith"},
    {14, "lemma2.7:root-search"},
};

}  // namespace

int main(int argc, char** argv) {
    ClaimOptions options;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto value = [&]() -> const char* {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", arg.c_str());
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--jobs") options.jobs = std::atoi(value());
        else if (arg == "--seed") options.seed = static_cast<std::uint32_t>(std::atol(value()));
        else if (arg == "--cache-dir") options.cache_dir = value();
        else {
            std::fprintf(stderr, "usage: acceptance [--jobs N] [--seed S] [--cache-dir DIR]\n");
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        ClaimOptions one = options;
        one.only = c.claim_id;
        std::vector<ClaimResult> results = specgraph::run_claims(one);
        if (results.size() != 1) {
            std::printf("FAIL criterion-%d %s (claim id not found)\n", c.number, c.claim_id);
            ++failures;
            continue;
        }
        const ClaimResult& r = results.front();
        std::printf("%s criterion-%d %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", c.number,
                    r.id.c_str(), r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
        failures += !r.pass;
    }
    return failures ? 1 : 0;
}
