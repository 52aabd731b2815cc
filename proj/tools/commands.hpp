#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace localprop::cli {

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kUsage = 2 };

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string artifact;
    std::string log;
    std::string kind;
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t ell = 0;
    std::uint32_t m = 0;
    std::uint32_t colors = 0;
    std::uint64_t size = 0;
    std::uint64_t trials = 0;
    std::int64_t range = 0;
    std::uint64_t node_limit = 2'000'000'000;
    double time_limit = 3600.0;
    std::uint64_t budget = 50'000'000;
};

int verify_coloring(const Options& opt);
int verify_diffset(const Options& opt);
int verify_distances(const Options& opt);
int construct(const Options& opt);
int solve_f(const Options& opt);
int solve_g(const Options& opt);
int energy(const Options& opt);
int profile(const Options& opt);
int lemma_check(const Options& opt);

}  // namespace localprop::cli
