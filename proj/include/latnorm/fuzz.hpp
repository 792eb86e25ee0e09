#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "latnorm/bounds.hpp"
#include "latnorm/fixtures.hpp"
#include "latnorm/io.hpp"
#include "latnorm/normality.hpp"

namespace latnorm {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string instance_hash(const Polytope& p) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(polytope_to_json(p).dump())));
    return buf;
}

struct FuzzSummary {
    std::string campaign;
    std::uint64_t trials = 0;
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t budget_exceeded = 0;
    std::optional<Rat> min_fail_e;  // smallest edge length among failing trials
    std::string csv_path;
};

inline json fuzz_summary_to_json(const FuzzSummary& s) {
    json j;
    j["campaign"] = s.campaign;
    j["trials"] = s.trials;
    j["holds"] = s.holds;
    j["fails"] = s.fails;
    j["budget_exceeded"] = s.budget_exceeded;
    j["smallest_failing_E"] = s.min_fail_e ? rat_to_json(*s.min_fail_e) : json(nullptr);
    j["csv"] = s.csv_path;
    return j;
}

namespace detail {

inline void note_failure(FuzzSummary& sum, const Rat& e) {
    if (!sum.min_fail_e || e < *sum.min_fail_e) sum.min_fail_e = e;
}

}  // namespace detail

namespace detail {

inline std::ofstream open_csv(const std::string& path) {
    std::ofstream csv(path);
    if (!csv) throw format_error("cannot open " + path + " for writing");
    csv << "seed,instance,E,c,verdict,witness\n";
    return csv;
}

inline std::string csv_witness(const std::optional<QVec>& w) {
    if (!w) return "";
    std::string s = vec_str(*w);
    for (char& ch : s)
        if (ch == ',') ch = ';';
    return s;
}

// Rational c drawn from the quarter-step grid {2, 9/4, ..., k}.
inline Rat random_c(const Rat& k, std::mt19937_64& rng) {
    Int steps = floor_rat((k - 2) * 4);
    if (steps < 0) steps = 0;
    std::uniform_int_distribution<std::uint64_t> pick(0, steps.convert_to<std::uint64_t>());
    return Rat(2) + Rat(Int(pick(rng)), 4);
}

}  // namespace detail

// Random polytopes with stretched edges versus the translate-cover check at
// random c in [2,k]: one CSV row per trial relating min edge length to verdict.
inline FuzzSummary fuzz_cn_threshold(std::size_t d, const Rat& k, std::uint64_t trials,
                                     std::uint64_t seed, const std::string& csv_path) {
    if (d == 0 || d > 3) throw std::invalid_argument("fuzz_cn_threshold: supported dimensions 1..3");
    std::ofstream csv = detail::open_csv(csv_path);
    std::mt19937_64 rng(seed);
    FuzzSummary sum;
    sum.campaign = "cn-threshold";
    sum.csv_path = csv_path;
    std::uniform_int_distribution<long> stretch(1, 4);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Polytope p = dilate(random_lattice_polytope(d, d + 2, 2, rng), Rat(stretch(rng)));
        Rat c = detail::random_c(k, rng);
        Rat e = min_edge_length(p);
        CoverOptions opts;
        opts.budget = 1 << 14;
        std::string verdict;
        std::optional<QVec> w;
        try {
            CoverReport rep = check_cn_at(p, c, opts);
            verdict = rep.covered ? "covered" : "uncovered";
            w = rep.witness;
            ++(rep.covered ? sum.holds : sum.fails);
            if (!rep.covered) detail::note_failure(sum, e);
        } catch (const budget_exceeded_error&) {
            verdict = "budget";
            ++sum.budget_exceeded;
        }
        ++sum.trials;
        csv << seed << "," << instance_hash(p) << "," << rat_str(e) << "," << rat_str(c) << ","
            << verdict << "," << detail::csv_witness(w) << "\n";
    }
    return sum;
}

// Random lattice polytopes versus the degree-bounded integral-closedness
// check; rows relate min edge length to the ic/normal/neither verdict.
inline FuzzSummary fuzz_ic_threshold(std::size_t d, std::uint64_t trials, std::uint64_t seed,
                                     const std::string& csv_path) {
    if (d < 2 || d > 3) throw std::invalid_argument("fuzz_ic_threshold: supported dimensions 2..3");
    std::ofstream csv = detail::open_csv(csv_path);
    std::mt19937_64 rng(seed);
    FuzzSummary sum;
    sum.campaign = "ic-threshold";
    sum.csv_path = csv_path;
    std::uniform_int_distribution<std::size_t> extra(1, d + 2);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Polytope p = random_lattice_polytope(d, d + 1 + extra(rng), 3, rng);
        Rat e = min_edge_length(p);
        ICReport rep = check_integrally_closed(p);
        std::string verdict = rep.integrally_closed ? "ic" : rep.normal ? "normal" : "neither";
        std::optional<QVec> w;
        if (rep.witness) w = to_qvec(rep.witness->second);
        ++(rep.integrally_closed ? sum.holds : sum.fails);
        if (!rep.integrally_closed) detail::note_failure(sum, e);
        ++sum.trials;
        csv << seed << "," << instance_hash(p) << "," << rat_str(e) << ",," << verdict << ","
            << detail::csv_witness(w) << "\n";
    }
    return sum;
}

// One-dimensional rational segments versus the translate cover: explores how
// short a segment may get before covering fails at some c in [2,k].
inline FuzzSummary fuzz_cn1_exact(const Rat& k, std::uint64_t trials, std::uint64_t seed,
                                  const std::string& csv_path) {
    std::ofstream csv = detail::open_csv(csv_path);
    std::mt19937_64 rng(seed);
    FuzzSummary sum;
    sum.campaign = "cn1-exact";
    sum.csv_path = csv_path;
    std::uniform_int_distribution<long> nu(1, 12), de(1, 4), off(0, 3);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rat len(Int(nu(rng)), Int(de(rng)));
        Rat start(Int(off(rng)), Int(de(rng)));
        Polytope seg = from_vertices({QVec(std::vector<Rat>{start}),
                                      QVec(std::vector<Rat>{start + len})});
        Rat c = detail::random_c(k, rng);
        CoverReport rep = check_cn_at(seg, c);
        ++(rep.covered ? sum.holds : sum.fails);
        if (!rep.covered) detail::note_failure(sum, len);
        ++sum.trials;
        csv << seed << "," << instance_hash(seg) << "," << rat_str(len) << "," << rat_str(c) << ","
            << (rep.covered ? "covered" : "uncovered") << "," << detail::csv_witness(rep.witness)
            << "\n";
    }
    return sum;
}

}  // namespace latnorm
