#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affs/json_io.hpp"
#include "affs/random.hpp"

namespace affs {

struct PropositionTally {
    std::string name;
    long passed = 0;
    long failed = 0;
};

struct VerificationReport {
    std::string suite;
    int nmax = 0;
    std::uint64_t seed = 0;
    std::vector<PropositionTally> propositions;  // in first-seen order
    std::vector<json> witnesses;                 // failing inputs
    std::set<std::string> operations;            // operations exercised
    std::vector<std::string> missing_operations; // only checked by the "all" suite
    double seconds = 0.0;

    bool ok() const;
    long total_failed() const;
    /// Same inputs give byte-identical output unless include_timing is set.
    json to_json(bool include_timing = false) const;
    std::string to_text(bool include_timing = false) const;
};

/// lengths, bruhat, kappa, varpi, divisors, embeddings, all
const std::vector<std::string>& suite_names();

/// Every library operation that the "all" suite must exercise.
const std::vector<std::string>& covered_operation_names();

/// Throws InvalidInput for an unknown suite or nmax < 1.
VerificationReport run_suite(const std::string& suite, int nmax, std::uint64_t seed);

/// Records pass/fail counts, witnesses and exercised operations.
class Harness {
public:
    Harness(std::string suite, int nmax, std::uint64_t seed);

    Rng& rng() { return rng_; }
    int nmax() const { return report_.nmax; }

    void cover(const std::string& operation) { report_.operations.insert(operation); }
    void record(const std::string& proposition, bool ok, const std::function<json()>& witness);
    /// Runs check; an exception counts as a failure with its message as witness.
    void guarded(const std::string& proposition, const json& context, const std::function<bool()>& check);

    VerificationReport& report() { return report_; }

private:
    PropositionTally& tally(const std::string& proposition);

    VerificationReport report_;
    std::map<std::string, std::size_t> index_;
    Rng rng_;
};

void suite_lengths(Harness& h);
void suite_bruhat(Harness& h);
void suite_kappa(Harness& h);
void suite_varpi(Harness& h);
void suite_divisors(Harness& h);
void suite_embeddings(Harness& h);

}  // namespace affs
