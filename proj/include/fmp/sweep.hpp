#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fmp/identities.hpp"
#include "fmp/prime_field.hpp"

namespace fmp {

/// Primes p with from <= p <= to, ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t from, std::uint32_t to);

/// Parses "a..b" (or a single prime "a"). Throws DomainError on malformed input or a > b.
std::pair<std::uint32_t, std::uint32_t> parse_prime_range(const std::string& text);

struct PrimeResult {
    std::uint32_t p = 0;
    Status status = Status::pass;
    std::string detail;

    friend bool operator==(const PrimeResult&, const PrimeResult&) = default;
};

struct SweepSummary {
    std::size_t total = 0, pass = 0, fail = 0, skip = 0;
    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint32_t from = 0, to = 0;
    std::vector<PrimeResult> results;
    double duration_ms = 0;
    bool interrupted = false;

    SweepSummary summary() const;
    /// Primes with status fail, in order.
    std::vector<std::uint32_t> failing_primes() const;
};

using PrimeCheck = std::function<CheckOutcome(const PrimeField&)>;

struct SweepRequest {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint32_t from = 5, to = 199;
};

/// Reference runner: one prime after another on the calling thread.
SweepReport run_sweep_serial(const SweepRequest& request, const PrimeCheck& check);

/// OpenMP runner with `jobs` threads (<= 0 means the OpenMP default). Results are
/// identical to run_sweep_serial apart from duration_ms.
SweepReport run_sweep_parallel(const SweepRequest& request, const PrimeCheck& check, int jobs);

/// Worker count: FMP_JOBS if set and positive, otherwise the available parallelism.
int default_jobs();

/// Cooperative interruption; primes not yet started are reported as skipped.
void request_stop() noexcept;
void clear_stop() noexcept;

std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);

/// 0 when no prime failed, 1 otherwise.
int exit_code(const SweepReport& report);

}  // namespace fmp
