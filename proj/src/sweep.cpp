#include "fmp/sweep.hpp"

#include <omp.h>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "fmp/error.hpp"

namespace fmp {

namespace {

std::atomic<bool> g_stop{false};

PrimeResult run_one(std::uint32_t p, const PrimeCheck& check) {
    if (g_stop.load(std::memory_order_relaxed)) return {p, Status::skip, "interrupted"};
    try {
        const PrimeField field(p);
        auto outcome = check(field);
        return {p, outcome.status, std::move(outcome.detail)};
    } catch (const ExceptionalPrime& e) {
        return {p, Status::skip, e.what()};
    } catch (const std::exception& e) {
        return {p, Status::fail, std::string("error: ") + e.what()};
    }
}

SweepReport start_report(const SweepRequest& request) {
    SweepReport report;
    report.check = request.check;
    report.params = request.params;
    report.from = request.from;
    report.to = request.to;
    return report;
}

std::uint32_t parse_u32(std::string_view s) {
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw DomainError("malformed prime range bound '" + std::string(s) + "'");
    }
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<std::uint32_t> primes_in_range(std::uint32_t from, std::uint32_t to) {
    std::vector<std::uint32_t> out;
    if (to < 2 || from > to) return out;
    std::vector<bool> composite(static_cast<std::size_t>(to) + 1, false);
    for (std::uint64_t i = 2; i * i <= to; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= to; j += i) composite[j] = true;
    }
    for (std::uint32_t n = std::max<std::uint32_t>(from, 2); n <= to; ++n) {
        if (!composite[n]) out.push_back(n);
    }
    return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_prime_range(const std::string& text) {
    const auto dots = text.find("..");
    std::uint32_t a = 0, b = 0;
    if (dots == std::string::npos) {
        a = b = parse_u32(text);
    } else {
        a = parse_u32(std::string_view(text).substr(0, dots));
        b = parse_u32(std::string_view(text).substr(dots + 2));
    }
    if (a > b) throw DomainError("empty prime range '" + text + "'");
    if (b >= (1u << 31)) throw DomainError("primes must be below 2^31");
    return {a, b};
}

SweepSummary SweepReport::summary() const {
    SweepSummary s;
    s.total = results.size();
    for (const auto& r : results) {
        switch (r.status) {
            case Status::pass: ++s.pass; break;
            case Status::fail: ++s.fail; break;
            case Status::skip: ++s.skip; break;
        }
    }
    return s;
}

std::vector<std::uint32_t> SweepReport::failing_primes() const {
    std::vector<std::uint32_t> out;
    for (const auto& r : results) {
        if (r.status == Status::fail) out.push_back(r.p);
    }
    return out;
}

SweepReport run_sweep_serial(const SweepRequest& request, const PrimeCheck& check) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport report = start_report(request);
    for (std::uint32_t p : primes_in_range(request.from, request.to)) report.results.push_back(run_one(p, check));
    report.interrupted = g_stop.load();
    report.duration_ms = elapsed_ms(t0);
    return report;
}

SweepReport run_sweep_parallel(const SweepRequest& request, const PrimeCheck& check, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport report = start_report(request);
    const auto primes = primes_in_range(request.from, request.to);
    report.results.resize(primes.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const auto n = static_cast<long>(primes.size());
    // Larger primes cost more, so hand them out first.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = n - 1; i >= 0; --i) {
        report.results[static_cast<std::size_t>(i)] = run_one(primes[static_cast<std::size_t>(i)], check);
    }
    report.interrupted = g_stop.load();
    report.duration_ms = elapsed_ms(t0);
    return report;
}

int default_jobs() {
    if (const char* env = std::getenv("FMP_JOBS")) {
        int v = 0;
        const std::string_view s(env);
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && end == s.data() + s.size() && v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void request_stop() noexcept { g_stop.store(true); }
void clear_stop() noexcept { g_stop.store(false); }

std::string to_json(const SweepReport& report) {
    using json = nlohmann::ordered_json;
    json j;
    j["check"] = report.check;
    json params = json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["primes"] = {{"from", report.from}, {"to", report.to}};
    json results = json::array();
    for (const auto& r : report.results) {
        json e = {{"p", r.p}, {"status", to_string(r.status)}};
        if (!r.detail.empty()) e["detail"] = r.detail;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    const auto s = report.summary();
    j["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
    if (report.interrupted) j["interrupted"] = true;
    j["duration_ms"] = static_cast<long long>(report.duration_ms + 0.5);
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepReport& report) {
    std::string params;
    for (const auto& [k, v] : report.params) {
        if (!params.empty()) params += ";";
        params += k + "=" + v;
    }
    const std::string head = csv_field(report.check) + "," + csv_field(params) + "," + std::to_string(report.from) +
                             "," + std::to_string(report.to) + ",";
    std::string out = "check,params,from,to,p,status,detail\n";
    for (const auto& r : report.results) {
        out += head + std::to_string(r.p) + "," + to_string(r.status) + "," + csv_field(r.detail) + "\n";
    }
    const auto s = report.summary();
    out += head + ",summary," +
           csv_field("total=" + std::to_string(s.total) + ";pass=" + std::to_string(s.pass) +
                     ";fail=" + std::to_string(s.fail) + ";skip=" + std::to_string(s.skip) +
                     ";duration_ms=" + std::to_string(static_cast<long long>(report.duration_ms + 0.5))) +
           "\n";
    return out;
}

int exit_code(const SweepReport& report) { return report.summary().fail == 0 ? 0 : 1; }

}  // namespace fmp
