// fmp: evaluate finite multiple polylogarithms and zeta values, form shuffle and
// stuffle products, and verify the identities between them across prime sweeps.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fmp/error.hpp"
#include "fmp/evaluator.hpp"
#include "fmp/identities.hpp"
#include "fmp/products.hpp"
#include "fmp/surjection.hpp"
#include "fmp/sweep.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kInterrupted = 130;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fmp::Index index_arg(const std::string& text, const char* flag) {
    try {
        return fmp::parse_index(text);
    } catch (const fmp::DomainError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

fmp::PrimeField field_arg(std::uint32_t p) {
    try {
        return fmp::PrimeField(p);
    } catch (const fmp::DomainError& e) {
        throw UsageError(std::string("-p: ") + e.what());
    }
}

struct EvalOptions {
    std::string k = "-", lambda = "-", mu = "-", nu = "-";
    int i = 1;
    std::uint32_t p = 0;
    std::optional<std::uint32_t> at;
};

struct ProductOptions {
    std::string left, right;
};

struct VerifyOptions {
    std::string k = "-", left = "-", right = "-", lambda = "-", mu = "-", nu = "-";
    int i = 1, alpha = 1, beta = 1, r = 1;
    std::string primes = "5..199";
    std::string out;
    std::string format = "json";
    int jobs = 0;
};

void print_poly(const fmp::ModPoly& f, const EvalOptions& o) {
    if (o.at) {
        std::cout << fmp::poly_eval(f, *o.at % o.p) << "\n";
    } else {
        std::cout << f.to_string() << "\n";
    }
}

int run_eval(const std::string& kind, const EvalOptions& o) {
    const fmp::PrimeField field = field_arg(o.p);
    if (kind == "fmp") {
        print_poly(fmp::eval_fmp(index_arg(o.k, "-k"), field), o);
    } else if (kind == "fmp3") {
        print_poly(fmp::eval_fmp_triple(index_arg(o.lambda, "-L"), index_arg(o.mu, "-M"), index_arg(o.nu, "-N"), field), o);
    } else if (kind == "zeta") {
        std::cout << fmp::eval_zeta(index_arg(o.k, "-k"), field) << "\n";
    } else {
        const fmp::Index k = index_arg(o.k, "-k");
        if (o.i < 1 || o.i > k.depth()) throw UsageError("-i must satisfy 1 <= i <= dep(k)");
        std::cout << fmp::eval_zeta_variant(o.i, k, field) << "\n";
    }
    return 0;
}

int run_product(const std::string& kind, const ProductOptions& o) {
    const fmp::Index l = index_arg(o.left, "-l");
    const fmp::Index r = index_arg(o.right, "-r");
    if (kind == "shuffle") {
        std::cout << fmp::shuffle(l, r).to_string() << "\n";
    } else if (kind == "stuffle") {
        std::cout << fmp::stuffle(l, r).to_string() << "\n";
    } else {
        const auto e = fmp::shuffle_correction(l, r);
        std::cout << "pure: " << e.pure_part().to_string() << "\n";
        std::cout << "impure: " << e.impure_part().to_string() << "\n";
    }
    return 0;
}

fmp::PrimeCheck build_check(const std::string& check, const VerifyOptions& o, fmp::SweepRequest& req) {
    using fmp::Index;
    using fmp::PrimeField;
    if (check == "eq7") {
        const Index l = index_arg(o.lambda, "-L"), m = index_arg(o.mu, "-M"), n = index_arg(o.nu, "-N");
        if (l.empty() || m.empty()) throw UsageError("eq7 needs nonempty -L and -M");
        req.params = {{"lambda", o.lambda}, {"mu", o.mu}, {"nu", o.nu}};
        return [=](const PrimeField& f) { return fmp::verify_eq7(l, m, n, f); };
    }
    if (check == "main" || check == "stuffle") {
        const Index l = index_arg(o.left, "-l"), r = index_arg(o.right, "-r");
        req.params = {{"left", o.left}, {"right", o.right}};
        if (check == "main") return [=](const PrimeField& f) { return fmp::verify_main(l, r, f); };
        return [=](const PrimeField& f) { return fmp::verify_stuffle(l, r, f); };
    }
    if (check == "prop24") {
        const Index k = index_arg(o.k, "-k");
        if (o.i < 1 || o.i > k.depth()) throw UsageError("prop24 needs 1 <= i <= dep(k)");
        req.params = {{"i", std::to_string(o.i)}, {"k", o.k}};
        const int i = o.i;
        return [=](const PrimeField& f) { return fmp::verify_prop24(i, k, f); };
    }
    if (check == "pfd") {
        if (o.alpha < 1 || o.beta < 1) throw UsageError("pfd needs --alpha, --beta >= 1");
        req.params = {{"alpha", std::to_string(o.alpha)}, {"beta", std::to_string(o.beta)}};
        const int a = o.alpha, b = o.beta;
        return [=](const PrimeField& f) { return fmp::pfd_check(a, b, f); };
    }
    if (check == "bijection") {
        if (o.r < 1 || o.r > fmp::kMaxSurjectionDomain) throw UsageError("bijection needs 1 <= -r <= 8");
        double volume = 1;
        for (int i = 0; i < o.r; ++i) volume *= req.to > 1 ? static_cast<double>(req.to - 1) : 1.0;
        if (volume > 5e7) throw UsageError("bijection sweep too large: (p-1)^r must stay below 5e7");
        req.params = {{"r", std::to_string(o.r)}};
        const int r = o.r;
        return [=](const PrimeField& f) { return fmp::verify_bijection(r, f); };
    }
    const Index k = index_arg(o.k, "-k");
    if (k.empty()) throw UsageError(check + " needs a nonempty -k");
    req.params = {{"k", o.k}};
    if (check == "reversal") return [=](const PrimeField& f) { return fmp::verify_reversal(k, f); };
    return [=](const PrimeField& f) { return fmp::verify_li_at_one(k, f); };
}

volatile std::sig_atomic_t g_interrupted = 0;

// First signal lets running primes finish and writes a partial report; a second one aborts.
extern "C" void on_interrupt(int) {
    if (g_interrupted) std::_Exit(kInterrupted);
    g_interrupted = 1;
    fmp::request_stop();
}

int run_verify(const std::string& check, const VerifyOptions& o) {
    fmp::SweepRequest req;
    req.check = check;
    try {
        std::tie(req.from, req.to) = fmp::parse_prime_range(o.primes);
    } catch (const fmp::DomainError& e) {
        throw UsageError(std::string("--primes: ") + e.what());
    }
    const auto fn = build_check(check, o, req);
    const int jobs = o.jobs > 0 ? o.jobs : fmp::default_jobs();

    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);
    const fmp::SweepReport report = fmp::run_sweep_parallel(req, fn, jobs);

    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write report to " << o.out << "\n";
            return kUsageError;
        }
        file << (o.format == "csv" ? fmp::to_csv(report) : fmp::to_json(report));
    }

    if (check == "bijection") {
        for (const auto& r : report.results) std::cout << "p=" << r.p << ": " << r.detail << "\n";
    }
    const auto s = report.summary();
    std::cout << check << ": " << s.total << " primes in " << req.from << ".." << req.to << ", " << s.pass
              << " pass, " << s.fail << " fail, " << s.skip << " skip (" << static_cast<long long>(report.duration_ms)
              << " ms)\n";
    for (const auto& r : report.results) {
        if (r.status == fmp::Status::fail) std::cout << "  FAIL p=" << r.p << ": " << r.detail << "\n";
    }
    if (report.interrupted) {
        std::cerr << "interrupted; partial report written\n";
        return kInterrupted;
    }
    return fmp::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite multiple polylogarithms: evaluation, products and identity sweeps"};
    app.require_subcommand(1);

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate li_k(T), li(L,M,N;T), zeta_A(k) or a variant at a prime");
    eval->require_subcommand(1);
    std::string eval_kind;
    for (const char* kind : {"fmp", "fmp3", "zeta", "zeta-variant"}) {
        auto* sub = eval->add_subcommand(kind);
        sub->add_option("-p,--prime", eval_opts.p, "Prime modulus")->required();
        if (std::string(kind) == "fmp3") {
            sub->add_option("-L", eval_opts.lambda, "Index lambda ('-' for empty)");
            sub->add_option("-M", eval_opts.mu, "Index mu");
            sub->add_option("-N", eval_opts.nu, "Index nu");
        } else {
            sub->add_option("-k", eval_opts.k, "Index, e.g. 2,3 ('-' for empty)")->required();
        }
        if (std::string(kind) == "zeta-variant") sub->add_option("-i", eval_opts.i, "Variant index, 1 <= i <= dep(k)")->required();
        if (std::string(kind).starts_with("fmp")) sub->add_option("--at", eval_opts.at, "Evaluate the polynomial at t");
        sub->callback([&eval_kind, kind] { eval_kind = kind; });
    }

    ProductOptions product_opts;
    auto* product = app.add_subcommand("product", "Shuffle, stuffle, or explicit correction of li_l * li_r");
    product->require_subcommand(1);
    std::string product_kind;
    for (const char* kind : {"shuffle", "stuffle", "correction"}) {
        auto* sub = product->add_subcommand(kind);
        sub->add_option("-l", product_opts.left, "Left index")->required();
        sub->add_option("-r", product_opts.right, "Right index")->required();
        sub->callback([&product_kind, kind] { product_kind = kind; });
    }

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Sweep an identity over a prime range and write a report");
    verify->require_subcommand(1);
    std::string verify_kind;
    for (const char* kind : {"eq7", "main", "prop24", "stuffle", "pfd", "bijection", "reversal", "li-at-1"}) {
        const std::string name = kind;
        auto* sub = verify->add_subcommand(kind);
        if (name == "eq7") {
            sub->add_option("-L", verify_opts.lambda, "Index lambda")->required();
            sub->add_option("-M", verify_opts.mu, "Index mu")->required();
            sub->add_option("-N", verify_opts.nu, "Index nu ('-' for empty)");
        } else if (name == "main" || name == "stuffle") {
            sub->add_option("-l", verify_opts.left, "Left index")->required();
            sub->add_option("-r", verify_opts.right, "Right index")->required();
        } else if (name == "prop24") {
            sub->add_option("-i", verify_opts.i, "Variant index")->required();
            sub->add_option("-k", verify_opts.k, "Index")->required();
        } else if (name == "pfd") {
            sub->add_option("--alpha", verify_opts.alpha, "Exponent of X")->required();
            sub->add_option("--beta", verify_opts.beta, "Exponent of Y")->required();
        } else if (name == "bijection") {
            sub->add_option("-r", verify_opts.r, "Tuple length r")->required();
        } else {
            sub->add_option("-k", verify_opts.k, "Index")->required();
        }
        sub->add_option("--primes", verify_opts.primes, "Prime range a..b")->capture_default_str();
        sub->add_option("--out", verify_opts.out, "Report file");
        sub->add_option("--format", verify_opts.format, "Report format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--jobs", verify_opts.jobs, "Worker threads (default: FMP_JOBS or all cores)");
        sub->callback([&verify_kind, kind] { verify_kind = kind; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (eval->parsed()) return run_eval(eval_kind, eval_opts);
        if (product->parsed()) return run_product(product_kind, product_opts);
        return run_verify(verify_kind, verify_opts);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const fmp::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
