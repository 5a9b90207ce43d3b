#include <atomic>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "msym/cache.hpp"
#include "msym/certify.hpp"
#include "msym/concrete.hpp"
#include "msym/genpoly.hpp"
#include "msym/io.hpp"
#include "msym/symfun.hpp"

namespace {

using namespace msym;
using nlohmann::ordered_json;

struct Shared {
    std::size_t m = 0;
    std::optional<std::size_t> n;
    std::string coeff;
    bool json = false;
    std::string cache_dir = ".";
};

Ring ring_from_flag(const std::string& coeff, const std::string& fallback)
{
    return Ring::parse(coeff.empty() ? fallback : coeff);
}

// Expression-level "q:", "z:", "fp<p>:" prefixes win over --coeff.
Ring pick_ring(const std::string& text, std::string& stripped, const Ring& flag_ring)
{
    auto [prefix, rest] = split_ring_prefix(text);
    stripped = rest;
    return prefix ? *prefix : flag_ring;
}

void emit(const ordered_json& j)
{
    std::cout << j.dump() << "\n";
}

int cmd_expand(const Shared& sh, const std::string& input)
{
    std::string body;
    const Ring ring = pick_ring(input, body, ring_from_flag(sh.coeff, "z"));
    const OrbitIndex alpha = parse_orbit_index(body, sh.m);
    const std::size_t n = *sh.n;
    if (alpha.size() > n)
        std::cerr << "note: |alpha| = " << alpha.size() << " exceeds n = " << n
                  << "; e_alpha = 0 in A(n,m)\n";
    const ConcretePoly p = orbit_sum(ring, alpha, n);
    if (sh.json) {
        ordered_json j;
        j["kind"] = "poly";
        j["ring"] = ring.name();
        j["n"] = std::to_string(n);
        j["m"] = std::to_string(sh.m);
        j["text"] = format(p, TextStyle::pretty);
        emit(j);
    } else {
        std::cout << format(p, TextStyle::pretty) << "\n";
    }
    return 0;
}

int cmd_mul(const Shared& sh, const std::string& lhs_text, const std::string& rhs_text)
{
    const Ring flag_ring = ring_from_flag(sh.coeff, "z");
    std::string lhs_body, rhs_body;
    const Ring ring = pick_ring(lhs_text, lhs_body, flag_ring);
    const Ring rhs_ring = pick_ring(rhs_text, rhs_body, ring);
    if (!(rhs_ring == ring))
        throw Error("operands use different coefficient rings");
    MultiSymElement prod =
        multiply(parse_multisym(lhs_body, sh.m, ring), parse_multisym(rhs_body, sh.m, ring));
    if (sh.n)
        prod = project_n(prod, *sh.n);
    if (sh.json) {
        ordered_json j;
        j["kind"] = "orbit";
        j["ring"] = ring.name();
        if (sh.n)
            j["n"] = std::to_string(*sh.n);
        j["m"] = std::to_string(sh.m);
        j["text"] = format(prod, TextStyle::pretty);
        emit(j);
    } else {
        std::cout << format(prod, TextStyle::pretty) << "\n";
    }
    return 0;
}

int cmd_rewrite(const Shared& sh, const std::string& input, bool rational,
                std::optional<std::size_t> check_n)
{
    std::string body;
    const Ring ring = pick_ring(input, body, ring_from_flag(sh.coeff, rational ? "q" : "z"));
    const OrbitIndex alpha = parse_orbit_index(body, sh.m);
    const GeneratorPoly g =
        rational ? rational_rewrite_to_e1(alpha, ring) : rewrite_to_generators(alpha).with_ring(ring);

    bool check_ok = true;
    if (check_n) {
        const ConcretePoly lhs = eval_generator_poly(g, *check_n);
        const ConcretePoly rhs = orbit_sum(ring, alpha, *check_n);
        check_ok = lhs == rhs;
    }
    if (sh.json) {
        ordered_json j;
        j["kind"] = "generator";
        j["ring"] = ring.name();
        j["m"] = std::to_string(sh.m);
        j["rational"] = rational;
        j["text"] = format(g, TextStyle::pretty);
        if (check_n) {
            j["check_n"] = std::to_string(*check_n);
            j["check"] = check_ok ? "ok" : "mismatch";
        }
        emit(j);
    } else {
        std::cout << format(g, TextStyle::pretty) << "\n";
        if (check_n)
            std::cout << "check n=" << *check_n << ": " << (check_ok ? "ok" : "MISMATCH") << "\n";
    }
    return check_ok ? 0 : 2;
}

int cmd_plethysm(const Shared& sh, std::uint32_t h, std::uint32_t k)
{
    if (h == 0 || k == 0)
        throw Error("plethysm needs h >= 1 and k >= 1");
    if (plethysm_cached(h, k))
        std::cerr << "plethysm P_{" << h << "," << k << "}: cache hit\n";
    const ElemPoly p = plethysm_P(h, k);
    if (sh.json) {
        ordered_json j;
        j["kind"] = "poly";
        j["basis"] = "elementary";
        j["ring"] = "z";
        j["h"] = std::to_string(h);
        j["k"] = std::to_string(k);
        j["text"] = format(p, TextStyle::pretty);
        emit(j);
    } else {
        std::cout << format(p, TextStyle::pretty) << "\n";
    }
    return 0;
}

int cmd_eval(const Shared& sh, const std::string& input)
{
    std::string body;
    const Ring ring = pick_ring(input, body, ring_from_flag(sh.coeff, "z"));
    const GeneratorPoly g = parse_generator_poly(body, sh.m, ring);
    const ConcretePoly p = eval_generator_poly(g, *sh.n);
    if (sh.json) {
        ordered_json j;
        j["kind"] = "poly";
        j["ring"] = ring.name();
        j["n"] = std::to_string(*sh.n);
        j["m"] = std::to_string(sh.m);
        j["text"] = format(p, TextStyle::pretty);
        emit(j);
    } else {
        std::cout << format(p, TextStyle::pretty) << "\n";
    }
    return 0;
}

// One verification case: either a certificate or the budget message that
// interrupted it.
using CaseResult = std::variant<RankCertificate, std::string>;

int run_cases(const Shared& sh, std::vector<std::function<RankCertificate()>> cases,
              unsigned jobs)
{
    std::vector<std::optional<CaseResult>> results(cases.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) {
            try {
                results[i] = CaseResult(cases[i]());
            } catch (const BudgetExceeded& e) {
                results[i] = CaseResult(std::string(e.what()));
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cases.size())
                        return;
                    try {
                        results[i] = CaseResult(cases[i]());
                    } catch (const BudgetExceeded& e) {
                        results[i] = CaseResult(std::string(e.what()));
                    }
                }
            });
        }
        for (auto& th : pool)
            th.join();
    }

    std::size_t passed = 0, printed = 0;
    bool all_pass = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!results[i])
            break;  // sequential run stopped here
        if (std::holds_alternative<std::string>(*results[i])) {
            std::cerr << "budget: " << std::get<std::string>(*results[i]) << "\n";
            return 3;
        }
        const RankCertificate& cert = std::get<RankCertificate>(*results[i]);
        if (sh.json)
            std::cout << cert.to_json() << "\n";
        else
            std::cout << cert.line() << "\n";
        std::cerr << cert.suite << " case " << i + 1 << ": " << cert.wall_ms << " ms\n";
        ++printed;
        if (cert.pass)
            ++passed;
        else
            all_pass = false;
    }
    if (!sh.json)
        std::cout << "summary: " << passed << "/" << printed << " pass\n";
    return all_pass ? 0 : 2;
}

int cmd_verify(const Shared& sh, const std::string& suite, std::uint32_t maxdeg, double budget_s,
               unsigned jobs)
{
    const Budget budget = budget_s > 0 ? Budget::seconds(budget_s) : Budget::unlimited();
    const std::size_t m = sh.m;
    std::vector<std::function<RankCertificate()>> cases;

    const auto need_n = [&]() -> std::size_t {
        if (!sh.n)
            throw Error("suite '" + suite + "' needs --n");
        return *sh.n;
    };

    if (suite == "basis") {
        const std::size_t n = need_n();
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            cases.push_back([=] { return certify_basis(n, m, a, budget); });
    } else if (suite == "product") {
        const std::size_t n = need_n();
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            cases.push_back([=] { return certify_product(n, m, a, budget); });
    } else if (suite == "rewrite") {
        const std::size_t n = need_n();
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            cases.push_back([=] { return certify_rewrite(n, m, a, budget); });
    } else if (suite == "relations") {
        const std::size_t n = need_n();
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            for (std::uint32_t k = static_cast<std::uint32_t>(n) + 1; k <= total_of(a); ++k)
                cases.push_back([=] { return certify_relation_span(n, m, a, k, budget); });
    } else if (suite == "presentation") {
        const std::size_t n = need_n();
        const Ring ring = ring_from_flag(sh.coeff, "q");
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            cases.push_back([=] { return certify_presentation(n, m, a, ring, budget); });
    } else if (suite == "degree-bound") {
        const std::size_t n = need_n();
        const Ring ring = ring_from_flag(sh.coeff, "q");
        // generated as a batch; wrap each in a lazy single-case closure
        auto certs = std::make_shared<std::vector<RankCertificate>>();
        auto computed = std::make_shared<std::once_flag>();
        const std::size_t count = multidegrees_up_to(m, maxdeg).size();
        for (std::size_t i = 0; i < count; ++i)
            cases.push_back([=] {
                std::call_once(*computed, [&] {
                    *certs = certify_generation_bound(n, m, ring, maxdeg, budget);
                });
                return (*certs)[i];
            });
    } else if (suite == "freeness") {
        for (const auto& a : multidegrees_up_to(m, maxdeg))
            cases.push_back([=] { return certify_freeness(m, a, budget); });
    } else {
        throw Error("unknown suite '" + suite +
                    "' (expected basis, product, rewrite, relations, presentation, "
                    "degree-bound, or freeness)");
    }
    return run_cases(sh, std::move(cases), jobs);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"multisymmetric functions: orbit basis, products, rewriting, certification"};
    app.require_subcommand(1);

    Shared sh;
    std::string input, rhs_input, suite;
    bool rational = false;
    std::optional<std::size_t> check_n;
    std::uint32_t ph = 0, pk = 0, maxdeg = 6;
    double budget_s = 60.0;
    unsigned jobs = 1;

    const auto add_shared = [&](CLI::App* cmd, bool need_m, bool need_n) {
        auto* om = cmd->add_option("--m", sh.m, "number of variable families");
        if (need_m)
            om->required();
        auto* on = cmd->add_option("--n", sh.n, "number of slots");
        if (need_n)
            on->required();
        cmd->add_option("--coeff", sh.coeff, "coefficient ring: z, q, or fp:<p>");
        cmd->add_flag("--json", sh.json, "machine-readable output");
        cmd->add_option("--cache-dir", sh.cache_dir, "directory for msym.cache");
    };

    auto* expand = app.add_subcommand("expand", "orbit sum of an orbit index in A(n,m)");
    add_shared(expand, true, true);
    expand->add_option("expr", input, "orbit index, e.g. \"E{y1:2, y2:1}\"")->required();

    auto* mul = app.add_subcommand("mul", "product in the orbit basis");
    add_shared(mul, true, false);
    mul->add_option("lhs", input, "left factor")->required();
    mul->add_option("rhs", rhs_input, "right factor")->required();

    auto* rewrite = app.add_subcommand("rewrite", "express an orbit element in the generators");
    add_shared(rewrite, true, false);
    rewrite->add_flag("--q", rational, "rational rewriting into e1[mu] symbols");
    rewrite->add_option("--check-n", check_n, "also verify by evaluation at this n");
    rewrite->add_option("expr", input, "orbit index")->required();

    auto* plethysm = app.add_subcommand("plethysm", "P_{h,k} = e_h o p_k in the elementary basis");
    add_shared(plethysm, false, false);
    plethysm->set_help_flag("--help", "print help");  // frees -h for the option below
    plethysm->add_option("--h", ph, "outer elementary index")->required();
    plethysm->add_option("--k", pk, "inner power-sum index")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a generator polynomial in A(n,m)");
    add_shared(eval, true, true);
    eval->add_option("expr", input, "generator polynomial, e.g. \"e[2;y1]*e[1;y2]\"")->required();

    auto* verify = app.add_subcommand("verify", "run a certification suite");
    add_shared(verify, true, false);
    verify->add_option("suite", suite,
                       "basis | product | rewrite | relations | presentation | degree-bound | freeness")
        ->required();
    verify->add_option("--maxdeg", maxdeg, "max total multidegree");
    verify->add_option("--budget", budget_s, "seconds per case (0 = unlimited)");
    verify->add_option("--jobs", jobs, "parallel workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (const auto& w : cache_load(sh.cache_dir))
        std::cerr << "warning: " << w << "\n";

    int rc = 0;
    try {
        if (app.got_subcommand(expand))
            rc = cmd_expand(sh, input);
        else if (app.got_subcommand(mul))
            rc = cmd_mul(sh, input, rhs_input);
        else if (app.got_subcommand(rewrite))
            rc = cmd_rewrite(sh, input, rational, check_n);
        else if (app.got_subcommand(plethysm))
            rc = cmd_plethysm(sh, ph, pk);
        else if (app.got_subcommand(eval))
            rc = cmd_eval(sh, input);
        else if (app.got_subcommand(verify))
            rc = cmd_verify(sh, suite, maxdeg, budget_s, jobs);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    cache_save(sh.cache_dir);
    return rc;
}
