// Command-line front end: expansions, verification suites, Hasse-Schmidt
// family conversions and QSymm operations.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsymm/explog.hpp"
#include "nsymm/hsops.hpp"
#include "nsymm/io.hpp"
#include "nsymm/newton.hpp"
#include "nsymm/qsymm.hpp"
#include "nsymm/render.hpp"
#include "nsymm/suites.hpp"

namespace {

using nsymm::io::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int max_degree = nsymm::DegreeBound::default_max_degree;
    std::string format = "text";
    std::string out;

    [[nodiscard]] bool json_output() const { return format == "json"; }
};

void emit(const RunConfig& cfg, const std::string& text, const std::string& out_override = "")
{
    const std::string& path = out_override.empty() ? cfg.out : out_override;
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path);
    if (!os) throw UsageError("cannot write " + path);
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

template <class Basis>
std::string render(const RunConfig& cfg, const nsymm::Poly<Basis>& p)
{
    return cfg.json_output() ? nsymm::io::to_json(p).dump(2) : nsymm::to_text(p);
}

template <class Basis>
std::string render(const RunConfig& cfg, const nsymm::Tensor<Basis>& t)
{
    return cfg.json_output() ? nsymm::io::to_json(t).dump(2) : nsymm::to_text(t);
}

nsymm::DegreeBound bound_for(const RunConfig& cfg)
{
    if (cfg.max_degree < 1) throw UsageError("--max-degree must be >= 1");
    return nsymm::DegreeBound(cfg.max_degree);
}

void check_index(const RunConfig& cfg, int n)
{
    if (n < 1 || n > cfg.max_degree) {
        throw UsageError("n must satisfy 1 <= n <= max degree (" + std::to_string(cfg.max_degree) + ")");
    }
}

int run_newton(const RunConfig& cfg, int n, const std::string& variant)
{
    check_index(cfg, n);
    nsymm::NewtonEngine engine(bound_for(cfg));
    std::string text;
    if (variant == "left") {
        text = render(cfg, engine.p_left(n));
    } else if (variant == "right") {
        text = render(cfg, engine.p_right(n));
    } else if (variant == "explicit") {
        text = render(cfg, engine.p_explicit(n));
    } else if (variant == "z-in-p") {
        text = render(cfg, engine.z_in_pprime(n));
    } else {
        text = render(cfg, engine.z_in_pprime_via_c(n));
    }
    emit(cfg, text);
    return exit_ok;
}

int run_explog(const RunConfig& cfg, int n, const std::string& direction)
{
    check_index(cfg, n);
    nsymm::ExpLogEngine engine(bound_for(cfg));
    emit(cfg, direction == "z-of-u" ? render(cfg, engine.z_of_u(n)) : render(cfg, engine.u_of_z(n)));
    return exit_ok;
}

int run_verify(const RunConfig& cfg, const std::string& suite)
{
    bound_for(cfg);
    const auto& suites = nsymm::verification_suites();
    auto it = suites.find(suite);
    if (it == suites.end()) throw UsageError("unknown suite: " + suite);
    auto report = it->second(cfg.max_degree);
    emit(cfg, cfg.json_output() ? nsymm::io::to_json(report).dump(2) : nsymm::io::to_text(report));
    return report.passed() ? exit_ok : exit_failed;
}

// hs ------------------------------------------------------------------------

nsymm::io::FamilyFile catalog_entry(const std::string& name, int trunc)
{
    using nsymm::io::FamilyFile;
    using nsymm::io::FamilyKind;
    if (name == "taylor") {
        auto f = nsymm::taylor_hs(trunc);
        return FamilyFile{FamilyKind::hs_family, f.algebra, f.maps};
    }
    if (name == "two-inner-derivs") {
        auto a = nsymm::upper_triangular_algebra(3);
        // Basis order: E11 E12 E13 E22 E23 E33.
        nsymm::Vector m{1, 2, 0, 0, 1, 3};
        nsymm::Vector m2{0, 1, -1, 2, 0, 1};
        return FamilyFile{FamilyKind::derivations, a,
                          {nsymm::inner_derivation(*a, m), nsymm::inner_derivation(*a, m2)}};
    }
    if (name == "free-exp" || name == "free-nonexp") {
        nsymm::TruncatedFreeAlgebra free(4);
        nsymm::GeneratorImages images;
        images[{nsymm::TruncatedFreeAlgebra::x, 1}] = free.generator(nsymm::TruncatedFreeAlgebra::y);
        if (name == "free-nonexp") images[{nsymm::TruncatedFreeAlgebra::x, 2}] = free.generator(nsymm::TruncatedFreeAlgebra::x);
        auto f = nsymm::free_hs_extend(free, images, trunc);
        return FamilyFile{FamilyKind::hs_family, f.algebra, f.maps};
    }
    throw UsageError("unknown catalog entry: " + name + " (taylor, two-inner-derivs, free-exp, free-nonexp)");
}

int run_hs(const RunConfig& cfg, const std::string& action, const std::string& input, const std::string& output,
           int trunc)
{
    using nsymm::io::FamilyKind;
    auto write = [&](const nsymm::io::FamilyFile& f) { emit(cfg, nsymm::io::to_json(f).dump(2), output); };

    if (action == "catalog") {
        write(catalog_entry(input, trunc));
        return exit_ok;
    }

    auto file = nsymm::io::load_family_file(input);
    auto require_kind = [&](FamilyKind k) {
        if (file.kind != k) {
            throw UsageError(input + ": expected kind \"" + nsymm::io::to_string(k) + "\" for " + action);
        }
    };
    auto require_derivations = [&] {
        for (std::size_t k = 0; k < file.maps.size(); ++k) {
            if (auto v = nsymm::derivation_violation(file.maps[k], *file.algebra)) {
                throw UsageError(input + ": map " + std::to_string(k + 1) + " is not a derivation, fails at " +
                                 v->to_string());
            }
        }
    };
    auto require_hs = [&] {
        if (auto v = nsymm::hs_violation(file.family())) {
            throw UsageError(input + ": not a Hasse-Schmidt family, fails at " + v->to_string());
        }
    };

    if (action == "validate") {
        std::optional<std::string> failure;
        if (file.kind == FamilyKind::hs_family) {
            if (auto v = nsymm::hs_violation(file.family())) failure = "Hasse-Schmidt law fails at " + v->to_string();
        } else {
            for (std::size_t k = 0; k < file.maps.size() && !failure; ++k) {
                if (auto v = nsymm::derivation_violation(file.maps[k], *file.algebra)) {
                    failure = "map " + std::to_string(k + 1) + " is not a derivation, fails at " + v->to_string();
                }
            }
        }
        json result{{"kind", nsymm::io::to_string(file.kind)}, {"valid", !failure}, {"maps", file.maps.size()}};
        if (failure) result["witness"] = *failure;
        emit(cfg, cfg.json_output() ? result.dump(2) : (failure ? "invalid: " + *failure : std::string("valid")));
        return failure ? exit_failed : exit_ok;
    }
    if (action == "extract-delta" || action == "extract-partial") {
        require_kind(FamilyKind::hs_family);
        require_hs();
        auto maps = action == "extract-delta" ? nsymm::delta_from_d(file.family()) : nsymm::partial_from_d(file.family());
        write(nsymm::io::FamilyFile{FamilyKind::derivations, file.algebra, std::move(maps)});
        return exit_ok;
    }
    if (action == "build-from-delta" || action == "build-from-partial") {
        require_kind(FamilyKind::derivations);
        require_derivations();
        auto f = action == "build-from-delta" ? nsymm::d_from_delta(file.maps, file.algebra)
                                              : nsymm::d_from_partial(file.maps, file.algebra);
        write(nsymm::io::FamilyFile{FamilyKind::hs_family, f.algebra, std::move(f.maps)});
        return exit_ok;
    }
    throw UsageError("unknown hs action: " + action);
}

// qsymm ---------------------------------------------------------------------

nsymm::Composition parse_composition(std::string text)
{
    std::string cleaned;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ' && c != 'M') cleaned += c;
    }
    std::vector<int> parts;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad composition: " + text);
        }
        if (used != item.size() || v < 1) throw UsageError("bad composition: " + text);
        parts.push_back(v);
    }
    return nsymm::Composition(std::move(parts));
}

int run_qsymm(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args)
{
    auto bound = bound_for(cfg);
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw UsageError("qsymm " + op + " expects " + std::to_string(n) + " arguments");
    };
    auto monomial = [](const std::string& s) { return nsymm::QSPoly::term(parse_composition(s)); };
    auto level = [](const std::string& s) {
        try {
            int n = std::stoi(s);
            if (n >= 1) return n;
        } catch (const std::exception&) {
        }
        throw UsageError("level must be a positive integer: " + s);
    };
    if (op == "product") {
        need(2);
        emit(cfg, render(cfg, nsymm::quasi_shuffle(monomial(args[0]), monomial(args[1]), bound)));
    } else if (op == "deconcat") {
        need(1);
        emit(cfg, render(cfg, nsymm::deconcat(monomial(args[0]))));
    } else if (op == "d") {
        need(2);
        emit(cfg, render(cfg, nsymm::d_qsymm(level(args[0]), monomial(args[1]))));
    } else if (op == "alpha") {
        need(2);
        auto a = nsymm::alpha(level(args[0]), monomial(args[1]));
        emit(cfg, cfg.json_output() ? nsymm::io::coeff_to_json(a).dump() : a.to_string());
    } else {
        throw UsageError("unknown qsymm operation: " + op + " (product, deconcat, d, alpha)");
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in noncommutative symmetric functions and Hasse-Schmidt derivations"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--max-degree", cfg.max_degree, "Maximum degree (default 8)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out, "Write output to FILE");

    int n = 0;
    std::string variant = "left";
    auto* newton = app.add_subcommand("newton", "Newton primitives and Z_n in the P' basis");
    newton->add_option("n", n, "Index")->required();
    newton->add_option("--variant", variant, "Which expansion")
        ->check(CLI::IsMember({"left", "right", "explicit", "z-in-p", "z-in-p-via-c"}));

    std::string direction = "z-of-u";
    auto* explog = app.add_subcommand("explog", "Exp/log change of generators between Z and U");
    explog->add_option("n", n, "Index")->required();
    explog->add_option("--direction", direction, "z-of-u or u-of-z")->check(CLI::IsMember({"z-of-u", "u-of-z"}));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "primitivity | newton-consistency | iso | qsymm-hs | hopf-laws")->required();

    std::string action;
    std::string input;
    std::string output;
    int trunc = 6;
    auto* hs = app.add_subcommand("hs", "Hasse-Schmidt family conversions");
    hs->add_option("action", action,
                   "validate | extract-delta | extract-partial | build-from-delta | build-from-partial | catalog")
        ->required();
    hs->add_option("file", input, "Input family file (or catalog entry name)")->required();
    hs->add_option("output", output, "Output file (default: --out or stdout)");
    hs->add_option("--trunc", trunc, "Truncation/order for catalog entries (default 6)");

    std::string op;
    std::vector<std::string> qargs;
    auto* qsymm = app.add_subcommand("qsymm", "Quasi-symmetric functions in the monomial basis");
    qsymm->add_option("op", op, "product A B | deconcat C | d N C | alpha N C")->required();
    qsymm->add_option("args", qargs, "Compositions such as 2,1 (use () for the unit)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*newton) return run_newton(cfg, n, variant);
        if (*explog) return run_explog(cfg, n, direction);
        if (*verify) return run_verify(cfg, suite);
        if (*hs) return run_hs(cfg, action, input, output.empty() ? cfg.out : output, trunc);
        if (*qsymm) return run_qsymm(cfg, op, qargs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const nsymm::io::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
