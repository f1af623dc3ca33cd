#include "cli.hpp"

#include "exprimes/bounds.hpp"
#include "exprimes/dimensions.hpp"
#include "exprimes/factor_cache.hpp"
#include "exprimes/fixture.hpp"
#include "exprimes/report.hpp"
#include "exprimes/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

namespace exprimes::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "json";
    std::string out_path;
    bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", c.out_path, "Write the report here instead of stdout");
    sub->add_flag("--timing", c.timing, "Record wall-clock seconds in the report");
}

struct Args {
    Common common;
    unsigned weight = 0;
    std::uint64_t level = 0;
    std::optional<unsigned> degree;
    bool non_cm = false;
    std::string cache_dir;
    std::string form;
    std::uint64_t ell = 0;
    std::optional<std::uint64_t> char_modulus;
    std::optional<std::uint64_t> char_index;
    std::string mode = "auto";
    std::optional<std::uint64_t> terms;
    std::uint64_t pmax = 100;
    std::uint64_t modulus = 0;
    bool primitive_only = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_weight(unsigned k) {
    if (k < 2 || k % 2 != 0) throw UsageError("--weight must be even and at least 2");
}

void check_ell(std::uint64_t ell) {
    if (!is_prime_u64(ell)) throw UsageError("--ell must be a prime");
}

std::optional<DirichletCharacter> character_arg(const Args& a) {
    if (!a.char_modulus && !a.char_index) return std::nullopt;
    const std::uint64_t m = a.char_modulus.value_or(1);
    if (m == 0) throw UsageError("--char-modulus must be positive");
    const std::uint64_t idx = a.char_index.value_or(0);
    if (idx >= CharacterGroup::get(m)->size())
        throw UsageError("--char-index out of range for modulus " + std::to_string(m));
    return DirichletCharacter::from_index(m, idx);
}

VerifyMode mode_arg(const std::string& s) {
    if (s == "residue") return VerifyMode::Residue;
    if (s == "norm") return VerifyMode::Norm;
    return VerifyMode::Auto;
}

// q-series in the usual notation; coefficients in Q(zeta_idx) with z = zeta_idx.
std::string series_text(const QExpansion& f) {
    unsigned idx = 1;
    for (const auto& c : f.coeffs()) idx = static_cast<unsigned>(lcm_u64(idx, c.index()));
    std::ostringstream os;
    bool first = true;
    for (std::uint64_t n = 0; n <= f.truncation(); ++n) {
        const CycloElement c = f[n].embed(idx);
        if (c.is_zero()) continue;
        std::string s = c.to_string();
        const bool compound = s.find_first_of("+-", 1) != std::string::npos;
        std::string mono = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
        std::string term;
        if (n == 0)
            term = compound ? "(" + s + ")" : s;
        else if (s == "1")
            term = mono;
        else if (s == "-1")
            term = "-" + mono;
        else
            term = (compound ? "(" + s + ")" : s) + "*" + mono;
        if (!first) os << (term[0] == '-' ? " - " + term.substr(1) : " + " + term);
        else os << term;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << f.truncation() + 1 << ")";
    if (idx > 1) os << "\nz = zeta_" << idx;
    return os.str() + "\n";
}

std::string dims_text(const json& o) {
    std::ostringstream os;
    os << "weight " << o["weight"].get<unsigned>() << ", level " << o["level"].get<std::string>() << "\n";
    os << "index " << o["index"].get<std::string>() << ", genus " << o["genus"].get<std::int64_t>() << ", cusps "
       << o["cusps"].get<std::string>() << ", elliptic points " << o["nu2"].get<std::string>() << " (order 2) "
       << o["nu3"].get<std::string>() << " (order 3)\n";
    os << "dim S_k   " << o["dim_cusp"].get<std::int64_t>() << "\n";
    os << "dim new   " << o["dim_new"].get<std::int64_t>() << "\n";
    os << "sturm     " << o["sturm_bound"].get<std::string>() << "\n";
    return os.str();
}

std::string characters_text(const std::vector<DirichletCharacter>& chars) {
    std::ostringstream os;
    for (const auto& chi : chars) {
        os << chi.label() << "  order " << chi.order() << "  conductor " << chi.conductor() << "  "
           << (chi.is_even() ? "even" : "odd") << (chi.is_primitive() ? "  primitive" : "") << "  images";
        for (const auto& v : chi.generator_images()) os << " " << v.to_string();
        os << "\n";
    }
    if (!chars.empty()) {
        os << "generators";
        for (auto g : chars.front().group().generators()) os << " " << g;
        os << "; z = zeta_order\n";
    }
    return os.str();
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified:
        case Verdict::NormCertified:
            return kOk;
        case Verdict::Refuted:
            return kRefuted;
        case Verdict::Inconclusive:
            return kInconclusive;
    }
    return kInconclusive;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + c.out_path);
    f << text;
    if (!f) throw UsageError("write failed for " + c.out_path);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string timing_line(const Envelope& env) {
    if (!env.seconds) return "";
    std::ostringstream os;
    os << "time " << *env.seconds << " s\n";
    return os.str();
}

std::string warning_lines(const std::vector<std::string>& w) {
    std::string s;
    for (const auto& x : w) s += "warning: " + x + "\n";
    return s;
}

int cmd_bound(const Args& a, std::ostream& out) {
    check_weight(a.weight);
    if (a.level == 0) throw UsageError("--level must be positive");
    if (a.degree && *a.degree == 0) throw UsageError("--degree must be positive");
    std::unique_ptr<FactorCache> cache =
        a.cache_dir.empty() ? std::make_unique<FactorCache>() : std::make_unique<FactorCache>(a.cache_dir);

    Envelope env;
    env.command = "bound";
    env.inputs = {{"weight", a.weight}, {"level", std::to_string(a.level)}, {"non_cm", a.non_cm}};
    if (a.degree) env.inputs["degree"] = *a.degree;

    BoundOptions opt;
    opt.degree = a.degree;
    opt.non_cm = a.non_cm;
    opt.cache = cache.get();
    const auto t0 = Clock::now();
    const CandidateReport r = candidate_report(a.weight, a.level, opt);
    if (a.common.timing) env.seconds = seconds_since(t0);
    cache->flush();
    env.outputs = to_json(r);
    env.warnings = cache->warnings();

    if (a.common.format == "text")
        emit(a.common, render_text(r) + warning_lines(env.warnings) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
    check_ell(a.ell);
    const NewformFixture fx = load_fixture(a.form);
    VerifyOptions opt;
    opt.mode = mode_arg(a.mode);
    opt.nu = character_arg(a);
    opt.max_terms = a.terms;
    opt.scan_pmax = a.pmax;

    Envelope env;
    env.command = "verify";
    env.inputs = {{"form", fx.label}, {"ell", std::to_string(a.ell)}, {"mode", to_string(opt.mode)}};
    if (opt.nu) env.inputs["character"] = opt.nu->label();
    if (a.terms) env.inputs["terms"] = std::to_string(*a.terms);

    const auto t0 = Clock::now();
    const VerificationResult r = verify(fx, a.ell, opt);
    if (a.common.timing) env.seconds = seconds_since(t0);
    env.outputs = to_json(r);
    env.warnings = r.warnings;

    if (a.common.format == "text")
        emit(a.common, render_text(r) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return exit_code(r.verdict);
}

int cmd_scan(const Args& a, std::ostream& out) {
    check_ell(a.ell);
    const NewformFixture fx = load_fixture(a.form);
    Envelope env;
    env.command = "scan";
    env.inputs = {{"form", fx.label}, {"ell", std::to_string(a.ell)}, {"pmax", std::to_string(a.pmax)}};
    const auto t0 = Clock::now();
    const ScanResult r = frobenius_scan(fx, a.ell, a.pmax);
    if (a.common.timing) env.seconds = seconds_since(t0);
    env.outputs = to_json(r);
    env.warnings = r.warnings;
    if (a.common.format == "text")
        emit(a.common, render_text(r) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return kOk;
}

int cmd_dims(const Args& a, std::ostream& out) {
    check_weight(a.weight);
    if (a.level == 0) throw UsageError("--level must be positive");
    Envelope env;
    env.command = "dims";
    env.inputs = {{"weight", a.weight}, {"level", std::to_string(a.level)}};
    const auto t0 = Clock::now();
    const LevelInvariants inv = level_invariants(a.level);
    env.outputs = {{"weight", a.weight},
                   {"level", std::to_string(a.level)},
                   {"index", std::to_string(inv.index)},
                   {"genus", inv.genus},
                   {"cusps", std::to_string(inv.nu_inf)},
                   {"nu2", std::to_string(inv.nu2)},
                   {"nu3", std::to_string(inv.nu3)},
                   {"dim_cusp", dim_cusp_forms(a.weight, a.level)},
                   {"dim_new", dim_new(a.weight, a.level)},
                   {"sturm_bound", std::to_string(sturm_bound(a.weight, a.level))}};
    if (a.common.timing) env.seconds = seconds_since(t0);
    if (a.common.format == "text")
        emit(a.common, dims_text(env.outputs) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return kOk;
}

int cmd_eisenstein(const Args& a, std::ostream& out) {
    check_weight(a.weight);
    const DirichletCharacter nu = character_arg(a).value_or(DirichletCharacter());
    if (!nu.is_primitive()) throw UsageError(nu.label() + " is not primitive");
    if (a.weight == 2 && nu.modulus() == 1) throw UsageError("weight 2 with the trivial character has no Eisenstein series here");
    const std::uint64_t T = a.terms.value_or(10);

    Envelope env;
    env.command = "eisenstein";
    env.inputs = {{"weight", a.weight}, {"character", nu.label()}, {"terms", std::to_string(T)}};
    const auto t0 = Clock::now();
    const QExpansion E = eisenstein_E(a.weight, nu, T);
    if (a.common.timing) env.seconds = seconds_since(t0);
    env.outputs = to_json(E);
    env.outputs["character"] = to_json(nu);
    if (a.common.format == "text")
        emit(a.common, series_text(E) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return kOk;
}

int cmd_characters(const Args& a, std::ostream& out) {
    if (a.modulus == 0) throw UsageError("--modulus must be positive");
    if (a.modulus > 100000) throw UsageError("--modulus is too large to list");
    Envelope env;
    env.command = "characters";
    env.inputs = {{"modulus", std::to_string(a.modulus)}, {"primitive", a.primitive_only}};
    const auto t0 = Clock::now();
    const auto chars =
        enumerate_characters(a.modulus, a.primitive_only ? CharacterFilter::Primitive : CharacterFilter::All);
    if (a.common.timing) env.seconds = seconds_since(t0);
    json list = json::array();
    for (const auto& chi : chars) list.push_back(to_json(chi));
    env.outputs = {{"characters", list}, {"count", chars.size()}};
    if (a.common.format == "text")
        emit(a.common, characters_text(chars) + timing_line(env), out);
    else
        emit(a.common, render_json(env), out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exceptional primes of modular newforms", "exprimes"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);
    Args a;

    auto* bound = app.add_subcommand("bound", "Candidate exceptional primes for weight k and level N");
    bound->add_option("--weight", a.weight, "Even weight k")->required();
    bound->add_option("--level", a.level, "Level N")->required();
    bound->add_option("--degree", a.degree, "Degree of the coefficient field, if known");
    bound->add_flag("--non-cm", a.non_cm, "Assume the form has no complex multiplication");
    bound->add_option("--cache-dir", a.cache_dir, "Directory for the factorization cache");

    auto* verify = app.add_subcommand("verify", "Certify or refute reducibility at ell from a fixture");
    verify->add_option("--form", a.form, "Newform fixture (JSON)")->required();
    verify->add_option("--ell", a.ell, "Prime ell")->required();
    verify->add_option("--char-modulus", a.char_modulus, "Modulus of the character nu");
    verify->add_option("--char-index", a.char_index, "Index of nu (see 'characters')");
    verify->add_option("--mode", a.mode, "Comparison mode")->check(CLI::IsMember({"auto", "residue", "norm"}));
    verify->add_option("--terms", a.terms, "Compare at most this many coefficients");
    verify->add_option("--pmax", a.pmax, "Scan bound used when refuting");

    auto* dims = app.add_subcommand("dims", "Dimensions and Sturm bound for S_k(Gamma0(N))");
    dims->add_option("--weight", a.weight, "Even weight k")->required();
    dims->add_option("--level", a.level, "Level N")->required();

    auto* eis = app.add_subcommand("eisenstein", "q-expansion of the Eisenstein series E_k^nu");
    eis->add_option("--weight", a.weight, "Weight k")->required();
    eis->add_option("--char-modulus", a.char_modulus, "Modulus of nu (primitive)");
    eis->add_option("--char-index", a.char_index, "Index of nu (see 'characters')");
    eis->add_option("--terms", a.terms, "Last coefficient index");

    auto* scan = app.add_subcommand("scan", "Frobenius irreducibility scan at the primes above ell");
    scan->add_option("--form", a.form, "Newform fixture (JSON)")->required();
    scan->add_option("--ell", a.ell, "Prime ell")->required();
    scan->add_option("--pmax", a.pmax, "Largest p to test");

    auto* chars = app.add_subcommand("characters", "Dirichlet characters modulo m with their indices");
    chars->add_option("--modulus", a.modulus, "Modulus m")->required();
    chars->add_flag("--primitive", a.primitive_only, "Only primitive characters");

    for (auto* sub : {bound, verify, dims, eis, scan, chars}) add_common(sub, a.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*bound) return cmd_bound(a, out);
        if (*verify) return cmd_verify(a, out);
        if (*dims) return cmd_dims(a, out);
        if (*eis) return cmd_eisenstein(a, out);
        if (*scan) return cmd_scan(a, out);
        if (*chars) return cmd_characters(a, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return kUsage;
    } catch (const FixtureError& e) {
        err << "error: invalid fixture: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace exprimes::cli
