#include "exprimes/fixture.hpp"

#include "exprimes/finite_field.hpp"
#include "exprimes/qexpansion.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace exprimes {

using nlohmann::json;

std::uint64_t NewformFixture::n_max() const {
    std::uint64_t n = 0;
    while (an.count(n + 1)) ++n;
    return n;
}

QPoly NewformFixture::coefficient(std::uint64_t n) const {
    auto it = an.find(n);
    if (it == an.end()) throw TruncationError("fixture " + label + " has no a_" + std::to_string(n));
    return QPoly(it->second);
}

namespace {

Integer json_integer(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0) throw FixtureError(what + ": not an integer");
        return out;
    }
    throw FixtureError(what + ": expected an integer");
}

Rational json_rational(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw FixtureError(what + ": expected a decimal string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
        throw FixtureError(what + ": malformed rational '" + v.get<std::string>() + "'");
    }
}

std::uint64_t parse_index(const std::string& key, const std::string& what) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw FixtureError(what + ": bad index '" + key + "'");
    return std::stoull(key);
}

std::vector<unsigned> subset_sums(const std::vector<unsigned>& degs, unsigned n) {
    std::vector<unsigned> reach(n + 1, 0);
    reach[0] = 1;
    for (auto d : degs)
        for (unsigned s = n; s >= d && s > 0; --s)
            if (reach[s - d]) reach[s] = 1;
    return reach;
}

bool subset_search_finds_factor(const QPoly& f, const std::vector<unsigned>& possible) {
    const auto roots = complex_roots(f);
    const std::size_t n = roots.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (!possible[d]) continue;
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::complex<long double>> prod{1.0L};
            for (auto i : idx) {
                std::vector<std::complex<long double>> next(prod.size() + 1, 0.0L);
                for (std::size_t j = 0; j < prod.size(); ++j) {
                    next[j + 1] += prod[j];
                    next[j] -= prod[j] * roots[i];
                }
                prod = std::move(next);
            }
            std::vector<Rational> g;
            bool integral = true;
            for (auto& c : prod) {
                const long double r = std::round(c.real());
                if (std::fabs(c.real() - r) > 1e-6L * std::max(1.0L, std::fabs(r)) || std::fabs(c.imag()) > 1e-6L) {
                    integral = false;
                    break;
                }
                g.emplace_back(Integer(std::to_string(static_cast<long long>(r))));
            }
            if (integral && (f % QPoly(g)).is_zero()) return true;
            std::size_t i = d;
            while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

bool is_irreducible_over_q(const QPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto n = static_cast<unsigned>(f.degree());
    std::vector<unsigned> possible(n + 1, 1);
    unsigned tried = 0;
    for (auto ell : primes_up_to(5000)) {
        FpPoly fb;
        try {
            fb = fp::reduce(f, ell);
        } catch (const DomainError&) {
            continue;
        }
        if (fp::degree(fb) != static_cast<long>(n)) continue;
        if (fp::degree(fp::gcd(fb, fp::derivative(fb, ell), ell)) > 0) continue;
        std::vector<unsigned> degs;
        for (const auto& fac : fp::factor(fb, ell)) degs.push_back(static_cast<unsigned>(fp::degree(fac.poly)));
        const auto reach = subset_sums(degs, n);
        bool open = false;
        for (unsigned d = 1; d < n; ++d) {
            possible[d] = possible[d] && reach[d];
            open = open || possible[d];
        }
        if (!open) return true;
        if (++tried >= 60) break;
    }
    return !subset_search_finds_factor(f, possible);
}

NewformFixture parse_fixture(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FixtureError("fixture must be a JSON object");
    for (const char* key : {"label", "weight", "level", "field_poly", "an"})
        if (!j.contains(key)) throw FixtureError(std::string("missing field '") + key + "'");

    NewformFixture fx;
    fx.label = j["label"].get<std::string>();
    const Integer k = json_integer(j["weight"], "weight");
    const Integer N = json_integer(j["level"], "level");
    if (k < 2 || k > 1000 || k % 2 != 0) throw FixtureError("weight must be even and at least 2");
    if (N < 1 || !N.fits_ulong_p()) throw FixtureError("level must be a positive machine integer");
    fx.weight = static_cast<unsigned>(k.get_ui());
    fx.level = N.get_ui();
    fx.non_cm = j.value("non_cm", false);

    if (!j["field_poly"].is_array() || j["field_poly"].size() < 2) throw FixtureError("field_poly must have degree >= 1");
    std::vector<Rational> fc;
    for (std::size_t i = 0; i < j["field_poly"].size(); ++i)
        fc.push_back(json_rational(j["field_poly"][i], "field_poly[" + std::to_string(i) + "]"));
    fx.field_poly = QPoly(fc);

    if (!j["an"].is_object()) throw FixtureError("'an' must be an object");
    for (const auto& [key, val] : j["an"].items()) {
        const auto n = parse_index(key, "an");
        if (n == 0) throw FixtureError("an: index 0 is not a Fourier coefficient of a newform");
        if (!val.is_array()) throw FixtureError("a_" + key + " must be an array");
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < val.size(); ++i)
            coords.push_back(json_rational(val[i], "a_" + key + "[" + std::to_string(i) + "]"));
        while (!coords.empty() && coords.back() == 0) coords.pop_back();
        fx.an[n] = std::move(coords);
    }
    if (j.contains("steinberg_signs")) {
        for (const auto& [key, val] : j["steinberg_signs"].items()) {
            const auto p = parse_index(key, "steinberg_signs");
            const Integer s = json_integer(val, "steinberg_signs[" + key + "]");
            if (s != 1 && s != -1) throw FixtureError("steinberg sign at " + key + " must be +1 or -1");
            fx.steinberg_signs[p] = static_cast<int>(s.get_si());
        }
    }
    validate_fixture(fx);
    return fx;
}

NewformFixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot read fixture " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

void validate_fixture(const NewformFixture& fx) {
    const QPoly& f = fx.field_poly;
    if (f.leading() != 1) throw FixtureError("field_poly is not monic");
    if (!f.is_integral()) throw FixtureError("field_poly is not integral");
    if (!is_irreducible_over_q(f)) throw FixtureError("field_poly is reducible over Q");
    for (const auto& [n, coords] : fx.an)
        if (coords.size() > fx.degree())
            throw FixtureError("a_" + std::to_string(n) + " has more coordinates than the field degree");
    if (!fx.has(1)) throw FixtureError("a_1 is missing");
    if (fx.coefficient(1) != QPoly::constant(1)) throw FixtureError("a_1 = 1 fails (not a normalized eigenform)");
    for (const auto& [p, e] : factor_u64(fx.level)) {
        if (e >= 2 && fx.has(p) && !fx.coefficient(p).is_zero())
            throw FixtureError("a_p = 0 fails at p = " + std::to_string(p) + " with p^2 | N");
        if (e == 1 && fx.has(p)) {
            const QPoly ap = fx.coefficient(p);
            const Integer m = ipow(Integer(static_cast<unsigned long>(p)), fx.weight / 2 - 1);
            if (ap != QPoly::constant(Rational(m)) && ap != QPoly::constant(Rational(-m)))
                throw FixtureError("a_p = +-p^(k/2-1) fails at p = " + std::to_string(p) + " with p || N");
        }
    }
    for (const auto& [p, s] : fx.steinberg_signs) {
        if (!is_prime_u64(p) || fx.level % p != 0 || (fx.level / p) % p == 0)
            throw FixtureError("steinberg sign given at " + std::to_string(p) + ", which does not divide N exactly once");
        if (fx.has(p)) {
            const QPoly ap = fx.coefficient(p);
            const Integer expect = ipow(Integer(static_cast<unsigned long>(p)), fx.weight / 2 - 1) * s;
            if (ap != QPoly::constant(Rational(expect)))
                throw FixtureError("a_p = sign * p^(k/2-1) fails at p = " + std::to_string(p));
        }
    }
}

}  // namespace exprimes
