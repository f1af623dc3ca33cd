#include "exprimes/verifier.hpp"

#include "exprimes/dimensions.hpp"

#include <algorithm>
#include <map>

namespace exprimes {

std::string to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::Auto: return "auto";
        case VerifyMode::Residue: return "residue-point";
        case VerifyMode::Norm: return "norm-divisibility";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::NormCertified: return "norm-certified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

unsigned point_zeta_order(const DirichletCharacter& nu) {
    const auto o = static_cast<unsigned>(nu.order());
    return o % 4 == 2 ? o / 2 : o;
}

bool obstructed(const NewformFixture& fx, std::uint64_t ell, std::uint64_t T, std::uint64_t* at = nullptr) {
    for (std::uint64_t n = 1; n <= T; ++n) {
        for (const auto& c : fx.an.at(n)) {
            if (Integer(c.get_den() % big(ell)) == 0) {
                if (at) *at = n;
                return true;
            }
        }
    }
    return false;
}

unsigned valuation_of(Integer n, std::uint64_t ell) {
    unsigned v = 0;
    const Integer L = big(ell);
    n = abs(n);
    while (n != 0 && n % L == 0) {
        n /= L;
        ++v;
    }
    return v;
}

std::vector<DirichletCharacter> characters_for(unsigned k, std::uint64_t N, const VerifyOptions& opt) {
    if (opt.nu) {
        const auto c = opt.nu->modulus();
        if (!opt.nu->is_primitive()) throw DomainError("verify: the character must be primitive");
        if (N % (c * c) != 0) throw DomainError("verify: the square of the character modulus must divide N");
        if (k == 2 && c == 1) throw DomainError("verify: E is undefined for weight 2 and the trivial character");
        return {*opt.nu};
    }
    std::vector<DirichletCharacter> out;
    for (std::uint64_t c = 1; c * c <= N; ++c) {
        if (N % (c * c) != 0) continue;
        if (c == 1) {
            if (k > 2) out.push_back(DirichletCharacter::trivial(1));
            continue;
        }
        for (auto& nu : enumerate_characters(c, CharacterFilter::Primitive)) out.push_back(std::move(nu));
    }
    return out;
}

struct Tally {
    bool any_pass = false;
    std::optional<std::size_t> first_pass;
    std::uint64_t refuted_at = 0;
};

void finish(VerificationResult& r, const Tally& t, Verdict success, std::uint64_t T) {
    if (t.any_pass) {
        const auto& c = r.candidates[*t.first_pass];
        r.eisenstein = c.description;
        r.nu = c.nu;
        r.witness = c.point;
        if (T >= r.sturm) {
            r.verdict = success;
            r.reason = "all n <= " + std::to_string(T) + " prime to " + std::to_string(r.ell) + " agree";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.reason = "insufficient coefficients: n_max = " + std::to_string(T) + " < Sturm bound " + std::to_string(r.sturm);
        }
    } else if (r.candidates.empty()) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "no Eisenstein series applies";
    } else {
        r.verdict = Verdict::Refuted;
        r.refuted_at = t.refuted_at;
        r.reason = "every Eisenstein series disagrees by n = " + std::to_string(t.refuted_at);
    }
}

}  // namespace

std::vector<std::pair<std::string, QExpansion>> eisenstein_candidates(unsigned k, std::uint64_t N,
                                                                      const DirichletCharacter& nu, std::uint64_t T) {
    const std::uint64_t c = nu.modulus();
    if (N % (c * c) != 0) throw DomainError("eisenstein_candidates: c^2 must divide N");
    std::vector<std::pair<std::string, QExpansion>> out;
    out.emplace_back("E_" + std::to_string(k) + "[" + nu.label() + "]", eisenstein_E(k, nu, T));
    const DirichletCharacter inv = nu.inverse();
    for (const auto& [p, v] : factor_u64(N)) {
        if (c % p == 0) continue;
        const CycloElement a1 = nu.value(static_cast<long>(p));
        const CycloElement a2 = inv.value(static_cast<long>(p)).scale(Rational(ipow(big(p), k - 1)));
        const std::string ps = std::to_string(p);
        std::vector<std::pair<std::string, QExpansion>> next;
        for (auto& [d, s] : out) {
            if (v == 1) {
                next.emplace_back(d + ", U_" + ps + " = nu(" + ps + ")", stabilize(s, p, a2));
                next.emplace_back(d + ", U_" + ps + " = nu^-1(" + ps + ")" + ps + "^" + std::to_string(k - 1),
                                  stabilize(s, p, a1));
            } else {
                next.emplace_back(d + ", U_" + ps + " = 0", stabilize(stabilize(s, p, a2), p, a1));
            }
        }
        out = std::move(next);
    }
    return out;
}

ScanResult frobenius_scan(const NewformFixture& fx, std::uint64_t ell, std::uint64_t pmax) {
    if (!is_prime_u64(ell)) throw DomainError("frobenius_scan: ell must be prime");
    ScanResult r;
    r.label = fx.label;
    r.ell = ell;
    r.pmax = pmax;
    if (fx.level % ell == 0) r.warnings.push_back("ell = " + std::to_string(ell) + " divides the level");
    const auto primes = primes_up_to(pmax);
    for (auto& pt : find_residue_points(fx, 1, ell)) {
        ScanPoint sp;
        const FiniteField& F = *pt.field;
        for (auto p : primes) {
            if (p == ell || fx.level % p == 0) continue;
            ScanEntry e;
            e.p = p;
            if (!fx.has(p)) {
                e.status = ScanEntry::Status::Missing;
                sp.partial = true;
            } else {
                try {
                    const FqElem ap = pt.reduce(fx.coefficient(p));
                    const FqElem c = F.from_int(static_cast<std::int64_t>(powmod_u64(p % ell, fx.weight - 1, ell)));
                    e.status = quadratic_is_irreducible(F, F.neg(ap), c) ? ScanEntry::Status::Irreducible
                                                                         : ScanEntry::Status::Reducible;
                } catch (const DenominatorObstruction&) {
                    e.status = ScanEntry::Status::Obstructed;
                }
            }
            if (e.status == ScanEntry::Status::Irreducible && !sp.witness) sp.witness = p;
            sp.entries.push_back(e);
        }
        sp.point = std::move(pt);
        r.points.push_back(std::move(sp));
    }
    return r;
}

SteinbergReport steinberg_consistency(const NewformFixture& fx) {
    SteinbergReport r;
    const unsigned k = fx.weight;
    for (const auto& [p, e] : factor_u64(fx.level)) {
        const std::string ps = std::to_string(p);
        if (e >= 2) {
            if (fx.has(p) && !fx.coefficient(p).is_zero()) {
                r.ok = false;
                r.violations.push_back("a_" + ps + " must vanish since " + ps + "^2 | N");
            }
            continue;
        }
        const Integer unit = ipow(big(p), k / 2 - 1);
        std::optional<int> sign;
        if (fx.has(p)) {
            const QPoly ap = fx.coefficient(p);
            if (ap == QPoly::constant(Rational(unit))) sign = 1;
            else if (ap == QPoly::constant(Rational(-unit))) sign = -1;
            else {
                r.ok = false;
                r.violations.push_back("a_" + ps + "^2 = " + ps + "^" + std::to_string(k - 2) + " fails");
                continue;
            }
        }
        if (auto it = fx.steinberg_signs.find(p); it != fx.steinberg_signs.end()) {
            if (sign && *sign != it->second) {
                r.ok = false;
                r.violations.push_back("declared sign at " + ps + " disagrees with a_" + ps);
                continue;
            }
            sign = it->second;
        }
        if (sign) r.signs[p] = *sign;
        else r.missing.push_back(p);
    }
    return r;
}

VerificationResult verify_reducible(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt) {
    if (!is_prime_u64(ell)) throw DomainError("verify: ell must be prime");
    const unsigned k = fx.weight;
    const std::uint64_t N = fx.level;
    VerificationResult r;
    r.label = fx.label;
    r.ell = ell;
    r.weight = k;
    r.level = N;
    r.sturm = sturm_bound(k, N);
    if (N % ell == 0) r.warnings.push_back("ell = " + std::to_string(ell) + " divides the level");
    std::uint64_t T = fx.n_max();
    if (opt.max_terms) T = std::min(T, *opt.max_terms);
    r.checked_up_to = T;

    std::uint64_t obstruct_at = 0;
    const bool blocked = obstructed(fx, ell, T, &obstruct_at);
    VerifyMode mode = opt.mode;
    if (mode == VerifyMode::Auto) mode = blocked ? VerifyMode::Norm : VerifyMode::Residue;
    if (blocked && opt.mode == VerifyMode::Auto)
        r.warnings.push_back("denominator obstruction at a_" + std::to_string(obstruct_at) + "; using norm-divisibility mode");
    r.mode = mode;
    if (mode == VerifyMode::Residue && blocked) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "denominator obstruction at a_" + std::to_string(obstruct_at) + "; rerun with --mode norm";
        return r;
    }
    if (T == 0) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "insufficient coefficients: none available";
        return r;
    }

    std::vector<QPoly> an(T + 1);
    for (std::uint64_t n = 1; n <= T; ++n) an[n] = fx.coefficient(n);

    // Fixture coefficients reduced at each point, per zeta order.
    std::map<unsigned, std::vector<std::pair<ResiduePoint, std::vector<FqElem>>>> reduced;
    auto points_for = [&](unsigned z) -> const std::vector<std::pair<ResiduePoint, std::vector<FqElem>>>& {
        auto it = reduced.find(z);
        if (it != reduced.end()) return it->second;
        std::vector<std::pair<ResiduePoint, std::vector<FqElem>>> pts;
        for (auto& pt : find_residue_points(fx, z, ell)) {
            std::vector<FqElem> red(T + 1);
            for (std::uint64_t n = 1; n <= T; ++n)
                if (n % ell != 0) red[n] = pt.reduce(an[n]);
            pts.emplace_back(std::move(pt), std::move(red));
        }
        return reduced.emplace(z, std::move(pts)).first->second;
    };

    Tally tally;
    for (const auto& nu : characters_for(k, N, opt)) {
        for (auto& [desc, E] : eisenstein_candidates(k, N, nu, T)) {
            CandidateOutcome out;
            out.description = desc;
            out.nu = nu;
            if (mode == VerifyMode::Residue) {
                const unsigned z = point_zeta_order(nu);
                std::uint64_t best = 0;
                for (const auto& [pt, red] : points_for(z)) {
                    std::uint64_t n = 1;
                    for (; n <= T; ++n) {
                        if (n % ell == 0) continue;
                        if (pt.reduce(E[n]) != red[n]) break;
                    }
                    if (n - 1 > best || !out.point) {
                        best = n - 1;
                        out.point = pt;
                    }
                    if (best == T) break;
                }
                out.agrees_to = best;
            } else {
                unsigned M = 1;
                for (std::uint64_t n = 1; n <= T; ++n) M = static_cast<unsigned>(lcm_u64(M, E[n].index()));
                std::uint64_t n = 1;
                std::vector<NormWitness> ws;
                for (; n <= T; ++n) {
                    if (n % ell == 0) continue;
                    const Rational nm = compositum_norm(an[n], E[n].embed(M).as_poly(), fx.field_poly, M);
                    if (nm.get_den() != 1) throw DomainError("norm of an algebraic integer is not integral");
                    NormWitness w;
                    w.n = n;
                    w.norm = nm.get_num();
                    w.zero = nm == 0;
                    w.valuation = w.zero ? 0 : valuation_of(w.norm, ell);
                    ws.push_back(w);
                    if (!w.zero && w.valuation == 0) break;
                }
                out.agrees_to = n - 1;
                if (out.agrees_to == T && !tally.any_pass) r.norm_witnesses = std::move(ws);
            }
            if (out.agrees_to < T) out.first_mismatch = out.agrees_to + 1;
            if (out.agrees_to == T && !tally.any_pass) {
                tally.any_pass = true;
                tally.first_pass = r.candidates.size();
            }
            if (out.first_mismatch) tally.refuted_at = std::max(tally.refuted_at, *out.first_mismatch);
            r.candidates.push_back(std::move(out));
        }
    }
    finish(r, tally, mode == VerifyMode::Residue ? Verdict::Certified : Verdict::NormCertified, T);
    if (r.verdict == Verdict::Refuted) r.scan = frobenius_scan(fx, ell, opt.scan_pmax);
    return r;
}

VerificationResult verify_weight2_squarefree(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt) {
    if (!is_prime_u64(ell)) throw DomainError("verify: ell must be prime");
    if (fx.weight != 2) throw DomainError("verify_weight2_squarefree: weight must be 2");
    if (!is_squarefree(fx.level) || fx.level == 1) throw DomainError("verify_weight2_squarefree: level must be square-free and > 1");
    if ((6 * fx.level) % ell == 0) throw DomainError("verify_weight2_squarefree: ell divides 6N");
    VerificationResult r;
    r.label = fx.label;
    r.ell = ell;
    r.weight = 2;
    r.level = fx.level;
    r.mode = VerifyMode::Residue;
    r.sturm = sturm_bound(2, fx.level);
    std::uint64_t T = fx.n_max();
    if (opt.max_terms) T = std::min(T, *opt.max_terms);
    r.checked_up_to = T;

    const SteinbergReport st = steinberg_consistency(fx);
    if (!st.ok) throw FixtureError(st.violations.front());
    if (!st.missing.empty()) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "missing Steinberg sign at p = " + std::to_string(st.missing.front());
        return r;
    }
    std::vector<std::pair<std::uint64_t, int>> signs(st.signs.begin(), st.signs.end());
    std::string desc = "E' = prod(a_p U_p - p) E_2, signs";
    for (const auto& [p, s] : signs) desc += " " + std::to_string(p) + (s > 0 ? ":+1" : ":-1");
    r.eisenstein = desc;
    if (std::all_of(signs.begin(), signs.end(), [](const auto& ps) { return ps.second == -1; })) {
        r.verdict = Verdict::Refuted;
        r.refuted_at = 0;
        r.reason = "all Steinberg signs are -1, which no Eisenstein congruence allows";
        r.scan = frobenius_scan(fx, ell, opt.scan_pmax);
        return r;
    }
    for (const auto& [p, s] : signs) {
        if (s == -1 && (p + 1) % ell != 0) {
            r.verdict = Verdict::Refuted;
            r.refuted_at = p;
            r.reason = "a_" + std::to_string(p) + " = -1 needs p = -1 mod ell";
            r.scan = frobenius_scan(fx, ell, opt.scan_pmax);
            return r;
        }
    }
    if (obstructed(fx, ell, T)) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "denominator obstruction";
        return r;
    }
    const ModQExpansion Ep = eprime_weight2_steinberg(signs, ell, T);
    CandidateOutcome out;
    out.description = desc;
    if (Ep[0] != 0) {
        out.agrees_to = 0;
        out.first_mismatch = 0;
        r.candidates.push_back(out);
        r.verdict = Verdict::Refuted;
        r.refuted_at = 0;
        r.reason = "constant term of E' is nonzero mod ell";
        r.scan = frobenius_scan(fx, ell, opt.scan_pmax);
        return r;
    }
    const std::uint64_t a1 = Ep[1];
    if (a1 == 0) throw DomainError("E' has a_1 = 0 mod ell");
    const std::uint64_t inv = invmod_u64(a1, ell);
    std::uint64_t best = 0;
    for (auto& pt : find_residue_points(fx, 1, ell)) {
        std::uint64_t n = 1;
        for (; n <= T; ++n) {
            if (n % ell == 0) continue;
            const FqElem want = pt.field->from_int(static_cast<std::int64_t>(mulmod_u64(Ep[n], inv, ell)));
            if (pt.reduce(fx.coefficient(n)) != want) break;
        }
        if (n - 1 > best || !out.point) {
            best = n - 1;
            out.point = pt;
        }
    }
    out.agrees_to = best;
    if (best < T) out.first_mismatch = best + 1;
    Tally tally;
    if (best == T) {
        tally.any_pass = true;
        tally.first_pass = 0;
    } else {
        tally.refuted_at = best + 1;
    }
    r.candidates.push_back(out);
    finish(r, tally, Verdict::Certified, T);
    if (r.verdict == Verdict::Refuted) r.scan = frobenius_scan(fx, ell, opt.scan_pmax);
    return r;
}

VerificationResult verify(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt) {
    if (fx.weight == 2 && is_squarefree(fx.level) && fx.level > 1 && !opt.nu) return verify_weight2_squarefree(fx, ell, opt);
    return verify_reducible(fx, ell, opt);
}

}  // namespace exprimes
