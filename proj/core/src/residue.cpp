#include "exprimes/residue.hpp"

#include <algorithm>
#include <map>

namespace exprimes {

std::string ResiduePoint::ideal() const {
    return "(" + std::to_string(ell) + ", " + fp::to_string(alpha_factor, "a") + ")";
}

std::string ResiduePoint::zeta_ideal() const {
    if (!zeta) return "";
    return "(" + std::to_string(ell) + ", " + fp::to_string(zeta_factor, "z") + ")";
}

FqElem ResiduePoint::reduce(const std::vector<Rational>& coords) const {
    FpPoly c;
    for (const auto& q : coords) {
        try {
            c.push_back(fp::reduce(q, ell));
        } catch (const DomainError& e) {
            throw DenominatorObstruction(e.what());
        }
    }
    return field->eval(c, alpha);
}

FqElem ResiduePoint::reduce(const CycloElement& x) const {
    const unsigned m = x.index();
    FqElem z;
    if (m == 1) {
        z = field->one();
    } else if (m == 2) {
        z = field->neg(field->one());
    } else if (zeta && zeta_order % m == 0) {
        z = field->pow(*zeta, Integer(zeta_order / m));
    } else if (zeta && m % 2 == 0 && (m / 2) % 2 == 1 && zeta_order % (m / 2) == 0) {
        // zeta_{2m'} = -zeta_{m'}^((m'+1)/2) for odd m'
        const unsigned h = m / 2;
        z = field->neg(field->pow(*zeta, Integer(zeta_order / h * ((h + 1) / 2))));
    } else {
        throw DomainError("residue point has no image for zeta_" + std::to_string(m));
    }
    FqElem acc = field->zero();
    FqElem power = field->one();
    for (const auto& c : x.coeffs()) {
        std::uint64_t r;
        try {
            r = fp::reduce(c, ell);
        } catch (const DomainError& e) {
            throw DenominatorObstruction(e.what());
        }
        acc = field->add(acc, field->mul(field->from_int(static_cast<std::int64_t>(r)), power));
        power = field->mul(power, z);
    }
    return acc;
}

std::vector<ResiduePoint> find_residue_points(const QPoly& f, unsigned n, std::uint64_t ell) {
    if (!is_prime_u64(ell)) throw DomainError("find_residue_points: ell must be prime");
    if (f.leading() != 1 || !f.is_integral()) throw DomainError("find_residue_points: f must be monic integral");
    const FpPoly fb = fp::reduce(f, ell);
    const auto f_factors = fp::factor(fb, ell);
    std::vector<fp::Factor> z_factors;
    if (n > 1) z_factors = fp::factor(fp::reduce(cyclotomic_polynomial(n), ell), ell);

    std::vector<ResiduePoint> out;
    std::map<unsigned, std::shared_ptr<const FiniteField>> fields;
    auto field_of = [&](unsigned d) {
        auto& slot = fields[d];
        if (!slot) slot = std::make_shared<const FiniteField>(ell, d);
        return slot;
    };

    for (const auto& g : f_factors) {
        const auto d1 = static_cast<unsigned>(fp::degree(g.poly));
        if (n <= 1) {
            auto F = field_of(d1);
            ResiduePoint pt;
            pt.ell = ell;
            pt.field = F;
            pt.alpha = roots_in_field(*F, g.poly).front();
            pt.alpha_factor = g.poly;
            out.push_back(std::move(pt));
            continue;
        }
        for (const auto& h : z_factors) {
            const auto d2 = static_cast<unsigned>(fp::degree(h.poly));
            const auto D = static_cast<unsigned>(lcm_u64(d1, d2));
            auto F = field_of(D);
            const auto ra = roots_in_field(*F, g.poly);
            const auto rz = roots_in_field(*F, h.poly);
            std::vector<std::pair<FqElem, FqElem>> reps;
            for (const auto& a : ra) {
                for (const auto& z : rz) {
                    std::pair<FqElem, FqElem> best{a, z}, cur{a, z};
                    for (unsigned i = 1; i < D; ++i) {
                        cur = {F->frobenius(cur.first), F->frobenius(cur.second)};
                        best = std::min(best, cur);
                    }
                    if (std::find(reps.begin(), reps.end(), best) == reps.end()) reps.push_back(best);
                }
            }
            std::sort(reps.begin(), reps.end());
            for (auto& [a, z] : reps) {
                ResiduePoint pt;
                pt.ell = ell;
                pt.field = F;
                pt.alpha = a;
                pt.alpha_factor = g.poly;
                pt.zeta_order = n;
                pt.zeta = z;
                pt.zeta_factor = h.poly;
                out.push_back(std::move(pt));
            }
        }
    }
    return out;
}

std::vector<ResiduePoint> find_residue_points(const NewformFixture& fx, unsigned n, std::uint64_t ell) {
    return find_residue_points(fx.field_poly, n, ell);
}

Rational compositum_norm(const QPoly& P, const QPoly& Q, const QPoly& f, unsigned n) {
    if (f.degree() < 1 || f.leading() != 1) throw DomainError("compositum_norm: f must be monic and non-constant");
    const unsigned idx = std::max(n, 1u);
    // G(x) = P(x) - Q(zeta) over Q(zeta); N(G) = prod of its conjugates has rational coefficients.
    const CycloElement q(idx, Q);
    std::vector<CycloElement> G;
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) G.emplace_back(idx, P.coeffs()[i]);
    if (G.empty()) G.emplace_back(idx, Rational(0));
    G[0] = G[0] - q;

    auto mul = [](const std::vector<CycloElement>& a, const std::vector<CycloElement>& b) {
        std::vector<CycloElement> out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<CycloElement> prod{CycloElement::rational(1)};
    for (unsigned j = 1; j <= idx; ++j) {
        if (gcd_u64(j, idx) != 1) continue;
        std::vector<CycloElement> conj;
        for (const auto& c : G) conj.push_back(c.galois(static_cast<long>(j)));
        prod = mul(prod, conj);
    }
    std::vector<Rational> r;
    for (const auto& c : prod) r.push_back(c.rational_value());
    const QPoly R(r);
    if (R.is_zero()) return Rational(0);
    return resultant(f, R);
}

}  // namespace exprimes
