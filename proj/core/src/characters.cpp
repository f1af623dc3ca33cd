#include "exprimes/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace exprimes {

namespace {

constexpr std::uint32_t kNoLog = 0xffffffffu;

std::uint64_t smallest_primitive_root(std::uint64_t p, std::uint64_t pe) {
    const std::uint64_t phi = pe / p * (p - 1);
    const auto fac = factor_u64(phi);
    for (std::uint64_t g = 2;; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (const auto& [q, e] : fac) {
            if (powmod_u64(g, phi / q, pe) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

std::uint64_t crt_lift(std::uint64_t residue, std::uint64_t pe, std::uint64_t m) {
    const std::uint64_t rest = m / pe;
    if (rest == 1) return residue % m;
    // x = 1 + rest * t with x = residue (mod pe)
    const std::uint64_t inv = invmod_u64(rest % pe, pe);
    const std::uint64_t t = mulmod_u64((residue + pe - 1) % pe, inv, pe);
    return (1 + mulmod_u64(rest, t, m)) % m;
}

long mod_pos(long a, std::uint64_t m) {
    const long mm = static_cast<long>(m);
    a %= mm;
    return a < 0 ? a + mm : a;
}

}  // namespace

CharacterGroup::CharacterGroup(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw DomainError("character modulus must be positive");
    struct Table {
        std::uint64_t pe;
        std::vector<std::vector<std::uint32_t>> logs;  // per generator, indexed by residue mod pe
    };
    std::vector<Table> tables;
    for (const auto& [p, e] : factor_u64(modulus)) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        Table t{pe, {}};
        if (p == 2) {
            if (e >= 2) {
                std::vector<std::uint32_t> sign(pe, kNoLog);
                for (std::uint64_t a = 1; a < pe; a += 2) sign[a] = (a % 4 == 1) ? 0 : 1;
                orders_.push_back(2);
                generators_.push_back(crt_lift(pe - 1, pe, modulus));
                component_moduli_.push_back(pe);
                t.logs.push_back(std::move(sign));
            }
            if (e >= 3) {
                const std::uint64_t ord = pe / 4;
                std::vector<std::uint32_t> five(pe, kNoLog);
                std::uint64_t x = 1;
                for (std::uint64_t i = 0; i < ord; ++i) {
                    five[x] = static_cast<std::uint32_t>(i);
                    five[pe - x] = static_cast<std::uint32_t>(i);
                    x = x * 5 % pe;
                }
                orders_.push_back(ord);
                generators_.push_back(crt_lift(5, pe, modulus));
                component_moduli_.push_back(pe);
                t.logs.push_back(std::move(five));
            }
        } else {
            const std::uint64_t g = smallest_primitive_root(p, pe);
            const std::uint64_t ord = pe / p * (p - 1);
            std::vector<std::uint32_t> lg(pe, kNoLog);
            std::uint64_t x = 1;
            for (std::uint64_t i = 0; i < ord; ++i) {
                lg[x] = static_cast<std::uint32_t>(i);
                x = mulmod_u64(x, g, pe);
            }
            orders_.push_back(ord);
            generators_.push_back(crt_lift(g, pe, modulus));
            component_moduli_.push_back(pe);
            t.logs.push_back(std::move(lg));
        }
        tables.push_back(std::move(t));
    }
    for (auto o : orders_) size_ *= o;

    logs_.assign(modulus * orders_.size(), kNoLog);
    for (std::uint64_t a = 0; a < modulus; ++a) {
        if (gcd_u64(a, modulus) != 1) continue;
        std::size_t i = 0;
        for (const auto& t : tables)
            for (const auto& lg : t.logs) logs_[a * orders_.size() + i++] = lg[a % t.pe];
    }
}

std::shared_ptr<const CharacterGroup> CharacterGroup::get(std::uint64_t modulus) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const CharacterGroup>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[modulus];
    if (!slot) slot = std::shared_ptr<const CharacterGroup>(new CharacterGroup(modulus));
    return slot;
}

bool CharacterGroup::log(std::uint64_t a, std::vector<std::uint64_t>& out) const {
    a %= modulus_;
    if (gcd_u64(a, modulus_) != 1) return false;
    out.resize(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = logs_[a * orders_.size() + i];
    return true;
}

DirichletCharacter::DirichletCharacter() : group_(CharacterGroup::get(1)) { finish(); }

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<std::uint64_t> exponents)
    : group_(CharacterGroup::get(modulus)), exponents_(std::move(exponents)) {
    if (exponents_.size() != group_->rank()) throw DomainError("character exponent count does not match group rank");
    for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] %= group_->generator_orders()[i];
    finish();
}

DirichletCharacter DirichletCharacter::trivial(std::uint64_t modulus) {
    return DirichletCharacter(modulus, std::vector<std::uint64_t>(CharacterGroup::get(modulus)->rank(), 0));
}

DirichletCharacter DirichletCharacter::from_index(std::uint64_t modulus, std::uint64_t index) {
    auto g = CharacterGroup::get(modulus);
    if (index >= g->size()) throw DomainError("character index out of range");
    std::vector<std::uint64_t> ex(g->rank());
    for (std::size_t i = g->rank(); i-- > 0;) {
        ex[i] = index % g->generator_orders()[i];
        index /= g->generator_orders()[i];
    }
    return DirichletCharacter(modulus, std::move(ex));
}

std::uint64_t DirichletCharacter::index() const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) idx = idx * group_->generator_orders()[i] + exponents_[i];
    return idx;
}

void DirichletCharacter::finish() {
    const auto& ords = group_->generator_orders();
    order_ = 1;
    for (std::size_t i = 0; i < ords.size(); ++i) order_ = lcm_u64(order_, ords[i] / gcd_u64(ords[i], exponents_[i]));

    conductor_ = 1;
    const auto& comp = group_->component_moduli();
    for (std::size_t i = 0; i < ords.size(); ++i) {
        const std::uint64_t pe = comp[i];
        const std::uint64_t o = ords[i] / gcd_u64(ords[i], exponents_[i]);
        if (pe % 2 == 1) {
            if (o == 1) continue;
            const std::uint64_t p = factor_u64(pe).front().first;
            std::uint64_t f = p;
            for (unsigned v = valuation(o, p); v > 0; --v) f *= p;
            conductor_ *= f;
        } else if (ords[i] == 2 && (i + 1 >= ords.size() || comp[i + 1] != pe)) {
            // the sign generator of 4, or of 2^e with e >= 3 but trivial 5-part handled below
            if (o > 1) conductor_ *= 4;
        } else if (ords[i] == 2 && comp[i + 1] == pe) {
            const std::uint64_t o5 = ords[i + 1] / gcd_u64(ords[i + 1], exponents_[i + 1]);
            if (o5 > 1)
                conductor_ *= std::uint64_t{4} << valuation(o5, 2);
            else if (o > 1)
                conductor_ *= 4;
            ++i;
        }
    }
    even_ = value_exponent(-1) == 0;
}

long DirichletCharacter::value_exponent(long a) const {
    const std::uint64_t m = modulus();
    const auto r = static_cast<std::uint64_t>(mod_pos(a, m));
    thread_local std::vector<std::uint64_t> logs;
    if (!group_->log(r, logs)) return -1;
    const auto& ords = group_->generator_orders();
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < ords.size(); ++i) {
        if (exponents_[i] == 0) continue;
        const std::uint64_t g = gcd_u64(ords[i], exponents_[i]);
        const std::uint64_t w = (exponents_[i] / g) * (order_ / (ords[i] / g)) % order_;
        t = (t + mulmod_u64(w, logs[i] % order_, order_)) % order_;
    }
    return static_cast<long>(t);
}

CycloElement DirichletCharacter::value(long a) const {
    const long t = value_exponent(a);
    if (t < 0) return CycloElement(static_cast<unsigned>(order_), Rational(0));
    return CycloElement::zeta(static_cast<unsigned>(order_), t);
}

std::vector<CycloElement> DirichletCharacter::generator_images() const {
    std::vector<CycloElement> out;
    for (auto g : group_->generators()) out.push_back(value(static_cast<long>(g)));
    return out;
}

namespace {

// Builds the character mod `target` agreeing with chi on residues coprime to both moduli.
DirichletCharacter transport(const DirichletCharacter& chi, std::uint64_t target) {
    auto g = CharacterGroup::get(target);
    std::vector<std::uint64_t> ex(g->rank());
    for (std::size_t i = 0; i < g->rank(); ++i) {
        std::uint64_t a = g->generators()[i];
        while (gcd_u64(a, chi.modulus()) != 1) a += target;
        const auto t = static_cast<std::uint64_t>(chi.value_exponent(static_cast<long>(a)));
        const std::uint64_t ord = g->generator_orders()[i];
        if ((t * ord) % chi.order() != 0) throw DomainError("character does not factor through modulus " + std::to_string(target));
        ex[i] = (t * ord / chi.order()) % ord;
    }
    return DirichletCharacter(target, std::move(ex));
}

}  // namespace

DirichletCharacter DirichletCharacter::primitive_associate() const {
    if (is_primitive()) return *this;
    return transport(*this, conductor_);
}

DirichletCharacter DirichletCharacter::lift(std::uint64_t new_modulus) const {
    if (new_modulus % modulus() != 0) throw DomainError("lift: target is not a multiple of the modulus");
    if (new_modulus == modulus()) return *this;
    return transport(*this, new_modulus);
}

DirichletCharacter DirichletCharacter::inverse() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(long e) const {
    const auto& ords = group_->generator_orders();
    std::vector<std::uint64_t> ex(ords.size());
    for (std::size_t i = 0; i < ords.size(); ++i) {
        const auto o = static_cast<long>(ords[i]);
        const long ee = mod_pos(e, ords[i]);
        ex[i] = static_cast<std::uint64_t>((static_cast<__int128>(exponents_[i]) * ee) % o);
    }
    return DirichletCharacter(modulus(), std::move(ex));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus()) {
        const std::uint64_t m = lcm_u64(a.modulus(), b.modulus());
        return a.lift(m) * b.lift(m);
    }
    const auto& ords = a.group_->generator_orders();
    std::vector<std::uint64_t> ex(ords.size());
    for (std::size_t i = 0; i < ords.size(); ++i) ex[i] = (a.exponents_[i] + b.exponents_[i]) % ords[i];
    return DirichletCharacter(a.modulus(), std::move(ex));
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
}

std::string DirichletCharacter::label() const {
    return "chi_" + std::to_string(modulus()) + "[" + std::to_string(index()) + "]";
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t modulus, CharacterFilter filter) {
    auto g = CharacterGroup::get(modulus);
    std::vector<DirichletCharacter> out;
    for (std::uint64_t i = 0; i < g->size(); ++i) {
        DirichletCharacter chi = DirichletCharacter::from_index(modulus, i);
        if (filter != CharacterFilter::All && !chi.is_primitive()) continue;
        if (filter == CharacterFilter::EvenPrimitive && !chi.is_even()) continue;
        out.push_back(std::move(chi));
    }
    return out;
}

DirichletCharacter square_inverse_eps(const DirichletCharacter& nu) {
    if (!nu.is_primitive()) throw DomainError("square_inverse_eps: nu must be primitive");
    return nu.pow(2).primitive_associate().inverse();
}

CycloElement gauss_sum_exact(const DirichletCharacter& psi) {
    if (!psi.is_primitive()) throw DomainError("gauss sum of a non-primitive character");
    const std::uint64_t f = psi.modulus();
    const std::uint64_t ord = psi.order();
    const std::uint64_t L = lcm_u64(f, ord);
    std::vector<Rational> by_exp(L, Rational(0));
    for (std::uint64_t a = 1; a <= f; ++a) {
        const long t = psi.value_exponent(static_cast<long>(a));
        if (t < 0) continue;
        const std::uint64_t e = (static_cast<std::uint64_t>(t) * (L / ord) + a * (L / f)) % L;
        by_exp[e] += 1;
    }
    return CycloElement::from_exponent_sums(static_cast<unsigned>(L), by_exp);
}

}  // namespace exprimes
