#include "exprimes/factor_cache.hpp"

#include <fstream>
#include <sstream>

namespace exprimes {

std::string format_factor_line(const FactoredInteger& f) {
    if (f.factors().empty()) return "1";
    std::string out;
    for (const auto& pp : f.factors()) {
        if (!out.empty()) out += ',';
        out += to_string(pp.prime) + "^" + std::to_string(pp.exponent);
    }
    return out;
}

namespace {

std::optional<FactoredInteger> parse_line(const std::string& line, Integer& key) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) return std::nullopt;
    if (key.set_str(line.substr(0, eq), 10) != 0 || key <= 0) return std::nullopt;
    const std::string rhs = line.substr(eq + 1);
    std::vector<PrimePower> factors;
    if (rhs != "1") {
        std::stringstream ss(rhs);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto caret = item.find('^');
            if (caret == std::string::npos) return std::nullopt;
            Integer p;
            if (p.set_str(item.substr(0, caret), 10) != 0) return std::nullopt;
            unsigned long e = 0;
            try {
                e = std::stoul(item.substr(caret + 1));
            } catch (const std::exception&) {
                return std::nullopt;
            }
            if (e == 0 || !is_prime(p)) return std::nullopt;
            if (!factors.empty() && factors.back().prime >= p) return std::nullopt;
            factors.push_back({p, static_cast<unsigned>(e)});
        }
    }
    Integer prod = 1;
    for (const auto& pp : factors) prod *= ipow(pp.prime, pp.exponent);
    if (prod != key) return std::nullopt;
    return FactoredInteger(key, std::move(factors));
}

}  // namespace

FactorCache::FactorCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

FactorCache::~FactorCache() {
    try {
        flush();
    } catch (...) {
    }
}

void FactorCache::load() {
    const auto file = *dir_ / "factors.txt";
    std::ifstream in(file);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Integer key;
        auto parsed = parse_line(line, key);
        if (!parsed) {
            warnings_.push_back("factor cache: ignoring corrupt line " + std::to_string(lineno) + " of " + file.string());
            dirty_ = true;
            continue;
        }
        entries_.emplace(key, std::move(*parsed));
    }
}

FactoredInteger FactorCache::factor(const Integer& n) {
    const Integer a = abs(n);
    {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find(a); it != entries_.end()) {
            if (n >= 0) return it->second;
            return FactoredInteger(n, it->second.factors(), it->second.probable());
        }
    }
    FactoredInteger f = factorize(n);
    if (a != 0) {
        std::lock_guard lock(mu_);
        entries_.emplace(a, FactoredInteger(a, f.factors(), f.probable()));
        dirty_ = true;
    }
    return f;
}

void FactorCache::flush() {
    std::lock_guard lock(mu_);
    if (!dir_ || !dirty_) return;
    std::filesystem::create_directories(*dir_);
    const auto file = *dir_ / "factors.txt";
    const auto tmp = *dir_ / "factors.txt.tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& [n, f] : entries_) {
            if (f.probable()) continue;
            out << to_string(n) << '=' << format_factor_line(f) << '\n';
        }
    }
    std::filesystem::rename(tmp, file);
    dirty_ = false;
}

std::vector<std::string> FactorCache::warnings() const {
    std::lock_guard lock(mu_);
    return warnings_;
}

std::size_t FactorCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

}  // namespace exprimes
