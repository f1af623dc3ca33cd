#pragma once

#include "exprimes/arith.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace exprimes {

/**
 * Memoized factorize(). With a directory, entries persist in
 * <dir>/factors.txt as "n=p^e,p^e" lines. Loaded lines are re-checked
 * (product and primality); bad ones are dropped with a warning.
 */
class FactorCache {
public:
    FactorCache() = default;
    explicit FactorCache(std::filesystem::path dir);
    ~FactorCache();
    FactorCache(const FactorCache&) = delete;
    FactorCache& operator=(const FactorCache&) = delete;

    FactoredInteger factor(const Integer& n);
    void flush();

    std::vector<std::string> warnings() const;
    std::size_t size() const;

private:
    void load();

    std::optional<std::filesystem::path> dir_;
    mutable std::mutex mu_;
    std::map<Integer, FactoredInteger> entries_;
    std::vector<std::string> warnings_;
    bool dirty_ = false;
};

/// "p^e,p^e" for |n|, "1" for units.
std::string format_factor_line(const FactoredInteger& f);

}  // namespace exprimes
