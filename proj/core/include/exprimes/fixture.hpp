#pragma once

#include "exprimes/arith.hpp"
#include "exprimes/polynomial.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace exprimes {

/// A fixture that cannot be loaded; what() names the failed check.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Newform data: K = Q[x]/(f) with f monic integral and irreducible, and
 * a_n given by power-basis coordinates in alpha (lowest degree first).
 */
struct NewformFixture {
    std::string label;
    unsigned weight = 0;
    std::uint64_t level = 0;
    QPoly field_poly;
    bool non_cm = false;
    std::map<std::uint64_t, std::vector<Rational>> an;
    std::map<std::uint64_t, int> steinberg_signs;

    unsigned degree() const { return static_cast<unsigned>(field_poly.degree()); }
    /// Largest n such that a_1..a_n are all present.
    std::uint64_t n_max() const;
    bool has(std::uint64_t n) const { return an.count(n) != 0; }
    /// a_n as a polynomial in alpha; TruncationError when absent.
    QPoly coefficient(std::uint64_t n) const;
};

NewformFixture parse_fixture(const std::string& json_text);
NewformFixture load_fixture(const std::filesystem::path& path);

/// Runs every load-time check; throws FixtureError naming the first failure.
void validate_fixture(const NewformFixture& fx);

/**
 * Irreducibility over Q of a monic integral polynomial: factor degree
 * patterns modulo good primes, then an exact search over subsets of complex
 * roots when the patterns alone do not decide.
 */
bool is_irreducible_over_q(const QPoly& f);

}  // namespace exprimes
