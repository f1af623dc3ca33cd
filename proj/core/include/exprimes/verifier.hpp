#pragma once

#include "exprimes/characters.hpp"
#include "exprimes/fixture.hpp"
#include "exprimes/qexpansion.hpp"
#include "exprimes/residue.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exprimes {

enum class VerifyMode { Auto, Residue, Norm };
enum class Verdict { Certified, NormCertified, Refuted, Inconclusive };

std::string to_string(VerifyMode m);
std::string to_string(Verdict v);

struct ScanEntry {
    enum class Status { Irreducible, Reducible, Missing, Obstructed };
    std::uint64_t p = 0;
    Status status = Status::Missing;
};

struct ScanPoint {
    ResiduePoint point;
    std::vector<ScanEntry> entries;
    std::optional<std::uint64_t> witness;  ///< smallest p with an irreducible Frobenius polynomial
    bool partial = false;                  ///< some p <= pmax had no coefficient
};

struct ScanResult {
    std::string label;
    std::uint64_t ell = 0;
    std::uint64_t pmax = 0;
    std::vector<ScanPoint> points;
    std::vector<std::string> warnings;
};

/**
 * For each prime of K above ell and each prime p <= pmax with p not dividing
 * ell N, whether X^2 - a_p X + p^(k-1) is irreducible over the residue field.
 */
ScanResult frobenius_scan(const NewformFixture& fx, std::uint64_t ell, std::uint64_t pmax);

struct SteinbergReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::map<std::uint64_t, int> signs;    ///< p || N -> sign of a_p / p^(k/2-1)
    std::vector<std::uint64_t> missing;    ///< p || N with a_p absent and no declared sign
};

SteinbergReport steinberg_consistency(const NewformFixture& fx);

/// One Eisenstein series tried against the form.
struct CandidateOutcome {
    std::string description;
    std::optional<DirichletCharacter> nu;
    /// Largest n reached without a mismatch (over the best point, or in norm mode).
    std::uint64_t agrees_to = 0;
    std::optional<std::uint64_t> first_mismatch;
    std::optional<ResiduePoint> point;
};

struct NormWitness {
    std::uint64_t n = 0;
    Integer norm;
    bool zero = false;       ///< the difference itself vanishes
    unsigned valuation = 0;  ///< v_ell(norm) when nonzero
};

struct VerificationResult {
    std::string label;
    std::uint64_t ell = 0;
    unsigned weight = 0;
    std::uint64_t level = 0;
    VerifyMode mode = VerifyMode::Residue;
    std::string eisenstein;
    std::uint64_t checked_up_to = 0;
    std::uint64_t sturm = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::uint64_t> refuted_at;
    std::string reason;
    std::optional<ResiduePoint> witness;
    std::optional<DirichletCharacter> nu;
    std::vector<NormWitness> norm_witnesses;
    std::vector<CandidateOutcome> candidates;
    std::optional<ScanResult> scan;
    std::vector<std::string> warnings;
};

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Auto;
    std::optional<DirichletCharacter> nu;  ///< restrict to E built from this primitive character
    std::optional<std::uint64_t> max_terms;  ///< compare at most this many coefficients
    std::uint64_t scan_pmax = 100;
};

/// Congruence a_n = a_n(E) mod a prime above ell, for n coprime to ell, against stabilized E.
VerificationResult verify_reducible(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt = {});

/// Weight 2, square-free level: compare with E' = prod (a_p U_p - p) E_2 mod ell.
VerificationResult verify_weight2_squarefree(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt = {});

/// verify_weight2_squarefree for weight 2 and square-free level, verify_reducible otherwise.
VerificationResult verify(const NewformFixture& fx, std::uint64_t ell, const VerifyOptions& opt = {});

/// Stabilized Eisenstein series matching the level of the form, with a description each.
std::vector<std::pair<std::string, QExpansion>> eisenstein_candidates(unsigned k, std::uint64_t N,
                                                                      const DirichletCharacter& nu, std::uint64_t T);

}  // namespace exprimes
