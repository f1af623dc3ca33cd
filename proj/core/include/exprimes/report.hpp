#pragma once

#include "exprimes/bounds.hpp"
#include "exprimes/qexpansion.hpp"
#include "exprimes/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace exprimes {

const char* tool_version();

nlohmann::json to_json(const CandidateSet& s);
nlohmann::json to_json(const CandidateReport& r);
nlohmann::json to_json(const ResiduePoint& p);
nlohmann::json to_json(const ScanResult& s);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const DirichletCharacter& chi);
/// Coefficient strings "a+b*z" with z = zeta_n for the stated n.
nlohmann::json to_json(const QExpansion& f);

struct Envelope {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::optional<double> seconds;
};

/// Sorted keys, two-space indent, trailing newline.
std::string render_json(const Envelope& e);

std::string render_text(const CandidateReport& r);
std::string render_text(const VerificationResult& r);
std::string render_text(const ScanResult& s);

}  // namespace exprimes
