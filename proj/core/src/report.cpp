#include "exprimes/report.hpp"

#include <sstream>

#ifndef EXPRIMES_VERSION
#define EXPRIMES_VERSION "unknown"
#endif

namespace exprimes {

using nlohmann::json;

const char* tool_version() { return EXPRIMES_VERSION; }

namespace {

std::string status_name(ScanEntry::Status s) {
    switch (s) {
        case ScanEntry::Status::Irreducible: return "irreducible";
        case ScanEntry::Status::Reducible: return "reducible";
        case ScanEntry::Status::Missing: return "missing";
        case ScanEntry::Status::Obstructed: return "obstructed";
    }
    return "?";
}

json string_list(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

std::string join_primes(const CandidateSet& s) {
    std::string out;
    for (const auto& p : s.primes()) out += (out.empty() ? "" : ", ") + to_string(p);
    return "{" + out + "}";
}

}  // namespace

json to_json(const CandidateSet& s) {
    json a = json::array();
    for (const auto& item : s.items()) a.push_back({{"prime", to_string(item.prime)}, {"clauses", string_list(item.clauses)}});
    return a;
}

json to_json(const CandidateReport& r) {
    json d;
    d["explicit"] = r.dihedral.explicit_list;
    if (r.dihedral.explicit_list) {
        d["primes"] = to_json(r.dihedral.primes);
    } else {
        d["bound"] = to_string(r.dihedral.bound);
        d["bound_real"] = r.dihedral.bound_real.to_string(40);
        d["exponent"] = r.dihedral.exponent;
        d["exponent_source"] = r.dihedral.exponent_source;
        if (r.dihedral.index) {
            d["distinguishing_index"] = {{"murty", to_string(r.dihedral.index->murty_bound)},
                                         {"coarse", to_string(r.dihedral.index->coarse_bound)},
                                         {"rosser", r.dihedral.index->rosser_bound.to_string(30)}};
        }
    }
    json primes = json::array();
    for (const auto& p : r.reducible.primes()) primes.push_back(to_string(p));
    return {{"weight", r.k},
            {"level", std::to_string(r.N)},
            {"reducible_primes", primes},
            {"reducible", to_json(r.reducible)},
            {"dihedral", d},
            {"exceptional_image", to_json(r.exceptional_image)},
            {"assumptions", string_list(r.assumptions)},
            {"notes", string_list(r.notes)}};
}

json to_json(const ResiduePoint& p) {
    json j{{"ell", std::to_string(p.ell)},
           {"ideal", p.ideal()},
           {"field_degree", p.field->degree()},
           {"field_modulus", fp::to_string(p.field->modulus(), "t")},
           {"alpha", p.field->to_string(p.alpha)}};
    if (p.zeta) {
        j["zeta_order"] = p.zeta_order;
        j["zeta"] = p.field->to_string(*p.zeta);
        j["zeta_ideal"] = p.zeta_ideal();
    }
    return j;
}

json to_json(const ScanResult& s) {
    json pts = json::array();
    for (const auto& sp : s.points) {
        json entries = json::object();
        for (const auto& e : sp.entries) entries[std::to_string(e.p)] = status_name(e.status);
        pts.push_back({{"point", to_json(sp.point)},
                       {"witness", sp.witness ? json(std::to_string(*sp.witness)) : json(nullptr)},
                       {"partial", sp.partial},
                       {"frobenius", entries}});
    }
    return {{"label", s.label}, {"ell", std::to_string(s.ell)}, {"pmax", std::to_string(s.pmax)}, {"points", pts}};
}

json to_json(const DirichletCharacter& chi) {
    json images = json::array();
    for (const auto& v : chi.generator_images()) images.push_back(v.to_string());
    json gens = json::array();
    for (auto g : chi.group().generators()) gens.push_back(std::to_string(g));
    return {{"label", chi.label()},
            {"modulus", std::to_string(chi.modulus())},
            {"index", std::to_string(chi.index())},
            {"order", std::to_string(chi.order())},
            {"conductor", std::to_string(chi.conductor())},
            {"parity", chi.is_even() ? "even" : "odd"},
            {"primitive", chi.is_primitive()},
            {"generators", gens},
            {"generator_images", images},
            {"zeta", "z = zeta_" + std::to_string(chi.order())}};
}

json to_json(const VerificationResult& r) {
    json cands = json::array();
    for (const auto& c : r.candidates) {
        json j{{"eisenstein", c.description}, {"agrees_to", std::to_string(c.agrees_to)}};
        j["first_mismatch"] = c.first_mismatch ? json(std::to_string(*c.first_mismatch)) : json(nullptr);
        cands.push_back(j);
    }
    json j{{"label", r.label},
           {"ell", std::to_string(r.ell)},
           {"weight", r.weight},
           {"level", std::to_string(r.level)},
           {"mode", to_string(r.mode)},
           {"eisenstein", r.eisenstein},
           {"checked_up_to", std::to_string(r.checked_up_to)},
           {"sturm", std::to_string(r.sturm)},
           {"verdict", to_string(r.verdict)},
           {"reason", r.reason},
           {"candidates", cands}};
    j["refuted_at"] = r.refuted_at ? json(std::to_string(*r.refuted_at)) : json(nullptr);
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    j["character"] = r.nu ? json(r.nu->label()) : json(nullptr);
    if (!r.norm_witnesses.empty()) {
        json nw = json::array();
        for (const auto& w : r.norm_witnesses)
            nw.push_back({{"n", std::to_string(w.n)},
                          {"norm", to_string(w.norm)},
                          {"valuation", w.zero ? json("inf") : json(w.valuation)}});
        j["norm_witnesses"] = nw;
    }
    if (r.scan) j["scan"] = to_json(*r.scan);
    return j;
}

json to_json(const QExpansion& f) {
    json coeffs = json::array();
    unsigned idx = 1;
    for (const auto& c : f.coeffs()) idx = static_cast<unsigned>(lcm_u64(idx, c.index()));
    for (const auto& c : f.coeffs()) coeffs.push_back(c.embed(idx).to_string());
    return {{"weight", f.weight()},
            {"level", std::to_string(f.level())},
            {"truncation", std::to_string(f.truncation())},
            {"zeta_index", idx},
            {"coefficients", coeffs}};
}

std::string render_json(const Envelope& e) {
    json j{{"tool", "exprimes"},
           {"version", tool_version()},
           {"command", e.command},
           {"inputs", e.inputs},
           {"outputs", e.outputs},
           {"warnings", string_list(e.warnings)}};
    if (e.seconds) j["timing_seconds"] = *e.seconds;
    return j.dump(2) + "\n";
}

std::string render_text(const CandidateReport& r) {
    std::ostringstream os;
    os << "weight " << r.k << ", level " << r.N << "\n";
    os << "reducible: " << join_primes(r.reducible) << "\n";
    for (const auto& item : r.reducible.items()) {
        os << "  " << to_string(item.prime) << ":";
        for (std::size_t i = 0; i < item.clauses.size(); ++i) os << (i ? "; " : " ") << item.clauses[i];
        os << "\n";
    }
    if (r.dihedral.explicit_list) {
        os << "dihedral: " << join_primes(r.dihedral.primes) << "\n";
    } else {
        os << "dihedral: l <= " << to_string(r.dihedral.bound) << " (exponent " << r.dihedral.exponent << " from "
           << r.dihedral.exponent_source << ")\n";
    }
    os << "exceptional image: " << join_primes(r.exceptional_image) << "\n";
    for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string render_text(const ScanResult& s) {
    std::ostringstream os;
    os << s.label << " at ell = " << s.ell << ", p <= " << s.pmax << "\n";
    for (const auto& sp : s.points) {
        os << "  " << sp.point.ideal() << " (degree " << sp.point.field->degree() << "): witness "
           << (sp.witness ? std::to_string(*sp.witness) : std::string("none")) << (sp.partial ? " [partial scan]" : "")
           << "\n";
    }
    for (const auto& w : s.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string render_text(const VerificationResult& r) {
    std::ostringstream os;
    os << r.label << " at ell = " << r.ell << ": " << to_string(r.verdict);
    if (r.refuted_at) os << " at n = " << *r.refuted_at;
    os << "\n  mode " << to_string(r.mode) << ", checked n <= " << r.checked_up_to << ", Sturm bound " << r.sturm << "\n";
    if (!r.eisenstein.empty()) os << "  against " << r.eisenstein << "\n";
    os << "  " << r.reason << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        os << "  point " << w.ideal() << ": alpha -> " << w.field->to_string(w.alpha);
        if (w.zeta) os << ", zeta_" << w.zeta_order << " -> " << w.field->to_string(*w.zeta);
        os << " in F_" << w.ell << (w.field->degree() > 1 ? "^" + std::to_string(w.field->degree()) : "") << "\n";
    }
    if (r.scan) os << render_text(*r.scan);
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

}  // namespace exprimes
