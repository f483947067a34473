#pragma once

#include <string>
#include <vector>

#include "reflex/jsonio.hpp"

namespace reflex {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string expected, actual;
    std::string note;
};

struct Report {
    Json inputs = Json::object();
    std::vector<CheckRecord> checks;
    std::vector<std::string> warnings;

    bool all_pass() const;
    Json to_json() const;
    std::string to_text() const;
};

enum class RankRoute { Ring, Poset, Both };

// Full verification pipeline for projective n-space: triangulation, fan,
// ring rank (route A), poset rank series (route B), GKZ and extended
// annihilation for n <= 2, operator shift identities, and the polynomial
// identity suite.
Report run_pn_verify(unsigned n, const Int& bound, RankRoute route);

// Reflexivity, dual, face poset ranks, Ehrhart data and (when reflexive) the
// rank series of an arbitrary polytope given as {"vertices": [[ints]]}.
Report run_polytope_report(const Json& poly_json);

// Series dump: list of {relation, log-monomial, ring-class coordinates}.
Json run_series_dump(unsigned n, const Int& bound);

}  // namespace reflex
