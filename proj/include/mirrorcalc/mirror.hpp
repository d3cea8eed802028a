#pragma once

#include <optional>

#include "mirrorcalc/bmodels.hpp"
#include "mirrorcalc/pantsgeom.hpp"
#include "mirrorcalc/skeleton.hpp"

namespace mirrorcalc::mirror {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // what was compared, with both sides on mismatch
};

struct MirrorReport {
    std::string kind;  // "surface" or "pants"
    int parameter = 0;
    std::map<std::string, long> truncations;
    std::vector<CheckResult> node_results;
    std::vector<CheckResult> edge_results;
    bool overall = false;

    std::string to_json() const;  // deterministic, sorted keys
};

struct Truncations {
    int poly_deg = 6;
    int u_deg = 3;
    int loop_len = 6;
};

// Tamper hook for the sensitivity harness: the named edge's image of the
// named generator is replaced by its odd shift before comparison.
struct Perturbation {
    std::string edge;
    std::string generator;
};

// Matches the cover diagram of the punctured-sphere skeleton with the descent
// presentation of the mirror chain: end pieces against the affine line,
// middle pieces against the projective line, overlaps against points; every
// node is checked through generator Ext tables computed along both routes and
// every edge square on generators.
MirrorReport verify_surface_mirror(int punctures, const Truncations& tr = {},
                                   const std::optional<Perturbation>& tamper = std::nullopt);

// Matches the torus-model diagram over proper coordinate subsets with the
// coordinate-space cube: per-node generator tables, per-edge restriction
// squares, and the target fingerprint (hyperplane Ext tables against the
// monomial oracle, the folded tie to the factorization tables, and the
// glued-against-direct comparison on perfect generators).
MirrorReport verify_pants_mirror(int dim, const Truncations& tr = {},
                                 const std::optional<Perturbation>& tamper = std::nullopt);

// names of all (edge, generator) pairs whose images the tamper hook can shift
std::vector<Perturbation> surface_edge_images(int punctures);
std::vector<Perturbation> pants_edge_images(int dim);

}  // namespace mirrorcalc::mirror
