#pragma once

#include <optional>
#include <string>

#include "mirrorcalc/cyclic.hpp"

namespace mirrorcalc::skeleton {

using complexes::ChainMap;
using complexes::Complex;
using cyclic::CategoryNode;
using exactlin::GradedSpace;
using quivers::PerfComplex;

struct InvalidIncidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertificateFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Embedded graph with cyclic sector data. Each edge has two sides, side 0 and
// side 1; an incidence record glues the edge sides to a pair of cyclically
// adjacent sectors at the vertex. Loops contribute two incidence records. At
// a valence-2 vertex both orderings of the sector pair are cyclically
// adjacent, so the record carries a wrap flag selecting the one that starts
// at the second token.
struct RibbonSkeleton {
    struct Vertex {
        std::string id;
        std::vector<std::string> sectors;  // cyclic, in the orientation order
    };
    struct Edge {
        std::string id;
        std::optional<std::string> v0, v1;  // 0, 1 or 2 endpoints
    };
    struct Incidence {
        std::string v, e;
        std::string s0, s1;  // images of edge side 0 / side 1 among v's sectors
        bool wrap = false;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Incidence> incidences;

    void validate() const;
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int valence(int vertex_idx) const;

    // the incidence's sector pair in positive cyclic order (first, successor)
    std::pair<std::string, std::string> subcycle_pair(const Incidence& inc) const;
    // position of the pair within the vertex node (base = first listed sector)
    int vertex_position(const Incidence& inc) const;
    // position of the matching pair within the edge node {side0, side1}
    int edge_position(const Incidence& inc) const;
};

RibbonSkeleton parse_skeleton(const std::string& text);
std::string skeleton_to_text(const RibbonSkeleton& s);

struct PosetElt {
    enum Kind { V, E, U } kind;
    int idx;
    auto operator<=>(const PosetElt&) const = default;
};

enum class DiagramMode { Sheaf, Cosheaf };

// The induced diagram of category nodes over the chain poset V + E + U with
// relations u < v, u < e; functor data is realized through the subcycle
// positions recorded per incidence.
struct CatDiagram {
    DiagramMode mode;
    RibbonSkeleton skel;
    std::map<PosetElt, CategoryNode> nodes;
    std::map<int, cyclic::FunctorEdge> vertex_edges;  // incidence idx -> functor to/from the vertex
    std::map<int, cyclic::FunctorEdge> edge_edges;    // incidence idx -> functor to/from the edge

    long node_count() const { return (long)nodes.size(); }
    long relation_count() const { return 2l * (long)skel.incidences.size(); }
};

CatDiagram build_diagram(const RibbonSkeleton& s, DiagramMode mode);

// A compatible family over the sheaf diagram: an object per poset element
// (vertex objects over the vertex quiver, edge/incidence objects as field
// complexes) plus folded quasi-isomorphism certificates from each restricted
// parent object to the incidence object.
struct LimitObject {
    std::map<int, PerfComplex> vertex_objects;
    std::map<int, Complex> edge_objects;       // integer-graded field complexes
    std::map<int, Complex> incidence_objects;  // integer-graded field complexes
    std::map<int, ChainMap> vertex_certs;      // incidence idx -> folded map
    std::map<int, ChainMap> edge_certs;        // incidence idx -> folded map

    // restriction of the vertex/edge object into the incidence node
    Complex restricted_from_vertex(const RibbonSkeleton& s, int inc_idx) const;
    Complex restricted_from_edge(const RibbonSkeleton& s, int inc_idx) const;
};

// Builds default certificates (identity or a searched folded quasi-iso) for a
// family whose restrictions agree up to folded quasi-isomorphism; throws
// CertificateFailure when some restriction cannot be matched.
void attach_certificates(const RibbonSkeleton& s, LimitObject& x, const std::vector<int>& monodromy_incidences = {},
                         const exactlin::Scalar& monodromy = exactlin::Scalar(1));

// the totalized Hom complex of the homotopy limit over the height-1 poset
struct LimitHomComplex {
    Complex tot;  // mod-2 graded
    // parity-indexed offsets and dims of the layer-0 block of each element
    std::map<PosetElt, std::array<long, 2>> elt_offset;
    std::map<PosetElt, std::array<long, 2>> elt_dim;
};

LimitHomComplex limit_hom_complex(const CatDiagram& d, const LimitObject& x, const LimitObject& y);
GradedSpace limit_hom(const CatDiagram& d, const LimitObject& x, const LimitObject& y);

// The compact skeleton of the n-punctured sphere: n-1 parallel circles joined
// by n-2 arcs, all junctions trivalent (one valence-2 marker vertex for n=2).
struct SphereSkeleton {
    int punctures = 2;
    RibbonSkeleton skel;
    std::vector<std::vector<std::string>> circle_edges;     // per circle
    std::vector<std::vector<std::string>> circle_vertices;  // per circle
    std::vector<std::string> arc_edges;                     // arc m joins circles m, m+1
    std::map<std::string, std::string> inner_sector;        // vertex -> sector facing the circle
};

SphereSkeleton punctured_sphere_skeleton(int n);

// family supported on one circle: the mirror of a point with unit monodromy
LimitObject circle_family(const SphereSkeleton& s, int circle, const exactlin::Scalar& monodromy);

// the cover of the punctured-sphere skeleton by end pieces, middle pieces and
// bare-line overlaps
struct CoverPiece {
    std::string kind;  // "end-bottom", "middle", "end-top", "whole"
    RibbonSkeleton skel;
    std::vector<int> circles;
    std::vector<std::string> stub_edges;  // arcs cut to half-edges
};

struct CoverDecomposition {
    std::vector<CoverPiece> pieces;
    std::vector<std::string> overlap_arcs;  // arc ids; each overlap is a bare line
};

CoverDecomposition cover_diagram(int n);

// restriction of a family on the full skeleton to a piece (matching by ids)
LimitObject restrict_family(const LimitObject& x, const RibbonSkeleton& full, const RibbonSkeleton& piece);

}  // namespace mirrorcalc::skeleton
