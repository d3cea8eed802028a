#pragma once

#include <string>

#include "mirrorcalc/quiver.hpp"

namespace mirrorcalc::cyclic {

using complexes::Complex;
using quivers::LinearQuiver;
using quivers::PerfComplex;

struct LabelNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConsecutive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cyclically ordered finite set: the successor of elements[i] is
// elements[(i+1) % size].
struct CyclicSet {
    std::vector<std::string> elements;

    int size() const { return (int)elements.size(); }
    int index_of(const std::string& label) const;
    const std::string& successor(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of_or(-1, label) >= 0; }
    int index_of_or(int fallback, const std::string& label) const;
};

// Inclusion of the two-element cycle (first, second = successor(first)).
struct SubcycleInclusion {
    CyclicSet target;
    std::string first, second;

    void validate() const;
};

// A cyclic set with a chosen base element presents the category of the
// (size-1)-vertex linear quiver: the elements after the base, in cyclic
// order, are the quiver vertices 1..size-1; subcycle pairs starting at the
// base occupy the wrap-around position 1, the pair starting at the k-th
// element after the base occupies position k+1.
struct CategoryNode {
    CyclicSet cycle;
    std::string base;

    LinearQuiver quiver() const { return LinearQuiver(std::max(1, cycle.size() - 1)); }
    // position of the subcycle (first, successor(first)) with respect to base
    int position_of(const std::string& first) const;
};

CategoryNode cst_node(const CyclicSet& c, const std::string& base);

enum class EdgeDirection { Restriction, Extension };

// Functor data attached to a subcycle inclusion: explicit images of the
// named generators of the big node (restriction) or of k (extension).
struct FunctorEdge {
    EdgeDirection direction;
    int position;  // subcycle position within the big node
    std::map<std::string, Complex> restriction_images;  // named generator -> field complex
    std::map<std::string, PerfComplex> extension_images;
};

FunctorEdge cst_edge(const SubcycleInclusion& i, const CategoryNode& target_node);
FunctorEdge cwst_edge(const SubcycleInclusion& i, const CategoryNode& target_node);

// Rebasing by one step: the generator dictionary of moving the base to its
// successor is the mutation rotation (see quivers::cyclic_rotate).
CategoryNode rebase_once(const CategoryNode& node);

}  // namespace mirrorcalc::cyclic
