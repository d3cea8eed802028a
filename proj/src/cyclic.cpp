#include "mirrorcalc/cyclic.hpp"

namespace mirrorcalc::cyclic {

using quivers::named_object;
using quivers::named_object_name;
using quivers::NamedKind;

int CyclicSet::index_of_or(int fallback, const std::string& label) const {
    for (int i = 0; i < (int)elements.size(); ++i)
        if (elements[i] == label) return i;
    return fallback;
}

int CyclicSet::index_of(const std::string& label) const {
    int i = index_of_or(-1, label);
    if (i < 0) throw LabelNotFound("label not in cyclic set: " + label);
    return i;
}

const std::string& CyclicSet::successor(const std::string& label) const {
    return elements[(index_of(label) + 1) % elements.size()];
}

void SubcycleInclusion::validate() const {
    if (target.size() < 2) throw NotConsecutive("subcycle needs a target with at least two elements");
    if (target.successor(first) != second)
        throw NotConsecutive("subcycle pair is not consecutive: " + first + ", " + second);
}

int CategoryNode::position_of(const std::string& first) const {
    int b = cycle.index_of(base);
    int f = cycle.index_of(first);
    int steps = ((f - b) % cycle.size() + cycle.size()) % cycle.size();
    return steps == 0 ? 1 : steps + 1;
}

CategoryNode cst_node(const CyclicSet& c, const std::string& base) {
    if (!c.contains(base)) throw LabelNotFound("base not in cyclic set: " + base);
    if (c.size() < 2) throw NotConsecutive("category node needs at least two sectors");
    return CategoryNode{c, base};
}

FunctorEdge cst_edge(const SubcycleInclusion& i, const CategoryNode& target_node) {
    i.validate();
    const int p = target_node.position_of(i.first);
    LinearQuiver q = target_node.quiver();
    FunctorEdge e{EdgeDirection::Restriction, p, {}, {}};
    for (int a = 1; a <= q.n; ++a) {
        for (NamedKind kind : {NamedKind::Projective, NamedKind::Injective, NamedKind::Skyscraper}) {
            e.restriction_images.emplace(named_object_name(kind, a),
                                         quivers::subcycle_restrict(named_object(q, kind, a), p));
        }
    }
    return e;
}

FunctorEdge cwst_edge(const SubcycleInclusion& i, const CategoryNode& target_node) {
    i.validate();
    const int p = target_node.position_of(i.first);
    LinearQuiver q = target_node.quiver();
    FunctorEdge e{EdgeDirection::Extension, p, {}, {}};
    e.extension_images.emplace("k", quivers::subcycle_extend(Complex::single(0, 1), q, p));
    return e;
}

CategoryNode rebase_once(const CategoryNode& node) {
    return CategoryNode{node.cycle, node.cycle.successor(node.base)};
}

}  // namespace mirrorcalc::cyclic
