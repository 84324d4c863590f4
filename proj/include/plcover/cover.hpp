#ifndef PLCOVER_COVER_HPP
#define PLCOVER_COVER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "plcover/chart.hpp"
#include "plcover/mesh.hpp"
#include "plcover/rational.hpp"

namespace plcover::cover {

using mesh::VId;

/// Simplicial branched self-cover of the marked 2-sphere. Domain and range
/// are separate triangulations of the same underlying sphere; the shared
/// sphere structure is recorded by `range_to_domain` (position identification
/// of every range vertex) and by the two cut paths, which trace the same arc.
struct PLMap {
    std::string name;
    chart::MarkedChart domain;
    chart::MarkedChart range;
    std::vector<VId> vertex_image;    // domain vertex -> range vertex
    std::map<VId, VId> range_to_domain; // position identification
    int declared_degree = 0;

    VId img(VId v) const { return vertex_image[v]; }
};

mesh::ValidationReport validate_map(const PLMap& f);

/// Number of domain faces over any range face; throws if the counts disagree.
int degree(const PLMap& f);

/// Local degree at a domain vertex (link covering multiplicity).
int local_degree(const PLMap& f, VId v);

/// Critical points (domain ids) and postcritical set (range ids).
struct Orbits {
    std::set<VId> critical;     // domain
    std::set<VId> postcritical; // range
};
Orbits critical_and_postcritical(const PLMap& f);

/// Sphere-point dynamics x -> f(x) on range vertices (via the identification).
VId vertex_dynamics(const PLMap& f, VId range_v);

struct Orbifold {
    std::map<VId, long> weight; // postcritical range vertex -> N(x); 0 means infinity
    std::vector<long> signature_finite; // finite weights > 1, sorted
    int signature_infinite = 0;         // number of infinite weights
    Rat euler_char;
    bool hyperbolic = false;
};
Orbifold orbifold(const PLMap& f);

/// Pull a refinement of the range back through the cover: the refined map has
/// the subdivided range, the lifted subdivision of the domain, and carried
/// cut paths. Unique up to the canonical indexing used here.
PLMap lift_refinement(const PLMap& f, const mesh::Subdivision& range_sub,
                      mesh::Subdivision* domain_sub_out = nullptr);

/// Lift through a chain of range subdivisions.
PLMap lift_through(const PLMap& f, const std::vector<mesh::Subdivision>& chain);

/// Unique path lift through the cover; `walk` lives in the range 1-skeleton,
/// avoids marks, and must not meet critical values. `start` lies over walk[0].
std::vector<VId> lift_walk(const PLMap& f, const std::vector<VId>& walk, VId start);

struct PreimageComponent {
    std::vector<VId> cycle; // embedded cycle in the domain 1-skeleton
    int degree = 0;         // covering degree onto the input curve
};
/// Components of f^{-1}(curve) for an embedded cycle in the range 1-skeleton
/// avoiding the postcritical set. Sum of degrees equals degree(f).
std::vector<PreimageComponent> curve_preimage(const PLMap& f, const std::vector<VId>& curve);

/// Composite g(f(.)); requires range(f) and domain(g) to be the identical
/// labeled complex (refine/lift first otherwise).
PLMap compose_pl(const PLMap& g, const PLMap& f);

/// Compose a degree-one map (PL homeomorphism) with f, h after f.
PLMap apply_homeo(const PLMap& h, const PLMap& f);

PLMap identity_map(const chart::MarkedChart& ch);

} // namespace plcover::cover

#endif
