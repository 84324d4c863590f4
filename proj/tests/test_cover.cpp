#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plcover/chart.hpp"
#include "plcover/cover.hpp"
#include "plcover/fixtures.hpp"
#include "plcover/monodromy.hpp"

using namespace plcover;
using cover::PLMap;
using mesh::VId;
using words::FreeWord;

TEST_CASE("power2 fixture validates; degree 2 with both poles critical") {
    PLMap f = fixtures::build("power2");
    auto rep = cover::validate_map(f);
    for (auto& s : rep.failures) MESSAGE(s);
    REQUIRE(rep.ok());
    // oracle for the degree: Riemann-Hurwitz with two simple critical points
    // gives sum(deg_v - 1) = 2 = 2d - 2, so d = 2
    CHECK(cover::degree(f) == 2);
    auto orb = cover::critical_and_postcritical(f);
    CHECK(orb.critical.size() == 2);
    CHECK(orb.postcritical.size() == 2); // both poles fixed
    // Omega_f = P_f = poles
    for (VId c : orb.critical) CHECK(orb.postcritical.count(f.img(c)));
}

TEST_CASE("power2 orbifold: weights (inf, inf), chi = 0, not hyperbolic") {
    PLMap f = fixtures::build("power2");
    auto ob = cover::orbifold(f);
    CHECK(ob.signature_infinite == 2);
    CHECK(ob.signature_finite.empty());
    CHECK(ob.euler_char == Rat(0));
    CHECK(!ob.hyperbolic);
}

TEST_CASE("identity map has degree 1 and lifts trivially") {
    chart::MarkedChart ch = chart::model_sphere(4);
    PLMap id = cover::identity_map(ch);
    REQUIRE(cover::validate_map(id).ok());
    CHECK(cover::degree(id) == 1);
    // identity: lifted triangulation equals the refinement itself
    auto r = mesh::barycentric(ch.tri);
    PLMap lifted = cover::lift_refinement(id, r.sub);
    CHECK(lifted.domain.tri.num_faces() == r.tri.num_faces());
    CHECK(cover::validate_map(lifted).ok());
}

TEST_CASE("lift of a refinement through power2: V' = 2V - 2, E' = 2E, F' = 2F") {
    PLMap f = fixtures::build("power2");
    auto r = mesh::barycentric(f.range.tri);
    long V = r.tri.num_vertices(), E = r.tri.num_edges(), F = r.tri.num_faces();
    PLMap g = cover::lift_refinement(f, r.sub);
    REQUIRE(cover::validate_map(g).ok());
    CHECK(g.domain.tri.num_vertices() == 2 * V - 2); // branch points have one preimage
    CHECK(g.domain.tri.num_edges() == 2 * E);
    CHECK(g.domain.tri.num_faces() == 2 * F);
    CHECK(g.domain.tri.euler_characteristic() == 2);
}

TEST_CASE("power2: equatorial curve preimage is one component of degree 2") {
    PLMap f = fixtures::build("power2");
    std::vector<VId> equator = {0, 1, 2, 3}; // range equator avoids the poles
    auto comps = cover::curve_preimage(f, equator);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].degree == 2);
    CHECK(comps[0].cycle.size() == 8);
    // sum of degrees = degree(f)
    int total = 0;
    for (auto& c : comps) total += c.degree;
    CHECK(total == cover::degree(f));
}

TEST_CASE("compose power2 with its own lift: degree multiplies") {
    PLMap f = fixtures::build("power2");
    // the power2 domain is the range with all equator edges split; lifting
    // that subdivision through f gives a map whose range is the domain complex
    std::vector<std::pair<mesh::EdgeKey, int>> how;
    for (int i = 0; i < 4; ++i) how.push_back({mesh::EdgeKey(i, (i + 1) % 4), 1});
    auto r = mesh::split_edges(f.range.tri, how);
    PLMap f2 = cover::lift_refinement(f, r.sub);
    REQUIRE(cover::validate_map(f2).ok());
    // f2's range is the split complex, which is exactly f's domain
    PLMap ff = cover::compose_pl(f, f2);
    CHECK(cover::degree(ff) == 4);
    // compose with the identity is the map itself
    PLMap idm = cover::identity_map(f.range);
    PLMap same = cover::compose_pl(idm, f);
    CHECK(cover::degree(same) == 2);
    CHECK(same.vertex_image == f.vertex_image);
}

TEST_CASE("rabbit_basilica_mating validates with the paper's orbit structure") {
    PLMap f = fixtures::build("rabbit_basilica_mating");
    auto rep = cover::validate_map(f);
    for (auto& s : rep.failures) MESSAGE(s);
    REQUIRE(rep.ok());
    CHECK(cover::degree(f) == 2);
    auto orb = cover::critical_and_postcritical(f);
    CHECK(orb.critical.size() == 2);
    CHECK(orb.postcritical.size() == 5); // {0, a2, a3, inf, 1}
    // marks are exactly the postcritical set
    std::set<VId> marks(f.range.marks.begin(), f.range.marks.end());
    CHECK(marks == orb.postcritical);
    // cycle structure: one 3-cycle, one 2-cycle through the critical points
    std::map<VId, int> period;
    for (VId x : orb.postcritical) {
        VId cur = x;
        int p = 0;
        do {
            cur = cover::vertex_dynamics(f, cur);
            ++p;
        } while (cur != x && p < 10);
        period[x] = p;
    }
    int threes = 0, twos = 0;
    for (auto& [x, p] : period) {
        if (p == 3) ++threes;
        if (p == 2) ++twos;
    }
    CHECK(threes == 3);
    CHECK(twos == 2);
}

TEST_CASE("rabbit_basilica orbifold: all five weights infinite, chi = -3") {
    PLMap f = fixtures::build("rabbit_basilica_mating");
    auto ob = cover::orbifold(f);
    // oracle: every postcritical point lies on a cycle through a critical point
    CHECK(ob.signature_infinite == 5);
    CHECK(ob.signature_finite.empty());
    CHECK(ob.euler_char == Rat(-3));
    CHECK(ob.hyperbolic);
}

TEST_CASE("rabbit_antirabbit_mating validates; six marks; chi = -4") {
    PLMap f = fixtures::build("rabbit_antirabbit_mating");
    auto rep = cover::validate_map(f);
    for (auto& s : rep.failures) MESSAGE(s);
    REQUIRE(rep.ok());
    CHECK(cover::degree(f) == 2);
    auto orb = cover::critical_and_postcritical(f);
    CHECK(orb.postcritical.size() == 6);
    auto ob = cover::orbifold(f);
    CHECK(ob.signature_infinite == 6);
    CHECK(ob.euler_char == Rat(-4));
    CHECK(ob.hyperbolic);
}

// --- golden transition data via the deck algebra --------------------------

static FreeWord seed_word(const PLMap& f, const std::vector<int>& S) {
    chart::Workspace ws;
    ws.ch = f.range;
    int idx = chart::build_seed(ws, S);
    return words::canonical_unoriented(ws.curve_word(idx));
}

TEST_CASE("golden matrix A: rabbit_basilica curve around the a-cycle has entry 1/2") {
    PLMap f = fixtures::build("rabbit_basilica_mating");
    auto alg = monodromy::build_deck_algebra(f);
    REQUIRE(alg.d == 2);
    // the curve separating {a1,a2,a3} from {inf,1}: marks 1..3 on the cut path
    FreeWord gamma = seed_word(f, {1, 2, 3});
    auto comps = alg.preimage_components(gamma);
    int total = 0;
    for (auto& c : comps) total += c.degree;
    CHECK(total == 2);
    // single component, degree 2, isotopic to gamma itself
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].degree == 2);
    CHECK(comps[0].cls == gamma);
}

TEST_CASE("golden matrix B: rabbit_antirabbit pair curves form the cyclic matrix") {
    PLMap f = fixtures::build("rabbit_antirabbit_mating");
    auto alg = monodromy::build_deck_algebra(f);
    REQUIRE(alg.d == 2);
    std::vector<FreeWord> gamma = {seed_word(f, {1, 2}), seed_word(f, {3, 4}),
                                   seed_word(f, {5, 6})};
    CHECK(gamma[0] != gamma[1]);
    CHECK(gamma[1] != gamma[2]);
    // each gamma_i pulls back to one essential component of degree 1 equal to
    // the previous pair curve, plus trivial components
    std::map<int, int> hits; // delta index -> preimage gamma index
    for (int i = 0; i < 3; ++i) {
        auto comps = alg.preimage_components(gamma[i]);
        int total = 0, essential = 0;
        for (auto& c : comps) {
            total += c.degree;
            auto kind = words::classify_word(c.cls, 6);
            if (kind == words::CurveClassKind::EssentialNonperipheral) {
                ++essential;
                CHECK(c.degree == 1);
                int j = -1;
                for (int t = 0; t < 3; ++t)
                    if (c.cls == gamma[t]) j = t;
                REQUIRE(j >= 0);
                hits[i] = j;
            }
        }
        CHECK(total == 2);
        CHECK(essential == 1);
    }
    // the map i -> hits[i] is a 3-cycle
    CHECK(hits.size() == 3);
    std::set<int> image;
    for (auto& [i, j] : hits) {
        CHECK(j != i);
        image.insert(j);
    }
    CHECK(image.size() == 3);
}
