#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plcover/chart.hpp"
#include "plcover/mesh.hpp"

using namespace plcover;
using mesh::Triangulation;
using mesh::VId;

static Triangulation tetrahedron() {
    return Triangulation::from_faces(
        4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, {});
}

TEST_CASE("tetrahedron is a valid sphere") {
    Triangulation t = tetrahedron();
    auto rep = t.validate();
    CHECK(rep.ok());
    CHECK(t.num_vertices() == 4);
    CHECK(t.num_edges() == 6);
    CHECK(t.num_faces() == 4);
    CHECK(t.euler_characteristic() == 2);
}

TEST_CASE("tetrahedron with a face deleted is invalid") {
    Triangulation t = tetrahedron();
    t.kill_face(3);
    auto rep = t.validate();
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.find("one incident face") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("duplicate face violates the simplicial condition") {
    Triangulation t = tetrahedron();
    t.add_face(0, 1, 2); // same simplex twice
    auto rep = t.validate();
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.find("simplicial") != std::string::npos || f.find("orientation") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("barycentric refinement: 4 faces -> 24, validity and carry") {
    Triangulation t = tetrahedron();
    auto r = mesh::barycentric(t);
    CHECK(r.tri.validate().ok());
    CHECK(r.tri.num_faces() == 24);
    CHECK(r.tri.euler_characteristic() == 2);
    // an old edge carries to a 2-edge chain
    auto chain = r.sub.carry_path({0, 1}, false);
    CHECK(chain.size() == 3);
    CHECK(chain.front() == 0);
    CHECK(chain.back() == 1);
}

TEST_CASE("edge split: F 4->6, V 4->5, E 6->9, chi preserved") {
    // oracle: direct count on the two incident faces (each becomes two)
    Triangulation t = tetrahedron();
    auto r = mesh::split_edge(t, 0, 1);
    CHECK(r.tri.validate().ok());
    CHECK(r.tri.num_faces() == 6);
    CHECK(r.tri.num_vertices() == 5);
    CHECK(r.tri.num_edges() == 9);
    CHECK(r.tri.euler_characteristic() == 2);
}

TEST_CASE("iterated refinement stays valid") {
    Triangulation t = tetrahedron();
    auto r1 = mesh::barycentric(t);
    auto r2 = mesh::split_edge(r1.tri, r1.tri.face(r1.tri.alive_faces()[0])[0],
                               r1.tri.face(r1.tri.alive_faces()[0])[1]);
    CHECK(r2.tri.validate().ok());
    auto r3 = mesh::barycentric(r2.tri);
    CHECK(r3.tri.validate().ok());
    CHECK(r3.tri.euler_characteristic() == 2);
}

// 4-marked sphere: bipyramid over a square, marks at equator
static Triangulation marked_bipyramid() {
    // vertices 0..3 equator (marked), 4 = top, 5 = bottom
    std::vector<std::array<VId, 3>> faces;
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        faces.push_back({4, i, j});
        faces.push_back({5, j, i});
    }
    return Triangulation::from_faces(6, faces, {0, 1, 2, 3});
}

TEST_CASE("complementary regions of one separating curve") {
    Triangulation t = marked_bipyramid();
    REQUIRE(t.validate().ok());
    // refine so a curve separating {0,1} from {2,3} exists in the skeleton
    auto r = mesh::barycentric(t);
    Triangulation& tt = r.tri;
    REQUIRE(tt.validate().ok());
    // curve through midpoints around the 0-1 edge side: use link of edge-mid of (0,1)
    // simplest: the link cycle of the midpoint of edge (0,1) is a closed curve
    // separating {0,1}... not quite; instead take the boundary of the star of
    // the midpoint m01: that encircles nothing marked. Build instead via chart
    // seed machinery in test_chart. Here: empty curve list sanity.
    auto regs = mesh::complementary_regions(tt, {});
    CHECK(regs.size() == 1);
    CHECK(regs[0].puncture_count == 4);
    CHECK(regs[0].euler_char == 2);
}

TEST_CASE("region analysis rejects curves through marks") {
    Triangulation t = marked_bipyramid();
    CHECK_THROWS(mesh::complementary_regions(t, {{0, 1, 4}}));
}

TEST_CASE("compaction shrinks a refined sphere and preserves validity") {
    Triangulation t = tetrahedron();
    auto r1 = mesh::barycentric(t);
    auto r2 = mesh::barycentric(r1.tri);
    Triangulation big = r2.tri;
    long before = big.num_faces();
    mesh::Protected prot;
    mesh::compact(big, prot);
    CHECK(big.validate().ok());
    CHECK(big.num_faces() < before);
    CHECK(big.euler_characteristic() == 2);
}

TEST_CASE("compaction preserves protected cycles and their words") {
    // protect the equator of the bipyramid while compacting a refined version
    Triangulation t = marked_bipyramid();
    auto r1 = mesh::barycentric(t);
    auto r2 = mesh::barycentric(r1.tri);
    std::vector<VId> equator = {0, 1, 2, 3};
    auto eq1 = r1.sub.carry_path(equator, true);
    auto eq2 = r2.sub.carry_path(eq1, true);
    Triangulation big = r2.tri;
    mesh::Protected prot;
    prot.cycles.push_back(&eq2);
    mesh::compact(big, prot);
    CHECK(big.validate().ok());
    // cycle is still an embedded closed edge path
    for (size_t i = 0; i < eq2.size(); ++i)
        CHECK(big.has_edge(eq2[i], eq2[(i + 1) % eq2.size()]));
    // marks survived
    CHECK(big.marked_vertices().size() == 4);
}

TEST_CASE("bfs path avoids forbidden vertices") {
    Triangulation t = tetrahedron();
    auto p = mesh::bfs_path(t, {0}, {1}, {});
    REQUIRE(p.has_value());
    CHECK(p->front() == 0);
    CHECK(p->back() == 1);
    auto q = mesh::bfs_path(t, {0}, {1}, {2, 3});
    REQUIRE(q.has_value()); // direct edge 0-1
    CHECK(q->size() == 2);
}
