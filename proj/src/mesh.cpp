#include "plcover/mesh.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plcover::mesh {

Triangulation Triangulation::from_faces(int nvertices, const std::vector<std::array<VId, 3>>& faces,
                                        const std::vector<VId>& marked) {
    Triangulation t;
    t.verts_.resize(nvertices);
    for (auto& v : t.verts_) v.alive = true;
    for (const auto& f : faces) t.add_face(f[0], f[1], f[2]);
    for (VId m : marked) {
        if (m < 0 || m >= nvertices) throw std::invalid_argument("marked vertex out of range");
        t.verts_[m].marked = true;
    }
    return t;
}

VId Triangulation::add_vertex(bool marked) {
    Vertex v;
    v.alive = true;
    v.marked = marked;
    verts_.push_back(v);
    topo_valid_ = false;
    return static_cast<VId>(verts_.size()) - 1;
}

FId Triangulation::add_face(VId a, VId b, VId c) {
    Face f;
    f.v = {a, b, c};
    f.alive = true;
    faces_.push_back(f);
    topo_valid_ = false;
    return static_cast<FId>(faces_.size()) - 1;
}

void Triangulation::kill_face(FId f) {
    faces_[f].alive = false;
    topo_valid_ = false;
}

void Triangulation::kill_vertex(VId v) {
    verts_[v].alive = false;
    topo_valid_ = false;
}

long Triangulation::num_vertices() const {
    long n = 0;
    for (const auto& v : verts_) n += v.alive ? 1 : 0;
    return n;
}

long Triangulation::num_faces() const {
    long n = 0;
    for (const auto& f : faces_) n += f.alive ? 1 : 0;
    return n;
}

std::vector<EdgeKey> Triangulation::edges() const {
    std::set<EdgeKey> es;
    for (const auto& f : faces_) {
        if (!f.alive) continue;
        es.insert(EdgeKey(f.v[0], f.v[1]));
        es.insert(EdgeKey(f.v[1], f.v[2]));
        es.insert(EdgeKey(f.v[2], f.v[0]));
    }
    return {es.begin(), es.end()};
}

long Triangulation::num_edges() const { return static_cast<long>(edges().size()); }

std::vector<VId> Triangulation::marked_vertices() const {
    std::vector<VId> out;
    for (VId v = 0; v < vertex_capacity(); ++v)
        if (verts_[v].alive && verts_[v].marked) out.push_back(v);
    return out;
}

std::vector<VId> Triangulation::alive_vertices() const {
    std::vector<VId> out;
    for (VId v = 0; v < vertex_capacity(); ++v)
        if (verts_[v].alive) out.push_back(v);
    return out;
}

std::vector<FId> Triangulation::alive_faces() const {
    std::vector<FId> out;
    for (FId f = 0; f < face_capacity(); ++f)
        if (faces_[f].alive) out.push_back(f);
    return out;
}

long Triangulation::euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

void Triangulation::ensure_topology() const {
    if (topo_valid_) return;
    dir_face_.clear();
    next_ccw_.clear();
    for (FId f = 0; f < face_capacity(); ++f) {
        if (!faces_[f].alive) continue;
        const auto& v = faces_[f].v;
        for (int i = 0; i < 3; ++i) {
            VId a = v[i], b = v[(i + 1) % 3], c = v[(i + 2) % 3];
            dir_face_[{a, b}] = f;
            next_ccw_[{a, b}] = c; // around a: after b comes c
        }
    }
    topo_valid_ = true;
}

void Triangulation::rebuild_topology() const { ensure_topology(); }

bool Triangulation::has_edge(VId u, VId v) const {
    ensure_topology();
    return dir_face_.count({u, v}) > 0 || dir_face_.count({v, u}) > 0;
}

FId Triangulation::left_face(VId u, VId v) const {
    ensure_topology();
    auto it = dir_face_.find({u, v});
    return it == dir_face_.end() ? -1 : it->second;
}

VId Triangulation::third_vertex(VId u, VId v) const {
    ensure_topology();
    auto it = next_ccw_.find({u, v});
    return it == next_ccw_.end() ? -1 : it->second;
}

VId Triangulation::next_around(VId v, VId u) const { return third_vertex(v, u); }

std::vector<VId> Triangulation::link_cycle(VId v) const {
    ensure_topology();
    VId start = -1;
    for (const auto& [key, f] : dir_face_) {
        if (key.first == v) {
            start = key.second;
            break;
        }
    }
    if (start == -1) return {};
    std::vector<VId> cyc;
    VId cur = start;
    do {
        cyc.push_back(cur);
        cur = next_around(v, cur);
        if (cur == -1 || cyc.size() > dir_face_.size()) return {}; // broken link
    } while (cur != start);
    return cyc;
}

int Triangulation::vertex_degree(VId v) const { return static_cast<int>(link_cycle(v).size()); }

ValidationReport Triangulation::validate() const {
    ValidationReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

    std::map<std::pair<VId, VId>, int> dir_count;
    std::map<std::array<VId, 3>, int> face_sets;
    long nf = 0;
    for (FId f = 0; f < face_capacity(); ++f) {
        if (!faces_[f].alive) continue;
        ++nf;
        const auto& v = faces_[f].v;
        bool bad = false;
        for (int i = 0; i < 3; ++i) {
            if (v[i] < 0 || v[i] >= vertex_capacity() || !verts_[v[i]].alive) {
                fail("face " + std::to_string(f) + " references dead vertex");
                bad = true;
            }
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
            fail("face " + std::to_string(f) + " has repeated vertex");
            bad = true;
        }
        if (bad) continue;
        std::array<VId, 3> s = v;
        std::sort(s.begin(), s.end());
        if (++face_sets[s] > 1) fail("simplicial condition: duplicate face on vertices " +
                                     std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                                     std::to_string(s[2]));
        for (int i = 0; i < 3; ++i) ++dir_count[{v[i], v[(i + 1) % 3]}];
    }
    if (nf == 0) {
        fail("no faces");
        return rep;
    }

    std::set<EdgeKey> es;
    for (const auto& [de, c] : dir_count) {
        es.insert(EdgeKey(de.first, de.second));
        if (c > 1)
            fail("orientation: directed edge " + std::to_string(de.first) + "->" +
                 std::to_string(de.second) + " in " + std::to_string(c) + " faces");
    }
    for (const auto& e : es) {
        int fwd = dir_count.count({e.a, e.b}) ? dir_count.at({e.a, e.b}) : 0;
        int bwd = dir_count.count({e.b, e.a}) ? dir_count.at({e.b, e.a}) : 0;
        if (fwd + bwd == 1)
            fail("edge with one incident face: " + std::to_string(e.a) + "-" + std::to_string(e.b));
        else if (fwd + bwd != 2)
            fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " in " +
                 std::to_string(fwd + bwd) + " faces");
        else if (fwd != 1 || bwd != 1)
            fail("orientation mismatch on edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    }

    long nv = num_vertices();
    long ne = static_cast<long>(es.size());
    if (nv - ne + nf != 2)
        fail("Euler characteristic != 2 (V=" + std::to_string(nv) + " E=" + std::to_string(ne) +
             " F=" + std::to_string(nf) + ")");

    // vertex links must be single cycles
    if (rep.ok()) {
        std::map<VId, std::set<VId>> nbrs;
        for (const auto& e : es) {
            nbrs[e.a].insert(e.b);
            nbrs[e.b].insert(e.a);
        }
        for (VId v = 0; v < vertex_capacity(); ++v) {
            if (!verts_[v].alive) continue;
            if (!nbrs.count(v)) {
                fail("isolated vertex " + std::to_string(v));
                continue;
            }
            auto cyc = link_cycle(v);
            if (cyc.size() != nbrs[v].size())
                fail("link of vertex " + std::to_string(v) + " is not a single cycle");
        }
        // connectivity over faces
        std::vector<FId> fs = alive_faces();
        std::map<FId, int> comp;
        std::deque<FId> q{fs.front()};
        comp[fs.front()] = 1;
        while (!q.empty()) {
            FId f = q.front();
            q.pop_front();
            const auto& v = faces_[f].v;
            for (int i = 0; i < 3; ++i) {
                FId g = left_face(v[(i + 1) % 3], v[i]);
                if (g >= 0 && !comp.count(g)) {
                    comp[g] = 1;
                    q.push_back(g);
                }
            }
        }
        if (comp.size() != fs.size()) fail("complex is not connected");
    }
    for (VId v = 0; v < vertex_capacity(); ++v)
        if (verts_[v].marked && !verts_[v].alive) fail("marked vertex " + std::to_string(v) + " is dead");
    return rep;
}

// ---------------------------------------------------------------------------
// Subdivision

std::vector<VId> Subdivision::carry_path(const std::vector<VId>& path, bool closed) const {
    std::vector<VId> out;
    size_t n = path.size();
    if (n == 0) return out;
    size_t steps = closed ? n : n - 1;
    for (size_t i = 0; i < steps; ++i) {
        VId u = path[i], v = path[(i + 1) % n];
        out.push_back(u);
        EdgeKey k(u, v);
        auto it = edge_points.find(k);
        if (it != edge_points.end()) {
            if (u < v)
                out.insert(out.end(), it->second.begin(), it->second.end());
            else
                out.insert(out.end(), it->second.rbegin(), it->second.rend());
        }
    }
    if (!closed) out.push_back(path.back());
    return out;
}

/// Build the refined triangulation from a base and a fully populated subdivision.
static Refined finish_subdivision(const Triangulation& base, int new_capacity, Subdivision sub) {
    Refined out;
    out.tri = base;
    for (VId v = base.vertex_capacity(); v < new_capacity; ++v) out.tri.add_vertex();
    for (const auto& [f, patch] : sub.patches) {
        (void)patch;
        out.tri.kill_face(f);
    }
    for (const auto& [f, patch] : sub.patches)
        for (const auto& tile : patch.tiles) out.tri.add_face(tile[0], tile[1], tile[2]);
    out.sub = std::move(sub);
    return out;
}

Refined barycentric(const Triangulation& t) {
    Triangulation work = t;
    Subdivision sub;
    sub.base_vertex_capacity = t.vertex_capacity();
    for (const auto& e : t.edges()) sub.edge_points[e] = {work.add_vertex()};
    for (FId f : t.alive_faces()) {
        const auto& v = t.face(f);
        VId m = work.add_vertex();
        VId ab = sub.edge_points[EdgeKey(v[0], v[1])][0];
        VId bc = sub.edge_points[EdgeKey(v[1], v[2])][0];
        VId ca = sub.edge_points[EdgeKey(v[2], v[0])][0];
        Subdivision::FacePatch p;
        p.interior = {m};
        p.tiles = {{v[0], ab, m}, {ab, v[1], m}, {v[1], bc, m},
                   {bc, v[2], m}, {v[2], ca, m}, {ca, v[0], m}};
        sub.patches[f] = p;
    }
    sub.result_vertex_capacity = work.vertex_capacity();
    return finish_subdivision(t, work.vertex_capacity(), std::move(sub));
}

Refined split_edges(const Triangulation& t, const std::vector<std::pair<EdgeKey, int>>& how) {
    Triangulation work = t;
    Subdivision sub;
    sub.base_vertex_capacity = t.vertex_capacity();
    for (const auto& [e, k] : how) {
        if (k <= 0) continue;
        std::vector<VId> pts;
        for (int i = 0; i < k; ++i) pts.push_back(work.add_vertex());
        sub.edge_points[e] = pts;
    }
    auto pts_of = [&](VId u, VId v) -> std::vector<VId> {
        auto it = sub.edge_points.find(EdgeKey(u, v));
        if (it == sub.edge_points.end()) return {};
        std::vector<VId> p = it->second;
        if (u > v) std::reverse(p.begin(), p.end());
        return p;
    };
    for (FId f : t.alive_faces()) {
        const auto& v = t.face(f);
        std::array<std::vector<VId>, 3> ep = {pts_of(v[0], v[1]), pts_of(v[1], v[2]),
                                              pts_of(v[2], v[0])};
        int nsplit = (!ep[0].empty()) + (!ep[1].empty()) + (!ep[2].empty());
        if (nsplit == 0) continue;
        Subdivision::FacePatch p;
        if (nsplit == 1) {
            // fan from the corner opposite the split edge
            int i = !ep[0].empty() ? 0 : (!ep[1].empty() ? 1 : 2);
            VId apex = v[(i + 2) % 3];
            std::vector<VId> chain;
            chain.push_back(v[i]);
            chain.insert(chain.end(), ep[i].begin(), ep[i].end());
            chain.push_back(v[(i + 1) % 3]);
            for (size_t j = 0; j + 1 < chain.size(); ++j)
                p.tiles.push_back({apex, chain[j], chain[j + 1]});
        } else {
            // polygon walk with an interior hub
            VId hub = work.add_vertex();
            p.interior = {hub};
            std::vector<VId> poly;
            for (int i = 0; i < 3; ++i) {
                poly.push_back(v[i]);
                poly.insert(poly.end(), ep[i].begin(), ep[i].end());
            }
            for (size_t j = 0; j < poly.size(); ++j)
                p.tiles.push_back({hub, poly[j], poly[(j + 1) % poly.size()]});
        }
        sub.patches[f] = p;
    }
    sub.result_vertex_capacity = work.vertex_capacity();
    return finish_subdivision(t, work.vertex_capacity(), std::move(sub));
}

Refined split_edge(const Triangulation& t, VId u, VId v) {
    if (!t.has_edge(u, v)) throw std::invalid_argument("split_edge: unknown edge");
    return split_edges(t, {{EdgeKey(u, v), 1}});
}

// ---------------------------------------------------------------------------
// Regions

namespace {
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};
} // namespace

std::vector<Region> regions_of_edge_set(const Triangulation& t, const std::set<EdgeKey>& cut,
                                        const std::vector<std::vector<VId>>& curve_index) {
    t.rebuild_topology();
    DSU dsu(t.face_capacity());
    for (const auto& e : t.edges()) {
        if (cut.count(e)) continue;
        FId f1 = t.left_face(e.a, e.b), f2 = t.left_face(e.b, e.a);
        if (f1 >= 0 && f2 >= 0) dsu.join(f1, f2);
    }
    std::map<int, int> root_to_region;
    std::vector<Region> regions;
    for (FId f : t.alive_faces()) {
        int r = dsu.find(f);
        if (!root_to_region.count(r)) {
            root_to_region[r] = static_cast<int>(regions.size());
            regions.emplace_back();
        }
        regions[root_to_region[r]].faces.push_back(f);
    }
    auto region_of_face = [&](FId f) { return root_to_region.at(dsu.find(f)); };

    std::set<VId> on_cut;
    for (const auto& e : cut) {
        on_cut.insert(e.a);
        on_cut.insert(e.b);
    }
    // interior edges per region
    for (const auto& e : t.edges()) {
        if (cut.count(e)) continue;
        FId f1 = t.left_face(e.a, e.b);
        if (f1 >= 0) regions[region_of_face(f1)].euler_char -= 1; // -E_int
    }
    for (auto& r : regions) r.euler_char += static_cast<long>(r.faces.size()); // +F
    // interior vertices
    for (VId v = 0; v < t.vertex_capacity(); ++v) {
        if (!t.vertex_alive(v) || on_cut.count(v)) continue;
        auto lk = t.link_cycle(v);
        if (lk.empty()) continue;
        FId f = t.left_face(v, lk[0]);
        auto& reg = regions[region_of_face(f)];
        reg.euler_char += 1;
        if (t.marked(v)) {
            reg.puncture_count += 1;
            reg.interior_marks.push_back(v);
        }
    }
    // boundary incidence
    for (size_t ci = 0; ci < curve_index.size(); ++ci) {
        const auto& c = curve_index[ci];
        for (size_t i = 0; i < c.size(); ++i) {
            VId u = c[i], v = c[(i + 1) % c.size()];
            FId fl = t.left_face(u, v), fr = t.left_face(v, u);
            if (fl >= 0) regions[region_of_face(fl)].boundary_curves.insert(static_cast<int>(ci));
            if (fr >= 0) regions[region_of_face(fr)].boundary_curves.insert(static_cast<int>(ci));
        }
    }
    return regions;
}

std::vector<Region> complementary_regions(const Triangulation& t,
                                          const std::vector<std::vector<VId>>& curves) {
    std::set<VId> seen;
    std::set<EdgeKey> cut;
    for (const auto& c : curves) {
        if (c.size() < 3) throw std::invalid_argument("curve with fewer than 3 vertices");
        std::set<VId> own(c.begin(), c.end());
        if (own.size() != c.size()) throw std::invalid_argument("curve is not embedded");
        for (VId v : own) {
            if (t.marked(v)) throw std::invalid_argument("curve passes through a marked vertex");
            if (seen.count(v)) throw std::invalid_argument("curves intersect");
        }
        seen.insert(own.begin(), own.end());
        for (size_t i = 0; i < c.size(); ++i) {
            VId u = c[i], v = c[(i + 1) % c.size()];
            if (!t.has_edge(u, v)) throw std::invalid_argument("curve edge not in 1-skeleton");
            cut.insert(EdgeKey(u, v));
        }
    }
    return regions_of_edge_set(t, cut, curves);
}

// ---------------------------------------------------------------------------
// BFS

std::optional<std::vector<VId>> bfs_path(const Triangulation& t, const std::vector<VId>& from,
                                         const std::vector<VId>& to, const std::set<VId>& forbidden) {
    t.rebuild_topology();
    std::set<VId> target(to.begin(), to.end());
    std::map<VId, VId> prev;
    std::deque<VId> q;
    for (VId s : from) {
        if (forbidden.count(s)) continue;
        if (!prev.count(s)) {
            prev[s] = s;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        VId v = q.front();
        q.pop_front();
        if (target.count(v)) {
            std::vector<VId> path{v};
            while (prev[path.back()] != path.back()) path.push_back(prev[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (VId u : t.link_cycle(v)) {
            if (forbidden.count(u) || prev.count(u)) continue;
            prev[u] = v;
            q.push_back(u);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Compaction

void compact(Triangulation& t, Protected& prot) {
    bool changed = true;
    long budget = 200; // passes; each pass contracts an independent batch
    while (changed && budget-- > 0) {
        changed = false;
        t.rebuild_topology();

        // vertex -> list of (object id, position); objects numbered cycles then paths
        std::map<VId, std::vector<std::pair<int, int>>> occ;
        int oid = 0;
        for (auto* c : prot.cycles) {
            for (size_t i = 0; i < c->size(); ++i) occ[(*c)[i]].push_back({oid, static_cast<int>(i)});
            ++oid;
        }
        for (auto* p : prot.paths) {
            for (size_t i = 0; i < p->size(); ++i) occ[(*p)[i]].push_back({oid, static_cast<int>(i)});
            ++oid;
        }

        struct Plan {
            VId u, v;
            std::vector<FId> dead, rewrite;
            int obj = -1, pos = -1;
        };
        std::vector<Plan> plans;
        std::set<VId> touched;
        std::vector<std::pair<int, int>> pending_erase; // (object, position)
        long vertices_left = t.num_vertices();

        for (const auto& e : t.edges()) {
            if (vertices_left - static_cast<long>(plans.size()) <= 4) break;
            for (int dir = 0; dir < 2; ++dir) {
                VId u = dir == 0 ? e.a : e.b;
                VId v = dir == 0 ? e.b : e.a; // v dies
                if (touched.count(u) || touched.count(v)) continue;
                if (t.marked(v)) continue;

                Plan plan;
                plan.u = u;
                plan.v = v;
                auto itv = occ.find(v);
                if (itv != occ.end() && !itv->second.empty()) {
                    if (itv->second.size() != 1) continue; // crossing vertex: protected
                    plan.obj = itv->second[0].first;
                    plan.pos = itv->second[0].second;
                    bool is_cycle = plan.obj < static_cast<int>(prot.cycles.size());
                    std::vector<VId>& seq = is_cycle ? *prot.cycles[plan.obj]
                                                     : *prot.paths[plan.obj - prot.cycles.size()];
                    int n = static_cast<int>(seq.size());
                    bool adj;
                    if (is_cycle) {
                        if (n <= 3) continue; // keep cycles length >= 3
                        adj = seq[(plan.pos + 1) % n] == u || seq[(plan.pos + n - 1) % n] == u;
                    } else {
                        if (plan.pos == 0 || plan.pos == n - 1) continue;
                        adj = seq[plan.pos + 1] == u || seq[plan.pos - 1] == u;
                    }
                    if (!adj) continue;
                    if (t.marked(u)) continue; // keep buffers next to marks
                    auto itu = occ.find(u);
                    if (itu == occ.end() || itu->second.size() != 1 ||
                        itu->second[0].first != plan.obj)
                        continue;
                    // only one erase per object per pass keeps positions valid
                    bool clash = false;
                    for (const auto& pe : pending_erase)
                        if (pe.first == plan.obj) clash = true;
                    if (clash) continue;
                }

                // link condition
                VId w1 = t.third_vertex(u, v), w2 = t.third_vertex(v, u);
                if (w1 < 0 || w2 < 0 || w1 == w2) continue;
                auto lku = t.link_cycle(u);
                auto lkv = t.link_cycle(v);
                if (lku.empty() || lkv.empty()) continue;
                std::set<VId> su(lku.begin(), lku.end()), common;
                for (VId x : lkv)
                    if (su.count(x)) common.insert(x);
                if (common != std::set<VId>{w1, w2}) continue;

                for (VId x : lkv) {
                    FId f = t.left_face(v, x);
                    if (f < 0) continue;
                    const auto& fv = t.face(f);
                    bool has_u = fv[0] == u || fv[1] == u || fv[2] == u;
                    (has_u ? plan.dead : plan.rewrite).push_back(f);
                }
                if (plan.dead.size() != 2) continue;

                // freeze both stars so later plans in this pass stay valid
                touched.insert(u);
                touched.insert(v);
                for (VId x : lku) touched.insert(x);
                for (VId x : lkv) touched.insert(x);
                if (plan.obj >= 0) pending_erase.push_back({plan.obj, plan.pos});
                plans.push_back(std::move(plan));
                break;
            }
        }

        for (const auto& plan : plans) {
            for (FId f : plan.dead) t.kill_face(f);
            for (FId f : plan.rewrite) {
                auto fv = t.face(f);
                for (auto& x : fv)
                    if (x == plan.v) x = plan.u;
                t.kill_face(f);
                t.add_face(fv[0], fv[1], fv[2]);
            }
            t.kill_vertex(plan.v);
            if (plan.obj >= 0) {
                bool is_cycle = plan.obj < static_cast<int>(prot.cycles.size());
                std::vector<VId>& seq = is_cycle ? *prot.cycles[plan.obj]
                                                 : *prot.paths[plan.obj - prot.cycles.size()];
                seq.erase(seq.begin() + plan.pos);
            }
            changed = true;
        }
    }
}

} // namespace plcover::mesh
