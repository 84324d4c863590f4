#include "plcover/cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace plcover::cover {

mesh::ValidationReport validate_map(const PLMap& f) {
    mesh::ValidationReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

    auto dr = f.domain.tri.validate();
    auto rr = f.range.tri.validate();
    for (auto& s : dr.failures) fail("domain: " + s);
    for (auto& s : rr.failures) fail("range: " + s);
    if (!rep.ok()) return rep;

    for (VId v = 0; v < f.domain.tri.vertex_capacity(); ++v) {
        if (!f.domain.tri.vertex_alive(v)) continue;
        if (v >= static_cast<VId>(f.vertex_image.size()) || f.img(v) < 0 ||
            !f.range.tri.vertex_alive(f.img(v))) {
            fail("vertex " + std::to_string(v) + " has no valid image");
            return rep;
        }
    }
    // faces map onto faces, orientation preserved
    for (mesh::FId fc : f.domain.tri.alive_faces()) {
        const auto& t = f.domain.tri.face(fc);
        VId a = f.img(t[0]), b = f.img(t[1]), c = f.img(t[2]);
        if (a == b || b == c || a == c) {
            fail("face " + std::to_string(fc) + " collapses under the map");
            continue;
        }
        if (f.range.tri.left_face(a, b) < 0 || f.range.tri.third_vertex(a, b) != c)
            fail("face " + std::to_string(fc) + " does not map onto an oriented range face");
    }
    if (!rep.ok()) return rep;

    // local covering structure of every vertex link
    long rh = 0;
    for (VId v = 0; v < f.domain.tri.vertex_capacity(); ++v) {
        if (!f.domain.tri.vertex_alive(v)) continue;
        auto lk = f.domain.tri.link_cycle(v);
        auto rlk = f.range.tri.link_cycle(f.img(v));
        if (lk.empty() || rlk.empty() || lk.size() % rlk.size() != 0) {
            fail("link of vertex " + std::to_string(v) + " does not cover its image link");
            continue;
        }
        for (size_t i = 0; i < lk.size(); ++i) {
            VId want = f.range.tri.next_around(f.img(v), f.img(lk[i]));
            if (f.img(lk[(i + 1) % lk.size()]) != want) {
                fail("link of vertex " + std::to_string(v) + " maps inconsistently");
                break;
            }
        }
        rh += static_cast<long>(lk.size() / rlk.size()) - 1;
    }
    if (!rep.ok()) return rep;

    // global degree well-defined
    std::map<mesh::FId, int> count;
    for (mesh::FId fc : f.domain.tri.alive_faces()) {
        const auto& t = f.domain.tri.face(fc);
        count[f.range.tri.left_face(f.img(t[0]), f.img(t[1]))]++;
    }
    int d = -1;
    for (mesh::FId rc : f.range.tri.alive_faces()) {
        int c = count.count(rc) ? count[rc] : 0;
        if (d == -1) d = c;
        if (c != d) {
            fail("face counts over range faces disagree (not a covering)");
            return rep;
        }
    }
    if (rh != 2L * d - 2)
        fail("Riemann-Hurwitz violated: sum(deg-1)=" + std::to_string(rh) +
             ", degree=" + std::to_string(d));

    // identification and marks: the identification must cover at least the
    // marked set (new refinement vertices need no identification)
    std::set<VId> seen;
    for (const auto& [r, dv] : f.range_to_domain) {
        if (!f.range.tri.vertex_alive(r) || !f.domain.tri.vertex_alive(dv))
            fail("identification references dead vertices");
        if (!seen.insert(dv).second) fail("identification not injective");
    }
    if (f.domain.marks.size() != f.range.marks.size()) fail("mark counts differ");
    for (size_t i = 0; i < f.domain.marks.size() && i < f.range.marks.size(); ++i) {
        auto it = f.range_to_domain.find(f.range.marks[i]);
        if (it == f.range_to_domain.end() || it->second != f.domain.marks[i])
            fail("mark " + std::to_string(i + 1) + " not position-identified");
    }
    return rep;
}

int degree(const PLMap& f) {
    std::map<mesh::FId, int> count;
    for (mesh::FId fc : f.domain.tri.alive_faces()) {
        const auto& t = f.domain.tri.face(fc);
        mesh::FId rf = f.range.tri.left_face(f.img(t[0]), f.img(t[1]));
        if (rf < 0) throw std::invalid_argument("degree: map is not simplicial");
        count[rf]++;
    }
    int d = -1;
    for (mesh::FId rc : f.range.tri.alive_faces()) {
        int c = count.count(rc) ? count[rc] : 0;
        if (d == -1) d = c;
        if (c != d) throw std::invalid_argument("degree: face counts disagree over range faces");
    }
    return d;
}

int local_degree(const PLMap& f, VId v) {
    auto lk = f.domain.tri.link_cycle(v);
    auto rlk = f.range.tri.link_cycle(f.img(v));
    if (lk.empty() || rlk.empty() || lk.size() % rlk.size() != 0)
        throw std::invalid_argument("local_degree: invalid link");
    return static_cast<int>(lk.size() / rlk.size());
}

VId vertex_dynamics(const PLMap& f, VId range_v) {
    auto it = f.range_to_domain.find(range_v);
    if (it == f.range_to_domain.end())
        throw std::invalid_argument("vertex_dynamics: vertex not identified");
    return f.img(it->second);
}

Orbits critical_and_postcritical(const PLMap& f) {
    Orbits o;
    for (VId v = 0; v < f.domain.tri.vertex_capacity(); ++v) {
        if (!f.domain.tri.vertex_alive(v)) continue;
        if (local_degree(f, v) > 1) o.critical.insert(v);
    }
    std::deque<VId> q;
    for (VId c : o.critical) {
        VId x = f.img(c);
        if (o.postcritical.insert(x).second) q.push_back(x);
    }
    while (!q.empty()) {
        VId x = q.front();
        q.pop_front();
        VId y = vertex_dynamics(f, x);
        if (o.postcritical.insert(y).second) q.push_back(y);
    }
    return o;
}

Orbifold orbifold(const PLMap& f) {
    Orbits o = critical_and_postcritical(f);
    std::set<VId> nodes = o.postcritical;
    std::map<VId, long> deg_at; // local degree at the node's sphere point
    for (VId x : nodes) deg_at[x] = local_degree(f, f.range_to_domain.at(x));

    // infinite weights: x on a cycle that carries a point of local degree > 1
    std::map<VId, long> w;
    for (VId x : nodes) w[x] = 1;
    std::set<VId> infinite;
    for (VId x : nodes) {
        std::vector<VId> orbit{x};
        VId cur = x;
        while (true) {
            cur = vertex_dynamics(f, cur);
            if (cur == x) break;
            if (std::find(orbit.begin(), orbit.end(), cur) != orbit.end()) {
                orbit.clear(); // strictly preperiodic: not on a cycle
                break;
            }
            orbit.push_back(cur);
        }
        bool crit_on_cycle = false;
        for (VId y : orbit)
            if (deg_at[y] > 1) crit_on_cycle = true;
        if (!orbit.empty() && crit_on_cycle) infinite.insert(x);
    }

    // finite weights: fixpoint of w(f(y)) <- lcm(w(f(y)), deg_y * w(y));
    // paths through an infinite cycle never return to a finite node
    auto lcm = [](long a, long b) { return a / std::__gcd(a, b) * b; };
    for (size_t round = 0; round < nodes.size() + 2; ++round) {
        bool changed = false;
        for (VId y : nodes) {
            if (infinite.count(y)) continue;
            VId x = vertex_dynamics(f, y);
            if (infinite.count(x) || !nodes.count(x)) continue;
            long cand = lcm(w[x], deg_at[y] * w[y]);
            if (cand != w[x]) {
                w[x] = cand;
                changed = true;
            }
        }
        for (VId c : o.critical) {
            bool is_node = false;
            for (VId x : nodes)
                if (f.range_to_domain.at(x) == c) is_node = true;
            if (is_node) continue; // covered by the node relaxation
            VId x = f.img(c);
            if (infinite.count(x)) continue;
            long cand = lcm(w[x], static_cast<long>(local_degree(f, c)));
            if (cand != w[x]) {
                w[x] = cand;
                changed = true;
            }
        }
        if (!changed) break;
    }

    Orbifold out;
    out.euler_char = 2;
    for (VId x : o.postcritical) {
        long wx = infinite.count(x) ? 0 : w[x];
        out.weight[x] = wx;
        if (wx == 0) {
            out.signature_infinite++;
            out.euler_char -= 1;
        } else {
            if (wx > 1) out.signature_finite.push_back(wx);
            out.euler_char -= Rat(wx - 1, wx);
        }
    }
    std::sort(out.signature_finite.begin(), out.signature_finite.end());
    out.hyperbolic = out.euler_char < 0;
    return out;
}

// ---------------------------------------------------------------------------
// Lifting

PLMap lift_refinement(const PLMap& f, const mesh::Subdivision& range_sub,
                      mesh::Subdivision* domain_sub_out) {
    PLMap out = f;
    mesh::Triangulation new_range = f.range.tri;
    for (VId v = f.range.tri.vertex_capacity(); v < range_sub.result_vertex_capacity; ++v)
        new_range.add_vertex();
    for (const auto& [fc, patch] : range_sub.patches) {
        (void)patch;
        new_range.kill_face(fc);
    }
    for (const auto& [fc, patch] : range_sub.patches)
        for (const auto& tile : patch.tiles) new_range.add_face(tile[0], tile[1], tile[2]);

    mesh::Subdivision dsub;
    dsub.base_vertex_capacity = f.domain.tri.vertex_capacity();
    mesh::Triangulation new_domain = f.domain.tri;
    std::vector<VId> new_image = f.vertex_image;
    auto set_img = [&](VId dv, VId rv) {
        if (static_cast<size_t>(dv) >= new_image.size()) new_image.resize(dv + 1, -1);
        new_image[dv] = rv;
    };

    // edges first (shared between adjacent faces)
    for (const auto& e : f.domain.tri.edges()) {
        VId u = f.img(e.a), v = f.img(e.b);
        mesh::EdgeKey rk(u, v);
        auto it = range_sub.edge_points.find(rk);
        if (it == range_sub.edge_points.end()) continue;
        std::vector<VId> imgs = it->second; // ordered rk.a -> rk.b
        if (u != rk.a) std::reverse(imgs.begin(), imgs.end());
        // imgs ordered img(e.a) -> img(e.b); stored points run e.a -> e.b
        std::vector<VId> pts;
        for (VId rimg : imgs) {
            VId nv = new_domain.add_vertex();
            set_img(nv, rimg);
            pts.push_back(nv);
        }
        dsub.edge_points[e] = pts;
    }

    for (mesh::FId fc : f.domain.tri.alive_faces()) {
        const auto& t = f.domain.tri.face(fc);
        mesh::FId rf = f.range.tri.left_face(f.img(t[0]), f.img(t[1]));
        auto it = range_sub.patches.find(rf);
        if (it == range_sub.patches.end()) continue;
        const auto& patch = it->second;
        mesh::Subdivision::FacePatch dp;
        std::map<VId, VId> sym; // range vertex in refined range -> domain vertex
        for (int i = 0; i < 3; ++i) sym[f.img(t[i])] = t[i];
        for (int i = 0; i < 3; ++i) {
            VId a = t[i], b = t[(i + 1) % 3];
            mesh::EdgeKey dk(a, b);
            auto dit = dsub.edge_points.find(dk);
            if (dit == dsub.edge_points.end()) continue;
            mesh::EdgeKey rk(f.img(a), f.img(b));
            std::vector<VId> rpts = range_sub.edge_points.at(rk); // rk.a -> rk.b
            if (f.img(dk.a) != rk.a) std::reverse(rpts.begin(), rpts.end());
            const std::vector<VId>& dpts = dit->second; // dk.a -> dk.b
            for (size_t j = 0; j < dpts.size(); ++j) sym[rpts[j]] = dpts[j];
        }
        for (size_t j = 0; j < patch.interior.size(); ++j) {
            VId nv = new_domain.add_vertex();
            set_img(nv, patch.interior[j]);
            dp.interior.push_back(nv);
            sym[patch.interior[j]] = nv;
        }
        for (const auto& tile : patch.tiles) {
            auto a = sym.find(tile[0]), b = sym.find(tile[1]), c = sym.find(tile[2]);
            if (a == sym.end() || b == sym.end() || c == sym.end())
                throw std::logic_error("lift_refinement: unmatched patch symbol");
            dp.tiles.push_back({a->second, b->second, c->second});
        }
        dsub.patches[fc] = dp;
    }
    dsub.result_vertex_capacity = new_domain.vertex_capacity();
    for (const auto& [fc, patch] : dsub.patches) {
        (void)patch;
        new_domain.kill_face(fc);
    }
    for (const auto& [fc, patch] : dsub.patches)
        for (const auto& tile : patch.tiles) new_domain.add_face(tile[0], tile[1], tile[2]);

    out.domain.tri = std::move(new_domain);
    out.range.tri = std::move(new_range);
    out.vertex_image = std::move(new_image);
    out.domain.cut_path = dsub.carry_path(f.domain.cut_path, false);
    out.range.cut_path = range_sub.carry_path(f.range.cut_path, false);
    out.domain.reindex();
    out.range.reindex();
    if (domain_sub_out) *domain_sub_out = std::move(dsub);
    return out;
}

PLMap lift_through(const PLMap& f, const std::vector<mesh::Subdivision>& chain) {
    PLMap cur = f;
    for (const auto& sub : chain) cur = lift_refinement(cur, sub);
    return cur;
}

std::vector<VId> lift_walk(const PLMap& f, const std::vector<VId>& walk, VId start) {
    if (walk.empty()) return {};
    if (f.img(start) != walk[0]) throw std::invalid_argument("lift_walk: start not over walk[0]");
    std::vector<VId> out{start};
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        VId cur = out.back();
        VId want = walk[i + 1];
        VId found = -1;
        for (VId x : f.domain.tri.link_cycle(cur)) {
            if (f.img(x) == want) {
                if (found >= 0)
                    throw std::invalid_argument("lift_walk: path through a critical point");
                found = x;
            }
        }
        if (found < 0) throw std::logic_error("lift_walk: no lift of edge");
        out.push_back(found);
    }
    return out;
}

std::vector<PreimageComponent> curve_preimage(const PLMap& f, const std::vector<VId>& curve) {
    if (curve.size() < 3) throw std::invalid_argument("curve too short");
    std::set<mesh::EdgeKey> cedges;
    for (size_t i = 0; i < curve.size(); ++i) {
        VId u = curve[i], v = curve[(i + 1) % curve.size()];
        if (!f.range.tri.has_edge(u, v))
            throw std::invalid_argument("curve edge not in range 1-skeleton");
        if (f.range.tri.marked(u)) throw std::invalid_argument("curve meets the postcritical set");
        cedges.insert(mesh::EdgeKey(u, v));
    }
    std::map<VId, std::vector<VId>> adj;
    for (const auto& e : f.domain.tri.edges()) {
        if (!cedges.count(mesh::EdgeKey(f.img(e.a), f.img(e.b)))) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2)
            throw std::invalid_argument("curve meets a critical value (preimage not 2-regular)");
    std::vector<PreimageComponent> comps;
    std::set<VId> used;
    for (const auto& [v0, nb0] : adj) {
        if (used.count(v0)) continue;
        std::vector<VId> cyc{v0};
        used.insert(v0);
        VId prev = v0, cur = nb0[0];
        while (cur != v0) {
            cyc.push_back(cur);
            used.insert(cur);
            const auto& nb = adj.at(cur);
            VId nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
        PreimageComponent pc;
        pc.cycle = std::move(cyc);
        if (pc.cycle.size() % curve.size() != 0)
            throw std::logic_error("preimage component length not a multiple of curve length");
        pc.degree = static_cast<int>(pc.cycle.size() / curve.size());
        comps.push_back(std::move(pc));
    }
    std::sort(comps.begin(), comps.end(),
              [](const PreimageComponent& a, const PreimageComponent& b) {
                  return a.cycle < b.cycle;
              });
    return comps;
}

// ---------------------------------------------------------------------------
// Composition

static bool same_complex(const mesh::Triangulation& a, const mesh::Triangulation& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    auto canon = [](std::array<VId, 3> f) {
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (f[i] < f[k]) k = i;
        return std::array<VId, 3>{f[k], f[(k + 1) % 3], f[(k + 2) % 3]};
    };
    std::set<std::array<VId, 3>> fa, fb;
    for (auto fc : a.alive_faces()) fa.insert(canon(a.face(fc)));
    for (auto fc : b.alive_faces()) fb.insert(canon(b.face(fc)));
    return fa == fb;
}

PLMap compose_pl(const PLMap& g, const PLMap& f) {
    if (!same_complex(f.range.tri, g.domain.tri))
        throw std::invalid_argument(
            "compose: range of inner map differs from domain of outer map (refine first)");
    PLMap out;
    out.name = g.name + "*" + f.name;
    out.domain = f.domain;
    out.range = g.range;
    out.vertex_image.assign(f.vertex_image.size(), -1);
    for (VId v = 0; v < static_cast<VId>(f.vertex_image.size()); ++v) {
        if (!f.domain.tri.vertex_alive(v)) continue;
        out.vertex_image[v] = g.img(f.img(v));
    }
    for (const auto& [r, dv] : g.range_to_domain) {
        auto it = f.range_to_domain.find(dv);
        if (it != f.range_to_domain.end()) out.range_to_domain[r] = it->second;
    }
    return out;
}

PLMap apply_homeo(const PLMap& h, const PLMap& f) {
    if (degree(h) != 1) throw std::invalid_argument("apply_homeo: map is not a homeomorphism");
    return compose_pl(h, f);
}

PLMap identity_map(const chart::MarkedChart& ch) {
    PLMap f;
    f.name = "identity";
    f.domain = ch;
    f.range = ch;
    f.vertex_image.resize(ch.tri.vertex_capacity(), -1);
    for (VId v = 0; v < ch.tri.vertex_capacity(); ++v) {
        if (!ch.tri.vertex_alive(v)) continue;
        f.vertex_image[v] = v;
        f.range_to_domain[v] = v;
    }
    return f;
}

} // namespace plcover::cover
