#include "plcover/chart.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plcover::chart {

using words::FreeWord;

void MarkedChart::reindex() {
    path_pos.clear();
    for (size_t i = 0; i < cut_path.size(); ++i) {
        if (path_pos.count(cut_path[i])) throw std::logic_error("cut path not embedded");
        path_pos[cut_path[i]] = static_cast<int>(i);
    }
    mark_pos.clear();
    size_t next = 0;
    for (size_t i = 0; i < cut_path.size(); ++i) {
        if (next < marks.size() && cut_path[i] == marks[next]) {
            mark_pos.push_back(static_cast<int>(i));
            ++next;
        } else if (tri.marked(cut_path[i])) {
            throw std::logic_error("cut path visits marks out of order");
        }
    }
    if (next != marks.size()) throw std::logic_error("cut path misses a mark");
    if (mark_pos.front() != 0 || mark_pos.back() != static_cast<int>(cut_path.size()) - 1)
        throw std::logic_error("cut path must start and end at the extreme marks");
}

int MarkedChart::segment_of_pos(int pos) const {
    for (size_t i = 0; i + 1 < mark_pos.size(); ++i)
        if (pos > mark_pos[i] && pos < mark_pos[i + 1]) return static_cast<int>(i) + 1;
    return 0;
}

Side side_at(const MarkedChart& ch, VId r, VId x) {
    int pos = ch.path_pos.at(r);
    VId prev = ch.cut_path[pos - 1], next = ch.cut_path[pos + 1];
    VId cur = ch.tri.next_around(r, next);
    while (cur != prev) {
        if (cur == x) return Side::Left;
        cur = ch.tri.next_around(r, cur);
        if (cur == next) throw std::logic_error("side_at: link walk did not close");
    }
    cur = ch.tri.next_around(r, prev);
    while (cur != next) {
        if (cur == x) return Side::Right;
        cur = ch.tri.next_around(r, cur);
        if (cur == prev) throw std::logic_error("side_at: link walk did not close");
    }
    throw std::logic_error("side_at: x is a path neighbor of r");
}

FreeWord word_of_walk(const MarkedChart& ch, const std::vector<VId>& walk, bool closed) {
    if (walk.empty()) return {};
    std::vector<VId> w = walk;
    size_t n = w.size();
    for (VId v : w)
        if (ch.tri.marked(v)) throw std::invalid_argument("walk passes through a mark");
    if (closed) {
        size_t start = n;
        for (size_t i = 0; i < n; ++i)
            if (!ch.on_path(w[i])) {
                start = i;
                break;
            }
        if (start == n) throw std::invalid_argument("closed walk lies entirely on the cut path");
        std::rotate(w.begin(), w.begin() + start, w.end());
    } else {
        if (ch.on_path(w.front()) || ch.on_path(w.back()))
            throw std::invalid_argument("open walk must start and end off the cut path");
    }

    FreeWord out;
    size_t i = 0;
    size_t limit = closed ? n : n; // for open walks never wrap
    while (i < limit) {
        if (!ch.on_path(w[i])) {
            ++i;
            continue;
        }
        // maximal run along the path: consecutive walk vertices at adjacent positions
        size_t j = i;
        while (true) {
            size_t nxt = j + 1;
            if (closed) nxt %= n;
            if (nxt >= n && !closed) break;
            if (nxt == 0 && closed && j + 1 == n) {
                // wrapped; w[0] is off path by rotation
                break;
            }
            VId a = w[j], b = w[nxt];
            if (!ch.on_path(b)) break;
            int pa = ch.path_pos.at(a), pb = ch.path_pos.at(b);
            if (std::abs(pa - pb) != 1) break; // chord: separate touch
            j = nxt;
        }
        VId entry_nb = w[(i + n - 1) % n];
        VId exit_nb = w[(j + 1) % n];
        Side s_in = side_at(ch, w[i], entry_nb);
        Side s_out = side_at(ch, w[j], exit_nb);
        if (s_in != s_out) {
            int seg = ch.segment_of_pos(ch.path_pos.at(w[i]));
            if (seg == 0) throw std::logic_error("run starts at a mark");
            out.push_back(s_in == Side::Left ? seg : -seg);
        }
        i = (j >= i) ? j + 1 : limit; // advance past the run
    }
    return words::reduce(std::move(out));
}

// ---------------------------------------------------------------------------
// Workspace

void Workspace::barycentric() {
    mesh::Refined r = mesh::barycentric(ch.tri);
    ch.cut_path = r.sub.carry_path(ch.cut_path, false);
    for (auto& c : curves) c = r.sub.carry_path(c, true);
    ch.tri = std::move(r.tri);
    ch.reindex();
}

void Workspace::compact() {
    mesh::Protected prot;
    for (auto& c : curves) prot.cycles.push_back(&c);
    prot.paths.push_back(&ch.cut_path);
    mesh::compact(ch.tri, prot);
    ch.reindex();
}

FreeWord Workspace::curve_word(int idx) const { return word_of_walk(ch, curves[idx], true); }

// ---------------------------------------------------------------------------
// Push-off

int push_off(Workspace& ws, std::vector<VId> walk) {
    // round A
    {
        mesh::Refined r = mesh::barycentric(ws.ch.tri);
        ws.ch.cut_path = r.sub.carry_path(ws.ch.cut_path, false);
        for (auto& c : ws.curves) c = r.sub.carry_path(c, true);
        walk = r.sub.carry_path(walk, true);
        ws.ch.tri = std::move(r.tri);
        ws.ch.reindex();
    }
    const mesh::Triangulation& t = ws.ch.tri;
    size_t n = walk.size();
    if (n < 2) throw std::invalid_argument("push_off: walk too short");

    // Fans per visit. Visits are emitted in decreasing walk order so that the
    // junction barycenter between consecutive visits (the face left of the
    // walk edge) appears exactly once, as F_0 of the later-emitted visit.
    struct Item {
        bool is_face;
        mesh::FId face{-1};
        mesh::EdgeKey edge{0, 0};
    };
    std::vector<Item> items;
    for (size_t tt = n; tt-- > 0;) {
        VId v = walk[tt];
        VId u = walk[(tt + n - 1) % n];
        VId wnext = walk[(tt + 1) % n];
        // link neighbors ccw from wnext around v up to u; fan faces F_j between.
        // At a turn-around visit (u == wnext) the fan is the full link.
        std::vector<VId> nb{wnext};
        do {
            VId x = t.next_around(v, nb.back());
            if (x < 0) throw std::logic_error("push_off: broken link");
            nb.push_back(x);
            if (nb.size() > static_cast<size_t>(t.vertex_capacity()) + 2)
                throw std::logic_error("push_off: link runaway");
        } while (nb.back() != u);
        size_t k = nb.size() - 1;
        // per-visit chain: F_0, mid(n_1), F_1, mid(n_2), ..., F_{k-2}, mid(n_{k-1});
        // F_{k-1} is the next visit's F_0 (except k==1 where F_0 is both junctions).
        for (size_t j = 0; j < k; ++j) {
            if (j >= 1) items.push_back({false, -1, mesh::EdgeKey(v, nb[j])});
            if (j + 1 < k || k == 1) {
                mesh::FId F = t.left_face(v, nb[j]);
                if (F < 0) throw std::logic_error("push_off: missing fan face");
                items.push_back({true, F, mesh::EdgeKey(0, 1)});
            }
        }
    }

    // round B: barycenters and midpoints of the round-A complex become vertices
    mesh::Refined r = mesh::barycentric(ws.ch.tri);
    ws.ch.cut_path = r.sub.carry_path(ws.ch.cut_path, false);
    for (auto& c : ws.curves) c = r.sub.carry_path(c, true);

    std::vector<VId> pushed;
    for (const auto& it : items) {
        VId x = it.is_face ? r.sub.patches.at(it.face).interior[0]
                           : r.sub.edge_points.at(it.edge)[0];
        if (!pushed.empty() && pushed.back() == x) continue; // tight k==1 junctions
        pushed.push_back(x);
    }
    while (pushed.size() >= 2 && pushed.front() == pushed.back()) pushed.pop_back();
    ws.ch.tri = std::move(r.tri);
    ws.ch.reindex();

    std::set<VId> uniq(pushed.begin(), pushed.end());
    if (uniq.size() != pushed.size() || pushed.size() < 3)
        throw std::logic_error("push_off: result not embedded");
    ws.curves.push_back(pushed);
    return static_cast<int>(ws.curves.size()) - 1;
}

// ---------------------------------------------------------------------------
// Seeds

static std::vector<VId> link_detour(const MarkedChart& ch, VId mark_v) {
    // left-side link arc replacing the passage prev -> mark -> next
    int pos = ch.path_pos.at(mark_v);
    VId prev = ch.cut_path[pos - 1], next = ch.cut_path[pos + 1];
    std::vector<VId> arc;
    VId cur = ch.tri.next_around(mark_v, next);
    while (cur != prev) {
        arc.push_back(cur);
        cur = ch.tri.next_around(mark_v, cur);
    }
    std::reverse(arc.begin(), arc.end()); // prev-to-next order
    return arc;
}

int build_seed(Workspace& ws, const std::vector<int>& S) {
    if (S.size() < 2) throw std::invalid_argument("seed needs at least two marks");
    std::vector<int> s = S;
    std::sort(s.begin(), s.end());
    for (int attempt = 0; attempt < 4; ++attempt) {
        const MarkedChart& ch = ws.ch;
        std::set<int> in_s(s.begin(), s.end());
        int a = ch.mark_pos[s.front() - 1], b = ch.mark_pos[s.back() - 1];
        std::vector<VId> tree;
        bool ok = true;
        for (int pos = a; pos <= b && ok; ++pos) {
            VId v = ch.cut_path[pos];
            bool is_mark = ch.tri.marked(v);
            if (is_mark) {
                int mark_index = 0;
                for (size_t k = 0; k < ch.marks.size(); ++k)
                    if (ch.marks[k] == v) mark_index = static_cast<int>(k) + 1;
                if (in_s.count(mark_index)) {
                    tree.push_back(v);
                } else {
                    auto det = link_detour(ch, v);
                    for (VId x : det) {
                        if (ch.on_path(x) || ch.tri.marked(x)) {
                            ok = false;
                            break;
                        }
                        tree.push_back(x);
                    }
                }
            } else {
                tree.push_back(v);
            }
        }
        if (ok) {
            std::set<VId> uniq(tree.begin(), tree.end());
            if (uniq.size() != tree.size()) ok = false;
        }
        if (!ok) {
            ws.barycentric();
            continue;
        }
        // boundary walk of the tree-path: out and back
        std::vector<VId> walk = tree;
        for (size_t i = tree.size() - 1; i >= 1; --i) walk.push_back(tree[i - 1]);
        walk.pop_back(); // closing vertex repeats walk.front()
        return push_off(ws, walk);
    }
    throw std::runtime_error("build_seed: chart too coarse after refinement");
}

// ---------------------------------------------------------------------------
// Model sphere and loops

MarkedChart model_sphere(int m) {
    if (m < 2) throw std::invalid_argument("model sphere needs >= 2 marks");
    // bipyramid over an n-cycle, n >= 3; marks at the first m cycle vertices
    int n = std::max(m, 3);
    std::vector<std::array<VId, 3>> faces;
    VId T = n, B = n + 1;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({T, i, j});
        faces.push_back({B, j, i});
    }
    std::vector<VId> marked;
    for (int i = 0; i < m; ++i) marked.push_back(i);
    mesh::Triangulation tri = mesh::Triangulation::from_faces(n + 2, faces, marked);
    // buffer vertex on each cut segment
    std::vector<std::pair<mesh::EdgeKey, int>> how;
    for (int i = 0; i + 1 < m; ++i) how.push_back({mesh::EdgeKey(i, i + 1), 1});
    mesh::Refined r = mesh::split_edges(tri, how);
    MarkedChart ch;
    ch.tri = std::move(r.tri);
    for (int i = 0; i < m; ++i) ch.marks.push_back(i);
    std::vector<VId> base;
    for (int i = 0; i < m; ++i) base.push_back(i);
    ch.cut_path = r.sub.carry_path(base, false);
    ch.reindex();
    return ch;
}

MarkedChart refine_chart(const MarkedChart& ch, mesh::Subdivision* out_sub) {
    mesh::Refined r = mesh::barycentric(ch.tri);
    MarkedChart out;
    out.tri = std::move(r.tri);
    out.marks = ch.marks;
    out.cut_path = r.sub.carry_path(ch.cut_path, false);
    out.reindex();
    if (out_sub) *out_sub = std::move(r.sub);
    return out;
}

VId default_basepoint(const MarkedChart& ch) {
    for (VId v = 0; v < ch.tri.vertex_capacity(); ++v)
        if (ch.tri.vertex_alive(v) && !ch.tri.marked(v) && !ch.on_path(v)) return v;
    throw std::runtime_error("no basepoint available");
}

static std::set<VId> path_and_marks(const MarkedChart& ch) {
    std::set<VId> s(ch.cut_path.begin(), ch.cut_path.end());
    for (VId m : ch.marks) s.insert(m);
    return s;
}

std::vector<VId> letter_loop(const MarkedChart& ch, int letter, VId basepoint) {
    int seg = std::abs(letter);
    if (seg < 1 || seg >= ch.num_marks()) throw std::invalid_argument("letter out of range");
    // interior vertex of the segment
    VId r = -1;
    for (int pos = ch.mark_pos[seg - 1] + 1; pos < ch.mark_pos[seg]; ++pos) {
        r = ch.cut_path[pos];
        break;
    }
    if (r < 0) throw std::runtime_error("cut segment has no interior vertex; refine the chart");
    VId a = -1, b = -1;
    for (VId x : ch.tri.link_cycle(r)) {
        if (ch.on_path(x) || ch.tri.marked(x)) continue;
        Side s = side_at(ch, r, x);
        if (s == Side::Left && a < 0) a = x;
        if (s == Side::Right && b < 0) b = x;
    }
    if (a < 0 || b < 0) throw std::runtime_error("no room next to the cut segment; refine the chart");
    auto forb = path_and_marks(ch);
    auto p1 = mesh::bfs_path(ch.tri, {basepoint}, {a}, forb);
    auto p2 = mesh::bfs_path(ch.tri, {b}, {basepoint}, forb);
    if (!p1 || !p2) throw std::runtime_error("letter_loop: no route; refine the chart");
    std::vector<VId> walk = *p1;
    walk.push_back(r);
    walk.insert(walk.end(), p2->begin(), p2->end());
    walk.pop_back(); // closed walk: final basepoint implicit
    FreeWord w = word_of_walk(ch, walk, true);
    if (w.size() != 1 || std::abs(w[0]) != seg) throw std::logic_error("letter_loop: bad word");
    if (w[0] != letter) {
        std::reverse(walk.begin(), walk.end());
        std::rotate(walk.begin(), walk.end() - 1, walk.end()); // keep basepoint first
    }
    return walk;
}

std::vector<VId> peripheral_loop(const MarkedChart& ch, int mark_index, VId basepoint) {
    VId p = ch.marks.at(mark_index - 1);
    std::vector<VId> link = ch.tri.link_cycle(p);
    for (VId x : link)
        if (ch.tri.marked(x))
            throw std::runtime_error("mark link touches another mark; refine the chart");
    // tail to a link vertex off the path
    std::vector<VId> targets;
    for (VId x : link)
        if (!ch.on_path(x)) targets.push_back(x);
    if (targets.empty()) throw std::runtime_error("peripheral_loop: no room; refine the chart");
    auto forb = path_and_marks(ch);
    auto tail = mesh::bfs_path(ch.tri, {basepoint}, targets, forb);
    if (!tail) throw std::runtime_error("peripheral_loop: no route; refine the chart");
    VId t0 = tail->back();
    size_t off = 0;
    while (link[off] != t0) ++off;
    std::vector<VId> walk = *tail;
    for (size_t i = 1; i <= link.size(); ++i) walk.push_back(link[(off + i) % link.size()]);
    for (size_t i = tail->size() - 1; i >= 1; --i) walk.push_back((*tail)[i - 1]);
    walk.pop_back(); // closed walk
    return walk;
}

} // namespace plcover::chart
