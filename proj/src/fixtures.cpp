#include "plcover/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plcover::fixtures {

using cover::PLMap;
using mesh::VId;

std::vector<std::string> names() {
    return {"power2", "rabbit_basilica_mating", "rabbit_antirabbit_mating"};
}

// ---------------------------------------------------------------------------
// power2: the model of z -> z^2. Range is a bipyramid over a square, domain a
// bipyramid over an octagon; both poles are marked and fixed, each critical.

static PLMap build_power2() {
    PLMap f;
    f.name = "power2";
    f.declared_degree = 2;

    // range: bipyramid over a square; e0..e3 = 0..3, pole0 = 4, poleInf = 5.
    // domain: the same complex with every equator edge split (an octagon
    // bipyramid), so the domain literally refines the range.
    std::vector<std::array<VId, 3>> faces;
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        faces.push_back({4, i, j});
        faces.push_back({5, j, i});
    }
    mesh::Triangulation base = mesh::Triangulation::from_faces(6, faces, {4, 5});
    std::vector<std::pair<mesh::EdgeKey, int>> how;
    for (int i = 0; i < 4; ++i) how.push_back({mesh::EdgeKey(i, (i + 1) % 4), 1});
    mesh::Refined r = mesh::split_edges(base, how);

    f.range.tri = base;
    f.range.marks = {4, 5};
    f.range.cut_path = {4, 0, 5};
    f.range.reindex();

    f.domain.tri = r.tri;
    f.domain.marks = {4, 5};
    f.domain.cut_path = r.sub.carry_path({4, 0, 5}, false);
    f.domain.reindex();

    f.vertex_image.assign(f.domain.tri.vertex_capacity(), -1);
    // angle doubling: vertex i sits at angle 2i/8, midpoint of (i,i+1) at (2i+1)/8
    for (int i = 0; i < 4; ++i) {
        f.vertex_image[i] = (2 * i) % 4;
        VId m = r.sub.edge_points.at(mesh::EdgeKey(i, (i + 1) % 4))[0];
        f.vertex_image[m] = (2 * i + 1) % 4;
    }
    f.vertex_image[4] = 4;
    f.vertex_image[5] = 5;
    for (VId v = 0; v < 6; ++v) f.range_to_domain[v] = v;
    return f;
}

// ---------------------------------------------------------------------------
// Matings

namespace {

struct Builder {
    long N;
    mesh::Triangulation tri;
    std::map<std::string, VId> mark_of;
    std::vector<VId> eq; // equator vertex per position

    VId vertex(bool marked = false) { return tri.add_vertex(marked); }
};

// positions of the sector [a, b) walked inclusively from a to b (cyclic)
std::vector<long> sector_walk(long a, long b, long mod) {
    std::vector<long> out;
    long span = ((b - a) % mod + mod) % mod;
    if (span == 0) span = mod;
    for (long t = 0; t <= span; ++t) out.push_back((a + t) % mod);
    return out;
}

void add_sector_fan(mesh::Triangulation& tri, VId center, VId alphaL, VId alphaR,
                    const std::vector<VId>& eq_chain, bool south) {
    // north: (C, aL, e_first), (C, e_t, e_{t+1}), (C, e_last, aR)
    if (!south) {
        tri.add_face(center, alphaL, eq_chain.front());
        for (size_t t = 0; t + 1 < eq_chain.size(); ++t)
            tri.add_face(center, eq_chain[t], eq_chain[t + 1]);
        tri.add_face(center, eq_chain.back(), alphaR);
    } else {
        tri.add_face(center, eq_chain.front(), alphaL);
        for (size_t t = 0; t + 1 < eq_chain.size(); ++t)
            tri.add_face(center, eq_chain[t + 1], eq_chain[t]);
        tri.add_face(center, alphaR, eq_chain.back());
    }
}

struct HemiRange {
    VId alpha;
    std::map<std::string, VId> marks; // by name
};

HemiRange build_range_hemisphere(Builder& b, const Hemisphere& h, bool south) {
    HemiRange out;
    out.alpha = b.vertex();
    size_t k = h.rays.size();
    for (size_t i = 0; i < k; ++i) {
        const std::string& name = h.sector_mark[i];
        VId m = b.vertex(true);
        out.marks[name] = m;
        b.mark_of[name] = m;
    }
    for (size_t i = 0; i < k; ++i) {
        long a = h.rays[i], bb = h.rays[(i + 1) % k];
        std::vector<long> walk = sector_walk(a, bb, b.N);
        std::vector<VId> chain;
        for (long p : walk) chain.push_back(b.eq[p]);
        add_sector_fan(b.tri, out.marks.at(h.sector_mark[i]), out.alpha, out.alpha, chain, south);
    }
    return out;
}

struct HemiDomain {
    VId alpha_tagged; // the alpha-position lift
    VId alpha_co;
    std::map<std::string, VId> marks;               // position-identified marks
    std::vector<std::pair<VId, std::string>> copts; // co-points and their image mark
};

// D-sector bookkeeping for one hemisphere of the doubled equator (2N-gon).
HemiDomain build_domain_hemisphere(Builder& b, const Hemisphere& h, bool south,
                                   std::vector<std::pair<VId, VId>>& image_pairs,
                                   VId range_alpha,
                                   const std::map<std::string, VId>& range_marks,
                                   const std::map<std::string, std::string>& mark_dynamics) {
    HemiDomain out;
    long N = b.N, M = 2 * N;
    out.alpha_tagged = b.vertex();
    out.alpha_co = b.vertex();
    image_pairs.push_back({out.alpha_tagged, range_alpha});
    image_pairs.push_back({out.alpha_co, range_alpha});

    size_t k = h.rays.size();
    // domain ray positions on the 2N equator
    std::vector<long> dpos;
    for (long r : h.rays) {
        dpos.push_back(r);
        dpos.push_back(r + N);
    }
    std::sort(dpos.begin(), dpos.end());

    auto is_tagged_ray = [&](long p) {
        if (p % 2 != 0) return false;
        long r = p / 2;
        return std::find(h.rays.begin(), h.rays.end(), r) != h.rays.end();
    };
    auto range_sector_start_of = [&](long pos_mod_N) -> int {
        for (size_t i = 0; i < k; ++i)
            if (h.rays[i] == pos_mod_N) return static_cast<int>(i);
        return -1;
    };
    // which range sector contains the half-unit interval [a, b)
    auto range_sector_containing = [&](long a, long bb) -> int {
        for (size_t i = 0; i < k; ++i) {
            long lo = 2 * h.rays[i];
            long span = ((2 * h.rays[(i + 1) % k] - lo) % M + M) % M;
            if (span == 0) span = M;
            long offa = ((a - lo) % M + M) % M;
            long offb = ((bb - lo) % M + M) % M;
            if (offb == 0) offb = M;
            if (offa < span && offb <= span && offa < offb) return static_cast<int>(i);
        }
        return -1;
    };

    for (size_t s = 0; s < dpos.size(); ++s) {
        long a = dpos[s], bb = dpos[(s + 1) % dpos.size()];
        int img_sector = range_sector_start_of(((a % N) + N) % N);
        if (img_sector < 0) throw std::logic_error("mating: domain sector image is not a sector");
        const std::string& img_mark = h.sector_mark[img_sector];

        // center: the mark mapping to img_mark whose own sector lies over this
        // domain sector. The critical mark qualifies for two adjacent domain
        // sectors; both fans share its vertex (that is where the link doubles).
        VId center = -1;
        std::string center_name;
        for (const auto& [mname, mimg] : mark_dynamics) {
            if (mimg != img_mark) continue;
            int own = -1;
            for (size_t i = 0; i < k; ++i)
                if (h.sector_mark[i] == mname) own = static_cast<int>(i);
            if (own < 0) continue;
            if (range_sector_containing(a, bb) == own) {
                center_name = mname;
                break;
            }
        }
        if (!center_name.empty()) {
            auto it = out.marks.find(center_name);
            center = (it != out.marks.end()) ? it->second : b.vertex(true);
            out.marks[center_name] = center;
            image_pairs.push_back({center, range_marks.at(img_mark)});
        } else {
            center = b.vertex();
            out.copts.push_back({center, img_mark});
            image_pairs.push_back({center, range_marks.at(img_mark)});
        }

        VId aL = is_tagged_ray(a) ? out.alpha_tagged : out.alpha_co;
        VId aR = is_tagged_ray(bb) ? out.alpha_tagged : out.alpha_co;
        std::vector<long> walk = sector_walk(a, bb, M);
        std::vector<VId> chain;
        for (long p : walk) chain.push_back(b.eq[p]);
        add_sector_fan(b.tri, center, aL, aR, chain, south);
    }
    for (size_t i = 0; i < k; ++i)
        if (!out.marks.count(h.sector_mark[i]))
            throw std::logic_error("mating: mark " + h.sector_mark[i] + " was never placed");
    return out;
}

// mark dynamics from the sector structure: the mark of sector [r_i, r_{i+1})
// maps to the mark of the sector starting at 2 r_i
std::map<std::string, std::string> hemisphere_dynamics(const Hemisphere& h, long N) {
    std::map<std::string, std::string> dyn;
    size_t k = h.rays.size();
    for (size_t i = 0; i < k; ++i) {
        long target = (2 * h.rays[i]) % N;
        int j = -1;
        for (size_t t = 0; t < k; ++t)
            if (h.rays[t] == target) j = static_cast<int>(t);
        if (j < 0) throw std::invalid_argument("mating: doubled ray is not a ray");
        dyn[h.sector_mark[i]] = h.sector_mark[j];
    }
    return dyn;
}

} // namespace

PLMap build_mating(long N, const Hemisphere& north, const Hemisphere& south,
                   const std::vector<std::string>& cut_tokens, const std::string& name) {
    PLMap f;
    f.name = name;
    f.declared_degree = 2;

    auto ndyn = hemisphere_dynamics(north, N);
    auto sdyn = hemisphere_dynamics(south, N);

    // ----- range complex -----
    Builder R;
    R.N = N;
    for (long p = 0; p < N; ++p) R.eq.push_back(R.tri.add_vertex());
    HemiRange rn = build_range_hemisphere(R, north, false);
    HemiRange rs = build_range_hemisphere(R, south, true);

    // ----- domain complex -----
    Builder D;
    D.N = N;
    for (long p = 0; p < 2 * N; ++p) D.eq.push_back(D.tri.add_vertex());
    std::vector<std::pair<VId, VId>> img_pairs; // (domain vertex, range vertex)
    std::map<std::string, VId> all_range_marks = rn.marks;
    for (auto& [k2, v] : rs.marks) all_range_marks[k2] = v;
    std::map<std::string, std::string> all_dyn = ndyn;
    for (auto& [k2, v] : sdyn) all_dyn[k2] = v;

    HemiDomain dn = build_domain_hemisphere(D, north, false, img_pairs, rn.alpha, all_range_marks,
                                            ndyn);
    HemiDomain ds = build_domain_hemisphere(D, south, true, img_pairs, rs.alpha, all_range_marks,
                                            sdyn);

    // ----- vertex images -----
    f.vertex_image.assign(D.tri.vertex_capacity(), -1);
    for (long p = 0; p < 2 * N; ++p) f.vertex_image[D.eq[p]] = R.eq[p % N];
    for (auto& [dv, rv] : img_pairs) f.vertex_image[dv] = rv;

    // ----- identification: range vertex -> domain vertex at the same point
    for (long p = 0; p < N; ++p) f.range_to_domain[R.eq[p]] = D.eq[2 * p];
    f.range_to_domain[rn.alpha] = dn.alpha_tagged;
    f.range_to_domain[rs.alpha] = ds.alpha_tagged;
    std::map<std::string, VId> dom_marks = dn.marks;
    for (auto& [k2, v] : ds.marks) dom_marks[k2] = v;
    for (auto& [mname, rv] : all_range_marks) f.range_to_domain[rv] = dom_marks.at(mname);

    // ----- charts: marks ordered along the cut path -----
    auto token_range_vertex = [&](const std::string& tok) -> VId {
        if (tok.size() > 1 && tok[0] == 'e') return R.eq[std::stol(tok.substr(1))];
        return all_range_marks.at(tok);
    };
    f.range.tri = std::move(R.tri);
    f.domain.tri = std::move(D.tri);
    for (const auto& tok : cut_tokens) {
        if (tok[0] != 'e') {
            f.range.marks.push_back(all_range_marks.at(tok));
            f.domain.marks.push_back(dom_marks.at(tok));
        }
    }
    // range cut path: tokens alternate mark, equator, mark, ...
    for (const auto& tok : cut_tokens) f.range.cut_path.push_back(token_range_vertex(tok));
    // domain cut path: same arc; equator runs double resolution
    for (size_t i = 0; i < cut_tokens.size(); ++i) {
        const auto& tok = cut_tokens[i];
        VId rv = token_range_vertex(tok);
        f.domain.cut_path.push_back(f.range_to_domain.at(rv));
    }
    f.range.reindex();
    f.domain.reindex();

    // cut path edges must exist in both complexes
    for (size_t i = 0; i + 1 < f.range.cut_path.size(); ++i)
        if (!f.range.tri.has_edge(f.range.cut_path[i], f.range.cut_path[i + 1]))
            throw std::logic_error("mating: range cut path edge missing");
    for (size_t i = 0; i + 1 < f.domain.cut_path.size(); ++i)
        if (!f.domain.tri.has_edge(f.domain.cut_path[i], f.domain.cut_path[i + 1]))
            throw std::logic_error("mating: domain cut path edge missing");
    return f;
}

// ---------------------------------------------------------------------------

PLMap build(const std::string& name) {
    if (name == "power2") return build_power2();
    if (name == "rabbit_basilica_mating") {
        // rabbit spider: rays 1/7, 2/7, 4/7; critical orbit n0 -> n1 -> n2 -> n0
        // with the critical point n0 in the wide sector. Basilica: rays 1/3,
        // 2/3 with critical s0 in the wide sector, orbit s0 <-> s1.
        // Common denominator 21. The cut path keeps the three north marks on a
        // subpath inside the closed northern hemisphere.
        Hemisphere north{{3, 6, 12}, {"n1", "n2", "n0"}};
        Hemisphere south{{7, 14}, {"s1", "s0"}};
        return build_mating(21, north, south,
                            {"n0", "e3", "n1", "e6", "n2", "e8", "s1", "e7", "s0"},
                            "rabbit_basilica_mating");
    }
    if (name == "rabbit_antirabbit_mating") {
        // both hemispheres carry the 2/14, 4/14, 8/14 orbit star; the south is
        // the mirror (conjugate) rabbit, whose rays co-land at the same equator
        // points. The cut path visits the mated pairs adjacently, each pair
        // joined through an equator vertex of its common sector.
        Hemisphere north{{2, 4, 8}, {"n1", "n2", "n0"}};
        Hemisphere south{{2, 4, 8}, {"s1", "s2", "s0"}};
        return build_mating(14, north, south,
                            {"n2", "e6", "s2", "e4", "n1", "e3", "s1", "e2", "n0", "e1", "s0"},
                            "rabbit_antirabbit_mating");
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

} // namespace plcover::fixtures
