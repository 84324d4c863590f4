#include "plcover/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace plcover::monodromy {

using words::FreeWord;

std::vector<int> DeckAlgebra::permutation(const FreeWord& w) const {
    std::vector<int> p(d);
    for (int s = 0; s < d; ++s) {
        int cur = s;
        for (int l : w) cur = (l > 0) ? rho[l - 1][cur] : rho_inv[-l - 1][cur];
        p[s] = cur;
    }
    return p;
}

std::vector<DeckAlgebra::Component> DeckAlgebra::preimage_components(const FreeWord& curve) const {
    FreeWord c = words::cyclic_reduce(curve);
    if (c.empty()) throw std::invalid_argument("preimage of an inessential class");
    std::vector<int> perm = permutation(c);
    std::vector<DeckAlgebra::Component> out;
    std::vector<bool> used(d, false);
    for (int s0 = 0; s0 < d; ++s0) {
        if (used[s0]) continue;
        int k = 0, s = s0;
        do {
            used[s] = true;
            s = perm[s];
            ++k;
        } while (s != s0);
        // lift of c^k starting at sheet s0
        FreeWord w;
        int cur = s0;
        for (int rep = 0; rep < k; ++rep) {
            for (int l : c) {
                if (l > 0) {
                    const FreeWord& piece = lift[l - 1][cur];
                    w.insert(w.end(), piece.begin(), piece.end());
                    cur = rho[l - 1][cur];
                } else {
                    int prev = rho_inv[-l - 1][cur];
                    FreeWord piece = words::inverse(lift[-l - 1][prev]);
                    w.insert(w.end(), piece.begin(), piece.end());
                    cur = prev;
                }
            }
        }
        DeckAlgebra::Component comp;
        comp.cls = words::canonical_unoriented(w);
        comp.degree = k;
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.degree < b.degree || (a.degree == b.degree && a.cls < b.cls);
    });
    return out;
}

DeckAlgebra build_deck_algebra(const cover::PLMap& f0) {
    // refine once for loop room, carrying both cut paths
    mesh::Refined r = mesh::barycentric(f0.range.tri);
    cover::PLMap f = cover::lift_refinement(f0, r.sub);

    DeckAlgebra alg;
    alg.m = f.range.num_marks();
    alg.d = cover::degree(f);

    // basepoint off the range cut path with all preimages off the domain path
    mesh::VId x0 = -1;
    std::vector<mesh::VId> sheets;
    for (mesh::VId v = 0; v < f.range.tri.vertex_capacity() && x0 < 0; ++v) {
        if (!f.range.tri.vertex_alive(v) || f.range.tri.marked(v) || f.range.on_path(v)) continue;
        std::vector<mesh::VId> pre;
        for (mesh::VId w = 0; w < f.domain.tri.vertex_capacity(); ++w)
            if (f.domain.tri.vertex_alive(w) && f.img(w) == v) pre.push_back(w);
        if (static_cast<int>(pre.size()) != alg.d) continue;
        bool ok = true;
        for (mesh::VId w : pre)
            if (f.domain.on_path(w) || f.domain.tri.marked(w)) ok = false;
        if (ok) {
            x0 = v;
            sheets = pre;
        }
    }
    if (x0 < 0) throw std::runtime_error("deck algebra: no usable basepoint");
    std::sort(sheets.begin(), sheets.end());

    for (int letter = 1; letter < alg.m; ++letter) {
        auto loop = chart::letter_loop(f.range, letter, x0);
        loop.push_back(loop.front()); // explicit closed path for lifting
        std::vector<int> perm(alg.d);
        std::vector<FreeWord> lifts(alg.d);
        for (int s = 0; s < alg.d; ++s) {
            auto lifted = cover::lift_walk(f, loop, sheets[s]);
            mesh::VId end = lifted.back();
            int t = -1;
            for (int j = 0; j < alg.d; ++j)
                if (sheets[j] == end) t = j;
            if (t < 0) throw std::logic_error("deck algebra: lift does not end on a sheet");
            perm[s] = t;
            lifts[s] = chart::word_of_walk(f.domain, lifted, false);
        }
        alg.rho.push_back(perm);
        std::vector<int> inv(alg.d);
        for (int s = 0; s < alg.d; ++s) inv[perm[s]] = s;
        alg.rho_inv.push_back(inv);
        alg.lift.push_back(lifts);
    }
    return alg;
}

} // namespace plcover::monodromy
