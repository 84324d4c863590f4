#ifndef PLCOVER_CHART_HPP
#define PLCOVER_CHART_HPP

#include <map>
#include <vector>

#include "plcover/mesh.hpp"
#include "plcover/words.hpp"

namespace plcover::chart {

using mesh::VId;

/// A triangulated marked sphere together with a cut system: an embedded path
/// in the 1-skeleton visiting the marks p1..pm in order. Cutting the sphere
/// along the path leaves a disk, so free homotopy classes of loops avoiding
/// the marks are exactly cyclic words in the crossing letters g1..g_{m-1}
/// (letter i = one transverse crossing of the path segment between p_i and
/// p_{i+1}).
struct MarkedChart {
    mesh::Triangulation tri;
    std::vector<VId> marks;    // p1..pm in order; all marked in tri
    std::vector<VId> cut_path; // embedded, cut_path.front()==marks.front(), visits marks in order

    std::map<VId, int> path_pos; // derived
    std::vector<int> mark_pos;   // derived

    void reindex();
    int num_marks() const { return static_cast<int>(marks.size()); }
    bool on_path(VId v) const { return path_pos.count(v) > 0; }
    /// 1-based segment index of an interior path position; 0 at marks.
    int segment_of_pos(int pos) const;
};

/// Crossing word of a walk (vertex sequence; consecutive vertices adjacent).
/// Closed walks are read cyclically. Walks must not pass through marks and,
/// for closed walks, must not lie entirely on the cut path.
words::FreeWord word_of_walk(const MarkedChart& ch, const std::vector<VId>& walk, bool closed);

/// Which side of the cut path a link-neighbor x of path vertex r lies on.
enum class Side { Left, Right };
Side side_at(const MarkedChart& ch, VId r, VId x);

/// Chart plus carried objects. Refinement and compaction keep the cut path
/// and all registered curves in sync.
struct Workspace {
    MarkedChart ch;
    std::vector<std::vector<VId>> curves; // embedded cycles avoiding marks

    void barycentric();
    void compact();
    words::FreeWord curve_word(int idx) const;
};

/// Left push-off of a closed walk: refines twice (carrying everything) and
/// appends the pushed embedded cycle; returns its index in ws.curves.
int push_off(Workspace& ws, std::vector<VId> walk);

/// Canonical seed curve around the marks S (1-based mark indices, |S|>=2):
/// the boundary of a regular neighborhood of a tree that follows the cut path
/// and detours around the marks not in S. Returns curve index.
int build_seed(Workspace& ws, const std::vector<int>& S);

/// Bipyramid over an m-cycle with one buffer vertex per cut segment.
MarkedChart model_sphere(int m);

/// Barycentric refinement of a bare chart (no curves).
MarkedChart refine_chart(const MarkedChart& ch, mesh::Subdivision* out_sub = nullptr);

/// Deterministic basepoint off the cut path.
VId default_basepoint(const MarkedChart& ch);

/// Based loop crossing cut segment |letter| exactly once, with sign; a walk
/// from/to the basepoint. Throws if the chart is too coarse (refine first).
std::vector<VId> letter_loop(const MarkedChart& ch, int letter, VId basepoint);

/// Based lasso around the k-th mark (1-based): tail + link cycle + tail back.
std::vector<VId> peripheral_loop(const MarkedChart& ch, int mark_index, VId basepoint);

} // namespace plcover::chart

#endif
