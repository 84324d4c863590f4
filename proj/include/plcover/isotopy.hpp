#ifndef PLCOVER_ISOTOPY_HPP
#define PLCOVER_ISOTOPY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "plcover/chart.hpp"
#include "plcover/cover.hpp"
#include "plcover/words.hpp"

namespace plcover::isotopy {

using chart::MarkedChart;
using chart::Workspace;
using mesh::VId;

enum class CurveClass { Inessential, Peripheral, EssentialNonperipheral };

/// Classification from the puncture counts of the two complementary regions.
CurveClass classify(const Workspace& ws, int curve);

/// Replace the curve by its push-off so it meets every other registered curve
/// transversally (crossings at shared vertices with alternating strands).
void make_transverse(Workspace& ws, int curve);

/// Crossing vertices of two transverse curves.
std::vector<VId> crossings(const Workspace& ws, int a, int b);

/// Iterated bigon removal; afterwards the two curves realize the geometric
/// intersection number of their classes. Returns that number.
int minimal_position(Workspace& ws, int a, int b);

/// Free homotopy in the marked sphere: transversality, bigon removal, then
/// the intersection and annulus tests.
bool are_homotopic(const Workspace& ws, int a, int b);

/// Left-handed (sign=+1) or right-handed (sign=-1) Dehn twist about the given
/// curve, applied to every other registered curve by an annulus shear; the
/// twisting curve and the cut path stay put.
void twist_about(Workspace& ws, int curve, int sign);

/// Generator family for PMod of the marked sphere: one curve around each pair
/// {i,j} inside {1..m-1}. Throws for fewer than 4 marks.
std::vector<std::pair<int, int>> generator_pairs(int num_marks);

/// Curves realizing the generator family on a workspace (appended; indices returned).
std::vector<int> realize_generators(Workspace& ws);

struct TwistLetter {
    int generator = 0; // index into the generator pair list
    int sign = 1;
};
using TwistWord = std::vector<TwistLetter>;

/// Remove adjacent cancelling letters.
TwistWord reduce_twist_word(const TwistWord& w);

/// Image of the registered curve system under the twist word (acting in word
/// order: the first letter acts first). Generator curves are re-seeded on the
/// evolving workspace for each letter.
void twist_apply(Workspace& ws, const TwistWord& w);

/// Action of one generator twist on the fundamental group in cut-path
/// letters, extracted from the simplicial shear on the given chart.
words::Substitution twist_generator_action(const MarkedChart& base, std::pair<int, int> pair,
                                           int sign);

enum class IsotopyVerdict { Isotopic, NotIsotopic, NotPure };

/// Ladegaillerie test: h is isotopic to the identity iff its action on a
/// based generating system of loops is a single inner automorphism. The map
/// must fix every mark (NotPure otherwise) and both its charts must carry the
/// same cut path positions.
IsotopyVerdict is_isotopic_to_identity(const cover::PLMap& h);

} // namespace plcover::isotopy

#endif
