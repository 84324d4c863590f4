#ifndef PLCOVER_MONODROMY_HPP
#define PLCOVER_MONODROMY_HPP

#include <vector>

#include "plcover/cover.hpp"
#include "plcover/words.hpp"

namespace plcover::monodromy {

/// Sheet algebra of a postcritically finite cover: the monodromy permutations
/// of the cut-path letters plus, for each letter and sheet, the crossing word
/// of the lifted letter loop read in the domain chart. Free homotopy classes
/// of preimage components of any curve class follow by Schreier rewriting,
/// with no geometric realization of the curve.
struct DeckAlgebra {
    int m = 0; // marks
    int d = 0; // degree
    std::vector<std::vector<int>> rho;               // [letter-1][sheet] -> sheet
    std::vector<std::vector<int>> rho_inv;           // inverse permutations
    std::vector<std::vector<words::FreeWord>> lift;  // [letter-1][sheet] -> word

    /// Monodromy permutation of an arbitrary word.
    std::vector<int> permutation(const words::FreeWord& w) const;

    struct Component {
        words::FreeWord cls; // canonical unoriented class in the marked sphere
        int degree = 0;      // covering degree over the input curve
    };
    /// Components of the preimage of the (free homotopy class of the) given
    /// simple closed curve, with covering degrees. Sum of degrees = d.
    std::vector<Component> preimage_components(const words::FreeWord& curve) const;
};

DeckAlgebra build_deck_algebra(const cover::PLMap& f);

} // namespace plcover::monodromy

#endif
