#ifndef PLCOVER_WORDS_HPP
#define PLCOVER_WORDS_HPP

#include <string>
#include <vector>

namespace plcover::words {

/// Word in a free group. Letter k>0 is the k-th generator, -k its inverse.
using FreeWord = std::vector<int>;

FreeWord reduce(FreeWord w);
FreeWord cyclic_reduce(FreeWord w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);

/// Canonical representative of the conjugacy class of an UNORIENTED loop:
/// lexicographically least rotation among the cyclic reduction of w and of
/// its inverse. Equal canonical forms <=> freely homotopic unoriented curves.
FreeWord canonical_unoriented(const FreeWord& w);

/// Canonical representative of the conjugacy class of an oriented loop.
FreeWord canonical_oriented(const FreeWord& w);

std::string word_str(const FreeWord& w);
FreeWord parse_word(const std::string& s); // inverse of word_str

enum class CurveClassKind { Inessential, Peripheral, EssentialNonperipheral };

/// Classification of the free homotopy class of a simple closed curve on the
/// sphere with m marks, in cut-path coordinates: the peripheral classes are
/// the loops around the individual marks.
CurveClassKind classify_word(const FreeWord& w, int num_marks);

/// Which mark the peripheral class surrounds (1-based); 0 when not peripheral.
int peripheral_mark(const FreeWord& w, int num_marks);

/// Free-group endomorphism given by generator images (index k-1 holds the
/// image of generator k).
struct Substitution {
    std::vector<FreeWord> images;
    FreeWord apply(const FreeWord& w) const;
};

} // namespace plcover::words

#endif
