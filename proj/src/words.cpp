#include "plcover/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plcover::words {

FreeWord reduce(FreeWord w) {
    FreeWord out;
    for (int l : w) {
        if (l == 0) throw std::invalid_argument("zero letter");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FreeWord cyclic_reduce(FreeWord w) {
    w = reduce(std::move(w));
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

FreeWord inverse(const FreeWord& w) {
    FreeWord out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce(std::move(out));
}

namespace {
// letter order: 1 < -1 < 2 < -2 < ...
int letter_key(int l) { return 2 * std::abs(l) + (l < 0 ? 1 : 0); }

bool word_less(const FreeWord& a, const FreeWord& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (letter_key(a[i]) != letter_key(b[i])) return letter_key(a[i]) < letter_key(b[i]);
    }
    return a.size() < b.size();
}

FreeWord least_rotation(const FreeWord& w) {
    if (w.empty()) return w;
    FreeWord best = w;
    FreeWord rot = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (word_less(rot, best)) best = rot;
    }
    return best;
}
} // namespace

FreeWord canonical_oriented(const FreeWord& w) { return least_rotation(cyclic_reduce(w)); }

FreeWord canonical_unoriented(const FreeWord& w) {
    FreeWord a = least_rotation(cyclic_reduce(w));
    FreeWord b = least_rotation(cyclic_reduce(inverse(w)));
    return word_less(a, b) ? a : b;
}

std::string word_str(const FreeWord& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i];
    }
    return os.str();
}

FreeWord parse_word(const std::string& s) {
    FreeWord w;
    if (s == "e") return w;
    std::istringstream is(s);
    int l;
    while (is >> l) {
        if (l == 0) throw std::invalid_argument("zero letter in word");
        w.push_back(l);
    }
    return w;
}

CurveClassKind classify_word(const FreeWord& w, int num_marks) {
    if (peripheral_mark(w, num_marks) > 0) return CurveClassKind::Peripheral;
    return cyclic_reduce(w).empty() ? CurveClassKind::Inessential
                                    : CurveClassKind::EssentialNonperipheral;
}

int peripheral_mark(const FreeWord& w, int num_marks) {
    FreeWord c = canonical_unoriented(w);
    if (c.empty()) return 0;
    // loop around mark 1: (g1); around mark m: (g_{m-1});
    // around mark i (1<i<m): (g_i g_{i-1}^-1) up to the canonical form.
    if (num_marks >= 2) {
        if (c == canonical_unoriented({1})) return 1;
        if (c == canonical_unoriented({num_marks - 1})) return num_marks;
    }
    for (int i = 2; i < num_marks; ++i)
        if (c == canonical_unoriented({i, -(i - 1)})) return i;
    return 0;
}

FreeWord Substitution::apply(const FreeWord& w) const {
    FreeWord out;
    for (int l : w) {
        size_t idx = static_cast<size_t>(std::abs(l)) - 1;
        if (idx >= images.size()) throw std::invalid_argument("letter outside substitution");
        if (l > 0)
            out.insert(out.end(), images[idx].begin(), images[idx].end());
        else {
            FreeWord inv = inverse(images[idx]);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return reduce(std::move(out));
}

} // namespace plcover::words
