#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace symtoep {

// Canonical label of the anti-symmetric basis vector
//   e_hat(a,b) = (z1^a z2^b - z1^b z2^a) / sqrt(2),   a > b.
// The swapped orientation is never stored: e_hat(b,a) = -e_hat(a,b).
struct AntiIndex {
    int a = 1;
    int b = 0;

    bool hardy() const { return b >= 0; }
    bool co_hardy() const { return b <= -1; }

    friend bool operator==(const AntiIndex&, const AntiIndex&) = default;
};

// Canonical enumeration order: lexicographic by (b, a).
inline bool lex_less(const AntiIndex& x, const AntiIndex& y) {
    return x.b != y.b ? x.b < y.b : x.a < y.a;
}

// Result of multiplying e_hat(a,b) by the formal monomial z1^dm z2^dn:
// the relabeled canonical index together with the orientation sign.
struct ShiftedIndex {
    AntiIndex index;
    int sign = 1;  // +1 or -1
};

// Canonical form of the label (a+dm, b+dn); empty when the label collapses
// (equal exponents give the zero vector).
std::optional<ShiftedIndex> shift(const AntiIndex& idx, int dm, int dn);

// Rectangle in (b,a)-space: all canonical indices with
// b_min <= b <= b_max and b < a <= a_max.
struct IndexWindow {
    int b_min = 0;
    int b_max = 0;
    int a_max = 1;

    static IndexWindow hardy(int D);     // b in [0, D-1], a <= D
    static IndexWindow full(int D);      // b in [-D, D-1], a <= D
    static IndexWindow co_hardy(int D);  // b in [-D, -1], a <= D

    bool well_formed() const { return b_min <= b_max && b_max < a_max; }
    bool contains(const AntiIndex& idx) const;
    std::size_t size() const;

    // Position in the canonical (b,a)-lexicographic enumeration.
    std::size_t position(const AntiIndex& idx) const;  // throws if not contained
    AntiIndex index_at(std::size_t pos) const;         // throws if out of range

    friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

std::vector<AntiIndex> enumerate(const IndexWindow& window);

// Shrinks every boundary by margin. For any operator moving indices by at
// most `margin` in each coordinate, matrix products formed on `window` agree
// exactly with the infinite operator on entries indexed by the result.
IndexWindow safe_subwindow(const IndexWindow& window, int margin);

// Like safe_subwindow, but keeps boundaries that belong to the infinite
// lattice itself rather than to the truncation: b_min = 0 (Hardy-type
// windows: no canonical index has b < 0 in the Hardy lattice) and
// b_max = -1 (co-Hardy-type: the lattice stops at b = -1). Certifiers use
// this so identities supported on those boundary rows stay visible.
IndexWindow exact_subwindow(const IndexWindow& window, int margin);

}  // namespace symtoep
