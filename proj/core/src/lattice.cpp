#include "symtoep/lattice.hpp"

#include <stdexcept>

namespace symtoep {

std::optional<ShiftedIndex> shift(const AntiIndex& idx, int dm, int dn) {
    const int na = idx.a + dm;
    const int nb = idx.b + dn;
    if (na == nb) return std::nullopt;  // e_hat(t,t) = 0
    if (na > nb) return ShiftedIndex{AntiIndex{na, nb}, +1};
    return ShiftedIndex{AntiIndex{nb, na}, -1};
}

IndexWindow IndexWindow::hardy(int D) { return IndexWindow{0, D - 1, D}; }
IndexWindow IndexWindow::full(int D) { return IndexWindow{-D, D - 1, D}; }
IndexWindow IndexWindow::co_hardy(int D) { return IndexWindow{-D, -1, D}; }

bool IndexWindow::contains(const AntiIndex& idx) const {
    return idx.b >= b_min && idx.b <= b_max && idx.a > idx.b && idx.a <= a_max;
}

std::size_t IndexWindow::size() const {
    if (!well_formed()) return 0;
    // row b holds a_max - b indices (a runs over b+1 .. a_max)
    const long long rows = static_cast<long long>(b_max) - b_min + 1;
    const long long sum_b = (static_cast<long long>(b_min) + b_max) * rows / 2;
    return static_cast<std::size_t>(rows * a_max - sum_b);
}

std::size_t IndexWindow::position(const AntiIndex& idx) const {
    if (!contains(idx))
        throw std::invalid_argument("index outside window");
    const long long k = static_cast<long long>(idx.b) - b_min;  // full rows before b
    const long long before =
        k * a_max - (static_cast<long long>(b_min) + idx.b - 1) * k / 2;
    return static_cast<std::size_t>(before + idx.a - (idx.b + 1));
}

AntiIndex IndexWindow::index_at(std::size_t pos) const {
    std::size_t left = pos;
    for (int b = b_min; b <= b_max; ++b) {
        const std::size_t row = static_cast<std::size_t>(a_max - b);
        if (left < row) return AntiIndex{b + 1 + static_cast<int>(left), b};
        left -= row;
    }
    throw std::out_of_range("position outside window");
}

std::vector<AntiIndex> enumerate(const IndexWindow& window) {
    if (!window.well_formed())
        throw std::invalid_argument("empty or inverted window");
    std::vector<AntiIndex> out;
    out.reserve(window.size());
    for (int b = window.b_min; b <= window.b_max; ++b)
        for (int a = b + 1; a <= window.a_max; ++a)
            out.push_back(AntiIndex{a, b});
    return out;
}

IndexWindow safe_subwindow(const IndexWindow& window, int margin) {
    if (margin < 0) throw std::invalid_argument("negative margin");
    IndexWindow shrunk{window.b_min + margin, window.b_max - margin,
                       window.a_max - margin};
    if (!shrunk.well_formed()) throw std::invalid_argument("empty safe window");
    return shrunk;
}

IndexWindow exact_subwindow(const IndexWindow& window, int margin) {
    if (margin < 0) throw std::invalid_argument("negative margin");
    IndexWindow shrunk{window.b_min == 0 ? 0 : window.b_min + margin,
                       window.b_max == -1 ? -1 : window.b_max - margin,
                       window.a_max - margin};
    if (!shrunk.well_formed()) throw std::invalid_argument("empty safe window");
    return shrunk;
}

}  // namespace symtoep
