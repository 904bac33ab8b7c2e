// Explicit tilings and classification predicates: block fillers, the
// (3n)x(3n+1) odd-n tiling, the mixed 6x10 fixture, rectangle tileability
// predicates, and the verification sweeps behind the `verify` CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/pattern.hpp"
#include "ribbon/solver.hpp"

namespace ribbon {

// V@(x,y) -> {T1@(x,y), T2@(x,y+1)}; H@(x,y) -> {T3@(x,y), T4@(x+1,y)};
// S@(x,y) -> {T5@(x,y)}. Exact cover of the block.
std::vector<Placement> fill_block(const Block& b);

// Inflates a bar tiling of the (a/2) x (b/2) grid (by (n/2)-bars and
// optional 1x1 tiles) into a pattern tiling of the a x b rectangle.
Tiling pattern_tiling(int a, int b, int n, const Tiling& half_layout);

// The (3n) x (3n+1) rectangle tiling for odd n >= 3: six block regions
// plus two glue L tiles. Throws for even n (no such tiling exists).
Tiling odd_rect_tiling(int n);

// The 6 x 10 rectangle tiled by T4-ominoes and T6-ominoes together, with
// two pattern 4x4 squares and a 28-cell ring of six L tiles that breaks
// the rectangular pattern.
Tiling mixed_6x10_tiling();

// a x b rectangle tileable by Tn (n even >= 4):
// both sides even and n divides one of them. Odd n is unsupported
// (no classification): invalid-argument.
bool rect_tileable_Tn(int n, int a, int b);

// a x b rectangle tileable by Tn+ (any even n): both sides even.
bool rect_tileable_Tn_plus(int a, int b);

// a x b rectangle tileable by 1xk + kx1 bars: k divides a side.
bool bar_tileable(int k, int a, int b);

struct TheoremVerdict {
    std::string claim;     // e.g. "thm6"
    std::string instance;  // e.g. "n=4,6x8"
    bool predicted = false;
    bool observed = false;
    bool agree() const { return predicted == observed; }
};

// Sweeps: each returns one verdict per checked instance; a disagreement
// anywhere is a failed verification.
// Rectangle classification + rigidity for Tn.
std::vector<TheoremVerdict> verify_thm6(int n, int max_side, int max_area = 128,
                                        uint64_t enumerate_cap = 500);
// Tn+ classification + pattern positivity.
std::vector<TheoremVerdict> verify_cor3(int max_side, uint64_t enumerate_cap = 500);
// Odd k-copy of the n=4 ribbon L is untileable by Tn+.
std::vector<TheoremVerdict> verify_cor4(int k);
// Bar classification.
std::vector<TheoremVerdict> verify_debruijn(int max_k, int max_side);
// Flip connectivity over all Tn-tileable rectangles in the sweep bounds.
std::vector<TheoremVerdict> verify_flip(int n, int max_side = 12, int max_area = 128,
                                        uint64_t tiling_limit = 200);
// The explicit fixtures (odd rectangle, mixed 6x10, two-tiling family,
// k-copy scales, extra-rectangle pattern break).
std::vector<TheoremVerdict> verify_fixtures();

}  // namespace ribbon
