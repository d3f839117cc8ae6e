#ifndef MIDLEVELS_LEXICAL_HPP
#define MIDLEVELS_LEXICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "midlevels/words.hpp"

namespace midlevels {

// --- Edge colors -----------------------------------------------------------

// Grid-path color of the edge flipping b_0 of a weight-k word with b_0 = 0:
// walk b_1..b_2k through the (k+1)x(k+1) grid (0 = right, 1 = up) and count
// horizontal arcs strictly above the diagonal.
int lexical_color(std::uint64_t w, int n);

// Set-cardinality form: color of flipping position x (a 0-bit), computed as
// |{ y zero position != x : |[y,x) ∩ S| < |[y,x) ∩ S^c| }| with S the support.
int lexical_color_formula(std::uint64_t w, int n, int x);

// Color of the edge w -> w|1<<x from the lower endpoint (rotates x to 0).
int edge_color(std::uint64_t w, int n, int x);

// Color of the same edge computed from the upper endpoint u = w|1<<x:
// rotate the flipped position to n-1, complement-reverse, run the procedure.
int edge_color_upper(std::uint64_t u, int n, int x);

// --- Delta notation and germ-level adjacency --------------------------------

// Subscript string of a weight-k word: position i gets its color if b_i = 0,
// an asterisk otherwise.
std::vector<int> delta_symbols(std::uint64_t w, int n);

// The unique rotation of delta_symbols(w) with the code prefix discipline,
// i.e. F(alpha) for the vertex's germ. Display form "<02*1*>".
TreeCode delta_notation(std::uint64_t w, int n);
std::string delta_display(std::uint64_t w, int n);

// Germ of the dihedral vertex containing the weight-k class of w.
KGerm germ_of_word(std::uint64_t w, int n);

// Neighbor along color c in the dihedral quotient, germ to germ (no graph
// is built: rotate theta(alpha) to the color-c zero, flip, fold back).
KGerm neighbor_germ(const KGerm& alpha, int c);

// --- Colored adjacency tables -----------------------------------------------

struct CatTable {
    int k = 0;
    std::vector<KGerm> germs;                  // natural enumeration
    std::vector<std::vector<KGerm>> neighbors; // row m: alpha^k, ..., alpha^0
};

CatTable cat_table(int k, int jobs = 0);       // jobs = 0: library default
CatTable cat_table_serial(int k);              // reference implementation

// --- Integer sequences off the tables -----------------------------------------

// S0: ranks of the color-k neighbors, read across increasing k.
std::vector<std::uint64_t> s0_sequence(std::size_t count);
// S1: concatenated blocks [C_{k-1}, C_k) of the color-(k-1) neighbor ranks.
std::vector<std::uint64_t> s1_sequence(std::size_t count);

// --- Direct neighbor computation (no delta notation) ---------------------------

// alpha^p computed by ascent/reverse-complement arithmetic. The procedure is
// fully determined for p = k (and p = 0 via reflection); for 0 < p < k the
// prefix bookkeeping is only partly determined, so the result carries an
// `exact` flag: when false, `value` falls back to neighbor_germ and `note`
// names the first step that was ambiguous.
struct DirectNeighbor {
    KGerm value;
    bool exact = true;
    std::string note;
};

DirectNeighbor neighbor_direct(const KGerm& alpha, int p);

} // namespace midlevels

#endif
