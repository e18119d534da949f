#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qhilb/betti.hpp"
#include "qhilb/castelnuovo.hpp"

namespace qhilb {

// One Hilbert series of a rank-one ideal with small invariants.
struct AppendixRow {
    InvariantPair inv;
    CastelnuovoPoly s;
    std::vector<mpz_class> h;         // coefficients of t^0..t^6
    std::vector<BettiTable> tables;   // every admissible minimal resolution
    long ext1 = 0;                    // dim Ext^1(I,I), shared by all tables
};

// Rows for all (n_e,n_o) in N with n_e, n_o <= 3, ordered by (n_e,n_o) and
// then by Castelnuovo polynomial, longest staircase first.
std::vector<AppendixRow> appendix_regenerate();

// Text form, byte-compatible with data/appendix.golden.
std::string render_appendix(const std::vector<AppendixRow>& rows);

struct AppendixCheck {
    bool ok = false;
    std::string diff;  // "-expected" / "+actual" lines for each mismatch
};
AppendixCheck check_appendix(const std::string& golden_text, const std::string& rendered);

} // namespace qhilb
