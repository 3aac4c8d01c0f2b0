#pragma once

#include <string>
#include <vector>

#include "ncopuc/moments.hpp"
#include "ncopuc/verblunsky.hpp"

namespace ncopuc {

// One row of the Szego table at sigma(n). The first four items agree for
// every n; so do items v through ix.
struct SzegoRow {
    int n = 0;
    Real item_i = 0;     // ||Phi_{sigma(n)}||^2
    Real item_ii = 0;    // a_{sigma(n),sigma(n)}^{-2}
    Real item_iii = 0;   // prod_{j <= n} (1 - |gamma_{sigma(j)}|^2)
    Real item_iv = 0;    // D_{sigma(n)} / D_{sigma(n)-1}
    Real item_v = 0;     // prod_{sigma <= sigma(n)} (1 - |gamma_sigma|^2)
    Real item_vi = 0;    // Lambda_n(0)
    Real item_vii = 0;   // |phi^#_{sigma(n)}(0)|^{-2}
    Real item_viii = 0;  // (sum_{sigma <= sigma(n)} |phi_sigma(0)|^2)^{-1}
    Real item_ix = 0;    // mu(Q_n^* Q_n) for the minimizer at 0
    Real res_first = 0;
    Real res_second = 0;
    Real res_cross = 0;  // |item_v - item_iii * prod over words off the sigma line|
};

struct SzegoTable {
    std::vector<SzegoRow> rows;
    bool truncated = false;  // the measure turned trivial before sigma(N)
    std::string note;
};

/// Rows n = 0..N. Stops early with `truncated` set when the kernel block
/// fails to be positive definite.
SzegoTable szego_table(const MomentFamily& m, int N, Real pivot_tol = kDefaultPivotTolerance);

struct SzegoConditionReport {
    std::vector<Word> horizons;
    std::vector<Real> square_sums;
    std::vector<Real> products;
    std::string trend;
};

/// Partial sums of |gamma|^2 and products of (1 - |gamma|^2) along the given
/// horizons. The trend is descriptive only.
SzegoConditionReport szego_condition(const VerblunskyFamily& g, const std::vector<Word>& horizons);

}  // namespace ncopuc
