// Verification suites shared by the command line tool and the acceptance
// runner: each suite bundles the property checks of one part of the
// calculus and reports per-check pass/fail lines.

#pragma once

#include <string>
#include <vector>

#include "bdiag/complex.hpp"

namespace bdiag {

struct SuiteResult {
    std::string name;
    std::vector<std::pair<std::string, bool>> checks;
    double seconds = 0;

    bool pass() const {
        for (const auto& [what, ok] : checks)
            if (!ok)
                return false;
        return true;
    }
};

// d o d = 0 for every variant and both parities, i <= i_max.  Generalized
// variants are enumerated through j = 2i (+1 below the top complexity).
SuiteResult suite_complex(int i_max, int threads);

// Bialgebra axioms, supercocommutativity, differential compatibility,
// antipode inversion, and the primitive projection, on the three
// differential Hopf algebras, i <= i_max.
SuiteResult suite_hopf(int i_max);

// The insertion homotopies for the plain complexes (both parities) and
// for the starred even complex (bar and full), pairs with i1+i2 <= level.
SuiteResult suite_homotopy(int level);

// Brace identity, product/bracket homotopies, unit relations, the sign
// certificates against the generalized complexes, and homology agreement.
SuiteResult suite_operad(int arity_max);

// Homology isomorphisms: the neighbor-quotient projection, the inclusions
// into the generalized complexes, and the kernel ideals over the rationals.
SuiteResult suite_quasi_iso(int i_max);

// Chord-diagram bialgebras: quotient dimensions, primitive dimensions, and
// circular invariance.
SuiteResult suite_chord(int i_max, bool extended);

int default_thread_count();

}  // namespace bdiag
