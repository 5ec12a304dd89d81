#pragma once

#include <string>
#include <vector>

#include "exspec/matrix.hpp"

namespace exspec {

// Eigenvalues of a symmetric matrix, sorted ascending, with multiplicity.
struct Spectrum {
    std::vector<double> values;
    int dim = 0;
};

Spectrum spectrum(const SymmetricIntMatrix& m);

// Default comparison tolerance: 1e-8 * max(1, max absolute row sum).
double default_tolerance(const SymmetricIntMatrix& m);

enum class SpectrumOutcome { equal, different };

struct SpectrumVerdict {
    SpectrumOutcome outcome;
    double max_gap;        // +inf when dimensions differ
    double tolerance_used;
    bool dim_mismatch = false;
};

// Positionwise gap of the two sorted spectra; Different iff max_gap > tol.
// A dimension mismatch is an immediate Different with max_gap = +inf.
SpectrumVerdict compare_spectra(const Spectrum& s1, const Spectrum& s2, double tol);

// Multiplicity-grouped rendering, descending: "{8^1, 2^11, -2^9, -4^3}".
// Values within tol of each other collapse into one group; group values
// within tol of an integer print as integers.
std::string format_spectrum_grouped(const Spectrum& s, double tol);

}  // namespace exspec
