#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "exspec/matrix.hpp"

namespace exspec {

using BigInt = boost::multiprecision::cpp_int;

// Monic characteristic polynomial det(xI - M) with exact integer
// coefficients, stored in descending powers: coeffs[k] multiplies x^(dim-k),
// coeffs[0] == 1, coeffs[1] == -trace.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;  // e.g. "x^5 - 4*x^3"
    bool operator==(const CharPoly&) const = default;
};

// Exact mode is capped: arbitrary-precision cost grows steeply with dim.
inline constexpr int kMaxExactDim = 512;

// Faddeev-LeVerrier over arbitrary-precision integers (the trace divisions
// are exact for integer matrices). Throws guard_error above kMaxExactDim.
CharPoly char_poly_exact(const SymmetricIntMatrix& m);

// Exact cospectrality certificate: coefficientwise equality of the two
// characteristic polynomials. No tolerance involved.
bool spectra_equal_exact(const SymmetricIntMatrix& m1, const SymmetricIntMatrix& m2);

}  // namespace exspec
