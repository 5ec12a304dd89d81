#include "exspec/char_poly.hpp"

#include <cassert>

#include "exspec/errors.hpp"

namespace exspec {

std::string CharPoly::to_string() const {
    const int n = degree();
    std::string out;
    for (int k = 0; k <= n; ++k) {
        const BigInt& c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const int power = n - k;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        const BigInt mag = abs(c);
        const bool unit = (mag == 1) && power > 0;
        if (!unit) out += mag.str();
        if (power > 0) {
            if (!unit) out += "*";
            out += "x";
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

CharPoly char_poly_exact(const SymmetricIntMatrix& m) {
    const int n = m.dim();
    if (n > kMaxExactDim)
        throw guard_error("exact characteristic polynomial is capped at dimension " +
                          std::to_string(kMaxExactDim) + " (got " + std::to_string(n) + ")");

    std::vector<BigInt> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                m(i, j);

    // Faddeev-LeVerrier: M_1 = I; c_k = -tr(A M_k)/k; M_{k+1} = A M_k + c_k I.
    // Every M_k is a polynomial in A, hence symmetric; the products only need
    // the upper triangle.
    std::vector<BigInt> mk(a.size()), am(a.size());
    for (int i = 0; i < n; ++i)
        mk[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;

    CharPoly poly;
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    poly.coeffs[0] = 1;

    auto at = [n](std::vector<BigInt>& v, int i, int j) -> BigInt& {
        return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                BigInt acc = 0;
                for (int t = 0; t < n; ++t) acc += at(a, i, t) * at(mk, t, j);
                at(am, i, j) = acc;
                if (j != i) at(am, j, i) = acc;
            }
        }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += at(am, i, i);
        assert(tr % k == 0);
        const BigInt ck = -tr / k;
        poly.coeffs[static_cast<std::size_t>(k)] = ck;
        if (k < n) {
            mk.swap(am);
            for (int i = 0; i < n; ++i) at(mk, i, i) += ck;
        }
    }
    return poly;
}

bool spectra_equal_exact(const SymmetricIntMatrix& m1, const SymmetricIntMatrix& m2) {
    if (m1.dim() != m2.dim()) return false;
    return char_poly_exact(m1) == char_poly_exact(m2);
}

}  // namespace exspec
