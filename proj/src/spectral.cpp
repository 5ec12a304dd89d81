#include "exspec/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace exspec {

Spectrum spectrum(const SymmetricIntMatrix& m) {
    const int n = m.dim();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
    // Self-adjoint solver: all-real spectrum by construction, returned ascending.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge");
    Spectrum s;
    s.dim = n;
    s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return s;
}

double default_tolerance(const SymmetricIntMatrix& m) {
    const double scale = static_cast<double>(m.max_abs_row_sum());
    return 1e-8 * std::max(1.0, scale);
}

SpectrumVerdict compare_spectra(const Spectrum& s1, const Spectrum& s2, double tol) {
    if (s1.dim != s2.dim)
        return {SpectrumOutcome::different, std::numeric_limits<double>::infinity(), tol, true};
    double gap = 0.0;
    for (std::size_t k = 0; k < s1.values.size(); ++k)
        gap = std::max(gap, std::abs(s1.values[k] - s2.values[k]));
    return {gap > tol ? SpectrumOutcome::different : SpectrumOutcome::equal, gap, tol, false};
}

std::string format_spectrum_grouped(const Spectrum& s, double tol) {
    std::string out = "{";
    const auto& v = s.values;
    // Walk descending, chaining values whose adjacent gap is within tol.
    std::size_t i = v.size();
    bool first = true;
    while (i > 0) {
        double sum = v[i - 1];
        std::size_t count = 1;
        while (i > 1 && std::abs(v[i - 1] - v[i - 2]) <= tol) {
            --i;
            sum += v[i - 1];
            ++count;
        }
        --i;
        const double mean = sum / static_cast<double>(count);
        char buf[64];
        const double rounded = std::round(mean);
        if (std::abs(mean - rounded) <= std::max(tol, 1e-9))
            std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(rounded));
        else
            std::snprintf(buf, sizeof buf, "%.6g", mean);
        if (!first) out += ", ";
        first = false;
        out += buf;
        out += '^';
        out += std::to_string(count);
    }
    out += '}';
    return out;
}

}  // namespace exspec
