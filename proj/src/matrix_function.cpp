#include "sgmean/matrix_function.hpp"

#include "sgmean/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace sgmean {

SpectrumBounds::SpectrumBounds(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo > 0.0) || !(lo <= hi))
        throw std::invalid_argument("SpectrumBounds: need 0 < lo <= hi");
}

SymMatrix apply_fn(const SymMatrix& a, const std::function<double(double)>& fn) {
    EigenDecomp ed = eigh(a);
    for (double& v : ed.values) v = fn(v);
    return ed.reassemble();
}

static SymMatrix power_of_decomp(EigenDecomp ed, double p, const SymMatrix& a) {
    const bool integral = (p == std::floor(p)) && p >= 0.0;
    if (!integral && ed.values.front() <= 0.0)
        throw DomainError("matrix_power: non-positive eigenvalue " +
                              std::to_string(ed.values.front()) + " with exponent " +
                              std::to_string(p) + " (" + matrix_digest(a) + ")",
                          ed.values.front());
    for (double& v : ed.values)
        v = integral ? std::pow(v, p) : std::exp(p * std::log(v));
    return ed.reassemble();
}

SymMatrix matrix_power(const SymMatrix& a, double p) {
    return power_of_decomp(eigh(a), p, a);
}

SymMatrix matrix_sqrt(const SymMatrix& a) {
    EigenDecomp ed = eigh(a);
    if (ed.values.front() <= 0.0)
        throw DomainError("matrix_sqrt: non-positive eigenvalue (" + matrix_digest(a) + ")",
                          ed.values.front());
    for (double& v : ed.values) v = std::sqrt(v);
    return ed.reassemble();
}

SymMatrix matrix_inverse(const SymMatrix& a) {
    EigenDecomp ed = eigh(a);
    if (ed.values.front() <= 0.0)
        throw DomainError("matrix_inverse: non-positive eigenvalue (" + matrix_digest(a) + ")",
                          ed.values.front());
    for (double& v : ed.values) v = 1.0 / v;
    return ed.reassemble();
}

SymMatrix congruence(const SymMatrix& c, const SymMatrix& x, CongruenceMode mode) {
    require_same_dim(c, x);
    const double p = (mode == CongruenceMode::Half) ? 0.5 : -0.5;
    return sandwich(matrix_power(c, p), x);
}

double loewner_margin(const SymMatrix& lhs, const SymMatrix& rhs) {
    require_same_dim(lhs, rhs);
    return min_eigenvalue(rhs - lhs);
}

bool spectrum_within(const SymMatrix& a, const SpectrumBounds& bounds, double tol) {
    const EigenDecomp ed = eigh(a);
    return bounds.lo - tol <= ed.values.front() && ed.values.back() <= bounds.hi + tol;
}

} // namespace sgmean
