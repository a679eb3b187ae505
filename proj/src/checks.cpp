#include "sgmean/checks.hpp"

#include "sgmean/instance_gen.hpp"
#include "sgmean/matrix_function.hpp"
#include "sgmean/means.hpp"
#include "sgmean/positive_map.hpp"
#include "sgmean/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sgmean {

std::vector<CheckId> all_checks() {
    return {
        CheckId::MeansOrder,         CheckId::AndoMap,
        CheckId::AndoVector,         CheckId::ReverseAndoMap,
        CheckId::TwoParamReverse,    CheckId::ChoiDavis,
        CheckId::PowerReverse,       CheckId::KantorovichInverse,
        CheckId::SquareOrder,        CheckId::PowerArith,
        CheckId::McCarthySuper,      CheckId::McCarthyUnit,
        CheckId::McCarthyNegative,   CheckId::GeoPowerMap,
        CheckId::SpectralInnerUpper, CheckId::SpectralEnvelope,
        CheckId::SpectralRefined,    CheckId::SpectralLeGeometric,
        CheckId::InnerLeSpectral,    CheckId::GeometricLeSpectral,
        CheckId::AndoSpectral,       CheckId::ReverseAndoSpectral,
        CheckId::KantorovichSpectral, CheckId::ArithLeSpectral,
        CheckId::ArithLeGeometricScalar, CheckId::AndoHiaiSpectral,
        CheckId::KappaIncomparable,  CheckId::FractionSplit,
        CheckId::LVsK,               CheckId::KSquareOrder,
        CheckId::KMonotone,          CheckId::KRatioOrder,
        CheckId::EtaLeGamma,         CheckId::HolderStep,
        CheckId::LExceedsMinK,
    };
}

bool is_operator_check(CheckId id) {
    switch (id) {
    case CheckId::KappaIncomparable:
    case CheckId::FractionSplit:
    case CheckId::LVsK:
    case CheckId::KSquareOrder:
    case CheckId::KMonotone:
    case CheckId::KRatioOrder:
    case CheckId::EtaLeGamma:
    case CheckId::HolderStep:
    case CheckId::LExceedsMinK: return false;
    default: return true;
    }
}

bool is_advisory(CheckId id) {
    return id == CheckId::PowerArith || id == CheckId::KantorovichSpectral;
}

std::string_view check_name(CheckId id) {
    switch (id) {
    case CheckId::MeansOrder: return "means_order";
    case CheckId::AndoMap: return "ando_map";
    case CheckId::AndoVector: return "ando_vector";
    case CheckId::ReverseAndoMap: return "reverse_ando_map";
    case CheckId::TwoParamReverse: return "two_param_reverse";
    case CheckId::ChoiDavis: return "choi_davis";
    case CheckId::PowerReverse: return "power_reverse";
    case CheckId::KantorovichInverse: return "kantorovich_inverse";
    case CheckId::SquareOrder: return "square_order";
    case CheckId::PowerArith: return "power_arith";
    case CheckId::McCarthySuper: return "mccarthy_super";
    case CheckId::McCarthyUnit: return "mccarthy_unit";
    case CheckId::McCarthyNegative: return "mccarthy_negative";
    case CheckId::GeoPowerMap: return "geo_power_map";
    case CheckId::SpectralInnerUpper: return "spectral_inner_upper";
    case CheckId::SpectralEnvelope: return "spectral_envelope";
    case CheckId::SpectralRefined: return "spectral_refined";
    case CheckId::SpectralLeGeometric: return "spectral_le_geometric";
    case CheckId::InnerLeSpectral: return "inner_le_spectral";
    case CheckId::GeometricLeSpectral: return "geometric_le_spectral";
    case CheckId::AndoSpectral: return "ando_spectral";
    case CheckId::ReverseAndoSpectral: return "reverse_ando_spectral";
    case CheckId::KantorovichSpectral: return "kantorovich_spectral";
    case CheckId::ArithLeSpectral: return "arith_le_spectral";
    case CheckId::ArithLeGeometricScalar: return "arith_le_geometric_scalar";
    case CheckId::AndoHiaiSpectral: return "ando_hiai_spectral";
    case CheckId::KappaIncomparable: return "kappa_incomparable";
    case CheckId::FractionSplit: return "fraction_split";
    case CheckId::LVsK: return "l_vs_k";
    case CheckId::KSquareOrder: return "k_square_order";
    case CheckId::KMonotone: return "k_monotone";
    case CheckId::KRatioOrder: return "k_ratio_order";
    case CheckId::EtaLeGamma: return "eta_le_gamma";
    case CheckId::HolderStep: return "holder_step";
    case CheckId::LExceedsMinK: return "l_exceeds_min_k";
    }
    throw std::invalid_argument("unknown check id");
}

std::string_view check_description(CheckId id) {
    switch (id) {
    case CheckId::MeansOrder: return "harmonic <= geometric <= arithmetic mean";
    case CheckId::AndoMap: return "phi(A #_t B) <= phi(A) #_t phi(B)";
    case CheckId::AndoVector: return "<A #_t B x,x> <= <Ax,x>^(1-t) <Bx,x>^t";
    case CheckId::ReverseAndoMap:
        return "phi(A) #_t phi(B) <= phi(A #_t B)/K(m,M,t), bounds from m A <= B <= M A";
    case CheckId::TwoParamReverse:
        return "phi(A) # phi(B) <= c(m1,M1,m2,M2) phi(A # B) with separate spectra";
    case CheckId::ChoiDavis: return "phi(A)^-1 <= phi(A^-1) and phi(A^t) <= phi(A)^t";
    case CheckId::PowerReverse: return "phi(A)^t <= phi(A^t)/K(m,M,t)";
    case CheckId::KantorovichInverse: return "phi(A^-1) <= (M+m)^2/(4Mm) phi(A)^-1";
    case CheckId::SquareOrder: return "0 < A <= B implies A^2 <= (M+m)^2/(4Mm) B^2";
    case CheckId::PowerArith:
        return "(A nabla_t B)^r <= (A^r nabla_t B^r)/K(m,M,t) [stated constant]";
    case CheckId::McCarthySuper: return "<Ax,x>^p <= <A^p x,x> for p >= 1";
    case CheckId::McCarthyUnit: return "<A^p x,x> <= <Ax,x>^p for p in [0,1]";
    case CheckId::McCarthyNegative: return "<Ax,x>^p <= <A^p x,x> for p <= 0";
    case CheckId::GeoPowerMap: return "phi(A # B)^t <= (phi(A) # phi(B))^t";
    case CheckId::SpectralInnerUpper:
        return "<A natural_t B x,x> <= K2(m,M,t) <Ax,x>^(1-t) <Bx,x>^t";
    case CheckId::SpectralEnvelope:
        return "harmonic/K2 <= A natural_t B <= K2 * arithmetic";
    case CheckId::SpectralRefined:
        return "A natural_t B <= K2 (4 M'm'/(M'+m')^2)^min(t,1-t) A nabla_t B, separated spectra";
    case CheckId::SpectralLeGeometric: return "A natural_t B <= Gamma(m,M,t) A #_t B";
    case CheckId::InnerLeSpectral:
        return "<Ax,x>^(1-t) <Bx,x>^t <= eta(m,M,t) <A natural_t B x,x>";
    case CheckId::GeometricLeSpectral: return "A #_t B <= eta(m,M,t) A natural_t B";
    case CheckId::AndoSpectral:
        return "phi(A natural_t B) <= beta(m,M,t) phi(A) natural_t phi(B)";
    case CheckId::ReverseAndoSpectral:
        return "phi(A) natural_t phi(B) <= c1^t K2 / K^2(m/M,M/m,t) phi(A natural_t B)";
    case CheckId::KantorovichSpectral:
        return "phi(A) natural_t phi(A^-1) <= scalar bound [stated constant]";
    case CheckId::ArithLeSpectral:
        return "A nabla_t B <= (m nabla_l M)/(m #_l M) eta A natural_t B";
    case CheckId::ArithLeGeometricScalar:
        return "A nabla_t B <= (m nabla_l M)/(m #_l M) A #_t B";
    case CheckId::AndoHiaiSpectral:
        return "(A natural_t B)^r <= min{kappa1,kappa2} A^r natural_t B^r";
    case CheckId::KappaIncomparable: return "kappa1 - kappa2 takes both signs";
    case CheckId::FractionSplit:
        return "(x+1)/(x-1) vs (1-t)^2 (x+x^t)/(x-x^t) + t^2 (x^t+1)/(x^t-1)";
    case CheckId::LVsK: return "L(x,t) <= K(x,t) on [0,1], reversed outside";
    case CheckId::KSquareOrder: return "K(x^2,t) <= K^2(x,t) on [0,1], reversed outside";
    case CheckId::KMonotone: return "monotonicity of K(x,t) in x with extremum 1 at x=1";
    case CheckId::KRatioOrder: return "wider M/m ratio lowers K on (0,1), raises it outside";
    case CheckId::EtaLeGamma: return "eta(m,M,t) <= Gamma(m,M,t) for t in [0,1]";
    case CheckId::HolderStep: return "(M+m)^(1+t) <= 2^t (M^(1+t)+m^(1+t))";
    case CheckId::LExceedsMinK: return "reference value of min_t K(x,t) - L(x,t) at x=10, t=0.1";
    }
    throw std::invalid_argument("unknown check id");
}

namespace {

std::string format_params(const TrialParams& p) {
    char head[40];
    std::snprintf(head, sizeof(head), "seed=%016llx;dim=%d",
                  static_cast<unsigned long long>(p.seed), p.dim);
    // Round-trip floats so the digest pins the instance exactly.
    return std::string(head) + ";t=" + format_double(p.t) + ";r=" + format_double(p.r) +
           ";m=" + format_double(p.lo) + ";M=" + format_double(p.lo * p.ratio);
}

double quad_form(const SymMatrix& a, const Matrix& x) {
    double acc = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.dim(); ++j) row += a(i, j) * x(j, 0);
        acc += x(i, 0) * row;
    }
    return acc;
}

double pow_pos(double b, double t) { return std::exp(t * std::log(b)); }

CheckResult scalar_result(CheckId id, double lhs, double rhs, double tol,
                          std::string instance) {
    CheckResult r;
    r.id = id;
    r.margin = rhs - lhs;
    r.scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
    r.pass = r.margin >= -tol * r.scale;
    r.instance = std::move(instance);
    return r;
}

CheckResult operator_result(CheckId id, const SymMatrix& lhs, const SymMatrix& rhs,
                            double tol, std::string instance) {
    CheckResult r;
    r.id = id;
    r.margin = loewner_margin(lhs, rhs);
    r.scale = 1.0 + std::max(lhs.max_abs(), rhs.max_abs());
    r.pass = r.margin >= -tol * r.scale;
    r.instance = std::move(instance);
    return r;
}

/// Keep the result with the smaller relative margin; pass only if both pass.
CheckResult combine(CheckResult a, const CheckResult& b) {
    const bool keep_b = b.margin / b.scale < a.margin / a.scale;
    CheckResult out = keep_b ? b : a;
    out.pass = a.pass && b.pass;
    return out;
}

SpectrumMode mode_for(int dim) {
    return dim == 1 ? SpectrumMode::Interior : SpectrumMode::PinnedEndpoints;
}

/// Everything an operator check might draw, generated up front so that one
/// trial consumes the rng stream identically regardless of which check reads
/// which pieces.
struct OperatorInstance {
    TrialParams p;
    SpectrumBounds bounds;
    SymMatrix a;
    SymMatrix b;
    MapSpec phi;
    Matrix unit; // dim x 1
    ConstantsBundle c;
    std::string digest;
};

OperatorInstance make_instance(const TrialParams& p) {
    Rng rng(p.seed);
    SpectrumBounds bounds(p.lo, p.lo * p.ratio);
    const SpectrumMode mode = mode_for(p.dim);
    SymMatrix a = random_pd(rng, p.dim, bounds, mode);
    SymMatrix b = random_pd(rng, p.dim, bounds, mode);
    MapSpec phi = random_map(rng, p.dim);
    Matrix unit = random_isometry(rng, p.dim, 1);
    ConstantsBundle c = make_bundle(bounds.lo, bounds.hi, Weight(p.t), p.r);
    return OperatorInstance{p, bounds, std::move(a), std::move(b), std::move(phi),
                            std::move(unit), std::move(c), format_params(p)};
}

CheckResult evaluate_operator(CheckId id, const OperatorInstance& in, double tol) {
    const Weight t(in.p.t);
    const double tv = in.p.t;
    const double rv = in.p.r;
    const ConstantsBundle& c = in.c;
    const SymMatrix& a = in.a;
    const SymMatrix& b = in.b;
    const std::string& dg = in.digest;

    switch (id) {
    case CheckId::MeansOrder: {
        const SymMatrix g = geometric_mean(a, b, t);
        return combine(operator_result(id, harmonic_mean(a, b, t), g, tol, dg),
                       operator_result(id, g, arithmetic_mean(a, b, t), tol, dg));
    }
    case CheckId::AndoMap:
        return operator_result(id, apply_map(in.phi, geometric_mean(a, b, t)),
                               geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b), t),
                               tol, dg);
    case CheckId::AndoVector: {
        const double ax = quad_form(a, in.unit);
        const double bx = quad_form(b, in.unit);
        return scalar_result(id, quad_form(geometric_mean(a, b, t), in.unit),
                             pow_pos(ax, 1.0 - tv) * pow_pos(bx, tv), tol, dg);
    }
    case CheckId::ReverseAndoMap: {
        // Exact hypothesis m A <= B <= M A via the spectrum of A^{-1/2} B A^{-1/2}.
        const EigenDecomp rel = eigh(congruence(a, b, CongruenceMode::InvHalf));
        const double k = kantorovich(rel.values.front(), rel.values.back(), tv);
        return operator_result(id,
                               geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b), t),
                               (1.0 / k) * apply_map(in.phi, geometric_mean(a, b, t)), tol,
                               dg);
    }
    case CheckId::TwoParamReverse: {
        Rng extra = Rng(in.p.seed).split(1);
        const double lo2 = in.p.lo * extra.uniform(0.5, 1.5);
        const double hi2 = lo2 * std::exp(extra.uniform(std::log(1.5), std::log(12.0)));
        const SymMatrix b2 =
            random_pd(extra, in.p.dim, SpectrumBounds(lo2, hi2), mode_for(in.p.dim));
        const double cst = (std::sqrt(in.bounds.hi * hi2) + std::sqrt(in.bounds.lo * lo2)) /
                           (2.0 * std::pow(in.bounds.hi * in.bounds.lo * hi2 * lo2, 0.25));
        const Weight half(0.5);
        return operator_result(
            id, geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b2), half),
            cst * apply_map(in.phi, geometric_mean(a, b2, half)), tol, dg);
    }
    case CheckId::ChoiDavis: {
        const SymMatrix pa = apply_map(in.phi, a);
        return combine(
            operator_result(id, matrix_inverse(pa), apply_map(in.phi, matrix_inverse(a)),
                            tol, dg),
            operator_result(id, apply_map(in.phi, matrix_power(a, tv)),
                            matrix_power(pa, tv), tol, dg));
    }
    case CheckId::PowerReverse:
        return operator_result(id, matrix_power(apply_map(in.phi, a), tv),
                               (1.0 / c.k) * apply_map(in.phi, matrix_power(a, tv)), tol,
                               dg);
    case CheckId::KantorovichInverse:
        return operator_result(id, apply_map(in.phi, matrix_inverse(a)),
                               c.c1 * matrix_inverse(apply_map(in.phi, a)), tol, dg);
    case CheckId::SquareOrder: {
        Rng extra = Rng(in.p.seed).split(2);
        const double bump = extra.uniform(0.1, 2.0);
        const SymMatrix d =
            random_pd(extra, in.p.dim, SpectrumBounds(0.05, 0.05 + bump), mode_for(in.p.dim));
        const SymMatrix big = a + d;
        return operator_result(id, matrix_power(a, 2.0), c.c1 * matrix_power(big, 2.0), tol,
                               dg);
    }
    case CheckId::PowerArith:
        // Constant as stated; the wide sweep probes whether K(m,M,r) was meant.
        return operator_result(
            id, matrix_power(arithmetic_mean(a, b, t), rv),
            (1.0 / c.k) * arithmetic_mean(matrix_power(a, rv), matrix_power(b, rv), t), tol,
            dg);
    case CheckId::McCarthySuper: {
        const double p = 1.0 + rv;
        const double ax = quad_form(a, in.unit);
        return scalar_result(id, pow_pos(ax, p), quad_form(matrix_power(a, p), in.unit), tol,
                             dg);
    }
    case CheckId::McCarthyUnit: {
        const double ax = quad_form(a, in.unit);
        return scalar_result(id, quad_form(matrix_power(a, rv), in.unit), pow_pos(ax, rv),
                             tol, dg);
    }
    case CheckId::McCarthyNegative: {
        const double p = -rv;
        const double ax = quad_form(a, in.unit);
        return scalar_result(id, pow_pos(ax, p), quad_form(matrix_power(a, p), in.unit), tol,
                             dg);
    }
    case CheckId::GeoPowerMap: {
        const Weight half(0.5);
        return operator_result(
            id, matrix_power(apply_map(in.phi, geometric_mean(a, b, half)), tv),
            matrix_power(geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b), half),
                         tv),
            tol, dg);
    }
    case CheckId::SpectralInnerUpper: {
        const double ax = quad_form(a, in.unit);
        const double bx = quad_form(b, in.unit);
        return scalar_result(id, quad_form(spectral_geometric_mean(a, b, t), in.unit),
                             c.k2 * pow_pos(ax, 1.0 - tv) * pow_pos(bx, tv), tol, dg);
    }
    case CheckId::SpectralEnvelope: {
        const SymMatrix s = spectral_geometric_mean(a, b, t);
        return combine(
            operator_result(id, (1.0 / c.k2) * harmonic_mean(a, b, t), s, tol, dg),
            operator_result(id, s, c.k2 * arithmetic_mean(a, b, t), tol, dg));
    }
    case CheckId::SpectralRefined: {
        Rng extra = Rng(in.p.seed).split(3);
        const double inner_lo = in.p.lo * extra.uniform(1.05, 1.5);
        const double inner_hi = inner_lo * extra.uniform(1.2, 2.0);
        const double outer_hi = inner_hi * extra.uniform(1.05, 1.5);
        const SeparatedBounds sep(in.p.lo, inner_lo, inner_hi, outer_hi);
        const auto [sa, sb] = random_separated_pair(extra, in.p.dim, sep);
        const double k2 = make_bundle(sep.outer_lo, sep.outer_hi, t).k2;
        const double lam = std::min(tv, 1.0 - tv);
        const double shrink =
            pow_pos(4.0 * inner_hi * inner_lo / ((inner_hi + inner_lo) * (inner_hi + inner_lo)),
                    lam);
        return operator_result(id, spectral_geometric_mean(sa, sb, t),
                               (k2 * shrink) * arithmetic_mean(sa, sb, t), tol, dg);
    }
    case CheckId::SpectralLeGeometric:
        return operator_result(id, spectral_geometric_mean(a, b, t),
                               c.gamma * geometric_mean(a, b, t), tol, dg);
    case CheckId::InnerLeSpectral: {
        const double ax = quad_form(a, in.unit);
        const double bx = quad_form(b, in.unit);
        return scalar_result(id, pow_pos(ax, 1.0 - tv) * pow_pos(bx, tv),
                             c.eta * quad_form(spectral_geometric_mean(a, b, t), in.unit),
                             tol, dg);
    }
    case CheckId::GeometricLeSpectral:
        return operator_result(id, geometric_mean(a, b, t),
                               c.eta * spectral_geometric_mean(a, b, t), tol, dg);
    case CheckId::AndoSpectral:
        return operator_result(
            id, apply_map(in.phi, spectral_geometric_mean(a, b, t)),
            c.beta * spectral_geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b), t),
            tol, dg);
    case CheckId::ReverseAndoSpectral: {
        const double cst = pow_pos(c.c1, tv) * c.k2 / (c.k_ratio * c.k_ratio);
        return operator_result(
            id, spectral_geometric_mean(apply_map(in.phi, a), apply_map(in.phi, b), t),
            cst * apply_map(in.phi, spectral_geometric_mean(a, b, t)), tol, dg);
    }
    case CheckId::KantorovichSpectral: {
        // Constant as stated; scalar bound read as a multiple of the identity.
        const double ki = kantorovich(1.0 / in.bounds.hi, 1.0 / in.bounds.lo, tv);
        const double cst = std::sqrt(c.c1) * c.k2 / (ki * ki);
        const SymMatrix lhs = spectral_geometric_mean(
            apply_map(in.phi, a), apply_map(in.phi, matrix_inverse(a)), t);
        return operator_result(id, lhs, cst * SymMatrix::identity(lhs.dim()), tol, dg);
    }
    case CheckId::ArithLeSpectral: {
        const double ratio = scalar_mean(c.m, c.M, c.lambda, ScalarMeanKind::Arithmetic) /
                             scalar_mean(c.m, c.M, c.lambda, ScalarMeanKind::Geometric);
        return operator_result(id, arithmetic_mean(a, b, t),
                               (ratio * c.eta) * spectral_geometric_mean(a, b, t), tol, dg);
    }
    case CheckId::ArithLeGeometricScalar: {
        const double ratio = scalar_mean(c.m, c.M, c.lambda, ScalarMeanKind::Arithmetic) /
                             scalar_mean(c.m, c.M, c.lambda, ScalarMeanKind::Geometric);
        return operator_result(id, arithmetic_mean(a, b, t), ratio * geometric_mean(a, b, t),
                               tol, dg);
    }
    case CheckId::AndoHiaiSpectral: {
        const double kmin = std::min(*c.kappa1, *c.kappa2);
        return operator_result(
            id, matrix_power(spectral_geometric_mean(a, b, t), rv),
            kmin * spectral_geometric_mean(matrix_power(a, rv), matrix_power(b, rv), t), tol,
            dg);
    }
    default: throw std::invalid_argument("run_check: not an operator check");
    }
}

} // namespace

CheckResult run_check(CheckId id, const TrialParams& params, double tol) {
    const OperatorInstance in = make_instance(params);
    CheckResult result = evaluate_operator(id, in, tol);
    if (!result.pass) {
        // Re-check the same instance at full eigensolver convergence; only a
        // margin that survives this is a genuine violation.
        ScopedJacobiOptions tight(JacobiOptions{200, 0.0});
        result = evaluate_operator(id, in, tol);
        result.retried = true;
    }
    return result;
}

namespace {

void append_fraction_split(std::vector<CheckResult>& out, double tol) {
    const auto xs = log_x_grid();
    const auto eval = [](double x, double t) {
        const double xt = pow_pos(x, t);
        const double lhs = (x + 1.0) / (x - 1.0);
        const double rhs = (1.0 - t) * (1.0 - t) * (x + xt) / (x - xt) +
                           t * t * (xt + 1.0) / (xt - 1.0);
        return lhs - rhs;
    };
    const auto add = [&](double x, double t, bool lhs_dominates) {
        const double d = eval(x, t);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "x=%g;t=%g", x, t);
        out.push_back(scalar_result(CheckId::FractionSplit, 0.0,
                                    lhs_dominates ? d : -d, tol, buf));
    };
    // The split expression degenerates to 0/0 at t = 0 and t = 1; stay clear
    // of those points the same way K's singular band does.
    for (double x : xs) {
        for (double t : unit_t_grid())
            if (t > 1e-3 && t < 1.0 - 1e-3) add(x, t, x > 1.0);
        for (double t : upper_t_grid())
            if (t > 1.0 + 1e-3) add(x, t, x < 1.0);
        for (double t : lower_t_grid())
            if (t < -1e-3) add(x, t, x < 1.0);
    }
}

void append_l_vs_k(std::vector<CheckResult>& out, double tol) {
    for (double x : log_x_grid()) {
        const auto add = [&](double t, bool k_dominates) {
            const double k = kantorovich(x, t);
            const double l = kantorovich_lower(x, t);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "x=%g;t=%g", x, t);
            out.push_back(
                scalar_result(CheckId::LVsK, k_dominates ? l : k, k_dominates ? k : l, tol, buf));
        };
        for (double t : unit_t_grid()) add(t, true);
        for (double t : upper_t_grid()) add(t, false);
        for (double t : lower_t_grid()) add(t, false);
    }
}

void append_k_square(std::vector<CheckResult>& out, double tol) {
    for (double x : log_x_grid()) {
        const auto add = [&](double t, bool square_below) {
            const double ksq = kantorovich(x, t) * kantorovich(x, t);
            const double kx2 = kantorovich(x * x, t);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "x=%g;t=%g", x, t);
            out.push_back(scalar_result(CheckId::KSquareOrder, square_below ? kx2 : ksq,
                                        square_below ? ksq : kx2, tol, buf));
        };
        for (double t : unit_t_grid()) add(t, true);
        for (double t : upper_t_grid()) add(t, false);
        for (double t : lower_t_grid()) add(t, false);
    }
}

void append_k_monotone(std::vector<CheckResult>& out, double tol) {
    const auto xs = log_x_grid();
    const auto add_regime = [&](const std::vector<double>& ts, bool unit_regime) {
        for (double t : ts) {
            for (size_t i = 0; i + 1 < xs.size(); ++i) {
                const double x0 = xs[i];
                const double x1 = xs[i + 1];
                if (x0 < 1.0 && x1 > 1.0) continue; // straddles the extremum
                const double k0 = kantorovich(x0, t);
                const double k1 = kantorovich(x1, t);
                // Unit regime: increasing below 1, decreasing above (reversed outside).
                const bool expect_increasing = unit_regime == (x1 < 1.0);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "x=%g..%g;t=%g", x0, x1, t);
                out.push_back(scalar_result(CheckId::KMonotone,
                                            expect_increasing ? k0 : k1,
                                            expect_increasing ? k1 : k0, tol, buf));
            }
            for (double x : xs) {
                // Extremum 1 at x = 1: K <= 1 inside the unit regime, >= 1 outside.
                const double k = kantorovich(x, t);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "x=%g;t=%g;bound", x, t);
                out.push_back(scalar_result(CheckId::KMonotone, unit_regime ? k : 1.0,
                                            unit_regime ? 1.0 : k, tol, buf));
            }
        }
    };
    add_regime(unit_t_grid(), true);
    add_regime(upper_t_grid(), false);
    add_regime(lower_t_grid(), false);
}

void append_k_ratio_order(std::vector<CheckResult>& out, double tol) {
    Rng rng(0x6b7261746f726eull); // fixed stream, independent of the suite seed
    for (int i = 0; i < 200; ++i) {
        const double r1 = std::exp(rng.uniform(std::log(1.01), std::log(30.0)));
        const double r2 = r1 * std::exp(rng.uniform(0.0, std::log(30.0 / std::min(r1, 29.0))));
        const double m1 = rng.uniform(0.2, 3.0);
        const double m2 = rng.uniform(0.2, 3.0);
        const int regime = i % 3;
        const double t = regime == 0 ? rng.uniform(0.02, 0.98)
                         : regime == 1 ? rng.uniform(1.02, 1.98)
                                       : rng.uniform(-0.98, -0.02);
        const double k_narrow = kantorovich(m1, m1 * r1, t);
        const double k_wide = kantorovich(m2, m2 * r2, t);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "r1=%g;r2=%g;t=%g", r1, r2, t);
        const bool unit_regime = regime == 0;
        out.push_back(scalar_result(CheckId::KRatioOrder, unit_regime ? k_wide : k_narrow,
                                    unit_regime ? k_narrow : k_wide, tol, buf));
    }
}

void append_eta_le_gamma(std::vector<CheckResult>& out, double tol) {
    for (double x : log_x_grid()) {
        if (x <= 1.0) continue;
        for (double t : unit_t_grid()) {
            const ConstantsBundle b = make_bundle(1.0, x, Weight(t));
            char buf[64];
            std::snprintf(buf, sizeof(buf), "M/m=%g;t=%g", x, t);
            out.push_back(scalar_result(CheckId::EtaLeGamma, b.eta, b.gamma, tol, buf));
        }
    }
}

void append_holder_step(std::vector<CheckResult>& out, double tol) {
    Rng rng(0x686f6c646572ull);
    for (int i = 0; i < 200; ++i) {
        const double m = rng.uniform(0.1, 4.0);
        const double M = m * std::exp(rng.uniform(0.0, std::log(40.0)));
        const double t = rng.uniform(0.0, 1.0);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "m=%g;M=%g;t=%g", m, M, t);
        out.push_back(scalar_result(CheckId::HolderStep, pow_pos(M + m, 1.0 + t),
                                    pow_pos(2.0, t) * (pow_pos(M, 1.0 + t) + pow_pos(m, 1.0 + t)),
                                    tol, buf));
    }
}

void append_kappa_incomparable(std::vector<CheckResult>& out, double tol) {
    // Documented points: ratio 10 with t = 0.1 (kappa1 above) and t = 0.9
    // (kappa2 above), r = 0.5. Matches the sign of kappa_order_gap(10, t).
    const double k1_lo = kappa1(1.0, 10.0, 0.5, 0.1);
    const double k2_lo = kappa2(1.0, 10.0, 0.5, 0.1);
    out.push_back(
        scalar_result(CheckId::KappaIncomparable, k2_lo, k1_lo, tol, "M/m=10;r=0.5;t=0.1"));
    const double k1_hi = kappa1(1.0, 10.0, 0.5, 0.9);
    const double k2_hi = kappa2(1.0, 10.0, 0.5, 0.9);
    out.push_back(
        scalar_result(CheckId::KappaIncomparable, k1_hi, k2_hi, tol, "M/m=10;r=0.5;t=0.9"));
}

void append_l_exceeds_min_k(std::vector<CheckResult>& out, double tol) {
    // min over t of K(10, t) sits at t = 1/2; the gap to L(10, 0.1) is a
    // fixed reference value, reproduced here to 1e-6.
    const double gap = 2.0 * std::pow(10.0, 0.25) / (std::sqrt(10.0) + 1.0) -
                       kantorovich_lower(10.0, 0.1);
    const double reference = -0.0171811;
    out.push_back(scalar_result(CheckId::LExceedsMinK, std::abs(gap - reference), 1e-6, tol,
                                "x=10;t=0.1"));
}

} // namespace

std::vector<CheckResult> run_scalar_check(CheckId id, double tol) {
    std::vector<CheckResult> out;
    switch (id) {
    case CheckId::KappaIncomparable: append_kappa_incomparable(out, tol); break;
    case CheckId::FractionSplit: append_fraction_split(out, tol); break;
    case CheckId::LVsK: append_l_vs_k(out, tol); break;
    case CheckId::KSquareOrder: append_k_square(out, tol); break;
    case CheckId::KMonotone: append_k_monotone(out, tol); break;
    case CheckId::KRatioOrder: append_k_ratio_order(out, tol); break;
    case CheckId::EtaLeGamma: append_eta_le_gamma(out, tol); break;
    case CheckId::HolderStep: append_holder_step(out, tol); break;
    case CheckId::LExceedsMinK: append_l_exceeds_min_k(out, tol); break;
    default: throw std::invalid_argument("run_scalar_check: not a scalar check");
    }
    return out;
}

} // namespace sgmean
