#include "motivic/periods.hpp"

#include <functional>

namespace motivic {

PathSpec PathSpec::straight(const ComplexHP& target) {
    PathSpec p;
    p.points = {ComplexHP{Real(1)}, target};
    return p;
}

void PathSpec::validate() const {
    if (points.size() < 2)
        throw std::invalid_argument("PathSpec: need at least two points");
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        // Distance from 0 to the segment must be positive; check the
        // endpoints and the perpendicular foot.
        const ComplexHP& p = points[i];
        const ComplexHP& q = points[i + 1];
        if (abs_hp(p) == 0 || abs_hp(q) == 0)
            throw std::invalid_argument("PathSpec: path passes through 0");
        Real dx = q.re - p.re, dy = q.im - p.im;
        Real len2 = dx * dx + dy * dy;
        if (len2 == 0)
            continue;
        Real t = -(p.re * dx + p.im * dy) / len2;
        if (t > 0 && t < 1) {
            Real fx = p.re + t * dx, fy = p.im + t * dy;
            if (fx * fx + fy * fy == 0)
                throw std::invalid_argument("PathSpec: path passes through 0");
        }
    }
}

ComplexHP log_along(const PathSpec& path) {
    path.validate();
    // principal increment per segment; piecewise-linear segments avoiding 0
    // subtend less than a half turn each
    ComplexHP acc{Real(0)};
    for (size_t i = 0; i + 1 < path.points.size(); ++i)
        acc += log_principal(path.points[i + 1] / path.points[i]);
    acc += log_principal(path.points.front()); // = 0 for the standard start 1
    return acc;
}

ComplexHP li(int k, const ComplexHP& a) {
    if (k < 1)
        throw std::invalid_argument("li: k must be >= 1");
    const Real r = abs_hp(a);
    if (r == 0)
        return ComplexHP{Real(0)};
    if (r >= 1)
        throw std::domain_error("li: series evaluation needs |a| < 1");
    // stop once the geometric tail |a|^{n+1}/((n+1)^k (1-|a|)) clears the
    // working precision
    const Real eps = pow(Real(2), -static_cast<int>(requested_precision_bits() + 8));
    ComplexHP sum{Real(0)};
    ComplexHP an{Real(1)};
    const Real one_minus_r = 1 - r;
    Real rn = 1;
    for (long n = 1;; ++n) {
        an *= a;
        rn *= r;
        Real nk = 1;
        for (int t = 0; t < k; ++t)
            nk *= n;
        sum += an / ComplexHP{nk};
        if (rn * r / (one_minus_r * nk) < eps)
            break;
        if (n > 4000000)
            throw std::runtime_error("li: series did not converge within budget");
    }
    return sum;
}

Real li_real(int k, const Rat& a) {
    return li(k, ComplexHP{rat_to_real(a)}).re;
}

namespace {

struct GLRule {
    std::vector<Real> x, w; // nodes and weights on [0,1]
};

// Gauss-Legendre rule by Newton iteration on the Legendre recurrence,
// computed at the working precision and cached per (order, precision).
const GLRule& gl_rule(int n) {
    thread_local std::map<std::pair<int, unsigned>, GLRule> cache;
    auto key = std::make_pair(n, requested_precision_bits());
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    GLRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const Real pi = pi_hp();
    const Real eps = pow(Real(2), -static_cast<int>(requested_precision_bits() + kGuardBits - 8));
    for (int i = 0; i < n; ++i) {
        Real x = cos(pi * (Real(i) + Real(3) / 4) / (Real(n) + Real(1) / 2));
        Real dp = 0;
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre values by the three-term recurrence
            Real p0 = 1, p1 = x;
            for (int m = 2; m <= n; ++m) {
                Real p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps)
                break;
        }
        rule.x[static_cast<size_t>(i)] = (x + 1) / 2;
        rule.w[static_cast<size_t>(i)] = 1 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

// integral over [0, upper] of the level integrand:
//   level 1: 1/(1-t); level j: F_{j-1}(t)/t.
Real nested_integral(int level, const Real& upper, int order) {
    const GLRule& g = gl_rule(order);
    Real acc = 0;
    for (size_t i = 0; i < g.x.size(); ++i) {
        const Real t = upper * g.x[i];
        Real f;
        if (level == 1)
            f = 1 / (1 - t);
        else
            f = nested_integral(level - 1, t, order) / t;
        acc += g.w[i] * f;
    }
    return acc * upper;
}

} // namespace

Real iterated_quadrature(int k, const Rat& a, const Real& tol) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("iterated_quadrature: supported range is 1 <= k <= 3");
    if (!(a > 0 && a < 1))
        throw std::domain_error("iterated_quadrature: a must lie in (0,1)");
    const Real upper = rat_to_real(a);
    const int orders[] = {16, 24, 32, 48, 64, 96};
    Real prev = 0;
    bool have_prev = false;
    for (int n : orders) {
        Real v = nested_integral(k, upper, n);
        if (have_prev && abs(v - prev) < tol / 2)
            return v;
        prev = v;
        have_prev = true;
    }
    throw std::runtime_error("iterated_quadrature: tolerance not reached within budget");
}

EvalContext single_binding(const std::string& sym, const Rat& a, const PathSpec* path) {
    EvalBinding b;
    b.value = ComplexHP{rat_to_real(a)};
    b.path = path ? *path : PathSpec::straight(b.value);
    return EvalContext{{sym, std::move(b)}};
}

namespace {

ComplexHP prim_value(const ChainPrim& p, const EvalContext& ctx) {
    auto it = ctx.find(p.sym);
    if (it == ctx.end())
        throw std::invalid_argument("I_map: no numeric binding for symbol " + p.sym);
    const EvalBinding& b = it->second;
    switch (p.kind) {
    case ChainPrim::Kind::Eta:
        if (p.idx > 0)
            return ComplexHP{Real(0)}; // the integrand vanishes on these for type reasons
        return -li(p.k, b.value) / two_pi_i_pow(p.k);
    case ChainPrim::Kind::Xi:
        return -li(p.k, b.value) / two_pi_i_pow(p.k);
    case ChainPrim::Kind::PathPow:
        return pow_int(log_along(b.path) / two_pi_i_pow(1), p.idx);
    }
    throw std::logic_error("I_map: unknown primitive");
}

} // namespace

ComplexHP I_map(const ChainElement& x, const EvalContext& ctx) {
    ComplexHP acc{Real(0)};
    for (const auto& [s, coeff] : x.terms()) {
        for (const auto& [m, c] : coeff.terms())
            if (m.bidegree().coh != 0)
                throw std::invalid_argument("I_map: element has cohomological degree != 0");
        const Rat eps_val = augmentation(coeff); // kills positive Adams degree
        if (eps_val == 0)
            continue;
        ComplexHP v{rat_to_real(eps_val)};
        for (const auto& p : s.prims)
            v *= prim_value(p, ctx);
        acc += v;
    }
    return acc;
}

CauchyStokesReport cauchy_stokes_demo(const Rat& radius) {
    if (!(radius > 0 && radius < 1))
        throw std::domain_error("cauchy_stokes_demo: radius must lie in (0,1)");
    const Real r = rat_to_real(radius);
    // (1/2 pi i) of the circle integral of dz/z, by composite quadrature of
    // the parametrized integrand z'(t)/z(t)
    const GLRule& g = gl_rule(32);
    const int panels = 8;
    const Real two_pi = 2 * pi_hp();
    ComplexHP integral{Real(0)};
    for (int p = 0; p < panels; ++p) {
        const Real t0 = two_pi * p / panels;
        const Real h = two_pi / panels;
        for (size_t i = 0; i < g.x.size(); ++i) {
            const Real t = t0 + h * g.x[i];
            ComplexHP z{r * cos(t), r * sin(t)};
            ComplexHP dz{-r * sin(t), r * cos(t)};
            integral += ComplexHP{g.w[i] * h} * (dz / z);
        }
    }
    CauchyStokesReport rep;
    rep.contour_value = integral / two_pi_i_pow(1);
    rep.intersection = 1;
    rep.residual = abs_hp(rep.contour_value - ComplexHP{rep.intersection});
    return rep;
}

} // namespace motivic
