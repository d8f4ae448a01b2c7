#include "alphadist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace alphadist {

namespace {

constexpr double k_alpha_window_lo = 0.5; // [1/2, 1) restriction shared by
                                          // T2.7, P3.2, P3.6, T3.8

void require_order(const DistanceData& d) {
    if (d.n < 2)
        throw std::invalid_argument("spectral bounds need n >= 2");
}

BoundResult make_result(BoundId id, Side side, double bound, double actual,
                        const BoundOptions& opt) {
    BoundResult r;
    r.id = id;
    r.side = side;
    r.bound_value = bound;
    r.actual_value = actual;
    r.slack = side == Side::lower ? actual - bound : bound - actual;
    r.holds = r.slack >= -opt.tol * (1.0 + std::fabs(actual));
    return r;
}

BoundResult not_applicable(BoundId id, Side side) {
    BoundResult r;
    r.id = id;
    r.side = side;
    r.applicable = false;
    return r;
}

// ||D_alpha||_F^2 from exact integer scalars:
// alpha^2 sum Tr^2 + 2 (1-alpha)^2 S  (direct entry summation).
double alpha_fro_sq(const DistanceData& d, double alpha) {
    return alpha * alpha * static_cast<double>(d.tr_square_sum()) +
           2.0 * (1.0 - alpha) * (1.0 - alpha) * static_cast<double>(d.sq_sum);
}

} // namespace

std::string bound_id_name(BoundId id) {
    switch (id) {
    case BoundId::L2_1: return "L2.1";
    case BoundId::P3_4: return "P3.4";
    case BoundId::T3_8: return "T3.8";
    case BoundId::T3_10: return "T3.10";
    case BoundId::T2_7: return "T2.7";
    case BoundId::T2_11: return "T2.11";
    case BoundId::T2_13: return "T2.13";
    case BoundId::P3_2: return "P3.2";
    case BoundId::P2_10: return "P2.10";
    case BoundId::T3_14: return "T3.14";
    case BoundId::T3_15: return "T3.15";
    case BoundId::T3_16: return "T3.16";
    case BoundId::C3_17: return "C3.17";
    case BoundId::T3_18: return "T3.18";
    case BoundId::P3_12: return "P3.12";
    case BoundId::P3_6: return "P3.6";
    case BoundId::L3_7: return "L3.7";
    case BoundId::L3_11: return "L3.11";
    }
    return "?";
}

std::string BoundResult::label() const {
    std::string out = bound_id_name(id);
    if (!variant.empty())
        out += "[" + variant + "]";
    out += side == Side::lower ? "/lower" : "/upper";
    return out;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x + coeffs[k];
    return acc;
}

std::vector<BoundResult> radius_bounds(const DistanceData& d, const Spectrum& s,
                                       const BoundOptions& opt) {
    require_order(d);
    const int n = d.n;
    const double alpha = s.alpha;
    const double w = static_cast<double>(d.wiener);
    const double sigma1 = s.radius;
    const bool regular = is_transmission_regular(d);

    std::vector<BoundResult> out;

    // Lemma 2.1: rho_alpha >= 2W/n, equality iff transmission regular.
    {
        BoundResult r = make_result(BoundId::L2_1, Side::lower, 2.0 * w / n, sigma1, opt);
        r.equality_structural = regular;
        out.push_back(std::move(r));
    }

    // Prop 3.4: min Tr <= rho_alpha <= max Tr, equalities iff regular.
    {
        BoundResult lo = make_result(BoundId::P3_4, Side::lower,
                                     static_cast<double>(d.min_tr), sigma1, opt);
        lo.equality_structural = regular;
        out.push_back(std::move(lo));
        BoundResult hi = make_result(BoundId::P3_4, Side::upper,
                                     static_cast<double>(d.max_tr), sigma1, opt);
        hi.equality_structural = regular;
        out.push_back(std::move(hi));
    }

    // Thm 3.8, alpha in [1/2,1): roots of x^2 - bx - C with
    //   b = (1-alpha)(x0-1), C = alpha x0^2 + 2(1-alpha)W - (1-alpha)(n-1)x0
    // for x0 = min Tr (lower) and max Tr (upper). The radicand is b^2 + 4C,
    // the sign forced by the quadratic-root argument; the printed b^2 - 4C
    // variant is evaluated and logged in details.
    if (alpha >= k_alpha_window_lo && alpha < 1.0) {
        const auto root_bound = [&](double x0) {
            const double b = (1.0 - alpha) * (x0 - 1.0);
            const double c = alpha * x0 * x0 + 2.0 * (1.0 - alpha) * w -
                             (1.0 - alpha) * (n - 1.0) * x0;
            const double derived_rad = b * b + 4.0 * c;
            const double printed_rad = b * b - 4.0 * c;
            const double bound = (b + std::sqrt(std::max(derived_rad, 0.0))) / 2.0;
            return std::tuple<double, double, double>(bound, derived_rad, printed_rad);
        };
        const auto [lo_bound, lo_rad, lo_printed] = root_bound(static_cast<double>(d.min_tr));
        BoundResult lo = make_result(BoundId::T3_8, Side::lower, lo_bound, sigma1, opt);
        lo.details["derived_radicand"] = lo_rad;
        lo.details["printed_radicand"] = lo_printed;
        lo.details["printed_differs"] =
            std::fabs(lo_printed - lo_rad) > 1e-9 * (1.0 + std::fabs(lo_rad)) ? 1.0 : 0.0;
        out.push_back(std::move(lo));

        const auto [hi_bound, hi_rad, hi_printed] = root_bound(static_cast<double>(d.max_tr));
        BoundResult hi = make_result(BoundId::T3_8, Side::upper, hi_bound, sigma1, opt);
        hi.details["derived_radicand"] = hi_rad;
        hi.details["printed_radicand"] = hi_printed;
        hi.details["printed_differs"] =
            std::fabs(hi_printed - hi_rad) > 1e-9 * (1.0 + std::fabs(hi_rad)) ? 1.0 : 0.0;
        out.push_back(std::move(hi));
    } else {
        out.push_back(not_applicable(BoundId::T3_8, Side::lower));
        out.push_back(not_applicable(BoundId::T3_8, Side::upper));
    }

    // Thm 3.10: sigma_1 <= 2aW/n + sqrt((n-1)/n (|D_a|_F^2 - 4a^2W^2/n)),
    // equality iff complete.
    {
        const double center = 2.0 * alpha * w / n;
        const double variance = std::max(alpha_fro_sq(d, alpha) - n * center * center, 0.0);
        BoundResult r = make_result(BoundId::T3_10, Side::upper,
                                    center + std::sqrt((n - 1.0) / n * variance), sigma1, opt);
        r.equality_structural = is_complete(d);
        out.push_back(std::move(r));
    }

    return out;
}

std::vector<BoundResult> energy_bounds(const DistanceData& d, const Spectrum& s,
                                       const GraphInvariants& inv, const BoundOptions& opt) {
    require_order(d);
    const int n = d.n;
    const double alpha = s.alpha;
    const double w = static_cast<double>(d.wiener);
    const double energy = inv.energy;

    std::vector<BoundResult> out;

    // Thm 2.7, alpha in [1/2,1): energy >= 2(1-alpha)(n-1), equality iff K_n.
    if (alpha >= k_alpha_window_lo && alpha < 1.0) {
        BoundResult r = make_result(BoundId::T2_7, Side::lower,
                                    2.0 * (1.0 - alpha) * (n - 1.0), energy, opt);
        r.equality_structural = is_complete(d);
        out.push_back(std::move(r));
    } else {
        out.push_back(not_applicable(BoundId::T2_7, Side::lower));
    }

    // Thm 2.11: energy <= sqrt(nZ),
    // Z = (1-a)^2 |D|_F^2 + a^2 sum (Tr_i - 2W/n)^2.
    {
        const double tr_var =
            static_cast<double>(d.tr_square_sum()) - 4.0 * w * w / n;
        const double z = (1.0 - alpha) * (1.0 - alpha) * 2.0 * static_cast<double>(d.sq_sum) +
                         alpha * alpha * std::max(tr_var, 0.0);
        BoundResult r = make_result(BoundId::T2_11, Side::upper, std::sqrt(n * z), energy, opt);
        r.details["Z"] = z;
        out.push_back(std::move(r));
    }

    // Thm 2.13: energy <= sqrt((a^2 sum Tr^2 + 2(1-a)^2 S) n - 4 a^2 W^2).
    {
        const double rad = alpha_fro_sq(d, alpha) * n - 4.0 * alpha * alpha * w * w;
        BoundResult r = make_result(BoundId::T2_13, Side::upper,
                                    std::sqrt(std::max(rad, 0.0)), energy, opt);
        out.push_back(std::move(r));
    }

    // Prop 3.2, alpha in [1/2,1): n sigma_1 > 2 energy. The underlying
    // Lemma 3.1 needs all eigenvalues positive, so the record is applicable
    // only when sigma_n is bounded away from zero (K_2 at alpha = 1/2 is an
    // exact-equality counterexample otherwise).
    if (alpha >= k_alpha_window_lo && alpha < 1.0 &&
        s.smallest() > 1e-9 * (1.0 + std::fabs(s.radius))) {
        BoundResult r = make_result(BoundId::P3_2, Side::upper, n * s.radius / 2.0, energy, opt);
        r.details["strict"] = 1.0;
        r.details["sigma_n"] = s.smallest();
        out.push_back(std::move(r));
    } else {
        out.push_back(not_applicable(BoundId::P3_2, Side::upper));
    }

    // Prop 2.10, alpha in [0,1):
    // |D_a|_F < sqrt(a^2 sum Tr^2 + (1-a)^2 (sum Tr)^2 / n)  (strict; the
    // right side degenerates to |D_1|_F itself at alpha = 1).
    if (alpha < 1.0) {
        const double actual = std::sqrt(alpha_fro_sq(d, alpha));
        const double bound =
            std::sqrt(alpha * alpha * static_cast<double>(d.tr_square_sum()) +
                      (1.0 - alpha) * (1.0 - alpha) * 4.0 * w * w / n);
        BoundResult r = make_result(BoundId::P2_10, Side::upper, bound, actual, opt);
        r.details["strict"] = 1.0;
        out.push_back(std::move(r));
    } else {
        out.push_back(not_applicable(BoundId::P2_10, Side::upper));
    }

    return out;
}

std::vector<BoundResult> estrada_bounds(const DistanceData& d, const Spectrum& s,
                                        const GraphInvariants& inv, const BoundOptions& opt) {
    require_order(d);
    const int n = d.n;
    const double alpha = s.alpha;
    const double w = static_cast<double>(d.wiener);
    const double dee = inv.estrada;

    std::vector<BoundResult> out;

    // An overflowing upper bound (+inf) holds trivially; an overflowing
    // lower bound can never hold and is flagged so reports surface the
    // scale problem instead of hiding it.
    const auto push = [&](BoundId id, Side side, double bound) {
        BoundResult r = make_result(id, side, bound, dee, opt);
        if (std::isinf(bound)) {
            r.details["overflow"] = 1.0;
            r.slack = side == Side::upper ? std::numeric_limits<double>::infinity()
                                          : -std::numeric_limits<double>::infinity();
            r.holds = side == Side::upper;
        }
        out.push_back(std::move(r));
    };

    // Thm 3.14: DEE <= n + 2aW - 1 - omega + e^omega,
    // omega = sqrt(a^2 sum Tr^2 + 2(1-a)^2 S).
    const double omega = std::sqrt(alpha_fro_sq(d, alpha));
    push(BoundId::T3_14, Side::upper, n + 2.0 * alpha * w - 1.0 - omega + std::exp(omega));
    out.back().details["omega"] = omega;

    // Thm 3.15: DEE >= sqrt(n + 4aW + n(n-1) e^{4aW/n}).
    push(BoundId::T3_15, Side::lower,
         std::sqrt(n + 4.0 * alpha * w + n * (n - 1.0) * std::exp(4.0 * alpha * w / n)));

    // Thm 3.16: DEE >= e^{2W/n} + (n-1) + 2aW - 2W/n.
    push(BoundId::T3_16, Side::lower,
         std::exp(2.0 * w / n) + (n - 1.0) + 2.0 * alpha * w - 2.0 * w / n);

    // Cor 3.17 (transmission regular, Tr == r): DEE >= e^r + (n-1) + 2ar - r.
    if (is_transmission_regular(d)) {
        const double r = static_cast<double>(d.min_tr);
        push(BoundId::C3_17, Side::lower, std::exp(r) + (n - 1.0) + 2.0 * alpha * r - r);
        out.back().details["r"] = r;
    } else {
        out.push_back(not_applicable(BoundId::C3_17, Side::lower));
    }

    // Thm 3.18: DEE <= e^{2aW/n} (n - 1 - energy + e^{energy}).
    push(BoundId::T3_18, Side::upper,
         std::exp(2.0 * alpha * w / n) * (n - 1.0 - inv.energy + std::exp(inv.energy)));

    return out;
}

BoundResult spread_bound(const DistanceData& d, const Spectrum& s, int vertex,
                         const BoundOptions& opt) {
    if (d.n < 3)
        throw std::invalid_argument("spread_bound needs n >= 3");
    if (vertex < 0 || vertex >= d.n)
        throw std::invalid_argument("vertex out of range");
    const int n = d.n;
    const double alpha = s.alpha;
    const double w = static_cast<double>(d.wiener);
    const double tr_v = static_cast<double>(d.tr[vertex]);

    // Quotient of D_alpha over ({v}, V \ {v}) exactly as in the proof.
    QuotientMatrix q;
    q.m = 2;
    q.entries = {alpha * tr_v, (1.0 - alpha) * tr_v,
                 (1.0 - alpha) * tr_v / (n - 1.0),
                 (2.0 * w - (2.0 - alpha) * tr_v) / (n - 1.0)};
    const auto [mu1, mu2] = eigenvalues_2x2(q);

    const double actual = s.radius - s.smallest();
    BoundResult r = make_result(BoundId::P3_12, Side::lower, mu1 - mu2, actual, opt);
    r.details["vertex"] = static_cast<double>(vertex);
    r.details["b11"] = q.entries[0];
    r.details["b12"] = q.entries[1];
    r.details["b21"] = q.entries[2];
    r.details["b22"] = q.entries[3];
    r.details["mu1"] = mu1;
    r.details["mu2"] = mu2;

    // The radicand printed in the proposition (the quotient form is
    // authoritative; the printed alpha*n*Tr^2 term is logged for the audit).
    const double printed_rad =
        (2.0 * w - 2.0 * tr_v + alpha * n * tr_v * tr_v) *
            (2.0 * w - 2.0 * tr_v + alpha * n * tr_v * tr_v) -
        4.0 * (n - 1.0) * (2.0 * alpha * tr_v * w - tr_v * tr_v);
    r.details["printed_radicand"] = printed_rad;
    const double printed_value =
        printed_rad >= 0.0 ? std::sqrt(printed_rad) / (n - 1.0)
                           : std::numeric_limits<double>::quiet_NaN();
    r.details["printed_value"] = printed_value;
    r.details["printed_differs"] =
        (printed_rad < 0.0 ||
         std::fabs(printed_value - r.bound_value) > 1e-9 * (1.0 + std::fabs(r.bound_value)))
            ? 1.0
            : 0.0;
    return r;
}

std::vector<BoundResult> poly_rowsum_bound(const DistanceData& d, const Spectrum& s,
                                           const Polynomial& p, const BoundOptions& opt) {
    require_order(d);
    if (p.degree() > 4 || p.coeffs.empty())
        throw std::invalid_argument("polynomial degree must be between 0 and 4");
    const double alpha = s.alpha;
    if (!(alpha >= k_alpha_window_lo && alpha < 1.0)) {
        auto lo = not_applicable(BoundId::P3_6, Side::lower);
        auto hi = not_applicable(BoundId::P3_6, Side::upper);
        lo.variant = hi.variant = p.name;
        return {std::move(lo), std::move(hi)};
    }

    const int n = d.n;
    const SymMatrix m = build_alpha_matrix(d, alpha);

    // Row sums of p(D_alpha) accumulated power by power: r_{k+1} = M r_k
    // with r_0 = all-ones, so R_i(p(M)) = sum_k c_k (r_k)_i.
    std::vector<double> power(n, 1.0), rowsum(n, p.coeffs[0]), next(n);
    for (int k = 1; k <= p.degree(); ++k) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += m(i, j) * power[j];
            next[i] = acc;
        }
        power.swap(next);
        for (int i = 0; i < n; ++i)
            rowsum[i] += p.coeffs[k] * power[i];
    }

    double lo = rowsum[0], hi = rowsum[0];
    for (double v : rowsum) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double actual = p.eval(s.radius);
    const bool strict = hi - lo > 1e-12 * (1.0 + std::fabs(hi));

    BoundResult lower = make_result(BoundId::P3_6, Side::lower, lo, actual, opt);
    BoundResult upper = make_result(BoundId::P3_6, Side::upper, hi, actual, opt);
    lower.variant = upper.variant = p.name;
    lower.details["strict"] = upper.details["strict"] = strict ? 1.0 : 0.0;
    lower.details["min_rowsum"] = upper.details["min_rowsum"] = lo;
    lower.details["max_rowsum"] = upper.details["max_rowsum"] = hi;
    return {std::move(lower), std::move(upper)};
}

std::vector<BoundResult> weighted_transmission_bounds(const DistanceData& d, int vertex,
                                                      const BoundOptions& opt) {
    if (vertex < 0 || vertex >= d.n)
        throw std::invalid_argument("vertex out of range");
    const double actual = static_cast<double>(d.weighted_transmission(vertex));
    const double w2 = 2.0 * static_cast<double>(d.wiener);
    const double tr_u = static_cast<double>(d.tr[vertex]);
    const double t = static_cast<double>(d.min_tr);
    const double tt = static_cast<double>(d.max_tr);
    const double lo = w2 + (t - 1.0) * tr_u - (d.n - 1.0) * t;
    const double hi = w2 + (tt - 1.0) * tr_u - (d.n - 1.0) * tt;

    BoundResult lower = make_result(BoundId::L3_7, Side::lower, lo, actual, opt);
    BoundResult upper = make_result(BoundId::L3_7, Side::upper, hi, actual, opt);
    lower.details["vertex"] = upper.details["vertex"] = static_cast<double>(vertex);
    return {std::move(lower), std::move(upper)};
}

std::vector<BoundResult> quotient_interlacing_check(const SymMatrix& m, const Spectrum& s,
                                                    const Partition& blocks,
                                                    const BoundOptions& opt) {
    if (blocks.size() != 2)
        throw std::invalid_argument("quotient_interlacing_check needs a 2-block partition");
    const QuotientMatrix q = quotient_matrix(m, blocks);
    const auto [mu1, mu2] = eigenvalues_2x2(q);
    const int n = s.n;
    if (n < 2)
        throw std::invalid_argument("interlacing needs n >= 2");

    // sigma_i >= mu_i >= sigma_{n-2+i} for i = 1, 2.
    std::vector<BoundResult> out;
    BoundResult r = make_result(BoundId::L3_11, Side::upper, s.values[0], mu1, opt);
    r.variant = "mu1";
    out.push_back(std::move(r));
    r = make_result(BoundId::L3_11, Side::lower, s.values[n - 2], mu1, opt);
    r.variant = "mu1";
    out.push_back(std::move(r));
    r = make_result(BoundId::L3_11, Side::upper, s.values[1], mu2, opt);
    r.variant = "mu2";
    out.push_back(std::move(r));
    r = make_result(BoundId::L3_11, Side::lower, s.values[n - 1], mu2, opt);
    r.variant = "mu2";
    out.push_back(std::move(r));
    for (auto& rec : out) {
        rec.details["mu1"] = mu1;
        rec.details["mu2"] = mu2;
    }
    return out;
}

} // namespace alphadist
