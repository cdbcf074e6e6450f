#include "haken/volume.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace haken {

namespace {

// zeta(s) by Euler-Maclaurin at K = 64; accurate to ~1e-14 for s >= 2.
double zeta(int s) {
    const int K = 64;
    double sum = 0.0;
    for (int k = 1; k < K; ++k) sum += std::pow(k, -s);
    double Ks = std::pow(K, -s);
    sum += Ks * K / (s - 1.0);
    sum += Ks / 2.0;
    sum += s * Ks / (12.0 * K);
    sum -= s * (s + 1.0) * (s + 2.0) * Ks / (720.0 * K * K * K);
    return sum;
}

const std::vector<double>& zeta_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (int n = 1; n <= 40; ++n) t.push_back(zeta(2 * n));
        return t;
    }();
    return table;
}

}  // namespace

double lobachevsky(double theta) {
    // Odd and pi-periodic; remainder() lands in [-pi/2, pi/2].
    double t = std::remainder(theta, M_PI);
    if (t == 0.0) return 0.0;
    double sign = t < 0 ? -1.0 : 1.0;
    t = std::fabs(t);

    // L(t) = t - t log(2t) + sum_n zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n)),
    // from the product expansion of sin t / t; converges for |t| < pi.
    const auto& zt = zeta_table();
    double q = (t / M_PI) * (t / M_PI);
    double sum = 0.0, pw = q;
    for (size_t n = 1; n <= zt.size(); ++n) {
        double term = zt[n - 1] * pw / (n * (2.0 * n + 1.0));
        sum += term;
        if (std::fabs(term) < 1e-18) break;
        pw *= q;
    }
    return sign * (t - t * std::log(2.0 * t) + t * sum);
}

double ideal_octahedron_volume() {
    static const double v8 = 8.0 * lobachevsky(M_PI / 4.0);
    return v8;
}

double trunc_tet_edge_length(double theta) {
    if (!(theta >= 0.0 && theta < M_PI / 3.0))
        throw std::domain_error("dihedral angle must lie in [0, pi/3)");
    // delta = cos t / (2 cos t - 1) - 1, computed without cancellation.
    double s = std::sin(theta / 2.0);
    double denom = 2.0 * std::cos(theta) - 1.0;
    double delta = 2.0 * s * s / denom;
    return std::log1p(delta + std::sqrt(delta * (2.0 + delta)));
}

double trunc_tet_dihedral(double r) {
    if (!(r >= 0.0)) throw std::domain_error("edge length must be >= 0");
    // cos theta = cosh r / (2 cosh r - 1); acos(1 - eps) = 2 asin(sqrt(eps/2)).
    double sh = std::sinh(r / 2.0);
    double eps = 2.0 * sh * sh / (2.0 * std::cosh(r) - 1.0);
    double theta = 2.0 * std::asin(std::sqrt(eps / 2.0));
    // for very large r the rounded result may land on pi/3; keep it inside
    // the open interval the rest of the module expects
    return std::min(theta, std::nextafter(M_PI / 3.0, 0.0));
}

namespace quadrature {

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double m, double fm, double b,
                   double fb, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, flm, m, fm);
    double right = simpson(m, fm, frm, b, fb);
    double err = left + right - whole;
    if (std::fabs(err) <= 15.0 * tol || depth >= 60) return left + right + err / 15.0;
    return simpson_rec(f, a, fa, lm, flm, m, fm, left, tol / 2.0, depth + 1) +
           simpson_rec(f, m, fm, rm, frm, b, fb, right, tol / 2.0, depth + 1);
}

// 16-point Gauss-Legendre abscissae and weights on [-1, 1].
const double kGL16X[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                          0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                          0.9445750230732326, 0.9894009349916499};
const double kGL16W[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                          0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                          0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += kGL16W[i] * (f(c + h * kGL16X[i]) + f(c - h * kGL16X[i]));
    return s * h;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(a, fa, fm, b, fb);
    return simpson_rec(f, a, fa, m, fm, b, fb, whole, tol, 0);
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
    double s = 0.0, h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) s += gl16(f, a + i * h, a + (i + 1) * h);
    return s;
}

double graded_gauss_legendre(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    // Panels [b - w, b - w/2] shrinking geometrically toward b. The tail
    // below 2^-60 of the interval carries at most ~length * |log length|.
    double s = 0.0;
    double left = a;
    double w = (b - a) * 0.5;
    for (int j = 0; j < 60 && w > 0.0; ++j) {
        double right = b - w;
        if (right > left) {
            s += gl16(f, left, right);
            left = right;
        }
        w *= 0.5;
    }
    s += gl16(f, left, b - (b - a) * 1e-18);
    return s;
}

}  // namespace quadrature

double trunc_tet_volume(double theta) {
    if (!(theta >= 0.0 && theta < M_PI / 3.0))
        throw std::domain_error("dihedral angle must lie in [0, pi/3)");
    if (theta == 0.0) return ideal_octahedron_volume();
    double integral =
        quadrature::graded_gauss_legendre([](double t) { return trunc_tet_edge_length(t); }, 0.0, theta);
    return ideal_octahedron_volume() - 3.0 * integral;
}

double volume_area_ratio(double r) {
    double theta = trunc_tet_dihedral(r);
    return trunc_tet_volume(theta) / (4.0 * (M_PI - 3.0 * theta));
}

std::string VolumeBound::kind_name() const {
    switch (kind) {
        case Kind::VertexCount: return "vertex_count";
        case Kind::MiyamotoBoundary: return "miyamoto_boundary";
        case Kind::GraphTypeQuads: return "graph_type_quads";
    }
    return "";
}

VolumeBound vertex_count_bound(int n3, int n4) {
    if (n3 < 0 || n4 < 0) throw std::domain_error("vertex counts must be >= 0");
    VolumeBound b;
    b.kind = VolumeBound::Kind::VertexCount;
    b.n3 = n3;
    b.n4 = n4;
    b.strict = true;
    b.value = (4.0 * n4 + n3 - 8.0) / 32.0 * ideal_octahedron_volume();
    if (b.value < 0.0) {
        b.value = 0.0;
        b.clamped = true;
    }
    return b;
}

Rational mirrored_polygon_chi(const std::vector<int>& corner_orders) {
    if (corner_orders.size() < 3) throw std::domain_error("a mirrored polygon needs at least 3 corners");
    Rational chi = Rational(1) - Rational(static_cast<std::int64_t>(corner_orders.size()), 2);
    for (int n : corner_orders) {
        if (n < 2) throw std::domain_error("corner orders must be >= 2");
        chi = chi + Rational(1, 2LL * n);
    }
    return chi;
}

double return_path_bound(int k, const Rational& chi_boundary) {
    if (k < 1) throw std::domain_error("elliptic order must be >= 1");
    if (!(chi_boundary < Rational(0))) throw std::domain_error("boundary Euler characteristic must be < 0");
    double theta = M_PI / (3.0 * (1.0 - k * chi_boundary.to_double()));
    return trunc_tet_edge_length(theta);
}

VolumeBound miyamoto_bound(int k, const Rational& x) {
    if (k < 1) throw std::domain_error("elliptic order must be >= 1");
    if (!(Rational(0) < x)) throw std::domain_error("x must be > 0");
    VolumeBound b;
    b.kind = VolumeBound::Kind::MiyamotoBoundary;
    b.k = k;
    b.x = x;
    b.strict = false;
    double xd = x.to_double();
    // The cut orbifold has two boundary copies of the cutting surfaces, so
    // its boundary satisfies -chi = 2x; halving the resulting volume bound
    // cancels the doubling everywhere except inside the return-path angle.
    double theta0 = M_PI / (3.0 * (1.0 + 2.0 * k * xd));
    double r = trunc_tet_edge_length(theta0) / 2.0;
    b.value = 2.0 * M_PI * xd * volume_area_ratio(r);
    return b;
}

VolumeBound graph_type_bound(int m1, int m2, int m3, int m4, double l) {
    if (m1 < 0 || m2 < 0 || m3 < 0 || m4 < 0 || m1 + m2 + m3 + m4 < 1)
        throw std::domain_error("quad counts must be >= 0 and not all zero");
    if (!(l >= 0.0)) throw std::domain_error("return-path bound must be >= 0");
    VolumeBound b;
    b.kind = VolumeBound::Kind::GraphTypeQuads;
    b.m1 = m1;
    b.m2 = m2;
    b.m3 = m3;
    b.m4 = m4;
    b.l = l;
    b.strict = false;
    b.value = M_PI / 6.0 * (m1 + 2.0 * m2 + 3.0 * m3 + 4.0 * m4) * volume_area_ratio(l / 2.0);
    return b;
}

}  // namespace haken
