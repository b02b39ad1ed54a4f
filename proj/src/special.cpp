#include "nhqm/special.hpp"

#include <cmath>
#include <vector>

namespace nhqm {

// ---------------------------------------------------------------- Bessel I_n

double bessel_i(int n, double x) {
  if (n < 0) throw std::invalid_argument("bessel_i: order must be >= 0");
  double sign = 1.0;
  if (x < 0) {
    sign = (n % 2 == 0) ? 1.0 : -1.0;  // I_n(-x) = (-1)^n I_n(x)
    x = -x;
  }
  if (x < 20.0) {
    // All terms positive: no cancellation anywhere in this range.
    double t = 1.0;
    for (int k = 1; k <= n; ++k) t *= (x / 2) / k;
    double sum = t;
    double q = x * x / 4;
    for (int k = 1; k < 400; ++k) {
      t *= q / (double(k) * (n + k));
      sum += t;
      if (t < 1e-18 * sum) break;
    }
    return sign * sum;
  }
  // Single-exponential asymptotic series; the reflected e^{-x} piece is below
  // e^{-2x} ~ 1e-17 relative once x >= 20.
  const double mu = 4.0 * n * n;
  double term = 1.0, sum = 1.0, prev = HUGE_VAL;
  for (int k = 1; k < 60; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) >= prev) break;  // past the optimal truncation point
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sign * std::exp(x) * sum / std::sqrt(2 * pi * x);
}

// ------------------------------------------------------------------- Dawson

namespace {

// Taylor coefficients of F about real x0 from F(x0), via F' = 1 - 2 z F:
// a_{k+1} = -2 (a_{k-1} + x0 a_k)/(k+1).
template <int K>
std::array<double, K + 1> dawson_coeffs(double x0, double f0) {
  std::array<double, K + 1> a{};
  a[0] = f0;
  a[1] = 1.0 - 2.0 * x0 * f0;
  for (int k = 1; k < K; ++k) a[k + 1] = -2.0 * (a[k - 1] + x0 * a[k]) / (k + 1);
  return a;
}

// Anchor table F(j/10), j = 0..200, marched out from F(0) = 0.
const std::vector<double>& dawson_anchors() {
  static const std::vector<double> table = [] {
    std::vector<double> v(201);
    v[0] = 0.0;
    for (int j = 0; j < 200; ++j) {
      auto a = dawson_coeffs<30>(0.1 * j, v[j]);
      double s = 0.0;
      for (int k = 30; k >= 0; --k) s = s * 0.1 + a[k];
      v[j + 1] = s;
    }
    return v;
  }();
  return table;
}

}  // namespace

cxd dawson(cxd z) {
  if (std::abs(z.imag()) > 1.2)
    throw std::domain_error("dawson: argument outside the supported strip |Im z| <= 1.2");
  double sign = 1.0;
  if (z.real() < 0) {  // odd function
    z = -z;
    sign = -1.0;
  }
  if (std::abs(z) <= 2.0) {
    cxd t = z, sum = z;
    cxd q = -2.0 * z * z;
    for (int m = 0; m < 60; ++m) {
      t *= q / double(2 * m + 3);
      sum += t;
      if (std::abs(t) < 1e-18 * std::abs(sum)) break;
    }
    return sign * sum;
  }
  if (z.real() > 20.0) {
    // Large-argument expansion F ~ 1/(2z) sum (2k-1)!!/(2z^2)^k.
    cxd inv2z2 = 1.0 / (2.0 * z * z);
    cxd t{1.0, 0.0}, sum{1.0, 0.0};
    for (int k = 1; k < 30; ++k) {
      t *= double(2 * k - 1) * inv2z2;
      sum += t;
      if (std::abs(t) < 1e-18 * std::abs(sum)) break;
    }
    return sign * sum / (2.0 * z);
  }
  // Taylor lift from the nearest real anchor.
  int j = (int)std::lround(z.real() * 10.0);
  j = std::min(200, std::max(0, j));
  auto a = dawson_coeffs<64>(0.1 * j, dawson_anchors()[j]);
  cxd dz = z - cxd(0.1 * j, 0.0);
  cxd s{};
  for (int k = 64; k >= 0; --k) s = s * dz + a[k];
  return sign * s;
}

Jet4c dawson_jet(const Jet4c& z) {
  cxd z0 = z.value();
  std::array<cxd, 5> d{};
  d[0] = dawson(z0);
  d[1] = 1.0 - 2.0 * z0 * d[0];
  for (int k = 1; k < 4; ++k) d[k + 1] = -2.0 * double(k) * d[k - 1] - 2.0 * z0 * d[k];
  return compose<cxd, 4>(d, z);
}

// --------------------------------------------------------------------- Airy

namespace {

struct AiryPair {
  cxd v, d;  // value and derivative
};

// Re of (2/3) z^{3/2}; positive in the wedge around the positive real axis
// where Ai is exponentially recessive and the Maclaurin combination cancels.
double zeta_re(cxd z) {
  cxd s = std::sqrt(z);
  return ((2.0 / 3.0) * z * s).real();
}

// Maclaurin solutions of w'' = z w with (1,0) and (0,1) initial data.
void airy_series(cxd z, AiryPair& f, AiryPair& g) {
  f = {cxd(1, 0), cxd(0, 0)};
  g = {cxd(0, 0), cxd(1, 0)};
  cxd z3 = z * z * z;
  // f runs over z^{3k}, g over z^{3k+1}; derivatives reuse the same terms.
  cxd tf{1.0, 0.0};
  cxd tg = z;
  g.v = tg;
  for (int k = 1; k < 80; ++k) {
    double m = 3.0 * k;
    tf *= z3 / (m * (m - 1));
    f.v += tf;
    f.d += tf * (m / z);  // callers guarantee z != 0 here
    double mg = 3.0 * k + 1.0;
    tg *= z3 / (mg * (mg - 1));
    g.v += tg;
    g.d += tg * (mg / z);
    if (std::abs(tf) < 1e-18 * std::abs(f.v) && std::abs(tg) < 1e-18 * std::abs(g.v))
      break;
  }
}

constexpr double AI0 = 0.3550280538878172392600631860041831763980;
constexpr double AIP0 = -0.2588194037928067984051835601892039634793;

// Taylor coefficients of a w'' = z w solution about x0:
// c_{k+2} = (x0 c_k + c_{k-1}) / ((k+1)(k+2)).
template <int K>
std::array<double, K + 1> airy_coeffs(double x0, double w0, double w1) {
  std::array<double, K + 1> c{};
  c[0] = w0;
  c[1] = w1;
  for (int k = 0; k + 2 <= K; ++k)
    c[k + 2] = (x0 * c[k] + (k > 0 ? c[k - 1] : 0.0)) / ((k + 1.0) * (k + 2.0));
  return c;
}

AiryPair ai_asym(cxd z);

// The Maclaurin combination for Ai loses ~e^{2 Re zeta} digits to
// cancellation, which breaks the accuracy target on the positive-axis wedge
// well before the asymptotic series takes over. Bridge: (Ai, Ai') anchors on
// x = 4..9, marched inward from the asymptotic values at x = 9 (inward is the
// growing direction for Ai, so the march is stable), then complex Taylor
// lifts off the nearest anchor.
struct AiAnchor {
  double x, ai, aip;
};

const std::vector<AiAnchor>& ai_anchors() {
  static const std::vector<AiAnchor> table = [] {
    const int count = 21;  // x = 4 + 0.25 j
    std::vector<AiAnchor> v(count);
    AiryPair a = ai_asym(cxd(9.0, 0.0));
    v[count - 1] = {9.0, a.v.real(), a.d.real()};
    for (int j = count - 1; j > 0; --j) {
      double x0 = v[j].x;
      auto c = airy_coeffs<40>(x0, v[j].ai, v[j].aip);
      double s = -0.25, val = 0.0, der = 0.0;
      for (int k = 40; k >= 1; --k) {
        val = val * s + c[k];
        der = der * s + k * c[k];
      }
      val = val * s + c[0];
      v[j - 1] = {x0 + s, val, der};
    }
    return v;
  }();
  return table;
}

AiryPair ai_lift(cxd z) {
  const std::vector<AiAnchor>& t = ai_anchors();
  int j = (int)std::lround((z.real() - 4.0) / 0.25);
  j = std::min((int)t.size() - 1, std::max(0, j));
  auto c = airy_coeffs<48>(t[j].x, t[j].ai, t[j].aip);
  cxd dz = z - cxd(t[j].x, 0.0);
  cxd val{}, der{};
  for (int k = 48; k >= 1; --k) {
    val = val * dz + c[k];
    der = der * dz + double(k) * c[k];
  }
  val = val * dz + c[0];
  return {val, der};
}

AiryPair ai_small(cxd z) {
  if (z == cxd{}) return {cxd(AI0, 0), cxd(AIP0, 0)};
  if (zeta_re(z) > 6.0) return ai_lift(z);
  AiryPair f, g;
  airy_series(z, f, g);
  return {AI0 * f.v + AIP0 * g.v, AI0 * f.d + AIP0 * g.d};
}

// Bi is dominant on the positive axis, so the plain series carries it to the
// asymptotic handover without cancellation.
AiryPair bi_small(cxd z) {
  const double s3 = std::sqrt(3.0);
  if (z == cxd{}) return {cxd(s3 * AI0, 0), cxd(-s3 * AIP0, 0)};
  AiryPair f, g;
  airy_series(z, f, g);
  return {s3 * (AI0 * f.v - AIP0 * g.v), s3 * (AI0 * f.d - AIP0 * g.d)};
}

// Series/asymptotic handover radius. The Maclaurin side loses
// ~e^{(2/3)|z|^{3/2}} eps absolute to internal cancellation, the asymptotic
// side's optimally truncated tail shrinks like e^{-(4/3)|z|^{3/2}}; they
// balance near |z| = 7. Measured against GSL on the real axis the worst
// relative errors are 5e-11 for values and 7e-10 for first derivatives,
// both in a thin ring around the handover; elsewhere the routines sit at
// machine precision.
constexpr double switch_radius = 7.0;

// Asymptotic expansion, trustworthy for |arg z| <= 2pi/3 beyond the
// handover radius.
AiryPair ai_asym(cxd z) {
  cxd sz = std::sqrt(z);
  cxd zeta = (2.0 / 3.0) * z * sz;
  cxd izeta = 1.0 / zeta;
  cxd su{1.0, 0.0}, sv{1.0, 0.0};
  double uk = 1.0;
  double prev = HUGE_VAL;
  cxd run{1.0, 0.0};
  for (int k = 1; k < 40; ++k) {
    uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
    run *= -izeta;
    double vk = uk * (6.0 * k + 1) / (1.0 - 6.0 * k);
    cxd tu = uk * run;
    if (std::abs(tu) >= prev) break;  // divergent tail reached
    prev = std::abs(tu);
    su += tu;
    sv += vk * run;
    if (std::abs(tu) < 1e-18) break;
  }
  cxd z14 = std::sqrt(sz);  // z^{1/4}, principal
  cxd pre = std::exp(-zeta) / (2.0 * std::sqrt(pi));
  return {pre * su / z14, -pre * z14 * sv};
}

AiryPair ai_sector(cxd z) {
  if (std::abs(std::arg(z)) <= 2.0 * pi / 3.0 + 1e-14) return ai_asym(z);
  // Connection formula: Ai(z) = -e^{+2pi i/3} Ai(z e^{+2pi i/3})
  //                             -e^{-2pi i/3} Ai(z e^{-2pi i/3}),
  // both rotated arguments land in the direct sector.
  const cxd wp = std::polar(1.0, 2.0 * pi / 3.0);
  const cxd wm = std::conj(wp);
  AiryPair u = ai_asym(z * wp);
  AiryPair w = ai_asym(z * wm);
  AiryPair r;
  r.v = -wp * u.v - wm * w.v;
  r.d = -wp * wp * u.d - wm * wm * w.d;
  return r;
}

}  // namespace

AiryValues airy(cxd z) {
  AiryValues out;
  if (std::abs(z) <= switch_radius) {
    AiryPair a = ai_small(z);
    AiryPair b = bi_small(z);
    out.ai = a.v;
    out.aip = a.d;
    out.bi = b.v;
    out.bip = b.d;
    return out;
  }
  AiryPair a = ai_sector(z);
  out.ai = a.v;
  out.aip = a.d;
  // Bi(z) = e^{i pi/6} Ai(z e^{2pi i/3}) + e^{-i pi/6} Ai(z e^{-2pi i/3}).
  const cxd wp = std::polar(1.0, 2.0 * pi / 3.0);
  const cxd wm = std::conj(wp);
  AiryPair u = ai_sector(z * wp);
  AiryPair w = ai_sector(z * wm);
  const cxd ep = std::polar(1.0, pi / 6.0);
  const cxd em = std::conj(ep);
  out.bi = ep * u.v + em * w.v;
  out.bip = ep * wp * u.d + em * wm * w.d;
  return out;
}

namespace {

Jet4c airy_jet_from(const Jet4c& z, cxd w0, cxd w1) {
  cxd z0 = z.value();
  std::array<cxd, 5> d{};
  d[0] = w0;
  d[1] = w1;
  // w'' = z w  =>  w^{(k+2)} = z0 w^{(k)} + k w^{(k-1)}.
  for (int k = 0; k <= 2; ++k) d[k + 2] = z0 * d[k] + (k > 0 ? double(k) * d[k - 1] : cxd{});
  return compose<cxd, 4>(d, z);
}

}  // namespace

Jet4c airy_ai_jet(const Jet4c& z) {
  AiryValues v = airy(z.value());
  return airy_jet_from(z, v.ai, v.aip);
}

Jet4c airy_bi_jet(const Jet4c& z) {
  AiryValues v = airy(z.value());
  return airy_jet_from(z, v.bi, v.bip);
}

}  // namespace nhqm
