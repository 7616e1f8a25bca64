// bessel.hpp - Bessel function J1 via the Cephes rational minimax
// approximations (Moshier, public-domain coefficients). Absolute error is
// below 1e-14 for |x| <= 50, which is what the antenna pattern needs.
#pragma once

#include <cmath>

namespace rfisim {

namespace detail {

inline double polevl(double x, const double* c, int degree) {
  double r = c[0];
  for (int i = 1; i <= degree; ++i) r = r * x + c[i];
  return r;
}

// Same, with an implied leading coefficient of 1.
inline double p1evl(double x, const double* c, int degree) {
  double r = x + c[0];
  for (int i = 1; i < degree; ++i) r = r * x + c[i];
  return r;
}

}  // namespace detail

// First-order Bessel function of the first kind.
inline double bessel_j1(double x) {
  static constexpr double RP[4] = {
      -8.99971225705559398224e8,
      4.52228297998194034323e11,
      -7.27494245221818276015e13,
      3.68295732863852883286e15,
  };
  static constexpr double RQ[8] = {
      6.20836478118054335476e2,
      2.56987256757748830383e5,
      8.35146791431949253037e7,
      2.21511595479792499675e10,
      4.74914122079991414898e12,
      7.84369607876235854894e14,
      8.95222336184627338078e16,
      5.32278620332680085395e18,
  };
  static constexpr double PP[7] = {
      7.62125616208173112003e-4,
      7.31397056940917570436e-2,
      1.12719608129684925192e0,
      5.11207951146807644818e0,
      8.42404590141772420927e0,
      5.21451598682361504063e0,
      1.00000000000000000254e0,
  };
  static constexpr double PQ[7] = {
      5.71323128072548699714e-4,
      6.88455908754495404082e-2,
      1.10514232634061696926e0,
      5.07386386128601488557e0,
      8.39985554327604159757e0,
      5.20982848682361821619e0,
      9.99999999999999997461e-1,
  };
  static constexpr double QP[8] = {
      5.10862594750176621635e-2,
      4.98213872951233449420e0,
      7.58238284132545283818e1,
      3.66779609360150777800e2,
      7.10856304998926107277e2,
      5.97489612400613639965e2,
      2.11688757100572135698e2,
      2.52070205858023719784e1,
  };
  static constexpr double QQ[7] = {
      7.42373277035675149943e1,
      1.05644886038262816351e3,
      4.98641058337653607651e3,
      9.56231892404756170795e3,
      7.99704160447350683650e3,
      2.82619278517639096600e3,
      3.36093607810698293419e2,
  };
  // Squares of the first two zeros of J1.
  static constexpr double Z1 = 1.46819706421238932572e1;
  static constexpr double Z2 = 4.92184563216946036703e1;
  static constexpr double THREE_PI_OVER_4 = 2.35619449019234492885;
  static constexpr double SQRT_2_OVER_PI = 0.79788456080286535588;

  const double w = std::fabs(x);
  if (w <= 5.0) {
    const double z = x * x;
    double r = detail::polevl(z, RP, 3) / detail::p1evl(z, RQ, 8);
    return r * x * (z - Z1) * (z - Z2);
  }
  const double five_over_w = 5.0 / w;
  const double z = five_over_w * five_over_w;
  const double p = detail::polevl(z, PP, 6) / detail::polevl(z, PQ, 6);
  const double q = detail::polevl(z, QP, 7) / detail::p1evl(z, QQ, 7);
  const double xn = w - THREE_PI_OVER_4;
  const double r =
      (p * std::cos(xn) - five_over_w * q * std::sin(xn)) * SQRT_2_OVER_PI / std::sqrt(w);
  return x < 0.0 ? -r : r;  // J1 is odd
}

}  // namespace rfisim
