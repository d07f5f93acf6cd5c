// Copyright 2026 The gkpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkpsim/angle.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gkpsim/error.h"
#include "overloaded.h"

namespace gkpsim {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

double angle_radians(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) {
                              // theta in (0, pi) with cot theta = u/v, v > 0.
                              return std::atan2(c.cot.den().get_d(), c.cot.num().get_d());
                          },
                          [](const PiMultiple &p) { return static_cast<double>(p.k) * std::numbers::pi; },
                          [](const Radians &r) { return r.value; },
                      },
                      angle);
}

double angle_cos(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) {
                              double u = c.cot.num().get_d();
                              double v = c.cot.den().get_d();
                              return u / std::hypot(u, v);
                          },
                          [](const PiMultiple &p) { return p.k % 2 == 0 ? 1.0 : -1.0; },
                          [](const Radians &r) { return std::cos(r.value); },
                      },
                      angle);
}

double angle_sin(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) {
                              double u = c.cot.num().get_d();
                              double v = c.cot.den().get_d();
                              return v / std::hypot(u, v);
                          },
                          [](const PiMultiple &) { return 0.0; },
                          [](const Radians &r) { return std::sin(r.value); },
                      },
                      angle);
}

ExactValue angle_cos_exact(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) -> ExactValue {
                              const Integer &u = c.cot.num();
                              const Integer &v = c.cot.den();
                              Integer norm = u * u + v * v;
                              return Surd(reduce_fraction(u, norm), norm);
                          },
                          [](const PiMultiple &p) -> ExactValue { return Surd(p.k % 2 == 0 ? 1 : -1); },
                          [](const Radians &) -> ExactValue { return std::nullopt; },
                      },
                      angle);
}

ExactValue angle_sin_exact(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) -> ExactValue {
                              const Integer &u = c.cot.num();
                              const Integer &v = c.cot.den();
                              Integer norm = u * u + v * v;
                              return Surd(reduce_fraction(v, norm), norm);
                          },
                          [](const PiMultiple &) -> ExactValue { return Surd(0); },
                          [](const Radians &) -> ExactValue { return std::nullopt; },
                      },
                      angle);
}

std::string angle_str(const AngleSpec &angle) {
    return std::visit(overloaded{
                          [](const CotRational &c) {
                              return "cot " + c.cot.num().get_str() + "/" + c.cot.den().get_str();
                          },
                          [](const PiMultiple &p) { return "pi " + std::to_string(p.k); },
                          [](const Radians &r) { return "rad " + format_double(r.value); },
                      },
                      angle);
}

bool operator==(const AngleSpec &lhs, const AngleSpec &rhs) {
    if (lhs.index() != rhs.index()) {
        return false;
    }
    return std::visit(overloaded{
                          [&](const CotRational &c) { return c.cot == std::get<CotRational>(rhs).cot; },
                          [&](const PiMultiple &p) { return p.k == std::get<PiMultiple>(rhs).k; },
                          [&](const Radians &r) { return r.value == std::get<Radians>(rhs).value; },
                      },
                      lhs);
}

bool in_theta(const ThetaClass &cls) {
    return !std::holds_alternative<NotInTheta>(cls);
}

std::string theta_class_str(const ThetaClass &cls) {
    return std::visit(overloaded{
                          [](const Case1 &c) { return "case1(" + c.u.get_str() + "/" + c.v.get_str() + ")"; },
                          [](const Case2 &) { return std::string("case2"); },
                          [](const NotInTheta &n) { return "not-in-theta(" + n.reason + ")"; },
                      },
                      cls);
}

std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x) || std::fabs(x) > 1e15) {
        return std::nullopt;
    }
    // Convergents h_k / k_k of the continued fraction of x.
    Integer h_prev = 1, h_prev2 = 0;
    Integer k_prev = 0, k_prev2 = 1;
    long double rest = x;
    for (int iter = 0; iter < 64; iter++) {
        long double whole = std::floor(rest);
        Integer a(static_cast<double>(whole));
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        if (k > max_den) {
            return std::nullopt;
        }
        Rational candidate = reduce_fraction(h, k);
        if (std::fabs(x - candidate.to_double()) <= tol) {
            return candidate;
        }
        long double frac = rest - whole;
        if (frac == 0) {
            return std::nullopt;
        }
        rest = 1 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

ThetaClass classify_cot(const Rational &cot) {
    if (mpz_odd_p(cot.den().get_mpz_t())) {
        return Case1{cot.num(), cot.den()};
    }
    return NotInTheta{"even denominator"};
}

ThetaClass classify_angle(const AngleSpec &angle, const ReconstructionPolicy &recon) {
    return std::visit(overloaded{
                          [](const CotRational &c) -> ThetaClass { return classify_cot(c.cot); },
                          [](const PiMultiple &) -> ThetaClass { return Case2{}; },
                          [&](const Radians &r) -> ThetaClass {
                              if (!recon.allow_float) {
                                  return NotInTheta{"floating-point angle; reconstruction not enabled"};
                              }
                              double off = std::remainder(r.value, std::numbers::pi);
                              if (std::fabs(off) <= recon.tol) {
                                  return Case2{};
                              }
                              double cot = std::cos(r.value) / std::sin(r.value);
                              auto rational = reconstruct_rational(cot, recon.max_den, recon.tol);
                              if (!rational) {
                                  return NotInTheta{"no rational reconstruction of the cotangent"};
                              }
                              return classify_cot(*rational);
                          },
                      },
                      angle);
}

double peak_spacing(const ThetaClass &cls) {
    return std::visit(overloaded{
                          [](const Case1 &c) {
                              double u = c.u.get_d();
                              double v = c.v.get_d();
                              return 1.0 / std::hypot(u, v);
                          },
                          [](const Case2 &) { return 2.0; },
                          [](const NotInTheta &n) -> double {
                              throw Error(ErrorCode::NotSimulatable, "angle is not in the simulatable set: " + n.reason);
                          },
                      },
                      cls);
}

}  // namespace gkpsim
