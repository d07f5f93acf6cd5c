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

#include <algorithm>
#include <cstdio>

#include "gkpsim/circuit.h"
#include "gkpsim/error.h"
#include "overloaded.h"

namespace gkpsim {

namespace {

void check_mode(int mode, size_t n) {
    if (mode < 1 || static_cast<size_t>(mode) > n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "mode index " + std::to_string(mode) + " outside 1.." + std::to_string(n));
    }
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void check_gate(const Gate &gate, size_t n) {
    std::visit(overloaded{
                   [&](const Sum &g) {
                       check_mode(g.control, n);
                       check_mode(g.target, n);
                       if (g.control == g.target) {
                           throw Error(ErrorCode::Domain, "SUM control and target must differ");
                       }
                   },
                   [&](const Squeeze &g) {
                       check_mode(g.mode, n);
                       if (g.s.is_zero()) {
                           throw Error(ErrorCode::Domain, "zero squeeze");
                       }
                   },
                   [&](const auto &g) { check_mode(g.mode, n); },
               },
               gate);
}

}  // namespace

void validate_circuit(const Circuit &circ) {
    if (circ.n < 1) {
        throw Error(ErrorCode::Domain, "circuit needs at least one mode");
    }
    size_t n = static_cast<size_t>(circ.n);
    for (const Gate &g : circ.gates) {
        check_gate(g, n);
    }
    if (circ.measured.empty()) {
        throw Error(ErrorCode::Domain, "no measured modes");
    }
    for (size_t k = 0; k < circ.measured.size(); k++) {
        check_mode(circ.measured[k], n);
        for (size_t l = 0; l < k; l++) {
            if (circ.measured[l] == circ.measured[k]) {
                throw Error(ErrorCode::Domain, "mode " + std::to_string(circ.measured[k]) + " measured twice");
            }
        }
    }
}

std::string gate_str(const Gate &gate) {
    return std::visit(overloaded{
                          [](const Rotation &g) { return "R " + std::to_string(g.mode) + " " + angle_str(g.angle); },
                          [](const Fourier &g) { return "F " + std::to_string(g.mode); },
                          [](const Squeeze &g) { return "S " + std::to_string(g.mode) + " " + g.s.str(); },
                          [](const Shear &g) { return "P " + std::to_string(g.mode) + " " + g.sigma.str(); },
                          [](const Sum &g) { return "SUM " + std::to_string(g.control) + " " + std::to_string(g.target); },
                          [](const DisplaceQ &g) { return "DQ " + std::to_string(g.mode) + " " + format_double(g.c); },
                          [](const DisplaceP &g) { return "DP " + std::to_string(g.mode) + " " + format_double(g.c); },
                      },
                      gate);
}

bool operator==(const Gate &lhs, const Gate &rhs) {
    if (lhs.index() != rhs.index()) {
        return false;
    }
    return std::visit(overloaded{
                          [&](const Rotation &g) {
                              const auto &o = std::get<Rotation>(rhs);
                              return g.mode == o.mode && g.angle == o.angle;
                          },
                          [&](const Fourier &g) { return g.mode == std::get<Fourier>(rhs).mode; },
                          [&](const Squeeze &g) {
                              const auto &o = std::get<Squeeze>(rhs);
                              return g.mode == o.mode && g.s == o.s;
                          },
                          [&](const Shear &g) {
                              const auto &o = std::get<Shear>(rhs);
                              return g.mode == o.mode && g.sigma == o.sigma;
                          },
                          [&](const Sum &g) {
                              const auto &o = std::get<Sum>(rhs);
                              return g.control == o.control && g.target == o.target;
                          },
                          [&](const DisplaceQ &g) {
                              const auto &o = std::get<DisplaceQ>(rhs);
                              return g.mode == o.mode && g.c == o.c;
                          },
                          [&](const DisplaceP &g) {
                              const auto &o = std::get<DisplaceP>(rhs);
                              return g.mode == o.mode && g.c == o.c;
                          },
                      },
                      lhs);
}

LinearQuadratureForm LinearQuadratureForm::position(size_t n, int mode) {
    check_mode(mode, n);
    LinearQuadratureForm form;
    form.a.assign(n, 0.0);
    form.b.assign(n, 0.0);
    form.exact_a.assign(n, Surd());
    form.exact_b.assign(n, Surd());
    form.a[mode - 1] = 1.0;
    form.exact_a[mode - 1] = Surd(1);
    return form;
}

LinearQuadratureForm LinearQuadratureForm::from_values(std::vector<double> a, std::vector<double> b, double c) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::ModeMismatch, "a and b must have the same length");
    }
    LinearQuadratureForm form;
    for (size_t i = 0; i < a.size(); i++) {
        form.exact_a.push_back(Surd(Rational::from_double(a[i])));
        form.exact_b.push_back(Surd(Rational::from_double(b[i])));
    }
    form.a = std::move(a);
    form.b = std::move(b);
    form.c = c;
    return form;
}

std::vector<std::optional<Rational>> LinearQuadratureForm::witnesses() const {
    std::vector<std::optional<Rational>> out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        if (i < exact_a.size() && i < exact_b.size() && exact_a[i] && exact_b[i] && !exact_b[i]->is_zero()) {
            out[i] = (-*exact_a[i]).try_ratio(*exact_b[i]);
        }
    }
    return out;
}

LinearQuadratureForm apply_gate_adjoint(const LinearQuadratureForm &form, const Gate &gate) {
    size_t n = form.num_modes();
    check_gate(gate, n);
    LinearQuadratureForm out = form;
    if (out.exact_a.size() != n || out.exact_b.size() != n) {
        out.exact_a.assign(n, std::nullopt);
        out.exact_b.assign(n, std::nullopt);
    }
    std::visit(overloaded{
                   [&](const Rotation &g) {
                       size_t i = g.mode - 1;
                       double c = angle_cos(g.angle);
                       double s = angle_sin(g.angle);
                       ExactValue ec = angle_cos_exact(g.angle);
                       ExactValue es = angle_sin_exact(g.angle);
                       out.a[i] = form.a[i] * c + form.b[i] * s;
                       out.b[i] = -form.a[i] * s + form.b[i] * c;
                       ExactValue ea = out.exact_a[i];
                       ExactValue eb = out.exact_b[i];
                       out.exact_a[i] = exact_add(exact_mul(ea, ec), exact_mul(eb, es));
                       out.exact_b[i] = exact_add(exact_neg(exact_mul(ea, es)), exact_mul(eb, ec));
                   },
                   [&](const Fourier &g) {
                       size_t i = g.mode - 1;
                       out.a[i] = form.b[i];
                       out.b[i] = -form.a[i];
                       std::swap(out.exact_a[i], out.exact_b[i]);
                       out.exact_b[i] = exact_neg(out.exact_b[i]);
                   },
                   [&](const Squeeze &g) {
                       size_t i = g.mode - 1;
                       out.a[i] = form.a[i] * g.s.to_double();
                       out.b[i] = form.b[i] / g.s.to_double();
                       out.exact_a[i] = exact_mul(out.exact_a[i], Surd(g.s));
                       out.exact_b[i] = exact_mul(out.exact_b[i], Surd(Rational(1) / g.s));
                   },
                   [&](const Shear &g) {
                       size_t i = g.mode - 1;
                       out.a[i] = form.a[i] + g.sigma.to_double() * form.b[i];
                       out.exact_a[i] = exact_add(out.exact_a[i], exact_mul(Surd(g.sigma), out.exact_b[i]));
                   },
                   [&](const Sum &g) {
                       size_t j = g.control - 1;
                       size_t k = g.target - 1;
                       out.a[j] = form.a[j] + form.a[k];
                       out.b[k] = form.b[k] - form.b[j];
                       out.exact_a[j] = exact_add(out.exact_a[j], out.exact_a[k]);
                       out.exact_b[k] = exact_add(out.exact_b[k], exact_neg(out.exact_b[j]));
                   },
                   [&](const DisplaceQ &g) {
                       if (form.a[g.mode - 1] != 0.0) {
                           out.c = form.c + form.a[g.mode - 1] * g.c;
                       }
                   },
                   [&](const DisplaceP &g) {
                       if (form.b[g.mode - 1] != 0.0) {
                           out.c = form.c + form.b[g.mode - 1] * g.c;
                       }
                   },
               },
               gate);
    return out;
}

LinearQuadratureForm track_measurement_operator(const Circuit &circ, int j) {
    if (std::find(circ.measured.begin(), circ.measured.end(), j) == circ.measured.end()) {
        throw Error(ErrorCode::Domain, "mode " + std::to_string(j) + " is not measured");
    }
    LinearQuadratureForm form = LinearQuadratureForm::position(static_cast<size_t>(circ.n), j);
    for (auto it = circ.gates.rbegin(); it != circ.gates.rend(); ++it) {
        form = apply_gate_adjoint(form, *it);
    }
    return form;
}

SymplecticTransform gate_transform(const Gate &gate, size_t n) {
    check_gate(gate, n);
    SymplecticTransform id = SymplecticTransform::identity(n);
    Matrix m = id.matrix();
    Vector d = id.displacement();
    std::vector<ExactValue> exact = id.exact_entries();
    size_t dim = 2 * n;
    auto set = [&](size_t r, size_t c, double value, const ExactValue &ev) {
        m(r, c) = value;
        exact[r * dim + c] = ev;
    };
    std::visit(overloaded{
                   [&](const Rotation &g) {
                       size_t i = g.mode - 1;
                       double c = angle_cos(g.angle);
                       double s = angle_sin(g.angle);
                       ExactValue ec = angle_cos_exact(g.angle);
                       ExactValue es = angle_sin_exact(g.angle);
                       set(i, i, c, ec);
                       set(i, n + i, -s, exact_neg(es));
                       set(n + i, i, s, es);
                       set(n + i, n + i, c, ec);
                   },
                   [&](const Fourier &g) {
                       size_t i = g.mode - 1;
                       set(i, i, 0.0, Surd());
                       set(i, n + i, -1.0, Surd(-1));
                       set(n + i, i, 1.0, Surd(1));
                       set(n + i, n + i, 0.0, Surd());
                   },
                   [&](const Squeeze &g) {
                       size_t i = g.mode - 1;
                       Rational inv = Rational(1) / g.s;
                       set(i, i, g.s.to_double(), Surd(g.s));
                       set(n + i, n + i, inv.to_double(), Surd(inv));
                   },
                   [&](const Shear &g) {
                       size_t i = g.mode - 1;
                       set(n + i, i, g.sigma.to_double(), Surd(g.sigma));
                   },
                   [&](const Sum &g) {
                       size_t j = g.control - 1;
                       size_t k = g.target - 1;
                       set(k, j, 1.0, Surd(1));
                       set(n + j, n + k, -1.0, Surd(-1));
                   },
                   [&](const DisplaceQ &g) { d(g.mode - 1) = g.c; },
                   [&](const DisplaceP &g) { d(n + g.mode - 1) = g.c; },
               },
               gate);
    return SymplecticTransform(std::move(m), std::move(d), std::move(exact));
}

SymplecticTransform circuit_to_symplectic(const Circuit &circ) {
    size_t n = static_cast<size_t>(circ.n);
    SymplecticTransform total = SymplecticTransform::identity(n);
    for (const Gate &g : circ.gates) {
        total = compose(gate_transform(g, n), total);
    }
    return total;
}

}  // namespace gkpsim
