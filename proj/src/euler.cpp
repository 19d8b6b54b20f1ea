// Copyright 2026 The VAns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "vans/euler.hpp"

#include <cmath>
#include <numbers>

namespace vans {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-14;
using cplx = std::complex<double>;
} // namespace

Mat2x2 rotation_matrix(GateKind axis, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    if (axis == GateKind::RotZ) {
        return {cplx{c, -s}, 0.0, 0.0, cplx{c, s}};
    }
    return {cplx{c, 0.0}, cplx{0.0, -s}, cplx{0.0, -s}, cplx{c, 0.0}};
}

Mat2x2 matmul(const Mat2x2 &a, const Mat2x2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double normalize_angle(double theta) {
    constexpr double period = 4.0 * kPi;
    double r = std::fmod(theta, period);
    if (r <= -2.0 * kPi) {
        r += period;
    } else if (r > 2.0 * kPi) {
        r -= period;
    }
    return r;
}

namespace {

// H m H swaps the roles of Z and X.
Mat2x2 hadamard_conjugate(const Mat2x2 &m) {
    // H = [[1,1],[1,-1]]/sqrt2; H m H = 0.5 * [[a+b+c+d, a-b+c-d], [a+b-c-d, a-b-c+d]]
    const cplx a = m[0], b = m[1], c = m[2], d = m[3];
    return {0.5 * (a + b + c + d), 0.5 * (a - b + c - d),
            0.5 * (a + b - c - d), 0.5 * (a - b - c + d)};
}

double max_diff(const Mat2x2 &x, const Mat2x2 &y, double sign) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(x[i] - sign * y[i]));
    }
    return d;
}

// m = Rz(last) Rx(middle) Rz(first)
EulerAngles zxz(const Mat2x2 &m) {
    const cplx alpha = m[0];
    const cplx beta = m[2];
    EulerAngles e;
    e.middle = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
    double sum = 0.0;  // first + last
    double diff = 0.0; // last - first
    if (std::abs(alpha) > kTiny) {
        sum = -2.0 * std::arg(alpha);
    }
    if (std::abs(beta) > kTiny) {
        diff = 2.0 * std::arg(beta) + kPi;
    }
    e.first = 0.5 * (sum - diff);
    e.last = 0.5 * (sum + diff);

    const Mat2x2 rebuilt =
        matmul(rotation_matrix(GateKind::RotZ, e.last),
               matmul(rotation_matrix(GateKind::RotX, e.middle),
                      rotation_matrix(GateKind::RotZ, e.first)));
    if (max_diff(rebuilt, m, -1.0) < max_diff(rebuilt, m, 1.0)) {
        e.first += 2.0 * kPi; // Rz(t + 2 pi) = -Rz(t)
    }
    e.first = normalize_angle(e.first);
    e.middle = normalize_angle(e.middle);
    e.last = normalize_angle(e.last);
    return e;
}

} // namespace

EulerAngles euler_decompose(const Mat2x2 &m, GateKind outer_axis) {
    if (outer_axis == GateKind::RotZ) {
        return zxz(m);
    }
    return zxz(hadamard_conjugate(m));
}

} // namespace vans
