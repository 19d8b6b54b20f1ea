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
// Single-qubit rotation algebra used by the fusion rules.
#pragma once

#include "vans/circuit.hpp"

#include <array>
#include <complex>

namespace vans {

using Mat2x2 = std::array<std::complex<double>, 4>; // row-major

[[nodiscard]] Mat2x2 rotation_matrix(GateKind axis, double theta);
[[nodiscard]] Mat2x2 matmul(const Mat2x2 &a, const Mat2x2 &b);

/// Angles in circuit order: outer(first), inner(middle), outer(last).
struct EulerAngles {
    double first = 0.0;
    double middle = 0.0;
    double last = 0.0;
};

/**
 * Decomposes an SU(2) matrix as the gate sequence [outer(first),
 * inner(middle), outer(last)], where outer is `outer_axis` (RotZ or RotX)
 * and inner is the other axis. The reconstruction equals `m` exactly,
 * including sign.
 */
[[nodiscard]] EulerAngles euler_decompose(const Mat2x2 &m, GateKind outer_axis);

/// Maps an angle into (-2 pi, 2 pi]. Rotations are 4 pi periodic, so this
/// never changes the gate.
[[nodiscard]] double normalize_angle(double theta);

} // namespace vans
