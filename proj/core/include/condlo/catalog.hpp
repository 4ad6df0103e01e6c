// Copyright 2026 The condlo Authors
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

#pragma once

// Ready-made devices from the linear-optics literature.

#include "condlo/device.hpp"

namespace condlo {

/// Nonlinear sign gate: one computational mode ("1") and two ancilla modes
/// ("2", "3") mapped to outputs ("a"; "b", "c"). One ancilla photon enters
/// mode 2; success is exactly one photon in b and none in c. The
/// computational subspace is {|0>, |1>, |2>}, or {|0>..|3>} when `extended`.
ConditionalDevice build_klm_ns(bool extended = false);

/// Polarization-encoded CNOT with feed-forward. Twelve modes named "H_x" and
/// "V_x" for input ports a, b, 1-4 and output ports 5, 6, p, q, n, m. A
/// four-photon entangled ancilla, 16 single-ket outcomes |F/S>_p |F/S>_q
/// |F/S>_n |F/S>_m (outcome index read as a 4-bit counter over p, q, n, m
/// with F = 0) and diagonal +-1 corrections on the logical output basis.
ConditionalDevice build_cnot_pittman();

/// |H_a>|H_b>|H_b>: one extra photon in the CNOT's target input.
DensityOperator special_state_S();

}  // namespace condlo
