// Copyright 2026 The imaginarity Authors
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

#ifndef IMAG_PURE_HPP
#define IMAG_PURE_HPP

#include "imag/monotone.hpp"
#include "imag/states.hpp"

namespace imag {

/// Conjugate overlap |<psi*|psi>| = |sum_m psi_m^2|, the pure-state
/// imaginarity coordinate. 1 on real-up-to-phase states, 0 on maximally
/// imaginary ones.
double overlap(const PureState& psi);

/// f(overlap(psi)).
double pure_measure(const MonotoneF& f, const PureState& psi);

/// The same overlap through the projector identity
/// |<psi*|psi>| = sqrt(1 - 2 sum_{m != n} (Im rho_mn)^2).
/// Throws NegativeRadicandError if the radicand drops below -1e-10.
double overlap_via_im_parts(const PureState& psi);

/// Real orthogonal rotation into the two-amplitude normal form:
/// rotation * (e^{i phase} psi) = sqrt((1+x)/2)|e1> + i sqrt((1-x)/2)|e2>.
struct CanonicalForm {
  RealMatrix rotation;
  double x = 0.0;      // conjugate overlap
  double phase = 0.0;  // the global phase angle applied to psi
};

/// Canonical form of a pure state with dim >= 2.
CanonicalForm canonical_form(const PureState& psi);

}  // namespace imag

#endif
