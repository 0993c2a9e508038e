// Copyright 2026 The nlgate Authors
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

#pragma once

#include <vector>

#include "nlgate/operator.hpp"

namespace nlgate {

/// Normalized state vector with subsystem structure.
class PureState {
   public:
    /// Throws validation_error unless |amplitudes| = 1 within 1e-10 and the
    /// length equals prod(dims).
    PureState(Vector amplitudes, Dims dims);

    /// Normalizes first; throws domain_error for a zero vector.
    static PureState normalized(Vector amplitudes, Dims dims);

    const Vector &amplitudes() const noexcept { return amplitudes_; }
    const Dims &dims() const noexcept { return dims_; }

    Operator density() const { return projector(amplitudes_, dims_); }
    Complex inner(const PureState &other) const;

   private:
    Vector amplitudes_;
    Dims dims_;
};

PureState tensor(const PureState &a, const PureState &b);

/// Split of subsystem indices into two non-empty groups.
struct Bipartition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    /// left plus its complement in 0..n-1.
    static Bipartition from_left(std::vector<std::size_t> left, std::size_t n);
};

struct SchmidtForm {
    std::vector<double> coefficients;  // descending, positive
    Matrix left_vectors;               // column k pairs with coefficients[k]
    Matrix right_vectors;
    Bipartition cut;
    Dims left_dims;
    Dims right_dims;

    /// Sum_k c_k |l_k>|r_k>, in the natural subsystem order of the source state.
    Vector reconstruct() const;
};

/// (1/sqrt d) sum_i |i>|i> on d (x) d. Throws domain_error for d < 2.
PureState max_entangled(std::size_t d);

/// (1 (x) sigma_{i1,i2}) |Phi> on 2 (x) 2, with sigma_{1,1}=1, sigma_{1,2}=X,
/// sigma_{2,1}=Y, sigma_{2,2}=Z. Indices are 1-based.
PureState bell_state(int i1, int i2);

/// The Pauli attached to Bell index (i1, i2).
Operator bell_pauli(int i1, int i2);

/// cos(a)|Phi+>_{A1A2}|Phi+>_{B1B2} - i sin(a)|Psi+>_{A1A2}|Psi+>_{B1B2},
/// subsystems ordered A1 A2 B1 B2.
PureState resource_state(double alpha);

/// Schmidt decomposition across cut from the eigensystem of the reduced
/// state on the left group. Eigenvalues at or below kSchmidtCutoff are dropped.
SchmidtForm schmidt(const PureState &psi, const Bipartition &cut);

inline constexpr double kSchmidtCutoff = 1e-12;

/// -sum c_k^2 log2 c_k^2 (ebits).
double entropy_of_entanglement(const PureState &psi, const Bipartition &cut);

/// Binary entropy h(p) in bits, 0 log 0 = 0.
double binary_entropy(double p);

/// Closed form of E(resource_state(alpha)) across (A1A2)|(B1B2): h(cos^2 alpha).
double resource_entropy(double alpha);

}  // namespace nlgate
