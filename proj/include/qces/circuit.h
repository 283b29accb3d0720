// Copyright 2026 The qces Authors
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

#ifndef QCES_CIRCUIT_H
#define QCES_CIRCUIT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qces/bits.h"

namespace qces {

// Each qubit slot of a gate label is a 2-bit Pauli code (z, x):
//   (0,0) -> I   (0,1) -> X   (1,0) -> Z   (1,1) -> Y
// A gate label is the concatenation of these pairs; bit 2i is the z bit of
// qubit i and bit 2i+1 is the x bit.
struct PauliLabel {
    bool z = false;
    bool x = false;

    char letter() const;
    static PauliLabel from_letter(char c);
};

/// A rotation about a tensor product of Pauli operators. Real-gate circuits
/// require an odd number of Y factors per gate.
class Gate {
   public:
    explicit Gate(BitVector label);
    /// Builds a gate from a string over {I,X,Y,Z}, qubit 0 leftmost.
    static Gate from_string(std::string_view paulis);

    size_t qubit_count() const { return label_.size() / 2; }
    const BitVector &label() const { return label_; }
    PauliLabel pauli(size_t qubit) const;
    size_t y_count() const;
    bool has_odd_y_count() const { return y_count() & 1; }
    size_t support_weight() const;
    std::string str() const;

    bool operator==(const Gate &other) const = default;

   private:
    BitVector label_;
};

/// Gate angle, given either directly as lambda = tan(theta/2) or as theta.
/// All gates of a circuit share one angle.
class CircuitAngle {
   public:
    static CircuitAngle from_lambda(double lambda);
    static CircuitAngle from_theta(double theta);

    bool given_as_theta() const { return is_theta_; }
    /// tan(theta/2) when constructed from theta.
    double lambda() const;
    std::optional<double> theta() const;
    /// True when lambda > 0, i.e. theta mod 4*pi lies in (0,pi) u (2pi,3pi).
    bool lambda_compatible() const;

    bool operator==(const CircuitAngle &other) const = default;

   private:
    CircuitAngle(bool is_theta, double value) : is_theta_(is_theta), value_(value) {}
    bool is_theta_ = false;
    double value_ = 0;
};

class Circuit {
   public:
    Circuit(size_t qubit_count, std::vector<Gate> gates, CircuitAngle angle);

    size_t qubit_count() const { return qubit_count_; }
    size_t gate_count() const { return gates_.size(); }
    const std::vector<Gate> &gates() const { return gates_; }
    const CircuitAngle &angle() const { return angle_; }

    bool operator==(const Circuit &other) const = default;

   private:
    size_t qubit_count_;
    std::vector<Gate> gates_;
    CircuitAngle angle_;
};

/// 2n x N bit matrix whose k-th column is gate k's label. Bijective with the
/// gate list; the angle is carried separately.
class HMatrix {
   public:
    explicit HMatrix(BitMatrix bits);

    size_t qubit_count() const { return bits_.rows() / 2; }
    size_t gate_count() const { return bits_.cols(); }
    const BitMatrix &bits() const { return bits_; }
    BitVector column_label(size_t k) const { return bits_.col(k); }

    /// The n x N submatrix of x bits (rows 2i+1). Its kernel equals the
    /// kernel used by the expansion amplitude.
    BitMatrix x_bit_rows() const;

    bool operator==(const HMatrix &other) const = default;

   private:
    BitMatrix bits_;
};

HMatrix h_matrix(const Circuit &c);
/// Inverse of h_matrix. Throws std::invalid_argument on a column with an
/// even Y count (not a real gate).
Circuit circuit_from_h(const HMatrix &h, CircuitAngle angle);

/// Block-diagonal matrix with 2x2 blocks [[0,1],[0,0]], one per qubit.
/// b^t C b equals the Y-count parity of the label b.
BitMatrix c_matrix(size_t qubit_count);

struct PauliProduct {
    int sign = 1;  // +1 or -1
    BitVector label;
};

/// Multiplication rule for the real Pauli operators:
/// sigma~_{b1} sigma~_{b2} = (-1)^{b1^t C b2} sigma~_{b1 xor b2}.
PauliProduct pauli_product(const BitVector &b1, const BitVector &b2);

/// Strictly lower triangular part of H^t C H: Q[j][k] = b_j^t C b_k for
/// j > k, zero elsewhere (zero diagonal). Generates the expansion signs.
BitMatrix q_matrix(const HMatrix &h);

/// <0...0| g_N ... g_1 |0...0> by dense statevector simulation, applying
/// each gate as the complex unitary exp(-i s theta/2 sigma_b) where the
/// orientation s follows the Y-count convention (+1 for 1 mod 4, -1 for
/// 3 mod 4). Real circuits give a real value; a residual imaginary part
/// above 1e-12 throws (it would indicate a sign-convention bug).
double simulate_amplitude(const Circuit &c, size_t qubit_cap = 20);

/// Same matrix element from the gate expansion:
///   (lambda^2+1)^{-N/2} * sum_{a in ker CH} (-1)^{a^t Q a} lambda^{|a|}.
/// One factor of lambda accompanies each picked sigma~ (each set bit of a).
double expansion_amplitude(const HMatrix &h, double lambda, size_t nullity_cap = 24);

struct CircuitDiagnostics {
    std::vector<size_t> even_y_gates;  // indices of gates violating odd-Y
    bool angle_compatible = false;     // lambda > 0
    double lambda = 0;
    std::optional<double> theta;
    bool physical = false;  // lambda < 1, so beta*J = atanh(lambda) is real
    std::optional<double> beta_j;

    bool real_circuit() const { return even_y_gates.empty(); }
};

CircuitDiagnostics validate_real_circuit(const Circuit &c);

}  // namespace qces

#endif
