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

#include "qces/circuit.h"

#include <bit>
#include <cmath>
#include <complex>

namespace qces {

char PauliLabel::letter() const {
    if (z) {
        return x ? 'Y' : 'Z';
    }
    return x ? 'X' : 'I';
}

PauliLabel PauliLabel::from_letter(char c) {
    switch (c) {
        case 'I':
            return {false, false};
        case 'X':
            return {false, true};
        case 'Z':
            return {true, false};
        case 'Y':
            return {true, true};
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
    }
}

Gate::Gate(BitVector label) : label_(std::move(label)) {
    if (label_.size() % 2 != 0) {
        throw std::invalid_argument("gate label length must be even");
    }
}

Gate Gate::from_string(std::string_view paulis) {
    BitVector label(paulis.size() * 2);
    for (size_t i = 0; i < paulis.size(); i++) {
        PauliLabel p = PauliLabel::from_letter(paulis[i]);
        label.set(2 * i, p.z);
        label.set(2 * i + 1, p.x);
    }
    return Gate(std::move(label));
}

PauliLabel Gate::pauli(size_t qubit) const {
    return {label_.get(2 * qubit), label_.get(2 * qubit + 1)};
}

size_t Gate::y_count() const {
    size_t n = 0;
    for (size_t q = 0; q < qubit_count(); q++) {
        if (label_.get(2 * q) && label_.get(2 * q + 1)) {
            n++;
        }
    }
    return n;
}

size_t Gate::support_weight() const {
    size_t n = 0;
    for (size_t q = 0; q < qubit_count(); q++) {
        if (label_.get(2 * q) || label_.get(2 * q + 1)) {
            n++;
        }
    }
    return n;
}

std::string Gate::str() const {
    std::string s;
    s.reserve(qubit_count());
    for (size_t q = 0; q < qubit_count(); q++) {
        s.push_back(pauli(q).letter());
    }
    return s;
}

CircuitAngle CircuitAngle::from_lambda(double lambda) { return CircuitAngle(false, lambda); }

CircuitAngle CircuitAngle::from_theta(double theta) { return CircuitAngle(true, theta); }

double CircuitAngle::lambda() const { return is_theta_ ? std::tan(value_ / 2) : value_; }

std::optional<double> CircuitAngle::theta() const {
    if (is_theta_) {
        return value_;
    }
    return std::nullopt;
}

bool CircuitAngle::lambda_compatible() const {
    double l = lambda();
    return std::isfinite(l) && l > 0;
}

Circuit::Circuit(size_t qubit_count, std::vector<Gate> gates, CircuitAngle angle)
    : qubit_count_(qubit_count), gates_(std::move(gates)), angle_(angle) {
    for (const Gate &g : gates_) {
        if (g.qubit_count() != qubit_count_) {
            throw std::invalid_argument("gate qubit count does not match circuit");
        }
    }
}

HMatrix::HMatrix(BitMatrix bits) : bits_(std::move(bits)) {
    if (bits_.rows() % 2 != 0) {
        throw std::invalid_argument("H matrix must have an even number of rows");
    }
}

BitMatrix HMatrix::x_bit_rows() const {
    BitMatrix out(qubit_count(), gate_count());
    for (size_t q = 0; q < qubit_count(); q++) {
        for (size_t k = 0; k < gate_count(); k++) {
            if (bits_.get(2 * q + 1, k)) {
                out.set(q, k, true);
            }
        }
    }
    return out;
}

HMatrix h_matrix(const Circuit &c) {
    BitMatrix m(2 * c.qubit_count(), c.gate_count());
    for (size_t k = 0; k < c.gate_count(); k++) {
        m.set_col(k, c.gates()[k].label());
    }
    return HMatrix(std::move(m));
}

Circuit circuit_from_h(const HMatrix &h, CircuitAngle angle) {
    std::vector<Gate> gates;
    gates.reserve(h.gate_count());
    for (size_t k = 0; k < h.gate_count(); k++) {
        Gate g(h.column_label(k));
        if (!g.has_odd_y_count()) {
            throw std::invalid_argument("column " + std::to_string(k) +
                                        " has an even Y count; not a real gate");
        }
        gates.push_back(std::move(g));
    }
    return Circuit(h.qubit_count(), std::move(gates), angle);
}

BitMatrix c_matrix(size_t qubit_count) {
    BitMatrix c(2 * qubit_count, 2 * qubit_count);
    for (size_t q = 0; q < qubit_count; q++) {
        c.set(2 * q, 2 * q + 1, true);
    }
    return c;
}

namespace {
// b1^t C b2 = sum_i z1[i] * x2[i] mod 2.
bool c_pairing(const BitVector &b1, const BitVector &b2) {
    bool acc = false;
    for (size_t q = 0; q * 2 + 1 < b1.size(); q++) {
        if (b1.get(2 * q) && b2.get(2 * q + 1)) {
            acc = !acc;
        }
    }
    return acc;
}
}  // namespace

PauliProduct pauli_product(const BitVector &b1, const BitVector &b2) {
    if (b1.size() != b2.size()) {
        throw std::invalid_argument("pauli_product label length mismatch");
    }
    if (b1.size() % 2 != 0) {
        throw std::invalid_argument("pauli_product labels must have even length");
    }
    PauliProduct out;
    out.sign = c_pairing(b1, b2) ? -1 : 1;
    out.label = b1 ^ b2;
    return out;
}

BitMatrix q_matrix(const HMatrix &h) {
    size_t n = h.gate_count();
    std::vector<BitVector> labels;
    labels.reserve(n);
    for (size_t k = 0; k < n; k++) {
        labels.push_back(h.column_label(k));
    }
    BitMatrix q(n, n);
    for (size_t j = 1; j < n; j++) {
        for (size_t k = 0; k < j; k++) {
            if (c_pairing(labels[j], labels[k])) {
                q.set(j, k, true);
            }
        }
    }
    return q;
}

double simulate_amplitude(const Circuit &c, size_t qubit_cap) {
    size_t n = c.qubit_count();
    if (n > qubit_cap) {
        throw CapExceeded("qubit count " + std::to_string(n) + " exceeds cap " +
                          std::to_string(qubit_cap));
    }
    double lam = c.angle().lambda();
    double cos_half, sin_half;
    if (c.angle().given_as_theta()) {
        cos_half = std::cos(*c.angle().theta() / 2);
        sin_half = std::sin(*c.angle().theta() / 2);
    } else {
        double norm = std::sqrt(1 + lam * lam);
        cos_half = 1 / norm;
        sin_half = lam / norm;
    }

    using cd = std::complex<double>;
    std::vector<cd> psi(size_t{1} << n, cd(0, 0));
    psi[0] = cd(1, 0);
    std::vector<cd> next(psi.size());

    for (const Gate &g : c.gates()) {
        uint64_t flip_mask = 0;
        uint64_t phase_mask = 0;
        for (size_t q = 0; q < n; q++) {
            PauliLabel p = g.pauli(q);
            if (p.x) {
                flip_mask |= uint64_t{1} << q;
            }
            if (p.z) {
                phase_mask |= uint64_t{1} << q;
            }
        }
        size_t yc = g.y_count();
        // Coefficient of sigma_b |x>: -i * s * i^{yc}, with s the Y-count
        // orientation. Real (= +1) exactly when yc is odd.
        cd i_pow = (yc % 4 == 0)   ? cd(1, 0)
                   : (yc % 4 == 1) ? cd(0, 1)
                   : (yc % 4 == 2) ? cd(-1, 0)
                                   : cd(0, -1);
        double s = (yc % 4 == 3) ? -1.0 : 1.0;
        cd off_coeff = cd(0, -1) * s * sin_half * i_pow;

        for (size_t x = 0; x < psi.size(); x++) {
            next[x] = cos_half * psi[x];
        }
        for (size_t x = 0; x < psi.size(); x++) {
            double sign = (std::popcount(x & phase_mask) & 1) ? -1.0 : 1.0;
            next[x ^ flip_mask] += off_coeff * sign * psi[x];
        }
        std::swap(psi, next);
    }

    cd amp = psi[0];
    if (std::abs(amp.imag()) > 1e-12) {
        throw std::runtime_error("amplitude has imaginary part " +
                                 std::to_string(amp.imag()) +
                                 "; circuit is not a real-gate circuit");
    }
    return amp.real();
}

double expansion_amplitude(const HMatrix &h, double lambda, size_t nullity_cap) {
    if (!(lambda > 0)) {
        throw std::invalid_argument("expansion_amplitude requires lambda > 0");
    }
    BitMatrix q = q_matrix(h);
    KernelEnumerator kernel(h.x_bit_rows(), nullity_cap);
    double sum = 0;
    kernel.for_each([&](const BitVector &a) {
        double term = std::pow(lambda, static_cast<double>(a.weight()));
        sum += quadratic_form_value(q, a) ? -term : term;
    });
    double n_gates = static_cast<double>(h.gate_count());
    return sum * std::pow(lambda * lambda + 1, -n_gates / 2);
}

CircuitDiagnostics validate_real_circuit(const Circuit &c) {
    CircuitDiagnostics d;
    for (size_t k = 0; k < c.gate_count(); k++) {
        if (!c.gates()[k].has_odd_y_count()) {
            d.even_y_gates.push_back(k);
        }
    }
    d.lambda = c.angle().lambda();
    d.theta = c.angle().theta();
    d.angle_compatible = c.angle().lambda_compatible();
    d.physical = d.angle_compatible && d.lambda < 1;
    if (d.physical) {
        d.beta_j = std::atanh(d.lambda);
    }
    return d;
}

}  // namespace qces
