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

#ifndef QCES_BITS_H
#define QCES_BITS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qces {

/// Thrown when an operation would exceed a configured enumeration or search
/// cap. Callers that hit this should treat it as "too large", not "false".
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense bit vector over GF(2), packed 64 bits per word.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t size);

    static BitVector from_string(std::string_view bits);

    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(size_t index, bool value);
    void flip(size_t index) { words_[index >> 6] ^= uint64_t{1} << (index & 63); }

    /// Hamming weight: the number of one-bits.
    size_t weight() const;
    bool is_zero() const;

    /// Inner product mod 2.
    bool dot(const BitVector &other) const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector &other) const = default;

    /// Lexicographic order on the bit string (index 0 first).
    bool lex_less(const BitVector &other) const;

    std::string str() const;

    const std::vector<uint64_t> &words() const { return words_; }

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense 0/1 matrix with arithmetic mod 2. Row-major, bit-packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Rows given as strings of '0'/'1', all the same length.
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value);

    BitVector row(size_t r) const;
    BitVector col(size_t c) const;
    void set_row(size_t r, const BitVector &bits);
    void set_col(size_t c, const BitVector &bits);
    BitVector diagonal() const;

    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    BitMatrix transposed() const;
    BitVector mul(const BitVector &v) const;
    BitMatrix mul(const BitMatrix &other) const;

    bool is_zero() const;
    bool is_symmetric() const;

    bool operator==(const BitMatrix &other) const;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> words_;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Reduced row-echelon form over GF(2).
RrefResult rref(const BitMatrix &m);

/// Columns form a basis of ker(m). Basis vectors are ordered by ascending
/// free-column index; column count equals cols(m) - rank(m).
BitMatrix nullspace_basis(const BitMatrix &m);

struct GfSolution {
    BitVector solution;
    size_t solution_space_dim = 0;
};

/// Solves m*x = b. Free variables are fixed to 0, which makes the returned
/// solution deterministic. Empty when the system is inconsistent.
std::optional<GfSolution> solve_linear(const BitMatrix &m, const BitVector &b);

/// x^t m x as a GF(2) value.
bool quadratic_form_value(const BitMatrix &m, const BitVector &x);

/// Returns diag(m) iff m is symmetric mod 2, in which case
/// x^t m x == x . diag(m) for every x. Empty for asymmetric m.
std::optional<BitVector> linearize_quadratic_form(const BitMatrix &m);

/// Gray-code enumeration of ker(m) from a nullspace basis.
class KernelEnumerator {
   public:
    /// Throws CapExceeded when the kernel dimension exceeds dimension_cap.
    KernelEnumerator(const BitMatrix &m, size_t dimension_cap);

    size_t dimension() const { return basis_.size(); }
    uint64_t count() const { return uint64_t{1} << basis_.size(); }

    /// Calls f(const BitVector&) once per kernel element, starting from 0.
    void for_each(const std::function<void(const BitVector &)> &f) const;

   private:
    size_t length_;
    std::vector<BitVector> basis_;
};

}  // namespace qces

#endif
