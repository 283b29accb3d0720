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

#include "qces/bits.h"

#include <bit>

namespace qces {

namespace {
constexpr size_t words_for(size_t bits) { return (bits + 63) >> 6; }
}  // namespace

BitVector::BitVector(size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        char c = bits[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain 0 and 1");
        }
        v.set(i, c == '1');
    }
    return v;
}

void BitVector::set(size_t index, bool value) {
    if (index >= size_) {
        throw std::out_of_range("BitVector::set index out of range");
    }
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BitVector::dot(const BitVector &other) const {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitVector::dot size mismatch");
    }
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitVector::operator^= size mismatch");
    }
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

bool BitVector::lex_less(const BitVector &other) const {
    if (size_ != other.size_) {
        return size_ < other.size_;
    }
    for (size_t i = 0; i < words_.size(); i++) {
        uint64_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            uint64_t lowest = diff & (~diff + 1);
            return (words_[i] & lowest) == 0;
        }
    }
    return false;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), nc);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != nc) {
            throw std::invalid_argument("BitMatrix::from_rows ragged rows");
        }
        for (size_t c = 0; c < nc; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("BitMatrix::from_rows bad character");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("BitMatrix::set index out of range");
    }
    uint64_t mask = uint64_t{1} << (c & 63);
    if (value) {
        words_[r * stride_ + (c >> 6)] |= mask;
    } else {
        words_[r * stride_ + (c >> 6)] &= ~mask;
    }
}

BitVector BitMatrix::row(size_t r) const {
    BitVector v(cols_);
    for (size_t c = 0; c < cols_; c++) {
        if (get(r, c)) {
            v.set(c, true);
        }
    }
    return v;
}

BitVector BitMatrix::col(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector &bits) {
    if (bits.size() != cols_) {
        throw std::invalid_argument("BitMatrix::set_row size mismatch");
    }
    for (size_t c = 0; c < cols_; c++) {
        set(r, c, bits.get(c));
    }
}

void BitMatrix::set_col(size_t c, const BitVector &bits) {
    if (bits.size() != rows_) {
        throw std::invalid_argument("BitMatrix::set_col size mismatch");
    }
    for (size_t r = 0; r < rows_; r++) {
        set(r, c, bits.get(r));
    }
}

BitVector BitMatrix::diagonal() const {
    size_t n = rows_ < cols_ ? rows_ : cols_;
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, get(i, i));
    }
    return v;
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *d = words_.data() + dst * stride_;
    const uint64_t *s = words_.data() + src * stride_;
    for (size_t i = 0; i < stride_; i++) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    uint64_t *pa = words_.data() + a * stride_;
    uint64_t *pb = words_.data() + b * stride_;
    for (size_t i = 0; i < stride_; i++) {
        std::swap(pa[i], pb[i]);
    }
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitVector BitMatrix::mul(const BitVector &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMatrix::mul vector size mismatch");
    }
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        const uint64_t *p = words_.data() + r * stride_;
        for (size_t i = 0; i < stride_; i++) {
            acc ^= p[i] & v.words()[i];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("BitMatrix::mul shape mismatch");
    }
    BitMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            if (get(r, k)) {
                uint64_t *d = out.words_.data() + r * out.stride_;
                const uint64_t *s = other.words_.data() + k * other.stride_;
                for (size_t i = 0; i < out.stride_; i++) {
                    d[i] ^= s[i];
                }
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r + 1; c < cols_; c++) {
            if (get(r, c) != get(c, r)) {
                return false;
            }
        }
    }
    return true;
}

bool BitMatrix::operator==(const BitMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s.push_back(get(r, c) ? '1' : '0');
        }
        s.push_back('\n');
    }
    return s;
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, {}, 0};
    BitMatrix &a = result.reduced;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) {
            pivot++;
        }
        if (pivot == a.rows()) {
            continue;
        }
        a.swap_rows(pivot, r);
        for (size_t i = 0; i < a.rows(); i++) {
            if (i != r && a.get(i, c)) {
                a.xor_row_into(r, i);
            }
        }
        result.pivot_cols.push_back(c);
        r++;
    }
    result.rank = r;
    return result;
}

BitMatrix nullspace_basis(const BitMatrix &m) {
    RrefResult rr = rref(m);
    std::vector<size_t> free_cols;
    free_cols.reserve(m.cols() - rr.rank);
    size_t next_pivot = 0;
    for (size_t c = 0; c < m.cols(); c++) {
        if (next_pivot < rr.pivot_cols.size() && rr.pivot_cols[next_pivot] == c) {
            next_pivot++;
        } else {
            free_cols.push_back(c);
        }
    }
    BitMatrix basis(m.cols(), free_cols.size());
    for (size_t j = 0; j < free_cols.size(); j++) {
        size_t f = free_cols[j];
        basis.set(f, j, true);
        for (size_t p = 0; p < rr.pivot_cols.size(); p++) {
            if (rr.reduced.get(p, f)) {
                basis.set(rr.pivot_cols[p], j, true);
            }
        }
    }
    return basis;
}

std::optional<GfSolution> solve_linear(const BitMatrix &m, const BitVector &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve_linear dimension mismatch");
    }
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m.get(r, c)) {
                aug.set(r, c, true);
            }
        }
        if (b.get(r)) {
            aug.set(r, m.cols(), true);
        }
    }
    RrefResult rr = rref(aug);
    size_t rank_m = 0;
    for (size_t p : rr.pivot_cols) {
        if (p == m.cols()) {
            return std::nullopt;
        }
        rank_m++;
    }
    GfSolution out{BitVector(m.cols()), m.cols() - rank_m};
    for (size_t p = 0; p < rr.pivot_cols.size(); p++) {
        if (rr.reduced.get(p, m.cols())) {
            out.solution.set(rr.pivot_cols[p], true);
        }
    }
    return out;
}

bool quadratic_form_value(const BitMatrix &m, const BitVector &x) {
    if (m.rows() != m.cols() || m.rows() != x.size()) {
        throw std::invalid_argument("quadratic_form_value dimension mismatch");
    }
    bool acc = false;
    for (size_t r = 0; r < m.rows(); r++) {
        if (x.get(r) && m.row(r).dot(x)) {
            acc = !acc;
        }
    }
    return acc;
}

std::optional<BitVector> linearize_quadratic_form(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("linearize_quadratic_form requires a square matrix");
    }
    if (!m.is_symmetric()) {
        return std::nullopt;
    }
    return m.diagonal();
}

KernelEnumerator::KernelEnumerator(const BitMatrix &m, size_t dimension_cap)
    : length_(m.cols()) {
    BitMatrix basis = nullspace_basis(m);
    if (basis.cols() > dimension_cap) {
        throw CapExceeded("kernel dimension " + std::to_string(basis.cols()) +
                          " exceeds cap " + std::to_string(dimension_cap));
    }
    basis_.reserve(basis.cols());
    for (size_t j = 0; j < basis.cols(); j++) {
        basis_.push_back(basis.col(j));
    }
}

void KernelEnumerator::for_each(const std::function<void(const BitVector &)> &f) const {
    BitVector current(length_);
    f(current);
    uint64_t total = count();
    for (uint64_t i = 1; i < total; i++) {
        current ^= basis_[std::countr_zero(i)];
        f(current);
    }
}

}  // namespace qces
