/*
   Copyright 2026 The kbracket Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kbracket/bracket.hpp"

#include <stdexcept>

namespace kbracket {

using tl3::Element;

BracketVector BracketVector::basis(Element e) {
    BracketVector v;
    v[e] = 1;
    return v;
}

BracketVector& BracketVector::operator+=(const BracketVector& rhs) {
    for (std::size_t i = 0; i < 5; ++i) slots[i] += rhs.slots[i];
    return *this;
}

std::string BracketVector::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 5; ++i) {
        if (i) s += ',';
        s += slots[i].to_string();
    }
    return s + "]";
}

BracketVector operator+(BracketVector lhs, const BracketVector& rhs) { return lhs += rhs; }

BracketVector operator*(const Polynomial& scalar, BracketVector v) {
    for (auto& s : v.slots) s *= scalar;
    return v;
}

BracketVector mirror(const BracketVector& v) { return {v.a(), v.c(), v.b(), v.e(), v.d()}; }

BracketVector relabel_rs(const BracketVector& v) { return {v.a(), v.b(), v.c(), v.e(), v.d()}; }

StatesMatrix StatesMatrix::identity() {
    StatesMatrix m;
    for (std::size_t i = 0; i < 5; ++i) m.entries[i][i] = 1;
    return m;
}

BracketVector StatesMatrix::apply(const BracketVector& v) const {
    BracketVector r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (!entries[i][j].is_zero()) r.slots[i] += entries[i][j] * v.slots[j];
    return r;
}

StatesMatrix operator*(const StatesMatrix& lhs, const StatesMatrix& rhs) {
    StatesMatrix r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t k = 0; k < 5; ++k) {
            if (lhs.entries[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < 5; ++j) r.entries[i][j] += lhs.entries[i][k] * rhs.entries[k][j];
        }
    return r;
}

StatesMatrix relabel_rs(const StatesMatrix& m) {
    constexpr std::size_t perm[5] = {0, 1, 2, 4, 3};
    StatesMatrix r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r.entries[perm[i]][perm[j]] = m.entries[i][j];
    return r;
}

Polynomial PQInvariants::eigen_product() const {
    return (p * p - qsq).exact_divide(4);
}

BracketVector compose(const BracketVector& v, const BracketVector& w) {
    const Polynomial x = Polynomial::x();
    BracketVector out;
    for (Element l : tl3::all_elements) {
        if (v[l].is_zero()) continue;
        for (Element r : tl3::all_elements) {
            if (w[r].is_zero()) continue;
            const auto prod = tl3::multiply(l, r);
            Polynomial term = v[l] * w[r];
            if (prod.loops) term *= x.pow(prod.loops);
            out[prod.element] += term;
        }
    }
    return out;
}

StatesMatrix states_matrix(const BracketVector& v) {
    StatesMatrix m;
    for (Element col : tl3::all_elements) {
        const BracketVector image = compose(BracketVector::basis(col), v);
        for (std::size_t row = 0; row < 5; ++row) m.entries[row][tl3::index(col)] = image.slots[row];
    }
    return m;
}

StatesMatrix left_states_matrix(const BracketVector& v) {
    StatesMatrix m;
    for (Element col : tl3::all_elements) {
        const BracketVector image = compose(v, BracketVector::basis(col));
        for (std::size_t row = 0; row < 5; ++row) m.entries[row][tl3::index(col)] = image.slots[row];
    }
    return m;
}

BracketVector power(const BracketVector& v, unsigned n) {
    BracketVector r = BracketVector::unit();
    for (unsigned i = 0; i < n; ++i) r = compose(r, v);
    return r;
}

Polynomial closure(const BracketVector& v) {
    const Polynomial x = Polynomial::x();
    return x.pow(3) * v.a() + x.pow(2) * (v.b() + v.c()) + x * (v.d() + v.e());
}

PQInvariants pq_invariants(const BracketVector& v) {
    const Polynomial x = Polynomial::x();
    const Polynomial &a = v.a(), &b = v.b(), &c = v.c(), &d = v.d(), &e = v.e();
    PQInvariants r;
    r.p = (b + c) * x + 2 * a + d + e;
    r.qsq = (b * b - 2 * b * c + c * c + 4 * d * e) * x.pow(2) +
            (2 * b * d + 2 * c * d + 2 * b * e + 2 * c * e) * x +
            (4 * b * c + d * d - 2 * d * e + e * e);
    return r;
}

Polynomial closed_form_bracket(const BracketVector& v, unsigned n) {
    const Polynomial x = Polynomial::x();
    const PQInvariants pq = pq_invariants(v);
    const Polynomial m = pq.eigen_product();

    Polynomial prev = 2 * x;    // u_0
    Polynomial cur = pq.p * x;  // u_1
    if (n == 0) cur = prev;
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = pq.p * cur - m * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return x * v.a().pow(n) * (x * x - 2) + cur;
}

BivariatePoly berkowitz_charpoly(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("berkowitz_charpoly: matrix is not square");
    if (n == 0) return BivariatePoly{Polynomial{1}};

    // c holds det(lambda I - A_k) for the leading k x k block, highest power first.
    std::vector<Polynomial> c{1, -a[0][0]};
    for (std::size_t k = 1; k < n; ++k) {
        // Toeplitz column: 1, -a_kk, -R S, -R A S, ..., -R A^{k-2} S
        std::vector<Polynomial> t(k + 2);
        t[0] = 1;
        t[1] = -a[k][k];
        std::vector<Polynomial> s(k);  // A_k^i S, starting at i = 0
        for (std::size_t i = 0; i < k; ++i) s[i] = a[i][k];
        for (std::size_t i = 0; i < k; ++i) {
            Polynomial rs;
            for (std::size_t j = 0; j < k; ++j) rs += a[k][j] * s[j];
            t[i + 2] = -rs;
            if (i + 1 < k) {
                std::vector<Polynomial> next(k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t j = 0; j < k; ++j) next[r] += a[r][j] * s[j];
                s = std::move(next);
            }
        }
        std::vector<Polynomial> nc(k + 2);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < k + 1; ++j) nc[i] += t[i - j] * c[j];
        c = std::move(nc);
    }
    return BivariatePoly(std::vector<Polynomial>(c.rbegin(), c.rend()));
}

BivariatePoly charpoly(const StatesMatrix& m) {
    std::vector<std::vector<Polynomial>> a(5, std::vector<Polynomial>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) a[i][j] = m.entries[i][j];
    // det(M - lambda I) = (-1)^5 det(lambda I - M)
    return -berkowitz_charpoly(a);
}

BivariatePoly factored_charpoly(const BracketVector& v) {
    const PQInvariants pq = pq_invariants(v);
    const BivariatePoly lambda = BivariatePoly::variable();
    const BivariatePoly linear = lambda - BivariatePoly(v.a());
    const BivariatePoly quadratic = lambda * lambda - BivariatePoly(pq.p) * lambda +
                                    BivariatePoly(pq.eigen_product());
    return -(linear * quadratic * quadratic);
}

}  // namespace kbracket
