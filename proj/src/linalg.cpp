#include "supercurve/linalg.hpp"

namespace supercurve {

ElementMatrix mat_identity(const AlgebraSignature& sig, int n) {
    ElementMatrix m(n, ElementVector(n, SuperElement::zero(sig)));
    for (int i = 0; i < n; ++i) m[i][i] = SuperElement::one(sig);
    return m;
}

ElementMatrix mat_mul(const ElementMatrix& a, const ElementMatrix& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b.empty() ? 0 : b[0].size());
    const AlgebraSignature& sig = a[0][0].signature();
    ElementMatrix r(n, ElementVector(m, SuperElement::zero(sig)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
    return r;
}

ElementVector mat_apply(const ElementMatrix& a, const ElementVector& v) {
    int n = static_cast<int>(a.size());
    const AlgebraSignature& sig = v[0].signature();
    ElementVector r(n, SuperElement::zero(sig));
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

ElementMatrix mat_add(const ElementMatrix& a, const ElementMatrix& b) {
    ElementMatrix r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

ElementMatrix mat_scale(const ElementMatrix& a, const SuperElement& c) {
    ElementMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return r;
}

static ElementMatrix minor_of(const ElementMatrix& a, int row, int col) {
    int n = static_cast<int>(a.size());
    ElementMatrix m;
    for (int i = 0; i < n; ++i) {
        if (i == row) continue;
        ElementVector r;
        for (int j = 0; j < n; ++j)
            if (j != col) r.push_back(a[i][j]);
        m.push_back(std::move(r));
    }
    return m;
}

SuperElement mat_det(const ElementMatrix& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n == 1) return a[0][0];
    const AlgebraSignature& sig = a[0][0].signature();
    SuperElement det = SuperElement::zero(sig);
    for (int j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        SuperElement term = a[0][j] * mat_det(minor_of(a, 0, j));
        det += (j & 1) ? -term : term;
    }
    return det;
}

ElementMatrix mat_inverse(const ElementMatrix& a) {
    int n = static_cast<int>(a.size());
    const AlgebraSignature& sig = a[0][0].signature();
    SuperElement det = mat_det(a);
    SuperElement det_inv = det.inverse();
    if (n == 1) return {{det_inv}};
    ElementMatrix inv(n, ElementVector(n, SuperElement::zero(sig)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SuperElement cof = mat_det(minor_of(a, j, i));
            inv[i][j] = (((i + j) & 1) ? -cof : cof) * det_inv;
        }
    return inv;
}

} // namespace supercurve
