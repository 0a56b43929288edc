#include "enr/core/linalg.hpp"

#include <algorithm>
#include <utility>

namespace enr {

namespace {

void require_square(size_t r, size_t c, const char* what) {
    if (r != c) throw DimensionError(std::string(what) + ": matrix is not square");
}

template <class T>
void row_axpy(Matrix<T>& m, size_t dst, const T& f, size_t src) {
    for (size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

template <class T>
void col_axpy(Matrix<T>& m, size_t dst, const T& f, size_t src) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

template <class T>
void negate_row(Matrix<T>& m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMatrix& a) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        Rational inv = a(r, c).inv();
        for (size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = -a(i, c);
            row_axpy(a, i, f, r);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

QMatrix to_rational(const IntMatrix& m) {
    return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

IntMatrix to_integer(const QMatrix& m) {
    return m.map<Integer>([](const Rational& x) {
        if (!x.is_integer()) throw ArithmeticError("matrix entry " + x.str() + " is not integral");
        return x.num();
    });
}

QVector to_rational(const ZVector& v) { return QVector(v.begin(), v.end()); }

ZVector to_integer(const QVector& v) {
    ZVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_integer()) throw ArithmeticError("vector entry " + x.str() + " is not integral");
        out.push_back(x.num());
    }
    return out;
}

Integer common_denominator(const QMatrix& m) {
    Integer d = 1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).den());
    return d;
}

Integer common_denominator(const QVector& v) {
    Integer d = 1;
    for (const auto& x : v) d = lcm(d, x.den());
    return d;
}

bool is_integral(const QMatrix& m) { return common_denominator(m) == 1; }

Integer det_bareiss(const IntMatrix& m0) {
    require_square(m0.rows(), m0.cols(), "det");
    IntMatrix a = m0;
    const size_t n = a.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational det(const QMatrix& m) {
    require_square(m.rows(), m.cols(), "det");
    IntMatrix a(m.rows(), m.cols());
    Integer scale = 1;
    for (size_t i = 0; i < m.rows(); ++i) {
        Integer d = 1;
        for (size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).den());
        scale *= d;
        for (size_t j = 0; j < m.cols(); ++j) a(i, j) = (m(i, j) * Rational(d)).num();
    }
    return Rational(det_bareiss(a), scale);
}

UniPoly<Rational> charpoly(const QMatrix& a) {
    require_square(a.rows(), a.cols(), "charpoly");
    const size_t n = a.rows();
    // coefficient vectors from the leading term down
    std::vector<Rational> p = {Rational(1)};
    for (size_t k = 0; k < n; ++k) {
        // leading (k+1)x(k+1) block: A' = a[0..k) x [0..k), R = a(k, 0..k), C = a(0..k, k)
        std::vector<Rational> col(k + 2);
        col[0] = Rational(1);
        col[1] = -a(k, k);
        QVector c(k);
        for (size_t i = 0; i < k; ++i) c[i] = a(i, k);
        for (size_t m = 2; m <= k + 1; ++m) {
            Rational s;
            for (size_t j = 0; j < k; ++j) s += a(k, j) * c[j];
            col[m] = -s;
            QVector nc(k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    if (!a(i, j).is_zero()) nc[i] += a(i, j) * c[j];
            c = std::move(nc);
        }
        std::vector<Rational> q(k + 2);
        for (size_t i = 0; i < k + 2; ++i)
            for (size_t j = 0; j <= std::min(i, k); ++j)
                if (!p[j].is_zero()) q[i] += col[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return UniPoly<Rational>(Rational(), std::move(p));
}

QMatrix inverse(const QMatrix& m) {
    require_square(m.rows(), m.cols(), "inverse");
    const size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    return aug.block(0, n, n, 2 * n);
}

QVector solve_right(const QMatrix& m, const QVector& rhs) {
    require_square(m.rows(), m.cols(), "solve");
    if (rhs.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
    const size_t n = m.rows();
    QMatrix aug(n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    QVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

QVector solve_left(const QMatrix& m, const QVector& rhs) { return solve_right(m.transpose(), rhs); }

size_t rank(const QMatrix& m) {
    QMatrix a = m;
    return rref(a).size();
}

QMatrix left_kernel(const QMatrix& m) {
    QMatrix a = m.transpose();
    auto piv = rref(a);
    const size_t n = a.cols();
    std::vector<bool> is_piv(n, false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<QVector> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        QVector v(n);
        v[f] = Rational(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return QMatrix::from_rows(basis, n);
}

HermiteResult hnf_with_transform(const IntMatrix& m) {
    HermiteResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    const size_t rows = h.rows(), cols = h.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        for (size_t i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            Integer a = h(r, c), b = h(i, c), s, t;
            Integer g = xgcd(a, b, s, t);
            Integer ag = a / g, bg = b / g;
            for (IntMatrix* mat : {&h, &u}) {
                for (size_t j = 0; j < mat->cols(); ++j) {
                    Integer x = (*mat)(r, j), y = (*mat)(i, j);
                    (*mat)(r, j) = s * x + t * y;
                    (*mat)(i, j) = ag * y - bg * x;
                }
            }
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (size_t i = 0; i < r; ++i) {
            Integer q = floor_div(h(i, c), h(r, c));
            if (q == 0) continue;
            Integer nq = -q;
            row_axpy(h, i, nq, r);
            row_axpy(u, i, nq, r);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).h; }

IntMatrix row_basis(const IntMatrix& m) {
    auto res = hnf_with_transform(m);
    return res.h.block(0, res.rank, 0, m.cols());
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
    auto res = hnf_with_transform(m);
    return res.u.block(res.rank, m.rows(), 0, m.rows());
}

SmithResult snf_with_transforms(const IntMatrix& m) {
    SmithResult res;
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const size_t rows = d.rows(), cols = d.cols(), lim = std::min(rows, cols);

    auto row_op = [&](size_t dst, const Integer& f, size_t src) {
        row_axpy(d, dst, f, src);
        row_axpy(u, dst, f, src);
    };
    auto col_op = [&](size_t dst, const Integer& f, size_t src) {
        col_axpy(d, dst, f, src);
        col_axpy(v, dst, f, src);
    };

    for (size_t t = 0; t < lim; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        size_t bi = rows, bj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == rows) break;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);

        while (true) {
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                if (q != 0) row_op(i, Integer(-q), t);
                if (d(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                if (q != 0) col_op(j, Integer(-q), t);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                size_t pi = t, pj = t;
                for (size_t i = t + 1; i < rows; ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < abs(d(pi, pj))) {
                        pi = i;
                        pj = t;
                    }
                for (size_t j = t + 1; j < cols; ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < abs(d(pi, pj))) {
                        pi = t;
                        pj = j;
                    }
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_op(t, Integer(1), bad);
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    for (size_t i = 0; i < lim; ++i) res.diagonal.push_back(d(i, i));
    res.d = std::move(d);
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

LLLResult lll_reduce(const QMatrix& gram_in, const Rational& delta) {
    require_square(gram_in.rows(), gram_in.cols(), "lll");
    if (!gram_in.is_symmetric()) throw DimensionError("lll: gram matrix is not symmetric");
    const size_t n = gram_in.rows();
    LLLResult res;
    res.u = IntMatrix::identity(n);
    if (n == 0) {
        res.gram = gram_in;
        return res;
    }
    bool negated = false;
    QMatrix g = gram_in;
    for (size_t i = 0; i < n && !negated; ++i) {
        if (g(i, i).sign() < 0) negated = true;
        if (g(i, i).sign() > 0) break;
    }
    if (negated) g = -g;
    IntMatrix& u = res.u;

    QMatrix mu(n, n);
    std::vector<Rational> b(n);
    b[0] = g(0, 0);
    if (b[0].sign() <= 0) throw IndefiniteInput("lll: gram matrix is not definite");
    const Rational half(1, 2);

    auto red = [&](size_t k, size_t l) {
        if (mu(k, l).abs() <= half) return;
        Integer q = (mu(k, l) + half).floor();
        Rational qr(q);
        // b_k -= q b_l, on the Gram matrix as a row then a column operation
        for (size_t j = 0; j < n; ++j) g(k, j) -= qr * g(l, j);
        for (size_t i = 0; i < n; ++i) g(i, k) -= qr * g(i, l);
        for (size_t j = 0; j < n; ++j) u(k, j) -= q * u(l, j);
        mu(k, l) -= qr;
        for (size_t i = 0; i < l; ++i) mu(k, i) -= qr * mu(l, i);
    };
    auto swap = [&](size_t k, size_t kmax) {
        g.swap_rows(k, k - 1);
        g.swap_cols(k, k - 1);
        u.swap_rows(k, k - 1);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
        Rational m = mu(k, k - 1);
        Rational bn = b[k] + m * m * b[k - 1];
        mu(k, k - 1) = m * b[k - 1] / bn;
        b[k] = b[k - 1] * b[k] / bn;
        b[k - 1] = bn;
        for (size_t i = k + 1; i <= kmax; ++i) {
            Rational t = mu(i, k);
            mu(i, k) = mu(i, k - 1) - m * t;
            mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
        }
    };

    size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (size_t j = 0; j < k; ++j) {
                Rational s = g(k, j);
                for (size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
                mu(k, j) = s / b[j];
            }
            Rational s = g(k, k);
            for (size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * b[j];
            if (s.sign() <= 0) throw IndefiniteInput("lll: gram matrix is not definite");
            b[k] = s;
        }
        red(k, k - 1);
        if (b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            swap(k, kmax);
            if (k > 1) --k;
            continue;
        }
        for (size_t l = k - 1; l-- > 0;) red(k, l);
        ++k;
    }
    res.gram = negated ? -g : g;
    return res;
}

Inertia inertia(const QMatrix& sym) {
    require_square(sym.rows(), sym.cols(), "inertia");
    QMatrix a = sym;
    const size_t n = a.rows();
    Inertia in;
    for (size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            size_t j = k + 1;
            while (j < n && a(j, j).is_zero()) ++j;
            if (j < n) {
                a.swap_rows(j, k);
                a.swap_cols(j, k);
            } else {
                j = k + 1;
                while (j < n && a(k, j).is_zero()) ++j;
                if (j == n) {
                    ++in.zero;
                    continue;
                }
                row_axpy(a, k, Rational(1), j);
                col_axpy(a, k, Rational(1), j);
            }
        }
        const Rational p = a(k, k);
        if (p.sign() > 0) ++in.positive;
        else ++in.negative;
        for (size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) / p;
            for (size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            a(i, k) = Rational();
        }
        for (size_t j = k + 1; j < n; ++j) a(k, j) = Rational();
    }
    return in;
}

}  // namespace enr
