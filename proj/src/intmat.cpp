#include "toric/intmat.hpp"

#include <utility>

#include "toric/errors.hpp"

namespace toric {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw ShapeMismatch("matrix dimensions must be positive");
    e_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw ShapeMismatch("matrix dimensions must be positive");
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw ShapeMismatch("entry count does not match rows*cols");
    e_ = std::move(entries);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += (*this)(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

void swap_rows(IntMatrix& w, int a, int b) {
    for (int j = 0; j < w.cols(); ++j) std::swap(w(a, j), w(b, j));
}

void swap_cols(IntMatrix& w, int a, int b) {
    for (int i = 0; i < w.rows(); ++i) std::swap(w(i, a), w(i, b));
}

}  // namespace

int rank(const IntMatrix& m) {
    IntMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    const int steps = std::min(rows, cols);
    mpz_class prev = 1;
    int r = 0;
    for (int k = 0; k < steps; ++k) {
        // complete pivoting keeps the Bareiss divisions exact
        int pi = -1, pj = -1;
        for (int j = k; j < cols && pi < 0; ++j)
            for (int i = k; i < rows; ++i)
                if (w(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k) swap_rows(w, pi, k);
        if (pj != k) swap_cols(w, pj, k);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                mpz_class t = w(k, k) * w(i, j) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
        ++r;
    }
    return r;
}

mpz_class det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("det: matrix is not square");
    IntMatrix w = m;
    const int n = w.rows();
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pi = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) {
                pi = i;
                break;
            }
        if (pi < 0) return 0;
        if (pi != k) {
            swap_rows(w, pi, k);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = w(k, k) * w(i, j) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : mpz_class(-w(n - 1, n - 1));
}

HnfResult column_hnf_triangularize(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("column_hnf_triangularize: matrix is not square");
    if (det(m) == 0) throw SingularMinor("column_hnf_triangularize: matrix is singular");
    const int n = m.rows();
    IntMatrix u = m;
    IntMatrix h = IntMatrix::identity(n);

    // col_dst <- x*col_dst + y*col_src, col_src <- c*col_src - d*col_dst,
    // applied simultaneously to u and h; unimodular when x*c + y*d = 1.
    auto combine = [&](IntMatrix& w, int dst, int src, const mpz_class& x, const mpz_class& y,
                       const mpz_class& c, const mpz_class& d) {
        for (int r = 0; r < n; ++r) {
            mpz_class old_dst = w(r, dst);
            w(r, dst) = x * old_dst + y * w(r, src);
            w(r, src) = c * w(r, src) - d * old_dst;
        }
    };

    // bottom-up: once row i is triangular its columns are never touched again
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j < i; ++j) {
            if (u(i, j) == 0) continue;
            mpz_class g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), u(i, i).get_mpz_t(), u(i, j).get_mpz_t());
            mpz_class c = u(i, i) / g, d = u(i, j) / g;
            combine(u, i, j, x, y, c, d);
            combine(h, i, j, x, y, c, d);
        }
        if (u(i, i) == 0) throw SingularMinor("column_hnf_triangularize: zero pivot");
        if (u(i, i) < 0) {
            for (int r = 0; r < n; ++r) {
                u(r, i) = -u(r, i);
                h(r, i) = -h(r, i);
            }
        }
        // reduce this row's tail into [0, d_i)
        for (int j = i + 1; j < n; ++j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), u(i, j).get_mpz_t(), u(i, i).get_mpz_t());
            if (q == 0) continue;
            for (int r = 0; r <= i; ++r) {
                u(r, j) -= q * u(r, i);
            }
            for (int r = 0; r < n; ++r) h(r, j) -= q * h(r, i);
        }
    }
    return HnfResult{std::move(h), std::move(u)};
}

IntMatrix unimodular_inverse(const IntMatrix& h) {
    if (h.rows() != h.cols()) throw NonSquare("unimodular_inverse: matrix is not square");
    mpz_class d = det(h);
    if (d != 1 && d != -1) throw NotUnimodular("unimodular_inverse: determinant is " + d.get_str());
    // canonical HNF of a unimodular matrix is the identity, so h * result = I
    HnfResult r = column_hnf_triangularize(h);
    return std::move(r.h);
}

std::vector<int> select_pivot_columns(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rank(m) != rows)
        throw RankDeficient("select_pivot_columns: rank " + std::to_string(rank(m)) + " < rows " +
                            std::to_string(rows));
    std::vector<int> picked;
    for (int j = 0; j < cols && static_cast<int>(picked.size()) < rows; ++j) {
        IntMatrix sub(rows, static_cast<int>(picked.size()) + 1);
        for (int i = 0; i < rows; ++i) {
            for (size_t c = 0; c < picked.size(); ++c) sub(i, static_cast<int>(c)) = m(i, picked[c]);
            sub(i, static_cast<int>(picked.size())) = m(i, j);
        }
        if (rank(sub) == static_cast<int>(picked.size()) + 1) picked.push_back(j);
    }
    std::vector<int> perm = picked;
    std::vector<char> used(cols, 0);
    for (int j : picked) used[j] = 1;
    for (int j = 0; j < cols; ++j)
        if (!used[j]) perm.push_back(j);
    return perm;
}

bool is_upper_triangular(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < std::min(i, m.cols()); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

}  // namespace toric
