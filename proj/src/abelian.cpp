#include "e2ab/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace e2ab {

Int AbelianGroup::torsion_order() const {
    Int n = 1;
    for (const Int &d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " x ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (const Int &d : torsion) {
        sep();
        out << "Z/" << d.get_str();
    }
    return out.str();
}

std::string AbelianGroup::to_json() const {
    std::ostringstream out;
    out << "{\"free_rank\": " << free_rank << ", \"torsion\": [";
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (i) out << ", ";
        out << torsion[i].get_str();
    }
    out << "]}";
    return out.str();
}

AbelianGroup AbelianGroup::from_moduli(const std::vector<Int> &moduli) {
    IntMatrix diag = IntMatrix::diagonal(moduli);
    return lattice_quotient(moduli.size(), diag);
}

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: entry count mismatch");
}

void IntMatrix::append_row(const std::vector<Int> &row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: row width mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int> &d) {
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

namespace {

// Elementary-operation SNF. Pivot = minimal nonzero absolute value in the
// remaining submatrix. col_transform, when non-null, accumulates the column
// operations as right multiplications of an identity matrix.
std::vector<Int> snf_impl(IntMatrix a, IntMatrix *v) {
    const size_t rows = a.rows(), cols = a.cols();
    if (v) *v = IntMatrix::identity(cols);
    const size_t n = std::min(rows, cols);

    auto swap_rows = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    };
    auto swap_cols = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        if (v)
            for (size_t r = 0; r < cols; ++r) std::swap(v->at(r, i), v->at(r, j));
    };
    // row i -= q * row j
    auto row_sub = [&](size_t i, size_t j, const Int &q) {
        if (q == 0) return;
        for (size_t c = 0; c < cols; ++c) a.at(i, c) -= q * a.at(j, c);
    };
    // col i -= q * col j
    auto col_sub = [&](size_t i, size_t j, const Int &q) {
        if (q == 0) return;
        for (size_t r = 0; r < rows; ++r) a.at(r, i) -= q * a.at(r, j);
        if (v)
            for (size_t r = 0; r < cols; ++r) v->at(r, i) -= q * v->at(r, j);
    };
    auto negate_col = [&](size_t i) {
        for (size_t r = 0; r < rows; ++r) a.at(r, i) = -a.at(r, i);
        if (v)
            for (size_t r = 0; r < cols; ++r) v->at(r, i) = -v->at(r, i);
    };

    // Nearest-integer quotient: |x - q*p| <= |p| / 2. Keeps the multipliers,
    // and hence the entry growth, small during elimination.
    auto rounded_div = [](const Int &x, const Int &p) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        Int r2 = 2 * r;
        if (mpz_cmpabs(r2.get_mpz_t(), p.get_mpz_t()) > 0) q += (sgn(r) == sgn(p)) ? 1 : -1;
        return q;
    };

    for (size_t t = 0; t < n; ++t) {
        for (;;) {
            // Locate minimal nonzero |entry| in the trailing submatrix and
            // move it to (t, t). Re-selecting every pass keeps the pivot, and
            // with it the reduction quotients, as small as possible.
            size_t pi = t, pj = t;
            bool found = false;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j) {
                    const Int &x = a.at(i, j);
                    if (x == 0) continue;
                    if (!found || mpz_cmpabs(x.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto finished;  // trailing submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool cleared = true;
            for (size_t i = t + 1; i < rows; ++i)
                if (a.at(i, t) != 0) {
                    row_sub(i, t, rounded_div(a.at(i, t), a.at(t, t)));
                    if (a.at(i, t) != 0) cleared = false;  // remainder < pivot: re-pick
                }
            for (size_t j = t + 1; j < cols; ++j)
                if (a.at(t, j) != 0) {
                    col_sub(j, t, rounded_div(a.at(t, j), a.at(t, t)));
                    if (a.at(t, j) != 0) cleared = false;
                }
            if (!cleared) continue;
            // Pivot must divide every remaining entry; if not, fold the
            // offending row in. Reducing it leaves a remainder strictly
            // smaller than the pivot, so the restart makes progress.
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols && divides; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_sub(t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a.at(t, t) < 0) negate_col(t);
    }
finished:;

    std::vector<Int> d(n);
    for (size_t t = 0; t < n; ++t) d[t] = a.at(t, t);
    return d;
}

AbelianGroup canonical_from_diag(const std::vector<Int> &diag, size_t ambient_rank) {
    size_t rank = 0;
    AbelianGroup g;
    for (const Int &x : diag) {
        if (x == 0) continue;
        ++rank;
        if (x != 1 && x != -1) g.torsion.push_back(abs(x));
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    g.free_rank = static_cast<unsigned>(ambient_rank - rank);
    return g;
}

}  // namespace

std::vector<Int> smith_normal_form(const IntMatrix &m) { return snf_impl(m, nullptr); }

std::vector<Int> smith_normal_form(const IntMatrix &m, IntMatrix &col_transform) {
    return snf_impl(m, &col_transform);
}

AbelianGroup lattice_quotient(size_t ambient_rank, const IntMatrix &sublattice_gens) {
    if (sublattice_gens.rows() != 0 && sublattice_gens.cols() != ambient_rank)
        throw std::invalid_argument("lattice_quotient: generator width != ambient rank");
    if (sublattice_gens.rows() == 0) return AbelianGroup{static_cast<unsigned>(ambient_rank), {}};
    return canonical_from_diag(smith_normal_form(sublattice_gens), ambient_rank);
}

AbelianGroup finite_quotient(const std::vector<Int> &ambient_moduli, const IntMatrix &subgroup_gens) {
    const size_t k = ambient_moduli.size();
    IntMatrix stacked = IntMatrix::diagonal(ambient_moduli);
    for (size_t i = 0; i < subgroup_gens.rows(); ++i) {
        std::vector<Int> row(k);
        if (subgroup_gens.cols() != k)
            throw std::invalid_argument("finite_quotient: generator width != ambient length");
        for (size_t j = 0; j < k; ++j) row[j] = subgroup_gens.at(i, j);
        stacked.append_row(row);
    }
    return canonical_from_diag(smith_normal_form(stacked), k);
}

}  // namespace e2ab
