#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace e2ab {

using Int = mpz_class;

/// Canonical form of a finitely generated abelian group:
/// Z^free_rank x Z/d1 x ... x Z/dk with 2 <= d1 | d2 | ... | dk.
struct AbelianGroup {
    unsigned free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroup &) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order of the torsion part (the whole group when free_rank == 0).
    Int torsion_order() const;

    std::string to_string() const;
    std::string to_json() const;

    /// Builds the canonical form of Z/m1 x ... x Z/mk (mi = 0 meaning Z).
    static AbelianGroup from_moduli(const std::vector<Int> &moduli);
};

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(size_t rows, size_t cols, std::vector<Int> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int &at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Int &at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    void append_row(const std::vector<Int> &row);

    static IntMatrix identity(size_t n);
    static IntMatrix diagonal(const std::vector<Int> &d);

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

/// Diagonal of the Smith normal form: d1 | d2 | ... | dr, di >= 0,
/// one entry per min(rows, cols). Trailing zeros mark rank deficiency.
std::vector<Int> smith_normal_form(const IntMatrix &m);

/// Same, additionally producing a unimodular V with column operations
/// accumulated, so x -> x*V carries Z^cols/rowspan(m) to the diagonal form.
std::vector<Int> smith_normal_form(const IntMatrix &m, IntMatrix &col_transform);

/// Structure of Z^ambient_rank / (row span of sublattice_gens).
AbelianGroup lattice_quotient(size_t ambient_rank, const IntMatrix &sublattice_gens);

/// Structure of (Z/n1 x ... x Z/nk) / <rows of subgroup_gens>.
AbelianGroup finite_quotient(const std::vector<Int> &ambient_moduli, const IntMatrix &subgroup_gens);

}  // namespace e2ab
