#ifndef KEPLER_JORDAN_HPP
#define KEPLER_JORDAN_HPP

#include <optional>
#include <string>
#include <vector>

namespace kepler {

// Numerical type (r, a, b) of an irreducible hermitian Jordan triple.
// r is the rank, a the off-diagonal Peirce multiplicity, b the
// characteristic multiplicity.  Everything downstream is a function of
// these three numbers:
//   d/r = 1 + (a/2)(r-1) + b,   genus p = 2 + a(r-1) + b.
// Non-integer a, b are accepted; the formulas are analytic in them and
// continuation in a is a useful consistency check.  `classified()` marks
// the genuine (matrix / spin / exceptional) types.
struct JordanType {
    int r = 1;
    double a = 2.0;
    double b = 0.0;

    JordanType() = default;
    JordanType(int r_, double a_, double b_);

    double dim_over_rank() const { return 1.0 + 0.5 * a * (r - 1) + b; }
    double dim() const { return r * dim_over_rank(); }
    double genus() const { return 2.0 + a * (r - 1) + b; }
    // dim of the Peirce 2-space of a maximal tripotent, over the rank.
    double dim2_over_rank() const { return 1.0 + 0.5 * a * (r - 1); }
    bool tube_type() const { return b == 0.0; }

    // Member of the classification table (symmetric / full / antisymmetric
    // matrices, rank-one balls, spin factors, the two exceptional triples).
    bool classified() const;
};

// Dimension data of the rank-ell Kepler manifold inside a type (r,a,b):
//   dprime_ell = ell (1 + (a/2)(ell-1))   [Peirce 2-part]
//   dsecond_ell = ell (a (r-ell) + b)     [Peirce 1-part]
//   d_ell = dprime_ell + dsecond_ell
struct KeplerRank {
    int ell = 1;
    double d_ell = 0.0;
    double dprime_ell = 0.0;
    double dsecond_ell = 0.0;
};

// Throws domain_error unless 1 <= ell <= jt.r.
KeplerRank derive_invariants(const JordanType& jt, int ell);

// Named entry of the classified-type table.
struct NamedType {
    std::string name;
    JordanType jt;
};

// The table shipped with the library (also installed as a JSON data file).
const std::vector<NamedType>& classified_table();

// Parse a type name: sym:R | full:R,S | asym:N | spin:D | ball:D |
// exc:16 | exc:27.  Returns nullopt for unknown names.
std::optional<JordanType> parse_type_name(const std::string& name);

// JSON text of the classified table (the content of the data file).
std::string classified_table_json();

} // namespace kepler

#endif
