#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurq/composition.hpp"

namespace schurq {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cells in row-major order, duplicates forbidden.
using CellSet = std::vector<Cell>;

struct RowSpan {
    int lo = 0;  // leftmost column, 1-indexed
    int hi = 0;  // rightmost column, inclusive
    int len() const { return hi - lo + 1; }
    friend bool operator==(const RowSpan&, const RowSpan&) = default;
    friend auto operator<=>(const RowSpan&, const RowSpan&) = default;
};

/// A skew diagram in English notation, stored as one column interval per
/// nonempty row, top row first. lo_i and hi_i weakly decrease downwards
/// (lambda_i = hi_i, mu_i = lo_i - 1). Canonical form: the top row is row 1,
/// the leftmost column is column 1, and empty rows/columns are compacted
/// away, so transpose and rotation are involutions on the representation.
class SkewShape {
public:
    SkewShape() = default;

    /// Validates the skew condition and canonicalizes. Throws on invalid rows.
    static SkewShape from_rows(std::vector<RowSpan> rows);
    static SkewShape from_lambda_mu(const Partition& lambda, const Partition& mu);
    /// Rows must form contiguous intervals; throws otherwise.
    static SkewShape from_cells(const CellSet& cells);

    const std::vector<RowSpan>& rows() const { return rows_; }
    int n_rows() const { return static_cast<int>(rows_.size()); }
    int n_cells() const;
    int max_col() const;
    bool empty() const { return rows_.empty(); }
    CellSet cells() const;
    std::pair<Partition, Partition> lambda_mu() const;

    /// "3,2,2,1/1,1"
    std::string str() const;
    /// ASCII cell grid, '#' for cells, '.' for leading padding.
    std::string grid() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<RowSpan> rows_;
};

enum class Star : uint8_t {
    Concat,      // the glued blocks share exactly one column
    NearConcat,  // the glued blocks share exactly one row
};

/// Path word of a ribbon: one star per adjacent cell pair, read from the
/// northeast cell to the southwest cell. Same-row joins are NearConcat,
/// row-change joins are Concat.
using StarWord = std::vector<Star>;

SkewShape ribbon_shape(const Composition& alpha);
std::optional<Composition> shape_to_ribbon(const SkewShape& d);

SkewShape transpose(const SkewShape& d);
SkewShape rotate180(const SkewShape& d);
Composition transpose(const Composition& ribbon);

/// Row i moved i-1 columns right; requires strict lambda and mu.
CellSet shift(const SkewShape& d);

/// d1 goes strictly north and east of d2, touching corner to corner.
SkewShape disjoint_union(const SkewShape& d1, const SkewShape& d2);
/// One cell west of the disjoint union: d1 and d2 share exactly one column.
SkewShape concat(const SkewShape& d1, const SkewShape& d2);
/// One cell south of the disjoint union: d1's bottom row merges into d2's top row.
SkewShape near_concat(const SkewShape& d1, const SkewShape& d2);
SkewShape apply_star(Star s, const SkewShape& north, const SkewShape& south);

StarWord word(const Composition& alpha);
Composition word_to_ribbon(const StarWord& w);
StarWord word_transpose(const StarWord& w);  // reverse and flip each star

/// alpha o D: |alpha| blocks of D joined by word(alpha), left block north.
SkewShape compose(const Composition& alpha, const SkewShape& d);
/// alpha . D: blocks alternate D, D^t, D, ... joined by word(alpha).
SkewShape compose_transpose(const Composition& alpha, const SkewShape& d);

/// Partition of row lengths.
Partition srl(const SkewShape& d);

/// All nontrivial (alpha, D) with alpha . D = gamma (resp. alpha o D = gamma),
/// both factors of size >= 2, found by cutting the star word into divisor-
/// sized blocks. Deterministic order: block size ascending.
std::vector<std::pair<Composition, Composition>> bullet_factorizations(const Composition& gamma);
std::vector<std::pair<Composition, Composition>> circ_factorizations(const Composition& gamma);

bool is_connected(const SkewShape& d);
bool has_2x2(const SkewShape& d);
std::vector<SkewShape> components(const SkewShape& d);

/// All canonical skew shapes with exactly n cells.
std::vector<SkewShape> skew_shapes_of(int n);

}  // namespace schurq
