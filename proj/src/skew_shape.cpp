#include "schurq/skew_shape.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace schurq {

namespace {

void validate_rows(const std::vector<RowSpan>& rows) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].lo < 1 || rows[i].hi < rows[i].lo)
            throw std::invalid_argument("skew shape: bad row interval");
        if (i > 0 && (rows[i].lo > rows[i - 1].lo || rows[i].hi > rows[i - 1].hi))
            throw std::invalid_argument("skew shape: row intervals must move weakly left");
    }
}

/// Translate to column 1 and squeeze out uncovered columns.
std::vector<RowSpan> canonical_rows(std::vector<RowSpan> rows) {
    if (rows.empty()) return rows;
    int max_hi = rows.front().hi;
    std::vector<char> covered(static_cast<size_t>(max_hi) + 1, 0);
    for (const auto& r : rows)
        for (int c = r.lo; c <= r.hi; ++c) covered[static_cast<size_t>(c)] = 1;
    std::vector<int> remap(static_cast<size_t>(max_hi) + 1, 0);
    int next = 0;
    for (int c = 1; c <= max_hi; ++c) {
        if (covered[static_cast<size_t>(c)]) ++next;
        remap[static_cast<size_t>(c)] = next;
    }
    for (auto& r : rows) {
        r.lo = remap[static_cast<size_t>(r.lo)];
        r.hi = remap[static_cast<size_t>(r.hi)];
    }
    return rows;
}

}  // namespace

SkewShape SkewShape::from_rows(std::vector<RowSpan> rows) {
    validate_rows(rows);
    SkewShape s;
    s.rows_ = canonical_rows(std::move(rows));
    return s;
}

SkewShape SkewShape::from_lambda_mu(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length())
        throw std::invalid_argument("mu not contained in lambda");
    std::vector<RowSpan> rows;
    for (int i = 0; i < lambda.length(); ++i) {
        int li = lambda.parts()[i];
        int mi = i < mu.length() ? mu.parts()[i] : 0;
        if (mi > li) throw std::invalid_argument("mu not contained in lambda");
        if (mi < li) rows.push_back({mi + 1, li});
    }
    return from_rows(std::move(rows));
}

SkewShape SkewShape::from_cells(const CellSet& cells) {
    std::map<int, std::vector<int>> by_row;
    for (const Cell& c : cells) by_row[c.row].push_back(c.col);
    std::vector<RowSpan> rows;
    for (auto& [row, cols] : by_row) {
        std::sort(cols.begin(), cols.end());
        for (size_t i = 1; i < cols.size(); ++i)
            if (cols[i] != cols[i - 1] + 1)
                throw std::invalid_argument("cell set has a non-contiguous row");
        rows.push_back({cols.front(), cols.back()});
    }
    return from_rows(std::move(rows));
}

int SkewShape::n_cells() const {
    int total = 0;
    for (const auto& r : rows_) total += r.len();
    return total;
}

int SkewShape::max_col() const { return rows_.empty() ? 0 : rows_.front().hi; }

CellSet SkewShape::cells() const {
    CellSet out;
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int c = rows_[i].lo; c <= rows_[i].hi; ++c)
            out.push_back({static_cast<int>(i) + 1, c});
    return out;
}

std::pair<Partition, Partition> SkewShape::lambda_mu() const {
    parts_t lambda, mu;
    for (const auto& r : rows_) {
        lambda.push_back(r.hi);
        if (r.lo > 1) mu.push_back(r.lo - 1);
    }
    return {Partition(std::move(lambda)), Partition(std::move(mu))};
}

std::string SkewShape::str() const {
    auto [lambda, mu] = lambda_mu();
    return lambda.str() + "/" + mu.str();
}

std::string SkewShape::grid() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
        for (int c = 1; c <= r.hi; ++c) {
            if (c > 1) os << ' ';
            os << (c < r.lo ? '.' : '#');
        }
        os << '\n';
    }
    return os.str();
}

SkewShape ribbon_shape(const Composition& alpha) {
    if (alpha.empty()) return {};
    int len = alpha.length();
    std::vector<RowSpan> rows(static_cast<size_t>(len));
    int lo = 1;
    for (int i = len - 1; i >= 0; --i) {
        rows[static_cast<size_t>(i)] = {lo, lo + alpha.part(i) - 1};
        lo = rows[static_cast<size_t>(i)].hi;
    }
    return SkewShape::from_rows(std::move(rows));
}

std::optional<Composition> shape_to_ribbon(const SkewShape& d) {
    if (d.empty()) return std::nullopt;
    const auto& rows = d.rows();
    parts_t parts;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i].lo != rows[i + 1].hi) return std::nullopt;
        parts.push_back(rows[i].len());
    }
    return Composition(std::move(parts));
}

SkewShape transpose(const SkewShape& d) {
    CellSet flipped;
    for (const Cell& c : d.cells()) flipped.push_back({c.col, c.row});
    return SkewShape::from_cells(flipped);
}

SkewShape rotate180(const SkewShape& d) {
    if (d.empty()) return d;
    int max_row = d.n_rows();
    int max_col = d.max_col();
    CellSet turned;
    for (const Cell& c : d.cells()) turned.push_back({max_row + 1 - c.row, max_col + 1 - c.col});
    return SkewShape::from_cells(turned);
}

Composition transpose(const Composition& ribbon) {
    if (ribbon.empty()) return ribbon;
    return word_to_ribbon(word_transpose(word(ribbon)));
}

CellSet shift(const SkewShape& d) {
    auto [lambda, mu] = d.lambda_mu();
    if (!is_strict(lambda)) throw std::invalid_argument("shift: lambda must be strict");
    const auto& rows = d.rows();
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        // mu strictness on positive parts: lo_i - 1 > lo_{i+1} - 1 whenever the latter > 0
        if (rows[i + 1].lo > 1 && rows[i].lo <= rows[i + 1].lo)
            throw std::invalid_argument("shift: mu must be strict");
    }
    CellSet out;
    for (size_t i = 0; i < rows.size(); ++i)
        for (int c = rows[i].lo; c <= rows[i].hi; ++c)
            out.push_back({static_cast<int>(i) + 1, c + static_cast<int>(i)});
    return out;
}

namespace {

/// Place d1 north of d2 with d1's leftmost column at d2's max column + delta,
/// then stack the row lists (optionally merging d1's bottom row into d2's top).
SkewShape glue(const SkewShape& d1, const SkewShape& d2, int delta, bool merge_row) {
    if (d1.empty()) return d2;
    if (d2.empty()) return d1;
    int offset = d2.max_col() + delta - d1.rows().back().lo;
    std::vector<RowSpan> rows;
    for (const auto& r : d1.rows()) rows.push_back({r.lo + offset, r.hi + offset});
    size_t first = 0;
    if (merge_row) {
        rows.back().lo = d2.rows().front().lo;
        first = 1;
        if (rows.back().hi < d2.rows().front().hi)
            throw std::logic_error("near_concat: merged row not contiguous");
    }
    for (size_t i = first; i < d2.rows().size(); ++i) rows.push_back(d2.rows()[i]);
    return SkewShape::from_rows(std::move(rows));
}

}  // namespace

SkewShape disjoint_union(const SkewShape& d1, const SkewShape& d2) { return glue(d1, d2, 1, false); }
SkewShape concat(const SkewShape& d1, const SkewShape& d2) { return glue(d1, d2, 0, false); }
SkewShape near_concat(const SkewShape& d1, const SkewShape& d2) { return glue(d1, d2, 1, true); }

SkewShape apply_star(Star s, const SkewShape& north, const SkewShape& south) {
    return s == Star::Concat ? concat(north, south) : near_concat(north, south);
}

StarWord word(const Composition& alpha) {
    StarWord w;
    for (int i = 0; i < alpha.length(); ++i) {
        if (i > 0) w.push_back(Star::Concat);
        for (int j = 1; j < alpha.part(i); ++j) w.push_back(Star::NearConcat);
    }
    return w;
}

Composition word_to_ribbon(const StarWord& w) {
    parts_t parts;
    int run = 1;
    for (Star s : w) {
        if (s == Star::NearConcat) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

StarWord word_transpose(const StarWord& w) {
    StarWord out(w.rbegin(), w.rend());
    for (Star& s : out) s = s == Star::Concat ? Star::NearConcat : Star::Concat;
    return out;
}

SkewShape compose(const Composition& alpha, const SkewShape& d) {
    if (alpha.empty()) return {};
    StarWord w = word(alpha);
    SkewShape acc = d;
    for (Star s : w) acc = apply_star(s, acc, d);
    return acc;
}

SkewShape compose_transpose(const Composition& alpha, const SkewShape& d) {
    if (alpha.empty()) return {};
    StarWord w = word(alpha);
    SkewShape dt = transpose(d);
    SkewShape acc = d;
    for (size_t i = 0; i < w.size(); ++i) {
        const SkewShape& block = (i % 2 == 0) ? dt : d;  // block i+2 of the product
        acc = apply_star(w[i], acc, block);
    }
    return acc;
}

Partition srl(const SkewShape& d) {
    parts_t lens;
    for (const auto& r : d.rows()) lens.push_back(r.len());
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

namespace {

std::vector<std::pair<Composition, Composition>> star_factorizations(const Composition& gamma,
                                                                     bool bullet) {
    std::vector<std::pair<Composition, Composition>> out;
    int n = gamma.size();
    StarWord w = word(gamma);
    for (int d = 2; d * 2 <= n; ++d) {
        if (n % d != 0) continue;
        int m = n / d;
        StarWord block_word(w.begin(), w.begin() + (d - 1));
        Composition block = word_to_ribbon(block_word);
        StarWord block_word_t = word_transpose(block_word);
        bool ok = true;
        for (int j = 2; j <= m && ok; ++j) {
            const StarWord& expected = (bullet && j % 2 == 0) ? block_word_t : block_word;
            for (int p = 0; p < d - 1; ++p) {
                if (w[static_cast<size_t>((j - 1) * d + p)] != expected[static_cast<size_t>(p)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        StarWord junctions;
        for (int j = 1; j < m; ++j) junctions.push_back(w[static_cast<size_t>(j * d - 1)]);
        out.emplace_back(word_to_ribbon(junctions), block);
    }
    return out;
}

}  // namespace

std::vector<std::pair<Composition, Composition>> bullet_factorizations(const Composition& gamma) {
    return star_factorizations(gamma, true);
}

std::vector<std::pair<Composition, Composition>> circ_factorizations(const Composition& gamma) {
    return star_factorizations(gamma, false);
}

bool is_connected(const SkewShape& d) {
    const auto& rows = d.rows();
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].lo > rows[i + 1].hi) return false;
    return !d.empty();
}

bool has_2x2(const SkewShape& d) {
    const auto& rows = d.rows();
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].lo < rows[i + 1].hi) return true;
    return false;
}

std::vector<SkewShape> components(const SkewShape& d) {
    std::vector<SkewShape> out;
    std::vector<RowSpan> cur;
    const auto& rows = d.rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        cur.push_back(rows[i]);
        bool cut = i + 1 == rows.size() || rows[i].lo > rows[i + 1].hi;
        if (cut) {
            out.push_back(SkewShape::from_rows(std::move(cur)));
            cur.clear();
        }
    }
    return out;
}

std::vector<SkewShape> skew_shapes_of(int n) {
    std::vector<SkewShape> out;
    if (n < 1) return out;
    std::vector<RowSpan> rows;
    std::function<void(int)> rec = [&](int used) {
        if (used == n) {
            int min_lo = n + 1;
            for (const auto& r : rows) min_lo = std::min(min_lo, r.lo);
            if (min_lo != 1) return;
            // canonical: every column between 1 and max hi covered
            std::vector<char> covered(static_cast<size_t>(rows.front().hi) + 1, 0);
            for (const auto& r : rows)
                for (int c = r.lo; c <= r.hi; ++c) covered[static_cast<size_t>(c)] = 1;
            for (int c = 1; c <= rows.front().hi; ++c)
                if (!covered[static_cast<size_t>(c)]) return;
            out.push_back(SkewShape::from_rows(rows));
            return;
        }
        int lo_max = rows.empty() ? n : rows.back().lo;
        int hi_max = rows.empty() ? n : rows.back().hi;
        for (int lo = 1; lo <= lo_max; ++lo) {
            for (int hi = lo; hi <= hi_max && hi - lo + 1 <= n - used; ++hi) {
                rows.push_back({lo, hi});
                rec(used + hi - lo + 1);
                rows.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace schurq
