#include "schurq/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "schurq/det.hpp"

namespace schurq {

SparsePoly SparsePoly::constant(int arity, const Int& c) {
    SparsePoly p(arity);
    p.add_term(std::vector<int>(static_cast<size_t>(arity), 0), c);
    return p;
}

int SparsePoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        deg = std::max(deg, d);
    }
    return deg;
}

Int SparsePoly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparsePoly::add_term(const std::vector<int>& expo, const Int& c) {
    if (c == 0) return;
    if (expo.size() != static_cast<size_t>(arity_))
        throw std::invalid_argument("SparsePoly: exponent arity mismatch");
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("SparsePoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("SparsePoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("SparsePoly: arity mismatch");
    SparsePoly out(arity_);
    std::vector<int> expo(static_cast<size_t>(arity_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < expo.size(); ++i) expo[i] = ea[i] + eb[i];
            out.add_term(expo, ca * cb);
        }
    }
    return out;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const term_map::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto deg = [](const std::vector<int>& e) {
        int d = 0;
        for (int v : e) d += v;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        int da = deg(a->first), db = deg(b->first);
        if (da != db) return da < db;
        return a->first > b->first;  // within a degree, x1-heavy monomials first
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        Int a = t->second < 0 ? Int(-t->second) : t->second;
        if (first) {
            if (t->second < 0) os << '-';
            first = false;
        } else {
            os << (t->second < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1) {
            os << a;
            printed = true;
        }
        for (size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (printed) os << '*';
            os << 'x' << (i + 1);
            if (t->first[i] > 1) os << '^' << t->first[i];
            printed = true;
        }
        if (!printed) os << a;  // constant term with |coeff| == 1
    }
    return os.str();
}

namespace {

/// Shared depth-first filler for tableau-counted polynomials. Letters are
/// encoded 1..2k with odd = primed; the semistandard variant uses 1..k.
struct TableauxDfs {
    std::vector<Cell> cells;          // row-major
    std::vector<int> left, top;       // index of neighbor cell or -1
    int k = 0;
    bool primed_alphabet = true;      // amenable rules vs SSYT rules
    std::vector<int> value;           // letter per cell
    std::vector<uint32_t> row_primed; // per row: primed letters used
    std::vector<uint32_t> col_plain;  // per column: unprimed letters used
    std::vector<int> content;
    SparsePoly out{0};

    explicit TableauxDfs(const CellSet& cs, int vars, bool primed)
        : cells(cs), k(vars), primed_alphabet(primed), out(vars) {
        if (k < 1 || k > 31) throw std::invalid_argument("tableau enumeration: bad variable count");
        std::sort(cells.begin(), cells.end());
        for (size_t i = 1; i < cells.size(); ++i)
            if (cells[i] == cells[i - 1]) throw std::invalid_argument("duplicate cell");
        int max_row = 0, max_col = 0;
        std::map<Cell, int> index;
        for (size_t i = 0; i < cells.size(); ++i) {
            index[cells[i]] = static_cast<int>(i);
            max_row = std::max(max_row, cells[i].row);
            max_col = std::max(max_col, cells[i].col);
        }
        for (const Cell& c : cells) {
            auto l = index.find({c.row, c.col - 1});
            auto t = index.find({c.row - 1, c.col});
            left.push_back(l == index.end() ? -1 : l->second);
            top.push_back(t == index.end() ? -1 : t->second);
        }
        value.assign(cells.size(), 0);
        row_primed.assign(static_cast<size_t>(max_row) + 1, 0);
        col_plain.assign(static_cast<size_t>(max_col) + 1, 0);
        content.assign(static_cast<size_t>(k), 0);
    }

    void run() {
        if (cells.empty()) {
            out.add_term(content, 1);
            return;
        }
        fill(0);
    }

    void fill(size_t idx) {
        if (idx == cells.size()) {
            out.add_term(content, 1);
            return;
        }
        const Cell& c = cells[idx];
        int lo = 1;
        if (left[idx] >= 0) lo = std::max(lo, value[static_cast<size_t>(left[idx])]);
        if (top[idx] >= 0) {
            int t = value[static_cast<size_t>(top[idx])];
            lo = std::max(lo, primed_alphabet ? t : t + 1);  // SSYT columns strictly increase
        }
        int hi = primed_alphabet ? 2 * k : k;
        for (int v = lo; v <= hi; ++v) {
            uint32_t bit;
            int letter;
            if (primed_alphabet) {
                letter = (v + 1) / 2;
                bit = uint32_t{1} << letter;
                if (v % 2 == 1) {  // primed: once per row
                    if (row_primed[static_cast<size_t>(c.row)] & bit) continue;
                    row_primed[static_cast<size_t>(c.row)] |= bit;
                } else {  // unprimed: once per column
                    if (col_plain[static_cast<size_t>(c.col)] & bit) continue;
                    col_plain[static_cast<size_t>(c.col)] |= bit;
                }
            } else {
                letter = v;
                bit = 0;
            }
            value[idx] = v;
            ++content[static_cast<size_t>(letter - 1)];
            fill(idx + 1);
            --content[static_cast<size_t>(letter - 1)];
            if (primed_alphabet) {
                if (v % 2 == 1)
                    row_primed[static_cast<size_t>(c.row)] &= ~bit;
                else
                    col_plain[static_cast<size_t>(c.col)] &= ~bit;
            }
        }
    }
};

}  // namespace

SparsePoly amenable_q_poly(const CellSet& cells, int k) {
    TableauxDfs dfs(cells, k, true);
    dfs.run();
    return dfs.out;
}

SparsePoly amenable_q_poly(const SkewShape& d, int k) { return amenable_q_poly(d.cells(), k); }

namespace {

std::map<std::pair<int, int>, SparsePoly> q_row_enum_memo;
std::mutex q_row_enum_mutex;

/// amenable_q_poly of the one-row shape with n cells, memoized.
SparsePoly q_row_poly_enum(int n, int k) {
    if (n == 0) return SparsePoly::constant(k, 1);
    {
        std::lock_guard lock(q_row_enum_mutex);
        auto it = q_row_enum_memo.find({n, k});
        if (it != q_row_enum_memo.end()) return it->second;
    }
    CellSet row;
    for (int c = 1; c <= n; ++c) row.push_back({1, c});
    SparsePoly p = amenable_q_poly(row, k);
    std::lock_guard lock(q_row_enum_mutex);
    q_row_enum_memo.emplace(std::make_pair(n, k), p);
    return p;
}

}  // namespace

SparsePoly omega_to_poly(const OmegaElem& a, int k) {
    Int denom = 1;
    for (const auto& [key, c] : a.coeffs()) denom = lcm(denom, Int(denominator(c)));
    SparsePoly out(k);
    for (const auto& [key, c] : a.coeffs()) {
        SparsePoly term = SparsePoly::constant(k, Int(numerator(c) * (denom / denominator(c))));
        for (int part : key) term = term * q_row_poly_enum(part, k);
        out += term;
    }
    return out;
}

Int x1_coeff(const SkewShape& d) {
    SparsePoly p = amenable_q_poly(d, 1);
    return p.coeff({d.n_cells()});
}

SparsePoly ssyt_poly(const SkewShape& d, int k) {
    TableauxDfs dfs(d.cells(), k, false);
    dfs.run();
    return dfs.out;
}

SparsePoly h_poly(int n, int k) {
    if (n < 0) return SparsePoly::zero(k);
    if (n == 0) return SparsePoly::constant(k, 1);
    SparsePoly out(k);
    std::vector<int> expo(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int rest, int min_var) {
        if (rest == 0) {
            out.add_term(expo, 1);
            return;
        }
        for (int v = min_var; v < k; ++v) {
            ++expo[static_cast<size_t>(v)];
            rec(rest - 1, v);
            --expo[static_cast<size_t>(v)];
        }
    };
    rec(n, 0);
    return out;
}

SparsePoly e_poly(int n, int k) {
    if (n < 0) return SparsePoly::zero(k);
    if (n == 0) return SparsePoly::constant(k, 1);
    SparsePoly out(k);
    std::vector<int> expo(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int rest, int min_var) {
        if (rest == 0) {
            out.add_term(expo, 1);
            return;
        }
        for (int v = min_var; v <= k - rest; ++v) {
            expo[static_cast<size_t>(v)] = 1;
            rec(rest - 1, v + 1);
            expo[static_cast<size_t>(v)] = 0;
        }
    };
    rec(n, 0);
    return out;
}

namespace {

SparsePoly jt_det(const SkewShape& d, int k, bool elementary) {
    const auto& rows = d.rows();
    size_t n = rows.size();
    std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n, SparsePoly(k)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            int deg = rows[i].hi - (rows[j].lo - 1) - static_cast<int>(i) + static_cast<int>(j);
            m[i][j] = elementary ? e_poly(deg, k) : h_poly(deg, k);
        }
    }
    return det_by_cofactor(m, SparsePoly::zero(k), SparsePoly::constant(k, 1));
}

}  // namespace

bool jt_h_check(const SkewShape& d, int k) { return ssyt_poly(d, k) == jt_det(d, k, false); }

bool jt_e_check(const SkewShape& d, int k) {
    return ssyt_poly(transpose(d), k) == jt_det(d, k, true);
}

bool star_determinant_check(const std::vector<SkewShape>& blocks, const StarWord& stars, int k) {
    if (blocks.empty()) throw std::invalid_argument("star_determinant_check: no blocks");
    if (stars.size() + 1 != blocks.size())
        throw std::invalid_argument("star_determinant_check: need one star between blocks");
    SkewShape product = blocks[0];
    for (size_t i = 0; i < stars.size(); ++i) product = apply_star(stars[i], product, blocks[i + 1]);

    size_t n = blocks.size();
    std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n, SparsePoly(k)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                m[i][j] = ssyt_poly(blocks[i], k);
            } else if (i == j + 1) {
                m[i][j] = SparsePoly::constant(k, 1);
            } else if (i < j) {
                SkewShape run = blocks[i];
                for (size_t t = i; t < j; ++t) {
                    Star flipped = stars[t] == Star::Concat ? Star::NearConcat : Star::Concat;
                    run = apply_star(flipped, run, blocks[t + 1]);
                }
                m[i][j] = ssyt_poly(run, k);
            }
        }
    }
    SparsePoly det = det_by_cofactor(m, SparsePoly::zero(k), SparsePoly::constant(k, 1));
    return det == ssyt_poly(product, k);
}

SparsePoly q_row_poly(int n, int k) {
    if (n < 0) return SparsePoly::zero(k);
    if (n == 0) return SparsePoly::constant(k, 1);
    SparsePoly out(k);
    std::vector<int> expo(static_cast<size_t>(k), 0);
    std::function<void(int, int, int)> rec = [&](int rest, int var, int used) {
        if (rest == 0) {
            out.add_term(expo, Int(1) << used);
            return;
        }
        if (var == k) return;
        rec(rest, var + 1, used);  // x_var unused
        for (int e = 1; e <= rest; ++e) {
            expo[static_cast<size_t>(var)] = e;
            rec(rest - e, var + 1, used + 1);
        }
        expo[static_cast<size_t>(var)] = 0;
    };
    rec(n, 0, 0);
    return out;
}

std::vector<Int> q_values_at(const std::vector<long>& point, int max_degree) {
    std::vector<Int> num{1}, den{1};
    for (long a : point) {
        std::vector<Int> n2(num.size() + 1, 0), d2(den.size() + 1, 0);
        for (size_t i = 0; i < num.size(); ++i) {
            n2[i] += num[i];
            n2[i + 1] += num[i] * a;
        }
        for (size_t i = 0; i < den.size(); ++i) {
            d2[i] += den[i];
            d2[i + 1] -= den[i] * a;
        }
        num = std::move(n2);
        den = std::move(d2);
    }
    // series division: den has constant term 1
    std::vector<Int> s(static_cast<size_t>(max_degree) + 1, 0);
    for (int m = 0; m <= max_degree; ++m) {
        Int acc = m < static_cast<int>(num.size()) ? num[static_cast<size_t>(m)] : Int(0);
        for (int j = 1; j <= m && j < static_cast<int>(den.size()); ++j)
            acc -= den[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
        s[static_cast<size_t>(m)] = std::move(acc);
    }
    return s;
}

Int ribbon_q_eval(const Composition& alpha, const std::vector<Int>& q_at_point) {
    if (alpha.empty()) return 1;
    if (alpha.size() >= static_cast<int>(q_at_point.size()))
        throw std::invalid_argument("ribbon_q_eval: q values not deep enough");
    int len = alpha.length();
    std::vector<Int> g(static_cast<size_t>(len) + 1, 0);
    g[0] = 1;
    for (int m = 1; m <= len; ++m) {
        int run = 0;
        for (int j = m - 1; j >= 0; --j) {
            run += alpha.part(j);
            g[static_cast<size_t>(m)] -= g[static_cast<size_t>(j)] * q_at_point[static_cast<size_t>(run)];
        }
    }
    return len % 2 == 1 ? Int(-g[static_cast<size_t>(len)]) : g[static_cast<size_t>(len)];
}

SparsePoly ribbon_q_poly(const Composition& alpha, int k) {
    if (alpha.empty()) return SparsePoly::constant(k, 1);
    int len = alpha.length();
    std::vector<SparsePoly> g(static_cast<size_t>(len) + 1, SparsePoly(k));
    g[0] = SparsePoly::constant(k, 1);
    for (int m = 1; m <= len; ++m) {
        int run = 0;
        for (int j = m - 1; j >= 0; --j) {
            run += alpha.part(j);
            g[static_cast<size_t>(m)] -= g[static_cast<size_t>(j)] * q_row_poly(run, k);
        }
    }
    SparsePoly out = g[static_cast<size_t>(len)];
    if (len % 2 == 1) out *= Int(-1);
    return out;
}

}  // namespace schurq
