#include "schurq/omega.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "schurq/det.hpp"

namespace schurq {

namespace {

bool is_strict_desc(const parts_t& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] <= p[i]) return false;
    return true;
}

void sort_desc(parts_t& p) { std::sort(p.begin(), p.end(), std::greater<int>()); }

std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

OmegaElem OmegaElem::unit() {
    OmegaElem e;
    e.coeffs_[{}] = 1;
    return e;
}

OmegaElem OmegaElem::q(int n) {
    if (n < 0) return {};
    if (n == 0) return unit();
    OmegaElem e;
    e.coeffs_[{n}] = 1;
    return e;
}

OmegaElem OmegaElem::term(const StrictPartition& key, const Rational& c) {
    OmegaElem e;
    if (c != 0) e.coeffs_[key.parts()] = c;
    return e;
}

bool OmegaElem::is_integral() const {
    for (const auto& [key, c] : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

void OmegaElem::add_term(const parts_t& key, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

OmegaElem& OmegaElem::operator+=(const OmegaElem& o) {
    for (const auto& [key, c] : o.coeffs_) add_term(key, c);
    return *this;
}

OmegaElem& OmegaElem::operator-=(const OmegaElem& o) {
    for (const auto& [key, c] : o.coeffs_) add_term(key, -c);
    return *this;
}

OmegaElem& OmegaElem::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs_) v *= c;
    return *this;
}

OmegaElem OmegaElem::operator*(const OmegaElem& o) const {
    OmegaElem out;
    for (const auto& [ka, ca] : coeffs_) {
        for (const auto& [kb, cb] : o.coeffs_) {
            parts_t merged;
            merged.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(merged),
                       std::greater<int>());
            Rational c = ca * cb;
            if (is_strict_desc(merged)) {
                out.add_term(merged, c);
            } else {
                OmegaElem s = straighten(std::move(merged));
                for (const auto& [key, v] : s.coeffs_) out.add_term(key, v * c);
            }
        }
    }
    return out;
}

std::string OmegaElem::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : coeffs_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << coeff_str(a) << '*';
        os << "q[" << (key.empty() ? "" : parts_str(key)) << ']';
    }
    return os.str();
}

namespace {

std::map<parts_t, OmegaElem> straighten_memo;
std::shared_mutex straighten_mutex;

/// One rewrite: replace the pair (r, r) sitting at positions i, i+1 of the
/// descending multiset by sum_j 2 (-1)^(j-1) {r-j, r+j}, recursing through
/// `rec` for the children. Terminates since sum of squares grows.
OmegaElem rewrite_pair(const parts_t& parts, size_t i,
                       const std::function<OmegaElem(parts_t)>& rec) {
    int r = parts[i];
    parts_t rest;
    rest.reserve(parts.size() - 2);
    for (size_t t = 0; t < parts.size(); ++t)
        if (t != i && t != i + 1) rest.push_back(parts[t]);
    OmegaElem out;
    for (int j = 1; j <= r; ++j) {
        parts_t child = rest;
        if (r - j > 0) child.push_back(r - j);
        child.push_back(r + j);
        sort_desc(child);
        OmegaElem sub = rec(std::move(child));
        sub *= Rational(j % 2 == 1 ? 2 : -2);
        out += sub;
    }
    return out;
}

size_t first_repeat(const parts_t& parts) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] == parts[i + 1]) return i;
    return parts.size();
}

}  // namespace

OmegaElem straighten(parts_t parts) {
    sort_desc(parts);
    size_t i = first_repeat(parts);
    if (i == parts.size()) {
        OmegaElem out;
        out.add_term(parts, 1);
        return out;
    }
    {
        std::shared_lock lock(straighten_mutex);
        auto it = straighten_memo.find(parts);
        if (it != straighten_memo.end()) return it->second;
    }
    OmegaElem out = rewrite_pair(parts, i, [](parts_t p) { return straighten(std::move(p)); });
    {
        std::unique_lock lock(straighten_mutex);
        straighten_memo.emplace(std::move(parts), out);
    }
    return out;
}

OmegaElem detail::straighten_shuffled(parts_t parts, uint64_t seed) {
    sort_desc(parts);
    std::vector<size_t> repeats;
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] == parts[i + 1]) repeats.push_back(i);
    if (repeats.empty()) {
        OmegaElem out;
        out.add_term(parts, 1);
        return out;
    }
    uint64_t h = seed;
    for (int p : parts) h = h * 1099511628211ull + static_cast<uint64_t>(p);
    size_t pick = repeats[h % repeats.size()];
    return rewrite_pair(parts, pick,
                        [seed](parts_t p) { return detail::straighten_shuffled(std::move(p), seed); });
}

namespace {

std::map<parts_t, OmegaElem> ribbon_memo;
std::shared_mutex ribbon_mutex;

void check_integral(const OmegaElem& e, const char* what) {
    if (!e.is_integral()) throw std::logic_error(std::string(what) + ": non-integral expansion");
}

}  // namespace

OmegaElem ribbon_q(const Composition& alpha) {
    if (alpha.empty()) return OmegaElem::unit();
    {
        std::shared_lock lock(ribbon_mutex);
        auto it = ribbon_memo.find(alpha.parts());
        if (it != ribbon_memo.end()) return it->second;
    }
    // g[m] = sum over coarsenings beta of the length-m prefix of
    // (-1)^len(beta) q_sort(beta); one ring product per (j, m) pair.
    int len = alpha.length();
    std::vector<OmegaElem> g(static_cast<size_t>(len) + 1);
    g[0] = OmegaElem::unit();
    for (int m = 1; m <= len; ++m) {
        int run = 0;
        for (int j = m - 1; j >= 0; --j) {
            run += alpha.part(j);
            g[static_cast<size_t>(m)] -= g[static_cast<size_t>(j)] * OmegaElem::q(run);
        }
    }
    OmegaElem out = g[static_cast<size_t>(len)];
    if (len % 2 == 1) out *= Rational(-1);
    check_integral(out, "ribbon_q");
    {
        std::unique_lock lock(ribbon_mutex);
        ribbon_memo.emplace(alpha.parts(), out);
    }
    return out;
}

OmegaElem skew_q(const SkewShape& d) {
    if (d.empty()) return OmegaElem::unit();
    const auto& rows = d.rows();
    size_t n = rows.size();
    std::vector<std::vector<OmegaElem>> m(n, std::vector<OmegaElem>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            int lambda_i = rows[i].hi;
            int mu_j = rows[j].lo - 1;
            m[i][j] = OmegaElem::q(lambda_i - mu_j - static_cast<int>(i) + static_cast<int>(j));
        }
    }
    OmegaElem out = det_by_cofactor(m, OmegaElem(), OmegaElem::unit());
    check_integral(out, "skew_q");
    return out;
}

bool equal(const OmegaElem& a, const OmegaElem& b) { return a == b; }

std::string canonical_key(const OmegaElem& a) { return a.str(); }

bool relation_check(Relation kind, int x) {
    if (x < 1) throw std::invalid_argument("relation_check: x must be positive");
    switch (kind) {
        case Relation::EE: {
            OmegaElem rhs;
            for (int i = 1; i <= 2 * x - 1; ++i) {
                OmegaElem t = ribbon_q(Composition({2 * x - i, i}));
                if (i % 2 == 0) t *= Rational(-1);
                rhs += t;
            }
            return ribbon_q(Composition({2 * x})) == rhs;
        }
        case Relation::EI: {
            OmegaElem rhs;
            for (int i = 1; i <= 2 * x - 1; ++i) {
                OmegaElem t = ribbon_q(Composition({2 * x - i})) * ribbon_q(Composition({i}));
                if (i % 2 == 0) t *= Rational(-1);
                rhs += t;
            }
            return Rational(2) * ribbon_q(Composition({2 * x})) == rhs;
        }
        case Relation::T:
            return ribbon_q(Composition({x})) == ribbon_q(Composition(parts_t(static_cast<size_t>(x), 1)));
        case Relation::ET:
            return ribbon_q(Composition({2 * x})) ==
                   ribbon_q(Composition(parts_t(static_cast<size_t>(2 * x), 1)));
    }
    return false;
}

bool ribbon_mult_check(const Composition& alpha, const Composition& beta) {
    if (alpha.empty() || beta.empty())
        throw std::invalid_argument("ribbon_mult_check: compositions must be nonempty");
    OmegaElem lhs = ribbon_q(alpha) * ribbon_q(beta);
    OmegaElem rhs = ribbon_q(concat(alpha, beta)) + ribbon_q(near_concat(alpha, beta));
    return lhs == rhs;
}

bool euler_form_vanishes(int n) {
    OmegaElem acc;
    for (int r = 0; r <= n; ++r) {
        OmegaElem t = OmegaElem::q(r) * OmegaElem::q(n - r);
        if (r % 2 == 1) t *= Rational(-1);
        acc += t;
    }
    return acc.is_zero();
}

Rational ribbon_basis_det(int n) {
    auto strict = strict_partitions_of(n);
    size_t m = strict.size();
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, 0));
    for (size_t i = 0; i < m; ++i) {
        OmegaElem r = ribbon_q(Composition(strict[i].parts()));
        for (size_t j = 0; j < m; ++j) {
            auto it = r.coeffs().find(strict[j].parts());
            if (it != r.coeffs().end()) mat[i][j] = it->second;
        }
    }
    // exact Gaussian elimination
    Rational det = 1;
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && mat[pivot][col] == 0) ++pivot;
        if (pivot == m) return 0;
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        for (size_t row = col + 1; row < m; ++row) {
            if (mat[row][col] == 0) continue;
            Rational f = mat[row][col] / mat[col][col];
            for (size_t k = col; k < m; ++k) mat[row][k] -= f * mat[col][k];
        }
    }
    return det;
}

}  // namespace schurq
