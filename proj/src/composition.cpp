#include "schurq/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace schurq {

namespace {

int sum_parts(const parts_t& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

parts_t parse_parts(const std::string& text) {
    if (text == "0" || text.empty()) return {};
    parts_t parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed composition text: '" + text + "'");
        long v = std::stol(tok);
        if (v < 1 || v > 1'000'000) throw std::invalid_argument("composition part out of range: " + tok);
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

}  // namespace

std::string parts_str(const parts_t& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

Composition Composition::parse(const std::string& text) {
    return Composition(parse_parts(text));
}

int Composition::size() const { return sum_parts(parts_); }
std::string Composition::str() const { return parts_str(parts_); }

int Partition::size() const { return sum_parts(parts_); }
std::string Partition::str() const { return parts_str(parts_); }

int StrictPartition::size() const { return sum_parts(parts_); }
std::string StrictPartition::str() const { return parts_str(parts_); }

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 1) return out;
    if (n > 24) throw std::invalid_argument("compositions_of: n too large to enumerate");
    uint64_t count = uint64_t{1} << (n - 1);
    out.reserve(count);
    for (uint64_t mask = 0; mask < count; ++mask) {
        parts_t parts;
        int run = 0;
        for (int cell = 1; cell <= n; ++cell) {
            ++run;
            bool cut = cell < n && (mask >> (n - 1 - cell)) & 1;
            if (cut || cell == n) {
                parts.push_back(run);
                run = 0;
            }
        }
        out.push_back(Composition(std::move(parts)));
    }
    return out;
}

uint64_t composition_rank(const Composition& alpha) {
    int n = alpha.size();
    uint64_t mask = 0;
    int cell = 0;
    for (size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        cell += alpha.parts()[i];
        mask |= uint64_t{1} << (n - 1 - cell);
    }
    return mask;
}

Partition sort_to_partition(const Composition& alpha) {
    parts_t p = alpha.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::vector<Composition> coarsenings(const Composition& alpha) {
    std::vector<Composition> out;
    int len = alpha.length();
    if (len == 0) return {alpha};
    uint64_t count = uint64_t{1} << (len - 1);
    out.reserve(count);
    // mask bit (len-1-i) clear = boundary after part i is merged away
    for (uint64_t mask = 0; mask < count; ++mask) {
        parts_t parts;
        int run = 0;
        for (int i = 1; i <= len; ++i) {
            run += alpha.part(i - 1);
            bool keep = i < len && (mask >> (len - 1 - i)) & 1;
            if (keep || i == len) {
                parts.push_back(run);
                run = 0;
            }
        }
        out.push_back(Composition(std::move(parts)));
    }
    return out;
}

bool is_coarsening(const Composition& coarse, const Composition& fine) {
    size_t j = 0;
    for (int target : coarse.parts()) {
        int run = 0;
        while (run < target && j < fine.parts().size()) run += fine.parts()[j++];
        if (run != target) return false;
    }
    return j == fine.parts().size();
}

Order dominance_compare(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_compare requires partitions of equal size");
    if (a == b) return Order::Equal;
    bool a_ge = true, b_ge = true;
    int sa = 0, sb = 0;
    int m = std::min(a.length(), b.length());
    for (int i = 0; i < m; ++i) {
        sa += a.parts()[i];
        sb += b.parts()[i];
        if (sa < sb) a_ge = false;
        if (sb < sa) b_ge = false;
    }
    if (a_ge && !b_ge) return Order::Greater;
    if (b_ge && !a_ge) return Order::Less;
    // equal prefix sums through min(lengths) forces a == b when |a| == |b|
    if (a_ge && b_ge) return Order::Equal;
    return Order::Incomparable;
}

namespace {
int lex_compare_parts(const parts_t& a, const parts_t& b) {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}
}  // namespace

int lex_compare(const Composition& a, const Composition& b) {
    return lex_compare_parts(a.parts(), b.parts());
}

int lex_compare(const Partition& a, const Partition& b) {
    return lex_compare_parts(a.parts(), b.parts());
}

bool is_strict(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if (p.parts()[i - 1] <= p.parts()[i]) return false;
    return true;
}

Composition concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    parts_t parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    parts_t parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

Composition rotate180(const Composition& alpha) {
    parts_t parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    parts_t cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(StrictPartition(cur));
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p - 1);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    parts_t cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

}  // namespace schurq
