#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurq {

using parts_t = std::vector<int>;

/// A finite list of positive integers. The empty composition acts only as an
/// identity element for gluing operations and is never enumerated.
class Composition {
public:
    Composition() = default;
    explicit Composition(parts_t parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    static Composition parse(const std::string& text);

    const parts_t& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Serialized as comma-separated decimal parts, "3,1,2". Empty -> "0".
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    parts_t parts_;
};

/// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(parts_t parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must weakly decrease");
        }
    }

    const parts_t& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    parts_t parts_;
};

/// Strictly decreasing list of positive integers.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(parts_t parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("strict partition parts must be positive");
            if (i > 0 && parts_[i - 1] <= parts_[i])
                throw std::invalid_argument("strict partition parts must strictly decrease");
        }
    }

    const parts_t& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    parts_t parts_;
};

enum class Order { Less, Equal, Greater, Incomparable };

/// All 2^(n-1) compositions of n in binary-gap order: mask bit (n-1-i) set
/// means a part boundary after cell i, masks ascending. n = 0 gives {}.
std::vector<Composition> compositions_of(int n);

/// Index of alpha in compositions_of(|alpha|); inverse of the enumeration.
uint64_t composition_rank(const Composition& alpha);

Partition sort_to_partition(const Composition& alpha);

/// All coarsenings of alpha (sums of maximal runs of adjacent parts),
/// 2^(len-1) of them, alpha included, in binary-gap order over kept cuts.
std::vector<Composition> coarsenings(const Composition& alpha);

/// True iff coarse can be obtained by summing adjacent parts of fine.
bool is_coarsening(const Composition& coarse, const Composition& fine);

/// Dominance comparison of prefix sums over i = 1..min(lengths).
/// Requires |a| = |b|.
Order dominance_compare(const Partition& a, const Partition& b);

/// <0, 0, >0 by the first differing part.
int lex_compare(const Composition& a, const Composition& b);
int lex_compare(const Partition& a, const Partition& b);

bool is_strict(const Partition& p);

/// Ribbon-level gluings: concat appends the part lists, near_concat merges
/// a's last part with b's first. The empty composition is the identity.
Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);

/// The antipodal rotation of a ribbon reverses its composition.
Composition rotate180(const Composition& alpha);

std::vector<StrictPartition> strict_partitions_of(int n);
std::vector<Partition> partitions_of(int n);

std::string parts_str(const parts_t& parts);

}  // namespace schurq
