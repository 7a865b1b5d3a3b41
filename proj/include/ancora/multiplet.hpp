#ifndef ANCORA_MULTIPLET_HPP
#define ANCORA_MULTIPLET_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ancora {

enum class IndexKind : uint8_t { undotted, dotted };
enum class IndexPos : uint8_t { lower, upper };

inline IndexKind flipped(IndexKind k)
{
    return k == IndexKind::undotted ? IndexKind::dotted : IndexKind::undotted;
}

/// A maximal symmetric group of spinor slots sharing kind and position.
/// size == 1 describes a single ordinary index slot.
struct IndexBlock {
    IndexKind kind;
    IndexPos pos;
    int size = 1;

    friend bool operator==(const IndexBlock&, const IndexBlock&) = default;
};

inline long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// Index structure of a multiplet (field, equation row, test function...).
/// A component is labelled by the count of index value 2 inside each block;
/// its weight is the number of raw index tuples collapsing onto it.
struct MultipletStructure {
    std::vector<IndexBlock> blocks;

    MultipletStructure() = default;
    explicit MultipletStructure(std::vector<IndexBlock> b) : blocks(std::move(b)) {}

    static MultipletStructure scalar() { return MultipletStructure{}; }

    int total_rank() const
    {
        int r = 0;
        for (const auto& b : blocks) r += b.size;
        return r;
    }

    int component_count() const
    {
        int n = 1;
        for (const auto& b : blocks) n *= (b.size + 1);
        return n;
    }

    /// Flat component id from per-block counts of 2's (mixed-radix, first
    /// block most significant).
    int component_id(const std::vector<int>& counts) const
    {
        if (counts.size() != blocks.size())
            throw std::invalid_argument("component_id: block count mismatch");
        int id = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (counts[b] < 0 || counts[b] > blocks[b].size)
                throw std::invalid_argument("component_id: count out of range");
            id = id * (blocks[b].size + 1) + counts[b];
        }
        return id;
    }

    std::vector<int> component_counts(int id) const
    {
        std::vector<int> counts(blocks.size(), 0);
        for (size_t b = blocks.size(); b-- > 0;) {
            counts[b] = id % (blocks[b].size + 1);
            id /= (blocks[b].size + 1);
        }
        return counts;
    }

    /// Number of raw index tuples mapping to this component.
    long weight(int id) const
    {
        auto counts = component_counts(id);
        long w = 1;
        for (size_t b = 0; b < blocks.size(); ++b) w *= binomial(blocks[b].size, counts[b]);
        return w;
    }

    /// Representative index-value tuple (per block: 1's then 2's).
    std::vector<std::vector<int>> representative(int id) const
    {
        auto counts = component_counts(id);
        std::vector<std::vector<int>> rep(blocks.size());
        for (size_t b = 0; b < blocks.size(); ++b) {
            rep[b].assign(blocks[b].size, 1);
            for (int j = 0; j < counts[b]; ++j) rep[b][blocks[b].size - 1 - j] = 2;
        }
        return rep;
    }

    /// Structure of the complex conjugate: kinds flip in place, sizes and
    /// positions stay, so component labels carry over unchanged.
    MultipletStructure conjugate() const
    {
        MultipletStructure s = *this;
        for (auto& b : s.blocks) b.kind = flipped(b.kind);
        return s;
    }

    /// Component label, e.g. "(2;112)" for per-block value lists.
    std::string component_label(int id) const
    {
        if (blocks.empty()) return "";
        auto rep = representative(id);
        std::string s = "(";
        for (size_t b = 0; b < rep.size(); ++b) {
            if (b) s += ";";
            for (int v : rep[b]) s += static_cast<char>('0' + v);
        }
        s += ")";
        return s;
    }

    friend bool operator==(const MultipletStructure&, const MultipletStructure&) = default;
};

/// Structure of a symmetric rank-n undotted lower multispinor (the BW field).
inline MultipletStructure bw_field_structure(int n)
{
    if (n <= 0) throw std::invalid_argument("bw_field_structure: rank must be positive");
    return MultipletStructure{{IndexBlock{IndexKind::undotted, IndexPos::lower, n}}};
}

/// Structure of the BW equation multiplet: one upper dotted index and a
/// symmetric lower undotted block of size n-1.
inline MultipletStructure bw_equation_structure(int n)
{
    std::vector<IndexBlock> b;
    b.push_back(IndexBlock{IndexKind::dotted, IndexPos::upper, 1});
    if (n - 1 > 0) b.push_back(IndexBlock{IndexKind::undotted, IndexPos::lower, n - 1});
    return MultipletStructure{std::move(b)};
}

/// Structure of the test functions / characteristics dual to the BW
/// equations: one lower dotted index and an upper undotted block of n-1.
inline MultipletStructure bw_test_structure(int n)
{
    std::vector<IndexBlock> b;
    b.push_back(IndexBlock{IndexKind::dotted, IndexPos::lower, 1});
    if (n - 1 > 0) b.push_back(IndexBlock{IndexKind::undotted, IndexPos::upper, n - 1});
    return MultipletStructure{std::move(b)};
}

}  // namespace ancora

#endif
