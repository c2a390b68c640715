#pragma once

// Brute-force reference implementations over raw bitmasks. They share no code
// with the library and favour the most literal reading of each definition.

#include <nestlab/family.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Masks = std::vector<Mask>;

inline Mask full(std::size_t n)
{
    return (Mask{1} << n) - 1;
}

inline bool has(Mask s, std::size_t x)
{
    return ((s >> x) & 1U) != 0;
}

inline Masks masks_of(const nestlab::SubsetFamily& f)
{
    Masks out;
    for (const auto& s : f) {
        out.push_back(static_cast<Mask>(s.mask()));
    }
    return out;
}

inline nestlab::SubsetFamily family_of(std::size_t n, const Masks& ms)
{
    std::vector<nestlab::PointSet> sets;
    for (auto m : ms) {
        sets.push_back(nestlab::PointSet::from_mask(nestlab::FiniteSpace(n), m));
    }
    return nestlab::SubsetFamily(nestlab::FiniteSpace(n), std::move(sets));
}

/// Fixpoint closure of the subbase under pairwise intersection and union,
/// with the empty set and X thrown in.
inline std::set<Mask> closure(std::size_t n, const Masks& subbase)
{
    std::set<Mask> opens(subbase.begin(), subbase.end());
    opens.insert(0);
    opens.insert(full(n));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Mask> current(opens.begin(), opens.end());
        for (auto a : current) {
            for (auto b : current) {
                grew = opens.insert(a & b).second || grew;
                grew = opens.insert(a | b).second || grew;
            }
        }
    }
    return opens;
}

inline bool is_topology(std::size_t n, const std::set<Mask>& opens)
{
    if (!opens.contains(0) || !opens.contains(full(n))) {
        return false;
    }
    for (auto a : opens) {
        for (auto b : opens) {
            if (!opens.contains(a & b) || !opens.contains(a | b)) {
                return false;
            }
        }
    }
    return true;
}

/// Every topology on n labeled points by testing each family of subsets
/// containing the empty set and X. Feasible for n <= 4.
inline std::vector<std::set<Mask>> all_topologies(std::size_t n)
{
    const Mask x = full(n);
    std::vector<Mask> middle;
    for (Mask s = 1; s < x; ++s) {
        middle.push_back(s);
    }
    std::vector<std::set<Mask>> out;
    const std::uint64_t choices = std::uint64_t{1} << middle.size();
    for (std::uint64_t pick = 0; pick < choices; ++pick) {
        std::set<Mask> opens{0, x};
        for (std::size_t i = 0; i < middle.size(); ++i) {
            if ((pick >> i) & 1U) {
                opens.insert(middle[i]);
            }
        }
        if (is_topology(n, opens)) {
            out.push_back(std::move(opens));
        }
    }
    return out;
}

inline Mask permute(Mask s, const std::vector<std::size_t>& perm)
{
    Mask out = 0;
    for (std::size_t x = 0; x < perm.size(); ++x) {
        if (has(s, x)) {
            out |= Mask{1} << perm[x];
        }
    }
    return out;
}

inline bool homeomorphic(std::size_t n, const std::set<Mask>& a, const std::set<Mask>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::set<Mask> image;
        for (auto s : a) {
            image.insert(permute(s, perm));
        }
        if (image == b) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool is_chain(const Masks& f)
{
    for (auto a : f) {
        for (auto b : f) {
            if ((a & b) != a && (a & b) != b) {
                return false;
            }
        }
    }
    return true;
}

/// x ◁ y: some member holds x and misses y.
inline bool below(const Masks& f, std::size_t x, std::size_t y)
{
    return std::any_of(f.begin(), f.end(), [&](Mask s) { return has(s, x) && !has(s, y); });
}

inline bool t0(std::size_t n, const Masks& f)
{
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (!below(f, x, y) && !below(f, y, x)) {
                return false;
            }
        }
    }
    return true;
}

inline bool t1(std::size_t n, const Masks& f)
{
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && !below(f, x, y)) {
                return false;
            }
        }
    }
    return true;
}

/// Strict linear order: irreflexive, transitive, total.
inline bool strict_linear(std::size_t n, const std::vector<std::vector<bool>>& r)
{
    for (std::size_t x = 0; x < n; ++x) {
        if (r[x][x]) {
            return false;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && !r[x][y] && !r[y][x]) {
                return false;
            }
            for (std::size_t z = 0; z < n; ++z) {
                if (r[x][y] && r[y][z] && !r[x][z]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline std::vector<std::vector<bool>> order_matrix(std::size_t n, const Masks& f)
{
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            r[x][y] = below(f, x, y);
        }
    }
    return r;
}

/// Literal interlocking: T = ⋂{S ∈ f : T ⊊ S} forces T = ⋃{S ∈ f : S ⊊ T}.
inline bool interlocking(std::size_t n, const Masks& f)
{
    for (auto t : f) {
        Mask meet = full(n);
        Mask join = 0;
        for (auto s : f) {
            if (s != t && (s & t) == t) {
                meet &= s;
            }
            if (s != t && (s & t) == s) {
                join |= s;
            }
        }
        if (meet == t && join != t) {
            return false;
        }
    }
    return true;
}

inline bool scatters(std::size_t n, const Masks& f)
{
    for (Mask a = 1; a <= full(n); ++a) {
        const bool hit = std::any_of(f.begin(), f.end(), [&](Mask s) { return std::popcount(a & s) == 1; });
        if (!hit) {
            return false;
        }
    }
    return true;
}

/// Every duplicate-free family of nonempty subsets of an n-point space.
inline std::vector<Masks> all_families(std::size_t n)
{
    const std::size_t pool = full(n);
    std::vector<Masks> out;
    const std::uint64_t choices = std::uint64_t{1} << pool;
    for (std::uint64_t pick = 0; pick < choices; ++pick) {
        Masks f;
        for (std::size_t i = 0; i < pool; ++i) {
            if ((pick >> i) & 1U) {
                f.push_back(static_cast<Mask>(i + 1));
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<Masks> all_chains(std::size_t n)
{
    std::vector<Masks> out;
    for (auto& f : all_families(n)) {
        if (is_chain(f)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

} // namespace oracle
