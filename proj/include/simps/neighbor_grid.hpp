#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simps/space.hpp"
#include "simps/vec2.hpp"

namespace simps {

// Bucket index over a fixed position snapshot for radius queries. The bucket
// edge is at least as large as any allowed query radius, so the 3x3 cell
// neighborhood always covers the query ball; candidates are then checked
// with the exact minimal-image distance. Results are therefore identical to
// a full pairwise scan, by construction.
class UniformGrid {
public:
    UniformGrid(const std::vector<Vec2>& positions, const SpaceTopology& space, double cell_size);

    // Others within distance r of individual i (boundary inclusive).
    std::size_t count_within(std::size_t i, double r) const;

    // All unordered pairs (i, j), i < j, within r, sorted lexicographically.
    std::vector<std::pair<std::size_t, std::size_t>> pairs_within(double r) const;

    double cell_size() const { return cell_; }

private:
    void check_radius(double r) const;
    // Collects everyone in the 3x3 neighborhood of i's cell, i excluded.
    // Neighbor cell ids are deduplicated first so no candidate repeats.
    void gather_candidates(std::size_t i, std::vector<std::uint32_t>& out) const;

    const std::vector<Vec2>& positions_;
    SpaceTopology space_;
    double cell_ = 0.0;

    // Torus layout: dense ncells x ncells buckets over [0,L)^2.
    int ncells_ = 0;
    double eff_cell_ = 0.0;
    std::vector<std::vector<std::uint32_t>> dense_;

    // Infinite layout: sparse buckets keyed by integer cell coordinates.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> sparse_;

    int dense_cell_x(Vec2 p) const;
    int dense_cell_y(Vec2 p) const;
};

}  // namespace simps
