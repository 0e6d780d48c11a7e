#include "simps/neighbor_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simps {

namespace {

std::uint64_t sparse_key(int cx, int cy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint32_t>(cy);
}

}  // namespace

UniformGrid::UniformGrid(const std::vector<Vec2>& positions, const SpaceTopology& space,
                         double cell_size)
    : positions_(positions), space_(space), cell_(cell_size) {
    if (!(cell_size > 0.0)) throw std::invalid_argument("grid: cell size must be > 0");

    if (space_.kind == SpaceKind::PeriodicSquare) {
        // Shrinking the cell below L/ncells would break the 3x3 coverage
        // guarantee, so round the cell count down (cells only get bigger).
        ncells_ = std::max(1, static_cast<int>(std::floor(space_.side_length / cell_)));
        eff_cell_ = space_.side_length / ncells_;
        dense_.resize(static_cast<std::size_t>(ncells_) * ncells_);
        for (std::uint32_t i = 0; i < positions_.size(); ++i) {
            const int cx = dense_cell_x(positions_[i]);
            const int cy = dense_cell_y(positions_[i]);
            dense_[static_cast<std::size_t>(cy) * ncells_ + cx].push_back(i);
        }
    } else {
        for (std::uint32_t i = 0; i < positions_.size(); ++i) {
            const int cx = static_cast<int>(std::floor(positions_[i].x / cell_));
            const int cy = static_cast<int>(std::floor(positions_[i].y / cell_));
            sparse_[sparse_key(cx, cy)].push_back(i);
        }
    }
}

int UniformGrid::dense_cell_x(Vec2 p) const {
    return std::min(ncells_ - 1, static_cast<int>(p.x / eff_cell_));
}

int UniformGrid::dense_cell_y(Vec2 p) const {
    return std::min(ncells_ - 1, static_cast<int>(p.y / eff_cell_));
}

void UniformGrid::check_radius(double r) const {
    if (r > cell_) throw std::invalid_argument("grid: query radius exceeds cell size");
}

void UniformGrid::gather_candidates(std::size_t i, std::vector<std::uint32_t>& out) const {
    out.clear();
    const Vec2 p = positions_[i];

    if (space_.kind == SpaceKind::PeriodicSquare) {
        const int cx = dense_cell_x(p);
        const int cy = dense_cell_y(p);
        // With fewer than 3 cells per axis the wrapped 3x3 block revisits
        // cells; dedupe the flat ids before scanning.
        std::size_t cells[9];
        std::size_t ncand = 0;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int x = (cx + dx + ncells_) % ncells_;
                const int y = (cy + dy + ncells_) % ncells_;
                cells[ncand++] = static_cast<std::size_t>(y) * ncells_ + x;
            }
        }
        std::sort(cells, cells + ncand);
        const std::size_t unique = std::unique(cells, cells + ncand) - cells;
        for (std::size_t c = 0; c < unique; ++c)
            for (std::uint32_t j : dense_[cells[c]])
                if (j != i) out.push_back(j);
    } else {
        const int cx = static_cast<int>(std::floor(p.x / cell_));
        const int cy = static_cast<int>(std::floor(p.y / cell_));
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                auto it = sparse_.find(sparse_key(cx + dx, cy + dy));
                if (it == sparse_.end()) continue;
                for (std::uint32_t j : it->second)
                    if (j != i) out.push_back(j);
            }
        }
    }
}

std::size_t UniformGrid::count_within(std::size_t i, double r) const {
    check_radius(r);
    const double r2 = r * r;
    std::vector<std::uint32_t> cand;
    gather_candidates(i, cand);
    std::size_t count = 0;
    for (std::uint32_t j : cand)
        if (displacement(space_, positions_[i], positions_[j]).norm_sq() <= r2) ++count;
    return count;
}

std::vector<std::pair<std::size_t, std::size_t>> UniformGrid::pairs_within(double r) const {
    check_radius(r);
    const double r2 = r * r;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::uint32_t> cand;
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        gather_candidates(i, cand);
        for (std::uint32_t j : cand) {
            if (j <= i) continue;
            if (displacement(space_, positions_[i], positions_[j]).norm_sq() <= r2)
                pairs.emplace_back(i, j);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace simps
