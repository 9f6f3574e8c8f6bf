#include "arbor/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

// Edge ids: horizontal edge (i,j)-(i+1,j) and vertical edge (i,j)-(i,j+1).
struct EdgeKey {
    static std::uint64_t horizontal(std::size_t i, std::size_t j) { return (std::uint64_t{j} << 32 | i) << 1; }
    static std::uint64_t vertical(std::size_t i, std::size_t j) { return ((std::uint64_t{j} << 32 | i) << 1) | 1; }
};

// Cell edges in local order: bottom, right, top, left.
enum Edge : int { B = 0, R = 1, T = 2, L = 3 };

}  // namespace

std::vector<Polyline> marching_squares(const SurfaceGrid& grid, double level) {
    const std::size_t nx = grid.x_values.size();
    const std::size_t ny = grid.y_values.size();
    if (nx < 2 || ny < 2) throw InvalidArgument("contouring needs at least a 2x2 grid");
    if (grid.z.size() != ny) throw InvalidArgument("z has wrong row count");
    for (const auto& row : grid.z)
        if (row.size() != nx) throw InvalidArgument("z has wrong column count");

    const auto& xv = grid.x_values;
    const auto& yv = grid.y_values;
    const auto& z = grid.z;
    auto above = [&](std::size_t i, std::size_t j) { return z[j][i] > level; };

    std::unordered_map<std::uint64_t, std::array<double, 2>> crossing;
    auto edge_point = [&](std::uint64_t key, std::size_t i, std::size_t j, bool vertical) {
        if (crossing.count(key)) return;
        if (vertical) {
            const double t = (level - z[j][i]) / (z[j + 1][i] - z[j][i]);
            crossing[key] = {xv[i], yv[j] + t * (yv[j + 1] - yv[j])};
        } else {
            const double t = (level - z[j][i]) / (z[j][i + 1] - z[j][i]);
            crossing[key] = {xv[i] + t * (xv[i + 1] - xv[i]), yv[j]};
        }
    };

    std::vector<std::array<std::uint64_t, 2>> segments;
    for (std::size_t j = 0; j + 1 < ny; ++j) {
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            const int config = (above(i, j) ? 1 : 0) | (above(i + 1, j) ? 2 : 0) | (above(i + 1, j + 1) ? 4 : 0) |
                               (above(i, j + 1) ? 8 : 0);
            if (config == 0 || config == 15) continue;

            const std::array<std::uint64_t, 4> keys{EdgeKey::horizontal(i, j), EdgeKey::vertical(i + 1, j),
                                                    EdgeKey::horizontal(i, j + 1), EdgeKey::vertical(i, j)};
            auto add = [&](Edge a, Edge b) {
                for (Edge e : {a, b}) {
                    switch (e) {
                        case B: edge_point(keys[B], i, j, false); break;
                        case R: edge_point(keys[R], i + 1, j, true); break;
                        case T: edge_point(keys[T], i, j + 1, false); break;
                        case L: edge_point(keys[L], i, j, true); break;
                    }
                }
                segments.push_back({keys[a], keys[b]});
            };
            const double center = 0.25 * (z[j][i] + z[j][i + 1] + z[j + 1][i + 1] + z[j + 1][i]);
            switch (config) {
                case 1: add(L, B); break;
                case 2: add(B, R); break;
                case 3: add(L, R); break;
                case 4: add(R, T); break;
                case 5:
                    if (center > level) { add(B, R); add(T, L); }
                    else { add(L, B); add(R, T); }
                    break;
                case 6: add(B, T); break;
                case 7: add(L, T); break;
                case 8: add(T, L); break;
                case 9: add(B, T); break;
                case 10:
                    if (center > level) { add(L, B); add(R, T); }
                    else { add(B, R); add(T, L); }
                    break;
                case 11: add(R, T); break;
                case 12: add(L, R); break;
                case 13: add(B, R); break;
                case 14: add(L, B); break;
                default: break;
            }
        }
    }

    // Stitch: every edge is shared by at most two segments.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> incident;
    for (std::size_t s = 0; s < segments.size(); ++s)
        for (auto key : segments[s]) incident[key].push_back(s);

    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> lines;
    auto trace = [&](std::size_t start, std::uint64_t from) {
        Polyline line;
        line.level = level;
        line.points.push_back(crossing.at(from));
        std::size_t seg = start;
        std::uint64_t at = from;
        while (true) {
            used[seg] = true;
            const std::uint64_t next = segments[seg][0] == at ? segments[seg][1] : segments[seg][0];
            line.points.push_back(crossing.at(next));
            at = next;
            std::size_t follow = segments.size();
            for (auto cand : incident[at])
                if (!used[cand]) follow = cand;
            if (follow == segments.size()) {
                line.closed = at == from && line.points.size() > 2;
                break;
            }
            seg = follow;
        }
        lines.push_back(std::move(line));
    };

    // open chains first, starting from boundary edges (degree 1), in segment order
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (used[s]) continue;
        for (auto key : segments[s]) {
            if (incident[key].size() == 1 && !used[s]) trace(s, key);
        }
    }
    for (std::size_t s = 0; s < segments.size(); ++s)
        if (!used[s]) trace(s, segments[s][0]);
    return lines;
}

std::vector<double> contour_levels(double zmin, double zmax, double step) {
    if (!(step > 0) || !std::isfinite(step)) throw InvalidArgument("contour level step must be positive");
    std::vector<double> levels;
    if (!(zmin < zmax)) return levels;
    for (double k = std::floor(zmin / step) + 1;; k += 1.0) {
        const double level = k * step;
        if (level >= zmax) break;
        if (level > zmin) levels.push_back(level);
        if (levels.size() > 100000) throw InvalidArgument("contour level step too small for the data range");
    }
    return levels;
}

std::vector<Polyline> contour_lines(const SurfaceGrid& grid, double step) {
    double zmin = INFINITY, zmax = -INFINITY;
    for (const auto& row : grid.z)
        for (double v : row) {
            if (!std::isfinite(v)) throw InvalidArgument("surface holds a non-finite value");
            zmin = std::min(zmin, v);
            zmax = std::max(zmax, v);
        }
    std::vector<Polyline> out;
    for (double level : contour_levels(zmin, zmax, step)) {
        auto lines = marching_squares(grid, level);
        out.insert(out.end(), std::make_move_iterator(lines.begin()), std::make_move_iterator(lines.end()));
    }
    return out;
}

}  // namespace arbor
