#pragma once

// Shifted diagrams, truncated shifted strips, and the partial order their
// cells inherit from "rows and columns increase".
//
// Coordinates are 1-based shifted coordinates: row i starts at column i.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sytstrip {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// lambda_1 > lambda_2 > ... > lambda_d >= 1.
class StrictPartition {
public:
    /// Throws std::invalid_argument unless parts are positive and strictly decreasing.
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;  // |lambda|

    bool operator==(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

/// The staircase-truncated shifted strip: `rows` rows of `width` cells each.
struct StripSpec {
    int rows = 1;
    int width = 1;

    int cells() const { return rows * width; }
    void validate() const;  // throws std::invalid_argument on rows or width < 1
    bool operator==(const StripSpec&) const = default;
};

using ShapeSpec = std::variant<StripSpec, StrictPartition>;

/// Canonical text: `strip:RxW` or `shifted:l1,l2,...`.
std::string to_string(const ShapeSpec& shape);
ShapeSpec parse_shape(std::string_view text);

/// Cells of a shape with rows stored as contiguous column intervals, plus the
/// cover relation. Immutable after construction.
class CellPoset {
public:
    CellPoset(std::vector<int> row_starts, std::vector<int> row_lengths,
              std::vector<std::pair<Cell, Cell>> extra_covers = {});

    std::size_t size() const { return cells_.size(); }
    int rows() const { return static_cast<int>(row_lengths_.size()); }
    int row_start(int row) const { return row_starts_[row - 1]; }
    int row_length(int row) const { return row_lengths_[row - 1]; }

    /// Cells in row-major order.
    const std::vector<Cell>& cells() const { return cells_; }
    /// Pairs (a, b) of cell indices where a is covered by b.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    const std::vector<std::size_t>& predecessors(std::size_t cell) const { return preds_[cell]; }
    const std::vector<std::size_t>& successors(std::size_t cell) const { return succs_[cell]; }

    /// Index of `c`, or size() when `c` is not a cell.
    std::size_t index_of(Cell c) const;
    bool contains(Cell c) const { return index_of(c) != size(); }
    bool covered_by(Cell lower, Cell upper) const;

private:
    std::vector<int> row_starts_;
    std::vector<int> row_lengths_;
    std::vector<std::size_t> row_offsets_;
    std::vector<Cell> cells_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<std::vector<std::size_t>> succs_;
};

/// Row i occupies columns i .. i+width-1.
///
/// For width 1 the cells (i,i) share no row or column, so the plain cover rule
/// gives an antichain. Such strips are modelled as the chain (i,i) -> (i+1,i+1),
/// which is what the matrix characterization and the anchor g(3,1) = 1 require.
/// For width >= 2 that extra relation is already implied and nothing is added.
CellPoset build_strip(const StripSpec& spec);

/// Row i occupies columns i .. i+lambda_i-1.
CellPoset build_shifted(const StrictPartition& lambda);

CellPoset build_poset(const ShapeSpec& shape);

/// Order ideal encoded by the filled prefix length of every row.
using Profile = std::vector<int>;

/// True when the prefixes in `profile` form a downward-closed set.
bool is_order_ideal(const CellPoset& poset, const Profile& profile);

/// True when the next cell of `row` can be added to the ideal `profile`.
bool can_extend(const CellPoset& poset, const Profile& profile, int row);

/// Visits every order ideal exactly once, in order of increasing ideal size
/// and lexicographically increasing profile within a size.
void for_each_profile(const CellPoset& poset, const std::function<void(const Profile&)>& visit);

/// All order ideals, including the empty and the full one.
std::vector<Profile> frontier_profiles(const CellPoset& poset);

}  // namespace sytstrip

namespace sytstrip {

/// Every strict partition of every size 1..max_size, by size then reverse-lex.
std::vector<StrictPartition> strict_partitions_up_to(int max_size);

}  // namespace sytstrip
