#include "sytstrip/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sytstrip {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("strict partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("strict partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]) {
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
        }
    }
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

void StripSpec::validate() const {
    if (rows < 1 || width < 1) {
        throw std::invalid_argument("strip needs rows >= 1 and width >= 1, got " +
                                    std::to_string(rows) + "x" + std::to_string(width));
    }
}

std::string to_string(const ShapeSpec& shape) {
    if (const auto* strip = std::get_if<StripSpec>(&shape)) {
        return "strip:" + std::to_string(strip->rows) + "x" + std::to_string(strip->width);
    }
    std::string out = "shifted:";
    const auto& parts = std::get<StrictPartition>(shape).parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("cannot parse integer '" + std::string(s) + "' in " +
                                    std::string(context));
    }
    return value;
}

}  // namespace

ShapeSpec parse_shape(std::string_view text) {
    text = trim(text);
    constexpr std::string_view strip_tag = "strip:";
    constexpr std::string_view shifted_tag = "shifted:";
    if (text.starts_with(strip_tag)) {
        auto body = text.substr(strip_tag.size());
        auto x = body.find_first_of("xX");
        if (x == std::string_view::npos) {
            throw std::invalid_argument("strip shape must look like strip:RxW");
        }
        StripSpec spec{parse_int(body.substr(0, x), text), parse_int(body.substr(x + 1), text)};
        spec.validate();
        return spec;
    }
    if (text.starts_with(shifted_tag)) {
        auto body = text.substr(shifted_tag.size());
        std::vector<int> parts;
        while (true) {
            auto comma = body.find(',');
            parts.push_back(parse_int(body.substr(0, comma), text));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return StrictPartition(std::move(parts));
    }
    throw std::invalid_argument("unknown shape '" + std::string(text) +
                                "' (expected strip:RxW or shifted:l1,l2,...)");
}

CellPoset::CellPoset(std::vector<int> row_starts, std::vector<int> row_lengths,
                     std::vector<std::pair<Cell, Cell>> extra_covers)
    : row_starts_(std::move(row_starts)), row_lengths_(std::move(row_lengths)) {
    if (row_starts_.size() != row_lengths_.size()) {
        throw std::invalid_argument("row starts and lengths differ in size");
    }
    for (std::size_t r = 0; r < row_lengths_.size(); ++r) {
        if (row_lengths_[r] < 1) throw std::invalid_argument("empty row in cell poset");
        row_offsets_.push_back(cells_.size());
        for (int k = 0; k < row_lengths_[r]; ++k) {
            cells_.push_back(Cell{static_cast<int>(r) + 1, row_starts_[r] + k});
        }
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell c = cells_[i];
        if (auto right = index_of({c.row, c.col + 1}); right != size()) covers_.emplace_back(i, right);
        if (auto below = index_of({c.row + 1, c.col}); below != size()) covers_.emplace_back(i, below);
    }
    for (const auto& [lower, upper] : extra_covers) {
        auto a = index_of(lower);
        auto b = index_of(upper);
        if (a == size() || b == size() || !(lower.row < upper.row || (lower.row == upper.row && lower.col < upper.col))) {
            throw std::invalid_argument("extra cover must join two cells in reading order");
        }
        covers_.emplace_back(a, b);
    }
    preds_.resize(cells_.size());
    succs_.resize(cells_.size());
    for (const auto& [a, b] : covers_) {
        preds_[b].push_back(a);
        succs_[a].push_back(b);
    }
}

std::size_t CellPoset::index_of(Cell c) const {
    if (c.row < 1 || c.row > rows()) return size();
    const int start = row_starts_[c.row - 1];
    const int len = row_lengths_[c.row - 1];
    if (c.col < start || c.col >= start + len) return size();
    return row_offsets_[c.row - 1] + static_cast<std::size_t>(c.col - start);
}

bool CellPoset::covered_by(Cell lower, Cell upper) const {
    auto a = index_of(lower);
    auto b = index_of(upper);
    if (a == size() || b == size()) return false;
    const auto& p = preds_[b];
    return std::find(p.begin(), p.end(), a) != p.end();
}

CellPoset build_strip(const StripSpec& spec) {
    spec.validate();
    std::vector<int> starts(spec.rows);
    std::iota(starts.begin(), starts.end(), 1);
    std::vector<std::pair<Cell, Cell>> extra;
    if (spec.width == 1) {
        for (int i = 1; i < spec.rows; ++i) extra.push_back({{i, i}, {i + 1, i + 1}});
    }
    return CellPoset(std::move(starts), std::vector<int>(spec.rows, spec.width), std::move(extra));
}

CellPoset build_shifted(const StrictPartition& lambda) {
    std::vector<int> starts(lambda.length());
    std::iota(starts.begin(), starts.end(), 1);
    return CellPoset(std::move(starts), lambda.parts());
}

CellPoset build_poset(const ShapeSpec& shape) {
    return std::visit([](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StripSpec>) {
            return build_strip(s);
        } else {
            return build_shifted(s);
        }
    }, shape);
}

bool can_extend(const CellPoset& poset, const Profile& profile, int row) {
    const int filled = profile[row - 1];
    if (filled >= poset.row_length(row)) return false;
    const auto cell = poset.index_of({row, poset.row_start(row) + filled});
    for (auto pred : poset.predecessors(cell)) {
        const Cell p = poset.cells()[pred];
        if (profile[p.row - 1] <= p.col - poset.row_start(p.row)) return false;
    }
    return true;
}

bool is_order_ideal(const CellPoset& poset, const Profile& profile) {
    if (static_cast<int>(profile.size()) != poset.rows()) return false;
    for (int r = 1; r <= poset.rows(); ++r) {
        const int k = profile[r - 1];
        if (k < 0 || k > poset.row_length(r)) return false;
        for (int pos = 0; pos < k; ++pos) {
            const auto cell = poset.index_of({r, poset.row_start(r) + pos});
            for (auto pred : poset.predecessors(cell)) {
                const Cell p = poset.cells()[pred];
                if (profile[p.row - 1] <= p.col - poset.row_start(p.row)) return false;
            }
        }
    }
    return true;
}

void for_each_profile(const CellPoset& poset, const std::function<void(const Profile&)>& visit) {
    std::set<Profile> layer{Profile(poset.rows(), 0)};
    while (!layer.empty()) {
        std::set<Profile> next;
        for (const auto& profile : layer) {
            visit(profile);
            for (int r = 1; r <= poset.rows(); ++r) {
                if (!can_extend(poset, profile, r)) continue;
                Profile grown = profile;
                ++grown[r - 1];
                next.insert(std::move(grown));
            }
        }
        layer = std::move(next);
    }
}

std::vector<Profile> frontier_profiles(const CellPoset& poset) {
    std::vector<Profile> out;
    for_each_profile(poset, [&](const Profile& p) { out.push_back(p); });
    return out;
}

}  // namespace sytstrip

namespace sytstrip {

namespace {

void strict_parts(int remaining, int max_part, std::vector<int>& prefix, std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        strict_parts(remaining - p, p - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_up_to(int max_size) {
    std::vector<StrictPartition> out;
    std::vector<int> prefix;
    for (int size = 1; size <= max_size; ++size) strict_parts(size, size, prefix, out);
    return out;
}

}  // namespace sytstrip
