#pragma once

/**
 * @file ring.hpp
 * @brief Variable sets of polynomial rings, organized in named blocks.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclerees {

/// Hard cap on ring size; exponent vectors are stored inline.
inline constexpr std::size_t max_variables = 32;

struct variable_block {
    std::string name;
    std::vector<std::string> variables;
};

/**
 * An ordered list of named variable blocks. Variable indices follow the
 * declaration order: block 0 first, then block 1, and so on.
 *
 * For the cycle rings built by make_cycle_ring the layout is
 * Y = (y1, ..., y_{n-1}, y0), X = (x1, ..., x_{n-1}, x0), then S = (s).
 */
class ring_spec {
public:
    ring_spec(std::size_t cycle_size, std::vector<variable_block> blocks)
        : n_(cycle_size), blocks_(std::move(blocks)) {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            for (const auto& v : blocks_[b].variables) {
                if (v.empty()) {
                    throw std::invalid_argument("ring_spec: empty variable name");
                }
                if (!index_.emplace(v, names_.size()).second) {
                    throw std::invalid_argument("ring_spec: duplicate variable '" + v + "'");
                }
                names_.push_back(v);
                block_of_.push_back(b);
            }
        }
        if (names_.size() > max_variables) {
            throw std::invalid_argument("ring_spec: more than " + std::to_string(max_variables) + " variables");
        }
        build_display_order();
    }

    [[nodiscard]] std::size_t cycle_size() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::vector<variable_block>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] const std::string& name(std::size_t var) const { return names_.at(var); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] std::size_t block_of(std::size_t var) const { return block_of_.at(var); }

    [[nodiscard]] std::optional<std::size_t> find(const std::string& var) const {
        auto it = index_.find(var);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    [[nodiscard]] std::size_t index(const std::string& var) const {
        auto i = find(var);
        if (!i) {
            throw std::invalid_argument("ring_spec: unknown variable '" + var + "'");
        }
        return *i;
    }

    [[nodiscard]] std::optional<std::size_t> find_block(const std::string& block) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].name == block) {
                return b;
            }
        }
        return std::nullopt;
    }

    /// Variable indices of the named block, in declaration order (empty if absent).
    [[nodiscard]] std::vector<std::size_t> block_indices(const std::string& block) const {
        std::vector<std::size_t> out;
        auto b = find_block(block);
        if (!b) {
            return out;
        }
        for (std::size_t v = 0; v < names_.size(); ++v) {
            if (block_of_[v] == *b) {
                out.push_back(v);
            }
        }
        return out;
    }

    /// Order in which variables are printed: by name prefix, then numeric suffix.
    [[nodiscard]] const std::vector<std::size_t>& display_order() const noexcept { return display_; }

    friend bool operator==(const ring_spec& a, const ring_spec& b) {
        if (a.n_ != b.n_ || a.blocks_.size() != b.blocks_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
            if (a.blocks_[i].name != b.blocks_[i].name || a.blocks_[i].variables != b.blocks_[i].variables) {
                return false;
            }
        }
        return true;
    }

    /// Subring keeping only the listed variables (block structure preserved,
    /// empty blocks dropped). Returns the subring and old->new index map.
    [[nodiscard]] std::pair<std::shared_ptr<const ring_spec>, std::vector<std::optional<std::size_t>>>
    subring(const std::vector<bool>& keep) const {
        if (keep.size() != size()) {
            throw std::invalid_argument("ring_spec::subring: mask size mismatch");
        }
        std::vector<variable_block> blocks;
        std::vector<std::optional<std::size_t>> map(size());
        std::size_t next = 0;
        std::size_t var = 0;
        for (const auto& blk : blocks_) {
            variable_block nb{blk.name, {}};
            for (const auto& v : blk.variables) {
                if (keep[var]) {
                    nb.variables.push_back(v);
                    map[var] = next++;
                }
                ++var;
            }
            if (!nb.variables.empty()) {
                blocks.push_back(std::move(nb));
            }
        }
        return {std::make_shared<const ring_spec>(n_, std::move(blocks)), std::move(map)};
    }

private:
    void build_display_order() {
        display_.resize(names_.size());
        for (std::size_t i = 0; i < display_.size(); ++i) {
            display_[i] = i;
        }
        auto split = [](const std::string& s) {
            std::size_t p = s.size();
            while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1])) != 0) {
                --p;
            }
            const long num = p < s.size() ? std::stol(s.substr(p)) : -1;
            return std::pair<std::string, long>(s.substr(0, p), num);
        };
        std::stable_sort(display_.begin(), display_.end(), [&](std::size_t a, std::size_t b) {
            return split(names_[a]) < split(names_[b]);
        });
    }

    std::size_t n_;
    std::vector<variable_block> blocks_;
    std::vector<std::string> names_;
    std::vector<std::size_t> block_of_;
    std::vector<std::size_t> display_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ring_ptr = std::shared_ptr<const ring_spec>;

inline bool same_ring(const ring_ptr& a, const ring_ptr& b) { return a == b || (a && b && *a == *b); }

/// Reduces a cyclic index to its residue in [0, n).
constexpr std::size_t cyclic(long i, std::size_t n) {
    const long m = static_cast<long>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

/// Ring K[y, x] (and s when requested) for the n-cycle.
inline ring_ptr make_cycle_ring(std::size_t n, bool with_s = false) {
    if (n < 2) {
        throw std::invalid_argument("make_cycle_ring: n must be at least 2");
    }
    variable_block y{"Y", {}};
    variable_block x{"X", {}};
    for (std::size_t i = 1; i <= n; ++i) {
        y.variables.push_back("y" + std::to_string(i % n));
        x.variables.push_back("x" + std::to_string(i % n));
    }
    std::vector<variable_block> blocks{std::move(y), std::move(x)};
    if (with_s) {
        blocks.push_back({"S", {"s"}});
    }
    return std::make_shared<const ring_spec>(n, std::move(blocks));
}

/// Index of y_i in a cycle ring (i taken mod n).
inline std::size_t y_var(std::size_t n, long i) {
    const std::size_t r = cyclic(i, n);
    return r == 0 ? n - 1 : r - 1;
}

/// Index of x_i in a cycle ring (i taken mod n).
inline std::size_t x_var(std::size_t n, long i) { return n + y_var(n, i); }

/// Index of s in a cycle ring built with_s.
inline std::size_t s_var(std::size_t n) { return 2 * n; }

}  // namespace cyclerees
