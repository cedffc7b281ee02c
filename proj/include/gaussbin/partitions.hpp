#pragma once

/**
 * @file partitions.hpp
 * @brief Integer partitions with cached prefix sums Y_i.
 */

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussbin {

class Partition {
public:
    Partition() : prefix_{0} {}

    /// Validates that parts are weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        prefix_.reserve(parts_.size() + 1);
        prefix_.push_back(0);
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            prefix_.push_back(prefix_.back() + parts_[i]);
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept { return prefix_.back(); }

    /// lambda_j, 1-based, zero beyond the length.
    int part_at(std::size_t j) const {
        if (j == 0) throw std::out_of_range("part index is 1-based");
        return j <= parts_.size() ? parts_[j - 1] : 0;
    }

    /// Y_i = lambda_1 + ... + lambda_i; Y_0 = 0, constant past the length.
    int prefix_at(std::size_t i) const noexcept {
        return i < prefix_.size() ? prefix_[i] : prefix_.back();
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> prefix_;
};

/**
 * All partitions of b in reverse-lexicographic order, so (b) comes first and
 * (1,...,1) last. b = 0 gives the single empty partition.
 *
 * Successor step: find the rightmost part > 1, decrement it, and refill the
 * tail greedily with parts no larger than the decremented value.
 */
inline std::vector<Partition> partitions_of(int b) {
    if (b < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    if (b == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{b};
    for (;;) {
        out.emplace_back(cur);
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty()) break;
        int pivot = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            int p = rest < pivot ? rest : pivot;
            cur.push_back(p);
            rest -= p;
        }
    }
    return out;
}

}  // namespace gaussbin
