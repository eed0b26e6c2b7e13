#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taut/combinatorics.hpp"
#include "taut/integer.hpp"

namespace taut {

/**
 * Partition of a nonnegative integer: a multiset of positive parts, stored
 * sorted descending.  The empty partition (of 0) is allowed and has
 * automorphism order 1.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (long p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<long>());
    }

    const std::vector<long>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    long size() const {
        long s = 0;
        for (long p : parts_) s += p;
        return s;
    }

    /// Order of the group permuting equal parts: product of (multiplicity of v)!.
    Int aut_order() const {
        Int a(1);
        size_t i = 0;
        while (i < parts_.size()) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            a *= factorial(static_cast<long>(j - i));
            i = j;
        }
        return a;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;

    std::string to_string() const {
        std::string out = "{";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + "}";
    }

private:
    std::vector<long> parts_;
};

/**
 * All partitions of n, optionally restricted to a given length, in
 * lexicographically decreasing order ({3}, {2,1}, {1,1,1}).  Part(0, 0) is
 * the singleton {empty partition}.
 */
inline std::vector<Partition> partitions_of(long n, std::optional<int> length = std::nullopt) {
    if (n < 0) throw std::domain_error("partitions_of: negative argument");
    if (length && *length < 0) throw std::domain_error("partitions_of: negative length");
    std::vector<Partition> out;
    std::vector<long> current;

    auto emit = [&]() {
        if (!length || static_cast<int>(current.size()) == *length)
            out.emplace_back(Partition(current));
    };

    // Descending enumeration: next part is at most the previous one.
    auto recurse = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        if (length && static_cast<int>(current.size()) >= *length &&
            remaining > 0)
            return;
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };

    recurse(recurse, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace taut
