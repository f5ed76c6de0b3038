#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace paritylane {

// A set of logical qubit indices, stored as a 64-bit mask.  The symmetric
// difference of two sets is the XOR of their masks, which is the whole
// reason this type exists.
class LabelSet {
  public:
    constexpr LabelSet() = default;
    constexpr explicit LabelSet(std::uint64_t mask) : mask_(mask) {}

    static LabelSet single(unsigned index) {
        if (index >= 64) throw std::out_of_range("logical index exceeds 63");
        return LabelSet(std::uint64_t{1} << index);
    }
    static LabelSet pair(unsigned i, unsigned j) {
        if (i == j) throw std::invalid_argument("pair needs distinct indices");
        return LabelSet(single(i).mask() | single(j).mask());
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(unsigned index) const {
        return index < 64 && (mask_ >> index & 1);
    }
    int weight() const { return std::popcount(mask_); }

    // lowest / highest member; only valid when non-empty
    unsigned min_index() const { return static_cast<unsigned>(std::countr_zero(mask_)); }
    unsigned max_index() const { return 63u - static_cast<unsigned>(std::countl_zero(mask_)); }

    constexpr LabelSet operator^(LabelSet o) const { return LabelSet(mask_ ^ o.mask_); }
    LabelSet& operator^=(LabelSet o) { mask_ ^= o.mask_; return *this; }
    constexpr bool operator==(const LabelSet&) const = default;
    constexpr bool operator<(LabelSet o) const { return mask_ < o.mask_; }

    std::vector<unsigned> members() const {
        std::vector<unsigned> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            out.push_back(static_cast<unsigned>(std::countr_zero(m)));
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (unsigned i : members()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

  private:
    std::uint64_t mask_ = 0;
};

}  // namespace paritylane
