#include "oriray/bigint.hpp"

#include <algorithm>
#include <bit>

namespace oriray {

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(uint64_t exponent) {
    BigUint r;
    r.limbs_.assign(size_t(exponent / 64) + 1, 0);
    r.limbs_.back() = uint64_t{1} << (exponent % 64);
    return r;
}

BigUint BigUint::plus(uint64_t small) const {
    BigUint r = *this;
    unsigned __int128 carry = small;
    for (size_t i = 0; i < r.limbs_.size() && carry; ++i) {
        unsigned __int128 s = (unsigned __int128)r.limbs_[i] + carry;
        r.limbs_[i] = uint64_t(s);
        carry = s >> 64;
    }
    if (carry) r.limbs_.push_back(uint64_t(carry));
    return r;
}

BigUint BigUint::times(const BigUint& other) const {
    BigUint r;
    r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        uint64_t a = limbs_[i];
        if (a == 0) continue;
        for (size_t j = 0; j < other.limbs_.size(); ++j) {
            unsigned __int128 cur = (unsigned __int128)a * other.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = uint64_t(cur);
            carry = cur >> 64;
        }
        size_t k = i + other.limbs_.size();
        while (carry) {
            unsigned __int128 cur = (unsigned __int128)r.limbs_[k] + carry;
            r.limbs_[k] = uint64_t(cur);
            carry = cur >> 64;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() <=> other.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

uint64_t BigUint::bit_length() const {
    uint64_t top = limbs_.back();
    if (top == 0) return 0;
    return (limbs_.size() - 1) * 64 + (64 - std::countl_zero(top));
}

std::string BigUint::to_decimal_string() const {
    std::vector<uint64_t> work = limbs_;
    std::string out;
    auto all_zero = [&]() {
        return std::all_of(work.begin(), work.end(), [](uint64_t w) { return w == 0; });
    };
    if (all_zero()) return "0";
    constexpr uint64_t kChunk = 1000000000000000000ull; // 10^18
    std::vector<uint64_t> chunks;
    while (!all_zero()) {
        unsigned __int128 rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = uint64_t(cur / kChunk);
            rem = cur % kChunk;
        }
        chunks.push_back(uint64_t(rem));
    }
    out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(18 - part.size(), '0') + part;
    }
    return out;
}

} // namespace oriray
