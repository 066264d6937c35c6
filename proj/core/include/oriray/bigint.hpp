#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace oriray {

/// Unsigned big integer, little-endian 64-bit limbs. Just enough arithmetic
/// for doubly-exponential size recurrences and bound checks.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(uint64_t v) : limbs_{v} {}

    static BigUint pow2(uint64_t exponent);

    BigUint plus(uint64_t small) const;
    BigUint times(const BigUint& other) const;

    std::strong_ordering operator<=>(const BigUint& other) const;
    bool operator==(const BigUint& other) const { return (*this <=> other) == 0; }

    /// Number of bits in the binary representation (0 has bit length 0).
    uint64_t bit_length() const;

    bool fits_u64() const { return limbs_.size() == 1; }
    uint64_t as_u64() const { return limbs_[0]; }

    std::string to_decimal_string() const;

private:
    void trim();
    std::vector<uint64_t> limbs_;
};

} // namespace oriray
