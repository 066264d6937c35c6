#include "doctest.h"

#include "oriray/bigint.hpp"

using namespace oriray;

TEST_CASE("big integer arithmetic") {
    BigUint a(1806);
    BigUint b = a.times(a.plus(1));
    CHECK(b == BigUint(1806ull * 1807ull));
    CHECK(b.to_decimal_string() == "3263442");

    CHECK(BigUint(0).to_decimal_string() == "0");
    CHECK(BigUint::pow2(10) == BigUint(1024));
    CHECK(BigUint::pow2(64).to_decimal_string() == "18446744073709551616");
    CHECK(BigUint::pow2(64).bit_length() == 65);
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint::pow2(100) > BigUint::pow2(99));
}

TEST_CASE("recurrence squares bit lengths") {
    // a_{k+1} = a_k (a_k + 1) roughly squares, so bit lengths about double
    BigUint a(1);
    uint64_t prev_bits = 1;
    for (int k = 1; k <= 14; ++k) {
        a = a.times(a.plus(1));
        uint64_t bits = a.bit_length();
        if (k > 3) {
            CHECK(bits >= 2 * prev_bits - 2);
            CHECK(bits <= 2 * prev_bits + 1);
        }
        prev_bits = bits;
    }
}

TEST_CASE("decimal printing round trips through known squares") {
    BigUint x(999999999999ull);
    CHECK(x.times(x).to_decimal_string() == "999999999998000000000001");
}
