#include <doctest.h>

#include <random>

#include "labelforest/bits.hpp"

using namespace labelforest;

TEST_CASE("lg convention floors at 1") {
    CHECK(floor_lg(1) == 1);
    CHECK(floor_lg(2) == 1);
    CHECK(floor_lg(3) == 1);
    CHECK(floor_lg(4) == 2);
    CHECK(floor_lg(7) == 2);
    CHECK(floor_lg(8) == 3);
    CHECK(ceil_lg(1) == 1);
    CHECK(ceil_lg(2) == 1);
    CHECK(ceil_lg(3) == 2);
    CHECK(ceil_lg(4) == 2);
    CHECK(ceil_lg(5) == 3);
}

TEST_CASE("align_up snaps to k trailing zeros") {
    CHECK(align_up(0, 3) == 0);
    CHECK(align_up(1, 3) == 8);
    CHECK(align_up(8, 3) == 8);
    CHECK(align_up(9, 0) == 9);
    CHECK(align_up(12, 2) == 12);
    CHECK(align_up(13, 2) == 16);
}

TEST_CASE("BitString append/read across word boundaries") {
    BitString s;
    s.append_bits(0xdeadbeefcafef00dull, 64);
    s.append_bits(0x5, 3);
    s.append_bits(0xffffffffffffffffull, 64);
    CHECK(s.size() == 131);
    CHECK(s.read_bits(0, 64) == 0xdeadbeefcafef00dull);
    CHECK(s.read_bits(64, 3) == 0x5);
    CHECK(s.read_bits(67, 64) == 0xffffffffffffffffull);
    CHECK(s.read_bits(60, 8) == 0xdb);  // d | 101...

    BitString t = BitString::from_string(s.to_string());
    CHECK(t == s);
}

TEST_CASE("BitString capacity is hard") {
    BitString s;
    for (int i = 0; i < 8; ++i) s.append_bits(0, 64);
    CHECK(s.size() == 512);
    CHECK_THROWS_AS(s.push_back(true), std::length_error);
}

TEST_CASE("BitString ordering and hex") {
    BitString a = BitString::from_string("0110");
    BitString b = BitString::from_string("01101");
    CHECK(a < b);
    CHECK(!(b < a));
    CHECK(a.to_hex() == "x6");
    CHECK(BitString::from_string("10110100").to_hex() == "xb4");
    CHECK(BitString::from_string("110").to_hex() == "x6");  // left-padded
}

TEST_CASE("gamma code fixed points") {
    CHECK(gamma_encode(1).to_string() == "1");
    CHECK(gamma_encode(2).to_string() == "010");
    CHECK(gamma_encode(5).to_string() == "00101");
    CHECK_THROWS_AS(gamma_encode(0), std::invalid_argument);
}

TEST_CASE("gamma round-trips and rejects truncation") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        uint64_t x = (rng() & lowbit_mask(rng() % 40)) + 1;
        BitString s = gamma_encode(x);
        auto d = gamma_decode(s, 0);
        REQUIRE(d);
        CHECK(d->value == x);
        CHECK(d->next == s.size());
        BitString cut;
        for (uint32_t j = 0; j + 1 < s.size(); ++j) cut.push_back(s.bit(j));
        CHECK(!gamma_decode(cut, 0));
    }
    CHECK(!gamma_decode(BitString{}, 0));
    CHECK(!gamma_decode(BitString::from_string("0000"), 0));
}

TEST_CASE("wlsb drops low bits") {
    CHECK(wlsb(12, 2).to_string() == "11");
    CHECK(wlsb(12, 0).to_string() == "1100");
    CHECK(wlsb(12, 4).to_string() == "");
    CHECK(wlsb(0, 0).to_string() == "");
}

TEST_CASE("approx fixed point and zero") {
    ApproxCode c = approx(1000, 4);
    CHECK(c.value() == 1024);
    CHECK(approx(0, 7).value() == 0);
    CHECK(approx(0, 7).zero);
    CHECK(approx(9, 10).value() == 9);  // exact when a fits t bits
}

TEST_CASE("approx contract and packing") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5000; ++i) {
        uint64_t a = rng() & lowbit_mask(rng() % 64);
        uint32_t t = 1 + rng() % 32;
        ApproxCode c = approx(a, t);
        uint64_t b = c.value();
        CHECK(b >= a);
        unsigned __int128 half = (unsigned __int128)1 << (t - 1);
        if (a > 0) CHECK((unsigned __int128)b * half <= a * (half + 1));

        BitString packed = approx_pack(c);
        auto u = approx_unpack(packed, 0);
        REQUIRE(u);
        CHECK(u->code == c);
        CHECK(u->next == packed.size());
    }
}

TEST_CASE("approx_unpack skips zero padding and rejects noise") {
    BitString padded;
    padded.append_bits(0, 5);
    approx_pack(padded, approx(1000, 4));
    auto u = approx_unpack(padded, 0);
    REQUIRE(u);
    CHECK(u->code.value() == 1024);

    CHECK(!approx_unpack(BitString::from_string("0000"), 0));
    CHECK(!approx_unpack(BitString{}, 0));
    // the limit bounds only the sentinel search inside the padded field
    BitString far;
    far.append_bits(0, 6);
    approx_pack(far, approx(3, 2));
    CHECK(!approx_unpack(far, 0, 4));
    CHECK(approx_unpack(far, 0, 7));
}

TEST_CASE("precision matches the gamma^-3 target") {
    for (uint32_t g = 1; g <= 64; ++g) {
        uint32_t t = approx_precision_for(g);
        // 2^{1-t} <= g^-3
        CHECK(((unsigned __int128)1 << (t - 1)) >= (unsigned __int128)g * g * g);
    }
    CHECK(approx_precision_for(1) == 4);
}
