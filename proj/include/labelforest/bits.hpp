#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace labelforest {

inline constexpr uint64_t lowbit_mask(uint32_t n) {
    return n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
}

// lg x = max(1, log2 x) convention, applied under floor/ceil.
inline uint32_t floor_lg(uint64_t x) {
    assert(x >= 1);
    return std::max<uint32_t>(1, std::bit_width(x) - 1);
}

inline uint32_t ceil_lg(uint64_t x) {
    assert(x >= 1);
    return std::max<uint32_t>(1, std::bit_width(x - 1));
}

// Smallest integer >= s with k trailing zero bits.
inline uint64_t align_up(uint64_t s, uint32_t k) {
    uint64_t a = s & ~lowbit_mask(k);
    return a == s ? s : a + (uint64_t(1) << k);
}

// MSB-first bit sequence with a fixed 512-bit capacity. Appending past the
// capacity throws; labels whose construction would need more bits indicate a
// broken invariant upstream.
class BitString {
public:
    static constexpr uint32_t capacity = 512;

    BitString() = default;

    static BitString from_string(std::string_view s) {
        BitString out;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitString: bad character");
            out.push_back(c == '1');
        }
        return out;
    }

    uint32_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    void push_back(bool bit) {
        if (len_ >= capacity) throw std::length_error("BitString: capacity exceeded");
        if (bit) words_[len_ >> 6] |= uint64_t(1) << (63 - (len_ & 63));
        ++len_;
    }

    // Appends the low nbits of value, most significant first.
    void append_bits(uint64_t value, uint32_t nbits) {
        assert(nbits <= 64);
        if (nbits == 0) return;
        if (len_ + nbits > capacity) throw std::length_error("BitString: capacity exceeded");
        value &= lowbit_mask(nbits);
        uint32_t wi = len_ >> 6;
        uint32_t space = 64 - (len_ & 63);
        if (nbits <= space) {
            words_[wi] |= value << (space - nbits);
        } else {
            words_[wi] |= value >> (nbits - space);
            words_[wi + 1] = value << (64 - (nbits - space));
        }
        len_ += nbits;
    }

    void append(const BitString& other) {
        uint32_t pos = 0;
        while (pos < other.len_) {
            uint32_t chunk = std::min<uint32_t>(64, other.len_ - pos);
            append_bits(other.read_bits(pos, chunk), chunk);
            pos += chunk;
        }
    }

    bool bit(uint32_t i) const {
        assert(i < len_);
        return (words_[i >> 6] >> (63 - (i & 63))) & 1;
    }

    uint64_t read_bits(uint32_t pos, uint32_t nbits) const {
        assert(nbits <= 64 && pos + nbits <= len_);
        if (nbits == 0) return 0;
        uint32_t wi = pos >> 6;
        uint32_t off = pos & 63;
        if (off + nbits <= 64) {
            return (words_[wi] >> (64 - off - nbits)) & lowbit_mask(nbits);
        }
        uint32_t hi = 64 - off;
        uint32_t lo = nbits - hi;
        return ((words_[wi] & lowbit_mask(hi)) << lo) | (words_[wi + 1] >> (64 - lo));
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (uint32_t i = 0; i < len_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    // Bits left-padded with zeros to a multiple of 4, prefixed "x".
    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        std::string s = "x";
        uint32_t pad = (4 - len_ % 4) % 4;
        uint32_t total = len_ + pad;
        for (uint32_t i = 0; i < total; i += 4) {
            uint32_t nib = 0;
            for (uint32_t j = 0; j < 4; ++j) {
                uint32_t src = i + j;
                nib = (nib << 1) | (src >= pad && bit(src - pad) ? 1 : 0);
            }
            s += digits[nib];
        }
        return s;
    }

    bool operator==(const BitString& o) const {
        if (len_ != o.len_) return false;
        for (uint32_t i = 0; i * 64 < len_; ++i)
            if (words_[i] != o.words_[i]) return false;
        return true;
    }
    bool operator!=(const BitString& o) const { return !(*this == o); }

    // Lexicographic by bits, shorter-prefix first.
    bool operator<(const BitString& o) const {
        uint32_t common = std::min(len_, o.len_);
        for (uint32_t i = 0; i * 64 < common; ++i) {
            uint32_t hi = std::min<uint32_t>(64, common - i * 64);
            uint64_t a = hi == 64 ? words_[i] : words_[i] >> (64 - hi);
            uint64_t b = hi == 64 ? o.words_[i] : o.words_[i] >> (64 - hi);
            if (a != b) return a < b;
        }
        return len_ < o.len_;
    }

    size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ len_;
        for (uint32_t i = 0; i * 64 < len_; ++i) {
            h ^= words_[i];
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return static_cast<size_t>(h);
    }

private:
    std::array<uint64_t, capacity / 64> words_{};
    uint32_t len_ = 0;
};

struct BitStringHash {
    size_t operator()(const BitString& s) const { return s.hash(); }
};

// Elias gamma: floor(lg2 x) zero bits, then the binary representation of x.
// Rejects 0; callers store value+1 for possibly-zero quantities.
inline void gamma_encode(BitString& out, uint64_t x) {
    if (x == 0) throw std::invalid_argument("gamma_encode: x must be positive");
    uint32_t l = std::bit_width(x) - 1;
    out.append_bits(0, l);
    out.append_bits(x, l + 1);
}

inline BitString gamma_encode(uint64_t x) {
    BitString s;
    gamma_encode(s, x);
    return s;
}

struct GammaDecoded {
    uint64_t value;
    uint32_t next;
};

inline std::optional<GammaDecoded> gamma_decode(const BitString& s, uint32_t pos) {
    uint32_t z = 0;
    while (pos + z < s.size() && !s.bit(pos + z)) ++z;
    if (z > 63 || pos + 2 * z + 1 > s.size()) return std::nullopt;
    return GammaDecoded{s.read_bits(pos + z, z + 1), pos + 2 * z + 1};
}

// Binary representation of a without its k least significant bits; empty when
// k >= bit-length of a.
inline BitString wlsb(uint64_t a, uint32_t k) {
    BitString s;
    uint32_t bl = std::bit_width(a);
    if (k < bl) s.append_bits(a >> k, bl - k);
    return s;
}

// Round-up floating pair (e, m). Decoded value b = m * 2^e satisfies
// a <= b <= a * (1 + 2^(1-t)); b = 0 iff a = 0.
struct ApproxCode {
    bool zero = true;
    uint32_t exponent = 0;
    uint64_t mantissa = 0;

    uint64_t value() const { return zero ? 0 : mantissa << exponent; }
    bool operator==(const ApproxCode&) const = default;
};

inline ApproxCode approx(uint64_t a, uint32_t t) {
    assert(t >= 1);
    if (a == 0) return {};
    uint32_t bl = std::bit_width(a);
    uint32_t e = bl > t ? bl - t : 0;
    uint64_t m = (a >> e) + ((a & lowbit_mask(e)) != 0 ? 1 : 0);
    return {false, e, m};
}

// Layout: '1' sentinel, zero flag, then [e+1]_gamma [m]_gamma for nonzero
// codes. The sentinel lets a decoder skip the leading zero padding of a
// fixed-width table entry unambiguously.
inline void approx_pack(BitString& out, const ApproxCode& c) {
    out.push_back(true);
    out.push_back(c.zero);
    if (!c.zero) {
        gamma_encode(out, uint64_t(c.exponent) + 1);
        gamma_encode(out, c.mantissa);
    }
}

inline BitString approx_pack(const ApproxCode& c) {
    BitString s;
    approx_pack(s, c);
    return s;
}

struct ApproxUnpacked {
    ApproxCode code;
    uint32_t next;
};

// Skips leading zero pad bits up to the sentinel (but not past limit), then
// inverts approx_pack.
inline std::optional<ApproxUnpacked> approx_unpack(const BitString& s, uint32_t pos,
                                                   uint32_t limit) {
    limit = std::min(limit, s.size());
    while (pos < limit && !s.bit(pos)) ++pos;
    if (pos >= limit || pos + 2 > s.size()) return std::nullopt;
    bool zero = s.bit(pos + 1);
    if (zero) return ApproxUnpacked{ApproxCode{}, pos + 2};
    auto e = gamma_decode(s, pos + 2);
    if (!e || e->value == 0 || e->value - 1 > 63) return std::nullopt;
    auto m = gamma_decode(s, e->next);
    if (!m) return std::nullopt;
    uint32_t exp = static_cast<uint32_t>(e->value - 1);
    if (std::bit_width(m->value) + exp > 64) return std::nullopt;
    return ApproxUnpacked{ApproxCode{false, exp, m->value}, m->next};
}

inline std::optional<ApproxUnpacked> approx_unpack(const BitString& s, uint32_t pos) {
    return approx_unpack(s, pos, s.size());
}

// Precision for a (1 + gamma^-3)-approximation: t = ceil(3 lg gamma) + 1,
// so 2^(1-t) <= gamma^-3.
inline uint32_t approx_precision_for(uint32_t gamma) {
    assert(gamma >= 1 && gamma <= 64);
    uint64_t cube = uint64_t(gamma) * gamma * gamma;
    return std::max<uint32_t>(3, ceil_lg(cube)) + 1;
}

}  // namespace labelforest
