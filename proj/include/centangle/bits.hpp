#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace centangle {

// A subset of qubits encoded as a bitmask: bit i set <=> qubit i belongs to
// the subset. Qubit 0 is the least significant bit of a basis-state index.
using SubsetMask = std::uint32_t;

inline int popcount(std::uint64_t v) { return std::popcount(v); }

inline bool parity(std::uint64_t v) { return std::popcount(v) & 1; }

// Scatters the low popcount(mask) bits of `value` into the set positions of
// `mask`, ascending. Portable equivalent of the BMI2 PDEP instruction.
inline std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1, value >>= 1) {
        if (value & 1) out |= m & (~m + 1);
    }
    return out;
}

// Gathers the bits of `value` selected by `mask` into the low positions,
// ascending. Portable equivalent of the BMI2 PEXT instruction.
inline std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int b = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1, ++b) {
        if (value & (m & (~m + 1))) out |= std::uint32_t{1} << b;
    }
    return out;
}

// Renders a measurement outcome as a bit string with qubit 0 leftmost.
inline std::string bitstring(std::uint32_t z, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((z >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

// Parses a bit string with qubit 0 leftmost (inverse of bitstring()).
inline std::uint32_t parse_bitstring(const std::string& s) {
    if (s.empty() || s.size() > 32) throw std::invalid_argument("bitstring must have 1 to 32 characters");
    std::uint32_t z = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            z |= std::uint32_t{1} << i;
        } else if (s[i] != '0') {
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
        }
    }
    return z;
}

}  // namespace centangle
