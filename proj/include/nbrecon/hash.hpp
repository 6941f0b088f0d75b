/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_HASH_HPP
#define NBRECON_HASH_HPP

#include <cstdint>
#include <span>
#include <string_view>

namespace nbrecon {

// 64-bit FNV-1a. Stable across platforms; used for frame verification tags
// and file checksums (integrity, not cryptography).
inline constexpr std::string_view kHashAlgorithmId = "fnv1a-64";

inline uint64_t fnv1a64(std::span<const uint8_t> data, uint64_t h = 0xcbf29ce484222325ULL) {
    for (uint8_t b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace nbrecon

#endif
