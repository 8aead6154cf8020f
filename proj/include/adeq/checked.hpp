#pragma once

#include <cstdint>
#include <stdexcept>

namespace adeq {

/// @brief Adds two 64-bit integers, throwing on overflow.
inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

/// @brief Subtracts two 64-bit integers, throwing on overflow.
inline long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

/// @brief Multiplies two 64-bit integers, throwing on overflow.
inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

/// @brief Mixes a value into a running FNV-1a style hash.
inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace adeq
