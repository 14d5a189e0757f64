#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace smspk {

// splitmix64 finalizer; used to derive independent stream seeds so that
// restarts, repetitions and grid cells can be evaluated in any order.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = base;
    for (std::uint64_t p : parts) s = mix_seed(s, p);
    return s;
}

// FNV-1a, for seeding by name rather than by list position.
inline std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace smspk
