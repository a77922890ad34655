// AVX2 variants of the word kernels. Compiled with -mavx2 -mpopcnt; only
// reachable after a runtime CPU check, so the rest of the library stays
// runnable on plain x86-64.

#include "rough/kernels.hpp"

#ifdef ROUGH_HAVE_AVX2

#include <immintrin.h>

namespace rough::kernels {

namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void v_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
           std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void v_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
          std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void v_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) computes ~x & y.
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void v_not(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_xor_si256(load(a + i), ones));
    for (; i < n; ++i) dst[i] = ~a[i];
}

bool v_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i stray = _mm256_andnot_si256(load(b + i), load(a + i));
        if (!_mm256_testz_si256(stray, stray)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool v_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i common = _mm256_and_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(common, common)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t v_popcount(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 1]));
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 2]));
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i + 3]));
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

constexpr Ops avx2_table = {
    v_and, v_or, v_andnot, v_not, v_equal, v_subset, v_intersects, v_popcount,
    "avx2",
};

}  // namespace

const Ops& avx2_ops() { return avx2_table; }

}  // namespace rough::kernels

#endif  // ROUGH_HAVE_AVX2
