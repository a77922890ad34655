#include "rough/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string_view>

namespace rough::kernels {

namespace {

void s_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
           std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
          std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void s_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void s_not(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

bool s_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool s_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool s_intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t s_popcount(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

constexpr Ops scalar_table = {
    s_and, s_or, s_andnot, s_not, s_equal, s_subset, s_intersects, s_popcount,
    "scalar",
};

bool cpu_has_avx2() {
#if defined(ROUGH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* table_for(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return &scalar_table;
    case Isa::avx2:
#ifdef ROUGH_HAVE_AVX2
        if (cpu_has_avx2()) return &avx2_ops();
#endif
        return nullptr;
    }
    return nullptr;
}

const Ops* resolve_initial() {
    if (const char* env = std::getenv("ROUGH_ISA")) {
        std::string_view want(env);
        if (want == "scalar") return &scalar_table;
        if (want == "avx2")
            if (const Ops* t = table_for(Isa::avx2)) return t;
        // Unrecognized or unusable request: fall through to detection.
    }
    return table_for(detect());
}

std::atomic<const Ops*>& slot() {
    static std::atomic<const Ops*> current{resolve_initial()};
    return current;
}

}  // namespace

const Ops& scalar_ops() { return scalar_table; }

Isa detect() {
    if (cpu_has_avx2()) return Isa::avx2;
    return Isa::scalar;
}

const Ops& active() { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) {
    const Ops* t = table_for(isa);
    if (!t) return false;
    slot().store(t, std::memory_order_relaxed);
    return true;
}

}  // namespace rough::kernels
