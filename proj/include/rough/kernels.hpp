#pragma once

#include <cstddef>
#include <cstdint>

// Word-level set-algebra kernels over packed 64-bit words.
//
// Every set operation in the library bottoms out in one of these routines.
// A scalar reference table is always available; wider tables (AVX2) are
// compiled in where the toolchain allows and selected at runtime when the
// CPU supports them. All tables must produce bit-identical results; the
// test suite cross-checks them on random buffers.

namespace rough::kernels {

struct Ops {
    // dst = a & b / a | b / a & ~b. dst may alias a or b.
    void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a,
                    const std::uint64_t* b, std::size_t n);
    void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t n);
    void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a,
                       const std::uint64_t* b, std::size_t n);
    // dst = ~a. The caller is responsible for masking tail bits.
    void (*bit_not)(std::uint64_t* dst, const std::uint64_t* a, std::size_t n);

    bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // a & ~b == 0, i.e. a is a subset of b.
    bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);

    const char* name;
};

enum class Isa { scalar, avx2 };

// Scalar reference implementation, always available.
const Ops& scalar_ops();

#ifdef ROUGH_HAVE_AVX2
const Ops& avx2_ops();
#endif

// Best ISA supported by the running CPU.
Isa detect();

// Table currently in use. Defaults to detect(), or to the ISA named by the
// ROUGH_ISA environment variable ("scalar" or "avx2") when set and usable.
const Ops& active();

// Force a specific table. Returns false (and leaves the selection unchanged)
// when the requested ISA is not compiled in or not supported by the CPU.
bool select(Isa isa);

}  // namespace rough::kernels
