#pragma once

#include <random>

#include "fockqsp/weights.hpp"

namespace fockqsp {

/// Deterministic source for all sampled test data; every suite's
/// randomness flows from one seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    bool bit() { return next() & 1; }
    long long below(long long n) { return static_cast<long long>(next() % static_cast<uint64_t>(n)); }

  private:
    std::mt19937_64 eng_;
};

/// width uniform bits in a window starting near doubled position -width.
Sequence random_sequence(Rng& rng, Support support, int width);

/// Same, then translated to the requested charge.
Sequence random_sequence_with_charge(Rng& rng, Support support, int width, long long charge);

Weight random_dominant(Rng& rng, LieType type, long long max_coord_d);

/// Mix of unconstrained random sequences and embedded dominant weights,
/// as basis vectors.
std::vector<FockVector> relation_sample_pool(Rng& rng, Support support, size_t count, int width);

}  // namespace fockqsp
