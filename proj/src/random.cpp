#include "fockqsp/random.hpp"

#include <algorithm>

namespace fockqsp {

Sequence random_sequence(Rng& rng, Support support, int width) {
    long long left_d = support == Support::INT ? -width : -width + 1;
    if (((left_d % 2 + 2) % 2) != lattice_parity(support)) --left_d;
    std::string bits(static_cast<size_t>(width), '0');
    for (char& b : bits) b = rng.bit() ? '1' : '0';
    return Sequence(support, left_d, std::move(bits));
}

Sequence random_sequence_with_charge(Rng& rng, Support support, int width, long long charge) {
    Sequence a = random_sequence(rng, support, width);
    // A unit content shift drops the charge by one per step.
    return a.shifted_d(2 * (a.charge() - charge));
}

Weight random_dominant(Rng& rng, LieType type, long long max_coord_d) {
    const long long lo = coord_parity(type.family);
    long long top = max_coord_d;
    if (((top - lo) % 2 + 2) % 2 != 0) --top;
    const long long values = (top - lo) / 2 + 1;
    std::vector<long long> coords(static_cast<size_t>(type.rank));
    for (auto& c : coords) c = lo + 2 * rng.below(values);
    std::sort(coords.rbegin(), coords.rend());
    return Weight{type, std::move(coords)};
}

std::vector<FockVector> relation_sample_pool(Rng& rng, Support support, size_t count, int width) {
    std::vector<FockVector> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (i % 4 == 3) {
            // Embedded dominant weight on the matching support.
            const LieFamily fam = support == Support::INT ? LieFamily::C : LieFamily::B_HALF;
            const int rank = 1 + static_cast<int>(rng.below(4));
            Weight w = random_dominant(rng, LieType{fam, rank}, 12);
            out.push_back(FockVector::basis(embed(w)));
        } else {
            out.push_back(FockVector::basis(random_sequence(rng, support, width)));
        }
    }
    return out;
}

}  // namespace fockqsp
