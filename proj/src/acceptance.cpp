#include "fockqsp/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "fockqsp/json_io.hpp"
#include "fockqsp/random.hpp"

namespace fockqsp {

using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};
// Index-set configurations of the relation grid: type C at ell in
// {5,7,8}, type B odd at ell in {5,7} on both supports, type B even at
// ell in {8,10,14} (modulus ell/2) on both supports. Listed with the
// duplicates collapsed: the even-ell B configurations at modulus 5 and
// 7 coincide with the type C / odd-ell assignments.
std::vector<QSPConfig> relation_configs() {
    return {
        QSPConfig{Support::INT, 5, false},   // C ell=5; B even ell=10
        QSPConfig{Support::INT, 7, false},   // C ell=7; B even ell=14
        QSPConfig{Support::INT, 8, false},   // C ell=8
        QSPConfig{Support::INT, 5, true},    // B odd ell=5
        QSPConfig{Support::INT, 7, true},    // B odd ell=7
        QSPConfig{Support::HALF, 5, false},  // B odd ell=5; B even ell=10
        QSPConfig{Support::HALF, 7, false},  // B odd ell=7; B even ell=14
        QSPConfig{Support::INT, 4, false},   // B even ell=8
        QSPConfig{Support::HALF, 4, false},  // B even ell=8
    };
}

std::string config_name(const QSPConfig& cfg) {
    std::string s = cfg.support == Support::INT ? "H/" : "Z/";
    s += std::to_string(cfg.r) + "Z";
    if (cfg.nonstandard_offline_fixed) s += "*";
    return s;
}

bool criterion_relations(std::string& detail) {
    uint64_t seed = 1001;
    long long instances = 0;
    for (const QSPConfig& cfg : relation_configs()) {
        Rng rng(seed++);
        const auto samples = relation_sample_pool(rng, cfg.support, 100, 36);
        const SuiteReport report = run_suite(enumerate_relations(cfg.support, cfg.r), cfg, samples);
        instances += report.instances;
        if (!report.ok()) {
            detail = config_name(cfg) + ": " + report.failures.front().instance.to_string() +
                     " failed on sample " + std::to_string(report.failures.front().sample);
            return false;
        }
    }
    detail = std::to_string(instances) + " instances x 100 samples";
    return true;
}

bool criterion_typeA(std::string& detail) {
    Rng rng(1101);
    std::vector<FockVector> pool;
    for (long long charge : {0LL, 3LL})
        for (int i = 0; i < 50; ++i)
            pool.push_back(
                FockVector::basis(random_sequence_with_charge(rng, Support::INT, 36, charge)));
    const QSPConfig cfg{Support::INT, 5, false};
    const SuiteReport report = run_suite(enumerate_typeA_relations(Support::INT, 5), cfg, pool);
    if (!report.ok()) {
        detail = report.failures.front().instance.to_string();
        return false;
    }
    detail = std::to_string(report.instances) + " instances";
    return true;
}

bool criterion_identities(std::string& detail) {
    uint64_t seed = 1201;
    for (const QSPConfig& cfg : relation_configs()) {
        Rng rng(seed++);
        const auto samples = relation_sample_pool(rng, cfg.support, 200, 36);
        for (const ResidueClass& p : all_classes(cfg.r, cfg.support)) {
            if (auto bad = check_typeA_identity(cfg, p, samples)) {
                detail = config_name(cfg) + " class " + p.to_string() + " sample " +
                         std::to_string(*bad);
                return false;
            }
        }
        if (cfg.support == Support::HALF) {
            for (long long z : {1LL, 1 - 2LL * cfg.r, 1 + 4LL * cfg.r}) {
                if (auto bad = check_typeA_identity_z(cfg, z, samples)) {
                    detail = config_name(cfg) + " B^[z] z=" + std::to_string(z) + "/2 sample " +
                             std::to_string(*bad);
                    return false;
                }
            }
        }
    }
    return true;
}

bool run_theorem_grid(LieType type, int ell, long long max_coord_d, long long& checked,
                      std::string& detail) {
    for (const Weight& w : dominant_weights_up_to(type, max_coord_d)) {
        ++checked;
        const CheckReport r = check_theorem(type, ell, w);
        if (!r.pass) {
            detail = std::string(family_name(type.family)) + std::to_string(type.rank) + " ell " +
                     std::to_string(ell) + ": " + r.detail;
            return false;
        }
    }
    return true;
}

bool criterion_theorem_C(std::string& detail) {
    long long checked = 0;
    for (int rank : {3, 4})
        for (int ell : {5, 8})
            if (!run_theorem_grid(LieType{LieFamily::C, rank}, ell, 12, checked, detail))
                return false;
    detail = std::to_string(checked) + " weights";
    return true;
}

bool criterion_theorem_B(std::string& detail) {
    long long checked = 0;
    for (int rank : {2, 3}) {
        for (int ell : {5, 7}) {
            if (!run_theorem_grid(LieType{LieFamily::B_INT, rank}, ell, 11, checked, detail))
                return false;
            if (!run_theorem_grid(LieType{LieFamily::B_HALF, rank}, ell, 10, checked, detail))
                return false;
        }
        if (!run_theorem_grid(LieType{LieFamily::B_INT, rank}, 8, 11, checked, detail))
            return false;
        if (!run_theorem_grid(LieType{LieFamily::B_HALF, rank}, 8, 10, checked, detail))
            return false;
    }
    detail = std::to_string(checked) + " weights";
    return true;
}

struct LemmaCounters {
    long long two_sided = 0;
    long long one_sided = 0;
};

bool lemma_grid(LieType type, int ell, LemmaCounters& counters, std::string& detail) {
    const LinkageContext ctx(type, ell);
    const long long bound_d = 16 - rho(type).coords_d.front();
    for (const Weight& w : dominant_weights_up_to(type, bound_d)) {
        const Sequence a = embed(w);
        auto [lo, hi] = a.move_range_d();
        std::vector<std::pair<long long, Weight>> e_moves, f_moves;
        for (long long j = lo; j <= hi; j += 2) {
            if (auto img = move_e(j, a))
                if (auto wi = extract(type, *img)) e_moves.emplace_back(j, *wi);
            if (auto img = move_f(j, a))
                if (auto wi = extract(type, *img)) f_moves.emplace_back(j, *wi);
        }
        auto check_pair = [&](MovePairKind kind, long long r_d, long long s_d, const Weight& x,
                              const Weight& y) -> bool {
            const LinkagePrediction pred = predict_linkage(kind, w, r_d, s_d, ell);
            const bool lk = linked(x, y, ctx);
            if (pred.two_sided) {
                ++counters.two_sided;
                if (pred.predicted != lk) {
                    detail = w.to_string() + " move pair at " + std::to_string(r_d) + "/2," +
                             std::to_string(s_d) + "/2";
                    return false;
                }
            } else {
                ++counters.one_sided;
                if (lk && !pred.predicted) {
                    detail = w.to_string() + " linked but congruence fails at " +
                             std::to_string(r_d) + "/2";
                    return false;
                }
            }
            return true;
        };
        for (const auto& [r, wr] : e_moves)
            for (const auto& [s, ws] : e_moves)
                if (r != s && !check_pair(MovePairKind::E_E, r, s, wr, ws)) return false;
        for (const auto& [r, wr] : f_moves)
            for (const auto& [s, ws] : f_moves)
                if (r != s && !check_pair(MovePairKind::F_F, r, s, wr, ws)) return false;
        for (const auto& [r, wr] : e_moves)
            for (const auto& [s, ws] : f_moves) {
                const bool adjacent = s == r + 2;
                if (adjacent ? !check_pair(MovePairKind::E_F_ADJ, s, 0, wr, ws)
                             : !check_pair(MovePairKind::E_F, r, s, wr, ws))
                    return false;
            }
        if (type.family != LieFamily::C) {
            for (const auto& [r, wr] : e_moves)
                if (!check_pair(MovePairKind::E_VS_ID, r, 0, wr, w)) return false;
            for (const auto& [r, wr] : f_moves)
                if (!check_pair(MovePairKind::F_VS_ID, r, 0, wr, w)) return false;
        }
    }
    return true;
}

bool criterion_lemmas(std::string& detail) {
    LemmaCounters counters;
    for (int ell : {5, 7, 8}) {
        if (!lemma_grid(LieType{LieFamily::C, 3}, ell, counters, detail)) return false;
        for (int rank : {2, 3}) {
            if (!lemma_grid(LieType{LieFamily::B_INT, rank}, ell, counters, detail)) return false;
            if (!lemma_grid(LieType{LieFamily::B_HALF, rank}, ell, counters, detail)) return false;
        }
    }
    if (counters.two_sided == 0 || counters.one_sided == 0) {
        detail = "grid failed to exercise both lemma kinds";
        return false;
    }
    detail = std::to_string(counters.two_sided) + " two-sided + " +
             std::to_string(counters.one_sided) + " one-sided pairs";
    return true;
}

bool criterion_linkage_oracles(std::string& detail) {
    uint64_t seed = 1601;
    long long folds_seen = 0;
    for (LieFamily fam : {LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int ell : {5, 7, 8}) {
            const LieType type{fam, 3};
            const LinkageContext ctx(type, ell);
            // Bucket a weight pool by canonical form so the samples mix
            // genuinely linked and unlinked pairs.
            const auto pool = dominant_weights_up_to(type, 12);
            std::map<std::vector<long long>, std::vector<size_t>> buckets;
            for (size_t i = 0; i < pool.size(); ++i)
                buckets[canonical_point(rho_shift(pool[i]), ctx)].push_back(i);
            std::vector<std::vector<size_t>> linked_groups;
            for (auto& [canon, idx] : buckets)
                if (idx.size() > 1) linked_groups.push_back(idx);
            Rng rng(seed++);
            for (int trial = 0; trial < 500; ++trial) {
                size_t i, j;
                if (trial % 2 == 0 && !linked_groups.empty()) {
                    const auto& group = linked_groups[static_cast<size_t>(
                        rng.below(static_cast<long long>(linked_groups.size())))];
                    i = group[static_cast<size_t>(rng.below(static_cast<long long>(group.size())))];
                    j = group[static_cast<size_t>(rng.below(static_cast<long long>(group.size())))];
                } else {
                    i = static_cast<size_t>(rng.below(static_cast<long long>(pool.size())));
                    j = static_cast<size_t>(rng.below(static_cast<long long>(pool.size())));
                }
                const bool canon_says = linked(pool[i], pool[j], ctx);
                const bool bfs_says = linked_bfs(pool[i], pool[j], ctx);
                if (canon_says != bfs_says) {
                    detail = std::string(family_name(fam)) + "3 ell " + std::to_string(ell) + ": " +
                             pool[i].to_string() + " vs " + pool[j].to_string();
                    return false;
                }
                // Progress measure decreases strictly along every fold.
                std::vector<long long> measures;
                canonical_point(rho_shift(pool[i]), ctx, &measures);
                for (size_t k = 1; k < measures.size(); ++k)
                    if (measures[k] >= measures[k - 1]) {
                        detail = "progress measure did not decrease";
                        return false;
                    }
                folds_seen += static_cast<long long>(measures.size());
            }
        }
    }
    detail = "4500 pairs, " + std::to_string(folds_seen) + " folds traced";
    return true;
}

bool criterion_tensor_oracle(std::string& detail) {
    long long checked = 0;
    for (LieFamily fam : {LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int rank = 2; rank <= 3; ++rank) {
            if (fam == LieFamily::C && rank < 3) continue;
            const LieType type{fam, rank};
            const long long bound = fam == LieFamily::B_INT ? 7 : 8;  // lambda_1 <= 4
            for (const Weight& w : dominant_weights_up_to(type, bound)) {
                ++checked;
                if (tensor_oracle(type, w) != tensor_natural(type, w)) {
                    detail = "rule mismatch at " + w.to_string();
                    return false;
                }
                if (weyl_character(type, w).mass() != weyl_dim(type, w)) {
                    detail = "character mass mismatch at " + w.to_string();
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " weights";
    return true;
}

bool criterion_stabilization(std::string& detail) {
    uint64_t seed = 1901;
    long long checked = 0;
    for (LieFamily fam : {LieFamily::C, LieFamily::B_HALF}) {
        for (long long charge : {1LL, 2LL}) {
            for (int reps : {1, 2}) {
                Rng rng(seed++);
                for (int i = 0; i < 50; ++i) {
                    const Sequence a =
                        random_sequence_with_charge(rng, support_of(fam), 20, charge);
                    const Stabilization st = stabilize(a, reps, 5, fam);
                    const CheckReport r =
                        check_iterated(LieType{fam, st.weight.type.rank}, 5, st.weight, reps);
                    ++checked;
                    if (!r.pass) {
                        detail = std::string(family_name(fam)) + " charge " +
                                 std::to_string(charge) + ": " + r.detail;
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(checked) + " stabilized products";
    return true;
}

std::string determinism_blob(uint64_t seed) {
    Json out;
    {
        const QSPConfig cfg{Support::INT, 5, false};
        Rng rng(seed);
        const auto samples = relation_sample_pool(rng, Support::INT, 25, 24);
        out["relations"] =
            suite_report_to_json(run_suite(enumerate_relations(Support::INT, 5), cfg, samples));
        Rng rng2(seed + 1);
        std::vector<FockVector> pool;
        for (int i = 0; i < 25; ++i)
            pool.push_back(
                FockVector::basis(random_sequence_with_charge(rng2, Support::INT, 24, 0)));
        out["type_a"] =
            suite_report_to_json(run_suite(enumerate_typeA_relations(Support::INT, 5), cfg, pool));
    }
    {
        Json grid = Json::array();
        const LieType c3{LieFamily::C, 3};
        for (const Weight& w : dominant_weights_up_to(c3, 8)) {
            const FockVector projected = project_embedded(c3, apply_sum_B(c3, 5, w));
            Json entry;
            entry["weight"] = weight_to_json(w);
            entry["vector"] = fockvector_to_json(projected);
            grid.push_back(std::move(entry));
        }
        out["theorem_grid"] = std::move(grid);
    }
    {
        Rng rng(seed + 2);
        Json links = Json::array();
        const LieType b3{LieFamily::B_HALF, 3};
        const LinkageContext ctx(b3, 8);
        for (int i = 0; i < 50; ++i) {
            const Weight a = random_dominant(rng, b3, 10);
            const Weight b = random_dominant(rng, b3, 10);
            Json entry;
            entry["lhs"] = weight_to_json(a);
            entry["rhs"] = weight_to_json(b);
            entry["linked"] = linked(a, b, ctx);
            links.push_back(std::move(entry));
        }
        out["linkage"] = std::move(links);
    }
    return out.dump();
}

bool criterion_determinism(std::string& detail) {
    const std::string first = determinism_blob(2025);
    const std::string second = determinism_blob(2025);
    if (first != second) {
        detail = "replays with the same seed differ";
        return false;
    }
    const std::string other = determinism_blob(2026);
    if (first == other) {
        detail = "different seeds produced identical output (suspicious sampling)";
        return false;
    }
    detail = std::to_string(first.size()) + " bytes, byte-identical replay";
    return true;
}

std::vector<Criterion> criteria() {
    return {
        {1, "symmetric pair relation suite over all index-set configurations", 120.0,
         criterion_relations},
        {2, "type A relation suite at ell=5, charges 0 and 3", 20.0, criterion_typeA},
        {3, "B-generators equal their E/F/K composites per index class", 30.0,
         criterion_identities},
        {4, "type C decomposition theorem grid (N=3,4; ell=5,8; coords <= 6)", 60.0,
         criterion_theorem_C},
        {5, "type B decomposition theorem grids (N=2,3; ell=5,7,8)", 120.0, criterion_theorem_B},
        {6, "linkage lemma conformance against the exact orbit oracle", 120.0, criterion_lemmas},
        {7, "canonical-form linkage equals bounded BFS on 500 pairs per configuration", 60.0,
         criterion_linkage_oracles},
        {8, "closed tensor rule equals the character-peeling oracle", 60.0,
         criterion_tensor_oracle},
        {9, "iterated products at stabilized ranks match iterated tensor rules", 120.0,
         criterion_stabilization},
        {10, "suites are byte-deterministic for a fixed seed", 30.0, criterion_determinism},
    };
}


}  // namespace

int acceptance_criteria_count() { return static_cast<int>(criteria().size()); }

AcceptanceResult run_acceptance_criterion(int number) {
    for (const Criterion& c : criteria()) {
        if (c.number != number) continue;
        const auto start = Clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
            1000.0;
        if (elapsed > c.budget_seconds) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += "over budget of " + std::to_string(c.budget_seconds) + "s";
        }
        std::ostringstream line;
        line << "[criterion " << c.number << "] " << (pass ? "PASS" : "FAIL") << " - "
             << c.description;
        if (!detail.empty()) line << " (" << detail << ")";
        line << " [" << elapsed << "s]";
        return AcceptanceResult{c.number, pass, elapsed, line.str()};
    }
    return AcceptanceResult{number, false, 0.0,
                            "[criterion " + std::to_string(number) + "] FAIL - unknown criterion"};
}

bool run_acceptance(int only) {
    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.number != only) continue;
        const AcceptanceResult r = run_acceptance_criterion(c.number);
        std::cout << r.line << std::endl;
        all_pass = all_pass && r.pass;
    }
    return all_pass;
}

}  // namespace fockqsp
