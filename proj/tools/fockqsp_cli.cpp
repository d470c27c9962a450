#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "fockqsp/acceptance.hpp"
#include "fockqsp/json_io.hpp"
#include "fockqsp/random.hpp"

using namespace fockqsp;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LieFamily parse_family(const std::string& s) {
    auto fam = family_from_name(s);
    if (!fam) throw UsageError("unknown family '" + s + "' (A, C, B_INT, B_HALF)");
    return *fam;
}

Support parse_index_set(const std::string& s) {
    if (s == "H") return Support::INT;  // half-integer indices act on integer sequences
    if (s == "Z") return Support::HALF;
    throw UsageError("unknown index set '" + s + "' (H or Z)");
}

Weight parse_weight(LieFamily fam, int rank, const std::string& csv) {
    Weight w{LieType{fam, rank}, parse_coords_d(csv)};
    if (static_cast<int>(w.coords_d.size()) != rank)
        throw UsageError("weight has " + std::to_string(w.coords_d.size()) +
                         " coordinates, rank is " + std::to_string(rank));
    return w;
}

std::string coord_str(long long d) {
    return d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
}

Json coords_json(const std::vector<long long>& coords_d) {
    Json out = Json::array();
    for (long long d : coords_d) {
        if (d % 2 == 0)
            out.push_back(d / 2);
        else
            out.push_back(coord_str(d));
    }
    return out;
}

void emit(const Json& j, bool human, const std::string& human_text) {
    if (human)
        std::cout << human_text;
    else
        std::cout << j.dump() << "\n";
}

int thread_cap() {
    // Suites run sequentially; a sequential run honors any positive cap.
    const char* env = std::getenv("FOCKQSP_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) throw UsageError("FOCKQSP_THREADS must be a positive integer");
    return v;
}

int cmd_act(const std::string& family, int rank, int ell, const std::string& opname,
            const std::string& pbar_str, const std::string& variant_str, const std::string& z_str,
            const std::string& weight_csv, long long seq_left, const std::string& seq_bits,
            bool human) {
    const LieFamily fam = parse_family(family);
    const QSPConfig cfg = qsp_config(fam, ell);
    const ResidueClass pbar(cfg.r, parse_coord_d(pbar_str), cfg.support);

    OperatorSpec op = op_K(pbar);
    if (opname == "E")
        op = op_E(pbar);
    else if (opname == "F")
        op = op_F(pbar);
    else if (opname == "K")
        op = op_K(pbar);
    else if (opname == "K_INV")
        op = op_K_inv(pbar);
    else if (opname == "L")
        op = op_L(pbar);
    else if (opname == "L_INV")
        op = op_L_inv(pbar);
    else if (opname == "B") {
        BVariant variant = cfg.variant_for(pbar);
        if (variant_str == "standard")
            variant = BVariant::STANDARD;
        else if (variant_str == "nonstandard")
            variant = BVariant::NONSTANDARD;
        else if (variant_str != "auto")
            throw UsageError("--variant must be auto, standard or nonstandard");
        op = op_B(pbar, variant);
    } else if (opname == "B_Z") {
        op = op_B_z(pbar, z_str.empty() ? 1 : parse_coord_d(z_str));
    } else {
        throw UsageError("unknown operator '" + opname + "' (E F K K_INV B L L_INV B_Z)");
    }

    FockVector x(cfg.support);
    if (!weight_csv.empty()) {
        x = FockVector::basis(embed(parse_weight(fam, rank, weight_csv)));
    } else if (!seq_bits.empty() || seq_left != 0) {
        x = FockVector::basis(Sequence(cfg.support, seq_left, seq_bits));
    } else {
        throw UsageError("provide --weight or --seq-left/--seq-bits");
    }
    const FockVector out = apply(op, x);
    std::string text;
    for (const auto& [a, c] : out.terms())
        text += "(" + c.to_string() + ") * " + a.to_string() + "\n";
    if (out.is_zero()) text = "0\n";
    emit(fockvector_to_json(out), human, text);
    return 0;
}

int cmd_decompose(const std::string& family, int rank, int ell, const std::string& weight_csv,
                  bool with_coeffs, bool human) {
    const LieFamily fam = parse_family(family);
    const LieType type{fam, rank};
    const Weight lambda = parse_weight(fam, rank, weight_csv);
    const FockVector projected = project_embedded(type, apply_sum_B(type, ell, lambda));
    const auto decomposition = eval_decomposition(projected, type);

    std::map<Weight, Laurent> coeffs;
    if (with_coeffs)
        for (const auto& [a, c] : projected.terms()) coeffs[*extract(type, a)] = c;

    Json out;
    Json summands = Json::array();
    std::string text;
    for (const auto& [w, m] : decomposition) {
        Json entry;
        entry["weight"] = coords_json(w.coords_d);
        entry["mult"] = m;
        if (with_coeffs) entry["coeff"] = laurent_to_json(coeffs.at(w));
        summands.push_back(std::move(entry));
        text += w.to_string() + "  x" + std::to_string(m);
        if (with_coeffs) text += "  [" + coeffs.at(w).to_string() + "]";
        text += "\n";
    }
    out["summands"] = std::move(summands);
    emit(out, human, text);
    return 0;
}

int cmd_linkage(const std::string& family, int rank, int ell, const std::string& lhs,
                const std::string& rhs, bool human) {
    const LieFamily fam = parse_family(family);
    const LieType type{fam, rank};
    const LinkageContext ctx(type, ell);
    const Weight a = parse_weight(fam, rank, lhs);
    const Weight b = parse_weight(fam, rank, rhs);
    if (!is_dominant(a) || !is_dominant(b)) throw UsageError("weights must be dominant");
    const auto ca = canonical_point(rho_shift(a), ctx);
    const auto cb = canonical_point(rho_shift(b), ctx);
    Json out;
    out["linked"] = ca == cb;
    out["canonical_lhs"] = coords_json(ca);
    out["canonical_rhs"] = coords_json(cb);
    std::string text = std::string("linked: ") + (ca == cb ? "true" : "false") + "\n";
    auto coords_text = [](const std::vector<long long>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + coord_str(v[i]);
        return s;
    };
    text += "canonical lhs: (" + coords_text(ca) + ")\n";
    text += "canonical rhs: (" + coords_text(cb) + ")\n";
    emit(out, human, text);
    return 0;
}

int cmd_check_relations(const std::string& index_set, int modulus, int samples, uint64_t seed,
                        int width, const std::string& algebra, const std::string& variant_str,
                        const std::string& charges_csv, bool human) {
    const Support support = parse_index_set(index_set);
    bool nonstd = false;
    if (variant_str == "nonstandard")
        nonstd = true;
    else if (variant_str != "auto" && variant_str != "standard")
        throw UsageError("--variant must be auto, standard or nonstandard");
    const QSPConfig cfg{support, modulus, nonstd};

    Rng rng(seed);
    std::vector<FockVector> pool;
    if (charges_csv.empty()) {
        pool = relation_sample_pool(rng, support, static_cast<size_t>(samples), width);
    } else {
        for (long long c_d : parse_coords_d(charges_csv)) {
            if (c_d % 2 != 0) throw UsageError("--charges must be integers");
            for (int i = 0; i < samples; ++i)
                pool.push_back(
                    FockVector::basis(random_sequence_with_charge(rng, support, width, c_d / 2)));
        }
    }

    std::vector<RelationInstance> instances;
    if (algebra == "qsp")
        instances = enumerate_relations(support, modulus);
    else if (algebra == "typeA")
        instances = enumerate_typeA_relations(support, modulus);
    else
        throw UsageError("--algebra must be qsp or typeA");

    const SuiteReport report = run_suite(instances, cfg, pool);
    std::string text = "instances: " + std::to_string(report.instances) +
                       "\nfailures: " + std::to_string(report.failures.size()) + "\n";
    emit(suite_report_to_json(report), human, text);
    return report.ok() ? 0 : 1;
}

int cmd_check_theorems(const std::string& family, int rank, int ell, const std::string& max_coord,
                       bool human) {
    const LieFamily fam = parse_family(family);
    const LieType type{fam, rank};
    const long long bound_d = parse_coord_d(max_coord);
    long long total = 0, pass = 0;
    Json failures = Json::array();
    for (const Weight& w : dominant_weights_up_to(type, bound_d)) {
        ++total;
        const CheckReport r = check_theorem(type, ell, w);
        if (r.pass) {
            ++pass;
        } else {
            Json f;
            f["weight"] = coords_json(w.coords_d);
            f["detail"] = r.detail;
            failures.push_back(std::move(f));
        }
    }
    Json out;
    out["total"] = total;
    out["pass"] = pass;
    out["failures"] = std::move(failures);
    std::string text =
        "checked " + std::to_string(total) + ", passed " + std::to_string(pass) + "\n";
    emit(out, human, text);
    return total == pass ? 0 : 1;
}

int cmd_check_iterated(const std::string& family, int ell, long long charge, int reps, int samples,
                       uint64_t seed, int width, bool human) {
    const LieFamily fam = parse_family(family);
    Rng rng(seed);
    long long total = 0, pass = 0;
    Json failures = Json::array();
    for (int i = 0; i < samples; ++i) {
        const Sequence a = random_sequence_with_charge(rng, support_of(fam), width, charge);
        const Stabilization st = stabilize(a, reps, ell, fam);
        ++total;
        const CheckReport r =
            check_iterated(LieType{fam, st.weight.type.rank}, ell, st.weight, reps);
        if (r.pass) {
            ++pass;
        } else {
            Json f;
            f["weight"] = coords_json(st.weight.coords_d);
            f["detail"] = r.detail;
            failures.push_back(std::move(f));
        }
    }
    Json out;
    out["total"] = total;
    out["pass"] = pass;
    out["failures"] = std::move(failures);
    std::string text =
        "checked " + std::to_string(total) + ", passed " + std::to_string(pass) + "\n";
    emit(out, human, text);
    return total == pass ? 0 : 1;
}

int cmd_stabilize(const std::string& family, int ell, long long reserve, long long seq_left,
                  const std::string& seq_bits, bool human) {
    const LieFamily fam = parse_family(family);
    const Sequence a(support_of(fam), seq_left, seq_bits);
    const Stabilization st = stabilize(a, reserve, ell, fam);
    Json out;
    out["m"] = st.m;
    out["rank"] = st.weight.type.rank;
    out["weight"] = coords_json(st.weight.coords_d);
    std::string text = "m = " + std::to_string(st.m) + ", weight " + st.weight.to_string() + "\n";
    emit(out, human, text);
    return 0;
}

int cmd_classify(const std::string& index_set, int modulus, const std::string& pbar_str,
                 bool human) {
    const Support support = parse_index_set(index_set);
    const ResidueClass pbar(modulus, parse_coord_d(pbar_str), support);
    const IndexClass cls = classify_index(pbar);
    const char* name = cls == IndexClass::FIXED          ? "FIXED"
                       : cls == IndexClass::THETA_LINKED ? "THETA_LINKED"
                                                         : "STANDARD";
    Json out;
    out["pbar"] = pbar.to_string();
    out["class"] = name;
    emit(out, human, std::string(name) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fock-space engine for affine quantum symmetric pair actions"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "aligned text output instead of JSON");

    std::string family = "C", opname = "B", pbar = "1/2", variant = "auto", z_str, weight_csv;
    std::string lhs, rhs, index_set = "H", algebra = "qsp", charges, max_coord = "6", seq_bits;
    int rank = 3, ell = 5, samples = 100, width = 30, modulus = 5, reps = 1;
    long long seq_left = 0, charge = 1, reserve = 0;
    uint64_t seed = 42;

    auto* act = app.add_subcommand("act", "apply one operator to a basis vector");
    act->add_option("--family", family)->required();
    act->add_option("--rank", rank);
    act->add_option("--ell", ell)->required();
    act->add_option("--op", opname)->required();
    act->add_option("--pbar", pbar)->required();
    act->add_option("--variant", variant);
    act->add_option("--z", z_str);
    act->add_option("--weight", weight_csv);
    act->add_option("--seq-left", seq_left);
    act->add_option("--seq-bits", seq_bits);

    auto* dec = app.add_subcommand("decompose", "tensor decomposition through the operator sum");
    bool with_coeffs = false;
    dec->add_option("--family", family)->required();
    dec->add_option("--rank", rank)->required();
    dec->add_option("--ell", ell)->required();
    dec->add_option("--weight", weight_csv)->required();
    dec->add_flag("--coeffs", with_coeffs, "include the v-coefficients");

    auto* link = app.add_subcommand("linkage", "exact linkage decision");
    link->add_option("--family", family)->required();
    link->add_option("--rank", rank)->required();
    link->add_option("--ell", ell)->required();
    link->add_option("--lhs", lhs)->required();
    link->add_option("--rhs", rhs)->required();

    auto* rel = app.add_subcommand("check-relations", "verify the presentation on random vectors");
    rel->add_option("--index", index_set);
    rel->add_option("--modulus", modulus)->required();
    rel->add_option("--samples", samples);
    rel->add_option("--seed", seed);
    rel->add_option("--width", width);
    rel->add_option("--algebra", algebra);
    rel->add_option("--variant", variant);
    rel->add_option("--charges", charges);

    auto* thm = app.add_subcommand("check-theorems", "decomposition theorems over a weight grid");
    thm->add_option("--family", family)->required();
    thm->add_option("--rank", rank)->required();
    thm->add_option("--ell", ell)->required();
    thm->add_option("--max-coord", max_coord);

    auto* iter = app.add_subcommand("check-iterated", "iterated products at stabilized ranks");
    iter->add_option("--family", family)->required();
    iter->add_option("--ell", ell)->required();
    iter->add_option("--charge", charge);
    iter->add_option("--reps", reps);
    iter->add_option("--samples", samples);
    iter->add_option("--seed", seed);
    iter->add_option("--width", width);

    auto* stab = app.add_subcommand("stabilize", "shift a sequence back to a dominant weight");
    stab->add_option("--family", family)->required();
    stab->add_option("--ell", ell)->required();
    stab->add_option("--reserve", reserve);
    stab->add_option("--seq-left", seq_left)->required();
    stab->add_option("--seq-bits", seq_bits);

    auto* cls = app.add_subcommand("classify", "fixed / theta-linked / standard index class");
    cls->add_option("--index", index_set);
    cls->add_option("--modulus", modulus)->required();
    cls->add_option("--pbar", pbar)->required();

    int criterion = 0;
    auto* accept = app.add_subcommand("accept", "run the end-to-end verification suite");
    accept->add_option("--criterion", criterion, "single criterion number (default: all)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        (void)thread_cap();
        if (app.got_subcommand(act))
            return cmd_act(family, rank, ell, opname, pbar, variant, z_str, weight_csv, seq_left,
                           seq_bits, human);
        if (app.got_subcommand(dec))
            return cmd_decompose(family, rank, ell, weight_csv, with_coeffs, human);
        if (app.got_subcommand(link)) return cmd_linkage(family, rank, ell, lhs, rhs, human);
        if (app.got_subcommand(rel))
            return cmd_check_relations(index_set, modulus, samples, seed, width, algebra, variant,
                                       charges, human);
        if (app.got_subcommand(thm)) return cmd_check_theorems(family, rank, ell, max_coord, human);
        if (app.got_subcommand(iter))
            return cmd_check_iterated(family, ell, charge, reps, samples, seed, width, human);
        if (app.got_subcommand(stab))
            return cmd_stabilize(family, ell, reserve, seq_left, seq_bits, human);
        if (app.got_subcommand(cls)) return cmd_classify(index_set, modulus, pbar, human);
        if (app.got_subcommand(accept)) return run_acceptance(criterion) ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == ErrorCode::BadInput ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
