// Command-line front end: curve discovery, extraction, exact audits, bound
// calculators, the DH demo and the PRNG stream. Every subcommand is
// deterministic given its flags; exit codes are part of the contract
// (0 ok / 1 failed audit checks / 2 usage or spec error / 3 cap exceeded /
// 4 protocol failure).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ecx/ecx.hpp"
#include "ecx/serialize.hpp"

namespace {

using ecx::json;

struct GlobalOpts {
    std::string format = "text";
    uint64_t cap = ecx::default_enum_cap;
    uint64_t pair_cap = ecx::default_pair_cap;
    std::string audit_mode = "on";

    bool json_out() const { return format == "json"; }
    bool audit_on() const { return audit_mode != "off"; }
};

struct CurveFlags {
    std::string spec_file;
    std::optional<uint64_t> p;
    std::optional<uint64_t> n;
    std::string modulus; // JSON array
    std::string a, b;    // integer or JSON array
};

void add_curve_flags(CLI::App* cmd, CurveFlags& cf, bool need_ab = true) {
    cmd->add_option("--spec", cf.spec_file, "curve spec JSON file (wins over inline flags)");
    cmd->add_option("--p", cf.p, "field characteristic (prime > 5)");
    cmd->add_option("--n", cf.n, "extension degree (with --modulus)");
    cmd->add_option("--modulus", cf.modulus, "monic modulus coefficients, little-endian JSON array");
    if (need_ab) {
        cmd->add_option("--a", cf.a, "curve coefficient a");
        cmd->add_option("--b", cf.b, "curve coefficient b");
    }
}

json parse_value(const std::string& s, const char* what) {
    try {
        return json::parse(s);
    } catch (const json::exception&) {
        ecx::raise(ecx::errc::invalid_parameter, std::string("cannot parse ") + what + ": " + s);
    }
}

json field_spec_from_flags(const CurveFlags& cf) {
    if (!cf.p) ecx::raise(ecx::errc::invalid_parameter, "missing --p (or --spec)");
    json fj{{"p", *cf.p}};
    if (cf.n || !cf.modulus.empty()) {
        if (cf.modulus.empty())
            ecx::raise(ecx::errc::invalid_parameter, "--n requires --modulus");
        fj["modulus"] = parse_value(cf.modulus, "--modulus");
        if (cf.n) fj["n"] = *cf.n;
    }
    return fj;
}

json curve_spec(const CurveFlags& cf) {
    bool has_inline = cf.p || !cf.a.empty() || !cf.b.empty();
    if (!cf.spec_file.empty()) {
        if (has_inline)
            std::cerr << "warning: --spec overrides inline curve flags\n";
        std::ifstream in(cf.spec_file);
        if (!in) ecx::raise(ecx::errc::invalid_parameter, "cannot open spec file " + cf.spec_file);
        try {
            return json::parse(in);
        } catch (const json::exception& e) {
            ecx::raise(ecx::errc::invalid_parameter, "bad JSON in " + cf.spec_file + ": " + e.what());
        }
    }
    if (cf.a.empty() || cf.b.empty())
        ecx::raise(ecx::errc::invalid_parameter, "missing --a/--b (or --spec)");
    return json{{"field", field_spec_from_flags(cf)},
                {"a", parse_value(cf.a, "--a")},
                {"b", parse_value(cf.b, "--b")}};
}

json parse_point_arg(const std::string& s) {
    if (s == "infinity") return json("infinity");
    return parse_value(s, "point");
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.json_out())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// --- curve-info -------------------------------------------------------------

template <class Field>
int do_curve_info(const ecx::Curve<Field>& curve, const GlobalOpts& g) {
    auto pts = curve.enumerate_points(g.cap);
    uint64_t q = curve.field().cardinality();
    uint64_t count = pts.size();
    bool hasse = ecx::hasse_bound_holds(count, q);

    // realized cyclic subgroup orders; skipped when the scan would be heavy
    constexpr uint64_t order_scan_limit = 5000;
    std::set<uint64_t> orders;
    if (count <= order_scan_limit)
        for (const auto& P : pts) orders.insert(ecx::point_order(P, g.cap));

    json j{{"curve", ecx::curve_to_json(curve)},
           {"field_size", q},
           {"nonsingular", true},
           {"points", count},
           {"hasse", json{{"holds", hasse}}},
           {"subgroup_orders", orders}};
    std::string text = "curve:  " + curve.to_string() + "\n";
    text += "points: " + std::to_string(count) + " (field size " + std::to_string(q) + ")\n";
    text += "hasse:  " + std::string(hasse ? "OK" : "VIOLATED") + "\n";
    if (!orders.empty()) {
        text += "cyclic subgroup orders:";
        for (uint64_t o : orders) text += " " + std::to_string(o);
        text += "\n";
    }
    emit(g, j, text);
    return hasse ? 0 : 1;
}

// --- find-subgroups ---------------------------------------------------------

template <class Field>
int do_find_subgroups(const ecx::Curve<Field>& curve, uint64_t order, const GlobalOpts& g) {
    auto subs = ecx::find_subgroups(curve, order, g.cap);
    json arr = json::array();
    std::string text;
    for (const auto& s : subs) {
        arr.push_back(json{{"generator", ecx::point_to_json(s.generator)}, {"order", s.order}});
        text += "generator " + s.generator.to_string() + "  order " + std::to_string(s.order) + "\n";
    }
    if (subs.empty()) text = "no subgroup of order " + std::to_string(order) + "\n";
    emit(g, json{{"order", order}, {"count", subs.size()}, {"subgroups", arr}}, text);
    return 0;
}

// --- extract ----------------------------------------------------------------

template <class Field>
int do_extract(const ecx::Curve<Field>& curve, ecx::extractor_id ex, const json& pj,
               const std::optional<json>& qj, int k, const GlobalOpts& g) {
    auto P = ecx::point_from_json(curve, pj);
    json out;
    std::string text;
    if constexpr (std::is_same_v<Field, ecx::PrimeField>) {
        ecx::BitString bits;
        if (ex == ecx::extractor_id::lk) {
            bits = ecx::L_k(P, k);
        } else if (ex == ecx::extractor_id::ext1) {
            if (!qj) ecx::raise(ecx::errc::invalid_parameter, "ext1 needs --Q");
            bits = ecx::ext1(P, ecx::point_from_json(curve, *qj), k);
        } else {
            ecx::raise(ecx::errc::invalid_parameter, "extractor not defined over a prime field");
        }
        out = json{{"value", bits.value}, {"bits", bits.to_binary_string()}};
        text = std::to_string(bits.value) + " (" + bits.to_binary_string() + ")\n";
    } else {
        ecx::CoeffVector v;
        if (ex == ecx::extractor_id::dk) {
            v = ecx::D_k(P, k);
        } else if (ex == ecx::extractor_id::ext2) {
            if (!qj) ecx::raise(ecx::errc::invalid_parameter, "ext2 needs --Q");
            v = ecx::ext2(P, ecx::point_from_json(curve, *qj), k);
        } else {
            ecx::raise(ecx::errc::invalid_parameter, "extractor not defined over an extension field");
        }
        out = json(v.coeffs);
        text = v.to_string() + "\n";
    }
    emit(g, json{{"extractor", ecx::extractor_name(ex)}, {"k", k}, {"output", out}}, text);
    return 0;
}

// --- audit ------------------------------------------------------------------

template <class Field>
int do_audit(const ecx::Curve<Field>& curve, ecx::extractor_id ex, const json& gen1,
             const std::optional<json>& gen2, int k, int e, const GlobalOpts& g) {
    auto sub1 = ecx::subgroup_from_generator(ecx::point_from_json(curve, gen1), g.cap);
    ecx::Subgroup<Field> sub2;
    if (ex == ecx::extractor_id::lk || ex == ecx::extractor_id::dk) {
        if (gen2 && !(ecx::point_from_json(curve, *gen2).is_infinity()))
            ecx::raise(ecx::errc::invalid_parameter,
                       "single-source extractors take no second generator");
        sub2 = ecx::subgroup_from_generator(curve.infinity(), g.cap);
    } else {
        sub2 = gen2 ? ecx::subgroup_from_generator(ecx::point_from_json(curve, *gen2), g.cap) : sub1;
    }
    auto rep = ecx::run_audit(sub1, sub2, ex, k, e, g.pair_cap);
    emit(g, ecx::audit_report_to_json(rep), ecx::audit_report_to_text(rep));
    return rep.all_lemmas_hold ? 0 : 1;
}

// --- bounds -----------------------------------------------------------------

int do_bounds(const std::string& mode, CLI::App* cmd, const GlobalOpts& g) {
    auto get = [&](const char* name) -> std::optional<int64_t> {
        auto* opt = cmd->get_option(name);
        if (!opt || opt->count() == 0) return std::nullopt;
        return opt->as<int64_t>();
    };
    auto need = [&](const char* name) {
        auto v = get(name);
        if (!v)
            ecx::raise(ecx::errc::invalid_parameter,
                       std::string("mode ") + mode + " requires " + name);
        return *v;
    };

    json j{{"mode", mode}};
    std::string text = "mode: " + mode + "\n";
    std::vector<std::string> flagged;
    int64_t kmax = 0;
    if (mode == "lk") {
        kmax = ecx::kmax_L_k(int(need("--l")), int(need("--n")), int(need("--e")));
        if (get("--p") && get("--k")) {
            double b = ecx::bound_L_k(uint64_t(need("--p")), int(need("--k")), int(need("--l")));
            j["delta_bound"] = b;
            text += "delta bound: " + std::to_string(b) + "\n";
        }
    } else if (mode == "dk") {
        kmax = ecx::kmax_D_k(int(need("--t")), int(need("--m")), int(need("--n")), int(need("--e")));
        if (get("--p") && get("--k") && get("--r")) {
            double b = ecx::bound_D_k(uint64_t(need("--p")), int(need("--n")), int(need("--k")),
                                      uint64_t(need("--r")));
            double bc = ecx::bound_D_k_col(uint64_t(need("--p")), int(need("--n")),
                                           int(need("--k")), uint64_t(need("--r")));
            j["delta_bound"] = b;
            j["col_bound"] = bc;
            text += "delta bound: " + std::to_string(b) + "\ncol bound: " + std::to_string(bc) + "\n";
        }
    } else if (mode == "ext1") {
        kmax = ecx::kmax_ext1(int(need("--m")), int(need("--l")), int(need("--n")), int(need("--e")));
        if (get("--p") && get("--k") && get("--r") && get("--t")) {
            auto b = ecx::bound_ext1(uint64_t(need("--p")), int(need("--k")), uint64_t(need("--r")),
                                     uint64_t(need("--t")));
            j["delta_bound_log2"] = b.log2_variant;
            j["delta_bound_ln"] = b.ln_variant;
            flagged = {"delta_bound_log2", "delta_bound_ln"};
            text += "delta bound (log2): " + std::to_string(b.log2_variant) +
                    "  (up to unspecified constant)\n";
            text += "delta bound (ln):   " + std::to_string(b.ln_variant) +
                    "  (up to unspecified constant)\n";
        }
    } else if (mode == "ext2") {
        kmax = ecx::kmax_ext2(int(need("--l")), int(need("--s")), int(need("--m")),
                              int(need("--n")), int(need("--e")));
        if (get("--p") && get("--k") && get("--r") && get("--t")) {
            double b = ecx::bound_ext2(uint64_t(need("--p")), int(need("--n")), int(need("--k")),
                                       uint64_t(need("--r")), uint64_t(need("--t")));
            j["delta_bound"] = b;
            flagged = {"delta_bound"};
            text += "delta bound: " + std::to_string(b) + "  (up to unspecified constant)\n";
        }
    } else {
        ecx::raise(ecx::errc::invalid_parameter, "unknown mode '" + mode + "'");
    }
    j["kmax"] = kmax;
    j["feasible"] = kmax >= 1;
    if (!flagged.empty()) j["up_to_constant"] = flagged;
    text += "k_max: " + std::to_string(kmax) + (kmax >= 1 ? "" : "  (infeasible)") + "\n";
    emit(g, j, text);
    return 0;
}

// --- char-sums --------------------------------------------------------------

int do_char_sums_additive(const CurveFlags& cf, const std::string& set_name,
                          const std::string& basis_arg, const GlobalOpts& g) {
    json fj = field_spec_from_flags(cf);
    if (!ecx::field_spec_is_extension(fj))
        ecx::raise(ecx::errc::invalid_parameter, "additive char sums need an extension field");
    ecx::ExtField f = ecx::ext_field_from_json(fj);

    std::vector<ecx::Fq> basis;
    if (!basis_arg.empty()) {
        for (const auto& e : parse_value(basis_arg, "--basis"))
            basis.push_back(ecx::element_from_json(f, e));
    } else if (set_name == "zero") {
        // empty basis spans {0}
    } else if (set_name == "base") {
        basis.push_back(f.one());
    } else if (set_name == "full") {
        for (int i = 0; i < f.degree(); ++i) {
            std::vector<uint64_t> c(f.degree(), 0);
            c[i] = 1;
            basis.push_back(f.element(std::move(c)));
        }
    } else {
        ecx::raise(ecx::errc::invalid_parameter, "--set must be zero|base|full (or give --basis)");
    }
    auto V = ecx::additive_span(f, basis);
    auto res = ecx::subgroup_char_sum(f, V, g.cap);
    json j{{"field", ecx::field_to_json(f)},
           {"subgroup_size", V.size()},
           {"sum", res.value},
           {"bound", res.bound},
           {"within_bound", res.within_bound}};
    std::string text = "field: " + f.to_string() + "  |V| = " + std::to_string(V.size()) + "\n";
    text += "sum over all characters: " + std::to_string(res.value) + " (bound " +
            std::to_string(res.bound) + ", " + (res.within_bound ? "OK" : "VIOLATED") + ")\n";
    emit(g, j, text);
    return res.within_bound ? 0 : 1;
}

template <class Field>
int do_char_sums_bilinear(const ecx::Curve<Field>& curve, const json& gen1,
                          const std::optional<json>& gen2, const std::string& alpha_arg,
                          const GlobalOpts& g) {
    auto sub1 = ecx::subgroup_from_generator(ecx::point_from_json(curve, gen1), g.cap);
    auto sub2 = gen2 ? ecx::subgroup_from_generator(ecx::point_from_json(curve, *gen2), g.cap) : sub1;
    const Field& f = curve.field();

    std::vector<typename Field::Element> alphas;
    if (!alpha_arg.empty()) {
        alphas.push_back(ecx::element_from_json(f, parse_value(alpha_arg, "--alpha")));
    } else {
        uint64_t q = f.cardinality();
        if (q > g.cap)
            ecx::raise(ecx::errc::enumeration_too_large,
                       "field too large to sweep all characters; give --alpha");
        for (uint64_t i = 1; i < q; ++i) alphas.push_back(f.from_index(i));
    }

    json arr = json::array();
    std::string text;
    double max_ratio = 0;
    bool all_within = true;
    for (const auto& alpha : alphas) {
        auto res = ecx::bilinear_sum(sub1, sub2, alpha);
        bool within = res.magnitude <= double(sub1.order) * double(sub2.order) + 1e-6;
        all_within = all_within && within;
        max_ratio = std::max(max_ratio, res.ratio);
        arr.push_back(json{{"alpha", ecx::element_to_json(alpha)},
                           {"magnitude", res.magnitude},
                           {"ratio", res.ratio},
                           {"excluded", res.excluded}});
        text += "alpha " + alpha.to_string() + "  |V| = " + std::to_string(res.magnitude) +
                "  ratio = " + std::to_string(res.ratio) + "\n";
    }
    text += "max ratio |V|/sqrt(q*r*t): " + std::to_string(max_ratio) + "  (logged, not asserted)\n";
    emit(g,
         json{{"r", sub1.order},
              {"t", sub2.order},
              {"characters", arr},
              {"max_ratio", max_ratio},
              {"trivial_bound_holds", all_within}},
         text);
    return all_within ? 0 : 1;
}

// --- dh-demo ----------------------------------------------------------------

template <class Field>
int do_dh_demo(const ecx::Curve<Field>& curve, const json& gj, std::optional<uint64_t> a,
               std::optional<uint64_t> b, uint64_t seed, int k, const std::string& mode_name,
               const std::optional<json>& g2j, std::optional<uint64_t> a2,
               std::optional<uint64_t> b2, const GlobalOpts& g) {
    auto G = ecx::point_from_json(curve, gj);
    ecx::dh_mode mode = mode_name == "two_source" ? ecx::dh_mode::two_source : ecx::dh_mode::single;

    uint64_t order = ecx::point_order(G, g.cap);
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return order < 2 ? uint64_t(0) : 1 + rng() % (order - 1); };
    uint64_t av = a ? *a : draw();
    uint64_t bv = b ? *b : draw();

    std::optional<ecx::Point<Field>> G2;
    if (g2j) G2 = ecx::point_from_json(curve, *g2j);
    std::optional<ecx::DhSecondParams> s2;
    if (a2 || b2) s2 = ecx::DhSecondParams{a2.value_or(av), b2.value_or(bv)};

    auto tr = ecx::dh_derive(G, av, bv, k, mode, G2, s2, g.cap);
    json j = ecx::transcript_to_json(tr);
    j["seed"] = seed;
    std::string text = "mode: " + std::string(ecx::dh_mode_name(tr.mode)) + "  k = " +
                       std::to_string(k) + "  seed = " + std::to_string(seed) + "\n";
    text += "exchange 1: G = " + tr.exchange1.generator.to_string() +
            ", a = " + std::to_string(tr.exchange1.secret_a) +
            ", b = " + std::to_string(tr.exchange1.secret_b) +
            ", shared = " + tr.exchange1.shared.to_string() + "\n";
    if (tr.exchange2)
        text += "exchange 2: G = " + tr.exchange2->generator.to_string() +
                ", a = " + std::to_string(tr.exchange2->secret_a) +
                ", b = " + std::to_string(tr.exchange2->secret_b) +
                ", shared = " + tr.exchange2->shared.to_string() + "\n";
    if constexpr (std::is_same_v<Field, ecx::PrimeField>)
        text += "key: " + std::to_string(tr.key.value) + " (" + tr.key.to_binary_string() + ")\n";
    else
        text += "key: " + tr.key.to_string() + "\n";
    emit(g, j, text);
    return 0;
}

// --- prng -------------------------------------------------------------------

template <class Field>
int do_prng(const ecx::Curve<Field>& curve, const json& gen1, const std::optional<json>& gen2,
            int k, uint64_t count, uint64_t s0, uint64_t t0, const std::string& out_file,
            const GlobalOpts& g) {
    auto sub1 = ecx::subgroup_from_generator(ecx::point_from_json(curve, gen1), g.cap);
    auto sub2 = gen2 ? ecx::subgroup_from_generator(ecx::point_from_json(curve, *gen2), g.cap) : sub1;
    auto st = ecx::make_prng(sub1, sub2, k, s0, t0);

    ecx::BitPacker packer;
    json outputs = json::array();
    std::string text;
    for (uint64_t i = 0; i < count; ++i) {
        auto [bits, next] = ecx::prng_next(std::move(st));
        st = std::move(next);
        outputs.push_back(bits.to_binary_string());
        text += bits.to_binary_string() + "\n";
        packer.append(bits);
    }
    text += "outputs: " + std::to_string(st.step) + "  skipped: " + std::to_string(st.skipped) + "\n";
    if (!out_file.empty()) {
        auto bytes = packer.finish();
        std::ofstream out(out_file, std::ios::binary);
        if (!out) ecx::raise(ecx::errc::invalid_parameter, "cannot open " + out_file);
        out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
        text += "wrote " + std::to_string(bytes.size()) + " bytes to " + out_file + "\n";
    }
    emit(g,
         json{{"k", k},
              {"s0", s0},
              {"t0", t0},
              {"outputs", outputs},
              {"steps", st.step},
              {"skipped", st.skipped}},
         text);
    return 0;
}

template <class Fn1, class Fn2>
int dispatch_curve(const CurveFlags& cf, const GlobalOpts& g, Fn1&& on_prime, Fn2&& on_ext) {
    json spec = curve_spec(cf);
    ecx::LoadedCurve lc = ecx::load_curve(spec, g.audit_on());
    return lc.is_prime() ? on_prime(*lc.prime_curve) : on_ext(*lc.ext_curve);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact desk-scale toolbox for elliptic-curve randomness extractors"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    if (const char* env_cap = std::getenv("ECX_CAP")) g.cap = std::strtoull(env_cap, nullptr, 10);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", g.cap, "enumeration cap (env ECX_CAP)");
    app.add_option("--pair-cap", g.pair_cap, "pair-space cap for audits");
    app.add_option("--audit-mode", g.audit_mode, "re-check curve equation after group ops")
        ->check(CLI::IsMember({"on", "off"}));

    // curve-info
    auto* ci = app.add_subcommand("curve-info", "field, point count, Hasse check, subgroup orders");
    CurveFlags ci_cf;
    add_curve_flags(ci, ci_cf);

    // find-subgroups
    auto* fs = app.add_subcommand("find-subgroups", "all cyclic subgroups of a given order");
    CurveFlags fs_cf;
    uint64_t fs_order = 0;
    add_curve_flags(fs, fs_cf);
    fs->add_option("--order", fs_order, "requested subgroup order")->required();

    // extract
    auto* ex = app.add_subcommand("extract", "apply an extractor to explicit points");
    CurveFlags ex_cf;
    std::string ex_name, ex_p, ex_q;
    int ex_k = 1;
    add_curve_flags(ex, ex_cf);
    ex->add_option("--extractor", ex_name, "lk|dk|ext1|ext2")->required();
    ex->add_option("--P", ex_p, "first point (JSON or 'infinity')")->required();
    ex->add_option("--Q", ex_q, "second point (two-source extractors)");
    ex->add_option("--k", ex_k, "output length")->required();

    // audit
    auto* au = app.add_subcommand("audit", "exact distribution audit with every applicable bound");
    CurveFlags au_cf;
    std::string au_name, au_g1, au_g2;
    int au_k = 1, au_e = 40;
    add_curve_flags(au, au_cf);
    au->add_option("--extractor", au_name, "lk|dk|ext1|ext2")->required();
    au->add_option("--gen1", au_g1, "generator of the first subgroup")->required();
    au->add_option("--gen2", au_g2, "generator of the second subgroup (default: --gen1)");
    au->add_option("--k", au_k, "output length")->required();
    au->add_option("--e", au_e, "security exponent for the k_max verdict");

    // bounds
    auto* bo = app.add_subcommand("bounds", "distance-bound and k_max calculators");
    std::string bo_mode;
    bo->add_option("--mode", bo_mode, "lk|dk|ext1|ext2")->required();
    for (const char* name : {"--m", "--l", "--s", "--n", "--e", "--t", "--k"})
        bo->add_option(name)->type_name("INT");
    bo->add_option("--p")->type_name("INT");
    bo->add_option("--r")->type_name("INT");

    // char-sums
    auto* cs = app.add_subcommand("char-sums", "additive-subgroup and bilinear character sums");
    CurveFlags cs_cf;
    std::string cs_kind = "additive", cs_set = "zero", cs_basis, cs_g1, cs_g2, cs_alpha;
    add_curve_flags(cs, cs_cf);
    cs->add_option("--kind", cs_kind, "additive|bilinear")->check(CLI::IsMember({"additive", "bilinear"}));
    cs->add_option("--set", cs_set, "zero|base|full additive subgroup");
    cs->add_option("--basis", cs_basis, "explicit basis, JSON array of elements");
    cs->add_option("--gen1", cs_g1, "bilinear: generator of the first subgroup");
    cs->add_option("--gen2", cs_g2, "bilinear: generator of the second subgroup (default: --gen1)");
    cs->add_option("--alpha", cs_alpha, "bilinear: single character (default: sweep all nontrivial)");

    // dh-demo
    auto* dh = app.add_subcommand("dh-demo", "key agreement with extractor-based derivation");
    CurveFlags dh_cf;
    std::string dh_g, dh_mode = "single", dh_g2;
    std::optional<uint64_t> dh_a, dh_b, dh_a2, dh_b2;
    uint64_t dh_seed = 1;
    int dh_k = 1;
    add_curve_flags(dh, dh_cf);
    dh->add_option("--g", dh_g, "generator point")->required();
    dh->add_option("--secret-a", dh_a, "first secret (default: from --seed)");
    dh->add_option("--secret-b", dh_b, "second secret (default: from --seed)");
    dh->add_option("--seed", dh_seed, "seed for omitted secrets (fixed default, printed)");
    dh->add_option("--k", dh_k, "key length")->required();
    dh->add_option("--mode", dh_mode, "single|two_source")
        ->check(CLI::IsMember({"single", "two_source"}));
    dh->add_option("--g2", dh_g2, "second-exchange generator (two_source)");
    dh->add_option("--secret-a2", dh_a2, "second-exchange secret");
    dh->add_option("--secret-b2", dh_b2, "second-exchange secret");

    // prng
    auto* pr = app.add_subcommand("prng", "counter-driven demo stream (not a secure DRBG)");
    CurveFlags pr_cf;
    std::string pr_g1, pr_g2, pr_out;
    uint64_t pr_count = 0, pr_s0 = 1, pr_t0 = 1;
    int pr_k = 1;
    add_curve_flags(pr, pr_cf);
    pr->add_option("--gen1", pr_g1, "generator of the first subgroup")->required();
    pr->add_option("--gen2", pr_g2, "generator of the second subgroup (default: --gen1)");
    pr->add_option("--k", pr_k, "bits per output")->required();
    pr->add_option("--count", pr_count, "number of outputs")->required();
    pr->add_option("--s0", pr_s0, "initial scalar for the first subgroup");
    pr->add_option("--t0", pr_t0, "initial scalar for the second subgroup");
    pr->add_option("--out", pr_out, "write the packed bit stream to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ci->parsed())
            return dispatch_curve(
                ci_cf, g, [&](auto& c) { return do_curve_info(c, g); },
                [&](auto& c) { return do_curve_info(c, g); });
        if (fs->parsed())
            return dispatch_curve(
                fs_cf, g, [&](auto& c) { return do_find_subgroups(c, fs_order, g); },
                [&](auto& c) { return do_find_subgroups(c, fs_order, g); });
        if (ex->parsed()) {
            auto id = ecx::parse_extractor(ex_name);
            std::optional<json> qj;
            if (!ex_q.empty()) qj = parse_point_arg(ex_q);
            return dispatch_curve(
                ex_cf, g,
                [&](auto& c) { return do_extract(c, id, parse_point_arg(ex_p), qj, ex_k, g); },
                [&](auto& c) { return do_extract(c, id, parse_point_arg(ex_p), qj, ex_k, g); });
        }
        if (au->parsed()) {
            auto id = ecx::parse_extractor(au_name);
            std::optional<json> g2j;
            if (!au_g2.empty()) g2j = parse_point_arg(au_g2);
            return dispatch_curve(
                au_cf, g,
                [&](auto& c) { return do_audit(c, id, parse_point_arg(au_g1), g2j, au_k, au_e, g); },
                [&](auto& c) { return do_audit(c, id, parse_point_arg(au_g1), g2j, au_k, au_e, g); });
        }
        if (bo->parsed()) return do_bounds(bo_mode, bo, g);
        if (cs->parsed()) {
            if (cs_kind == "additive") return do_char_sums_additive(cs_cf, cs_set, cs_basis, g);
            std::optional<json> g2j;
            if (!cs_g2.empty()) g2j = parse_point_arg(cs_g2);
            return dispatch_curve(
                cs_cf, g,
                [&](auto& c) {
                    return do_char_sums_bilinear(c, parse_point_arg(cs_g1), g2j, cs_alpha, g);
                },
                [&](auto& c) {
                    return do_char_sums_bilinear(c, parse_point_arg(cs_g1), g2j, cs_alpha, g);
                });
        }
        if (dh->parsed()) {
            std::optional<json> g2j;
            if (!dh_g2.empty()) g2j = parse_point_arg(dh_g2);
            return dispatch_curve(
                dh_cf, g,
                [&](auto& c) {
                    return do_dh_demo(c, parse_point_arg(dh_g), dh_a, dh_b, dh_seed, dh_k, dh_mode,
                                      g2j, dh_a2, dh_b2, g);
                },
                [&](auto& c) {
                    return do_dh_demo(c, parse_point_arg(dh_g), dh_a, dh_b, dh_seed, dh_k, dh_mode,
                                      g2j, dh_a2, dh_b2, g);
                });
        }
        if (pr->parsed()) {
            std::optional<json> g2j;
            if (!pr_g2.empty()) g2j = parse_point_arg(pr_g2);
            return dispatch_curve(
                pr_cf, g,
                [&](auto& c) {
                    return do_prng(c, parse_point_arg(pr_g1), g2j, pr_k, pr_count, pr_s0, pr_t0,
                                   pr_out, g);
                },
                [&](auto& c) {
                    return do_prng(c, parse_point_arg(pr_g1), g2j, pr_k, pr_count, pr_s0, pr_t0,
                                   pr_out, g);
                });
        }
    } catch (const ecx::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ecx::errc::enumeration_too_large:
            return 3;
        case ecx::errc::derivation_failed:
        case ecx::errc::abscissa_undefined:
            return 4;
        default:
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
