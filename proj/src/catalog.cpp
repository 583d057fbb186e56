#include "ng/catalog.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ng/md_qq.hpp"

namespace ng {

namespace {

nlohmann::json cx_json(const cx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }
cx cx_from(const nlohmann::json& j) { return cx(j.at("re").get<double>(), j.at("im").get<double>()); }

SymmetricPairing pairing_from_ms(const AbelianGroup& G, const std::vector<long>& ms) {
    return SymmetricPairing::diagonal(G, ms);
}

} // namespace

std::string format_complex(const cx& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

nlohmann::json catalog_to_json(const Catalog& cat) {
    nlohmann::json j;
    j["group"] = cat.group;
    j["seed"] = cat.seed;
    j["starts"] = cat.starts;
    j["tool_version"] = cat.tool_version;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : cat.classes) {
        nlohmann::json e;
        e["class_id"] = c.class_id;
        e["conjugate_of"] = c.conjugate_of;
        e["pairing_m"] = c.pairing_ms;
        e["psi_signs"] = c.psi_signs;
        e["provenance"] = c.provenance;
        e["c"] = cx_json(c.rep.inst.c);
        e["residual"] = c.rep.residual;
        nlohmann::json bb = nlohmann::json::array();
        for (const auto& v : c.rep.b) bb.push_back(cx_json(v));
        e["b"] = bb;
        nlohmann::json aa = nlohmann::json::array();
        for (const auto& v : c.rep.inst.a) aa.push_back(cx_json(v));
        e["a"] = aa;
        // j-vector on the representative index order
        nlohmann::json jv = nlohmann::json::array();
        AbelianGroup G = AbelianGroup::parse(cat.group);
        for (long idx : j_index_order(G.factors))
            jv.push_back(std::arg(c.rep.b[idx] * std::sqrt(double(G.order))));
        e["j"] = jv;
        j["classes"].push_back(std::move(e));
    }
    return j;
}

Catalog catalog_from_json(const nlohmann::json& j) {
    Catalog cat;
    cat.group = j.at("group").get<std::string>();
    cat.seed = j.at("seed").get<std::uint64_t>();
    cat.starts = j.at("starts").get<long>();
    cat.tool_version = j.value("tool_version", "");
    AbelianGroup G = AbelianGroup::parse(cat.group);
    for (const auto& e : j.at("classes")) {
        ClassRecord rec;
        rec.class_id = e.at("class_id").get<int>();
        rec.conjugate_of = e.at("conjugate_of").get<int>();
        rec.pairing_ms = e.at("pairing_m").get<std::vector<long>>();
        rec.psi_signs = e.at("psi_signs").get<std::vector<int>>();
        rec.provenance = e.value("provenance", "loaded");
        rec.rep.inst.G = G;
        rec.rep.inst.pairing = pairing_from_ms(G, rec.pairing_ms);
        rec.rep.inst.c = cx_from(e.at("c"));
        for (const auto& v : e.at("a")) rec.rep.inst.a.push_back(cx_from(v));
        for (const auto& v : e.at("b")) rec.rep.b.push_back(cx_from(v));
        rec.rep.residual = e.at("residual").get<double>();
        cat.classes.push_back(std::move(rec));
    }
    return cat;
}

void save_catalog(const Catalog& cat, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << catalog_to_json(cat).dump(1) << "\n";
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    Catalog cat = catalog_from_json(j);
    for (const auto& c : cat.classes) {
        double r = full_residual(c.rep.inst, c.rep.b);
        double stored = std::max(c.rep.residual, 1e-15);
        if (r > 10 * stored && r > 1e-9)
            throw std::runtime_error("catalog record fails re-verification: class " +
                                     std::to_string(c.class_id));
    }
    return cat;
}

nlohmann::json md_to_json(const ModularData& md) {
    nlohmann::json j;
    j["lambda"] = md.lambda;
    j["id_index"] = md.id_index;
    j["labels"] = nlohmann::json::array();
    for (const auto& l : md.labels)
        j["labels"].push_back({{"family", l.family}, {"params", l.params}});
    nlohmann::json T = nlohmann::json::array();
    for (long i = 0; i < md.size(); ++i) T.push_back(cx_json(md.T[i]));
    j["T"] = T;
    nlohmann::json S = nlohmann::json::array();
    for (long i = 0; i < md.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long k = 0; k < md.size(); ++k) row.push_back(cx_json(md.S(i, k)));
        S.push_back(std::move(row));
    }
    j["S"] = S;
    return j;
}

ModularData md_from_json(const nlohmann::json& j) {
    ModularData md;
    md.lambda = j.at("lambda").get<double>();
    md.id_index = j.at("id_index").get<long>();
    for (const auto& l : j.at("labels"))
        md.labels.push_back({l.at("family").get<std::string>(),
                             l.at("params").get<std::vector<long>>()});
    long L = long(md.labels.size());
    md.T.resize(L);
    md.S.resize(L, L);
    for (long i = 0; i < L; ++i) md.T[i] = cx_from(j.at("T")[i]);
    for (long i = 0; i < L; ++i)
        for (long k = 0; k < L; ++k) md.S(i, k) = cx_from(j.at("S")[i][k]);
    return md;
}

void save_md(const ModularData& md, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << md_to_json(md).dump(1) << "\n";
}

ModularData load_md(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    return md_from_json(j);
}

std::optional<SeedInterpretation> interpret_seed_row(const SeedRow& row, double tol) {
    AbelianGroup G(row.group_factors);
    const long n = G.order;
    auto order = j_index_order(row.group_factors);

    for (int reading = 0; reading < 2; ++reading) {
        std::vector<long> ms = row.pairing_ms;
        std::vector<int> signs = row.a_signs;
        if (reading == 1) {
            for (auto& m : ms) m = -m;
            for (auto& s : signs) s = -s;
        }
        SymmetricPairing pairing;
        try {
            pairing = SymmetricPairing::diagonal(G, ms);
        } catch (const std::exception&) {
            continue;
        }
        // a = sign-character times the canonical refinement
        auto q = quadratic_refinement(pairing);
        std::vector<cx> a(n);
        for (long g = 0; g < n; ++g) {
            auto r = G.residues(g);
            double sgn = 1;
            for (size_t i = 0; i < signs.size() && i < r.size(); ++i)
                if (signs[i] < 0 && (r[i] % 2)) sgn = -sgn;
            a[g] = sgn * unit_phase(q[g]);
        }
        cx c = unit_phase(Rat(row.c_exp24, 24));
        SecondClassInstance inst{G, pairing, a, c, 0, 0};
        // quick branch validity
        cx suma = 0;
        for (auto& v : a) suma += v;
        if (std::abs(std::abs(suma) - std::sqrt(double(n))) > 1e-6) continue;
        if (std::abs(c * c * c - std::sqrt(double(n)) / suma) > 1e-6) continue;
        // seed b from the j-vector and refine
        double delta = inst.delta();
        std::vector<cx> b(n, cx(0, 0));
        b[0] = -1.0 / delta;
        for (size_t i = 0; i < order.size(); ++i)
            b[order[i]] = std::polar(1.0 / std::sqrt(double(n)), row.j[i]);
        for (long g = 1; g < n; ++g)
            if (std::abs(b[g]) < 1e-14) b[g] = std::conj(inst.a[G.neg(g)]) * std::conj(b[G.neg(g)]);
        double r0 = full_residual(inst, b);
        if (r0 > tol) continue;
        SecondClassSolution sol{inst, b, r0};
        try {
            sol = refine(sol, 1e-12);
        } catch (const std::exception&) {
            continue;
        }
        if (sol.residual > 1e-10) continue;
        return SeedInterpretation{std::move(sol), reading == 1};
    }
    return std::nullopt;
}

bool class_matches_row(const ClassRecord& rec, const SeedRow& row, double tol) {
    auto seed = interpret_seed_row(row);
    if (!seed) return false;
    const SecondClassSolution& tgt = seed->sol;
    const AbelianGroup& G = rec.rep.inst.G;
    if (tgt.inst.G.factors != G.factors) return false;
    if (std::abs(tgt.inst.c - rec.rep.inst.c) > tol) return false;
    auto key_t = tgt.inst.pairing.phase_table();
    for (const auto& phi : automorphisms(G)) {
        if (rec.rep.inst.pairing.transport(phi).phase_table() != key_t) continue;
        bool ok = true;
        for (long g = 0; g < G.order && ok; ++g) {
            if (std::abs(rec.rep.inst.a[phi[g]] - tgt.inst.a[g]) > tol) ok = false;
            else if (std::abs(rec.rep.b[phi[g]] - tgt.b[g]) > tol) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

std::optional<ModularData> qq_target_for_row(const SeedRow& row) {
    AbelianGroup G(row.group_factors);
    if (G.order % 2 == 0 || row.qprime.empty()) return std::nullopt;
    long n = G.order;
    // Q on G from the pairing column
    QuadraticForm Q = (G.rank() == 1)
                          ? QuadraticForm::cyclic(n, row.pairing_ms[0])
                          : QuadraticForm::diagonal(G, row.pairing_ms);
    AbelianGroup Gp = row.qprime_group.empty() ? AbelianGroup({n + 4})
                                               : AbelianGroup(row.qprime_group);
    QuadraticForm Qp = (Gp.rank() == 1) ? QuadraticForm::cyclic(Gp.order, row.qprime[0])
                                        : QuadraticForm::diagonal(Gp, row.qprime);
    return md_qq(Q, Qp).md;
}

} // namespace ng
