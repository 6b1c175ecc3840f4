#include "crmap/io.hpp"

#include <fstream>

namespace crmap {

Json poly_to_json(const PolyS& p) {
    Json out = Json::array();
    for (const auto& [ex, c] : p.terms()) {
        Json term;
        term["e"] = {ex.e[0], ex.e[1], ex.e[2], ex.e[3]};
        term["c"] = c.str();
        out.push_back(term);
    }
    return out;
}

PolyS poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
    PolyS out;
    for (const auto& term : j) {
        if (!term.contains("e") || !term.contains("c"))
            throw ParseError("polynomial term needs \"e\" and \"c\"");
        const auto& e = term["e"];
        if (!e.is_array() || e.size() != 4) throw ParseError("exponent vector must have 4 entries");
        Expo ex;
        for (int k = 0; k < 4; k++) {
            int v = e[k].get<int>();
            if (v < 0) throw ParseError("exponents must be non-negative");
            ex.e[k] = v;
        }
        out.add_term(ex, Scalar::parse(term["c"].get<std::string>()));
    }
    return out;
}

namespace {

std::string model_name(ModelKind k) { return k == ModelKind::Heisenberg ? "heisenberg" : "sphere"; }

ModelKind model_from_name(const std::string& s) {
    if (s == "heisenberg") return ModelKind::Heisenberg;
    if (s == "sphere") return ModelKind::Sphere;
    throw ParseError("unknown model '" + s + "'");
}

}  // namespace

Json map_to_json(const CRMapS& H) {
    Json out;
    if (H.source.kind == H.target.kind) {
        out["model"] = model_name(H.source.kind);
    } else {
        out["model"] = "mixed";
        out["source_model"] = model_name(H.source.kind);
        out["target_model"] = model_name(H.target.kind);
    }
    out["source_dim"] = H.source.dim;
    out["target_dim"] = H.target.dim;
    Json comps = Json::array();
    for (const auto& n : H.body.nums) comps.push_back(poly_to_json(n));
    out["components"] = comps;
    out["denominator"] = poly_to_json(H.body.den);
    if (!H.base_point.empty()) {
        Json bp = Json::array();
        for (const auto& b : H.base_point) bp.push_back(b.str());
        out["base_point"] = bp;
    }
    return out;
}

CRMapS map_from_json(const Json& j) {
    for (const char* key : {"model", "source_dim", "target_dim", "components", "denominator"})
        if (!j.contains(key)) throw ParseError(std::string("map file missing \"") + key + "\"");
    CRMapS H;
    std::string model = j["model"].get<std::string>();
    if (model == "mixed") {
        H.source.kind = model_from_name(j.at("source_model").get<std::string>());
        H.target.kind = model_from_name(j.at("target_model").get<std::string>());
    } else {
        H.source.kind = H.target.kind = model_from_name(model);
    }
    H.source.dim = j["source_dim"].get<int>();
    H.target.dim = j["target_dim"].get<int>();
    for (const auto& comp : j["components"]) H.body.nums.push_back(poly_from_json(comp));
    H.body.den = poly_from_json(j["denominator"]);
    if (H.body.den.is_zero()) throw ParseError("denominator is identically zero");
    if (j.contains("base_point"))
        for (const auto& b : j["base_point"]) H.base_point.push_back(Scalar::parse(b.get<std::string>()));
    check_dimensions(H);
    return H;
}

CRMapS load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return map_from_json(j);
}

void save_map(const CRMapS& H, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw CrmapError("cannot write '" + path + "'");
    out << map_to_json(H).dump(2) << "\n";
}

Json aut_to_json(const Aut& a) {
    Json out;
    if (std::holds_alternative<StabilityAut>(a)) {
        const auto& s = std::get<StabilityAut>(a);
        out["type"] = "stability";
        out["lambda"] = s.lambda.str();
        Json U = Json::array();
        for (Eigen::Index i = 0; i < s.U.rows(); i++) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < s.U.cols(); j++) row.push_back(s.U(i, j).str());
            U.push_back(row);
        }
        out["U"] = U;
        Json c = Json::array();
        for (Eigen::Index i = 0; i < s.c.size(); i++) c.push_back(s.c(i).str());
        out["c"] = c;
        out["r"] = s.r.str();
    } else {
        const auto& t = std::get<Translation>(a);
        out["type"] = "translation";
        Json z0 = Json::array();
        for (Eigen::Index i = 0; i < t.z0.size(); i++) z0.push_back(t.z0(i).str());
        out["z0"] = z0;
        out["u0"] = t.u0.str();
    }
    return out;
}

Aut aut_from_json(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "stability") {
        StabilityAut s;
        s.lambda = Scalar::parse(j.at("lambda").get<std::string>());
        const auto& U = j.at("U");
        int m = static_cast<int>(U.size());
        s.U = MatS(m, m);
        for (int i = 0; i < m; i++)
            for (int k = 0; k < m; k++) s.U(i, k) = Scalar::parse(U[i][k].get<std::string>());
        const auto& c = j.at("c");
        s.c = VecS(m);
        for (int i = 0; i < m; i++) s.c(i) = Scalar::parse(c[i].get<std::string>());
        s.r = Scalar::parse(j.at("r").get<std::string>());
        return s;
    }
    if (type == "translation") {
        Translation t;
        const auto& z0 = j.at("z0");
        t.z0 = VecS(static_cast<int>(z0.size()));
        for (Eigen::Index i = 0; i < t.z0.size(); i++)
            t.z0(i) = Scalar::parse(z0[i].get<std::string>());
        t.u0 = Scalar::parse(j.at("u0").get<std::string>());
        return t;
    }
    throw ParseError("unknown automorphism type '" + type + "'");
}

Json certificate_to_json(const NormalFormCertificate& cert) {
    Json out;
    out["normalized"] = map_to_json(cert.normalized);
    Json left = Json::array(), right = Json::array();
    for (const auto& a : cert.left_auts) left.push_back(aut_to_json(a));
    for (const auto& a : cert.right_auts) right.push_back(aut_to_json(a));
    out["left_auts"] = left;
    out["right_auts"] = right;
    static const char* names[12] = {"i", "ii", "iii", "iv", "v",  "vi",
                                    "vii", "viii", "ix", "x", "xi", "xii"};
    Json conds;
    for (int k = 0; k < 12; k++) conds[names[k]] = cert.conditions[k];
    out["conditions"] = conds;
    out["tangentially_2_N3"] = cert.tangentially_2_n3;
    out["phase_step_skipped"] = cert.phase_step_skipped;
    return out;
}

Json degeneracy_report_to_json(const DegeneracyReport& rep) {
    Json out;
    out["point"] = rep.point;
    out["mode"] = rep.exact_mode ? "exact" : "float";
    out["ranks"] = rep.ranks;
    out["s"] = rep.s;
    out["k0"] = rep.k0;
    if (!rep.exact_mode) {
        out["min_kept_rel"] = rep.min_kept_rel;
        out["max_dropped_rel"] = rep.max_dropped_rel;
    }
    return out;
}

Json tangential_report_to_json(const TangentialReport& rep) {
    Json out;
    out["generic_ranks"] = rep.generic_ranks;
    out["k"] = rep.k;
    out["tdeg"] = rep.tdeg;
    out["certified_rank"] = rep.certified_rank;
    return out;
}

Json locus_report_to_json(const LocusReport& rep) {
    Json out;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["point"] = e.point;
        if (e.pole) {
            je["pole"] = true;
        } else {
            je["s"] = e.s;
            je["k0"] = e.k0;
        }
        entries.push_back(je);
    }
    out["points"] = entries;
    out["generic_s"] = rep.generic_s;
    out["exceptional_indices"] = rep.exceptional;
    return out;
}

}  // namespace crmap
