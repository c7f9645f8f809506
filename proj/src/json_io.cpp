#include "cubic/json_io.hpp"

#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ConfigError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

int int_field_or(const Json& j, const char* key, int fallback) {
    return j.contains(key) ? int_field(j, key) : fallback;
}

std::vector<std::int64_t> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ConfigError(std::string(what) + " must be an array of integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

const char* kind_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::Am: return "Am";
    case FamilyKind::Jm: return "Jm";
    case FamilyKind::ShiftedC: return "shifted";
    }
    return "?";
}

FamilyKind parse_kind(const std::string& s) {
    if (s == "Am") return FamilyKind::Am;
    if (s == "Jm") return FamilyKind::Jm;
    if (s == "shifted") return FamilyKind::ShiftedC;
    throw ConfigError("unknown descriptor kind \"" + s + "\" (expected Am, Jm or shifted)");
}

/// Valuation vectors with kInfinity written as null.
Json valuations_json(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x >= kInfinity ? Json(nullptr) : Json(x));
    return out;
}

} // namespace

Json series_to_json(const Series& s) { return Json(s.coeffs()); }

Series series_from_json(const RingConfig& cfg, const Json& j) {
    const auto c = int_array(j, "series");
    return Series::from_coeffs(cfg, c);
}

Json config_to_json(const RingConfig& cfg) { return Json{{"p", cfg.p}, {"prec", cfg.prec}}; }

RingConfig config_from_json(const Json& j) {
    return RingConfig::make(static_cast<std::uint32_t>(int_field(j, "p")), int_field(j, "prec"));
}

Json algebra_to_json(const CubicAlgebra& alg) {
    Json j = config_to_json(alg.config());
    j["case"] = case_code(alg.branch_case());
    if (!alg.min_poly().empty()) j["f"] = alg.min_poly();
    return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
    const Json& c = field(j, "case");
    if (!c.is_string()) throw ConfigError("field \"case\" must be a string");
    std::vector<std::int64_t> f;
    if (j.contains("f")) f = int_array(j.at("f"), "f");
    return CubicAlgebra::make(parse_case(c.get<std::string>()), config_from_json(j), std::move(f));
}

Json element_to_json(const Element& x) {
    return Json::array({series_to_json(x[0]), series_to_json(x[1]), series_to_json(x[2])});
}

Element element_from_json(const CubicAlgebra& alg, const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ConfigError("an element is an array of 3 series");
    return Element(series_from_json(alg.config(), j[0]), series_from_json(alg.config(), j[1]),
                   series_from_json(alg.config(), j[2]));
}

Json lattice_to_json(const Lattice& M) {
    Json cols = Json::array();
    for (const auto& c : M.columns()) cols.push_back(element_to_json(c));
    return Json{{"algebra", algebra_to_json(M.alg())}, {"hnf", cols}};
}

Lattice lattice_from_json(const Json& j) { return lattice_from_json(algebra_from_json(field(j, "algebra")), j); }

Lattice lattice_from_json(const AlgebraPtr& alg, const Json& j) {
    const Json& h = field(j, "hnf");
    if (!h.is_array() || h.size() != 3) throw ConfigError("\"hnf\" must hold 3 columns");
    std::vector<Element> cols;
    for (const auto& c : h) cols.push_back(element_from_json(*alg, c));
    return Lattice::from_generators(alg, cols);
}

Json descriptor_to_json(const FamilyDescriptor& d) {
    Json j{{"case", case_code(d.branch_case)}, {"kind", kind_name(d.kind)}};
    if (d.kind != FamilyKind::ShiftedC) {
        j["m"] = d.m;
        return j;
    }
    j["k"] = d.k;
    if (d.shape == FamilyShape::R) {
        j[d.branch_case == BranchCase::OneBranchRamified ? "rho" : "r"] = d.r;
    } else {
        j["l"] = d.l;
        j["q"] = d.q;
    }
    j["a"] = d.a;
    if (d.branch_case == BranchCase::OneBranchUnramified || d.branch_case == BranchCase::TwoBranchesUnramified)
        j["chart"] = d.chart;
    if (d.e >= 0) j["e"] = d.e;
    if (d.e_prime >= 0) j["e_prime"] = d.e_prime;
    return j;
}

FamilyDescriptor descriptor_from_json(const Json& j) {
    FamilyDescriptor d;
    const Json& c = field(j, "case");
    if (!c.is_string()) throw ConfigError("field \"case\" must be a string");
    d.branch_case = parse_case(c.get<std::string>());
    const Json& k = field(j, "kind");
    if (!k.is_string()) throw ConfigError("field \"kind\" must be a string");
    d.kind = parse_kind(k.get<std::string>());
    if (d.kind != FamilyKind::ShiftedC) {
        d.m = int_field(j, "m");
        if (d.m < 0) throw ConfigError("m must be non-negative");
        return d;
    }
    d.k = int_field_or(j, "k", 0);
    if (j.contains("l") || j.contains("q")) {
        d.shape = FamilyShape::LQ;
        d.l = int_field(j, "l");
        d.q = int_field(j, "q");
    } else {
        d.shape = FamilyShape::R;
        d.r = j.contains("rho") ? int_field(j, "rho") : int_field(j, "r");
    }
    d.chart = int_field_or(j, "chart", 0);
    d.e = int_field_or(j, "e", -1);
    d.e_prime = int_field_or(j, "e_prime", -1);
    if (j.contains("a")) {
        for (auto v : int_array(j.at("a"), "a")) {
            if (v < 0) throw ConfigError("descriptor parameter a must have non-negative digits");
            d.a.push_back(static_cast<std::uint32_t>(v));
        }
    }
    if (d.k < 0 || d.r < 0 || d.l < 0 || d.q < 0) throw ConfigError("descriptor exponents must be non-negative");
    return d;
}

Json dual_report_to_json(const DualReport& r) {
    Json j{{"input", lattice_to_json(r.input)}, {"trace_dual", lattice_to_json(r.trace_dual)}, {"note", r.note}};
    j["descriptor"] = r.descriptor ? descriptor_to_json(*r.descriptor) : Json(nullptr);
    j["closed_form"] = r.closed_form ? lattice_to_json(*r.closed_form) : Json(nullptr);
    j["witness"] = r.witness ? Json{{"lambda", element_to_json(r.witness->numerator)}, {"shift", r.witness->shift}}
                             : Json(nullptr);
    return j;
}

Json census_to_json(const ClassCensus& c) {
    Json classes = Json::array();
    for (const auto& cls : c.classes) {
        classes.push_back(Json{{"representative", lattice_to_json(cls.representative)},
                               {"multiplier", lattice_to_json(cls.multiplier)},
                               {"tag", tag_name(cls.tag)},
                               {"members", cls.members}});
    }
    Json j{{"base", lattice_to_json(c.base)},
           {"classes", classes},
           {"class_count", c.classes.size()},
           {"ideals_scanned", c.ideals_scanned},
           {"unexpected", c.unexpected()}};
    j["window"] = c.window ? Json(*c.window) : Json(nullptr);
    return j;
}

std::string census_to_csv(const ClassCensus& c) {
    std::ostringstream out;
    out << "class,tag,members,representative_pivots,multiplier_pivots\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        const auto& rp = cls.representative.pivots();
        const auto& mp = cls.multiplier.pivots();
        out << i << ',' << tag_name(cls.tag) << ',' << cls.members << ',' << rp[0] << ' ' << rp[1] << ' ' << rp[2]
            << ',' << mp[0] << ' ' << mp[1] << ' ' << mp[2] << '\n';
    }
    return out.str();
}

Json par_estimate_to_json(const FamilyDescriptor& d, const ParEstimate& e) {
    Json j{{"family", descriptor_to_json(d)}, {"primes", e.primes}, {"counts", e.counts}, {"note", e.note}};
    j["degree"] = e.degree ? Json(*e.degree) : Json(nullptr);
    return j;
}

Json singularity_to_json(const SingularityType& s) {
    return Json{{"name", s.name},
                {"branches", s.branches},
                {"vx", valuations_json(s.vx)},
                {"vy", valuations_json(s.vy)},
                {"computed_vx", valuations_json(s.computed_vx)},
                {"computed_vy", valuations_json(s.computed_vy)},
                {"param_count", s.param_count},
                {"modality", s.modality()},
                {"unramified", s.unramified},
                {"multivaluations_match", s.multivaluations_match()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace cubic
