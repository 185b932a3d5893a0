#include "sector/certificate.hpp"

namespace sector {

Json certificate_skeleton(std::string_view command) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = std::string(command);
    doc["input"] = Json::object();
    doc["parameters"] = Json::object();
    doc["verdict"] = nullptr;
    doc["roots"] = Json::array();
    doc["proof_steps"] = nullptr;
    doc["precision_bits"] = 0;
    doc["seed"] = nullptr;
    doc["runtime_ms"] = nullptr;
    doc["events"] = Json::array();
    return doc;
}

Json polynomial_json(const Polynomial& p) {
    return {{"coefficients", format_coefficients(p)}, {"monomials", format_monomials(p)}, {"degree", p.degree()}};
}

std::string decimal(const Interval& x) { return x.to_string(); }

std::string decimal_upper(const Rational& x) {
    if (x == 0) return "0";
    mpfr_t v;
    mpfr_init2(v, 64);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDU);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.2RUe", v);
    std::string out(buf);
    mpfr_free_str(buf);
    mpfr_clear(v);
    return out;
}

Json root_json(const RootEnclosure& r) {
    const ComplexInterval box = r.box();
    return {{"re", decimal(box.re)},
            {"im", decimal(box.im)},
            {"radius", decimal_upper(r.radius)},
            {"multiplicity", r.multiplicity}};
}

Json margin_json(const RootMargin& m) {
    Json j = root_json(m.root);
    if (m.origin) {
        j["origin"] = true;
        j["arg"] = nullptr;
        j["margin"] = nullptr;
        return j;
    }
    j["arg"] = decimal(m.arg);
    j["margin"] = decimal(m.margin);
    j["margin_nonnegative"] = m.exact_boundary || mpfr_sgn(m.margin.lower()) >= 0;
    if (m.exact_boundary) j["exact_boundary"] = true;
    return j;
}

Json arg_variation_json(const ArgVariation& v) {
    return {{"n", v.n}, {"m", v.m}, {"theta", v.theta.to_string()}, {"delta_over_pi", to_string(v.delta_turns())}};
}

Json trace_json(const QuadrantTrace& t) {
    Json events = Json::array();
    for (const auto& e : t.events) {
        events.push_back({{"t_lo", to_string(e.where.lo)},
                          {"t_hi", to_string(e.where.hi)},
                          {"kind", e.kind == Crossing::ImagZero ? "imag_zero" : "real_zero"},
                          {"co_sign", e.co_sign},
                          {"quarter", e.quarter.get_str()}});
    }
    return {{"events", events},
            {"initial_signs", {t.initial_real_sign, t.initial_imag_sign}},
            {"terminal_signs", {t.terminal_real_sign, t.terminal_imag_sign}},
            {"delta_over_pi", to_string(t.delta_turns())}};
}

Json zero_list_json(const ZeroList& z) {
    Json out = Json::array();
    for (const auto& x : z.zeros) {
        if (x.is_point())
            out.push_back(to_string(x.lo));
        else
            out.push_back({to_string(x.lo), to_string(x.hi)});
    }
    return out;
}

Json proof_steps_json(const ProofStepReport& r) {
    return {{"theta", r.theta.to_string()},
            {"g1_count_expected", r.g1_count_expected},
            {"g1_count_actual", r.g1_count_actual},
            {"g2_count", r.g2_count},
            {"g1g2_interlace", r.g1g2_interlace},
            {"rolle_interlace", r.rolle_interlace},
            {"h1h2_weak_interlace", r.h1h2_weak_interlace},
            {"delta_p", arg_variation_json(r.delta_p)},
            {"delta_pprime", arg_variation_json(r.delta_pprime)},
            {"all_pass", r.all_pass()}};
}

void fill_certificate(Json& doc, const SectorCertificate& cert) {
    doc["verdict"] = std::string(to_string(cert.verdict));
    doc["input"]["derivative"] = polynomial_json(cert.target);
    Json roots = Json::array();
    for (const auto& m : cert.margins) roots.push_back(margin_json(m));
    doc["roots"] = roots;
    if (cert.proof_steps) doc["proof_steps"] = proof_steps_json(*cert.proof_steps);
    doc["precision_bits"] = cert.precision_bits;
    for (const auto& e : cert.events) doc["events"].push_back(e);
}

} // namespace sector
