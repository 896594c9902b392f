#pragma once

// Rendering for classification and verification results: a human-readable
// table and a machine form built on ordered JSON so output is byte-stable
// across runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "content.hpp"
#include "deciders.hpp"
#include "harness.hpp"
#include "ideal.hpp"
#include "localize.hpp"
#include "table_ring.hpp"

namespace pruferlab {

namespace detail {

// "a, b, c" over element names; long lists get elided with a count so
// witness lines stay one line.
inline std::string name_list(const RingPtr& R, const std::vector<elem>& xs,
                             std::size_t cap = 12) {
    std::string out;
    std::size_t shown = xs.size() > cap ? cap : xs.size();
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ", ";
        out += R->name(xs[i]);
    }
    if (shown < xs.size())
        out += ", ... (" + std::to_string(xs.size()) + " elements)";
    return out;
}

inline nlohmann::ordered_json name_array(const RingPtr& R, const std::vector<elem>& xs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (elem x : xs) arr.push_back(R->name(x));
    return arr;
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// One-line structural summary, independent of any condition verdict.
inline std::string summarize_ring(const RingPtr& R, const RunConfig& cfg = {}) {
    std::string s = "order=" + std::to_string(R->order) +
                    " char=" + std::to_string(R->characteristic) +
                    " units=" + std::to_string(units(*R).size()) +
                    " idempotents=" + std::to_string(idempotents(*R).size()) +
                    " ideals=" + std::to_string(all_ideals(R, cfg).size()) + " factors=[";
    auto dec = local_decomposition(R, cfg);
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dec.factors[i].ring->order);
    }
    return s + "]";
}

inline nlohmann::ordered_json ring_summary_json(const RingPtr& R, const RunConfig& cfg = {}) {
    nlohmann::ordered_json j;
    j["ring"] = R->provenance.name();
    j["spec"] = R->provenance.to_json();
    j["order"] = R->order;
    j["characteristic"] = R->characteristic;
    j["units"] = units(*R).size();
    j["idempotents"] = idempotents(*R).size();
    j["ideal_count"] = all_ideals(R, cfg).size();
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const LocalFactor& f : local_decomposition(R, cfg).factors)
        factors.push_back(f.ring->order);
    j["factor_orders"] = factors;
    return j;
}

inline nlohmann::ordered_json classification_json(const ClassificationReport& C) {
    nlohmann::ordered_json j;
    j["ring"] = C.ring->provenance.name();
    j["spec"] = C.ring->provenance.to_json();
    j["order"] = C.ring->order;
    j["characteristic"] = C.ring->characteristic;
    j["local"] = C.local;
    j["total"] = C.total;
    j["noetherian"] = C.noetherian;
    j["ideal_count"] = C.ideal_count;
    j["factor_orders"] = C.factor_orders;
    j["degree_bound"] = C.degree_bound;

    nlohmann::ordered_json cond;
    cond["semihereditary"] = C.semihereditary.holds;
    cond["weak_dimension"] = wdim_class_name(C.wdim.cls);
    cond["wdim_le_1"] = C.wdim.cls == WdimClass::zero;
    cond["arithmetical"] = C.arithmetical.holds;
    cond["gaussian"] = !C.gaussian.refuted;
    cond["pruefer"] = C.pruefer.holds;
    j["conditions"] = cond;

    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    if (C.semihereditary.witness)
        w["non_summand_ideal"] =
            detail::name_array(C.ring, C.semihereditary.witness->elements);
    if (C.wdim.resolution) {
        const ResolutionWitness& rw = *C.wdim.resolution;
        nlohmann::ordered_json r;
        r["factor_order"] = rw.ring->order;
        r["generator"] = rw.ring->name(rw.x);
        r["nilpotency"] = rw.nilpotency;
        w["periodic_resolution"] = r;
    }
    if (C.wdim.non_projective)
        w["non_projective_ideal"] =
            detail::name_array(C.ring, C.wdim.non_projective->elements);
    if (C.arithmetical.witness_ideal) {
        nlohmann::ordered_json a;
        a["ideal"] = detail::name_array(C.ring, C.arithmetical.witness_ideal->elements);
        a["factor_idempotent"] = C.ring->name(C.arithmetical.witness_idempotent);
        w["non_locally_principal"] = a;
    }
    if (C.gaussian.witness) {
        const GaussianWitness& gw = *C.gaussian.witness;
        nlohmann::ordered_json g;
        g["f"] = print_polynomial(gw.f);
        g["g"] = print_polynomial(gw.g);
        g["f_coefficients"] = detail::name_array(C.ring, gw.f.coeffs);
        g["g_coefficients"] = detail::name_array(C.ring, gw.g.coeffs);
        g["content_of_product"] = detail::name_array(C.ring, gw.content_of_product.elements);
        g["content_product"] = detail::name_array(C.ring, gw.content_product.elements);
        w["content_formula_failure"] = g;
    }
    j["witnesses"] = w;
    j["pruefer_regular_ideals_checked"] = C.pruefer.regular_ideals_checked;
    return j;
}

inline std::string render_classification(const ClassificationReport& C) {
    using detail::yn;
    const RingPtr& R = C.ring;
    std::string s;
    s += "ring: " + R->provenance.name() + "\n";
    s += "order: " + std::to_string(R->order) +
         "   characteristic: " + std::to_string(R->characteristic) + "\n";
    s += "local: " + std::string(yn(C.local)) + "   total: " + yn(C.total) +
         "   noetherian: " + yn(C.noetherian) + "\n";
    s += "ideals: " + std::to_string(C.ideal_count) + "   local factor orders:";
    for (int o : C.factor_orders) s += " " + std::to_string(o);
    s += "\n\n";

    s += "semihereditary:            " + std::string(yn(C.semihereditary.holds)) + "\n";
    if (C.semihereditary.witness)
        s += "  ideal with no complement: {" +
             detail::name_list(R, C.semihereditary.witness->elements) + "}\n";

    s += "weak dimension:            " + std::string(wdim_class_name(C.wdim.cls)) + "\n";
    if (C.wdim.resolution) {
        const ResolutionWitness& rw = *C.wdim.resolution;
        s += "  periodic resolution in a factor of order " + std::to_string(rw.ring->order) +
             ": multiplication by " + rw.ring->name(rw.x) + " (nilpotency " +
             std::to_string(rw.nilpotency) + ") never gains a projective kernel\n";
    }
    if (C.wdim.non_projective)
        s += "  non-projective ideal: {" +
             detail::name_list(R, C.wdim.non_projective->elements) + "}\n";

    s += "arithmetical:              " + std::string(yn(C.arithmetical.holds)) + "\n";
    if (C.arithmetical.witness_ideal)
        s += "  ideal {" + detail::name_list(R, C.arithmetical.witness_ideal->elements) +
             "} is not principal in the factor at idempotent " +
             R->name(C.arithmetical.witness_idempotent) + "\n";

    s += "content formula (deg <= " + std::to_string(C.degree_bound) +
         "):  " + (C.gaussian.refuted ? "fails" : "holds") + "\n";
    if (C.gaussian.witness) {
        const GaussianWitness& gw = *C.gaussian.witness;
        s += "  f = " + print_polynomial(gw.f) + "\n";
        s += "  g = " + print_polynomial(gw.g) + "\n";
        s += "  c(f*g) = {" + detail::name_list(R, gw.content_of_product.elements) + "}\n";
        s += "  c(f)*c(g) = {" + detail::name_list(R, gw.content_product.elements) + "}\n";
    }

    s += "regular ideals invertible: " + std::string(yn(C.pruefer.holds)) + " (" +
         std::to_string(C.pruefer.regular_ideals_checked) + " checked)\n";
    return s;
}

inline nlohmann::ordered_json verification_json(const VerificationReport& V) {
    nlohmann::ordered_json j;
    j["degree_bound"] = V.degree_bound;
    j["passed"] = V.passed;
    j["failed"] = V.failed;
    j["skipped"] = V.skipped;
    j["ok"] = V.ok();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationEntry& e : V.entries) {
        nlohmann::ordered_json row;
        row["check"] = e.check;
        row["instance"] = e.instance;
        row["status"] = e.status;
        row["detail"] = e.detail;
        arr.push_back(row);
    }
    j["entries"] = arr;
    return j;
}

inline std::string render_verification(const VerificationReport& V) {
    std::string s;
    std::string last_check;
    for (const VerificationEntry& e : V.entries) {
        if (e.check != last_check) {
            if (!last_check.empty()) s += "\n";
            s += e.check + "\n";
            last_check = e.check;
        }
        std::string mark = e.status == "pass" ? "  ok   "
                          : e.status == "fail" ? "  FAIL "
                                               : "  skip ";
        s += mark + e.instance;
        if (!e.detail.empty()) s += ": " + e.detail;
        s += "\n";
    }
    s += "\n" + std::to_string(V.passed) + " passed, " + std::to_string(V.failed) +
         " failed, " + std::to_string(V.skipped) + " skipped\n";
    return s;
}

}  // namespace pruferlab
