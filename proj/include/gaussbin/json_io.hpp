#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings for polynomials, partitions, reports and certificates.
 *
 * Big integers are always decimal strings. Certificates decode back into the
 * in-memory tree so stored certificates can be re-verified.
 */

#include "gaussbin/certify.hpp"
#include "gaussbin/koh.hpp"
#include "gaussbin/partitions.hpp"
#include "gaussbin/polyring.hpp"
#include "gaussbin/unimodality.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>

namespace gaussbin {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntPolynomial& p) { return Json{{"coeffs", to_decimal(p)}}; }

inline IntPolynomial polynomial_from_json(const Json& j) {
    return from_decimal(j.at("coeffs").get<std::vector<std::string>>());
}

inline Json to_json(const Partition& p) { return Json{{"parts", p.parts()}}; }

inline Partition partition_from_json(const Json& j) { return Partition(j.at("parts").get<std::vector<int>>()); }

inline Json to_json(const StrictnessReport& r) {
    Json j{{"a", r.a}, {"b", r.b}, {"degree", r.degree}, {"verdict", r.strict ? "strict" : "non-strict"}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline StrictnessReport strictness_from_json(const Json& j) {
    StrictnessReport r;
    r.a = j.at("a").get<long>();
    r.b = j.at("b").get<long>();
    r.degree = j.value("degree", r.a * r.b);
    const auto v = j.at("verdict").get<std::string>();
    if (v != "strict" && v != "non-strict") throw std::invalid_argument("bad verdict \"" + v + "\"");
    r.strict = v == "strict";
    if (j.contains("witness")) r.witness = j.at("witness").get<long>();
    return r;
}

inline Json to_json(const KohTerm& t) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back({f.top, f.bottom});
    return Json{{"lambda", t.lambda.parts()}, {"shift", t.shift}, {"factors", std::move(factors)}};
}

inline Json koh_terms_json(long a, long b) {
    Json terms = Json::array();
    for (const auto& lambda : partitions_of(static_cast<int>(b))) terms.push_back(to_json(koh_term(a, lambda)));
    return Json{{"a", a}, {"b", b}, {"terms", std::move(terms)}};
}

namespace detail {

inline Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

inline Interval interval_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("interval must be [lo, hi]");
    return {j[0].get<long>(), j[1].get<long>()};
}

}  // namespace detail

inline Json to_json(const Certificate& c) {
    Json j{{"a", c.a}, {"b", c.b}};
    if (c.is_direct()) {
        j["root"] = Json{{"kind", "direct"}};
        return j;
    }
    const auto& cover = std::get<InductiveCover>(c.root);
    const auto& base = cover.base;
    const auto& st = cover.step;
    Json conds = Json::array();
    for (const auto& s : st.side_conditions) conds.push_back(Json{{"name", s.name}, {"holds", s.holds}});
    Json step{{"family", family_name(st.family)},
              {"partition", st.term_partition.parts()},
              {"shift", st.shift},
              {"child_params", Json::array({st.child_a, st.child_b})},
              {"linear_factor", st.linear_factor ? Json(*st.linear_factor) : Json(nullptr)},
              {"lemma2", st.lemma2 ? Json{{"c", st.lemma2->c}, {"d", st.lemma2->d}, {"t", st.lemma2->t}}
                                   : Json(nullptr)},
              {"claimed", detail::interval_json(st.claimed)},
              {"side_conditions", std::move(conds)},
              {"child", st.child ? to_json(*st.child) : Json(nullptr)}};
    j["root"] = Json{{"kind", "cover"},
                     {"base",
                      {{"parity", family_name(base.parity)},
                       {"ambient", detail::interval_json(base.ambient)},
                       {"partition", base.term_partition.parts()},
                       {"term", detail::interval_json(base.term)},
                       {"combined", detail::interval_json(base.combined)}}},
                     {"step", std::move(step)}};
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.a = j.at("a").get<long>();
    c.b = j.at("b").get<long>();
    const Json& root = j.at("root");
    const auto kind = root.at("kind").get<std::string>();
    if (kind == "direct") {
        c.root = DirectCheck{};
        return c;
    }
    if (kind != "cover") throw std::invalid_argument("unknown certificate node kind \"" + kind + "\"");
    InductiveCover cover;
    const Json& base = root.at("base");
    cover.base.parity = family_from_name(base.at("parity").get<std::string>());
    cover.base.ambient = detail::interval_from(base.at("ambient"));
    cover.base.term_partition = Partition(base.at("partition").get<std::vector<int>>());
    cover.base.term = detail::interval_from(base.at("term"));
    cover.base.combined = detail::interval_from(base.at("combined"));

    const Json& st = root.at("step");
    auto& step = cover.step;
    step.family = family_from_name(st.at("family").get<std::string>());
    step.term_partition = Partition(st.at("partition").get<std::vector<int>>());
    step.shift = st.at("shift").get<long>();
    const Json& cp = st.at("child_params");
    step.child_a = cp.at(0).get<long>();
    step.child_b = cp.at(1).get<long>();
    if (!st.at("linear_factor").is_null()) step.linear_factor = st.at("linear_factor").get<long>();
    if (const Json& l2 = st.at("lemma2"); !l2.is_null())
        step.lemma2 = Lemma2Obligation{l2.at("c").get<long>(), l2.at("d").get<long>(), l2.at("t").get<long>()};
    step.claimed = detail::interval_from(st.at("claimed"));
    for (const auto& s : st.at("side_conditions"))
        step.side_conditions.push_back({s.at("name").get<std::string>(), s.at("holds").get<bool>()});
    if (!st.at("child").is_null()) step.child = std::make_shared<const Certificate>(certificate_from_json(st.at("child")));
    c.root = std::move(cover);
    return c;
}

inline Json to_json(const CertifyFailure& f) {
    Json j{{"a", f.a}, {"b", f.b}, {"status", "failure"}, {"node_path", f.node_path}, {"reason", f.reason}};
    if (f.witness) j["witness"] = *f.witness;
    return j;
}

inline Json to_json(const VerificationResult& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back(Json{{"node_path", f.node_path}, {"condition", f.condition}});
    return Json{{"verified", r.verified}, {"failures", std::move(fails)}};
}

inline Json to_json(const GrowthReport& g) {
    Json fams = Json::array();
    for (const auto& f : g.families)
        fams.push_back(Json{{"k", f.k},
                            {"c", f.obligation.c},
                            {"d", f.obligation.d},
                            {"t", f.obligation.t},
                            {"lemma2", f.lemma2},
                            {"inner_strict", f.inner_strict}});
    return Json{{"d", g.d},           {"b", g.b},
                {"a0", g.a0},         {"L", g.L},
                {"a", g.a},           {"verified", g.verified},
                {"failures", g.failures}, {"families", std::move(fams)}};
}

}  // namespace gaussbin
