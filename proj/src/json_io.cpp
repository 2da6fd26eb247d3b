#include "csp/json_io.hpp"

namespace csp {

using nlohmann::json;

json to_json(const BigInt& v) {
    if (fits_int64(v)) return static_cast<long long>(v);
    return v.str();
}

json to_json(const LaurentPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, to_json(c)}));
    return terms;
}

json to_json(const StandardTableau& t) {
    json rows = json::array();
    for (int r = 1; r <= t.shape().rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= t.shape().part(r); ++c) row.push_back(t.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SignedTableau& t) {
    return json{{"rows", to_json(t.plus)}, {"negatives", t.negatives}};
}

json to_json(const SuperGF& gf) {
    json grades = json::array();
    for (const auto& g : gf.grades()) grades.push_back(to_json(g));
    return json{{"shape", gf.shape().to_string()},
                {"n", gf.shape().size()},
                {"grades", std::move(grades)}};
}

json to_json(const BorderStripTableau& t) {
    json rows = json::array();
    for (int r = 1; r <= t.shape().rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= t.shape().part(r); ++c) row.push_back(t.label_at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}, {"strip_size", t.strip_size()}};
}

namespace {

json eval_or_marker(const std::optional<BigInt>& value) {
    if (!value) return "non-integer";
    return to_json(*value);
}

}  // namespace

json to_json(const CspReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"d", row.d},
                            {"s", row.s},
                            {"fix", row.fix},
                            {"eval", eval_or_marker(row.evaluation)},
                            {"match", row.match}});
    return json{{"theorem", report.theorem},
                {"shape", report.shape},
                {"n", report.n},
                {"k", report.k ? json(*report.k) : json(nullptr)},
                {"m", report.m ? json(*report.m) : json(nullptr)},
                {"rows", std::move(rows)},
                {"verdict", report.verdict}};
}

json to_json(const MnVerification& rec) {
    return json{{"theorem", "mn-rule"},
                {"shape", rec.shape.to_string()},
                {"n", rec.n},
                {"d", rec.d},
                {"eval", eval_or_marker(rec.eval_integer)},
                {"sign", rec.sign},
                {"bst_count", rec.bst_count},
                {"match", rec.match}};
}

json to_json(const ContentLemmaVerification& rec) {
    return json{{"theorem", "content-lemma"},
                {"shape", rec.shape.to_string()},
                {"n", rec.n},
                {"s", rec.s},
                {"applicable", rec.applicable},
                {"uniform", rec.uniform},
                {"strips_distinct", rec.strips_distinct},
                {"match", rec.match}};
}

json to_json(const OrbitProfile& profile) {
    json counts = json::array();
    for (const auto& [size, count] : profile.orbit_counts)
        counts.push_back(json::array({size, to_json(count)}));
    return counts;
}

json to_json(const TheoremBVerification& rec) {
    json rows = json::array();
    for (const auto& row : rec.condition_rows)
        rows.push_back(json{{"d", row.d}, {"eval_power", eval_or_marker(row.value)}});
    return json{{"theorem", "theorem-b"},
                {"shape", rec.shape.to_string()},
                {"n", rec.n},
                {"m", rec.m},
                {"k", rec.k},
                {"condition_rows", std::move(rows)},
                {"condition_holds", rec.condition_holds},
                {"realizable", rec.realizable},
                {"profile", rec.profile ? to_json(*rec.profile) : json(nullptr)},
                {"certificates_match", rec.certificates_match},
                {"theorem_confirmed", rec.theorem_confirmed}};
}

json to_json(const TwistSignVerification& rec) {
    return json{{"theorem", "twist-sign"},
                {"n", rec.n},
                {"d", rec.d},
                {"s", rec.s},
                {"k", rec.k},
                {"j", rec.j},
                {"expected_sign", rec.expected_sign},
                {"zeta_match", rec.zeta_match},
                {"coefficient", to_json(rec.coefficient)},
                {"expected_coefficient", to_json(rec.expected_coefficient)},
                {"coefficient_match", rec.coefficient_match},
                {"match", rec.ok}};
}

json to_json(const ProductEvalVerification& rec) {
    return json{{"theorem", "product-eval"},
                {"shape", rec.shape.to_string()},
                {"n", rec.n},
                {"d", rec.d},
                {"s", rec.s},
                {"all_integer", rec.all_integer},
                {"match", rec.match}};
}

}  // namespace csp
