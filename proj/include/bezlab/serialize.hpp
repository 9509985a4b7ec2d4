#pragma once

#include <string>

#include <json.hpp>

#include "bezlab/lab.hpp"
#include "bezlab/neat.hpp"

namespace bezlab {

using json = nlohmann::json;

// Elements are always serialized as literal strings so payloads survive any
// integer-width assumptions on the other side.

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render_element(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", m.ring().to_string()}, {"rows", std::move(rows)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("rows"))
        fail(errc::parse_error, "matrix JSON needs {\"ring\": ..., \"rows\": [[...]]}");
    RingDescriptor ring = parse_ring(j.at("ring").get<std::string>());
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
        fail(errc::parse_error, "matrix JSON needs a non-empty rows array");
    std::size_t ncols = rows.at(0).size();
    if (ncols == 0) fail(errc::parse_error, "matrix JSON rows must be non-empty");
    Matrix m(ring, rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != ncols)
            fail(errc::parse_error, "matrix JSON rows must be rectangular");
        for (std::size_t jx = 0; jx < ncols; ++jx)
            m.at(i, jx) = parse_element(ring, row.at(jx).get<std::string>());
    }
    return m;
}

inline json to_json(const BezoutCertificate& c) {
    return json{{"a", render_element(c.a)},   {"b", render_element(c.b)},
                {"d", render_element(c.d)},   {"p", render_element(c.p)},
                {"q", render_element(c.q)},   {"a0", render_element(c.a0)},
                {"b0", render_element(c.b0)}};
}

inline json to_json(const WitnessReport& r) {
    json j{{"found", r.found},
           {"searched_bound", r.searched_bound},
           {"decisive", r.decisive}};
    if (r.witness) j["witness"] = render_element(*r.witness);
    return j;
}

inline json to_json(const ToeplitzMatrix& t) { return to_json(t.to_matrix()); }

inline json to_json(const ReductionCertificate& c) {
    json left = json::array(), right = json::array();
    for (const auto& m : c.left) left.push_back(to_json(m));
    for (const auto& m : c.right) right.push_back(to_json(m));
    json diag = json::array();
    for (const auto& e : c.result.diagonal()) diag.push_back(render_element(e));
    Matrix lt = c.left_total();
    Matrix rt = c.right_total();
    return json{{"input", to_json(c.input)},
                {"left", std::move(left)},
                {"right", std::move(right)},
                {"result", to_json(c.result)},
                {"diagonal", std::move(diag)},
                {"toeplitz_flags", c.toeplitz_flags},
                {"thm11_cut", c.thm11_cut},
                {"p_total", to_json(lt)},
                {"q_total", to_json(rt)},
                {"p_total_toeplitz", is_toeplitz_shaped(lt)},
                {"q_total_toeplitz", is_toeplitz_shaped(rt)}};
}

inline ReductionCertificate reduction_certificate_from_json(const json& j) {
    ReductionCertificate c{matrix_from_json(j.at("input")),
                           {},
                           {},
                           matrix_from_json(j.at("result")),
                           {},
                           j.value("thm11_cut", 0L)};
    for (const auto& m : j.at("left")) c.left.push_back(matrix_from_json(m));
    for (const auto& m : j.at("right")) c.right.push_back(matrix_from_json(m));
    c.toeplitz_flags = j.at("toeplitz_flags").get<std::vector<bool>>();
    return c;
}

inline json to_json(const NeatWitness& w) {
    return json{{"a", render_element(w.a)}, {"b", render_element(w.b)},
                {"c", render_element(w.c)}, {"r", render_element(w.r)},
                {"s", render_element(w.s)}};
}

inline json to_json(const CleanDecomposition& d) {
    return json{{"quotient", d.quotient.to_string()},
                {"c", render_element(d.c)},
                {"proof_idempotent", render_element(d.proof_idempotent)},
                {"x", render_element(d.x)},
                {"idempotent", render_element(d.idempotent)},
                {"unit", render_element(d.unit)}};
}

inline json to_json(const Prop5Forward& f) {
    json j{{"lambda", render_element(f.lambda)},
           {"u", render_element(f.u)},
           {"v", render_element(f.v)},
           {"remark_uv_coprime", f.remark_holds}};
    if (!f.remark_holds) j["remark_note"] = f.remark_note;
    return j;
}

inline json to_json(const PQWitness& w) {
    return json{{"p", render_element(w.p)}, {"q", render_element(w.q)}};
}

inline json to_json(const lab::RingClassification& c) {
    return json{{"ring", c.ring.to_string()},
                {"sr1", c.sr1},
                {"ssr1", c.ssr1},
                {"toeplitz_ring", c.toeplitz_ring},
                {"neat_range_1", c.neat_range_1},
                {"counterexamples", c.counterexamples}};
}

inline json to_json(const lab::TheoremReport& r) {
    return json{{"ring", r.ring.to_string()},
                {"theorem", r.theorem},
                {"instances_checked", r.instances_checked},
                {"failures", r.failures}};
}

} // namespace bezlab
