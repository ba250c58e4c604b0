#include "engine.hpp"

#include <cinttypes>
#include <cmath>
#include <functional>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "screw/control.hpp"
#include "screw/involution.hpp"
#include "screw/systems.hpp"

namespace screw::engine {
namespace {

using nlohmann::json; // std::map-backed: keys serialize sorted

constexpr const char* kFormConvention =
    "Q_h = [[-2h*I3, I3], [I3, 0]]; pairing <s1,s2>_h = -2h w1.w2 + w1.v2 + v1.w2";

std::string fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, hash);
    return buf;
}

std::string double_repr(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class S>
S parse_scalar(const std::string& text);

template <>
Rat parse_scalar<Rat>(const std::string& text) {
    return rat_from_string(text);
}

template <>
double parse_scalar<double>(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) fail(Errc::InvalidInput, "malformed number: '" + text + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::InvalidInput, "malformed number: '" + text + "'");
    }
}

template <class S>
json scalar_json(const S& v);

template <>
json scalar_json<Rat>(const Rat& v) {
    return ScalarTraits<Rat>::to_string(v);
}

template <>
json scalar_json<double>(const double& v) {
    return v;
}

template <class S>
json matrix_json(const Matrix<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
json column_json(const Matrix<S>& m, std::size_t j = 0) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalar_json(m(i, j)));
    return out;
}

// "inf" is accepted wherever the pitch at infinity is meaningful.
template <class S>
Pitch<S> parse_pitch(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return Pitch<S>::infinity();
    return Pitch<S>::finite(parse_scalar<S>(text));
}

template <class S>
Vec3<S> parse_vec3(const std::vector<std::string>& v) {
    if (v.size() != 3) fail(Errc::InvalidInput, "expected three components");
    return {parse_scalar<S>(v[0]), parse_scalar<S>(v[1]), parse_scalar<S>(v[2])};
}

template <class S>
const Matrix<S>& doc_matrix(const Document& doc);
template <>
const Matrix<Rat>& doc_matrix<Rat>(const Document& doc) {
    return doc.exact;
}
template <>
const Matrix<double>& doc_matrix<double>(const Document& doc) {
    return doc.approx;
}

json envelope(const std::string& command, const Document& doc, json results, json warnings) {
    json rep;
    rep["command"] = command;
    rep["form_convention"] = kFormConvention;
    rep["input_digest"] = doc.digest;
    rep["mode"] = doc.rational ? "rational" : "float";
    rep["results"] = std::move(results);
    rep["warnings"] = std::move(warnings);
    return rep;
}

int exit_code_of(Errc c) {
    switch (c) {
        case Errc::NoPseudoinverse:
        case Errc::Singular: return 2;
        default: return 3;
    }
}

CommandResult guard(const std::string& command, const Document& doc,
                    const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        json results;
        results["error"] = e.what();
        return {exit_code_of(e.code()),
                envelope(command, doc, std::move(results), json::array()).dump(2)};
    }
}

template <class S>
json detpoly_report(const GramPencil<S>& pencil, json& warnings) {
    json out;
    out["detpoly"] = pencil.detpoly.display();
    if (pencil.detpoly.identically_zero()) {
        out["detpoly_identically_zero"] = true;
        return out;
    }
    out["detpoly_identically_zero"] = false;
    if (pencil.detpoly.degree() > 0) {
        const RootList<S> roots = real_roots(pencil.detpoly);
        json list = json::array();
        for (const S& r : roots.roots) list.push_back(scalar_json(r));
        out["principal_pitches"] = std::move(list);
        out["principal_pitches_exact"] = roots.all_exact;
        if (!roots.all_exact)
            warnings.push_back("some principal pitches are floating-point approximations");
    } else {
        out["principal_pitches"] = json::array();
        out["principal_pitches_exact"] = true;
    }
    return out;
}

template <class S>
CommandResult pinv_impl(const Document& doc, const std::string& h_text) {
    const Pitch<S> h = parse_pitch<S>(h_text);
    if (h.is_infinite())
        fail(Errc::InvalidInput,
             "no pseudoinverse at h = inf: Q_inf is degenerate (rank 3), so J'Q_inf J cannot "
             "match the rank of J");
    const ScrewJacobian<S> j(doc_matrix<S>(doc));
    const GramPencil<S> pencil = gram_pencil(j);

    json warnings = json::array();
    json results = detpoly_report(pencil, warnings);
    results["h"] = scalar_json(h.value());

    if (j.rank() < 6 && !exists_h_pinv(j, h)) {
        results["exists"] = false;
        return {2, envelope("pinv", doc, std::move(results), std::move(warnings)).dump(2)};
    }
    const PseudoinverseResult<S> p = h_pseudoinverse(j, h);
    const auto axioms = verify_axioms(j, p);
    results["exists"] = true;
    results["method"] =
        p.method == PinvMethod::RankSixMoorePenrose ? "moore-penrose-rank-6" : "gram";
    results["pseudoinverse"] = matrix_json(p.matrix);
    results["axioms"] = {{"hP1", axioms[0]}, {"hP2", axioms[1]}, {"hP3", axioms[2]},
                         {"hP4", axioms[3]}};
    return {0, envelope("pinv", doc, std::move(results), std::move(warnings)).dump(2)};
}

template <class S>
json class_json(const GHClass<S>& cls) {
    json out;
    out["class"] = cls.label();
    out["dimension"] = cls.dimension;
    out["dim_at_infinity"] = cls.dim_inf;
    json moduli = json::array();
    for (const S& m : cls.moduli) moduli.push_back(scalar_json(m));
    out["moduli"] = std::move(moduli);
    if (cls.reciprocal) out["reciprocal"] = class_json(*cls.reciprocal);
    return out;
}

template <class S>
CommandResult classify_impl(const Document& doc, const std::optional<std::string>& rec_h) {
    const ScrewSystem<S> sys{ScrewJacobian<S>(doc_matrix<S>(doc))};
    const GHClass<S> cls = classify_any(sys);
    json warnings = json::array();
    if (cls.degenerate_warning)
        warnings.push_back("degenerate pitch configuration outside the named classes");
    json results = class_json(cls);
    results["no_pinv_for_all_h"] = no_pinv_for_all_h(sys);
    if (rec_h) {
        const Pitch<S> h = parse_pitch<S>(*rec_h);
        const ReciprocalBasis<S> rec = reciprocal_system(sys, h);
        results["reciprocal_h"] = h.is_infinite() ? json("inf") : scalar_json(h.value());
        results["reciprocal_basis"] = matrix_json(rec.basis);
    }
    return {0, envelope("classify", doc, std::move(results), std::move(warnings)).dump(2)};
}

template <class S>
CommandResult involution_impl(const Document& doc) {
    const Matrix<S>& m = doc_matrix<S>(doc);
    std::vector<Twist<S>> lines;
    for (std::size_t j = 0; j < m.cols(); ++j) lines.push_back(Twist<S>::from_column(m.column(j)));
    const LineSet<S> set(std::move(lines));
    const InvolutionReport<S> rep = is_in_involution(set);

    json results;
    results["in_involution"] = rep.in_involution;
    if (rep.certificate) {
        results["certificate"] = {
            {"transversal", column_json(rep.certificate->transversal.to_column())},
            {"wrench", column_json(rep.certificate->wrench.to_column())},
        };
        results["geometric_case"] = classify_involution_geometry(set);
    } else {
        results["geometric_case"] = "NotApplicable";
    }
    if (set.size() == 4)
        results["transversal_count"] = transversal_count_name(transversal_count(set));
    return {0, envelope("involution", doc, results, json::array()).dump(2)};
}

template <class S>
CommandResult reciprocal_impl(const Document& doc, const std::string& h_text) {
    const ScrewSystem<S> sys{ScrewJacobian<S>(doc_matrix<S>(doc))};
    const Pitch<S> h = parse_pitch<S>(h_text);
    const ReciprocalBasis<S> rec = reciprocal_system(sys, h);
    json results;
    results["h"] = h.is_infinite() ? json("inf") : scalar_json(h.value());
    results["basis"] = matrix_json(rec.basis);
    results["dimension"] = rec.basis.cols();
    return {0, envelope("reciprocal", doc, results, json::array()).dump(2)};
}

template <class S>
CommandResult project_impl(const Document& doc, const ProjectOptions& opts) {
    const ScrewJacobian<S> j(doc_matrix<S>(doc));
    const Pitch<S> h = parse_pitch<S>(opts.h);
    if (h.is_infinite())
        fail(Errc::InvalidInput, "projection requires a finite pitch: Q_inf is degenerate");
    json warnings = json::array();

    if (opts.point || opts.direction) {
        if (!opts.point || !opts.direction)
            fail(Errc::InvalidInput, "point and direction must be given together");
        const Vec3<S> x = parse_vec3<S>(*opts.point);
        const Vec3<S> q = parse_vec3<S>(*opts.direction);
        if (j.rank() < 6 && !exists_h_pinv(j, h)) {
            json results = detpoly_report(gram_pencil(j), warnings);
            results["exists"] = false;
            return {2, envelope("project", doc, std::move(results), std::move(warnings)).dump(2)};
        }
        json results;
        results["task"] = "point-direction";
        results["h"] = scalar_json(h.value());
        results["joint_rate_basis"] = matrix_json(point_direction_task(j, x, q, h));
        return {0, envelope("project", doc, std::move(results), std::move(warnings)).dump(2)};
    }

    if (!opts.twist || opts.twist->size() != 6)
        fail(Errc::InvalidInput, "project needs a 6-component twist");
    Matrix<S> s_col(6, 1);
    for (std::size_t i = 0; i < 6; ++i) s_col(i, 0) = parse_scalar<S>((*opts.twist)[i]);
    const Twist<S> s = Twist<S>::from_column(s_col);

    Matrix<S> rates;
    json results;
    if (opts.damp) {
        const S eps = parse_scalar<S>(*opts.damp);
        const Matrix<S> lambda = Matrix<S>::identity(j.cols()).scaled(eps);
        auto [x, projector] = damped_solution(j, s, lambda, h);
        rates = std::move(x);
        results["damped"] = true;
        results["epsilon"] = scalar_json(eps);
        results["projector"] = matrix_json(projector);
    } else {
        if (j.rank() < 6 && !exists_h_pinv(j, h)) {
            results = detpoly_report(gram_pencil(j), warnings);
            results["exists"] = false;
            return {2, envelope("project", doc, std::move(results), std::move(warnings)).dump(2)};
        }
        const PseudoinverseResult<S> p = h_pseudoinverse(j, h);
        rates = p.matrix * s_col;
        results["damped"] = false;
        results["projector"] = matrix_json(j.matrix() * p.matrix);
    }
    const CostEvaluation<S> cost = cost_phi(j, s, rates, h);
    double grad_norm = 0;
    for (std::size_t i = 0; i < cost.gradient.rows(); ++i) {
        const double g = ScalarTraits<S>::to_double(cost.gradient(i, 0));
        grad_norm += g * g;
    }
    results["h"] = scalar_json(h.value());
    results["joint_rates"] = column_json(rates);
    results["projected_twist"] = column_json(Matrix<S>(j.matrix() * rates));
    results["phi"] = scalar_json(cost.value);
    results["gradient"] = column_json(cost.gradient);
    results["gradient_norm"] = std::sqrt(grad_norm);
    return {0, envelope("project", doc, std::move(results), std::move(warnings)).dump(2)};
}

} // namespace

Document parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::InvalidInput, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("jacobian") || !doc["jacobian"].is_array())
        fail(Errc::InvalidInput, "document must be an object with a 'jacobian' array");
    const json& jac = doc["jacobian"];
    if (jac.size() != 6) fail(Errc::InvalidInput, "jacobian must have exactly 6 rows");
    const std::size_t cols = jac[0].is_array() ? jac[0].size() : 0;
    if (cols < 1 || cols > 6) fail(Errc::InvalidInput, "jacobian must have 1..6 columns");

    bool all_rational = true;
    Matrix<Rat> exact(6, cols);
    for (std::size_t i = 0; i < 6; ++i) {
        if (!jac[i].is_array() || jac[i].size() != cols)
            fail(Errc::InvalidInput, "jacobian rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = jac[i][c];
            if (cell.is_string()) {
                exact(i, c) = rat_from_string(cell.get<std::string>());
            } else if (cell.is_number_integer()) {
                exact(i, c) = Rat(cell.get<std::int64_t>());
            } else if (cell.is_number_float()) {
                // exact binary value of the double; mode defaults to float
                exact(i, c) = ScalarTraits<Rat>::from_double(cell.get<double>());
                all_rational = false;
            } else {
                fail(Errc::InvalidInput, "jacobian entries must be numbers or rational strings");
            }
        }
    }

    Document out;
    if (doc.contains("mode")) {
        const std::string mode = doc["mode"].is_string() ? doc["mode"].get<std::string>() : "";
        if (mode == "rational") out.rational = true;
        else if (mode == "float") out.rational = false;
        else fail(Errc::InvalidInput, "mode must be 'rational' or 'float'");
    } else {
        out.rational = all_rational;
    }
    out.exact = std::move(exact);
    out.approx = Matrix<double>(6, cols);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            out.approx(i, c) = ScalarTraits<Rat>::to_double(out.exact(i, c));

    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || doc["labels"].size() != cols)
            fail(Errc::InvalidInput, "labels must list one name per column");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) fail(Errc::InvalidInput, "labels must be strings");
            out.labels.push_back(l.get<std::string>());
        }
    }

    std::ostringstream canon;
    canon << (out.rational ? "rational" : "float");
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            canon << ';'
                  << (out.rational ? ScalarTraits<Rat>::to_string(out.exact(i, c))
                                   : double_repr(out.approx(i, c)));
    out.digest = fnv1a(canon.str());
    return out;
}

CommandResult cmd_pinv(const Document& doc, const std::string& h) {
    return guard("pinv", doc, [&] {
        return doc.rational ? pinv_impl<Rat>(doc, h) : pinv_impl<double>(doc, h);
    });
}

CommandResult cmd_classify(const Document& doc, const std::optional<std::string>& reciprocal_h) {
    return guard("classify", doc, [&] {
        return doc.rational ? classify_impl<Rat>(doc, reciprocal_h)
                            : classify_impl<double>(doc, reciprocal_h);
    });
}

CommandResult cmd_involution(const Document& doc) {
    return guard("involution", doc, [&] {
        return doc.rational ? involution_impl<Rat>(doc) : involution_impl<double>(doc);
    });
}

CommandResult cmd_reciprocal(const Document& doc, const std::string& h) {
    return guard("reciprocal", doc, [&] {
        return doc.rational ? reciprocal_impl<Rat>(doc, h) : reciprocal_impl<double>(doc, h);
    });
}

CommandResult cmd_project(const Document& doc, const ProjectOptions& opts) {
    return guard("project", doc, [&] {
        return doc.rational ? project_impl<Rat>(doc, opts) : project_impl<double>(doc, opts);
    });
}

} // namespace screw::engine
