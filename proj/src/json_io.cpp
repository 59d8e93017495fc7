#include "hamel/json_io.hpp"

namespace hamel {

namespace {

MultiIndex multi_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected a multi-index array");
    MultiIndex m;
    for (const auto& e : j) m.push_back(e.get<std::uint32_t>());
    return m;
}

Json multi_to_json(const MultiIndex& m) {
    Json a = Json::array();
    for (auto e : m) a.push_back(e);
    return a;
}

mpq_class mpq_from_string(const std::string& s) {
    Scalar q = Scalar::parse(FieldTag::Q(), s);
    return q.rat();
}

} // namespace

Json to_json(const Index& i) {
    if (i.is_atom()) return Json(i.atom_name());
    return multi_to_json(i.tuple_value());
}

Index index_from_json(const Json& j) {
    if (j.is_string()) return Index::atom(j.get<std::string>());
    return Index::tuple(multi_from_json(j));
}

Json to_json(const FinSuppVec& v) {
    Json j;
    j["field"] = v.field().name();
    Json entries = Json::array();
    for (const auto& [k, c] : v.entries()) entries.push_back(Json::array({to_json(k), c.str()}));
    j["entries"] = entries;
    return j;
}

FinSuppVec finsupp_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    FinSuppVec v(field);
    for (const auto& e : j.at("entries"))
        v.set(index_from_json(e.at(0)), Scalar::parse(field, e.at(1).get<std::string>()));
    return v;
}

Json to_json(const Functional& f) {
    Json j;
    j["dims"] = f.dims();
    if (f.unbounded()) j["horizon"] = nullptr;
    else j["horizon"] = f.horizon();
    j["field"] = f.field().name();
    Json moments = Json::array();
    for (const auto& [m, c] : f.table())
        moments.push_back(Json::array({multi_to_json(m), c.str()}));
    j["moments"] = moments;
    if (!f.provenance().empty()) j["provenance"] = f.provenance();
    return j;
}

Functional functional_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    std::uint32_t horizon =
        j.at("horizon").is_null() ? kUnboundedHorizon : j.at("horizon").get<std::uint32_t>();
    Functional f(j.at("dims").get<std::uint32_t>(), horizon, field);
    for (const auto& e : j.at("moments"))
        f.set(multi_from_json(e.at(0)), Scalar::parse(field, e.at(1).get<std::string>()));
    if (j.contains("provenance")) f.rename(j.at("provenance").get<std::string>());
    return f;
}

Json to_json(const ColumnFiniteOperator& op) {
    if (op.generator_backed())
        throw Error("generator-backed operators have no finite column table to serialize");
    Json j;
    j["dims"] = op.dims();
    j["shift"] = op.degree_shift();
    j["field"] = op.field().name();
    j["default"] = op.fill() == ColumnFiniteOperator::Fill::Identity ? "identity" : "zero";
    Json cols = Json::array();
    for (const auto& [beta, col] : op.explicit_columns())
        cols.push_back(Json::array({multi_to_json(beta), to_json(col)}));
    j["columns"] = cols;
    return j;
}

ColumnFiniteOperator operator_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    std::map<MultiIndex, FinSuppVec> columns;
    for (const auto& e : j.at("columns"))
        columns.emplace(multi_from_json(e.at(0)), finsupp_from_json(e.at(1)));
    std::string fill = j.value("default", "identity");
    if (fill != "identity" && fill != "zero") throw Error("operator default must be identity or zero");
    return ColumnFiniteOperator(
        j.at("dims").get<std::uint32_t>(), j.at("shift").get<int>(), std::move(columns),
        fill == "identity" ? ColumnFiniteOperator::Fill::Identity : ColumnFiniteOperator::Fill::Zero,
        field);
}

Json to_json(const DiffOp& p) {
    Json j;
    j["dims"] = p.dims();
    j["field"] = p.field().name();
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(Json::array({multi_to_json(k.coeff_deg), multi_to_json(k.deriv), c.str()}));
    j["terms"] = terms;
    return j;
}

DiffOp diffop_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    DiffOp p(j.at("dims").get<std::uint32_t>(), field);
    for (const auto& e : j.at("terms"))
        p.add_term(multi_from_json(e.at(0)), multi_from_json(e.at(1)),
                   Scalar::parse(field, e.at(2).get<std::string>()));
    return p;
}

Json to_json(const Polynomial& p) {
    Json j;
    j["dims"] = p.dims();
    j["field"] = p.field().name();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json::array({multi_to_json(m), c.str()}));
    j["terms"] = terms;
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    Polynomial p(j.at("dims").get<std::uint32_t>(), field);
    for (const auto& e : j.at("terms"))
        p.add_term(multi_from_json(e.at(0)), Scalar::parse(field, e.at(1).get<std::string>()));
    return p;
}

Json to_json(const PointDistribution& d) {
    Json j;
    j["dims"] = d.dims();
    j["field"] = d.field().name();
    Json atoms = Json::array();
    for (const auto& e : d.entries()) {
        Json point = Json::array();
        for (const auto& q : e.atom.point) point.push_back(mpq_class(q).get_str());
        atoms.push_back(Json::array({point, multi_to_json(e.atom.beta), e.coeff.str()}));
    }
    j["atoms"] = atoms;
    return j;
}

PointDistribution point_distribution_from_json(const Json& j) {
    FieldTag field = FieldTag::parse(j.at("field").get<std::string>());
    PointDistribution d(j.at("dims").get<std::uint32_t>(), field);
    for (const auto& e : j.at("atoms")) {
        std::vector<mpq_class> point;
        for (const auto& q : e.at(0)) point.push_back(mpq_from_string(q.get<std::string>()));
        d.add(std::move(point), multi_from_json(e.at(1)),
              Scalar::parse(field, e.at(2).get<std::string>()));
    }
    return d;
}

Json to_json(const PiecewisePolynomial& f) {
    Json pieces = Json::array();
    for (const auto& p : f.pieces) {
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs) coeffs.push_back(mpq_class(c).get_str());
        pieces.push_back(Json::array({p.lo.get_str(), p.hi.get_str(), coeffs}));
    }
    Json j;
    j["pieces"] = pieces;
    return j;
}

PiecewisePolynomial piecewise_from_json(const Json& j) {
    PiecewisePolynomial f;
    for (const auto& e : j.at("pieces")) {
        PiecewisePolynomial::Piece piece;
        piece.lo = mpq_from_string(e.at(0).get<std::string>());
        piece.hi = mpq_from_string(e.at(1).get<std::string>());
        for (const auto& c : e.at(2)) piece.coeffs.push_back(mpq_from_string(c.get<std::string>()));
        f.pieces.push_back(std::move(piece));
    }
    return f;
}

Json to_json(const ParametricMomentFamily& fam) {
    Json j;
    j["dims"] = fam.dims();
    Json entries = Json::array();
    for (const auto& [beta, f] : fam.entries()) {
        Json num = Json::array(), den = Json::array();
        for (const auto& c : f.num.c) num.push_back(mpz_class(c).get_str());
        for (const auto& c : f.den.c) den.push_back(mpz_class(c).get_str());
        Json rf;
        rf["num"] = num;
        rf["den"] = den;
        entries.push_back(Json::array({multi_to_json(beta), rf}));
    }
    j["entries"] = entries;
    return j;
}

ParametricMomentFamily family_from_json(const Json& j) {
    ParametricMomentFamily fam(j.at("dims").get<std::uint32_t>());
    for (const auto& e : j.at("entries")) {
        RationalFunctionN f;
        for (const auto& c : e.at(1).at("num")) f.num.c.emplace_back(c.get<std::string>());
        for (const auto& c : e.at(1).at("den")) f.den.c.emplace_back(c.get<std::string>());
        fam.set(multi_from_json(e.at(0)), std::move(f));
    }
    return fam;
}

Json to_json(const RegularityReport& rep) {
    Json j;
    j["transpose"] = to_json(rep.transposed);
    Json probe;
    probe["checked_up_to"] = rep.probe.checked_up_to;
    if (rep.probe.injective) {
        probe["verdict"] = "injective_up_to";
    } else {
        probe["verdict"] = "kernel_witness";
        probe["witness"] = to_json(rep.probe.witness);
    }
    j["probe"] = probe;
    j["classification"] = operator_class_name(rep.classification);
    return j;
}

Json to_json(const SpaceCardinalities& row) {
    Json j;
    j["space"] = row.name;
    j["field_card"] = row.field_card.str();
    j["dim"] = row.dim.str();
    j["card"] = row.card.str();
    j["dim_dual"] = row.dim_dual.str();
    j["card_dual"] = row.card_dual.str();
    j["dim_double_dual"] = row.dim_double_dual.str();
    j["card_double_dual"] = row.card_double_dual.str();
    return j;
}

Json error_to_json(const Error& e) {
    Json inner;
    inner["kind"] = e.kind();
    inner["message"] = e.what();
    Json j;
    j["error"] = inner;
    return j;
}

} // namespace hamel
