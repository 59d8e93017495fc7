// Command-line front door: every subcommand reads inline JSON or files,
// prints JSON on stdout (or aligned text with --text), and exits 0 on
// success, 1 on domain errors (with a machine-readable error object), 2 on
// usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hamel/basis.hpp"
#include "hamel/json_io.hpp"

namespace {

using hamel::Json;

struct Output {
    bool text = false;
    std::string path; // empty: stdout

    void emit(const Json& j, const std::string& text_form) const {
        std::string body = text ? text_form : j.dump();
        if (!body.empty() && body.back() != '\n') body += '\n';
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw hamel::Error("cannot open output file: " + path);
            out << body;
        }
    }
};

// A payload argument is inline JSON when it looks like JSON, otherwise a
// file path.
Json load_json(const std::string& arg) {
    std::string body = arg;
    if (!(arg.size() && (arg[0] == '{' || arg[0] == '['))) {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw hamel::Error("cannot open input file: " + arg);
        std::stringstream buf;
        buf << in.rdbuf();
        body = buf.str();
    }
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw hamel::SyntaxError(e.byte, std::string("malformed JSON: ") + e.what());
    }
}

std::string functional_text(const hamel::Functional& f) {
    std::ostringstream os;
    os << "dims " << f.dims();
    if (f.unbounded()) os << ", horizon unbounded";
    else os << ", horizon " << f.horizon();
    os << ", field " << f.field().name() << "\n";
    for (const auto& beta : hamel::monomials_up_to(f.dims(), f.unbounded() ? 0 : f.horizon()))
        os << "  " << hamel::multi_str(beta) << "  " << f.moment(beta).str() << "\n";
    return os.str();
}

std::string vectors_text(const std::vector<hamel::FinSuppVec>& vs) {
    std::ostringstream os;
    for (const auto& v : vs) os << v.str() << "\n";
    return os.str();
}

std::vector<hamel::FinSuppVec> vectors_from_json(const Json& j) {
    std::vector<hamel::FinSuppVec> out;
    for (const auto& e : j) out.push_back(hamel::finsupp_from_json(e));
    return out;
}

Json vectors_to_json(const std::vector<hamel::FinSuppVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(hamel::to_json(v));
    return a;
}

std::optional<hamel::FieldTag> parse_field_flag(const std::string& f) {
    if (f.empty()) return std::nullopt;
    return hamel::FieldTag::parse(f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-support linear algebra, dual-space solvers, and "
                 "differential-operator transposes"};
    app.require_subcommand(1);
    app.fallthrough(); // --text/--output may follow the subcommand

    Output out;
    app.add_flag("--text", out.text, "aligned text output instead of JSON");
    app.add_option("--output", out.path, "write output to a file");

    std::string expr, poly_expr, field_flag;
    std::uint32_t dims = 0;
    std::uint32_t order = 0;
    std::string operator_arg, rhs_arg, functional_arg, dist_arg, piecewise_arg, family_arg;
    std::string vectors_arg, free_arg, ambient_arg, u_arg, v_arg;
    std::vector<std::string> card_args;
    std::string dim_flag, field_card_flag;

    auto add_expr_flags = [&](CLI::App* cmd, bool needs_order) {
        cmd->add_option("expr", expr, "operator expression")->required();
        cmd->add_option("--dims", dims, "number of variables (default: inferred)");
        cmd->add_option("--field", field_flag, "Q, Qi or GF:p (default: inferred)");
        if (needs_order)
            cmd->add_option("-N,--order", order, "truncation degree")->required();
    };

    auto* c_transpose = app.add_subcommand("transpose", "formal transpose of an operator");
    add_expr_flags(c_transpose, false);

    auto* c_apply = app.add_subcommand("apply", "apply an operator to a polynomial");
    add_expr_flags(c_apply, false);
    c_apply->add_option("--poly", poly_expr, "polynomial expression")->required();

    auto* c_solve = app.add_subcommand("solve-dual", "solve Lambda o O = T on a truncation");
    c_solve->add_option("--operator", operator_arg, "operator JSON (inline or file)")->required();
    c_solve->add_option("--rhs", rhs_arg, "functional JSON (inline or file)")->required();
    c_solve->add_option("-N,--order", order, "truncation degree")->required();

    auto* c_fundsol = app.add_subcommand("fundsol", "fundamental solution on the truncation");
    add_expr_flags(c_fundsol, true);

    auto* c_reg = app.add_subcommand("regularity", "transpose, injectivity probe and classification");
    add_expr_flags(c_reg, true);

    auto* c_conv = app.add_subcommand("convolve", "convolve a functional with a point distribution");
    c_conv->add_option("--functional", functional_arg, "functional JSON")->required();
    c_conv->add_option("--dist", dist_arg, "point distribution JSON")->required();

    auto* c_moments = app.add_subcommand("moments", "moments of a piecewise polynomial");
    c_moments->add_option("--piecewise", piecewise_arg, "piecewise polynomial JSON")->required();
    c_moments->add_option("-N,--order", order, "largest moment degree")->required();

    auto* c_weak = app.add_subcommand("weak-limit", "pointwise limit of a moment family");
    c_weak->add_option("--family", family_arg, "parametric family JSON")->required();
    c_weak->add_option("-N,--order", order, "horizon of the limit")->required();

    auto* c_basis = app.add_subcommand("basis", "freeness, extension, complements, rank");
    c_basis->require_subcommand(1);
    auto* b_free = c_basis->add_subcommand("is-free", "freeness certificate");
    b_free->add_option("--vectors", vectors_arg, "JSON array of vectors")->required();
    auto* b_extend = c_basis->add_subcommand("extend", "Steinitz completion");
    b_extend->add_option("--free", free_arg, "JSON array: the free set")->required();
    b_extend->add_option("--ambient", ambient_arg, "JSON array: ambient spanning set")->required();
    auto* b_comp = c_basis->add_subcommand("complement", "algebraic complement");
    b_comp->add_option("--u", u_arg, "JSON array: U basis")->required();
    b_comp->add_option("--v", v_arg, "JSON array: V basis")->required();
    auto* b_rank = c_basis->add_subcommand("rank", "rank of a family");
    b_rank->add_option("--vectors", vectors_arg, "JSON array of vectors")->required();

    auto* c_card = app.add_subcommand("card", "cardinal arithmetic under GCH");
    c_card->require_subcommand(1);
    auto* k_max = c_card->add_subcommand("max", "maximum of two cardinals");
    k_max->add_option("values", card_args, "two cardinals")->expected(2);
    auto* k_succ = c_card->add_subcommand("succ", "successor");
    k_succ->add_option("values", card_args, "one cardinal")->expected(1);
    auto* k_pow = c_card->add_subcommand("pow", "exponentiation y^x");
    k_pow->add_option("values", card_args, "base and exponent")->expected(2);
    auto* k_space = c_card->add_subcommand("of-space", "card V = max{dim V, card K}");
    k_space->add_option("values", card_args, "dim and field card")->expected(2);
    auto* k_dual = c_card->add_subcommand("dim-dual", "dim V* = max{succ(dim V), card K}");
    k_dual->add_option("--dim", dim_flag, "dim V")->required();
    k_dual->add_option("--field-card", field_card_flag, "card K")->required();
    auto* k_table = c_card->add_subcommand("table", "the worked dimension table");
    (void)k_table;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors
    }

    try {
        auto parse_expr = [&](void) {
            return hamel::parse_diffop(expr, dims ? std::optional<std::uint32_t>(dims) : std::nullopt,
                                       parse_field_flag(field_flag));
        };

        if (c_transpose->parsed()) {
            hamel::DiffOp t = hamel::transpose(parse_expr());
            out.emit(hamel::to_json(t), t.str());
        } else if (c_apply->parsed()) {
            hamel::DiffOp p = parse_expr();
            hamel::DiffOp fp = hamel::parse_diffop(poly_expr, p.dims(), p.field());
            for (const auto& [k, c] : fp.terms())
                if (hamel::total_degree(k.deriv) > 0)
                    throw hamel::Error("--poly must not contain derivatives");
            hamel::Polynomial f(p.dims(), p.field());
            for (const auto& [k, c] : fp.terms()) f.add_term(k.coeff_deg, c);
            hamel::Polynomial r = hamel::apply_poly(p, f);
            out.emit(hamel::to_json(r), r.str());
        } else if (c_solve->parsed()) {
            auto op = hamel::operator_from_json(load_json(operator_arg));
            auto rhs = hamel::functional_from_json(load_json(rhs_arg));
            hamel::Functional lam = hamel::solve_dual(op, rhs, order);
            out.emit(hamel::to_json(lam), functional_text(lam));
        } else if (c_fundsol->parsed()) {
            hamel::Functional f = hamel::fundamental_solution(parse_expr(), order);
            out.emit(hamel::to_json(f), functional_text(f));
        } else if (c_reg->parsed()) {
            hamel::RegularityReport rep = hamel::regularity_report(parse_expr(), order);
            std::ostringstream os;
            os << "transpose:      " << rep.transposed.str() << "\n"
               << "classification: " << hamel::operator_class_name(rep.classification) << "\n";
            if (rep.probe.injective)
                os << "probe:          injective up to degree " << rep.probe.checked_up_to << "\n";
            else
                os << "probe:          kernel witness " << rep.probe.witness.str() << "\n";
            out.emit(hamel::to_json(rep), os.str());
        } else if (c_conv->parsed()) {
            auto s = hamel::functional_from_json(load_json(functional_arg));
            auto d = hamel::point_distribution_from_json(load_json(dist_arg));
            hamel::Functional r = hamel::convolve(s, d);
            out.emit(hamel::to_json(r), functional_text(r));
        } else if (c_moments->parsed()) {
            auto f = hamel::piecewise_from_json(load_json(piecewise_arg));
            hamel::Functional r = hamel::schwartz_moments(f, order);
            out.emit(hamel::to_json(r), functional_text(r));
        } else if (c_weak->parsed()) {
            auto fam = hamel::family_from_json(load_json(family_arg));
            auto res = hamel::weak_limit(fam, order);
            if (!res.converged()) {
                Json div = Json::array();
                for (const auto& b : res.divergent) {
                    Json bb = Json::array();
                    for (auto e : b) bb.push_back(e);
                    div.push_back(bb);
                }
                Json err;
                err["error"] = Json{{"kind", "divergent"}, {"degrees", div}};
                std::cout << err.dump() << "\n";
                return 1;
            }
            out.emit(hamel::to_json(*res.limit), functional_text(*res.limit));
        } else if (b_free->parsed()) {
            auto vs = vectors_from_json(load_json(vectors_arg));
            auto cert = hamel::is_free(vs);
            Json j;
            j["verdict"] = cert.free() ? "free" : "dependent";
            if (!cert.free()) {
                Json w = Json::array();
                for (const auto& c : cert.witness) w.push_back(c.str());
                j["witness"] = w;
            }
            out.emit(j, std::string(cert.free() ? "free" : "dependent") + "\n");
        } else if (b_extend->parsed()) {
            auto e = vectors_from_json(load_json(free_arg));
            auto amb = vectors_from_json(load_json(ambient_arg));
            auto b = hamel::extend_to_basis(e, amb);
            out.emit(vectors_to_json(b), vectors_text(b));
        } else if (b_comp->parsed()) {
            auto u = vectors_from_json(load_json(u_arg));
            auto v = vectors_from_json(load_json(v_arg));
            auto w = hamel::complement(u, v);
            out.emit(vectors_to_json(w), vectors_text(w));
        } else if (b_rank->parsed()) {
            auto vs = vectors_from_json(load_json(vectors_arg));
            Json j;
            j["rank"] = hamel::rank(vs);
            out.emit(j, std::to_string(hamel::rank(vs)) + "\n");
        } else if (c_card->parsed()) {
            using hamel::Cardinal;
            if (k_max->parsed()) {
                Cardinal r = hamel::card_max(Cardinal::parse(card_args[0]),
                                             Cardinal::parse(card_args[1]));
                out.emit(Json(r.str()), r.str());
            } else if (k_succ->parsed()) {
                Cardinal r = hamel::card_succ(Cardinal::parse(card_args[0]));
                out.emit(Json(r.str()), r.str());
            } else if (k_pow->parsed()) {
                Cardinal r = hamel::card_pow(Cardinal::parse(card_args[0]),
                                             Cardinal::parse(card_args[1]));
                out.emit(Json(r.str()), r.str());
            } else if (k_space->parsed()) {
                Cardinal r = hamel::card_of_space(Cardinal::parse(card_args[0]),
                                                  Cardinal::parse(card_args[1]));
                out.emit(Json(r.str()), r.str());
            } else if (k_dual->parsed()) {
                Cardinal r = hamel::dim_of_dual(Cardinal::parse(dim_flag),
                                                Cardinal::parse(field_card_flag));
                out.emit(Json(r.str()), r.str());
            } else {
                auto table = hamel::example_table();
                Json rows = Json::array();
                std::ostringstream os;
                for (const auto& row : table) {
                    rows.push_back(hamel::to_json(row));
                    os << row.name << ": dim " << row.dim.str() << ", card " << row.card.str()
                       << ", dim* " << row.dim_dual.str() << ", card* " << row.card_dual.str()
                       << ", dim** " << row.dim_double_dual.str() << ", card** "
                       << row.card_double_dual.str() << "\n";
                }
                out.emit(rows, os.str());
            }
        }
        return 0;
    } catch (const hamel::Error& e) {
        std::cout << hamel::error_to_json(e).dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        hamel::Error wrapped(std::string("bad input: ") + e.what());
        std::cout << hamel::error_to_json(wrapped).dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
