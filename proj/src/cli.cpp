#include "superinv/cli.hpp"

#include "superinv/chars.hpp"
#include "superinv/errors.hpp"
#include "superinv/gens.hpp"
#include "superinv/membership.hpp"
#include "superinv/oracle.hpp"
#include "superinv/superalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace superinv {

namespace {

using nlohmann::json;

struct Options {
    std::string algebra;
    std::string format = "text";
    std::string poly;
    int max_degree = 4;
    int degree = 2;
    int k = 1;
    std::vector<long> n;
    bool oracle = false;
    int oracle_max = 3;
};

bool as_json(const Options& o) { return o.format == "json"; }

json vector_json(const QVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string vector_text(const QVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + "]";
}

int cmd_roots(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    const VarTable& vt = *d.vt;
    auto forms = [&](const std::vector<LinearForm>& v) {
        json a = json::array();
        for (const auto& l : v) a.push_back(format_linear(l, vt));
        return a;
    };
    if (as_json(o)) {
        json j;
        j["algebra"] = d.spec.name();
        j["coordinates"] = vt.names();
        j["even_roots"] = forms(d.even_roots);
        j["odd_roots"] = forms(d.odd_roots);
        j["weyl_order"] = d.weyl_order;
        json t = json::array();
        for (const auto& r : d.tilde) {
            json dirs = json::array();
            for (const auto& h : r.dirs) dirs.push_back(vector_json(h));
            t.push_back({{"root", format_linear(r.root, vt)}, {"nu", r.nu}, {"dirs", dirs}});
        }
        j["tilde"] = t;
        out << j.dump() << '\n';
        return 0;
    }
    out << "algebra: " << d.spec.name() << '\n' << "coordinates:";
    for (const auto& n : vt.names()) out << ' ' << n;
    out << "\nWeyl group order: " << d.weyl_order << '\n';
    out << "even roots (" << d.even_roots.size() << "):";
    for (const auto& l : d.even_roots) out << "  " << format_linear(l, vt);
    out << "\nodd roots with multiplicity (" << d.odd_roots.size() << "):";
    for (const auto& l : d.odd_roots) out << "  " << format_linear(l, vt);
    out << "\nreduced positive odd roots:\n";
    for (const auto& r : d.tilde) {
        out << "  " << format_linear(r.root, vt) << "  nu=" << r.nu << "  dirs:";
        for (const auto& h : r.dirs) out << ' ' << vector_text(h);
        out << '\n';
    }
    return 0;
}

int cmd_dims(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    std::vector<std::size_t> dims;
    for (int deg = 0; deg <= o.max_degree; ++deg) dims.push_back(graded_basis(d, deg).dim());
    if (as_json(o)) {
        out << json{{"dims", dims}}.dump() << '\n';
        return 0;
    }
    for (std::size_t deg = 0; deg < dims.size(); ++deg) out << "degree " << deg << ": " << dims[deg] << '\n';
    return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    const Poly f = d.parse(o.poly);
    const MembershipVerdict v = in_I(f, d);
    if (as_json(o)) {
        json fails = json::array();
        for (const auto& fl : v.failures) {
            json r = fl.root.empty() ? json(nullptr) : json(format_linear(fl.root, *d.vt));
            fails.push_back({{"root", r}, {"condition", condition_tag(fl.condition)},
                             {"remainder", format_poly(fl.remainder)}});
        }
        out << json{{"ok", v.ok}, {"failures", fails}}.dump() << '\n';
    } else {
        out << "polynomial: " << format_poly(f) << '\n' << "member: " << (v.ok ? "yes" : "no") << '\n';
        for (const auto& fl : v.failures) {
            out << "  " << condition_tag(fl.condition);
            if (!fl.root.empty()) out << " for root " << format_linear(fl.root, *d.vt);
            out << ": remainder " << format_poly(fl.remainder) << '\n';
        }
    }
    return v.ok ? 0 : 1;
}

int cmd_gens(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    const GeneratorSet g = generators(d, o.max_degree);
    if (as_json(o)) {
        json a = json::array();
        for (const auto& [name, p] : g.items)
            a.push_back({{"name", name}, {"degree", p.degree()}, {"poly", format_poly(p)}});
        out << a.dump() << '\n';
        return 0;
    }
    for (const auto& [name, p] : g.items) out << name << " (degree " << p.degree() << "): " << format_poly(p) << '\n';
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    const auto rows = check_main_theorem(d, o.max_degree, o.oracle, o.oracle_max);
    const bool all = std::all_of(rows.begin(), rows.end(), [](const DegreeReport& r) { return r.equal; });
    if (as_json(o)) {
        json a = json::array();
        for (const auto& r : rows) {
            json row{{"degree", r.degree}, {"dim_intersection", r.dim_intersection},
                     {"dim_closed_form", r.dim_closed_form}};
            if (r.dim_oracle) row["dim_oracle"] = *r.dim_oracle;
            row["equal"] = r.equal;
            a.push_back(row);
        }
        out << a.dump() << '\n';
    } else {
        out << "degree  intersection  closed_form  oracle  equal\n";
        for (const auto& r : rows) {
            out << r.degree << "  " << r.dim_intersection << "  " << r.dim_closed_form << "  "
                << (r.dim_oracle ? std::to_string(*r.dim_oracle) : "-") << "  " << (r.equal ? "yes" : "NO") << '\n';
        }
    }
    return all ? 0 : 3;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const OracleVerdict v = oracle_check(AlgebraSpec::parse(o.algebra), o.degree);
    if (as_json(o)) {
        out << json{{"dim_invariants", v.dim_invariants}, {"dim_restricted", v.dim_restricted},
                    {"matches_membership", v.matches_membership}}.dump()
            << '\n';
    } else {
        out << "invariants: " << v.dim_invariants << "\nrestricted: " << v.dim_restricted
            << "\ninjective: " << (v.injective ? "yes" : "no")
            << "\nmatches membership: " << (v.matches_membership ? "yes" : "no") << '\n';
    }
    return v.matches_membership ? 0 : 3;
}

int cmd_solve(const Options& o, std::ostream& out, bool hyperbolic_sine) {
    const QVector c = hyperbolic_sine ? sinh_solver(o.k, o.n) : cosh_solver(o.k, o.n);
    if (as_json(o)) out << json{{"coefficients", vector_json(c)}}.dump() << '\n';
    else out << "coefficients " << vector_text(c) << '\n';
    return 0;
}

int cmd_pq(const Options& o, std::ostream& out) {
    const RootDatum d = build(o.algebra);
    const Poly f = d.parse(o.poly);
    const Poly P = express_PQ(f, d);
    const Poly Q = odd_root_product(d);
    if (as_json(o)) {
        out << json{{"f", format_poly(f)}, {"Q", format_poly(Q)}, {"P", format_poly(P)}}.dump() << '\n';
    } else {
        out << "f = " << format_poly(f) << "\nQ = " << format_poly(Q) << "\nP = " << format_poly(P) << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant polynomials on Cartan subalgebras of Lie superalgebras", "superinv"};
    app.require_subcommand(1);
    Options o;
    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("algebra", o.algebra, "algebra, e.g. gl(2|1), osp_alpha(4|2,alpha=2), ag2")->required();
    };
    auto with_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* roots = app.add_subcommand("roots", "root data and reduced odd roots");
    with_algebra(roots);
    with_format(roots);

    auto* dims = app.add_subcommand("dims", "graded dimensions of the image algebra");
    with_algebra(dims);
    with_format(dims);
    dims->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 12));

    auto* member = app.add_subcommand("member", "membership test for one polynomial");
    with_algebra(member);
    with_format(member);
    member->add_option("--poly", o.poly, "polynomial in the coordinates")->required();

    auto* gens = app.add_subcommand("gens", "closed-form generators");
    with_algebra(gens);
    with_format(gens);
    gens->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 12));

    auto* check = app.add_subcommand("check-theorem", "intersection vs closed form (vs oracle) by degree");
    with_algebra(check);
    with_format(check);
    check->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 10));
    check->add_flag("--oracle", o.oracle, "also compare with the coadjoint oracle");
    check->add_option("--oracle-max", o.oracle_max)->check(CLI::Range(0, 4));

    auto* oracle = app.add_subcommand("oracle", "coadjoint invariants restricted to the Cartan");
    with_algebra(oracle);
    with_format(oracle);
    oracle->add_option("--degree", o.degree)->required()->check(CLI::Range(0, 6));

    auto* sinh = app.add_subcommand("sinh-solve", "coefficients with sum c_i sinh((n_i+1)x) = x^{2k+1} + ...");
    auto* cosh = app.add_subcommand("cosh-solve", "coefficients with sum c_i cosh(n_i x) = x^{2k} + ...");
    for (auto* sub : {sinh, cosh}) {
        with_format(sub);
        sub->add_option("--k", o.k)->required();
        sub->add_option("--n", o.n, "comma-separated integers")->required()->delimiter(',');
    }

    auto* pq = app.add_subcommand("pq", "P = Q f for a W-invariant f");
    with_algebra(pq);
    with_format(pq);
    pq->add_option("--poly", o.poly)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(o, out);
        if (dims->parsed()) return cmd_dims(o, out);
        if (member->parsed()) return cmd_member(o, out);
        if (gens->parsed()) return cmd_gens(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (sinh->parsed()) return cmd_solve(o, out, true);
        if (cosh->parsed()) return cmd_solve(o, out, false);
        if (pq->parsed()) return cmd_pq(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const EnumerationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace superinv
