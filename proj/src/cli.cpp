#include "curvex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <sstream>

#include "curvex/classical.hpp"
#include "curvex/conjecture.hpp"
#include "curvex/equiv.hpp"
#include "curvex/form_parse.hpp"
#include "curvex/milnor.hpp"

namespace curvex {

namespace {

using nlohmann::json;

struct Options {
    std::vector<std::string> params;
    unsigned digits = 50;
    bool as_json = false;

    std::map<std::string, Rat> bound() const {
        std::map<std::string, Rat> out;
        for (const std::string& p : params) out.insert(parse_param_binding(p));
        return out;
    }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--param", opt.params, "bind a form parameter, name=p/q");
    cmd->add_option("--digits", opt.digits, "working precision in decimal digits (default 50)");
    cmd->add_flag("--json", opt.as_json, "emit JSON on stdout");
}

std::string poly_str(const Poly& p) {
    return p.is_constant() ? rat_str(p.constant_value()) : p.str();
}

std::string inv_str(const InvariantValue& v) {
    if (!v.defined) return "undefined";
    if (v.value.is_constant()) return rat_str(v.value.rational_value());
    return v.value.str();
}

json form_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(poly_str(f.coeff(i)));
    return json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

json value_json(const InvariantValue& v) {
    json out{{"defined", v.defined}};
    if (v.defined) out["value"] = inv_str(v);
    return out;
}

void emit(const Options& opt, const json& j, const std::string& text, std::ostream& out) {
    if (opt.as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

void do_invariants(const std::string& form_text, const Options& opt, std::ostream& out) {
    BinaryForm q = parse_form(form_text, opt.bound());
    int n = q.degree();
    json j{{"status", "ok"}, {"command", "invariants"}, {"degree", n}};
    std::ostringstream text;
    text << "degree = " << n << "\n";
    auto put_poly = [&](const char* name, const Poly& p) {
        j["polynomials"][name] = poly_str(p);
        text << name << " = " << poly_str(p) << "\n";
    };
    auto put_val = [&](const InvariantValue& v) {
        j["values"][v.name] = value_json(v);
        text << v.name << " = " << inv_str(v) << "\n";
    };
    if (n == 4) {
        QuarticInvariants inv = quartic_invariants(q);
        put_poly("I2", inv.I2);
        put_poly("I3", inv.I3);
        put_poly("delta", inv.delta);
        put_val(inv.J);
        put_val(inv.K);
    } else if (n == 5) {
        QuinticInvariants inv = quintic_invariants(q);
        put_poly("I4", inv.I4);
        put_poly("I8", inv.I8);
        put_poly("I12", inv.I12);
        put_poly("delta", inv.delta);
        put_val(inv.J);
        put_val(inv.K);
        put_val(inv.L);
        if (q.has_rational_coeffs()) {
            auto w = verify_i18_square(q);
            j["values"]["I18"] = w ? json{{"defined", true}, {"value", rat_str(*w)}}
                                   : json{{"defined", false}};
            text << "I18 = " << (w ? rat_str(*w) : "no rational square root") << "\n";
        }
    } else if (n == 6) {
        SexticInvariants inv = sextic_invariants(q);
        put_poly("I2", inv.I2);
        put_poly("I4", inv.I4);
        put_poly("I10", inv.I10);
        put_val(inv.J);
        put_val(inv.K);
        put_val(inv.L);
    } else {
        put_poly("delta", discriminant(q));
        if (n >= 3) put_val(inv_J(q));
        if (n >= 4 && n % 2 == 0) put_val(inv_M(q));
    }
    emit(opt, j, text.str(), out);
}

void do_discriminant(const std::string& form_text, const Options& opt, std::ostream& out) {
    Poly d = discriminant(parse_form(form_text, opt.bound()));
    emit(opt, json{{"status", "ok"}, {"command", "discriminant"}, {"value", poly_str(d)}},
         poly_str(d) + "\n", out);
}

void do_resultant(const std::string& f1, const std::string& f2, const Options& opt,
                  std::ostream& out) {
    auto params = opt.bound();
    Poly r = resultant(parse_form(f1, params), parse_form(f2, params));
    emit(opt, json{{"status", "ok"}, {"command", "resultant"}, {"value", poly_str(r)}},
         poly_str(r) + "\n", out);
}

void do_transvect(int order, const std::string& f1, const std::string& f2, const Options& opt,
                  std::ostream& out) {
    auto params = opt.bound();
    BinaryForm t = transvectant(parse_form(f1, params), parse_form(f2, params), order);
    emit(opt,
         json{{"status", "ok"}, {"command", "transvect"}, {"order", order},
              {"form", form_json(t)}},
         t.str() + "\n", out);
}

void do_hessian(const std::string& form_text, const Options& opt, std::ostream& out) {
    BinaryForm h = hessian(parse_form(form_text, opt.bound()));
    emit(opt, json{{"status", "ok"}, {"command", "hessian"}, {"form", form_json(h)}},
         h.str() + "\n", out);
}

void do_milnor(const std::string& form_text, const Options& opt, std::ostream& out) {
    MilnorAlgebra a = MilnorAlgebra::build(parse_form(form_text, opt.bound()));
    json j{{"status", "ok"},
           {"command", "milnor"},
           {"dimension", a.dimension()},
           {"nil_index", a.nil_index()},
           {"kernel_dim", a.kernel_dim()},
           {"hilbert", a.hilbert()},
           {"annihilator_check", a.annihilator_check()}};
    std::ostringstream text;
    text << "dimension = " << a.dimension() << "\n";
    text << "nil_index = " << a.nil_index() << "\n";
    text << "hilbert =";
    for (int h : a.hilbert()) text << " " << h;
    text << "\n";
    text << "kernel_dim = " << a.kernel_dim() << "\n";
    text << "annihilator_check = " << (a.annihilator_check() ? "yes" : "no") << "\n";
    emit(opt, j, text.str(), out);
}

void do_associated_form(const std::string& form_text, const Options& opt, std::ostream& out) {
    BinaryForm f = associated_form(parse_form(form_text, opt.bound()));
    emit(opt, json{{"status", "ok"}, {"command", "associated-form"}, {"form", form_json(f)}},
         f.str() + "\n", out);
}

void verdict_output(const char* command, const EquivalenceVerdict& v, const Options& opt,
                    std::ostream& out) {
    json j{{"status", "ok"},
           {"command", command},
           {"equivalent", v.equivalent},
           {"mode", v.mode == EquivMode::exact ? "exact" : "numeric"}};
    if (v.mode == EquivMode::numeric) j["digits"] = v.digits;
    json witness = json::array();
    std::ostringstream text;
    text << "equivalent = " << (v.equivalent ? "yes" : "no") << "\n";
    text << "mode = " << (v.mode == EquivMode::exact ? "exact" : "numeric") << "\n";
    if (v.mode == EquivMode::numeric) text << "digits = " << v.digits << "\n";
    for (const WitnessEntry& e : v.witness) {
        json entry{{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"matched", e.matched}};
        if (!e.gap.empty()) entry["gap"] = e.gap;
        witness.push_back(entry);
        text << e.name << ": " << (e.matched ? "matched" : "differs");
        if (!e.gap.empty()) text << " (gap " << e.gap << ")";
        text << "\n  lhs = " << e.lhs << "\n  rhs = " << e.rhs << "\n";
    }
    j["witness"] = witness;
    emit(opt, j, text.str(), out);
}

void do_equivalent(const std::string& f1, const std::string& f2, const Options& opt,
                   std::ostream& out) {
    auto params = opt.bound();
    BinaryForm a = parse_form(f1, params);
    BinaryForm b = parse_form(f2, params);
    if (a.degree() != b.degree())
        throw std::domain_error("equivalent: forms have different degrees");
    EquivalenceVerdict v;
    if (a.degree() == 4)
        v = equivalent_quartics(a, b);
    else if (a.degree() == 5)
        v = equivalent_quintics(a, b);
    else
        throw std::domain_error("equivalent: only degrees 4 and 5 are decided");
    verdict_output("equivalent", v, opt, out);
}

void do_family_equiv(const std::vector<std::string>& args, const Options& opt,
                     std::ostream& out) {
    if (args.empty()) throw UsageError("family-equiv: expected a family name, 't' or 'st'");
    EquivalenceVerdict v;
    if (args[0] == "t") {
        if (args.size() != 4)
            throw UsageError("family-equiv t: expected arguments N T1 T2");
        int n = 0;
        try {
            n = std::stoi(args[1]);
        } catch (const std::exception&) {
            throw UsageError("family-equiv t: bad degree '" + args[1] + "'");
        }
        v = germ_equiv_family_t(n, parse_param_value(args[2], opt.digits),
                                parse_param_value(args[3], opt.digits), opt.digits);
    } else if (args[0] == "st") {
        if (args.size() != 5)
            throw UsageError("family-equiv st: expected arguments S1 T1 S2 T2");
        v = germ_equiv_family_st(parse_param_value(args[1], opt.digits),
                                 parse_param_value(args[2], opt.digits),
                                 parse_param_value(args[3], opt.digits),
                                 parse_param_value(args[4], opt.digits), opt.digits);
    } else {
        throw UsageError("family-equiv: unknown family '" + args[0] + "'");
    }
    verdict_output("family-equiv", v, opt, out);
}

void do_conjecture(const Options& opt, std::ostream& out) {
    std::vector<conjecture::EvidenceReport> reports = conjecture::run_all();
    json arr = json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
        arr.push_back(json{{"name", r.name},
                           {"verified", r.verified},
                           {"samples", r.samples},
                           {"details", r.details}});
        text << (r.verified ? "pass" : "FAIL") << "  " << r.name << " [samples=" << r.samples
             << "]: " << r.details << "\n";
    }
    emit(opt, json{{"status", "ok"}, {"command", "conjecture"}, {"reports", arr}}, text.str(),
         out);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    std::ostringstream out;

    CLI::App app{"exact invariants of binary forms and plane curve germs"};
    app.name("curvex");
    app.require_subcommand(1);

    Options opt;
    std::string form1, form2;
    int order = 0;
    std::vector<std::string> fargs;

    CLI::App* c_inv = app.add_subcommand("invariants", "classical invariants of a form");
    c_inv->add_option("form", form1, "binary form in z, w")->required();
    add_common(c_inv, opt);

    CLI::App* c_disc = app.add_subcommand("discriminant", "normalized discriminant");
    c_disc->add_option("form", form1)->required();
    add_common(c_disc, opt);

    CLI::App* c_res = app.add_subcommand("resultant", "Sylvester resultant of two forms");
    c_res->add_option("form1", form1)->required();
    c_res->add_option("form2", form2)->required();
    add_common(c_res, opt);

    CLI::App* c_tv = app.add_subcommand("transvect", "r-th transvectant of two forms");
    c_tv->add_option("order", order, "transvectant order")->required();
    c_tv->add_option("form1", form1)->required();
    c_tv->add_option("form2", form2)->required();
    add_common(c_tv, opt);

    CLI::App* c_hess = app.add_subcommand("hessian", "Hessian covariant");
    c_hess->add_option("form", form1)->required();
    add_common(c_hess, opt);

    CLI::App* c_mil = app.add_subcommand("milnor", "Milnor algebra of a square-free form");
    c_mil->add_option("form", form1)->required();
    add_common(c_mil, opt);

    CLI::App* c_assoc = app.add_subcommand("associated-form", "associated form (dual variables)");
    c_assoc->add_option("form", form1)->required();
    add_common(c_assoc, opt);

    CLI::App* c_eq = app.add_subcommand("equivalent", "decide equivalence of two forms");
    c_eq->add_option("form1", form1)->required();
    c_eq->add_option("form2", form2)->required();
    add_common(c_eq, opt);

    CLI::App* c_fam = app.add_subcommand("family-equiv", "decide equivalence inside a family");
    c_fam->add_option("args", fargs, "t N T1 T2  |  st S1 T1 S2 T2");
    add_common(c_fam, opt);

    CLI::App* c_conj = app.add_subcommand("conjecture", "run the evidence suite");
    add_common(c_conj, opt);

    try {
        std::vector<std::string> full;
        full.push_back("curvex");
        full.insert(full.end(), args.begin(), args.end());
        std::vector<char*> argv;
        argv.reserve(full.size());
        for (std::string& s : full) argv.push_back(s.data());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
        return res;
    }

    try {
        if (*c_inv)
            do_invariants(form1, opt, out);
        else if (*c_disc)
            do_discriminant(form1, opt, out);
        else if (*c_res)
            do_resultant(form1, form2, opt, out);
        else if (*c_tv)
            do_transvect(order, form1, form2, opt, out);
        else if (*c_hess)
            do_hessian(form1, opt, out);
        else if (*c_mil)
            do_milnor(form1, opt, out);
        else if (*c_assoc)
            do_associated_form(form1, opt, out);
        else if (*c_eq)
            do_equivalent(form1, form2, opt, out);
        else if (*c_fam)
            do_family_equiv(fargs, opt, out);
        else if (*c_conj)
            do_conjecture(opt, out);
        res.out = out.str();
    } catch (const UsageError& e) {
        res.code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    } catch (const IndeterminateError& e) {
        res.code = 2;
        res.err = std::string("indeterminate: ") + e.what() + "\n";
    } catch (const std::domain_error& e) {
        res.code = 2;
        res.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        res.code = 2;
        res.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        res.code = 3;
        res.err = std::string("internal error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace curvex
