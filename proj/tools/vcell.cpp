#include "vcell/dualvol.hpp"
#include "vcell/errors.hpp"
#include "vcell/fixtures.hpp"
#include "vcell/forms.hpp"
#include "vcell/json_io.hpp"
#include "vcell/planar.hpp"
#include "vcell/svg.hpp"
#include "vcell/vandermonde.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using vcell::Rational;
using vcell::io::json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

struct CommonOpts {
    std::string out;
    std::string format;
    std::uint64_t seed = 1;
    int samples = 100;
};

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << content;
    }
}

int cmd_boundary(int n, int d, bool list_mult, bool count_new, bool equations, int sample,
                 const CommonOpts& opts) {
    if (n < d - 1 || d < 3) {
        std::cerr << "usage error: boundary requires n >= d-1 >= 2\n";
        return kUsage;
    }
    if (count_new) {
        std::cout << vcell::new_hypersurface_count(n, d) << "\n";
        return kOk;
    }
    if (equations) {
        if (d != 3) {
            std::cerr << "usage error: --equations is the closed planar family (d = 3)\n";
            return kUsage;
        }
        json j;
        for (int k = 2; k <= n; ++k)
            j["b_" + std::to_string(k)] = vcell::io::to_json(vcell::planar::boundary_poly(k));
        emit(opts.out, j.dump(2));
        return kOk;
    }
    if (sample > 0) {
        auto vecs = vcell::enumerate_multiplicity_vectors(n, d);
        std::ostringstream csv;
        csv << "vector_index,kind,m0,multiplicities";
        for (int jx = 1; jx < d; ++jx) csv << ",param_x" << jx;
        for (int jx = 2; jx <= d; ++jx) csv << ",p" << jx;
        csv << "\n";
        std::uint64_t s = opts.seed;
        for (std::size_t vi = 0; vi < vecs.size(); ++vi) {
            vcell::BoundaryPatch patch(vecs[vi]);
            auto params = vcell::fixtures::sample_patch_params(patch, sample, s + vi);
            for (const auto& ps : params) {
                auto r = patch.evaluate(ps);
                csv << vi << "," << (vecs[vi].kind == vcell::MultiplicityVector::Kind::Type1 ? "type1" : "type2")
                    << "," << vecs[vi].m0 << ",";
                for (std::size_t i = 0; i < vecs[vi].m.size(); ++i)
                    csv << (i ? "|" : "") << vecs[vi].m[i];
                for (const auto& b : r.block_values) csv << "," << vcell::to_string(b);
                for (const auto& y : r.image) csv << "," << vcell::to_string(y);
                csv << "\n";
            }
        }
        emit(opts.out, csv.str());
        return kOk;
    }
    // default / --list-multiplicities: JSON enumeration
    (void)list_mult;
    auto vecs = vcell::enumerate_multiplicity_vectors(n, d);
    json j;
    j["n"] = n;
    j["d"] = d;
    j["new_hypersurface_count"] = vcell::new_hypersurface_count(n, d);
    json arr = json::array();
    for (const auto& v : vecs) {
        json e;
        e["kind"] = v.kind == vcell::MultiplicityVector::Kind::Type1 ? "type1" : "type2";
        e["m0"] = v.m0;
        e["m"] = v.m;
        arr.push_back(std::move(e));
    }
    j["multiplicity_vectors"] = std::move(arr);
    emit(opts.out, j.dump(2));
    return kOk;
}

int cmd_canonical(int n, bool summands, const std::string& curves_out, const CommonOpts& opts) {
    if (n < 3) {
        std::cerr << "usage error: canonical requires n >= 3\n";
        return kUsage;
    }
    auto cf = vcell::planar::canonical_form(n);
    // logarithmicity certificate with residue report
    std::vector<vcell::ParamCurve> curves;
    curves.push_back(vcell::planar::b2_line_param());
    for (int k = 3; k <= n; ++k) curves.push_back(vcell::planar::boundary_param(k));
    auto rep = vcell::is_logarithmic(cf.combined, curves);

    // top level is the combined form itself, so the output feeds straight
    // into `residue` and `logcheck`; extra report keys ride along
    json j = vcell::io::to_json(cf.combined);
    if (summands) {
        json arr = json::array();
        for (const auto& s : cf.summands) arr.push_back(vcell::io::to_json(s));
        j["summands"] = std::move(arr);
    }
    j["logarithmic"] = rep.logarithmic;
    json res = json::array();
    for (std::size_t i = 0; i < rep.residues.size(); ++i) {
        json r;
        r["factor"] = cf.combined.denominator_factors()[i].poly.str();
        r["residue"] = rep.residues[i].coeff.str();
        res.push_back(std::move(r));
    }
    j["residues"] = std::move(res);
    // spurious chord factors cancel in the combined form
    json cancelled = json::array();
    for (int k = 3; k < n; ++k) {
        const auto& facs = cf.combined.denominator_factors();
        bool present = false;
        for (const auto& f : facs)
            if (f.poly == vcell::planar::chord(k)) present = true;
        if (!present)
            cancelled.push_back("spurious factor l(c_" + std::to_string(k) + ",(1,1)) cancelled");
    }
    j["certificate"] = std::move(cancelled);
    emit(opts.out, j.dump(2));
    if (!curves_out.empty()) {
        json cj;
        json arr = json::array();
        for (const auto& c : curves) arr.push_back(vcell::io::to_json(c));
        cj["curves"] = std::move(arr);
        vcell::io::save_json_file(curves_out, cj);
    }
    return rep.logarithmic ? kOk : kVerifyFail;
}

int cmd_membership(int n, const std::string& xs, const std::string& ys) {
    auto m = vcell::planar::membership(n, {vcell::parse_rational(xs), vcell::parse_rational(ys)});
    switch (m) {
        case vcell::planar::Membership::Inside: std::cout << "Inside\n"; break;
        case vcell::planar::Membership::OnBoundary: std::cout << "OnBoundary\n"; break;
        case vcell::planar::Membership::Outside: std::cout << "Outside\n"; break;
    }
    return kOk;
}

int cmd_plot(int n, const CommonOpts& opts) {
    std::string svg = vcell::svg::plot_cell(n);
    emit(opts.out.empty() ? "cell.svg" : opts.out, svg);
    return kOk;
}

int cmd_residue(const std::string& form_path, const std::string& curve_path, const CommonOpts& opts) {
    auto form = vcell::io::form_from_json(vcell::io::load_json_file(form_path));
    auto curve = vcell::io::curve_from_json(vcell::io::load_json_file(curve_path));
    auto r = vcell::residue(form, curve);
    json j = vcell::io::to_json(r);
    j["pretty"] = r.str();
    emit(opts.out, j.dump(2));
    return kOk;
}

int cmd_logcheck(const std::string& form_path, const std::string& curves_path) {
    auto form = vcell::io::form_from_json(vcell::io::load_json_file(form_path));
    json cj = vcell::io::load_json_file(curves_path);
    std::vector<vcell::ParamCurve> curves;
    const json& arr = cj.is_array() ? cj : cj.at("curves");
    for (const auto& c : arr) curves.push_back(vcell::io::curve_from_json(c));
    auto rep = vcell::is_logarithmic(form, curves);
    json out;
    out["logarithmic"] = rep.logarithmic;
    json off = json::array();
    for (const auto& o : rep.offenders) {
        json e;
        e["factor"] = form.denominator_factors()[o.factor_index].poly.str();
        if (o.root) e["root"] = vcell::to_string(*o.root);
        else e["residual_degree"] = o.residual_degree;
        e["order"] = o.order;
        off.push_back(std::move(e));
    }
    out["offenders"] = std::move(off);
    std::cout << out.dump(2) << "\n";
    return rep.logarithmic ? kOk : kVerifyFail;
}

int cmd_dualvol(const std::string& poly_path, const std::string& xs, const std::string& ys) {
    auto P = vcell::io::polygon_from_json(vcell::io::load_json_file(poly_path));
    auto v = vcell::dualvol::dual_volume(P, {vcell::parse_rational(xs), vcell::parse_rational(ys)});
    if (!v.bounded) {
        std::cout << "unbounded\n";
        return kVerifyFail;
    }
    std::cout << vcell::to_string(v.value) << "\n";
    return kOk;
}

int cmd_limit(const std::string& xs, const std::string& ys, int nmax, const CommonOpts& opts) {
    auto rep = vcell::dualvol::limiting_canonical(
        {vcell::parse_rational(xs), vcell::parse_rational(ys)}, nmax);
    std::ostringstream csv;
    csv << "n,value_num,value_den,float_approx,delta_float\n";
    char buf[64];
    for (const auto& row : rep.rows) {
        std::snprintf(buf, sizeof(buf), "%.12g", vcell::to_double(row.omega));
        csv << row.n << "," << vcell::num(row.omega).str() << "," << vcell::den(row.omega).str()
            << "," << buf;
        std::snprintf(buf, sizeof(buf), "%.12g", row.delta_float);
        csv << "," << buf << "\n";
    }
    emit(opts.out, csv.str());
    bool cross_ok = true;
    for (const auto& row : rep.rows) cross_ok = cross_ok && row.hull_increment_ok;
    std::cerr << "hull cross-check: " << (cross_ok ? "ok" : "FAILED")
              << "; converged@tol=" << rep.tol << ": " << (rep.converged ? "yes" : "no") << "\n";
    return cross_ok ? kOk : kVerifyFail;
}

int cmd_fixtures_verify(bool slow, const CommonOpts& opts) {
    auto rep = vcell::fixtures::verify_quartic_boundaries(opts.samples, opts.seed, slow);
    auto rep2 = vcell::fixtures::verify_same_hypersurface(4, 1, 10, opts.seed);
    for (const auto& r : {rep, rep2})
        for (const auto& c : r.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    return (rep.all_pass() && rep2.all_pass()) ? kOk : kVerifyFail;
}

int cmd_selftest() {
    int fails = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++fails;
    };
    using namespace vcell;
    // b_2 factors as the negated square of its line
    MultiPoly b2 = planar::boundary_poly(2);
    MultiPoly l = planar::b2_line();
    check(b2 == -(l * l), "b_2 = -(2y-3x+1)^2");
    // resultant at n = 3
    MultiPoly det3 = planar::resultant_boundary(3);
    check(MultiPoly::divides(planar::boundary_poly(3), det3), "presenting-matrix det multiple of b_3");
    // A_I residue
    auto fx = fixture_forms();
    auto r = residue(fx.a1, fx.cusp_cubic);
    check(r == segment_form(Rational(-1), Rational(1)), "A_I cubic residue = seg(-1,1)");
    // triangle dual volume
    dualvol::Polygon tri({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    auto dv = dualvol::dual_volume(tri, {Rational(1, 3), Rational(1, 3)});
    check(dv.bounded && dv.value == 27, "unit triangle dual volume 27 at barycenter");
    // canonical form n=4 spurious cancellation
    auto cf = planar::canonical_form(4);
    bool chordfree = true;
    for (const auto& f : cf.combined.denominator_factors())
        if (f.poly == planar::chord(3)) chordfree = false;
    check(chordfree, "Omega_4 spurious chord pole cancelled");
    return fails == 0 ? kOk : kVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vcell: exact boundary algebra, canonical forms, and dual volumes of Vandermonde cells"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    CommonOpts opts;
    app.add_option("--out", opts.out, "output file (default stdout)");
    app.add_option("--format", opts.format, "output format hint: json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg", ""}));
    app.add_option("--seed", opts.seed, "RNG seed");
    app.add_option("--samples", opts.samples, "sample count");

    int n = 3, d = 3, nmax = 12, sample = 0;
    bool list_mult = false, count_new = false, equations = false, summands = false, slow = false;
    bool combined_only = false;
    std::string xs = "0", ys = "0", form_path, curve_path, curves_path, poly_path, curves_out;

    auto add_boundary = [&](CLI::App* c) {
        c->add_option("--n", n, "number of variables")->required();
        c->add_option("--d", d, "dimension (power sums up to p_d)")->required();
        c->add_flag("--list-multiplicities", list_mult, "emit the multiplicity-vector enumeration");
        c->add_flag("--count-new", count_new, "print the new-hypersurface count");
        c->add_flag("--equations", equations, "emit b_2..b_n (d = 3)");
        c->add_option("--sample", sample, "emit CSV of K parametrized boundary points per vector");
    };
    CLI::App* boundary = app.add_subcommand("boundary", "boundary enumeration and parametrized samples");
    add_boundary(boundary);

    auto add_canonical = [&](CLI::App* c) {
        c->add_option("--n", n)->required();
        c->add_flag("--summands", summands, "include the summand list");
        c->add_flag("--combined", combined_only, "combined form only (default)");
        c->add_option("--curves-out", curves_out, "also write the boundary curves JSON");
    };
    auto add_membership = [&](CLI::App* c) {
        c->add_option("--n", n)->required();
        c->add_option("--x", xs)->required();
        c->add_option("--y", ys)->required();
    };
    auto add_plot = [&](CLI::App* c) { c->add_option("--n", n)->required(); };

    CLI::App* canonical = app.add_subcommand("canonical", "canonical form of Pi_{n,3}");
    add_canonical(canonical);
    CLI::App* membership = app.add_subcommand("membership", "membership test for Pi_{n,3}");
    add_membership(membership);
    CLI::App* plot = app.add_subcommand("plot", "SVG plot of Pi_{n,3}");
    add_plot(plot);

    CLI::App* planar_grp = app.add_subcommand("planar", "planar cell commands");
    CLI::App* pcanonical = planar_grp->add_subcommand("canonical", "canonical form");
    add_canonical(pcanonical);
    CLI::App* pmembership = planar_grp->add_subcommand("membership", "membership test");
    add_membership(pmembership);
    CLI::App* pplot = planar_grp->add_subcommand("plot", "SVG plot");
    add_plot(pplot);

    CLI::App* residue_cmd = app.add_subcommand("residue", "Poincare residue of a form along a curve");
    residue_cmd->add_option("--form", form_path)->required();
    residue_cmd->add_option("--curve", curve_path)->required();
    CLI::App* logcheck = app.add_subcommand("logcheck", "logarithmicity decision with offender report");
    logcheck->add_option("--form", form_path)->required();
    logcheck->add_option("--curves", curves_path)->required();

    CLI::App* forms_grp = app.add_subcommand("forms", "rational form commands");
    CLI::App* fresidue = forms_grp->add_subcommand("residue", "Poincare residue");
    fresidue->add_option("--form", form_path)->required();
    fresidue->add_option("--curve", curve_path)->required();
    CLI::App* flogcheck = forms_grp->add_subcommand("logcheck", "logarithmicity decision");
    flogcheck->add_option("--form", form_path)->required();
    flogcheck->add_option("--curves", curves_path)->required();

    CLI::App* dualvol_cmd = app.add_subcommand("dualvol", "dual volume of a polygon at a point");
    dualvol_cmd->add_option("--polygon", poly_path)->required();
    dualvol_cmd->add_option("--x", xs)->required();
    dualvol_cmd->add_option("--y", ys)->required();

    CLI::App* limit = app.add_subcommand("limit", "limiting-cell partial values with hull cross-check");
    limit->add_option("--x", xs)->required();
    limit->add_option("--y", ys)->required();
    limit->add_option("--n-max", nmax)->required();

    CLI::App* fverify = app.add_subcommand("fixtures-verify", "verify the embedded quartic fixtures");
    fverify->add_flag("--slow", slow, "include the symbolic substitution tier");
    CLI::App* fixtures_grp = app.add_subcommand("fixtures", "fixture commands");
    CLI::App* fverify2 = fixtures_grp->add_subcommand("verify", "verify the embedded quartic fixtures");
    fverify2->add_flag("--slow", slow);

    CLI::App* selftest = app.add_subcommand("selftest", "run built-in smoke checks");

    // global flags may appear after any (nested) subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands({})) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kUsage;
    }

    try {
        if (boundary->parsed()) return cmd_boundary(n, d, list_mult, count_new, equations, sample, opts);
        if (canonical->parsed() || pcanonical->parsed())
            return cmd_canonical(n, summands, curves_out, opts);
        if (membership->parsed() || pmembership->parsed()) return cmd_membership(n, xs, ys);
        if (plot->parsed() || pplot->parsed()) return cmd_plot(n, opts);
        if (residue_cmd->parsed() || fresidue->parsed()) return cmd_residue(form_path, curve_path, opts);
        if (logcheck->parsed() || flogcheck->parsed()) return cmd_logcheck(form_path, curves_path);
        if (dualvol_cmd->parsed()) return cmd_dualvol(poly_path, xs, ys);
        if (limit->parsed()) return cmd_limit(xs, ys, nmax, opts);
        if (fverify->parsed() || fverify2->parsed()) return cmd_fixtures_verify(slow, opts);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const vcell::DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    std::cerr << "usage error: no subcommand\n";
    return kUsage;
}
