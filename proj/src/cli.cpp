#include "vpf/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpf/analysis.hpp"
#include "vpf/formulas.hpp"
#include "vpf/io.hpp"
#include "vpf/multigraph.hpp"
#include "vpf/partition.hpp"
#include "vpf/reduction.hpp"

namespace vpf::cli {

namespace {

using nlohmann::json;

// Integers stay JSON numbers while they fit a long; larger ones become decimal strings.
json jint(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json jrat(const Rational& x) { return x.get_str(); }

json jvec(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jint(x));
    return a;
}

json jrvec(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jrat(x));
    return a;
}

json jcols(const ColumnSet& s) {
    json a = json::array();
    for (auto j : s) a.push_back(j + 1);
    return a;
}

json jrows(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(jvec(m.row(r)));
    return a;
}

json jrays(const std::vector<IntVector>& rays) {
    json a = json::array();
    for (const auto& r : rays) a.push_back(jvec(r));
    return a;
}

json jqp(const QuasiPolynomial& q) {
    json cs = json::array();
    for (const auto& p : q.constituents()) {
        json c = json::array();
        for (const auto& x : p.coefficients()) c.push_back(jrat(x));
        cs.push_back(c);
    }
    return {{"period", q.period()}, {"constituents", cs}};
}

std::string cols_text(const ColumnSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i] + 1);
    return out + "}";
}

std::string rays_text(const std::vector<IntVector>& rays) {
    std::string out;
    for (std::size_t i = 0; i < rays.size(); ++i) out += (i ? " " : "") + to_string(rays[i]);
    return out;
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).get_str().size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::string s = m(r, c).get_str();
            os << (c ? " " : "") << std::string(width[c] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
}

void print_qp(std::ostream& os, const QuasiPolynomial& q, const std::string& var) {
    if (q.period() == 1) {
        os << "  " << q.constituents()[0].to_string(var) << '\n';
        return;
    }
    for (std::size_t r = 0; r < q.period(); ++r)
        os << "  " << var << " = " << r << " mod " << q.period() << ": " << q.constituents()[r].to_string(var) << '\n';
}

struct Session {
    std::ostream& out;
    std::ostream& err;
    bool json_mode = false;
    std::size_t wall_cap = 0;  // 0: environment or default

    void emit(const json& j) const { out << j.dump(2) << '\n'; }

    std::size_t cap() const { return wall_cap ? wall_cap : default_wall_cap(); }
};

VpfInstance load(const std::string& path) { return validate(io::read_matrix(path)); }

// --chamber and --point are alternative ways to name one chamber.
Chamber select_chamber(const Session& s, const VpfInstance& inst, std::size_t id, const std::string& point) {
    if (!point.empty()) return chamber_of_point(inst, io::parse_vector(point));
    if (id == 0) throw Error(ErrorKind::InvalidArgument, "name a chamber with --chamber <id> or --point <b>");
    return chamber_complex(inst, s.cap()).by_id(id);
}

json closed_form_json(const ClosedForm& cf) {
    json j;
    j["kind"] = cf.kind == ClosedForm::Kind::Binomial ? "binomial" : "reduction";
    j["chamber"] = {{"id", cf.chamber_id}, {"hash", cf.chamber_hash}, {"rays", jrays(cf.domain.rays())}};
    j["linear_form"] = jrvec(cf.linear_form);
    j["scale"] = jint(cf.scale);
    j["quasi_polynomial"] = jqp(cf.inner);
    j["lattice_constraint"] = cf.lattice_constraint;
    j["internal_ray"] = jvec(cf.internal_ray);
    j["ehrhart"] = jqp(cf.ehrhart());
    return j;
}

void print_closed_form(std::ostream& os, const ClosedForm& cf) {
    os << (cf.kind == ClosedForm::Kind::Binomial ? "binomial formula" : "reduction formula");
    if (cf.chamber_id) os << " on chamber #" << cf.chamber_id;
    os << " [" << cf.chamber_hash << "]\n";
    os << "domain rays: " << rays_text(cf.domain.rays()) << '\n';
    os << "linear form l = " << to_string(cf.linear_form) << ", scale " << cf.scale.get_str() << '\n';
    os << "p_A(b) = q(t) with t = " << (cf.scale == 1 ? "" : cf.scale.get_str() + " * ") << "l.b, where q(t) =\n";
    print_qp(os, cf.inner, "t");
    os << "lattice: " << cf.lattice_constraint << '\n';
    os << "internal ray: " << to_string(cf.internal_ray) << '\n';
    os << "along the internal ray, p_A(s v) =\n";
    print_qp(os, cf.ehrhart(), "s");
}

int cmd_validate(Session& s, const std::string& path) {
    IntMatrix A = io::read_matrix(path);
    try {
        VpfInstance inst = validate(A);
        if (s.json_mode) {
            s.emit({{"valid", true},
                    {"d", inst.d()},
                    {"n", inst.n()},
                    {"rank", rank(inst.A)},
                    {"pointed", inst.pointed_kernel},
                    {"lattice_basis", jrays(inst.lattice.basis().columns())}});
        } else {
            s.out << "valid, d=" << inst.d() << " n=" << inst.n() << '\n';
            s.out << "rank " << rank(inst.A) << ", kernel meets the nonnegative orthant only at 0\n";
            s.out << "lattice basis: " << rays_text(inst.lattice.basis().columns()) << '\n';
        }
        return Ok;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        if (s.json_mode) {
            s.emit({{"valid", false},
                    {"error", std::string(to_string(e.kind()))},
                    {"message", e.what()},
                    {"witness", jrvec(e.witness())}});
        } else {
            s.out << "invalid (" << to_string(e.kind()) << "): " << e.what() << '\n';
            if (!e.witness().empty()) s.out << "witness: " << to_string(e.witness()) << '\n';
        }
        return MathFailure;
    }
}

int cmd_chambers(Session& s, const std::string& path) {
    VpfInstance inst = load(path);
    ChamberComplex cx = chamber_complex(inst, s.cap());
    if (s.json_mode) {
        json list = json::array();
        for (const auto& c : cx.chambers)
            list.push_back({{"id", c.id},
                            {"hash", c.hash},
                            {"rays", jrays(c.cone.rays())},
                            {"simplicial", c.cone.is_simplicial()},
                            {"interior_point", jrvec(c.interior_witness)}});
        s.emit({{"count", cx.chambers.size()}, {"walls", cx.walls.size()}, {"chambers", list}});
        return Ok;
    }
    s.out << cx.chambers.size() << " chambers, " << cx.walls.size() << " walls\n";
    for (const auto& c : cx.chambers)
        s.out << '#' << c.id << " [" << c.hash << "] rays " << rays_text(c.cone.rays()) << '\n';
    return Ok;
}

int cmd_external(Session& s, const std::string& path) {
    VpfInstance inst = load(path);
    ChamberComplex cx = chamber_complex(inst, s.cap());
    ExternalReport r = external_report(inst, cx);
    const auto& pos_facets = inst.positive_hull.facets();
    auto semi_facets = [&](const SemiExternalInfo& se) {
        std::vector<IntVector> normals;
        for (auto f : se.facets) normals.push_back(pos_facets[f].normal);
        return normals;
    };

    if (s.json_mode) {
        json facets = json::array(), chambers = json::array(), semi = json::array();
        for (const auto& f : r.facets) facets.push_back({{"normal", jvec(f.normal)}, {"columns", jcols(f.columns)}});
        for (const auto& c : r.chambers)
            chambers.push_back({{"id", c.chamber_id},
                                {"external_rays", jcols(c.external_rays)},
                                {"internal_ray", jvec(c.internal_ray)}});
        for (const auto& se : r.semi_external)
            semi.push_back({{"id", se.chamber_id}, {"facet_normals", jrays(semi_facets(se))}});
        s.emit({{"external_columns", jcols(r.external.columns)},
                {"single_chamber", r.external.degenerate},
                {"external_facets", facets},
                {"external_chambers", chambers},
                {"semi_external_chambers", semi}});
        return Ok;
    }
    s.out << "external columns: " << cols_text(r.external.columns) << '\n';
    if (r.external.degenerate) s.out << "pos(A) is the only chamber\n";
    s.out << r.facets.size() << " external facets\n";
    for (const auto& f : r.facets) s.out << "  normal " << to_string(f.normal) << " columns " << cols_text(f.columns) << '\n';
    s.out << r.chambers.size() << " external chambers\n";
    for (const auto& c : r.chambers)
        s.out << "  #" << c.chamber_id << " external rays from columns " << cols_text(c.external_rays) << ", internal ray "
              << to_string(c.internal_ray) << '\n';
    s.out << r.semi_external.size() << " semi-external chambers\n";
    for (const auto& se : r.semi_external) s.out << "  #" << se.chamber_id << " on facets " << rays_text(semi_facets(se)) << '\n';
    return Ok;
}

int cmd_formula(Session& s, const std::string& path, std::size_t id, const std::string& point, const std::string& facet) {
    VpfInstance inst = load(path);
    if (facet.empty()) {
        ClosedForm cf = external_chamber_formula(inst, select_chamber(s, inst, id, point));
        if (s.json_mode)
            s.emit(closed_form_json(cf));
        else
            print_closed_form(s.out, cf);
        return Ok;
    }

    ExternalFacet f = external_facet_with_normal(inst, io::parse_vector(facet));
    BinomialResult br = binomial_formula(inst, f);
    // Off the binomial case the chamber's reduction formula is the answer.
    ClosedForm cf = br.form ? *br.form : external_chamber_formula(inst, external_chamber_of_facet(inst, f));
    if (s.json_mode) {
        json j = closed_form_json(cf);
        j["facet"] = {{"normal", jvec(f.normal)}, {"columns", jcols(f.columns)}};
        j["dot_products"] = jvec(br.dot_products);
        j["binomial"] = br.polynomial;
        if (br.polynomial) j["beta"] = jint(br.beta);
        j["determinant_column"] = br.determinant_column + 1;
        j["determinant_form"] = jrvec(br.determinant_form);
        s.emit(j);
        return Ok;
    }
    s.out << "facet normal " << to_string(f.normal) << " columns " << cols_text(f.columns) << '\n';
    s.out << "iota.a_j: " << to_string(br.dot_products) << '\n';
    if (br.polynomial) {
        unsigned long k = inst.n() - inst.d();
        s.out << "beta = " << br.beta.get_str() << ": p_A(b) = C(iota.b/" << br.beta.get_str() << " + " << k << ", " << k
              << ")\n";
    } else {
        s.out << "iota.a_j is not constant off the facet; no binomial formula\n";
    }
    print_closed_form(s.out, cf);
    return Ok;
}

int cmd_reduce(Session& s, const std::string& path, std::size_t id, const std::string& point) {
    VpfInstance inst = load(path);
    Chamber ch = select_chamber(s, inst, id, point);
    ReductionResult r = reduce(inst, ch);
    if (s.json_mode) {
        s.emit({{"ell", r.ell},
                {"removed_columns", jcols(r.removed_columns)},
                {"kept_columns", jcols(r.kept_columns)},
                {"sigma_rays", jrays(r.rays)},
                {"M", jrows(r.M)},
                {"k", jvec(r.k)},
                {"B", jrows(r.B)},
                {"variable_map", jrows(r.variable_map)},
                {"note", r.note}});
        return Ok;
    }
    s.out << "chamber";
    if (ch.id) s.out << " #" << ch.id;
    s.out << " [" << ch.hash << "] rays " << rays_text(ch.cone.rays()) << '\n';
    if (!r.note.empty()) s.out << r.note << '\n';
    s.out << "removed columns " << cols_text(r.removed_columns) << ", kept " << cols_text(r.kept_columns) << '\n';
    s.out << "M (M v_i = k_i e_i, k = " << to_string(r.k) << "):\n";
    print_matrix(s.out, r.M, "  ");
    s.out << "B (" << r.B.rows() << "x" << r.B.cols() << "):\n";
    print_matrix(s.out, r.B, "  ");
    s.out << "variable map b -> b':\n";
    print_matrix(s.out, r.variable_map, "  ");
    return Ok;
}

int cmd_eval(Session& s, const std::string& path, const std::string& b_text) {
    VpfInstance inst = load(path);
    IntVector b = io::parse_vector(b_text);
    if (b.size() != inst.d())
        throw Error(ErrorKind::DimensionMismatch, "b has " + std::to_string(b.size()) + " entries, expected " +
                                                      std::to_string(inst.d()));
    Integer count = eval_brute(inst, b);
    if (s.json_mode)
        s.emit({{"b", jvec(b)}, {"count", jint(count)}, {"in_lattice", inst.lattice.contains(b)}});
    else
        s.out << count.get_str() << '\n';
    return Ok;
}

int cmd_multigraph(Session& s, const std::string& degrees, const std::string& method) {
    IntVector d = io::parse_vector(degrees);
    MultigraphCount result;
    if (method == "formula") {
        result = {count_formula(d), CountMethod::Formula};
    } else if (method == "brute") {
        result = {count_brute(d), CountMethod::Brute};
    } else {
        result = count_auto(d);
    }
    if (s.json_mode)
        s.emit({{"degrees", jvec(d)}, {"count", jint(result.count)}, {"method", std::string(to_string(result.method))}});
    else
        s.out << result.count.get_str() << " (" << to_string(result.method) << ")\n";
    return Ok;
}

int cmd_unimodular(Session& s, const std::string& path, bool vertex_check, const std::string& b_text) {
    IntMatrix A = io::read_matrix(path);
    bool uni = is_unimodular(A);
    json j = {{"unimodular", uni}};
    std::ostringstream human;
    human << (uni ? "unimodular" : "not unimodular") << '\n';
    if (vertex_check) {
        if (b_text.empty()) throw Error(ErrorKind::InvalidArgument, "--vertex-check needs -b <vector>");
        VpfInstance inst = validate(A);
        IntVector b = io::parse_vector(b_text);
        if (b.size() != inst.d())
            throw Error(ErrorKind::DimensionMismatch, "b has " + std::to_string(b.size()) + " entries, expected " +
                                                          std::to_string(inst.d()));
        VertexCheck vc = vertex_integrality(inst, b);
        json v = {{"b", jvec(b)}, {"all_integral", vc.all_integral}};
        if (vc.all_integral) {
            human << "every vertex of {x >= 0 : Ax = " << to_string(b) << "} is integral\n";
        } else {
            v["vertex"] = jrvec(vc.vertex);
            v["basis"] = jcols(vc.basis);
            human << "non-integral vertex " << to_string(vc.vertex) << " with basis " << cols_text(vc.basis) << '\n';
        }
        j["vertex_check"] = v;
    }
    if (s.json_mode)
        s.emit(j);
    else
        s.out << human.str();
    return Ok;
}

void report(const Session& s, const Error& e) {
    if (s.json_mode) {
        s.emit({{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"witness", jrvec(e.witness())}});
        return;
    }
    s.err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (!e.witness().empty()) s.err << "witness: " << to_string(e.witness()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session s{out, err};
    CLI::App app{"Vector partition functions: chambers, external chambers and closed formulas", "vpfkit"};
    app.require_subcommand(1);

    std::string path, point, facet, b_text, degrees, method = "auto";
    std::size_t chamber_id = 0;
    bool vertex_check = false;
    std::function<int()> action;

    auto common = [&](CLI::App* sub, bool needs_matrix) {
        sub->add_flag("--json", s.json_mode, "Machine-readable output");
        if (needs_matrix)
            sub->add_option("matrix", path, "Matrix file (\"d n\" then entries, or JSON); - for stdin")->required();
    };
    auto cap_option = [&](CLI::App* sub) {
        sub->add_option("--wall-cap", s.wall_cap, "Override the wall-count guardrail (default VPF_WALL_CAP or 512)");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check rank and pointedness; print the lattice");
    common(validate_cmd, true);
    validate_cmd->callback([&] { action = [&] { return cmd_validate(s, path); }; });

    auto* chambers_cmd = app.add_subcommand("chambers", "List the chambers of the complex");
    common(chambers_cmd, true);
    cap_option(chambers_cmd);
    chambers_cmd->callback([&] { action = [&] { return cmd_chambers(s, path); }; });

    auto* external_cmd = app.add_subcommand("external", "External columns, facets and chambers");
    common(external_cmd, true);
    cap_option(external_cmd);
    external_cmd->callback([&] { action = [&] { return cmd_external(s, path); }; });

    auto* formula_cmd = app.add_subcommand("formula", "Closed formula on an external chamber");
    common(formula_cmd, true);
    cap_option(formula_cmd);
    auto* f_id = formula_cmd->add_option("--chamber", chamber_id, "Chamber id from `chambers`");
    auto* f_pt = formula_cmd->add_option("--point", point, "Chamber containing this point in its interior");
    auto* f_fc = formula_cmd->add_option("--facet", facet, "Inner normal of an external facet of pos(A)");
    f_id->excludes(f_pt)->excludes(f_fc);
    f_pt->excludes(f_fc);
    formula_cmd->callback([&] { action = [&] { return cmd_formula(s, path, chamber_id, point, facet); }; });

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce along a chamber's external columns");
    common(reduce_cmd, true);
    cap_option(reduce_cmd);
    auto* r_id = reduce_cmd->add_option("--chamber", chamber_id, "Chamber id from `chambers`");
    auto* r_pt = reduce_cmd->add_option("--point", point, "Chamber containing this point in its interior");
    r_id->excludes(r_pt);
    reduce_cmd->callback([&] { action = [&] { return cmd_reduce(s, path, chamber_id, point); }; });

    auto* eval_cmd = app.add_subcommand("eval", "Count nonnegative integer solutions of Ax = b");
    common(eval_cmd, true);
    eval_cmd->add_option("-b", b_text, "Right-hand side, comma separated")->required();
    eval_cmd->callback([&] { action = [&] { return cmd_eval(s, path, b_text); }; });

    auto* multigraph_cmd = app.add_subcommand("multigraph", "Loopless multigraphs with a degree sequence");
    multigraph_cmd->require_subcommand(1);
    auto* count_cmd = multigraph_cmd->add_subcommand("count", "Count multigraphs with degrees -d");
    common(count_cmd, false);
    count_cmd->add_option("-d", degrees, "Degree sequence, comma separated")->required();
    auto* m_formula = count_cmd->add_flag_callback("--formula", [&] { method = "formula"; }, "Closed formula only");
    auto* m_brute = count_cmd->add_flag_callback("--brute", [&] { method = "brute"; }, "Enumeration only");
    auto* m_auto = count_cmd->add_flag_callback("--auto", [&] { method = "auto"; }, "Formula when it applies (default)");
    m_formula->excludes(m_brute)->excludes(m_auto);
    m_brute->excludes(m_auto);
    count_cmd->callback([&] { action = [&] { return cmd_multigraph(s, degrees, method); }; });

    auto* unimodular_cmd = app.add_subcommand("unimodular", "Minor test, optionally a vertex integrality scan");
    common(unimodular_cmd, true);
    unimodular_cmd->add_flag("--vertex-check", vertex_check, "Scan the vertices of {x >= 0 : Ax = b}");
    unimodular_cmd->add_option("-b", b_text, "Right-hand side for --vertex-check");
    unimodular_cmd->callback([&] { action = [&] { return cmd_unimodular(s, path, vertex_check, b_text); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : ParseFailure;
    }

    try {
        return action();
    } catch (const Error& e) {
        report(s, e);
        return e.kind() == ErrorKind::Parse ? ParseFailure : MathFailure;
    }
}

}  // namespace vpf::cli
