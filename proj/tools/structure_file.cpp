#include "structure_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rrb/error.hpp"

namespace rrb::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

[[noreturn]] void shape_fail(const std::string& path, const std::string& what) {
    throw ShapeError(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key '" + key + "'");
    return *it;
}

std::string string_field(const Json& obj, const std::string& key, const std::string& path) {
    const Json& v = field(obj, key, path);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::size_t size_value(const Json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

Rational rational_value(const Json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, std::string("malformed rational: ") + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long long>());
    fail(path, "expected a rational string \"p\" or \"p/q\"");
}

Matrix matrix_value(const Json& v, std::size_t rows, std::size_t cols, const std::string& path) {
    if (!v.is_array() || v.size() != rows) {
        shape_fail(path, "expected " + std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != cols) shape_fail(rp, "expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational_value(v[i][j], rp + "[" + std::to_string(j) + "]");
    }
    return m;
}

// tensor[i_1]..[i_k][o] is the coefficient of e_o in f(e_{i_1}, .., e_{i_k}).
void tensor_value(const Json& v, Multilinear& f, std::size_t depth, std::size_t flat, const std::string& path) {
    const auto& in = f.in_dims();
    const std::size_t n = depth < in.size() ? in[depth] : f.out_dim();
    if (!v.is_array() || v.size() != n) shape_fail(path, "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (depth < in.size()) {
            tensor_value(v[i], f, depth + 1, flat * in[depth] + i, p);
        } else {
            f.matrix()(i, flat) = rational_value(v[i], p);
        }
    }
}

Json tensor_json(const Multilinear& f, std::size_t depth, std::size_t flat) {
    Json out = Json::array();
    const auto& in = f.in_dims();
    if (depth == in.size()) {
        for (std::size_t o = 0; o < f.out_dim(); ++o) out.push_back(rational_json(f.matrix()(o, flat)));
        return out;
    }
    for (std::size_t i = 0; i < in[depth]; ++i) out.push_back(tensor_json(f, depth + 1, flat * in[depth] + i));
    return out;
}

class Resolver {
public:
    Resolver(StructureFile& f, const Json& decl, std::string path) : f_(f), decl_(decl), path_(std::move(path)) {}

    std::string name(const std::string& key) const { return string_field(decl_, key, path_); }
    bool has(const std::string& key) const { return decl_.contains(key); }

    const Space& space(const std::string& key) const {
        std::string n = name(key);
        auto it = f_.spaces.find(n);
        if (it == f_.spaces.end()) fail(path_ + "." + key, "unknown space '" + n + "'");
        return it->second;
    }

    Multilinear map(const std::string& key, const std::vector<std::string>& from, const std::string& to) const {
        std::string n = name(key);
        auto it = f_.maps.find(n);
        if (it == f_.maps.end()) fail(path_ + "." + key, "unknown map '" + n + "'");
        if (it->second.from != from || it->second.to != to) {
            std::string want = "(";
            for (std::size_t i = 0; i < from.size(); ++i) want += (i ? ", " : "") + from[i];
            want += ") -> " + to;
            shape_fail(path_ + "." + key, "map '" + n + "' must have spaces " + want);
        }
        return it->second.value;
    }

    LinearMap linear(const std::string& key, const std::string& from, const std::string& to) const {
        return map(key, {from}, to).matrix();
    }

    template <class M>
    const auto& lookup(const M& table, const std::string& key, const char* kind) const {
        std::string n = name(key);
        auto it = table.find(n);
        if (it == table.end()) fail(path_ + "." + key, std::string("unknown ") + kind + " '" + n + "'");
        return it->second;
    }

private:
    StructureFile& f_;
    const Json& decl_;
    std::string path_;
};

const std::string& algebra_space(const StructureFile& f, const std::string& algebra) {
    return f.algebras.at(algebra).space;
}

void parse_decl(StructureFile& f, const Json& d, const std::string& path) {
    const std::string type = string_field(d, "type", path);
    const std::string name = string_field(d, "name", path);
    Resolver r(f, d, path);
    if (type == "assoc_algebra") {
        std::string s = r.name("space");
        const Space& sp = r.space("space");
        f.algebras[name] = {s, AssocAlgebra(r.map("mu", {s, s}, s), sp.basis_names)};
    } else if (type == "bimodule") {
        const auto& a = r.lookup(f.algebras, "algebra", "assoc_algebra");
        std::string s = r.name("space");
        const Space& sp = r.space("space");
        f.bimodules[name] = {r.name("algebra"), s,
                             Bimodule(r.map("left", {a.space, s}, s), r.map("right", {s, a.space}, s), sp.basis_names)};
    } else if (type == "rrb_algebra") {
        const auto& m = r.lookup(f.bimodules, "bimodule", "bimodule");
        const auto& a = f.algebras.at(m.algebra);
        f.rrb_algebras[name] = {r.name("bimodule"),
                                RelativeRBAlgebra(a.value, m.value, r.linear("R", m.space, a.space))};
    } else if (type == "rrb_bimodule") {
        const auto& x = r.lookup(f.rrb_algebras, "over", "rrb_algebra");
        const auto& mdecl = f.bimodules.at(x.bimodule);
        const auto& bdecl = r.lookup(f.bimodules, "B", "bimodule");
        const auto& ndecl = r.lookup(f.bimodules, "N", "bimodule");
        if (bdecl.algebra != mdecl.algebra || ndecl.algebra != mdecl.algebra) {
            fail(path, "B and N must be bimodules over the algebra of '" + r.name("over") + "'");
        }
        const std::string &M = mdecl.space, &B = bdecl.space, &N = ndecl.space;
        f.rrb_bimodules[name] = {r.name("over"), r.name("B"), r.name("N"),
                                 RRBBimodule(x.value, bdecl.value, ndecl.value, r.linear("S", N, B),
                                             r.map("l", {M, B}, N), r.map("r", {B, M}, N))};
    } else if (type == "dendriform") {
        std::string s = r.name("space");
        r.space("space");
        f.dendriforms[name] = {s, DendriformAlgebra(r.map("prec", {s, s}, s), r.map("succ", {s, s}, s))};
    } else if (type == "dendriform_rep") {
        const auto& dd = r.lookup(f.dendriforms, "dendriform", "dendriform");
        std::string e = r.name("space");
        r.space("space");
        const std::string& D = dd.space;
        f.dendriform_reps[name] = {
            r.name("dendriform"), e,
            DendriformRepresentation(r.map("prec_left", {D, e}, e), r.map("succ_left", {D, e}, e),
                                     r.map("prec_right", {e, D}, e), r.map("succ_right", {e, D}, e))};
    } else if (type == "r_matrix") {
        const auto& a = r.lookup(f.algebras, "algebra", "assoc_algebra");
        const std::size_t n = a.value.dim();
        RMatrixDecl rd{r.name("algebra"), "", RMatrix{a.value, matrix_value(field(d, "r", path), n, n, path + ".r")}};
        if (r.has("bimodule")) {
            const auto& m = r.lookup(f.bimodules, "bimodule", "bimodule");
            if (m.algebra != rd.algebra) fail(path + ".bimodule", "must be a bimodule over '" + rd.algebra + "'");
            rd.bimodule = r.name("bimodule");
        }
        f.r_matrices[name] = std::move(rd);
    } else if (type == "two_term_ainfty") {
        std::string A0 = r.name("A0"), A1 = r.name("A1");
        TwoTermAInfty t;
        t.dim0 = r.space("A0").dim;
        t.dim1 = r.space("A1").dim;
        t.d = r.linear("d", A1, A0);
        t.mu00 = r.map("mu2_00", {A0, A0}, A0);
        t.mu01 = r.map("mu2_01", {A0, A1}, A1);
        t.mu10 = r.map("mu2_10", {A1, A0}, A1);
        t.mu3 = r.map("mu3", {A0, A0, A0}, A1);
        f.two_terms[name] = {A0, A1, std::move(t)};
    } else if (type == "ainfty_bimodule") {
        const auto& a = r.lookup(f.two_terms, "algebra", "two_term_ainfty");
        const std::string &A0 = a.A0, &A1 = a.A1;
        std::string M0 = r.name("M0"), M1 = r.name("M1");
        AInftyBimodule m;
        m.dim0 = r.space("M0").dim;
        m.dim1 = r.space("M1").dim;
        m.d = r.linear("d", M1, M0);
        m.a0m0 = r.map("mu2_a0m0", {A0, M0}, M0);
        m.a0m1 = r.map("mu2_a0m1", {A0, M1}, M1);
        m.a1m0 = r.map("mu2_a1m0", {A1, M0}, M1);
        m.m0a0 = r.map("mu2_m0a0", {M0, A0}, M0);
        m.m1a0 = r.map("mu2_m1a0", {M1, A0}, M1);
        m.m0a1 = r.map("mu2_m0a1", {M0, A1}, M1);
        m.mu3_maa = r.map("mu3_maa", {M0, A0, A0}, M1);
        m.mu3_ama = r.map("mu3_ama", {A0, M0, A0}, M1);
        m.mu3_aam = r.map("mu3_aam", {A0, A0, M0}, M1);
        f.ainfty_bimodules[name] = {r.name("algebra"), M0, M1, std::move(m)};
    } else if (type == "homotopy_rrb") {
        const auto& a = r.lookup(f.two_terms, "algebra", "two_term_ainfty");
        const auto& m = r.lookup(f.ainfty_bimodules, "module", "ainfty_bimodule");
        if (m.algebra != r.name("algebra")) fail(path + ".module", "must be a bimodule over '" + r.name("algebra") + "'");
        HomotopyRRBOperator op{r.linear("R0", m.M0, a.A0), r.linear("R1", m.M1, a.A1),
                               r.map("R2", {m.M0, m.M0}, a.A1)};
        f.homotopy_rrbs[name] = {r.name("algebra"), r.name("module"), std::move(op)};
    } else if (type == "extension") {
        const auto& base = r.lookup(f.rrb_algebras, "base", "rrb_algebra");
        const auto& total = r.lookup(f.rrb_algebras, "total", "rrb_algebra");
        const auto& bm = f.bimodules.at(base.bimodule);
        const auto& tm = f.bimodules.at(total.bimodule);
        const std::string &A = algebra_space(f, bm.algebra), &M = bm.space;
        const std::string &TA = algebra_space(f, tm.algebra), &TM = tm.space;
        std::string B = r.name("B"), N = r.name("N");
        AbelianExtension e;
        e.base = base.value;
        e.total = total.value;
        e.dim_b = r.space("B").dim;
        e.dim_n = r.space("N").dim;
        e.S = r.linear("S", N, B);
        e.i = r.linear("i", B, TA);
        e.ibar = r.linear("ibar", N, TM);
        e.p = r.linear("p", TA, A);
        e.pbar = r.linear("pbar", TM, M);
        f.extensions[name] = {r.name("base"), r.name("total"), std::move(e)};
    } else if (type == "cocycle") {
        const auto& b = r.lookup(f.rrb_bimodules, "bimodule", "rrb_bimodule");
        const Json& deg = field(d, "degree", path);
        const std::size_t k = size_value(deg, path + ".degree");
        if (k == 0) fail(path + ".degree", "degree must be at least 1");
        const auto& x = b.value.over;
        RRBCochain c = RRBCochain::zero(x, b.value, k);
        auto read = [&](Multilinear& comp, const Json& v, const std::string& p) {
            comp.matrix() = matrix_value(v, comp.matrix().rows(), comp.matrix().cols(), p);
        };
        read(c.alpha, field(d, "alpha", path), path + ".alpha");
        const Json& beta = field(d, "beta", path);
        if (!beta.is_array() || beta.size() != k) shape_fail(path + ".beta", "expected " + std::to_string(k) + " components");
        for (std::size_t s = 0; s < k; ++s) read(c.beta[s], beta[s], path + ".beta[" + std::to_string(s) + "]");
        if (k >= 2) {
            read(c.gamma, field(d, "gamma", path), path + ".gamma");
        } else if (d.contains("gamma")) {
            fail(path + ".gamma", "a degree-1 cochain has no gamma component");
        }
        f.cocycles[name] = {r.name("bimodule"), std::move(c)};
    } else if (type == "section") {
        const auto& e = r.lookup(f.extensions, "extension", "extension");
        const auto& bm = f.bimodules.at(f.rrb_algebras.at(e.base).bimodule);
        const auto& tm = f.bimodules.at(f.rrb_algebras.at(e.total).bimodule);
        Section s{r.linear("s", algebra_space(f, bm.algebra), algebra_space(f, tm.algebra)),
                  r.linear("sbar", bm.space, tm.space)};
        f.sections[name] = {r.name("extension"), std::move(s)};
    } else {
        fail(path + ".type", "unknown declaration type '" + type + "'");
    }
    f.order.emplace_back(type, name);
}

}  // namespace

StructureFile parse_structure(const Json& doc) {
    if (!doc.is_object()) fail("<root>", "expected a JSON object");
    const Json& fieldv = field(doc, "field", "<root>");
    if (!fieldv.is_string() || fieldv.get<std::string>() != "Q") fail("field", "only the field \"Q\" is supported");
    for (const auto& [key, _] : doc.items()) {
        static const std::set<std::string> known{"field", "spaces", "bilinear", "multilinear", "linear", "declare"};
        if (!known.contains(key)) fail(key, "unknown top-level key");
    }

    StructureFile f;
    if (doc.contains("spaces")) {
        const Json& spaces = doc["spaces"];
        if (!spaces.is_object()) fail("spaces", "expected an object");
        for (const auto& [name, v] : spaces.items()) {
            const std::string p = "spaces." + name;
            Space s;
            s.dim = size_value(field(v, "dim", p), p + ".dim");
            if (v.contains("basis_names")) {
                const Json& names = v["basis_names"];
                if (!names.is_array() || names.size() != s.dim) shape_fail(p + ".basis_names", "expected dim names");
                for (const auto& n : names) {
                    if (!n.is_string()) fail(p + ".basis_names", "expected strings");
                    s.basis_names.push_back(n.get<std::string>());
                }
            }
            f.spaces[name] = std::move(s);
        }
    }
    auto space_dim = [&](const Json& v, const std::string& p) {
        if (!v.is_string()) fail(p, "expected a space name");
        auto it = f.spaces.find(v.get<std::string>());
        if (it == f.spaces.end()) fail(p, "unknown space '" + v.get<std::string>() + "'");
        return it->second.dim;
    };
    auto add_map = [&](const std::string& name, NamedMap m, const std::string& p) {
        if (f.maps.contains(name)) fail(p, "duplicate map name '" + name + "'");
        f.maps[name] = std::move(m);
    };
    for (const char* section : {"bilinear", "multilinear"}) {
        if (!doc.contains(section)) continue;
        const Json& maps = doc[section];
        if (!maps.is_object()) fail(section, "expected an object");
        for (const auto& [name, v] : maps.items()) {
            const std::string p = std::string(section) + "." + name;
            const Json& from = field(v, "from", p);
            if (!from.is_array()) fail(p + ".from", "expected a list of spaces");
            if (std::string(section) == "bilinear" && from.size() != 2) shape_fail(p + ".from", "expected two spaces");
            NamedMap m;
            std::vector<std::size_t> dims;
            for (std::size_t i = 0; i < from.size(); ++i) {
                dims.push_back(space_dim(from[i], p + ".from[" + std::to_string(i) + "]"));
                m.from.push_back(from[i].get<std::string>());
            }
            m.to = string_field(v, "to", p);
            m.value = Multilinear(space_dim(v["to"], p + ".to"), dims);
            tensor_value(field(v, "tensor", p), m.value, 0, 0, p + ".tensor");
            add_map(name, std::move(m), p);
        }
    }
    if (doc.contains("linear")) {
        const Json& maps = doc["linear"];
        if (!maps.is_object()) fail("linear", "expected an object");
        for (const auto& [name, v] : maps.items()) {
            const std::string p = "linear." + name;
            NamedMap m;
            m.from = {string_field(v, "from", p)};
            m.to = string_field(v, "to", p);
            std::size_t cols = space_dim(v["from"], p + ".from"), rows = space_dim(v["to"], p + ".to");
            m.value = Multilinear(rows, {cols}, matrix_value(field(v, "matrix", p), rows, cols, p + ".matrix"));
            add_map(name, std::move(m), p);
        }
    }
    if (doc.contains("declare")) {
        const Json& decls = doc["declare"];
        if (!decls.is_array()) fail("declare", "expected a list");
        std::set<std::string> names;
        for (std::size_t i = 0; i < decls.size(); ++i) {
            const std::string p = "declare[" + std::to_string(i) + "]";
            const std::string name = string_field(decls[i], "name", p);
            if (!names.insert(name).second) fail(p + ".name", "duplicate declaration '" + name + "'");
            parse_decl(f, decls[i], p);
        }
    }
    return f;
}

StructureFile parse_structure_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_structure(doc);
}

StructureFile parse_structure_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_structure_text(ss.str());
    } catch (const ShapeError& e) {
        throw ShapeError(path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json rational_json(const Rational& q) { return q.str(); }

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json cochain_json(const RRBCochain& c) {
    Json out;
    out["degree"] = c.k;
    out["alpha"] = matrix_json(c.alpha.matrix());
    Json beta = Json::array();
    for (const auto& b : c.beta) beta.push_back(matrix_json(b.matrix()));
    out["beta"] = std::move(beta);
    if (c.k >= 2) out["gamma"] = matrix_json(c.gamma.matrix());
    return out;
}

std::string FileWriter::space(const std::string& name, std::size_t dim, const std::vector<std::string>& basis_names) {
    if (spaces_.contains(name)) throw InternalError("duplicate space " + name);
    Json s;
    s["dim"] = dim;
    if (!basis_names.empty()) s["basis_names"] = basis_names;
    spaces_[name] = std::move(s);
    return name;
}

std::string FileWriter::map(const std::string& name, const std::vector<std::string>& from, const std::string& to,
                            const Multilinear& value) {
    if (bilinear_.contains(name) || multilinear_.contains(name) || linear_.contains(name)) {
        throw InternalError("duplicate map " + name);
    }
    if (from.size() == 1) return linear(name, from[0], to, value.matrix());
    Json m;
    m["from"] = from;
    m["to"] = to;
    m["tensor"] = tensor_json(value, 0, 0);
    (from.size() == 2 ? bilinear_ : multilinear_)[name] = std::move(m);
    return name;
}

std::string FileWriter::linear(const std::string& name, const std::string& from, const std::string& to,
                               const LinearMap& value) {
    Json m;
    m["from"] = from;
    m["to"] = to;
    m["matrix"] = matrix_json(value);
    linear_[name] = std::move(m);
    return name;
}

void FileWriter::declare(Json decl) { declare_.push_back(std::move(decl)); }

const std::string& FileWriter::space_of_algebra(const std::string& algebra) const { return algebra_space_.at(algebra); }

std::string FileWriter::algebra(const std::string& name, const AssocAlgebra& a) {
    std::string s = space(name, a.dim(), a.basis_names);
    std::string mu = map(name + ".mu", {s, s}, s, a.mu);
    declare({{"type", "assoc_algebra"}, {"name", name}, {"space", s}, {"mu", mu}});
    algebra_space_[name] = s;
    return name;
}

std::string FileWriter::bimodule(const std::string& name, const std::string& algebra, const Bimodule& m) {
    const std::string& a = space_of_algebra(algebra);
    std::string s = space(name, m.dim(), m.basis_names);
    std::string l = map(name + ".left", {a, s}, s, m.left);
    std::string r = map(name + ".right", {s, a}, s, m.right);
    declare({{"type", "bimodule"}, {"name", name}, {"algebra", algebra}, {"space", s}, {"left", l}, {"right", r}});
    bimodule_space_[name] = s;
    return name;
}

WrittenRRB FileWriter::rrb_algebra(const std::string& name, const RelativeRBAlgebra& x) {
    WrittenRRB w;
    w.algebra = algebra(name + ".A", x.algebra);
    w.A = space_of_algebra(w.algebra);
    w.bimodule = bimodule(name + ".M", w.algebra, x.module);
    w.M = bimodule_space_.at(w.bimodule);
    std::string r = linear(name + ".R", w.M, w.A, x.R);
    declare({{"type", "rrb_algebra"}, {"name", name}, {"bimodule", w.bimodule}, {"R", r}});
    w.rrb = name;
    return w;
}

WrittenBimodule FileWriter::rrb_bimodule(const std::string& name, const RRBBimodule& b) {
    WrittenBimodule w;
    w.over = rrb_algebra(name + ".base", b.over);
    w.B = bimodule(name + ".B", w.over.algebra, b.B);
    w.N = bimodule(name + ".N", w.over.algebra, b.N);
    w.Bspace = bimodule_space_.at(w.B);
    w.Nspace = bimodule_space_.at(w.N);
    std::string s = linear(name + ".S", w.Nspace, w.Bspace, b.S);
    std::string l = map(name + ".l", {w.over.M, w.Bspace}, w.Nspace, b.l);
    std::string r = map(name + ".r", {w.Bspace, w.over.M}, w.Nspace, b.r);
    declare({{"type", "rrb_bimodule"}, {"name", name}, {"over", w.over.rrb}, {"B", w.B}, {"N", w.N}, {"S", s},
             {"l", l}, {"r", r}});
    w.rrb_bimodule = name;
    return w;
}

std::string FileWriter::cocycle(const std::string& name, const std::string& rrb_bimodule, const RRBCochain& c) {
    Json d{{"type", "cocycle"}, {"name", name}, {"bimodule", rrb_bimodule}};
    Json body = cochain_json(c);
    for (auto& [k, v] : body.items()) d[k] = v;
    declare(std::move(d));
    return name;
}

std::string FileWriter::extension(const std::string& name, const AbelianExtension& e) {
    WrittenRRB base = rrb_algebra(name + ".base", e.base);
    WrittenRRB total = rrb_algebra(name + ".total", e.total);
    std::string B = space(name + ".B", e.dim_b);
    std::string N = space(name + ".N", e.dim_n);
    declare({{"type", "extension"},
             {"name", name},
             {"base", base.rrb},
             {"total", total.rrb},
             {"B", B},
             {"N", N},
             {"S", linear(name + ".S", N, B, e.S)},
             {"i", linear(name + ".i", B, total.A, e.i)},
             {"ibar", linear(name + ".ibar", N, total.M, e.ibar)},
             {"p", linear(name + ".p", total.A, base.A, e.p)},
             {"pbar", linear(name + ".pbar", total.M, base.M, e.pbar)}});
    return name;
}

std::string FileWriter::skeletal(const std::string& name, const SkeletalData& s) {
    const auto& a = s.algebra;
    const auto& m = s.module;
    std::string A0 = space(name + ".A0", a.dim0), A1 = space(name + ".A1", a.dim1);
    std::string M0 = space(name + ".M0", m.dim0), M1 = space(name + ".M1", m.dim1);
    const std::string alg = name + ".algebra", mod = name + ".module";
    declare({{"type", "two_term_ainfty"},
             {"name", alg},
             {"A0", A0},
             {"A1", A1},
             {"d", linear(alg + ".d", A1, A0, a.d)},
             {"mu2_00", map(alg + ".mu2_00", {A0, A0}, A0, a.mu00)},
             {"mu2_01", map(alg + ".mu2_01", {A0, A1}, A1, a.mu01)},
             {"mu2_10", map(alg + ".mu2_10", {A1, A0}, A1, a.mu10)},
             {"mu3", map(alg + ".mu3", {A0, A0, A0}, A1, a.mu3)}});
    declare({{"type", "ainfty_bimodule"},
             {"name", mod},
             {"algebra", alg},
             {"M0", M0},
             {"M1", M1},
             {"d", linear(mod + ".d", M1, M0, m.d)},
             {"mu2_a0m0", map(mod + ".mu2_a0m0", {A0, M0}, M0, m.a0m0)},
             {"mu2_a0m1", map(mod + ".mu2_a0m1", {A0, M1}, M1, m.a0m1)},
             {"mu2_a1m0", map(mod + ".mu2_a1m0", {A1, M0}, M1, m.a1m0)},
             {"mu2_m0a0", map(mod + ".mu2_m0a0", {M0, A0}, M0, m.m0a0)},
             {"mu2_m1a0", map(mod + ".mu2_m1a0", {M1, A0}, M1, m.m1a0)},
             {"mu2_m0a1", map(mod + ".mu2_m0a1", {M0, A1}, M1, m.m0a1)},
             {"mu3_maa", map(mod + ".mu3_maa", {M0, A0, A0}, M1, m.mu3_maa)},
             {"mu3_ama", map(mod + ".mu3_ama", {A0, M0, A0}, M1, m.mu3_ama)},
             {"mu3_aam", map(mod + ".mu3_aam", {A0, A0, M0}, M1, m.mu3_aam)}});
    declare({{"type", "homotopy_rrb"},
             {"name", name},
             {"algebra", alg},
             {"module", mod},
             {"R0", linear(name + ".R0", M0, A0, s.op.R0)},
             {"R1", linear(name + ".R1", M1, A1, s.op.R1)},
             {"R2", map(name + ".R2", {M0, M0}, A1, s.op.R2)}});
    return name;
}

Json FileWriter::document() const {
    Json doc;
    doc["field"] = "Q";
    doc["spaces"] = spaces_;
    doc["bilinear"] = bilinear_;
    doc["multilinear"] = multilinear_;
    doc["linear"] = linear_;
    doc["declare"] = declare_;
    return doc;
}

}  // namespace rrb::cli
