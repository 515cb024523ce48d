#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "rrb/error.hpp"
#include "rrb/linalg.hpp"
#include "structure_file.hpp"

namespace rrb::cli {

namespace {

struct Options {
    std::string file;
    std::string format = "text";
    std::string output;
    std::string cocycle;
    std::string section;
    std::size_t max_degree = 3;
    std::size_t degree_cap = 4;
    std::size_t degree = 1;
    std::size_t trials = 10;
    unsigned seed = 0;
    bool timing = false;
};

struct Entry {
    std::string subject;
    std::string check;
    Report report;
    std::optional<double> millis;
};

/// Collected results of one command.
class Output {
public:
    explicit Output(const Options& opt) : opt_(opt) {}

    void check(const std::string& subject, const std::string& check, const std::function<Report()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        try {
            rep = f();
        } catch (const PreconditionError& e) {
            rep.add(e.what(), {}, {}, {});
        }
        std::optional<double> ms;
        if (opt_.timing) {
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
        entries_.push_back({subject, check, std::move(rep), ms});
    }

    void line(const std::string& text) { lines_.push_back(text); }
    Json& result(const std::string& key) { return results_[key]; }

    bool ok() const {
        for (const auto& e : entries_) {
            if (!e.report.ok()) return false;
        }
        return true;
    }

    void print(const std::string& command, std::ostream& out) const {
        if (opt_.format == "json") {
            Json doc;
            doc["command"] = command;
            doc["ok"] = ok();
            Json checks = Json::array();
            for (const auto& e : entries_) {
                Json c;
                c["subject"] = e.subject;
                c["check"] = e.check;
                c["ok"] = e.report.ok();
                Json vs = Json::array();
                for (const auto& v : e.report.violations()) {
                    Json j;
                    j["identity"] = v.identity;
                    j["tuple"] = v.tuple;
                    Json lhs = Json::array(), rhs = Json::array();
                    for (const auto& q : v.lhs) lhs.push_back(rational_json(q));
                    for (const auto& q : v.rhs) rhs.push_back(rational_json(q));
                    j["lhs"] = std::move(lhs);
                    j["rhs"] = std::move(rhs);
                    vs.push_back(std::move(j));
                }
                c["violations"] = std::move(vs);
                if (e.millis) c["millis"] = *e.millis;
                checks.push_back(std::move(c));
            }
            doc["checks"] = std::move(checks);
            doc["results"] = results_.is_null() ? Json::object() : results_;
            out << doc.dump(2) << "\n";
            return;
        }
        for (const auto& l : lines_) out << l << "\n";
        for (const auto& e : entries_) {
            out << (e.report.ok() ? "PASS " : "FAIL ") << e.subject << ": " << e.check;
            if (e.millis) out << " (" << *e.millis << " ms)";
            out << "\n";
            if (!e.report.ok()) {
                std::istringstream body(e.report.str(5));
                for (std::string l; std::getline(body, l);) out << "  " << l << "\n";
            }
        }
    }

private:
    const Options& opt_;
    std::vector<Entry> entries_;
    std::vector<std::string> lines_;
    Json results_;
};

[[noreturn]] void input_error(const std::string& what) { throw ParseError(what); }

Report cocycle_report(const RelativeRBAlgebra& x, const RRBBimodule& b, const RRBCochain& c) {
    Report rep;
    RRBCochain d = rrb_differential(x, b, c);
    if (!d.alpha.is_zero()) rep.add("delta_AB alpha = 0", {}, d.alpha.matrix().flatten(), Vec(d.alpha.matrix().flatten().size()));
    for (std::size_t s = 0; s < d.beta.size(); ++s) {
        if (!d.beta[s].is_zero()) {
            rep.add("delta^alpha beta = 0 (slot " + std::to_string(s) + ")", {}, d.beta[s].matrix().flatten(),
                    Vec(d.beta[s].matrix().flatten().size()));
        }
    }
    const std::string g = c.k >= 2 ? "delta_MB gamma + h_R(alpha, beta) = 0" : "h_R(alpha, beta) = 0";
    if (!d.gamma.is_zero()) rep.add(g, {}, d.gamma.matrix().flatten(), Vec(d.gamma.matrix().flatten().size()));
    return rep;
}

Report equality_report(const std::string& name, bool equal) {
    Report rep;
    if (!equal) rep.add(name, {}, {}, {});
    return rep;
}

void validate_all(const StructureFile& f, const Options&, Output& out) {
    for (const auto& [type, name] : f.order) {
        const std::string subject = type + " " + name;
        if (type == "assoc_algebra") {
            out.check(subject, "associativity", [&] { return check_associativity(f.algebras.at(name).value); });
        } else if (type == "bimodule") {
            const auto& m = f.bimodules.at(name);
            out.check(subject, "bimodule identities",
                      [&] { return check_bimodule(f.algebras.at(m.algebra).value, m.value); });
        } else if (type == "rrb_algebra") {
            out.check(subject, "relative Rota-Baxter identity",
                      [&] { return check_relative_rb(f.rrb_algebras.at(name).value); });
        } else if (type == "rrb_bimodule") {
            out.check(subject, "pairing and operator identities",
                      [&] { return check_rrb_bimodule(f.rrb_bimodules.at(name).value); });
        } else if (type == "dendriform") {
            out.check(subject, "dendriform axioms", [&] { return check_dendriform(f.dendriforms.at(name).value); });
        } else if (type == "dendriform_rep") {
            const auto& e = f.dendriform_reps.at(name);
            out.check(subject, "representation identities", [&] {
                return check_dendriform_representation(f.dendriforms.at(e.dendriform).value, e.value);
            });
        } else if (type == "r_matrix") {
            const auto& r = f.r_matrices.at(name);
            Report aybe = aybe_check(r.value);
            out.check(subject, "associative Yang-Baxter equation", [&] { return aybe; });
            if (!aybe.ok()) continue;
            auto [alg, op] = rb_from_r_matrix(r.value);
            out.check(subject, "induced Rota-Baxter operator", [&] { return check_rota_baxter(alg, op); });
            if (!r.bimodule.empty()) {
                const Bimodule& m = f.bimodules.at(r.bimodule).value;
                out.check(subject, "induced Rota-Baxter bimodule operator on " + r.bimodule,
                          [&] { return check_rb_bimodule(alg, op, m, rb_bimodule_from_r_matrix(r.value, m)); });
            }
        } else if (type == "two_term_ainfty") {
            out.check(subject, "2-term A-infinity identities",
                      [&] { return check_two_term_ainfty(f.two_terms.at(name).value); });
        } else if (type == "ainfty_bimodule") {
            const auto& m = f.ainfty_bimodules.at(name);
            out.check(subject, "A-infinity bimodule identities",
                      [&] { return check_ainfty_bimodule(f.two_terms.at(m.algebra).value, m.value); });
        } else if (type == "homotopy_rrb") {
            const auto& h = f.homotopy_rrbs.at(name);
            out.check(subject, "homotopy relative Rota-Baxter conditions", [&] {
                return check_homotopy_rrb_operator(f.two_terms.at(h.algebra).value,
                                                   f.ainfty_bimodules.at(h.module).value, h.value);
            });
        } else if (type == "extension") {
            out.check(subject, "exactness and morphisms", [&] { return check_extension(f.extensions.at(name).value); });
        } else if (type == "cocycle") {
            const auto& c = f.cocycles.at(name);
            const auto& b = f.rrb_bimodules.at(c.bimodule).value;
            out.check(subject, "cocycle condition", [&] { return cocycle_report(b.over, b, c.value); });
        } else if (type == "section") {
            const auto& s = f.sections.at(name);
            out.check(subject, "p s = id, pbar sbar = id",
                      [&] { return check_section(f.extensions.at(s.extension).value, s.value); });
        }
    }
}

void require_any(bool any, const std::string& what) {
    if (!any) input_error("the file declares no " + what);
}

void write_output(const Options& opt, const FileWriter& w) {
    std::ofstream o(opt.output);
    if (!o) input_error("cannot write " + opt.output);
    o << w.document().dump(2) << "\n";
}

void check_degree(const Options& opt, std::size_t k) {
    if (k > opt.degree_cap) {
        input_error("degree " + std::to_string(k) + " exceeds the cap " + std::to_string(opt.degree_cap) +
                    " (raise it with --degree-cap)");
    }
}

void cmd_cohomology(const StructureFile& f, const Options& opt, Output& out) {
    check_degree(opt, opt.max_degree);
    std::set<std::string> covered;
    auto report = [&](const std::string& label, const RelativeRBAlgebra& x, const RRBBimodule& b) {
        Json dims = Json::object();
        for (std::size_t k = 1; k <= opt.max_degree; ++k) {
            std::size_t h = rrb_cohomology_dim(x, b, k);
            out.line(label + ": H^" + std::to_string(k) + " = " + std::to_string(h));
            dims[std::to_string(k)] = h;
        }
        out.result(label) = std::move(dims);
    };
    for (const auto& [name, b] : f.rrb_bimodules) covered.insert(b.over);
    for (const auto& [type, name] : f.order) {
        if (type == "rrb_bimodule") {
            const auto& b = f.rrb_bimodules.at(name).value;
            out.check("rrb_bimodule " + name, "structure", [&] {
                Report rep = check_relative_rb_full(b.over);
                rep.merge(check_rrb_bimodule_full(b));
                return rep;
            });
            report(name, b.over, b);
        } else if (type == "rrb_algebra" && !covered.contains(name)) {
            const auto& x = f.rrb_algebras.at(name).value;
            out.check("rrb_algebra " + name, "structure", [&] { return check_relative_rb_full(x); });
            report(name + " (adjoint)", x, adjoint_bimodule(x));
        }
    }
    require_any(!f.rrb_bimodules.empty() || !f.rrb_algebras.empty(), "rrb_algebra or rrb_bimodule");
}

void cmd_hochschild(const StructureFile& f, const Options& opt, Output& out) {
    check_degree(opt, opt.max_degree);
    std::set<std::string> covered;
    for (const auto& [name, m] : f.bimodules) covered.insert(m.algebra);
    auto report = [&](const std::string& label, const AssocAlgebra& a, const Bimodule& m) {
        Json dims = Json::object();
        for (std::size_t k = 0; k <= opt.max_degree; ++k) {
            std::size_t h = hochschild_cohomology_dim(a, m, k);
            out.line(label + ": HH^" + std::to_string(k) + " = " + std::to_string(h));
            dims[std::to_string(k)] = h;
        }
        out.result(label) = std::move(dims);
    };
    for (const auto& [type, name] : f.order) {
        if (type == "bimodule") {
            const auto& m = f.bimodules.at(name);
            const auto& a = f.algebras.at(m.algebra).value;
            out.check("bimodule " + name, "structure", [&] {
                Report rep = check_associativity(a);
                rep.merge(check_bimodule(a, m.value));
                return rep;
            });
            report(name, a, m.value);
        } else if (type == "assoc_algebra" && !covered.contains(name)) {
            const auto& a = f.algebras.at(name).value;
            out.check("assoc_algebra " + name, "associativity", [&] { return check_associativity(a); });
            report(name + " (adjoint)", a, Bimodule::adjoint(a));
        }
    }
    require_any(!f.algebras.empty(), "assoc_algebra");
}

void cmd_derivations(const StructureFile& f, const Options&, Output& out) {
    require_any(!f.rrb_bimodules.empty() || !f.rrb_algebras.empty(), "rrb_algebra or rrb_bimodule");
    std::set<std::string> covered;
    for (const auto& [name, b] : f.rrb_bimodules) covered.insert(b.over);
    auto report = [&](const std::string& label, const std::string& subject, const RRBBimodule& b) {
        auto basis = derivation_basis(b.over, b);
        out.line(label + ": dim Z^1 = " + std::to_string(basis.size()));
        Json list = Json::array();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Json c = cochain_json(basis[i]);
            out.line("  [" + std::to_string(i) + "] " + c.dump());
            list.push_back(std::move(c));
            out.check(subject, "derivation [" + std::to_string(i) + "]",
                      [&] { return check_derivation(b.over, b, basis[i]); });
        }
        out.check(subject, "basis length = dim ker delta^1", [&] {
            std::size_t nullity = cochain_space_dims(b.over, b, 1).total() - rank(rrb_operator(b.over, b, 1));
            return equality_report("basis length = dim ker delta^1", nullity == basis.size());
        });
        out.result(label) = std::move(list);
    };
    for (const auto& [type, name] : f.order) {
        if (type == "rrb_bimodule") {
            report(name, "rrb_bimodule " + name, f.rrb_bimodules.at(name).value);
        } else if (type == "rrb_algebra" && !covered.contains(name)) {
            report(name + " (adjoint)", "rrb_algebra " + name, adjoint_bimodule(f.rrb_algebras.at(name).value));
        }
    }
}

void cmd_semidirect(const StructureFile& f, const Options& opt, Output& out) {
    require_any(!f.rrb_bimodules.empty(), "rrb_bimodule");
    FileWriter w;
    for (const auto& [type, name] : f.order) {
        if (type != "rrb_bimodule") continue;
        const auto& b = f.rrb_bimodules.at(name).value;
        RelativeRBAlgebra y = semidirect_rrb(b);
        out.check("rrb_bimodule " + name, "semidirect product is a relative Rota-Baxter algebra",
                  [&] { return check_relative_rb_full(y); });
        w.rrb_algebra(name + ".semidirect", y);
    }
    write_output(opt, w);
}

void cmd_dual(const StructureFile& f, const Options& opt, Output& out) {
    require_any(!f.rrb_bimodules.empty(), "rrb_bimodule");
    FileWriter w;
    for (const auto& [type, name] : f.order) {
        if (type != "rrb_bimodule") continue;
        const auto& b = f.rrb_bimodules.at(name).value;
        RRBBimodule d = dual_rrb_bimodule(b);
        out.check("rrb_bimodule " + name, "dual is a bimodule", [&] { return check_rrb_bimodule_full(d); });
        out.check("rrb_bimodule " + name, "double dual equals the input",
                  [&] { return equality_report("double dual equals the input", dual_rrb_bimodule(d) == b); });
        w.rrb_bimodule(name + ".dual", d);
    }
    write_output(opt, w);
}

void cmd_lift(const StructureFile& f, const Options& opt, Output& out) {
    require_any(!f.rrb_algebras.empty(), "rrb_algebra");
    FileWriter w;
    for (const auto& [type, name] : f.order) {
        if (type == "rrb_algebra") {
            LiftedRB l = lift_to_rb(f.rrb_algebras.at(name).value);
            out.check("rrb_algebra " + name, "lift is a Rota-Baxter algebra",
                      [&] { return check_rota_baxter(l.algebra, l.R); });
            w.rrb_algebra(name + ".lift", RelativeRBAlgebra::from_rota_baxter(l.algebra, l.R));
        } else if (type == "rrb_bimodule") {
            const auto& b = f.rrb_bimodules.at(name).value;
            std::optional<LiftedBimodule> lb;
            out.check("rrb_bimodule " + name, "lift is a Rota-Baxter bimodule", [&] {
                lb = lift_bimodule(b);
                return check_lifted(*lb);
            });
            if (lb) {
                w.rrb_bimodule(name + ".lift", rrb_bimodule_from_rb(lb->base.algebra, lb->base.R, lb->module, lb->S));
            }
        }
    }
    write_output(opt, w);
}

void cmd_dendriform(const StructureFile& f, const Options&, Output& out) {
    for (const auto& [type, name] : f.order) {
        const std::string subject = type + " " + name;
        if (type == "rrb_algebra") {
            const auto& x = f.rrb_algebras.at(name).value;
            InducedDendriform d = induced_dendriform(x);
            out.check(subject, "induced dendriform axioms", [&] { return check_dendriform(d.dendriform); });
            out.check(subject, "R is a morphism M_Tot -> A", [&] { return d.morphism; });
        } else if (type == "rrb_bimodule") {
            const auto& b = f.rrb_bimodules.at(name).value;
            out.check(subject, "induced representation identities", [&] {
                return check_dendriform_representation(induced_dendriform(b.over).dendriform,
                                                       induced_dendriform_representation(b));
            });
            out.check(subject, "M_Tot-bimodule identities on B",
                      [&] { return check_bimodule(mtot_algebra(b.over), mtot_action_bimodule(b)); });
        } else if (type == "dendriform") {
            const auto& d = f.dendriforms.at(name).value;
            out.check(subject, "dendriform axioms", [&] { return check_dendriform(d); });
            out.check(subject, "embedding into the hat algebra", [&] { return check_dendriform_embedding(d); });
        } else if (type == "dendriform_rep") {
            const auto& e = f.dendriform_reps.at(name);
            out.check(subject, "identity operators give a relative Rota-Baxter bimodule", [&] {
                auto [x, b] = dendriform_to_rrb(f.dendriforms.at(e.dendriform).value, e.value);
                Report rep = check_relative_rb_full(x);
                rep.merge(check_rrb_bimodule_full(b));
                return rep;
            });
        }
    }
}

void cmd_extend(const StructureFile& f, const Options& opt, Output& out) {
    auto it = f.cocycles.find(opt.cocycle);
    if (it == f.cocycles.end()) input_error("unknown cocycle '" + opt.cocycle + "'");
    const auto& b = f.rrb_bimodules.at(it->second.bimodule).value;
    std::optional<AbelianExtension> e;
    out.check("cocycle " + opt.cocycle, "extension", [&] {
        e = build_extension(b.over, b, it->second.value);
        return check_extension(*e);
    });
    if (!e) return;
    FileWriter w;
    const std::string name = opt.cocycle + ".extension";
    w.extension(name, *e);
    Section sec = canonical_section(*e);
    w.declare({{"type", "section"},
               {"name", name + ".section"},
               {"extension", name},
               {"s", w.linear(name + ".s", name + ".base.A", name + ".total.A", sec.s)},
               {"sbar", w.linear(name + ".sbar", name + ".base.M", name + ".total.M", sec.sbar)}});
    write_output(opt, w);
}

void cmd_extract(const StructureFile& f, const Options& opt, Output& out) {
    auto it = f.sections.find(opt.section);
    if (it == f.sections.end()) input_error("unknown section '" + opt.section + "'");
    const auto& e = f.extensions.at(it->second.extension).value;
    const Section& sec = it->second.value;
    const std::string subject = "section " + opt.section;
    Report valid = check_section(e, sec);
    out.check(subject, "p s = id, pbar sbar = id", [&] { return valid; });
    if (!valid.ok()) return;
    RRBBimodule b = induced_fiber_bimodule(e, sec);
    RRBCochain c = extract_cocycle(e, sec);
    out.check(subject, "induced fiber bimodule", [&] { return check_rrb_bimodule_full(b); });
    out.check(subject, "cocycle condition", [&] { return cocycle_report(b.over, b, c); });
    Json cj = cochain_json(c);
    out.line(opt.section + ": cocycle " + cj.dump());
    out.result("cocycle") = std::move(cj);
    if (!opt.output.empty()) {
        FileWriter w;
        w.rrb_bimodule(opt.section + ".fiber", b);
        w.cocycle(opt.section + ".cocycle", opt.section + ".fiber", c);
        write_output(opt, w);
    }
}

void cmd_skeletal_to_triple(const StructureFile& f, const Options& opt, Output& out) {
    require_any(!f.homotopy_rrbs.empty(), "homotopy_rrb");
    FileWriter w;
    for (const auto& [type, name] : f.order) {
        if (type != "homotopy_rrb") continue;
        const auto& h = f.homotopy_rrbs.at(name);
        SkeletalData s{f.two_terms.at(h.algebra).value, f.ainfty_bimodules.at(h.module).value, h.value};
        std::optional<Triple> t;
        out.check("homotopy_rrb " + name, "skeletal data gives a 3-cocycle triple", [&] {
            Report rep = check_two_term_ainfty(s.algebra);
            rep.merge(check_ainfty_bimodule(s.algebra, s.module));
            rep.merge(check_homotopy_rrb_operator(s.algebra, s.module, s.op));
            if (rep.ok()) t = skeletal_to_triple(s);
            return rep;
        });
        if (!t) continue;
        w.rrb_bimodule(name + ".triple", t->b);
        w.cocycle(name + ".triple.cocycle", name + ".triple", t->c);
    }
    write_output(opt, w);
}

void cmd_triple_to_skeletal(const StructureFile& f, const Options& opt, Output& out) {
    FileWriter w;
    bool any = false;
    for (const auto& [type, name] : f.order) {
        if (type != "cocycle" || f.cocycles.at(name).value.k != 3) continue;
        any = true;
        const auto& c = f.cocycles.at(name);
        const auto& b = f.rrb_bimodules.at(c.bimodule).value;
        std::optional<SkeletalData> s;
        out.check("cocycle " + name, "skeletal homotopy relative Rota-Baxter algebra", [&] {
            Report rep = check_relative_rb_full(b.over);
            rep.merge(check_rrb_bimodule_full(b));
            rep.merge(cocycle_report(b.over, b, c.value));
            if (!rep.ok()) return rep;
            s = triple_to_skeletal(b.over, b, c.value);
            rep.merge(check_two_term_ainfty(s->algebra));
            rep.merge(check_ainfty_bimodule(s->algebra, s->module));
            rep.merge(check_homotopy_rrb_operator(s->algebra, s->module, s->op));
            return rep;
        });
        if (s) w.skeletal(name + ".skeletal", *s);
    }
    require_any(any, "degree-3 cocycle");
    write_output(opt, w);
}

void cmd_chainmap(const StructureFile& f, const Options& opt, Output& out) {
    require_any(!f.rrb_bimodules.empty(), "rrb_bimodule");
    check_degree(opt, opt.degree + 1);
    if (opt.degree == 0) input_error("--degree must be at least 1");
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& [type, name] : f.order) {
        if (type != "rrb_bimodule") continue;
        const auto& b = f.rrb_bimodules.at(name).value;
        const auto& x = b.over;
        out.check("rrb_bimodule " + name,
                  "delta_D psi = psi delta_MB in degree " + std::to_string(opt.degree) + " over " +
                      std::to_string(opt.trials) + " trials",
                  [&] {
                      Report rep = check_relative_rb_full(x);
                      rep.merge(check_rrb_bimodule_full(b));
                      if (!rep.ok()) return rep;
                      const DendriformAlgebra d = induced_dendriform(x).dendriform;
                      const DendriformRepresentation e = induced_dendriform_representation(b);
                      const AssocAlgebra mtot = mtot_algebra(x);
                      const Bimodule act = mtot_action_bimodule(b);
                      for (std::size_t t = 0; t < opt.trials; ++t) {
                          Multilinear g(b.dim_b(), std::vector<std::size_t>(opt.degree, x.dim_m()));
                          for (std::size_t i = 0; i < g.matrix().rows(); ++i) {
                              for (std::size_t j = 0; j < g.matrix().cols(); ++j) g.matrix()(i, j) = coef(rng);
                          }
                          DendriformCochain lhs = dendriform_differential(d, e, psi_map(b, g));
                          DendriformCochain rhs = psi_map(b, hochschild_differential(mtot, act, g));
                          for (std::size_t s = 0; s < lhs.f.size(); ++s) {
                              if (lhs.f[s] != rhs.f[s]) {
                                  rep.add("trial " + std::to_string(t) + " label [" + std::to_string(s + 1) + "]", {},
                                          lhs.f[s].matrix().flatten(), rhs.f[s].matrix().flatten());
                              }
                          }
                      }
                      return rep;
                  });
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Relative Rota-Baxter algebras, bimodules, cohomology and extensions over Q", "rrbtool"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--degree-cap", opt.degree_cap, "Largest cochain degree any command may build");
    app.add_flag("--timing", opt.timing, "Add per-check timings to the report");
    app.fallthrough();

    using Handler = void (*)(const StructureFile&, const Options&, Output&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("FILE", opt.file, "Structure file")->required();
        commands.emplace_back(sub, h);
        return sub;
    };
    auto add_out = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("-o,--output", opt.output, "Output structure file");
        if (required) o->required();
    };
    add("validate", "Check every declared structure", validate_all);
    add("cohomology", "Cohomology dimensions of relative Rota-Baxter bimodules", cmd_cohomology)
        ->add_option("--max-degree", opt.max_degree, "Largest degree k");
    add("hochschild", "Hochschild cohomology dimensions", cmd_hochschild)
        ->add_option("--max-degree", opt.max_degree, "Largest degree k");
    add("derivations", "Basis of derivations", cmd_derivations);
    add_out(add("semidirect", "Semidirect product of each bimodule", cmd_semidirect), true);
    add_out(add("dual", "Dual of each bimodule", cmd_dual), true);
    add_out(add("lift", "Rota-Baxter lifts of algebras and bimodules", cmd_lift), true);
    add("dendriform", "Induced dendriform structures", cmd_dendriform);
    auto* extend = add("extend", "Abelian extension of a 2-cocycle", cmd_extend);
    extend->add_option("--cocycle", opt.cocycle, "Cocycle declaration")->required();
    add_out(extend, true);
    auto* extract = add("extract-cocycle", "Cocycle of an extension with respect to a section", cmd_extract);
    extract->add_option("--section", opt.section, "Section declaration")->required();
    add_out(extract, false);
    add_out(add("skeletal-to-triple", "3-cocycle triples of skeletal homotopy data", cmd_skeletal_to_triple), true);
    add_out(add("triple-to-skeletal", "Skeletal homotopy data of degree-3 cocycles", cmd_triple_to_skeletal), true);
    auto* chain = add("chainmap-check", "Randomized check that psi is a chain map", cmd_chainmap);
    chain->add_option("--degree", opt.degree, "Degree k of f: M^k -> B");
    chain->add_option("--trials", opt.trials, "Number of random cochains");
    chain->add_option("--seed", opt.seed, "Random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    for (const auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        Output result(opt);
        try {
            StructureFile f = parse_structure_file(opt.file);
            handler(f, opt, result);
        } catch (const ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        } catch (const ShapeError& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kCheckFailed;
        }
        result.print(sub->get_name(), out);
        return result.ok() ? kOk : kCheckFailed;
    }
    return kInputError;
}

}  // namespace rrb::cli
