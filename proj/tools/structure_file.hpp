#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrb/extensions.hpp"
#include "rrb/homotopy.hpp"

namespace rrb::cli {

using Json = nlohmann::ordered_json;

struct Space {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
};

/// A named linear, bilinear or multilinear map with its declared spaces.
/// Linear maps are stored as arity-1 multilinear maps.
struct NamedMap {
    std::vector<std::string> from;
    std::string to;
    Multilinear value;
};

struct AlgebraDecl {
    std::string space;
    AssocAlgebra value;
};
struct BimoduleDecl {
    std::string algebra;
    std::string space;
    Bimodule value;
};
struct RRBAlgebraDecl {
    std::string bimodule;
    RelativeRBAlgebra value;
};
struct RRBBimoduleDecl {
    std::string over;
    std::string B;
    std::string N;
    RRBBimodule value;
};
struct DendriformDecl {
    std::string space;
    DendriformAlgebra value;
};
struct DendriformRepDecl {
    std::string dendriform;
    std::string space;
    DendriformRepresentation value;
};
struct RMatrixDecl {
    std::string algebra;
    std::string bimodule;  // optional; R_M is induced on it
    RMatrix value;
};
struct TwoTermDecl {
    std::string A0;
    std::string A1;
    TwoTermAInfty value;
};
struct AInftyBimoduleDecl {
    std::string algebra;
    std::string M0;
    std::string M1;
    AInftyBimodule value;
};
struct HomotopyRRBDecl {
    std::string algebra;
    std::string module;
    HomotopyRRBOperator value;
};
struct ExtensionDecl {
    std::string base;
    std::string total;
    AbelianExtension value;
};
struct CocycleDecl {
    std::string bimodule;
    RRBCochain value;
};
struct SectionDecl {
    std::string extension;
    Section value;
};

/// Parsed and resolved structure file. Declarations keep file order.
struct StructureFile {
    std::map<std::string, Space> spaces;
    std::map<std::string, NamedMap> maps;
    std::vector<std::pair<std::string, std::string>> order;  // (type, name)

    std::map<std::string, AlgebraDecl> algebras;
    std::map<std::string, BimoduleDecl> bimodules;
    std::map<std::string, RRBAlgebraDecl> rrb_algebras;
    std::map<std::string, RRBBimoduleDecl> rrb_bimodules;
    std::map<std::string, DendriformDecl> dendriforms;
    std::map<std::string, DendriformRepDecl> dendriform_reps;
    std::map<std::string, RMatrixDecl> r_matrices;
    std::map<std::string, TwoTermDecl> two_terms;
    std::map<std::string, AInftyBimoduleDecl> ainfty_bimodules;
    std::map<std::string, HomotopyRRBDecl> homotopy_rrbs;
    std::map<std::string, ExtensionDecl> extensions;
    std::map<std::string, CocycleDecl> cocycles;
    std::map<std::string, SectionDecl> sections;
};

/// Throws ParseError (malformed JSON, rationals, unknown names or types) or
/// ShapeError (tensor or matrix shapes), with the offending key in the message.
StructureFile parse_structure(const Json& doc);
StructureFile parse_structure_text(const std::string& text);
StructureFile parse_structure_file(const std::filesystem::path& path);

/// Rationals as strings, matrices as lists of rows.
Json rational_json(const Rational& q);
Json matrix_json(const Matrix& m);
/// {"degree", "alpha", "beta", "gamma"} with each component in matrix form.
Json cochain_json(const RRBCochain& c);

/// Names of what write_rrb_algebra produced.
struct WrittenRRB {
    std::string algebra;
    std::string A;
    std::string bimodule;
    std::string M;
    std::string rrb;
};

struct WrittenBimodule {
    WrittenRRB over;
    std::string B;
    std::string N;
    std::string Bspace;
    std::string Nspace;
    std::string rrb_bimodule;
};

/// Builds a structure file; every added name is prefixed to keep documents
/// made of several pieces collision free.
class FileWriter {
public:
    std::string space(const std::string& name, std::size_t dim, const std::vector<std::string>& basis_names = {});
    std::string map(const std::string& name, const std::vector<std::string>& from, const std::string& to,
                    const Multilinear& value);
    std::string linear(const std::string& name, const std::string& from, const std::string& to, const LinearMap& value);
    void declare(Json decl);

    std::string algebra(const std::string& name, const AssocAlgebra& a);
    std::string bimodule(const std::string& name, const std::string& algebra, const Bimodule& m);
    WrittenRRB rrb_algebra(const std::string& name, const RelativeRBAlgebra& x);
    WrittenBimodule rrb_bimodule(const std::string& name, const RRBBimodule& b);
    std::string cocycle(const std::string& name, const std::string& rrb_bimodule, const RRBCochain& c);
    std::string extension(const std::string& name, const AbelianExtension& e);
    std::string skeletal(const std::string& name, const SkeletalData& s);

    Json document() const;

private:
    const std::string& space_of_algebra(const std::string& algebra) const;

    Json spaces_ = Json::object();
    Json bilinear_ = Json::object();
    Json multilinear_ = Json::object();
    Json linear_ = Json::object();
    Json declare_ = Json::array();
    std::map<std::string, std::string> algebra_space_;
    std::map<std::string, std::string> bimodule_space_;
};

}  // namespace rrb::cli
