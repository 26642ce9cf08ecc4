#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbundle/morphism.hpp"
#include "qbundle/presentation.hpp"

namespace qbundle {

struct DslError : std::runtime_error {
    DslError(const std::string& message, int line, int column)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line), column(column) {}
    int line;
    int column;
};

/// Parsed but not yet validated presentation file.
///
/// Grammar (line oriented, '#' comments):
///   algebra NAME {
///     generator NAME
///     star NAME NAME          # adjoint pair; repeat a name for self-adjoint
///     q RATIONAL              # optional: fix the deformation parameter
///     rule WORD -> EXPR
///     delta GEN = TENSOR-EXPR # the three Hopf lines come all or not at all
///     counit GEN = SCALAR-EXPR
///     antipode GEN = EXPR
///     coaction left|right INT ... INT   # one weight per generator
///   }
///   morphism NAME : SOURCE -> TARGET {
///     GEN -> EXPR             # expression over the target algebra
///   }
struct PresentationFile {
    struct Entry {
        std::string text;
        int line = 0;
        int column = 1;  ///< 1-based column where the text starts
    };
    struct Rule {
        Entry lhs, rhs;
    };
    struct HopfLine {
        std::string kind;  ///< "delta", "counit" or "antipode"
        std::string gen;
        Entry expr;
        int line = 0;
    };
    struct Coaction {
        std::string side;
        std::vector<int> weights;
        int line = 0;
    };
    struct Algebra {
        std::string name;
        int line = 0;
        std::vector<Entry> generators;
        std::vector<std::pair<Entry, Entry>> stars;
        std::optional<Entry> q;
        std::vector<Rule> rules;
        std::vector<HopfLine> hopf;
        std::vector<Coaction> coactions;
    };
    struct MorphismBlock {
        std::string name;
        std::string source, target;
        int line = 0;
        std::vector<std::pair<Entry, Entry>> images;  ///< generator name -> expression
    };

    std::vector<Algebra> algebras;
    std::vector<MorphismBlock> morphisms;
};

/// Throws DslError with 1-based line/column on malformed input.
PresentationFile parse_presentation_file(const std::string& text);

/// Canonical rendering; parse(serialize(parse(s))) equals parse(serialize(s)).
std::string serialize(const PresentationFile& file);

struct LoadedFile {
    std::vector<std::pair<std::string, PresPtr>> algebras;  ///< declaration order
    std::vector<Morphism> morphisms;

    PresPtr algebra(const std::string& name) const;
};

/// Validates and builds every block: star totality, monic deg-lex rules,
/// complete Hopf coverage, coaction homogeneity, morphism well-definedness,
/// and (unless skipped) confluence. Morphism source/target names resolve
/// against the file first, then the built-in presets.
LoadedFile build_presentations(const PresentationFile& file, bool check_confluence = true);

/// Rendering of a built presentation back into a file block, used by the
/// preset printer. Lossless up to expression formatting.
PresentationFile render_presentation(const PresPtr& p);

/// Resolve a preset name (suq2, su2, u1) or a DSL file path holding exactly
/// one algebra block; optionally specialize to q0.
PresPtr load_presentation(const std::string& name_or_path,
                          const std::optional<Rational>& q0 = std::nullopt,
                          bool check_confluence = true);

}  // namespace qbundle
