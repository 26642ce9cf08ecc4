#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/qlaurent.hpp"
#include "qbundle/word.hpp"

namespace qbundle {

struct Generator {
    std::string name;
    GenId star = -1;  ///< id of the adjoint partner; self-adjoint generators point at themselves
};

/// Linear combination of words, not necessarily in normal form.
using TermList = std::vector<std::pair<Word, QLaurent>>;

/// Canonical (normal-form) linear combination. Invariant: no zero coefficients.
using NormalTerms = std::map<Word, QLaurent, DegLexLess>;

struct RewriteRule {
    Word lhs;      ///< reducible word; every rhs word is deg-lex below lhs
    TermList rhs;
};

/// One summand of a coproduct value: coeff * (left (x) right).
struct TensorTerm2 {
    Word left;
    Word right;
    QLaurent coeff;
};

/// Per-generator structure maps of a Hopf *-algebra, given on generators and
/// extended to words multiplicatively (coproduct, counit) or
/// anti-multiplicatively (antipode).
struct HopfGenData {
    std::vector<TensorTerm2> coproduct;
    QLaurent counit;
    TermList antipode;
};

struct HopfData {
    std::vector<HopfGenData> gens;  ///< indexed by GenId
};

enum class CoactionSide { left, right };

/// Diagonal coaction by the circle group: generator g maps to
/// u^{weights[g]} (x) g (left) or g (x) u^{weights[g]} (right).
struct CoactionSpec {
    std::vector<int> weights;  ///< indexed by GenId
};

struct OverlapCase {
    Word ambiguity;       ///< word reducible by both rules
    int rule_a = -1;      ///< rule applied at position 0
    int rule_b = -1;      ///< rule applied at the right end (or inside, for inclusions)
    bool resolved = false;
    std::string route_a;  ///< normal form reached by reducing via rule_a first
    std::string route_b;
};

struct OverlapReport {
    std::vector<OverlapCase> cases;
    bool all_resolved() const {
        for (const auto& c : cases)
            if (!c.resolved)
                return false;
        return true;
    }
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

/// A *-algebra presented by generators and a terminating confluent rewriting
/// system over QLaurent coefficients, optionally carrying Hopf structure
/// maps and circle coaction weights.
class Presentation {
public:
    const std::string& name() const { return name_; }

    /// Numeric specialization point, or nullopt when q is a formal parameter.
    const std::optional<Rational>& q_value() const { return q_value_; }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    const Generator& generator(GenId g) const { return generators_.at(g); }
    const std::vector<Generator>& generators() const { return generators_; }

    /// Id for a generator name, or -1.
    GenId find_generator(std::string_view name) const;

    GenId star_of(GenId g) const { return generators_.at(g).star; }

    /// Adjoint of a word: reverse the letters and flip each to its partner.
    Word star_word(const Word& w) const;

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::optional<HopfData>& hopf() const { return hopf_; }
    const std::optional<CoactionSpec>& coaction(CoactionSide side) const {
        return side == CoactionSide::left ? left_coaction_ : right_coaction_;
    }

    bool is_normal_word(const Word& w) const { return !first_reduction(w).has_value(); }

    /// Leftmost reducible position and the rule matching there.
    std::optional<std::pair<int, int>> first_reduction(const Word& w) const;  // (pos, rule)

    /// Rewrite a linear combination to its canonical normal form.
    NormalTerms reduce(const TermList& terms) const;

    /// All irreducible words of degree <= max_degree, in deg-lex order.
    std::vector<Word> normal_words_up_to(int max_degree) const;

    /// Throws std::logic_error if any rule fails to decrease deg-lex order.
    void check_termination() const;

    /// Resolve every overlap and inclusion ambiguity between rule pairs both
    /// ways. The system is confluent iff all cases resolve.
    OverlapReport check_local_confluence() const;

    /// Weight of a word under the given coaction: the sum of its letters'
    /// weights. Requires the coaction to be declared.
    int word_weight(const Word& w, CoactionSide side) const;

    /// Rules whose two sides disagree in coaction weight (should be none).
    std::vector<std::string> check_coaction_homogeneity(CoactionSide side) const;

    std::string word_to_string(const Word& w) const;
    std::string terms_to_string(const NormalTerms& terms) const;

private:
    friend class PresentationBuilder;
    Presentation() = default;

    std::string name_;
    std::optional<Rational> q_value_;
    std::vector<Generator> generators_;
    std::vector<RewriteRule> rules_;
    std::optional<HopfData> hopf_;
    std::optional<CoactionSpec> left_coaction_;
    std::optional<CoactionSpec> right_coaction_;
};

class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name);

    GenId add_generator(const std::string& name);
    void set_star_pair(GenId g, GenId g_star);
    void set_self_adjoint(GenId g);
    void add_rule(Word lhs, TermList rhs);
    void set_hopf(HopfData h);
    void set_coaction(CoactionSide side, std::vector<int> weights);
    void set_q_value(Rational q0);

    /// Validates star totality and termination; checks local confluence
    /// unless skipped. Throws std::logic_error on any failure.
    PresPtr build(bool check_confluence = true);

private:
    std::unique_ptr<Presentation> p_;
};

}  // namespace qbundle
