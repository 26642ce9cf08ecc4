#include "qbundle/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbundle {

GenId Presentation::find_generator(std::string_view name) const {
    for (GenId g = 0; g < generator_count(); ++g)
        if (generators_[g].name == name)
            return g;
    return -1;
}

Word Presentation::star_word(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(star_of(*it));
    return out;
}

std::optional<std::pair<int, int>> Presentation::first_reduction(const Word& w) const {
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
            const Word& lhs = rules_[r].lhs;
            if (pos + lhs.size() > w.size())
                continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos))
                return std::make_pair(pos, r);
        }
    }
    return std::nullopt;
}

NormalTerms Presentation::reduce(const TermList& terms) const {
    // Largest-first worklist: every rewrite produces strictly smaller words,
    // so each distinct word is expanded at most once.
    NormalTerms pending;
    for (const auto& [w, c] : terms) {
        if (c.is_zero())
            continue;
        auto [it, fresh] = pending.try_emplace(w, c);
        if (!fresh && (it->second += c).is_zero())
            pending.erase(it);
    }

    NormalTerms out;
    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        Word w = top->first;
        QLaurent c = top->second;
        pending.erase(top);

        auto red = first_reduction(w);
        if (!red) {
            auto [it, fresh] = out.try_emplace(std::move(w), c);
            if (!fresh && (it->second += c).is_zero())
                out.erase(it);
            continue;
        }
        auto [pos, r] = *red;
        const RewriteRule& rule = rules_[r];
        for (const auto& [rw, rc] : rule.rhs) {
            Word next;
            next.reserve(w.size() - rule.lhs.size() + rw.size());
            next.insert(next.end(), w.begin(), w.begin() + pos);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
            QLaurent nc = c * rc;
            if (nc.is_zero())
                continue;
            auto [it, fresh] = pending.try_emplace(std::move(next), nc);
            if (!fresh && (it->second += nc).is_zero())
                pending.erase(it);
        }
    }
    return out;
}

namespace {

bool normal_suffixes(const Presentation& p, const Word& w) {
    // Assumes w minus its last letter is already normal, so only suffix
    // matches ending at the last letter can be reducible.
    for (const auto& rule : p.rules()) {
        size_t n = rule.lhs.size();
        if (n > w.size())
            continue;
        if (std::equal(rule.lhs.begin(), rule.lhs.end(), w.end() - n))
            return false;
    }
    return true;
}

}  // namespace

std::vector<Word> Presentation::normal_words_up_to(int max_degree) const {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (GenId g = 0; g < generator_count(); ++g) {
                Word cand = w;
                cand.push_back(g);
                if (normal_suffixes(*this, cand))
                    next.push_back(std::move(cand));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

void Presentation::check_termination() const {
    DegLexLess less;
    for (size_t r = 0; r < rules_.size(); ++r) {
        const auto& rule = rules_[r];
        if (rule.lhs.empty())
            throw std::logic_error(name_ + ": rule " + std::to_string(r) + " has empty left side");
        for (const auto& [w, c] : rule.rhs) {
            if (c.is_zero())
                throw std::logic_error(name_ + ": rule " + std::to_string(r) +
                                       " carries a zero coefficient");
            if (!less(w, rule.lhs))
                throw std::logic_error(name_ + ": rule " + std::to_string(r) +
                                       " does not decrease deg-lex order at " + word_to_string(w));
        }
    }
}

OverlapReport Presentation::check_local_confluence() const {
    OverlapReport report;
    const int n = static_cast<int>(rules_.size());

    auto add_case = [&](const Word& ambiguity, int ri, int rj, int pos_j) {
        const RewriteRule& a = rules_[ri];
        const RewriteRule& b = rules_[rj];
        TermList via_a, via_b;
        for (const auto& [rw, rc] : a.rhs) {
            Word t(rw);
            t.insert(t.end(), ambiguity.begin() + a.lhs.size(), ambiguity.end());
            via_a.emplace_back(std::move(t), rc);
        }
        for (const auto& [rw, rc] : b.rhs) {
            Word t(ambiguity.begin(), ambiguity.begin() + pos_j);
            t.insert(t.end(), rw.begin(), rw.end());
            t.insert(t.end(), ambiguity.begin() + pos_j + b.lhs.size(), ambiguity.end());
            via_b.emplace_back(std::move(t), rc);
        }
        NormalTerms nf_a = reduce(via_a);
        NormalTerms nf_b = reduce(via_b);
        OverlapCase oc;
        oc.ambiguity = ambiguity;
        oc.rule_a = ri;
        oc.rule_b = rj;
        oc.resolved = (nf_a == nf_b);
        oc.route_a = terms_to_string(nf_a);
        oc.route_b = terms_to_string(nf_b);
        report.cases.push_back(std::move(oc));
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Word& li = rules_[i].lhs;
            const Word& lj = rules_[j].lhs;
            const int Li = static_cast<int>(li.size());
            const int Lj = static_cast<int>(lj.size());

            // Proper suffix-prefix overlaps: li = AB, lj = BC, ambiguity ABC.
            for (int o = 1; o < std::min(Li, Lj); ++o) {
                if (!std::equal(li.end() - o, li.end(), lj.begin()))
                    continue;
                Word amb = li;
                amb.insert(amb.end(), lj.begin() + o, lj.end());
                add_case(amb, i, j, Li - o);
            }

            // Inclusions: lj occurring inside li (or duplicate left sides).
            if (Lj < Li || (Lj == Li && i != j)) {
                for (int p = 0; p + Lj <= Li; ++p) {
                    if (std::equal(lj.begin(), lj.end(), li.begin() + p))
                        add_case(li, i, j, p);
                }
            }
        }
    }
    return report;
}

int Presentation::word_weight(const Word& w, CoactionSide side) const {
    const auto& spec = coaction(side);
    if (!spec)
        throw std::logic_error(name_ + ": no " +
                               (side == CoactionSide::left ? std::string("left") : "right") +
                               " coaction declared");
    int total = 0;
    for (GenId g : w)
        total += spec->weights.at(g);
    return total;
}

std::vector<std::string> Presentation::check_coaction_homogeneity(CoactionSide side) const {
    std::vector<std::string> bad;
    for (size_t r = 0; r < rules_.size(); ++r) {
        int lw = word_weight(rules_[r].lhs, side);
        for (const auto& [w, c] : rules_[r].rhs) {
            if (word_weight(w, side) != lw)
                bad.push_back("rule " + std::to_string(r) + ": " + word_to_string(rules_[r].lhs) +
                              " has weight " + std::to_string(lw) + " but " + word_to_string(w) +
                              " has weight " + std::to_string(word_weight(w, side)));
        }
    }
    return bad;
}

std::string Presentation::word_to_string(const Word& w) const {
    if (w.empty())
        return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t run = i;
        while (run < w.size() && w[run] == w[i])
            ++run;
        if (!first)
            os << " * ";
        os << generators_.at(w[i]).name;
        if (run - i > 1)
            os << "^" << (run - i);
        first = false;
        i = run;
    }
    return os.str();
}

std::string Presentation::terms_to_string(const NormalTerms& terms) const {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first)
            os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool wrap = cs.find(' ') != std::string::npos || cs.find('-') != std::string::npos;
        if (w.empty()) {
            os << (wrap ? "(" + cs + ")" : cs);
        } else if (c.is_one()) {
            os << word_to_string(w);
        } else {
            os << (wrap ? "(" + cs + ")" : cs) << " * " << word_to_string(w);
        }
    }
    return os.str();
}

PresentationBuilder::PresentationBuilder(std::string name)
    : p_(new Presentation()) {
    p_->name_ = std::move(name);
}

GenId PresentationBuilder::add_generator(const std::string& name) {
    if (p_->find_generator(name) >= 0)
        throw std::logic_error(p_->name_ + ": duplicate generator " + name);
    p_->generators_.push_back(Generator{name, -1});
    return static_cast<GenId>(p_->generators_.size()) - 1;
}

void PresentationBuilder::set_star_pair(GenId g, GenId g_star) {
    p_->generators_.at(g).star = g_star;
    p_->generators_.at(g_star).star = g;
}

void PresentationBuilder::set_self_adjoint(GenId g) {
    p_->generators_.at(g).star = g;
}

void PresentationBuilder::add_rule(Word lhs, TermList rhs) {
    RewriteRule rule;
    rule.lhs = std::move(lhs);
    for (auto& [w, c] : rhs) {
        if (!c.is_zero())
            rule.rhs.emplace_back(std::move(w), std::move(c));
    }
    p_->rules_.push_back(std::move(rule));
}

void PresentationBuilder::set_hopf(HopfData h) {
    p_->hopf_ = std::move(h);
}

void PresentationBuilder::set_coaction(CoactionSide side, std::vector<int> weights) {
    if (weights.size() != p_->generators_.size())
        throw std::logic_error(p_->name_ + ": coaction weight count mismatch");
    CoactionSpec spec{std::move(weights)};
    if (side == CoactionSide::left)
        p_->left_coaction_ = std::move(spec);
    else
        p_->right_coaction_ = std::move(spec);
}

void PresentationBuilder::set_q_value(Rational q0) {
    if (q0 == 0)
        throw std::logic_error(p_->name_ + ": q must be invertible");
    p_->q_value_ = std::move(q0);
}

PresPtr PresentationBuilder::build(bool check_confluence) {
    if (!p_)
        throw std::logic_error("presentation builder already consumed");
    for (GenId g = 0; g < p_->generator_count(); ++g) {
        if (p_->generators_[g].star < 0)
            throw std::logic_error(p_->name_ + ": generator " + p_->generators_[g].name +
                                   " has no adjoint assigned");
    }
    if (p_->hopf_ && p_->hopf_->gens.size() != p_->generators_.size())
        throw std::logic_error(p_->name_ + ": Hopf data must cover every generator");
    p_->check_termination();
    if (check_confluence) {
        OverlapReport rep = p_->check_local_confluence();
        for (const auto& c : rep.cases) {
            if (!c.resolved)
                throw std::logic_error(p_->name_ + ": unresolved ambiguity at " +
                                       p_->word_to_string(c.ambiguity) + " (" + c.route_a +
                                       " vs " + c.route_b + ")");
        }
    }
    return PresPtr(p_.release());
}

}  // namespace qbundle
