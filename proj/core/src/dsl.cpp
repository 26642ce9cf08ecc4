#include "qbundle/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qbundle/expr_parser.hpp"
#include "qbundle/presets.hpp"
#include "qbundle/tensor.hpp"

namespace qbundle {

namespace {

using Entry = PresentationFile::Entry;

struct Token {
    std::string text;
    int column;  ///< 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

Entry make_entry(const std::string& line, size_t begin, size_t end, int line_no) {
    while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    Entry e;
    e.text = line.substr(begin, end - begin);
    e.line = line_no;
    e.column = static_cast<int>(begin) + 1;
    return e;
}

[[noreturn]] void fail(const std::string& message, int line, int column) {
    throw DslError(message, line, column);
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& text) {
    PresentationFile file;
    PresentationFile::Algebra* alg = nullptr;
    PresentationFile::MorphismBlock* mor = nullptr;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const Token& head = toks[0];

        if (!alg && !mor) {
            if (head.text == "algebra") {
                if (toks.size() != 3 || toks[2].text != "{")
                    fail("expected 'algebra NAME {'", line_no, head.column);
                file.algebras.push_back({});
                alg = &file.algebras.back();
                alg->name = toks[1].text;
                alg->line = line_no;
            } else if (head.text == "morphism") {
                if (toks.size() != 7 || toks[2].text != ":" || toks[4].text != "->" ||
                    toks[6].text != "{")
                    fail("expected 'morphism NAME : SOURCE -> TARGET {'", line_no, head.column);
                file.morphisms.push_back({});
                mor = &file.morphisms.back();
                mor->name = toks[1].text;
                mor->source = toks[3].text;
                mor->target = toks[5].text;
                mor->line = line_no;
            } else {
                fail("expected 'algebra' or 'morphism' block", line_no, head.column);
            }
            continue;
        }

        if (head.text == "}") {
            if (toks.size() != 1) fail("unexpected tokens after '}'", line_no, toks[1].column);
            alg = nullptr;
            mor = nullptr;
            continue;
        }

        if (mor) {
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                fail("expected 'GENERATOR -> EXPRESSION'", line_no, head.column);
            Entry gen = make_entry(line, 0, arrow, line_no);
            Entry expr = make_entry(line, arrow + 2, line.size(), line_no);
            if (gen.text.empty() || gen.text.find(' ') != std::string::npos)
                fail("expected a single generator name before '->'", line_no, gen.column);
            if (expr.text.empty()) fail("empty image expression", line_no, expr.column);
            mor->images.emplace_back(gen, expr);
            continue;
        }

        if (head.text == "generator") {
            if (toks.size() != 2) fail("expected 'generator NAME'", line_no, head.column);
            Entry e;
            e.text = toks[1].text;
            e.line = line_no;
            e.column = toks[1].column;
            alg->generators.push_back(e);
        } else if (head.text == "star") {
            if (toks.size() != 3) fail("expected 'star NAME NAME'", line_no, head.column);
            Entry a{toks[1].text, line_no, toks[1].column};
            Entry b{toks[2].text, line_no, toks[2].column};
            alg->stars.emplace_back(a, b);
        } else if (head.text == "q") {
            if (toks.size() != 2) fail("expected 'q RATIONAL'", line_no, head.column);
            if (alg->q) fail("duplicate q declaration", line_no, head.column);
            alg->q = Entry{toks[1].text, line_no, toks[1].column};
        } else if (head.text == "rule") {
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                fail("expected 'rule WORD -> EXPRESSION'", line_no, head.column);
            PresentationFile::Rule r;
            r.lhs = make_entry(line, head.column - 1 + 4, arrow, line_no);
            r.rhs = make_entry(line, arrow + 2, line.size(), line_no);
            if (r.lhs.text.empty()) fail("empty rule left side", line_no, static_cast<int>(arrow));
            if (r.rhs.text.empty()) fail("empty rule right side", line_no, static_cast<int>(arrow) + 3);
            alg->rules.push_back(std::move(r));
        } else if (head.text == "delta" || head.text == "counit" || head.text == "antipode") {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                fail("expected '" + head.text + " GENERATOR = EXPRESSION'", line_no, head.column);
            Entry gen = make_entry(line, head.column - 1 + head.text.size(), eq, line_no);
            if (gen.text.empty() || gen.text.find(' ') != std::string::npos)
                fail("expected a single generator name before '='", line_no, gen.column);
            PresentationFile::HopfLine h;
            h.kind = head.text;
            h.gen = gen.text;
            h.expr = make_entry(line, eq + 1, line.size(), line_no);
            h.line = line_no;
            if (h.expr.text.empty()) fail("empty " + head.text + " expression", line_no,
                                          static_cast<int>(eq) + 2);
            alg->hopf.push_back(std::move(h));
        } else if (head.text == "coaction") {
            if (toks.size() < 3) fail("expected 'coaction left|right WEIGHTS'", line_no, head.column);
            PresentationFile::Coaction c;
            c.side = toks[1].text;
            c.line = line_no;
            if (c.side != "left" && c.side != "right")
                fail("coaction side must be 'left' or 'right'", line_no, toks[1].column);
            for (size_t i = 2; i < toks.size(); ++i) {
                try {
                    size_t used = 0;
                    int w = std::stoi(toks[i].text, &used);
                    if (used != toks[i].text.size()) throw std::invalid_argument("");
                    c.weights.push_back(w);
                } catch (const std::exception&) {
                    fail("coaction weight must be an integer", line_no, toks[i].column);
                }
            }
            alg->coactions.push_back(std::move(c));
        } else {
            fail("unknown declaration '" + head.text + "'", line_no, head.column);
        }
    }
    if (alg) fail("unterminated algebra block '" + alg->name + "'", alg->line, 1);
    if (mor) fail("unterminated morphism block '" + mor->name + "'", mor->line, 1);
    return file;
}

std::string serialize(const PresentationFile& file) {
    std::ostringstream os;
    bool first = true;
    for (const auto& a : file.algebras) {
        if (!first) os << "\n";
        first = false;
        os << "algebra " << a.name << " {\n";
        for (const auto& g : a.generators) os << "  generator " << g.text << "\n";
        for (const auto& [x, y] : a.stars) os << "  star " << x.text << " " << y.text << "\n";
        if (a.q) os << "  q " << a.q->text << "\n";
        for (const auto& r : a.rules) os << "  rule " << r.lhs.text << " -> " << r.rhs.text << "\n";
        for (const auto& h : a.hopf)
            os << "  " << h.kind << " " << h.gen << " = " << h.expr.text << "\n";
        for (const auto& c : a.coactions) {
            os << "  coaction " << c.side;
            for (int w : c.weights) os << " " << w;
            os << "\n";
        }
        os << "}\n";
    }
    for (const auto& m : file.morphisms) {
        if (!first) os << "\n";
        first = false;
        os << "morphism " << m.name << " : " << m.source << " -> " << m.target << " {\n";
        for (const auto& [g, e] : m.images) os << "  " << g.text << " -> " << e.text << "\n";
        os << "}\n";
    }
    return os.str();
}

PresPtr LoadedFile::algebra(const std::string& name) const {
    for (const auto& [n, p] : algebras)
        if (n == name) return p;
    return nullptr;
}

namespace {

PresPtr find_algebra(const LoadedFile& loaded, const std::string& name) {
    if (PresPtr p = loaded.algebra(name)) return p;
    if (name == "suq2") return presets::suq2();
    if (name == "su2") return presets::su2();
    if (name == "u1") return presets::u1();
    return nullptr;
}

PresPtr build_algebra(const PresentationFile::Algebra& a, bool check_confluence) {
    PresentationBuilder b(a.name);
    std::vector<Generator> gens;
    auto find = [&](const std::string& name) -> GenId {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<GenId>(i);
        return -1;
    };

    for (const auto& g : a.generators) {
        if (find(g.text) >= 0) fail("duplicate generator '" + g.text + "'", g.line, g.column);
        if (g.text == "q")
            fail("generator name 'q' collides with the deformation parameter", g.line, g.column);
        if (g.text == "x" && !a.hopf.empty())
            fail("generator name 'x' collides with the (x) tensor separator", g.line, g.column);
        b.add_generator(g.text);
        gens.push_back({g.text, -1});
    }
    for (const auto& [x, y] : a.stars) {
        GenId gx = find(x.text), gy = find(y.text);
        if (gx < 0) fail("unknown generator '" + x.text + "'", x.line, x.column);
        if (gy < 0) fail("unknown generator '" + y.text + "'", y.line, y.column);
        if (gens[gx].star >= 0 || (gy != gx && gens[gy].star >= 0))
            fail("generator already has an adjoint partner", x.line, x.column);
        if (gx == gy)
            b.set_self_adjoint(gx);
        else
            b.set_star_pair(gx, gy);
        gens[gx].star = gy;
        gens[gy].star = gx;
    }
    for (const auto& g : gens)
        if (g.star < 0) {
            const auto& e = a.generators[find(g.name)];
            fail("generator '" + g.name + "' has no star declaration", e.line, e.column);
        }
    if (a.q) {
        try {
            b.set_q_value(parse_rational(a.q->text));
        } catch (const std::invalid_argument& ex) {
            fail(ex.what(), a.q->line, a.q->column);
        }
    }

    auto parse_with = [&](const Entry& e) -> TermList {
        try {
            return parse_terms(gens, e.text);
        } catch (const ParseError& pe) {
            fail(pe.what(), e.line, e.column + static_cast<int>(pe.position));
        }
    };

    for (const auto& r : a.rules) {
        TermList lhs = parse_with(r.lhs);
        if (lhs.size() != 1 || !lhs[0].second.is_one() || lhs[0].first.empty())
            fail("rule left side must be a single monic word", r.lhs.line, r.lhs.column);
        b.add_rule(lhs[0].first, parse_with(r.rhs));
    }

    if (!a.hopf.empty()) {
        HopfData h;
        h.gens.resize(gens.size());
        std::vector<int> have(gens.size() * 3, 0);
        for (const auto& line : a.hopf) {
            GenId g = find(line.gen);
            if (g < 0) fail("unknown generator '" + line.gen + "'", line.line, 1);
            int kind = line.kind == "delta" ? 0 : line.kind == "counit" ? 1 : 2;
            if (have[g * 3 + kind]++)
                fail("duplicate " + line.kind + " for '" + line.gen + "'", line.line, 1);
            if (kind == 0) {
                try {
                    h.gens[g].coproduct = parse_tensor_terms(gens, line.expr.text);
                } catch (const ParseError& pe) {
                    fail(pe.what(), line.expr.line,
                         line.expr.column + static_cast<int>(pe.position));
                }
            } else if (kind == 1) {
                TermList t = parse_with(line.expr);
                QLaurent value;
                for (const auto& [w, c] : t) {
                    if (!w.empty())
                        fail("counit must be a scalar expression", line.expr.line,
                             line.expr.column);
                    value += c;
                }
                h.gens[g].counit = value;
            } else {
                h.gens[g].antipode = parse_with(line.expr);
            }
        }
        for (size_t g = 0; g < gens.size(); ++g)
            for (int kind = 0; kind < 3; ++kind)
                if (!have[g * 3 + kind]) {
                    const char* names[] = {"delta", "counit", "antipode"};
                    fail(std::string("missing ") + names[kind] + " for generator '" +
                             gens[g].name + "'",
                         a.line, 1);
                }
        b.set_hopf(std::move(h));
    }

    for (const auto& c : a.coactions) {
        if (c.weights.size() != gens.size())
            fail("coaction needs one weight per generator (" + std::to_string(gens.size()) +
                     " expected, " + std::to_string(c.weights.size()) + " given)",
                 c.line, 1);
        b.set_coaction(c.side == "left" ? CoactionSide::left : CoactionSide::right, c.weights);
    }

    PresPtr p;
    try {
        p = b.build(check_confluence);
    } catch (const std::logic_error& ex) {
        fail(ex.what(), a.line, 1);
    }
    for (CoactionSide side : {CoactionSide::left, CoactionSide::right}) {
        if (!p->coaction(side)) continue;
        auto bad = p->check_coaction_homogeneity(side);
        if (!bad.empty()) fail("inhomogeneous rule under declared coaction: " + bad[0], a.line, 1);
    }
    return p;
}

}  // namespace

LoadedFile build_presentations(const PresentationFile& file, bool check_confluence) {
    LoadedFile out;
    for (const auto& a : file.algebras) {
        if (out.algebra(a.name)) fail("duplicate algebra '" + a.name + "'", a.line, 1);
        out.algebras.emplace_back(a.name, build_algebra(a, check_confluence));
    }
    for (const auto& m : file.morphisms) {
        PresPtr src = find_algebra(out, m.source);
        if (!src) fail("unknown source algebra '" + m.source + "'", m.line, 1);
        PresPtr dst = find_algebra(out, m.target);
        if (!dst) fail("unknown target algebra '" + m.target + "'", m.line, 1);

        std::vector<Element> images(src->generator_count(), Element::zero(dst));
        std::vector<int> seen(src->generator_count(), 0);
        for (const auto& [g, e] : m.images) {
            GenId id = src->find_generator(g.text);
            if (id < 0) fail("unknown generator '" + g.text + "'", g.line, g.column);
            if (seen[id]++) fail("duplicate image for '" + g.text + "'", g.line, g.column);
            try {
                images[id] = parse_element(dst, e.text);
            } catch (const ParseError& pe) {
                fail(pe.what(), e.line, e.column + static_cast<int>(pe.position));
            }
        }
        for (GenId id = 0; id < src->generator_count(); ++id)
            if (!seen[id])
                fail("missing image for generator '" + src->generator(id).name + "'", m.line, 1);

        Morphism built(m.name, src, dst, std::move(images));
        auto bad = built.check_relations();
        if (!bad.empty())
            fail("morphism does not respect the relations: " + bad[0], m.line, 1);
        out.morphisms.push_back(std::move(built));
    }
    return out;
}

PresentationFile render_presentation(const PresPtr& p) {
    PresentationFile file;
    file.algebras.push_back({});
    auto& a = file.algebras.back();
    a.name = p->name();
    auto entry = [](std::string text) {
        Entry e;
        e.text = std::move(text);
        return e;
    };

    for (GenId g = 0; g < p->generator_count(); ++g)
        a.generators.push_back(entry(p->generator(g).name));
    for (GenId g = 0; g < p->generator_count(); ++g)
        if (p->star_of(g) >= g)
            a.stars.emplace_back(entry(p->generator(g).name),
                                 entry(p->generator(p->star_of(g)).name));
    if (p->q_value()) a.q = entry(rational_to_string(*p->q_value()));

    for (const auto& r : p->rules()) {
        PresentationFile::Rule out;
        out.lhs = entry(p->word_to_string(r.lhs));
        out.rhs = entry(Element::from_terms(p, r.rhs).to_string());
        a.rules.push_back(std::move(out));
    }
    if (p->hopf()) {
        for (GenId g = 0; g < p->generator_count(); ++g) {
            const auto& data = p->hopf()->gens[g];
            TensorElement dt({p, p});
            for (const auto& t : data.coproduct) dt.add({t.left, t.right}, t.coeff);
            PresentationFile::HopfLine d{"delta", p->generator(g).name, entry(dt.to_string()), 0};
            PresentationFile::HopfLine c{"counit", p->generator(g).name,
                                         entry(data.counit.to_string()), 0};
            PresentationFile::HopfLine s{"antipode", p->generator(g).name,
                                         entry(Element::from_terms(p, data.antipode).to_string()),
                                         0};
            a.hopf.push_back(std::move(d));
            a.hopf.push_back(std::move(c));
            a.hopf.push_back(std::move(s));
        }
    }
    for (CoactionSide side : {CoactionSide::right, CoactionSide::left}) {
        if (!p->coaction(side)) continue;
        PresentationFile::Coaction c;
        c.side = side == CoactionSide::right ? "right" : "left";
        c.weights = p->coaction(side)->weights;
        a.coactions.push_back(std::move(c));
    }
    return file;
}

PresPtr load_presentation(const std::string& name_or_path, const std::optional<Rational>& q0,
                          bool check_confluence) {
    PresPtr base;
    if (name_or_path == "suq2") {
        base = presets::suq2();
    } else if (name_or_path == "su2") {
        base = presets::su2();
    } else if (name_or_path == "u1") {
        base = presets::u1();
    } else {
        std::ifstream in(name_or_path);
        if (!in)
            throw std::invalid_argument("unknown preset and unreadable file: '" + name_or_path +
                                        "' (presets: suq2, su2, u1)");
        std::ostringstream buf;
        buf << in.rdbuf();
        LoadedFile loaded = build_presentations(parse_presentation_file(buf.str()),
                                                check_confluence);
        if (loaded.algebras.size() != 1) {
            std::string names;
            for (const auto& [n, _] : loaded.algebras) names += (names.empty() ? "" : ", ") + n;
            throw std::invalid_argument("file must define exactly one algebra, found: " + names);
        }
        base = loaded.algebras.front().second;
    }
    if (q0) return presets::specialized_presentation(base, *q0);
    return base;
}

}  // namespace qbundle
