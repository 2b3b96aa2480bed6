#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "pcontract/certificate.hpp"
#include "pcontract/error.hpp"

namespace pcontract {

namespace {

using Lines = std::vector<std::string>;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.compare(0, prefix.size(), prefix) == 0; }

[[noreturn]] void fail(const std::string& what) { throw error(errc::parse, what); }

std::uint64_t to_number(const std::string& tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &used);
    } catch (const std::exception&) {
        fail("expected a number, got '" + tok + "'");
    }
    if (used != tok.size() || tok.front() == '-') fail("expected a number, got '" + tok + "'");
    return v;
}

Vertex to_vertex(const std::string& tok) {
    auto v = to_number(tok);
    if (v > std::numeric_limits<Vertex>::max()) fail("vertex id out of range: " + tok);
    return static_cast<Vertex>(v);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

std::vector<Vertex> vertex_list(const std::string& s) {
    std::vector<Vertex> out;
    for (const auto& w : words(s)) out.push_back(to_vertex(w));
    return out;
}

void write_edges(std::ostream& out, const std::vector<Edge>& es) {
    for (std::size_t i = 0; i < es.size(); ++i) out << (i ? "; " : " ") << es[i].u << ' ' << es[i].v;
}

std::vector<Edge> parse_edges(const std::string& s) {
    std::vector<Edge> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto w = words(item);
        if (w.empty()) continue;
        if (w.size() != 2) fail("malformed edge '" + trim(item) + "'");
        try {
            out.push_back(make_edge(to_vertex(w[0]), to_vertex(w[1])));
        } catch (const error& e) {
            if (e.code() == errc::parse) throw;
            fail("loop in edge list");
        }
    }
    return out;
}

std::string after(const std::string& line, const std::string& key) { return trim(line.substr(key.size())); }

void write_result_at(std::ostream& out, const SolveResult& r) {
    out << "answer " << to_string(r.answer) << '\n';
    out << "budget " << r.budget << '\n';
    if (r.answer == Answer::yes) {
        out << "edges:";
        write_edges(out, r.contraction_edges);
        out << '\n';
        return;
    }
    if (const auto* p = std::get_if<ExhaustionProof>(&r.refutation)) {
        out << "proof: exhausted " << p->edge_count << ' ' << p->budget << ' ' << p->subsets_examined << '\n';
        if (!p->reduced_by.empty()) {
            out << "reduced:";
            write_edges(out, p->reduced_by);
            out << '\n';
        }
    } else if (const auto* t = std::get_if<Type1Certificate>(&r.refutation)) {
        out << "proof: type1 " << t->structures.size() << '\n';
        for (const auto& ws : t->structures) {
            out << "structure:";
            bool first = true;
            for (const auto& [label, part] : ws.parts) {
                if (!first) out << " |";
                first = false;
                for (Vertex v : part) out << ' ' << v;
            }
            out << '\n';
        }
    } else if (std::holds_alternative<NoApexProof>(r.refutation)) {
        out << "proof: noapex\n";
    } else if (const auto* c = std::get_if<ComponentsProof>(&r.refutation)) {
        out << "proof: components " << c->parts.size() << '\n';
        for (const auto& part : c->parts) {
            out << "component " << part.representative << " {\n";
            if (part.result) write_result_at(out, *part.result);
            out << "}\n";
        }
    }
}

SolveResult parse_result_at(const Lines& lines, std::size_t& i, bool nested) {
    SolveResult r;
    auto next = [&]() -> std::string {
        while (i < lines.size()) {
            std::string t = trim(lines[i]);
            if (t.empty() || t[0] == '#') {
                ++i;
                continue;
            }
            return t;
        }
        return {};
    };
    std::string line = next();
    if (!starts_with(line, "answer ")) fail("expected 'answer' line");
    std::string a = after(line, "answer ");
    if (a == "yes") {
        r.answer = Answer::yes;
    } else if (a == "no") {
        r.answer = Answer::no;
    } else if (a == "undecided") {
        r.answer = Answer::undecided;
    } else {
        fail("unknown answer '" + a + "'");
    }
    ++i;
    line = next();
    if (!starts_with(line, "budget ")) fail("expected 'budget' line");
    auto b = to_number(after(line, "budget "));
    if (b > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) fail("budget out of range");
    r.budget = static_cast<int>(b);
    ++i;

    line = next();
    if (r.answer == Answer::yes) {
        if (!starts_with(line, "edges:")) fail("yes-certificate needs an 'edges:' line");
        r.contraction_edges = parse_edges(after(line, "edges:"));
        ++i;
    } else if (starts_with(line, "proof:")) {
        auto w = words(after(line, "proof:"));
        ++i;
        if (w.empty()) fail("empty proof line");
        if (w[0] == "exhausted") {
            if (w.size() != 4) fail("'proof: exhausted' needs m k count");
            ExhaustionProof p;
            p.edge_count = to_number(w[1]);
            p.budget = static_cast<int>(to_number(w[2]));
            p.subsets_examined = to_number(w[3]);
            line = next();
            if (starts_with(line, "reduced:")) {
                p.reduced_by = parse_edges(after(line, "reduced:"));
                ++i;
            }
            r.refutation = std::move(p);
        } else if (w[0] == "type1") {
            if (w.size() != 2) fail("'proof: type1' needs a count");
            Type1Certificate t;
            t.budget = r.budget;
            auto count = to_number(w[1]);
            for (std::uint64_t s = 0; s < count; ++s) {
                line = next();
                if (!starts_with(line, "structure:")) fail("expected 'structure:' line");
                ++i;
                WitnessStructure ws;
                std::istringstream parts(after(line, "structure:"));
                std::string part;
                Vertex label = 1;
                while (std::getline(parts, part, '|')) ws.parts[label++] = vertex_list(part);
                if (ws.parts.size() != 5) fail("a structure has exactly five parts");
                t.structures.push_back(std::move(ws));
            }
            r.refutation = std::move(t);
        } else if (w[0] == "noapex") {
            r.refutation = NoApexProof{r.budget};
        } else if (w[0] == "components") {
            if (w.size() != 2) fail("'proof: components' needs a count");
            ComponentsProof c;
            auto count = to_number(w[1]);
            for (std::uint64_t s = 0; s < count; ++s) {
                line = next();
                auto head = words(line);
                if (head.size() != 3 || head[0] != "component" || head[2] != "{") fail("expected 'component <v> {'");
                ++i;
                ComponentRefutation part;
                part.representative = to_vertex(head[1]);
                part.result = std::make_shared<const SolveResult>(parse_result_at(lines, i, true));
                line = next();
                if (line != "}") fail("expected '}' closing a component");
                ++i;
                c.parts.push_back(std::move(part));
            }
            r.refutation = std::move(c);
        } else {
            fail("unknown proof kind '" + w[0] + "'");
        }
    }
    if (!nested) {
        line = next();
        if (!line.empty()) fail("unexpected trailing line '" + line + "'");
    }
    return r;
}

Lines read_lines(std::istream& in) {
    Lines lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

std::string_view to_string(Answer a) noexcept {
    switch (a) {
        case Answer::yes:
            return "yes";
        case Answer::no:
            return "no";
        case Answer::undecided:
            return "undecided";
    }
    return "undecided";
}

std::uint64_t subsets_up_to(std::size_t m, int k) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t term = 1;
    for (int i = 0; i <= k && static_cast<std::size_t>(i) <= m; ++i) {
        if (i > 0) {
            // term = C(m, i) from C(m, i-1), exact in 128 bits before the divide.
            unsigned __int128 next = static_cast<unsigned __int128>(term) * (m - static_cast<std::size_t>(i) + 1) /
                                     static_cast<unsigned>(i);
            if (next > max) return max;
            term = static_cast<std::uint64_t>(next);
        }
        if (total > max - term) return max;
        total += term;
    }
    return total;
}

void write_result(std::ostream& out, const SolveResult& r) { write_result_at(out, r); }

std::string to_result_string(const SolveResult& r) {
    std::ostringstream ss;
    write_result(ss, r);
    return ss.str();
}

SolveResult parse_result(std::istream& in) {
    Lines lines = read_lines(in);
    std::size_t i = 0;
    return parse_result_at(lines, i, false);
}

SolveResult parse_result_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_result(ss);
}

void write_document(std::ostream& out, const CertificateDocument& doc) {
    out << "apex:";
    if (doc.apex) {
        for (Vertex v : *doc.apex) out << ' ' << v;
    } else {
        out << " none";
    }
    out << '\n';
    out << "trace:";
    write_edges(out, doc.trace);
    out << '\n';
    out << "answer: " << to_string(doc.result.answer) << '\n';
    out << "certificate:\n";
    write_result(out, doc.result);
}

std::string to_document_string(const CertificateDocument& doc) {
    std::ostringstream ss;
    write_document(ss, doc);
    return ss.str();
}

CertificateDocument parse_document(std::istream& in) {
    Lines lines = read_lines(in);
    CertificateDocument doc;
    std::size_t i = 0;
    bool sectioned = false;
    std::optional<std::string> declared;
    for (; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        if (t.empty() || t[0] == '#') continue;
        if (starts_with(t, "apex:")) {
            sectioned = true;
            std::string rest = after(t, "apex:");
            if (rest != "none") doc.apex = vertex_list(rest);
        } else if (starts_with(t, "trace:")) {
            sectioned = true;
            doc.trace = parse_edges(after(t, "trace:"));
        } else if (starts_with(t, "answer:")) {
            sectioned = true;
            declared = after(t, "answer:");
        } else if (t == "certificate:") {
            sectioned = true;
            ++i;
            break;
        } else {
            break;
        }
    }
    if (!sectioned) i = 0;
    doc.result = parse_result_at(lines, i, false);
    if (declared && *declared != to_string(doc.result.answer)) fail("'answer:' section disagrees with the certificate");
    return doc;
}

CertificateDocument parse_document_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_document(ss);
}

}  // namespace pcontract
