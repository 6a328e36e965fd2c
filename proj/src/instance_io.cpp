#include "sqroot/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sqroot {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            const std::size_t begin = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > begin) line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::size_t parse_count(const Line& line, const Token& tok, const char* what) {
    std::size_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError(line.number, tok.column, std::string("expected ") + what);
    return value;
}

Vertex parse_vertex(const Line& line, const Token& tok, std::size_t n) {
    const std::size_t value = parse_count(line, tok, "a vertex number");
    if (value < 1 || value > n) {
        throw ParseError(line.number, tok.column, "vertex " + std::string(tok.text) + " outside 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(value - 1);
}

void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() < count) {
        const Token& tail = line.tokens.back();
        throw ParseError(line.number, tail.column + tail.text.size(), "missing field");
    }
    if (line.tokens.size() > count) throw ParseError(line.number, line.tokens[count].column, "unexpected extra field");
}

std::string vertex_list(const std::vector<Vertex>& vs) {
    if (vs.empty()) return "-";
    std::string out;
    for (Vertex v : vs) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

std::string edge_list(const EdgeSet& es) {
    if (es.empty()) return "-";
    std::string out;
    for (const Edge& e : es) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = s.find(sep, start);
        parts.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return parts;
}

std::vector<Vertex> parse_vertex_list(const Line& line, const Token& tok, std::size_t n) {
    std::vector<Vertex> out;
    if (tok.text == "-") return out;
    for (std::string_view part : split_on(tok.text, ',')) {
        const auto offset = static_cast<std::size_t>(part.data() - tok.text.data());
        out.push_back(parse_vertex(line, {part, tok.column + offset}, n));
    }
    return out;
}

EdgeSet parse_edge_list(const Line& line, const Token& tok, std::size_t n) {
    EdgeSet out;
    if (tok.text == "-") return out;
    for (std::string_view part : split_on(tok.text, ',')) {
        const auto offset = static_cast<std::size_t>(part.data() - tok.text.data());
        const auto ends = split_on(part, '-');
        if (ends.size() != 2) throw ParseError(line.number, tok.column + offset, "expected an edge u-v");
        const Vertex a = parse_vertex(line, {ends[0], tok.column + offset}, n);
        const Vertex b = parse_vertex(line, {ends[1], tok.column + offset + ends[0].size() + 1}, n);
        if (a == b) throw ParseError(line.number, tok.column + offset, "self-loop");
        out.emplace(a, b);
    }
    return out;
}

}  // namespace

LabeledInstance parse_instance(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    EdgeSet seen;
    // Label lines are checked against the edge set once all e lines are read.
    std::vector<std::pair<Edge, std::pair<std::size_t, std::size_t>>> forced_at;
    std::vector<std::pair<Edge, std::pair<std::size_t, std::size_t>>> forbidden_at;
    EdgeSet forced;
    EdgeSet forbidden;

    for (const Line& line : lines) {
        const Token& head = line.tokens.front();
        if (head.text == "c") continue;
        if (head.text == "p") {
            if (have_header) throw ParseError(line.number, head.column, "second header line");
            expect_arity(line, 4);
            if (line.tokens[1].text != "sqroot") throw ParseError(line.number, line.tokens[1].column, "expected format name sqroot");
            n = parse_count(line, line.tokens[2], "a vertex count");
            m = parse_count(line, line.tokens[3], "an edge count");
            have_header = true;
            continue;
        }
        if (head.text != "e" && head.text != "r" && head.text != "b") {
            throw ParseError(line.number, head.column, "unknown line type '" + std::string(head.text) + "'");
        }
        if (!have_header) throw ParseError(line.number, head.column, "edge line before the header");
        expect_arity(line, 3);
        const Vertex a = parse_vertex(line, line.tokens[1], n);
        const Vertex b = parse_vertex(line, line.tokens[2], n);
        if (a == b) throw ParseError(line.number, line.tokens[2].column, "self-loop");
        const Edge e(a, b);
        if (head.text == "e") {
            if (!seen.insert(e).second) throw ParseError(line.number, head.column, "duplicate edge");
            edges.push_back(e);
        } else {
            auto& into = head.text == "r" ? forced : forbidden;
            auto& where = head.text == "r" ? forced_at : forbidden_at;
            if (!into.insert(e).second) throw ParseError(line.number, head.column, "duplicate label");
            where.push_back({e, {line.number, head.column}});
        }
    }
    if (!have_header) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing header line 'p sqroot <n> <m>'");
    if (edges.size() != m) {
        throw ParseError(lines.back().number, 1,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    for (const auto* list : {&forced_at, &forbidden_at}) {
        for (const auto& [e, at] : *list) {
            if (!seen.contains(e)) throw ParseError(at.first, at.second, "labeled edge is not listed as an e line");
        }
    }
    return LabeledInstance{Graph(n, edges), std::move(forced), std::move(forbidden)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

LabeledInstance read_instance_file(const std::string& path) { return parse_instance(read_file(path)); }

std::string format_instance(const LabeledInstance& inst) {
    std::ostringstream out;
    out << "p sqroot " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
    for (const Edge& e : inst.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (const Edge& e : inst.forced) out << "r " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (const Edge& e : inst.forbidden) out << "b " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string format_graph(const Graph& g) { return format_instance(LabeledInstance{g, {}, {}}); }

std::string format_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    out << "t sqroot-trace " << trace.vertex_count << ' ' << trace.events.size() << '\n';
    for (const ReductionEvent& ev : trace.events) {
        const char* twin = ev.twin == TwinCase::NonTwin ? "non-twin" : ev.twin == TwinCase::Flipped ? "flipped" : "default";
        out << "s " << ev.partition.u + 1 << ' ' << ev.partition.v + 1 << ' ' << twin << ' ' << vertex_list(ev.partition.x) << ' '
            << vertex_list(ev.partition.y) << ' ' << edge_list(ev.private_edges) << ' ' << edge_list(ev.forced_added) << ' '
            << edge_list(ev.forbidden_added) << '\n';
    }
    return out.str();
}

ReductionTrace parse_trace(std::string_view text) {
    const auto lines = split_lines(text);
    ReductionTrace trace;
    bool have_header = false;
    std::size_t expected = 0;
    for (const Line& line : lines) {
        const Token& head = line.tokens.front();
        if (head.text == "c") continue;
        if (head.text == "t") {
            if (have_header) throw ParseError(line.number, head.column, "second header line");
            expect_arity(line, 4);
            if (line.tokens[1].text != "sqroot-trace") {
                throw ParseError(line.number, line.tokens[1].column, "expected format name sqroot-trace");
            }
            trace.vertex_count = parse_count(line, line.tokens[2], "a vertex count");
            expected = parse_count(line, line.tokens[3], "an event count");
            have_header = true;
            continue;
        }
        if (head.text != "s") throw ParseError(line.number, head.column, "unknown line type '" + std::string(head.text) + "'");
        if (!have_header) throw ParseError(line.number, head.column, "event line before the header");
        expect_arity(line, 9);
        const std::size_t n = trace.vertex_count;
        ReductionEvent ev;
        ev.partition.u = parse_vertex(line, line.tokens[1], n);
        ev.partition.v = parse_vertex(line, line.tokens[2], n);
        if (ev.partition.u == ev.partition.v) throw ParseError(line.number, line.tokens[2].column, "self-loop");
        ev.edge = Edge(ev.partition.u, ev.partition.v);
        const std::string_view twin = line.tokens[3].text;
        if (twin == "non-twin") {
            ev.twin = TwinCase::NonTwin;
        } else if (twin == "flipped") {
            ev.twin = TwinCase::Flipped;
        } else if (twin == "default") {
            ev.twin = TwinCase::Default;
        } else {
            throw ParseError(line.number, line.tokens[3].column, "expected non-twin, flipped or default");
        }
        ev.partition.x = parse_vertex_list(line, line.tokens[4], n);
        ev.partition.y = parse_vertex_list(line, line.tokens[5], n);
        ev.private_edges = parse_edge_list(line, line.tokens[6], n);
        ev.forced_added = parse_edge_list(line, line.tokens[7], n);
        ev.forbidden_added = parse_edge_list(line, line.tokens[8], n);
        ev.deleted = ev.forbidden_added;
        ev.deleted.insert(ev.edge);
        trace.events.push_back(std::move(ev));
    }
    if (!have_header) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing header line 't sqroot-trace <n> <k>'");
    if (trace.events.size() != expected) {
        throw ParseError(lines.back().number, 1,
                         "header declares " + std::to_string(expected) + " events, found " + std::to_string(trace.events.size()));
    }
    return trace;
}

std::string format_decomposition(const TreeDecomposition& td, std::size_t vertex_count) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

std::string format_dot(const LabeledInstance& inst) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < inst.graph.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
    for (const Edge& e : inst.graph.edges()) {
        out << "  " << e.u + 1 << " -- " << e.v + 1;
        if (inst.forced.contains(e)) out << " [style=bold]";
        if (inst.forbidden.contains(e)) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sqroot
