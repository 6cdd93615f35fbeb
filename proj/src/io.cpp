#include "mwis/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

namespace mwis {

namespace {

// Splits text into lines without copying; a trailing newline ends the last line.
std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool looks_decimal(std::string_view tok)
{
    return tok.find_first_of(".eE") != std::string_view::npos;
}

std::uint64_t parse_unsigned(std::string_view tok, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

Weight parse_weight(std::string_view tok, std::size_t line)
{
    if (looks_decimal(tok))
        throw ParseError(line, "decimal weight '" + std::string(tok)
                                   + "' is not supported; scale weights to integers before loading");
    if (!tok.empty() && tok.front() == '-') throw ParseError(line, "negative weight '" + std::string(tok) + "'");
    std::uint64_t w = parse_unsigned(tok, line, "weight");
    if (w > static_cast<std::uint64_t>(std::numeric_limits<Weight>::max()))
        throw ParseError(line, "weight out of range '" + std::string(tok) + "'");
    return static_cast<Weight>(w);
}

bool is_comment(std::string_view line, char marker)
{
    auto t = tokens(line);
    return !t.empty() && t.front().front() == marker;
}

} // namespace

std::optional<InstanceFormat> format_from_name(std::string_view name)
{
    if (name == "metis") return InstanceFormat::MetisWeighted;
    if (name == "edgelist") return InstanceFormat::EdgeList;
    return std::nullopt;
}

InstanceFormat sniff_format(std::string_view text)
{
    for (std::string_view line : split_lines(text)) {
        auto t = tokens(line);
        if (t.empty() || t.front().front() == '%' || t.front().front() == '#') continue;
        return (t.front() == "v" || t.front() == "e") ? InstanceFormat::EdgeList : InstanceFormat::MetisWeighted;
    }
    return InstanceFormat::MetisWeighted;
}

// --- METIS ---------------------------------------------------------------------

WeightedGraph parse_metis(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && (tokens(lines[i]).empty() || is_comment(lines[i], '%'))) ++i;
    if (i == lines.size()) throw ParseError(0, "missing header");

    std::size_t header_line = i + 1;
    auto header = tokens(lines[i++]);
    if (header.size() < 2 || header.size() > 3) throw ParseError(header_line, "header must be 'n m [fmt]'");
    std::uint64_t n = parse_unsigned(header[0], header_line, "vertex count");
    std::uint64_t m = parse_unsigned(header[1], header_line, "edge count");
    bool weighted = false;
    if (header.size() == 3) {
        std::uint64_t fmt = parse_unsigned(header[2], header_line, "format code");
        if (fmt == 10) weighted = true;
        else if (fmt != 0)
            throw ParseError(header_line, "unsupported format code " + std::string(header[2]) + " (expected 10)");
    }
    if (n > std::numeric_limits<VertexId>::max()) throw ParseError(header_line, "too many vertices");

    std::vector<Weight> weights(n, 1);
    std::vector<std::vector<VertexId>> adjacency(n);
    std::vector<std::size_t> line_of(n, 0);
    std::size_t v = 0;
    for (; i < lines.size() && v < n; ++i) {
        if (is_comment(lines[i], '%')) continue;
        std::size_t lineno = i + 1;
        auto t = tokens(lines[i]);
        std::size_t k = 0;
        if (weighted) {
            if (t.empty()) throw ParseError(lineno, "missing weight of vertex " + std::to_string(v + 1));
            weights[v] = parse_weight(t[k++], lineno);
        }
        for (; k < t.size(); ++k) {
            if (looks_decimal(t[k])) throw ParseError(lineno, "invalid neighbor '" + std::string(t[k]) + "'");
            std::uint64_t u = parse_unsigned(t[k], lineno, "neighbor");
            if (u < 1 || u > n) throw ParseError(lineno, "neighbor " + std::to_string(u) + " out of range");
            if (u - 1 == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(v + 1));
            adjacency[v].push_back(static_cast<VertexId>(u - 1));
        }
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw ParseError(lineno, "duplicate neighbor of vertex " + std::to_string(v + 1));
        line_of[v] = lineno;
        ++v;
    }
    if (v < n) throw ParseError(0, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(v));
    for (; i < lines.size(); ++i)
        if (!tokens(lines[i]).empty() && !is_comment(lines[i], '%'))
            throw ParseError(i + 1, "unexpected content after the last vertex");

    WeightedGraph g(weights);
    std::uint64_t directed = 0;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b : adjacency[a]) {
            ++directed;
            if (!std::binary_search(adjacency[b].begin(), adjacency[b].end(), a))
                throw ParseError(line_of[a], "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1)
                                                 + " is missing from the line of vertex " + std::to_string(b + 1));
            if (a < b) g.add_edge(a, b);
        }
    }
    if (directed / 2 != m)
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(directed / 2));
    return g;
}

std::string write_metis(const WeightedGraph& g)
{
    VertexSet ids = g.vertices();
    std::ostringstream out;
    out << ids.size() << ' ' << g.num_edges() << " 10\n";
    for (VertexId v : ids) {
        out << g.weight(v);
        for (VertexId u : g.neighbors(v))
            out << ' ' << (std::lower_bound(ids.begin(), ids.end(), u) - ids.begin()) + 1;
        out << '\n';
    }
    return out.str();
}

// --- Edge list -----------------------------------------------------------------

LabeledGraph parse_edge_list(std::string_view text)
{
    LabeledGraph out;
    std::unordered_map<std::uint64_t, VertexId> index;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t lineno = i + 1;
        auto t = tokens(lines[i]);
        if (t.empty() || t.front().front() == '#' || t.front().front() == '%') continue;
        if (t.front() == "v") {
            if (t.size() != 3) throw ParseError(lineno, "expected 'v <id> <weight>'");
            std::uint64_t label = parse_unsigned(t[1], lineno, "vertex id");
            Weight w = parse_weight(t[2], lineno);
            if (index.count(label)) throw ParseError(lineno, "vertex " + std::to_string(label) + " declared twice");
            index.emplace(label, out.graph.add_vertex(w));
            out.labels.push_back(label);
        } else if (t.front() == "e") {
            if (t.size() != 3) throw ParseError(lineno, "expected 'e <id> <id>'");
            std::uint64_t a = parse_unsigned(t[1], lineno, "vertex id");
            std::uint64_t b = parse_unsigned(t[2], lineno, "vertex id");
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end() || ib == index.end())
                throw ParseError(lineno, "edge uses undeclared vertex " + std::to_string(ia == index.end() ? a : b));
            if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
            if (!out.graph.has_edge(ia->second, ib->second)) out.graph.add_edge(ia->second, ib->second);
        } else {
            throw ParseError(lineno, "unknown record '" + std::string(t.front()) + "'");
        }
    }
    return out;
}

std::string write_edge_list(const WeightedGraph& g, const std::vector<std::uint64_t>& labels)
{
    auto label = [&](VertexId v) -> std::uint64_t { return labels.empty() ? v : labels.at(v); };
    std::ostringstream out;
    VertexSet ids = g.vertices();
    for (VertexId v : ids) out << "v " << label(v) << ' ' << g.weight(v) << '\n';
    for (VertexId v : ids)
        for (VertexId u : g.neighbors(v))
            if (v < u) out << "e " << label(v) << ' ' << label(u) << '\n';
    return out.str();
}

// --- Solutions and sidecars ----------------------------------------------------

std::string write_solution(const SolutionFile& solution)
{
    std::ostringstream out;
    if (solution.weight) out << "# weight " << *solution.weight << '\n';
    std::vector<std::uint64_t> sorted = solution.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted) out << v << '\n';
    return out.str();
}

SolutionFile parse_solution(std::string_view text)
{
    SolutionFile out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        if (t.empty()) continue;
        if (t.front().front() == '#') {
            if (t.size() == 3 && t[0] == "#" && t[1] == "weight")
                out.weight = static_cast<std::int64_t>(parse_weight(t[2], i + 1));
            continue;
        }
        if (t.size() != 1) throw ParseError(i + 1, "expected one vertex per line");
        out.vertices.push_back(parse_unsigned(t[0], i + 1, "vertex"));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) != out.vertices.end())
        throw ParseError(0, "solution lists a vertex twice");
    return out;
}

std::string write_kernel_map(std::span<const VertexId> ids)
{
    std::ostringstream out;
    out << "# kernel_index internal_id\n";
    for (std::size_t i = 0; i < ids.size(); ++i) out << i + 1 << ' ' << ids[i] << '\n';
    return out.str();
}

std::vector<VertexId> parse_kernel_map(std::string_view text)
{
    std::vector<VertexId> ids;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        if (t.empty() || t.front().front() == '#') continue;
        if (t.size() != 2) throw ParseError(i + 1, "expected 'kernel_index internal_id'");
        std::uint64_t k = parse_unsigned(t[0], i + 1, "kernel index");
        std::uint64_t id = parse_unsigned(t[1], i + 1, "internal id");
        if (k != ids.size() + 1) throw ParseError(i + 1, "kernel indices must be consecutive from 1");
        if (id > std::numeric_limits<VertexId>::max()) throw ParseError(i + 1, "internal id out of range");
        ids.push_back(static_cast<VertexId>(id));
    }
    return ids;
}

// --- Generation ----------------------------------------------------------------

WeightedGraph gen_random(std::size_t n, double p, Weight wmin, Weight wmax, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
    if (wmin < 0 || wmin > wmax) throw std::invalid_argument("weight range must satisfy 0 <= wmin <= wmax");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> weight(wmin, wmax);
    std::vector<Weight> weights(n);
    for (auto& w : weights) w = weight(rng);
    WeightedGraph g(weights);
    if (n < 2 || p == 0.0) return g;

    if (p == 1.0) {
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
        return g;
    }
    // Geometric skipping over the pairs (w, v), w < v, in row order.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    const auto count = static_cast<std::int64_t>(n);
    while (v < count) {
        double skip = std::floor(std::log1p(-unit(rng)) / log_q);
        if (skip > static_cast<double>(count) * static_cast<double>(count)) break;
        w += 1 + static_cast<std::int64_t>(skip);
        while (w >= v && v < count) {
            w -= v;
            ++v;
        }
        if (v < count) g.add_edge(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
    return g;
}

// --- Files ---------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace mwis
