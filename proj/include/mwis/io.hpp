#pragma once

#include "mwis/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwis {

/// Malformed input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class InstanceFormat { MetisWeighted, EdgeList };

std::optional<InstanceFormat> format_from_name(std::string_view name);
/// Edge list if the first non-comment token is `v` or `e`, METIS otherwise.
InstanceFormat sniff_format(std::string_view text);

/// Header `n m [fmt]` with fmt 10 (vertex weights) or 0/absent (unit
/// weights); line i lists ω(v_i) and its 1-based neighbors. Vertex i of the
/// file becomes id i-1.
WeightedGraph parse_metis(std::string_view text);
/// Writes the active vertices renumbered 1..k in ascending id order.
std::string write_metis(const WeightedGraph& g);

struct LabeledGraph {
    WeightedGraph graph;
    /// labels[id] is the external name of vertex id.
    std::vector<std::uint64_t> labels;
};

/// Lines `v <label> <weight>` and `e <label> <label>`. Labels are mapped to
/// ids 0, 1, ... in order of declaration; duplicate edges are merged.
LabeledGraph parse_edge_list(std::string_view text);
/// Uses the vertex id as label when `labels` is empty.
std::string write_edge_list(const WeightedGraph& g, const std::vector<std::uint64_t>& labels = {});

struct SolutionFile {
    std::vector<std::uint64_t> vertices; // sorted, external names
    std::optional<std::int64_t> weight;
};

/// `# weight W` header, then one vertex per line.
std::string write_solution(const SolutionFile& solution);
SolutionFile parse_solution(std::string_view text);

/// Sidecar for a METIS kernel: line `k id` maps kernel vertex k (1-based) to
/// the internal id it stands for.
std::string write_kernel_map(std::span<const VertexId> ids);
std::vector<VertexId> parse_kernel_map(std::string_view text);

/// Erdős–Rényi G(n, p) with weights uniform in [wmin, wmax]. Same arguments,
/// same graph.
WeightedGraph gen_random(std::size_t n, double p, Weight wmin, Weight wmax, std::uint64_t seed);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace mwis
