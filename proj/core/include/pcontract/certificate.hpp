#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcontract/graph.hpp"
#include "pcontract/witness.hpp"

namespace pcontract {

enum class Answer { yes, no, undecided };

std::string_view to_string(Answer a) noexcept;

/// Every edge subset of size at most `budget` was examined.
struct ExhaustionProof {
    std::size_t edge_count = 0;
    int budget = 0;
    std::uint64_t subsets_examined = 0;
    /// Original edges contracted as irrelevant before the search; the search
    /// ran on the graph they produce.
    std::vector<Edge> reduced_by;
};

/// Number of edge subsets of size 0..k of an m-edge set, saturating at the
/// maximum uint64 value.
std::uint64_t subsets_up_to(std::size_t m, int k);

/// K5 witness structures of subgraphs whose edge sets E_i (edges incident
/// with parts 1..4) are pairwise disjoint. Parts are labelled 1..5; hosts are
/// the induced subgraphs on the union of the parts.
struct Type1Certificate {
    int budget = 0;
    std::vector<WitnessStructure> structures;
    std::vector<EdgeSet> edge_sets;
};

/// No vertex set of size at most `budget` planarizes the graph.
struct NoApexProof {
    int budget = 0;
};

struct SolveResult;

/// The component holding `representative` is a no-instance at `budget`.
struct ComponentRefutation {
    Vertex representative = 0;
    std::shared_ptr<const SolveResult> result;
};

/// Components needing more than their budgets; the budgets plus one sum to
/// more than the total budget.
struct ComponentsProof {
    std::vector<ComponentRefutation> parts;
};

using Refutation = std::variant<std::monostate, ExhaustionProof, Type1Certificate, NoApexProof, ComponentsProof>;

struct SolveResult {
    Answer answer = Answer::undecided;
    int budget = 0;
    /// Original edges to contract; present iff the answer is yes.
    std::vector<Edge> contraction_edges;
    Refutation refutation;
};

/// `answer yes|no|undecided`, `budget k`, then `edges: u v; ...` or one of
/// the `proof:` forms.
void write_result(std::ostream& out, const SolveResult& r);
std::string to_result_string(const SolveResult& r);
SolveResult parse_result(std::istream& in);
SolveResult parse_result_string(const std::string& text);

/// Solver output: apex set, contracted irrelevant edges, answer and the
/// certificate for the original graph.
struct CertificateDocument {
    std::optional<std::vector<Vertex>> apex;
    std::vector<Edge> trace;
    SolveResult result;
};

void write_document(std::ostream& out, const CertificateDocument& doc);
std::string to_document_string(const CertificateDocument& doc);
/// Accepts a full document or a bare result record.
CertificateDocument parse_document(std::istream& in);
CertificateDocument parse_document_string(const std::string& text);

}  // namespace pcontract
