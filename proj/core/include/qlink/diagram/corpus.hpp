#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlink/diagram/link_diagram.hpp"
#include "qlink/graphmodel/graph.hpp"

namespace qlink {

inline constexpr std::uint64_t kCorpusSeed = 20240917;

struct CorpusEntry {
  std::string name;
  std::optional<WeightedPlanarGraph> graph;  // set for graph-built entries
  LinkDiagram diagram;
};

// Rotation-invariant code of an embedded weighted graph; equal codes mean
// the same embedded graph up to relabelling.
std::vector<int> embedding_code(const WeightedPlanarGraph& g);

// Connected loopless planar embeddings with 1..max_edges edges, all weights 1.
std::vector<WeightedPlanarGraph> embedded_shapes(int max_edges);

// Every nonzero weighting of every shape with at most max_crossings crossings.
std::vector<CorpusEntry> graph_corpus(int max_edges, int max_crossings);

// Closure of a braid word; generator k > 0 is sigma_k, k < 0 its inverse.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

// Closures of random braids using every generator, so the diagram is connected.
std::vector<CorpusEntry> random_pd_corpus(int count, int max_crossings,
                                          std::uint64_t seed = kCorpusSeed);

}  // namespace qlink
