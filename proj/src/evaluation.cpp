#include "collab/evaluation.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "collab/error.hpp"

namespace collab {

EvalReport evaluate_counts(std::size_t n_predicted, std::size_t n_correct, std::size_t m_new,
                           std::size_t n_candidates) {
  if (n_correct > std::min(n_predicted, m_new))
    throw ValidationError(fmt::format("{} correct out of {} predicted / {} new", n_correct, n_predicted, m_new));
  EvalReport r;
  r.n_predicted = n_predicted;
  r.n_correct = n_correct;
  r.m_new = m_new;
  r.n_candidates = n_candidates;
  r.accuracy = n_predicted == 0 ? 0.0 : static_cast<double>(n_correct) / static_cast<double>(n_predicted);
  r.recall = m_new == 0 ? 0.0 : static_cast<double>(n_correct) / static_cast<double>(m_new);
  r.random_guess_accuracy = n_candidates == 0 ? 0.0 : static_cast<double>(m_new) / static_cast<double>(n_candidates);
  return r;
}

EvalReport evaluate(const SchoolEdgeSet& pred, const SchoolEdgeSet& new_edges, const SchoolEdgeSet& candidates) {
  for (const auto& p : pred)
    if (!candidates.contains(p))
      throw ValidationError(fmt::format("predicted pair ({}, {}) is not a candidate", p.k, p.l));
  for (const auto& p : new_edges)
    if (!candidates.contains(p))
      throw ValidationError(fmt::format("new edge ({}, {}) is not a candidate", p.k, p.l));
  std::size_t correct = 0;
  for (const auto& p : pred) correct += new_edges.contains(p) ? 1 : 0;
  return evaluate_counts(pred.size(), correct, new_edges.size(), candidates.size());
}

}  // namespace collab
