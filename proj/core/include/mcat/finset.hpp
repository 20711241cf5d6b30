#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mcat/decomposition.hpp"
#include "mcat/instance.hpp"

namespace mcat::finset {

/**
 * Connected components of the bipartite graph with vertex set dom + cod and
 * an edge (a, f(a)) per domain element. Blocks are listed by smallest domain
 * index; codomain elements with empty preimage are listed separately.
 */
struct ComponentPartition {
  struct Block {
    std::vector<std::size_t> dom;  // ascending domain indices
    std::vector<std::size_t> cod;  // ascending codomain indices (= image of dom)
  };
  std::vector<Block> blocks;
  std::vector<std::size_t> isolated_cod;
};

ComponentPartition components(const Morphism& f);

/**
 * Sequential decomposability for finite functions.
 *
 * Tries the epi-mono image factorization first and falls back to a bounded
 * search over fresh intermediate objects when the image factorization fails
 * the policy. Identity morphisms are not decomposable. Under Essential a
 * witness must have no injective factor: an injective finite function is an
 * isomorphism onto its image, so such a factor does no sequential work.
 */
DecompositionOutcome seq_decompose(const Morphism& f, Policy policy);

/**
 * Parallel decomposability over the disjoint-union structure. Enumerates
 * two-sided assignments of the component blocks and the isolated codomain
 * elements; witness isomorphisms are the retagging bijections of the
 * decomposition square. Throws InstanceError outside
 * (FinSet, Coproduct) and SizeError past the enumeration cap.
 */
DecompositionOutcome par_decompose_coproduct(const Morphism& f, Policy policy);

/**
 * Fixed-witness parallel check over the cartesian-product structure: given
 * split objects and bijections onto dom(f)/cod(f), decides whether the
 * transported function factors coordinatewise, returning the induced
 * factors when it does. Throws WitnessError on non-bijective isos.
 */
DecompositionOutcome par_check_product(const Morphism& f,
                                       const std::pair<Object, Object>& split_dom,
                                       const std::pair<Object, Object>& split_cod,
                                       const Morphism& dom_iso, const Morphism& cod_iso,
                                       Policy policy = Policy::Nondegenerate);

/**
 * Existential parallel search over the cartesian-product structure: all
 * cardinality factorizations |dom| = m*n, |cod| = p*q with factors >= 2 and
 * all relabelings (canonicalized up to factor symmetry). Returns the witness
 * minimizing (|C1|, lexicographic factor tables). Throws SizeError above
 * max_card.
 */
DecompositionOutcome par_search_product(const Morphism& f, std::size_t max_card = 8);

}  // namespace mcat::finset
