//! Intersections of subgroups as the based component of the labeled
//! product of their folded graphs.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, StallingsGraph, DEFAULT_MAX_VERTICES};
use crate::word::{Alphabet, Letter, Word};

/// A pullback graph together with the factor vertices each of its vertices
/// projects to. `pairs[v] = (h, k)` for vertex `v`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub graph: StallingsGraph,
    pub pairs: Vec<(usize, usize)>,
}

/// The based component of the product of `h` and `k`, untrimmed.
pub fn pullback(h: &StallingsGraph, k: &StallingsGraph) -> Result<StallingsGraph> {
    Ok(pullback_with_pairs(h, k, DEFAULT_MAX_VERTICES)?.graph)
}

/// Breadth-first product construction from the pair of base vertices.
/// Pair vertices are numbered in discovery order. Never materializes more
/// than `max_vertices` pairs.
pub fn pullback_with_pairs(
    h: &StallingsGraph,
    k: &StallingsGraph,
    max_vertices: usize,
) -> Result<Pullback> {
    h.alphabet().ensure_same(k.alphabet())?;
    let (h, k) = (h.fold(), k.fold());
    let (th, tk) = (h.transitions(), k.transitions());
    let rank = h.alphabet().rank();
    let too_large = || Error::PullbackTooLarge {
        cap: max_vertices,
        left: h.vertex_count(),
        right: k.vertex_count(),
    };
    if max_vertices == 0 {
        return Err(too_large());
    }

    let start = (h.base(), k.base());
    let mut ids = HashMap::from([(start, 0usize)]);
    let mut pairs = vec![start];
    let mut queue = VecDeque::from([start]);
    let mut edges = Vec::new();

    while let Some((u, v)) = queue.pop_front() {
        let from = ids[&(u, v)];
        for x in 0..rank {
            for letter in [Letter::pos(x), Letter::neg(x)] {
                let (Some(u2), Some(v2)) = (th.step(u, letter), tk.step(v, letter)) else {
                    continue;
                };
                let to = match ids.entry((u2, v2)) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        if pairs.len() >= max_vertices {
                            return Err(too_large());
                        }
                        let id = pairs.len();
                        e.insert(id);
                        pairs.push((u2, v2));
                        queue.push_back((u2, v2));
                        id
                    }
                };
                // each edge is recorded once, from its source
                if !letter.inverse {
                    edges.push(Edge::new(from, x, to));
                }
            }
        }
    }

    let graph = StallingsGraph::from_folded_parts(h.alphabet(), pairs.len(), 0, edges);
    Ok(Pullback { graph, pairs })
}

/// Rank of `⟨gens_h⟩ ∩ ⟨gens_k⟩`.
pub fn intersection_rank(gens_h: &[Word], gens_k: &[Word], alphabet: &Alphabet) -> Result<usize> {
    intersection_rank_with_limit(gens_h, gens_k, alphabet, DEFAULT_MAX_VERTICES)
}

pub fn intersection_rank_with_limit(
    gens_h: &[Word],
    gens_k: &[Word],
    alphabet: &Alphabet,
    max_vertices: usize,
) -> Result<usize> {
    let h = StallingsGraph::subgroup_with_limit(gens_h, alphabet, max_vertices)?;
    let k = StallingsGraph::subgroup_with_limit(gens_k, alphabet, max_vertices)?;
    let p = pullback_with_pairs(&h, &k, max_vertices)?;
    Ok(p.graph.core_trim().rank())
}
