//! Based, connected, generator-labeled graphs representing subgroups.
//!
//! Edges are stored in positive orientation only; walking an edge backwards
//! reads the inverse letter. A folded graph has at most one edge with a
//! given label leaving, and at most one entering, each vertex.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Default cap on the number of vertices any construction may produce.
pub const DEFAULT_MAX_VERTICES: usize = 10_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

impl Edge {
    pub const fn new(source: usize, label: usize, target: usize) -> Self {
        Self { source, label, target }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StallingsGraph {
    alphabet: Alphabet,
    vertex_count: usize,
    base: usize,
    edges: Vec<Edge>,
    folded: bool,
}

/// Forward and backward transition tables of a folded graph, indexed by
/// `vertex * rank + label`.
#[derive(Clone, Debug)]
pub(crate) struct Transitions {
    rank: usize,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
}

impl Transitions {
    fn new(g: &StallingsGraph) -> Self {
        debug_assert!(g.folded);
        let rank = g.alphabet.rank();
        let mut fwd = vec![None; g.vertex_count * rank];
        let mut bwd = vec![None; g.vertex_count * rank];
        for e in &g.edges {
            fwd[e.source * rank + e.label] = Some(e.target);
            bwd[e.target * rank + e.label] = Some(e.source);
        }
        Self { rank, fwd, bwd }
    }

    pub(crate) fn forward(&self, v: usize, label: usize) -> Option<usize> {
        self.fwd[v * self.rank + label]
    }

    pub(crate) fn backward(&self, v: usize, label: usize) -> Option<usize> {
        self.bwd[v * self.rank + label]
    }

    pub(crate) fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        if letter.inverse {
            self.backward(v, letter.index)
        } else {
            self.forward(v, letter.index)
        }
    }

    /// Neighbours of `v` in traversal order: for each label in alphabet
    /// order, the forward neighbour then the backward one.
    fn neighbours(&self, v: usize) -> impl Iterator<Item = (Letter, usize)> + '_ {
        (0..self.rank).flat_map(move |x| {
            let f = self.forward(v, x).map(|t| (Letter::pos(x), t));
            let b = self.backward(v, x).map(|s| (Letter::neg(x), s));
            f.into_iter().chain(b)
        })
    }
}

impl StallingsGraph {
    /// Validates and assembles a graph from raw parts. The result is marked
    /// unfolded regardless of its shape.
    pub fn from_parts(
        alphabet: &Alphabet,
        vertex_count: usize,
        base: usize,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        if base >= vertex_count {
            return Err(Error::InvalidGraph(format!(
                "base {base} is not one of the {vertex_count} vertices"
            )));
        }
        for e in &edges {
            if e.source >= vertex_count || e.target >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {e:?} has an endpoint outside the vertex set"
                )));
            }
            if e.label >= alphabet.rank() {
                return Err(Error::LetterOutOfRange {
                    index: e.label,
                    alphabet: alphabet.to_string(),
                });
            }
        }
        let g = Self {
            alphabet: alphabet.clone(),
            vertex_count,
            base,
            edges,
            folded: false,
        };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_folded(&self) -> bool {
        self.folded
    }

    pub(crate) fn transitions(&self) -> Transitions {
        Transitions::new(self)
    }

    pub(crate) fn from_folded_parts(
        alphabet: &Alphabet,
        vertex_count: usize,
        base: usize,
        edges: Vec<Edge>,
    ) -> Self {
        Self {
            alphabet: alphabet.clone(),
            vertex_count,
            base,
            edges,
            folded: true,
        }
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.source].push(e.target);
            adj[e.target].push(e.source);
        }
        let mut seen = vec![false; self.vertex_count];
        seen[self.base] = true;
        let mut stack = vec![self.base];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.vertex_count
    }

    /// One base vertex with a closed path spelling each generator.
    pub fn bouquet(generators: &[Word], alphabet: &Alphabet) -> Result<Self> {
        Self::bouquet_with_limit(generators, alphabet, DEFAULT_MAX_VERTICES)
    }

    pub fn bouquet_with_limit(
        generators: &[Word],
        alphabet: &Alphabet,
        max_vertices: usize,
    ) -> Result<Self> {
        for w in generators {
            alphabet.ensure_same(w.alphabet())?;
        }
        let requested = generators
            .iter()
            .filter(|w| !w.is_identity())
            .fold(1usize, |acc, w| acc.saturating_add(w.len() - 1));
        if requested > max_vertices {
            return Err(Error::GraphTooLarge {
                requested,
                cap: max_vertices,
            });
        }
        let mut vertex_count = 1;
        let mut edges = Vec::new();
        for w in generators.iter().filter(|w| !w.is_identity()) {
            let mut at = 0;
            for (i, &l) in w.letters().iter().enumerate() {
                let next = if i + 1 == w.len() {
                    0
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                edges.push(if l.inverse {
                    Edge::new(next, l.index, at)
                } else {
                    Edge::new(at, l.index, next)
                });
                at = next;
            }
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            vertex_count,
            base: 0,
            edges,
            folded: false,
        })
    }

    /// Stallings folding. Identifies equally-labeled edges that share a
    /// source or a target until the graph is deterministic and
    /// co-deterministic. Merged vertices keep the smallest original id,
    /// and surviving vertices are renumbered in ascending order.
    pub fn fold(&self) -> Self {
        if self.folded {
            return self.clone();
        }
        let mut folder = Folder::new(self.vertex_count, self.alphabet.rank());
        for e in &self.edges {
            folder.link(e.source, e.label, e.target);
        }
        folder.finish(self)
    }

    /// Marks the vertices that survive core trimming.
    pub fn core_vertices(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let mut degree = vec![0usize; n];
        let mut incident = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            degree[e.source] += 1;
            degree[e.target] += 1;
            incident[e.source].push(i);
            if e.target != e.source {
                incident[e.target].push(i);
            }
        }
        let mut alive = vec![true; n];
        let mut edge_alive = vec![true; self.edges.len()];
        let mut queue: VecDeque<usize> =
            (0..n).filter(|&v| v != self.base && degree[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &i in &incident[v] {
                if !edge_alive[i] {
                    continue;
                }
                edge_alive[i] = false;
                let e = self.edges[i];
                let other = if e.source == v { e.target } else { e.source };
                degree[other] -= 1;
                if other != self.base && alive[other] && degree[other] <= 1 {
                    queue.push_back(other);
                }
            }
        }
        alive
    }

    /// Repeatedly deletes non-base vertices of degree at most one.
    pub fn core_trim(&self) -> Self {
        let alive = self.core_vertices();
        let mut relabel = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in (0..self.vertex_count).filter(|&v| alive[v]) {
            relabel[v] = next;
            next += 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| alive[e.source] && alive[e.target])
            .map(|e| Edge::new(relabel[e.source], e.label, relabel[e.target]))
            .collect();
        Self {
            alphabet: self.alphabet.clone(),
            vertex_count: next,
            base: relabel[self.base],
            edges,
            folded: self.folded,
        }
    }

    /// Rank of the represented subgroup: `E − V + 1` of the folded core.
    pub fn rank(&self) -> usize {
        let core = self.fold().core_trim();
        core.edge_count() + 1 - core.vertex_count()
    }

    /// The folded core graph of the subgroup generated by `generators`.
    pub fn subgroup(generators: &[Word], alphabet: &Alphabet) -> Result<Self> {
        Self::subgroup_with_limit(generators, alphabet, DEFAULT_MAX_VERTICES)
    }

    pub fn subgroup_with_limit(
        generators: &[Word],
        alphabet: &Alphabet,
        max_vertices: usize,
    ) -> Result<Self> {
        Ok(Self::bouquet_with_limit(generators, alphabet, max_vertices)?
            .fold()
            .core_trim())
    }

    /// Whether `word` reads a closed path at the base.
    pub fn contains(&self, word: &Word) -> Result<bool> {
        let path = self.trace(word)?;
        Ok(path.len() == word.len() + 1 && path.last() == Some(&self.base))
    }

    /// Vertices visited while reading `word` from the base, stopping early
    /// at the first letter with no matching edge. Vertex ids refer to the
    /// folded graph.
    pub fn trace(&self, word: &Word) -> Result<Vec<usize>> {
        self.alphabet.ensure_same(word.alphabet())?;
        if !self.folded {
            return self.fold().trace(word);
        }
        let t = self.transitions();
        let mut path = vec![self.base];
        let mut at = self.base;
        for &l in word.letters() {
            match t.step(at, l) {
                Some(next) => at = next,
                None => break,
            }
            path.push(at);
        }
        Ok(path)
    }

    /// Breadth-first spanning tree from the base: parent letter and parent
    /// vertex per vertex, plus visit order.
    fn spanning_tree(&self, t: &Transitions) -> (Vec<Option<(Letter, usize)>>, Vec<usize>) {
        let mut parent = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut queue = VecDeque::from([self.base]);
        seen[self.base] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (letter, u) in t.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((letter, v));
                    queue.push_back(u);
                }
            }
        }
        (parent, order)
    }

    /// A free basis read off the non-tree edges of a breadth-first spanning
    /// tree. Has exactly `rank()` elements when the graph is a folded core.
    pub fn basis(&self) -> Vec<Word> {
        if !self.folded {
            return self.fold().basis();
        }
        let t = self.transitions();
        let (parent, order) = self.spanning_tree(&t);
        let mut path = vec![Word::identity(&self.alphabet); self.vertex_count];
        for &v in &order {
            if let Some((letter, p)) = parent[v] {
                path[v] = push_letter(&path[p], letter);
            }
        }
        let is_tree_edge = |e: &Edge| match parent[e.target] {
            Some((l, p)) if !l.inverse && l.index == e.label && p == e.source => true,
            _ => matches!(parent[e.source],
                Some((l, p)) if l.inverse && l.index == e.label && p == e.target),
        };
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges
            .iter()
            .filter(|e| !is_tree_edge(e))
            .map(|e| {
                let loop_word = push_letter(&path[e.source], Letter::pos(e.label));
                loop_word
                    .concat(&path[e.target].inverse())
                    .expect("paths share the graph alphabet")
            })
            .collect()
    }

    /// Renumbers vertices in breadth-first order from the base and sorts
    /// the edges, so that equal subgroups give equal graphs.
    pub fn canonical_form(&self) -> Self {
        if !self.folded {
            return self.fold().canonical_form();
        }
        let t = self.transitions();
        let (_, order) = self.spanning_tree(&t);
        let mut relabel = vec![usize::MAX; self.vertex_count];
        for (i, &v) in order.iter().enumerate() {
            relabel[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(relabel[e.source], e.label, relabel[e.target]))
            .collect();
        edges.sort_unstable();
        Self {
            alphabet: self.alphabet.clone(),
            vertex_count: order.len(),
            base: 0,
            edges,
            folded: true,
        }
    }

    /// Graphviz rendering. The base is a double circle; edges carry their
    /// generator name and a per-generator colour.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph stallings {\n    node [shape=circle];\n");
        for v in 0..self.vertex_count {
            let shape = if v == self.base { " [shape=doublecircle]" } else { "" };
            let _ = writeln!(out, "    {v}{shape};");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "    {} -> {} [label=\"{}\", color=\"{}\"];",
                e.source,
                e.target,
                self.alphabet.name(e.label),
                label_colour(e.label)
            );
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn label_colour(label: usize) -> &'static str {
    const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
    PALETTE[label % PALETTE.len()]
}

fn push_letter(w: &Word, l: Letter) -> Word {
    let step = Word::from_letters(w.alphabet(), &[l]).expect("letter from the same alphabet");
    w.concat(&step).expect("same alphabet")
}

/// Worklist folding over a union-find of vertices.
struct Folder {
    rank: usize,
    parent: Vec<usize>,
    out: Vec<Option<usize>>,
    inn: Vec<Option<usize>>,
    pending: Vec<(usize, usize)>,
}

impl Folder {
    fn new(n: usize, rank: usize) -> Self {
        Self {
            rank,
            parent: (0..n).collect(),
            out: vec![None; n * rank],
            inn: vec![None; n * rank],
            pending: Vec::new(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn link(&mut self, source: usize, label: usize, target: usize) {
        let (s, t) = (self.find(source), self.find(target));
        let r = self.rank;
        match self.out[s * r + label] {
            Some(other) => self.pending.push((other, t)),
            None => self.out[s * r + label] = Some(t),
        }
        match self.inn[t * r + label] {
            Some(other) => self.pending.push((other, s)),
            None => self.inn[t * r + label] = Some(s),
        }
        self.drain();
    }

    fn drain(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, gone) = (a.min(b), a.max(b));
            self.parent[gone] = keep;
            for x in 0..self.rank {
                for table in [&mut self.out, &mut self.inn] {
                    if let Some(moved) = table[gone * self.rank + x].take() {
                        match table[keep * self.rank + x] {
                            Some(existing) => self.pending.push((moved, existing)),
                            None => table[keep * self.rank + x] = Some(moved),
                        }
                    }
                }
            }
        }
    }

    fn finish(mut self, g: &StallingsGraph) -> StallingsGraph {
        let n = g.vertex_count;
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if self.find(v) == v {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = Vec::new();
        for v in 0..n {
            if relabel[v] == usize::MAX {
                continue;
            }
            for x in 0..self.rank {
                if let Some(t) = self.out[v * self.rank + x] {
                    let t = self.find(t);
                    edges.push(Edge::new(relabel[v], x, relabel[t]));
                }
            }
        }
        let base = self.find(g.base);
        StallingsGraph {
            alphabet: g.alphabet.clone(),
            vertex_count: next,
            base: relabel[base],
            edges,
            folded: true,
        }
    }
}
