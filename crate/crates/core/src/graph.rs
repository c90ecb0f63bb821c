//! Labeled simple graphs and the combinatorics of closed labelings.
//!
//! Vertices are `0..n`. Adjacency is kept as one `u64` row per vertex, so a
//! graph holds at most [`MAX_VERTICES`] vertices; every algorithm here is
//! desk-scale.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count (one adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`LabeledGraph::find_closed_labeling`].
pub const MAX_LABELING_SEARCH: usize = 10;

/// Largest vertex count accepted by [`enumerate_closed_k4free`].
pub const MAX_CORPUS_VERTICES: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} is out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("the labeling is not closed: {{{i},{k}}} is an edge but {{{i},{j}}} or {{{j},{k}}} is not")]
    NotClosed { i: usize, j: usize, k: usize },
    #[error("{0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("{op} supports at most {max} vertices, got {n}")]
    SizeLimit { op: &'static str, n: usize, max: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An unordered pair `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Normalizes the endpoint order; `None` for a loop.
    pub fn new(a: usize, b: usize) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A 3-clique `(i, j, k)` with `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub usize, pub usize, pub usize);

impl Triangle {
    pub fn vertices(self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }
}

/// Maximal cliques of a closed graph, sorted by `(min vertex, max vertex)`.
///
/// Singleton cliques (isolated vertices) are not listed: the list exists to
/// index edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    cliques: Vec<Vec<usize>>,
}

impl CliqueList {
    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// 1-based index of the first clique containing both endpoints.
    pub fn index_of(&self, e: Edge) -> Option<usize> {
        self.cliques
            .iter()
            .position(|c| c.binary_search(&e.lo).is_ok() && c.binary_search(&e.hi).is_ok())
            .map(|p| p + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(LabeledGraph { n, adj: vec![0; n] })
    }

    /// Builds a graph from endpoint pairs; duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a] >> b & 1 == 1
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    /// Edges in lexicographic order of `(lo, hi)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut row = self.adj[i] >> (i + 1);
            let mut j = i + 1;
            while row != 0 {
                if row & 1 == 1 {
                    out.push(Edge { lo: i, hi: j });
                }
                row >>= 1;
                j += 1;
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// The graph whose vertex `perm[v]` plays the role of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal the vertex count");
        Self::from_edges(self.n, self.edges().into_iter().map(|e| (perm[e.lo], perm[e.hi])))
    }

    /// First violation `(i, j, k)` of the triple condition: `i < j < k`,
    /// `{i,k}` an edge, and `{i,j}` or `{j,k}` missing.
    pub fn closed_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for k in i + 2..self.n {
                if !self.has_edge(i, k) {
                    continue;
                }
                for j in i + 1..k {
                    if !self.has_edge(i, j) || !self.has_edge(j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// For all `i < j < k`, the edge `{i,k}` forces `{i,j}` and `{j,k}`.
    pub fn is_closed_labeling(&self) -> bool {
        self.closed_violation().is_none()
    }

    /// The pairwise-edge form of closedness: for edges `{i,j}`, `{k,l}` with
    /// `i < j`, `k < l`, a shared smaller endpoint forces `{j,l}` and a shared
    /// larger endpoint forces `{i,k}`.
    ///
    /// Implied by [`Self::is_closed_labeling`]; the converse holds for
    /// connected graphs.
    pub fn satisfies_pairwise_closed_condition(&self) -> bool {
        let edges = self.edges();
        for (a, e) in edges.iter().enumerate() {
            for f in &edges[a + 1..] {
                if e.lo == f.lo && !self.has_edge(e.hi, f.hi) {
                    return false;
                }
                if e.hi == f.hi && !self.has_edge(e.lo, f.lo) {
                    return false;
                }
            }
        }
        true
    }

    fn require_closed(&self) -> Result<(), GraphError> {
        match self.closed_violation() {
            Some((i, j, k)) => Err(GraphError::NotClosed { i, j, k }),
            None => Ok(()),
        }
    }

    /// Searches for `perm` with `self.relabel(perm)` closed. Returns the
    /// identity when the current labeling already is.
    pub fn find_closed_labeling(&self) -> Result<Option<Vec<usize>>, GraphError> {
        if self.n > MAX_LABELING_SEARCH {
            return Err(GraphError::SizeLimit {
                op: "closed labeling search",
                n: self.n,
                max: MAX_LABELING_SEARCH,
            });
        }
        if self.is_closed_labeling() {
            return Ok(Some((0..self.n).collect()));
        }
        // order[p] is the vertex receiving label p.
        let mut order = Vec::with_capacity(self.n);
        let found = self.extend_labeling(&mut order, 0);
        Ok(found.then(|| {
            let mut perm = vec![0; self.n];
            for (label, &v) in order.iter().enumerate() {
                perm[v] = label;
            }
            perm
        }))
    }

    fn extend_labeling(&self, order: &mut Vec<usize>, used: u64) -> bool {
        let k = order.len();
        if k == self.n {
            return true;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            order.push(v);
            if self.prefix_is_closed(order) && self.extend_labeling(order, used | 1 << v) {
                return true;
            }
            order.pop();
        }
        false
    }

    // Only triples whose largest label is the newest one need checking.
    fn prefix_is_closed(&self, order: &[usize]) -> bool {
        let k = order.len() - 1;
        let vk = order[k];
        for i in 0..k {
            if !self.has_edge(order[i], vk) {
                continue;
            }
            for &vj in &order[i + 1..k] {
                if !self.has_edge(order[i], vj) || !self.has_edge(vj, vk) {
                    return false;
                }
            }
        }
        true
    }

    /// All maximal cliques with at least two vertices (Bron–Kerbosch with
    /// pivoting), in no particular order.
    pub fn all_maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        self.bron_kerbosch(0, all, 0, &mut out);
        out.retain(|c| c.len() >= 2);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<Vec<usize>>) {
        if p == 0 {
            if x == 0 {
                out.push(bits(r));
            }
            return;
        }
        let pivot = bits(p | x)
            .into_iter()
            .max_by_key(|&u| (self.adj[u] & p).count_ones())
            .expect("p is nonempty");
        let mut todo = p & !self.adj[pivot];
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            self.bron_kerbosch(r | 1 << v, p & self.adj[v], x & self.adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }

    /// Maximal cliques sorted by `(min, max)`. Rejects non-closed labelings.
    pub fn maximal_cliques(&self) -> Result<CliqueList, GraphError> {
        self.require_closed()?;
        let mut cliques = self.all_maximal_cliques();
        cliques.sort_by_key(|c| (c[0], c[c.len() - 1]));
        Ok(CliqueList { cliques })
    }

    pub fn clique_index(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::EdgeNotInGraph(e));
        }
        let list = self.maximal_cliques()?;
        Ok(list.index_of(e).expect("every edge lies in a maximal clique"))
    }

    /// All 3-cliques, sorted lexicographically.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for e in self.edges() {
            let mut common = self.adj[e.lo] & self.adj[e.hi] & !((2u64 << e.hi) - 1);
            while common != 0 {
                let k = common.trailing_zeros() as usize;
                common &= common - 1;
                out.push(Triangle(e.lo, e.hi, k));
            }
        }
        out
    }

    /// All 4-cliques `[i, j, k, l]` with `i < j < k < l`, sorted.
    pub fn four_cliques(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for t in self.triangles() {
            let mut common =
                self.adj[t.0] & self.adj[t.1] & self.adj[t.2] & !((2u64 << t.2) - 1);
            while common != 0 {
                let l = common.trailing_zeros() as usize;
                common &= common - 1;
                out.push([t.0, t.1, t.2, l]);
            }
        }
        out
    }

    pub fn has_induced_k4(&self) -> bool {
        self.triangles().into_iter().any(|t| {
            self.adj[t.0] & self.adj[t.1] & self.adj[t.2] != 0
        })
    }

    /// Parses the edge-list format: one `a b` pair per line, `#` comments,
    /// blank lines ignored, optional `n <count>` header. Without a header the
    /// vertex count is one more than the largest label.
    pub fn parse_edge_list(text: &str, one_indexed: bool) -> Result<Self, GraphError> {
        let mut declared: Option<usize> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |msg: String| GraphError::Parse { line: line_no, msg };
            if tokens[0] == "n" {
                if tokens.len() != 2 {
                    return Err(parse_err("expected `n <count>`".into()));
                }
                if declared.is_some() {
                    return Err(parse_err("duplicate `n` header".into()));
                }
                let count = tokens[1]
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("bad vertex count `{}`: {e}", tokens[1])))?;
                declared = Some(count);
                continue;
            }
            if tokens.len() != 2 {
                return Err(parse_err(format!("expected two vertex labels, found {}", tokens.len())));
            }
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip(&tokens) {
                let v = tok
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("bad vertex label `{tok}`: {e}")))?;
                *slot = if one_indexed {
                    v.checked_sub(1)
                        .ok_or_else(|| parse_err("label 0 in one-indexed input".into()))?
                } else {
                    v
                };
            }
            if ends[0] == ends[1] {
                return Err(parse_err(format!("self-loop at vertex {}", tokens[0])));
            }
            pairs.push((ends[0], ends[1], line_no));
        }
        let inferred = pairs.iter().map(|&(a, b, _)| a.max(b) + 1).max().unwrap_or(0);
        let n = declared.unwrap_or(inferred);
        let mut g = Self::empty(n)?;
        for (a, b, line) in pairs {
            g.add_edge(a, b).map_err(|e| GraphError::Parse { line, msg: e.to_string() })?;
        }
        Ok(g)
    }

    /// Inverse of [`Self::parse_edge_list`], always with an `n` header.
    pub fn to_edge_list(&self, one_indexed: bool) -> String {
        let off = usize::from(one_indexed);
        let mut s = format!("n {}\n", self.n);
        for e in self.edges() {
            s.push_str(&format!("{} {}\n", e.lo + off, e.hi + off));
        }
        s
    }
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Every labeled graph on `n` vertices that is closed and K4-free.
///
/// Graphs are visited by edge bitmask (bit `b` is the `b`-th pair in
/// lexicographic order); all connected graphs come first, then the rest.
pub fn enumerate_closed_k4free(n: usize) -> Result<ClosedK4FreeCorpus, GraphError> {
    if n > MAX_CORPUS_VERTICES {
        return Err(GraphError::SizeLimit { op: "corpus enumeration", n, max: MAX_CORPUS_VERTICES });
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(ClosedK4FreeCorpus { n, total: 1u64 << pairs.len(), pairs, next: 0, connected_pass: true })
}

/// Iterator returned by [`enumerate_closed_k4free`].
#[derive(Debug, Clone)]
pub struct ClosedK4FreeCorpus {
    n: usize,
    pairs: Vec<(usize, usize)>,
    total: u64,
    next: u64,
    connected_pass: bool,
}

impl Iterator for ClosedK4FreeCorpus {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        loop {
            if self.next == self.total {
                if !self.connected_pass {
                    return None;
                }
                self.connected_pass = false;
                self.next = 0;
            }
            let mask = self.next;
            self.next += 1;
            let g = LabeledGraph::from_edges(
                self.n,
                self.pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .expect("pairs are valid edges");
            if g.is_connected() == self.connected_pass
                && g.is_closed_labeling()
                && !g.has_induced_k4()
            {
                return Some(g);
            }
        }
    }
}

/// The six-vertex graph with triangles `{0,1,2}`, `{3,4,5}` joined by the
/// edge `{2,3}`; used throughout the tests and documentation.
pub fn running_example() -> LabeledGraph {
    LabeledGraph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
        .expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw() -> LabeledGraph {
        LabeledGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn four_cycle() -> LabeledGraph {
        LabeledGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn closedness_of_small_graphs() {
        assert!(LabeledGraph::path(3).unwrap().is_closed_labeling());
        assert!(running_example().is_closed_labeling());
        assert!(LabeledGraph::empty(0).unwrap().is_closed_labeling());
        let claw = claw();
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for p in &perms {
            assert!(!claw.relabel(p).unwrap().is_closed_labeling(), "{p:?}");
        }
    }

    #[test]
    fn labeling_search() {
        let tri = LabeledGraph::complete(3).unwrap();
        assert_eq!(tri.find_closed_labeling().unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(claw().find_closed_labeling().unwrap(), None);
        assert_eq!(four_cycle().find_closed_labeling().unwrap(), None);

        // path 1 - 0 - 2 is closed after relabeling
        let bent = LabeledGraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        assert!(!bent.is_closed_labeling());
        let perm = bent.find_closed_labeling().unwrap().unwrap();
        assert!(bent.relabel(&perm).unwrap().is_closed_labeling());

        let big = LabeledGraph::empty(11).unwrap();
        assert!(matches!(big.find_closed_labeling(), Err(GraphError::SizeLimit { .. })));
    }

    #[test]
    fn relabeling_search_is_sound_and_complete() {
        for mask in 0u32..(1 << 10) {
            let pairs: Vec<(usize, usize)> =
                (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
            let g = LabeledGraph::from_edges(
                5,
                pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p),
            )
            .unwrap();
            let brute = permutations(5).into_iter().any(|p| g.relabel(&p).unwrap().is_closed_labeling());
            match g.find_closed_labeling().unwrap() {
                Some(p) => assert!(g.relabel(&p).unwrap().is_closed_labeling()),
                None => assert!(!brute, "search missed a closed labeling of {g:?}"),
            }
        }
    }

    #[test]
    fn running_example_cliques() {
        let g = running_example();
        let list = g.maximal_cliques().unwrap();
        assert_eq!(list.cliques(), &[vec![0, 1, 2], vec![2, 3], vec![3, 4, 5]]);
        assert_eq!(g.clique_index(Edge::new(0, 1).unwrap()).unwrap(), 1);
        assert_eq!(g.clique_index(Edge::new(2, 3).unwrap()).unwrap(), 2);
        assert_eq!(g.clique_index(Edge::new(4, 5).unwrap()).unwrap(), 3);
        assert_eq!(
            g.clique_index(Edge::new(0, 5).unwrap()),
            Err(GraphError::EdgeNotInGraph(Edge::new(0, 5).unwrap()))
        );
        assert_eq!(
            LabeledGraph::from_edges(2, [(0, 1)]).unwrap().maximal_cliques().unwrap().cliques(),
            &[vec![0, 1]]
        );
        assert_eq!(LabeledGraph::complete(3).unwrap().maximal_cliques().unwrap().cliques(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn cliques_reject_non_closed() {
        assert!(matches!(claw().maximal_cliques(), Err(GraphError::NotClosed { .. })));
    }

    #[test]
    fn triangles_and_k4() {
        let g = running_example();
        assert_eq!(g.triangles(), vec![Triangle(0, 1, 2), Triangle(3, 4, 5)]);
        assert!(LabeledGraph::path(5).unwrap().triangles().is_empty());
        assert_eq!(LabeledGraph::complete(4).unwrap().triangles().len(), 4);
        assert!(!g.has_induced_k4());
        assert!(LabeledGraph::complete(4).unwrap().has_induced_k4());
        assert!(LabeledGraph::complete(5).unwrap().has_induced_k4());
        assert_eq!(LabeledGraph::complete(5).unwrap().four_cliques().len(), 5);
    }

    #[test]
    fn closed_characterizations() {
        // triple condition implies the pairwise form always, and they agree
        // on connected graphs
        let mut disagreements = 0;
        for n in 0..=6 {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let g = LabeledGraph::from_edges(
                    n,
                    pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p),
                )
                .unwrap();
                let triple = g.is_closed_labeling();
                let pairwise = g.satisfies_pairwise_closed_condition();
                if triple {
                    assert!(pairwise);
                }
                if g.is_connected() {
                    assert_eq!(triple, pairwise, "{g:?}");
                } else if triple != pairwise {
                    disagreements += 1;
                }
            }
        }
        // {0,2} plus an isolated 1 is the smallest witness
        let gap = LabeledGraph::from_edges(3, [(0, 2)]).unwrap();
        assert!(gap.satisfies_pairwise_closed_condition() && !gap.is_closed_labeling());
        assert_eq!(disagreements, 1 + 9 + 63 + 420);
    }

    #[test]
    fn corpus_enumeration() {
        let two: Vec<_> = enumerate_closed_k4free(2).unwrap().collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].edge_count(), 1);
        assert_eq!(two[1].edge_count(), 0);

        // n = 3: the three graphs using {0,2} without both other edges fail
        let three: Vec<_> = enumerate_closed_k4free(3).unwrap().collect();
        assert_eq!(three.len(), 8 - 3);

        let counts: Vec<usize> = (0..=6).map(|n| enumerate_closed_k4free(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 13, 34, 89]);
        for n in 0..=6 {
            let mut seen_disconnected = false;
            for g in enumerate_closed_k4free(n).unwrap() {
                assert!(g.is_closed_labeling() && !g.has_induced_k4());
                if !g.is_connected() {
                    seen_disconnected = true;
                } else {
                    assert!(!seen_disconnected, "connected graphs must come first");
                }
            }
        }
        assert!(matches!(enumerate_closed_k4free(8), Err(GraphError::SizeLimit { .. })));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = "# running example\n0 1\n0 2\n1 2\n\n2 3\n3 4\n4 5 # last triangle\n3 5\n";
        let g = LabeledGraph::parse_edge_list(text, false).unwrap();
        assert_eq!(g, running_example());
        assert_eq!(LabeledGraph::parse_edge_list(&g.to_edge_list(true), true).unwrap(), g);

        let g = LabeledGraph::parse_edge_list("n 4\n0 1\n", false).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(LabeledGraph::parse_edge_list("", false).unwrap().vertex_count(), 0);

        let err = LabeledGraph::parse_edge_list("0 1\n1 x\n", false).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = LabeledGraph::parse_edge_list("n 2\n0 1\n1 2\n", false).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = LabeledGraph::parse_edge_list("1 1\n", false).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = LabeledGraph::parse_edge_list("0 1\n", true).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }
}
