//! Bipartite graphs with partites `U` (size `m`) and `V` (size `n`).
//!
//! Vertices are addressed as `(side, index)`. Internally every vertex also
//! has a dense id: `U`-vertices occupy `0..m` and `V`-vertices `m..m+n`, which
//! is also the lexicographic vertex order used throughout the crate.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::Rng as _;
use rand_distr::{Distribution, Geometric};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    /// The partite `U`, of size `m`.
    Left,
    /// The partite `V`, of size `n`.
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A vertex id: partite plus 0-based index inside the partite.
///
/// Ordered by side first (`U` before `V`), then by index. Displayed and
/// parsed as `U3` / `V0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn left(index: usize) -> Self {
        Vertex { side: Side::Left, index }
    }

    pub const fn right(index: usize) -> Self {
        Vertex { side: Side::Right, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.side {
            Side::Left => 'U',
            Side::Right => 'V',
        };
        write!(f, "{tag}{}", self.index)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('U' | 'u') => Side::Left,
            Some('V' | 'v') => Side::Right,
            _ => return Err(Error::InvalidArgument(format!("vertex {s:?} must look like U3 or V0"))),
        };
        let index = chars
            .as_str()
            .trim_start_matches(':')
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("vertex {s:?} has a bad index")))?;
        Ok(Vertex { side, index })
    }
}

impl From<Vertex> for String {
    fn from(v: Vertex) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for Vertex {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Per-vertex neighbor bitsets over the opposite partite.
struct DenseRows {
    rows: Vec<FixedBitSet>,
}

/// An immutable bipartite graph with cross edges only.
///
/// Edges are stored in compressed sparse rows over dense vertex ids. Edge
/// ids follow the sorted `(u, v)` order, so the `U` half of the rows lists
/// edges in id order.
pub struct BipartiteGraph {
    left_size: usize,
    right_size: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    edge_ids: Vec<usize>,
    dense: OnceLock<DenseRows>,
}

impl Clone for BipartiteGraph {
    fn clone(&self) -> Self {
        BipartiteGraph {
            left_size: self.left_size,
            right_size: self.right_size,
            offsets: self.offsets.clone(),
            targets: self.targets.clone(),
            edge_ids: self.edge_ids.clone(),
            dense: OnceLock::new(),
        }
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("left_size", &self.left_size)
            .field("right_size", &self.right_size)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.left_size == other.left_size
            && self.right_size == other.right_size
            && self.offsets == other.offsets
            && self.targets == other.targets
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Builds a graph from `(u, v)` index pairs. Duplicates are rejected.
    pub fn from_edges<I>(left_size: usize, right_size: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_sizes(left_size, right_size)?;
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if u >= left_size {
                return Err(Error::InvalidVertex(Vertex::left(u)));
            }
            if v >= right_size {
                return Err(Error::InvalidVertex(Vertex::right(v)));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge {}-{}",
                Vertex::left(w[0].0),
                Vertex::right(w[0].1)
            )));
        }
        Ok(Self::from_sorted_unique(left_size, right_size, &edges))
    }

    /// `edges` must be sorted, unique and in range.
    fn from_sorted_unique(left_size: usize, right_size: usize, edges: &[(usize, usize)]) -> Self {
        let total = left_size + right_size;
        let mut degree = vec![0usize; total];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[left_size + v] += 1;
        }
        let mut offsets = Vec::with_capacity(total + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..total].to_vec();
        let mut targets = vec![0usize; 2 * edges.len()];
        let mut edge_ids = vec![0usize; 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            let b = left_size + v;
            targets[cursor[u]] = b;
            edge_ids[cursor[u]] = id;
            cursor[u] += 1;
            targets[cursor[b]] = u;
            edge_ids[cursor[b]] = id;
            cursor[b] += 1;
        }
        BipartiteGraph {
            left_size,
            right_size,
            offsets,
            targets,
            edge_ids,
            dense: OnceLock::new(),
        }
    }

    pub fn empty(left_size: usize, right_size: usize) -> Result<Self> {
        Self::from_edges(left_size, right_size, std::iter::empty())
    }

    pub fn complete(left_size: usize, right_size: usize) -> Result<Self> {
        check_sizes(left_size, right_size)?;
        let edges: Vec<_> = (0..left_size)
            .flat_map(|u| (0..right_size).map(move |v| (u, v)))
            .collect();
        Ok(Self::from_sorted_unique(left_size, right_size, &edges))
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn vertex_count(&self) -> usize {
        self.left_size + self.right_size
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Edges as `(u, v)` index pairs, in edge-id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.left_size).flat_map(move |u| {
            self.targets[self.offsets[u]..self.offsets[u + 1]]
                .iter()
                .map(move |&b| (u, b - self.left_size))
        })
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(move |id| self.vertex(id))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v.side {
            Side::Left => v.index < self.left_size,
            Side::Right => v.index < self.right_size,
        }
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<usize> {
        if self.contains(v) {
            Ok(self.id(v))
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Dense id of a vertex known to be valid.
    pub(crate) fn id(&self, v: Vertex) -> usize {
        match v.side {
            Side::Left => v.index,
            Side::Right => self.left_size + v.index,
        }
    }

    pub(crate) fn vertex(&self, id: usize) -> Vertex {
        if id < self.left_size {
            Vertex::left(id)
        } else {
            Vertex::right(id - self.left_size)
        }
    }

    pub(crate) fn side_of(&self, id: usize) -> Side {
        if id < self.left_size {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub(crate) fn neighbor_ids(&self, id: usize) -> &[usize] {
        &self.targets[self.offsets[id]..self.offsets[id + 1]]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        let id = self.check_vertex(v)?;
        Ok(self.offsets[id + 1] - self.offsets[id])
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> Result<impl Iterator<Item = Vertex> + '_> {
        let id = self.check_vertex(v)?;
        Ok(self.neighbor_ids(id).iter().map(move |&b| self.vertex(b)))
    }

    /// Edge id of the dense-id pair `(a, b)`, in either order.
    pub(crate) fn edge_id_between(&self, a: usize, b: usize) -> Option<usize> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo >= self.left_size || hi < self.left_size {
            return None;
        }
        let start = self.offsets[lo];
        let row = &self.targets[start..self.offsets[lo + 1]];
        row.binary_search(&hi).ok().map(|pos| self.edge_ids[start + pos])
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        self.edge_id_between(self.id(a), self.id(b))
    }

    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    fn dense(&self) -> &DenseRows {
        self.dense.get_or_init(|| {
            let rows = (0..self.vertex_count())
                .map(|id| {
                    let (width, shift) = match self.side_of(id) {
                        Side::Left => (self.right_size, self.left_size),
                        Side::Right => (self.left_size, 0),
                    };
                    let mut row = FixedBitSet::with_capacity(width);
                    for &b in self.neighbor_ids(id) {
                        row.insert(b - shift);
                    }
                    row
                })
                .collect();
            DenseRows { rows }
        })
    }

    /// Neighbor bitset of a vertex, indexed by partite index on the opposite side.
    pub(crate) fn row(&self, id: usize) -> &FixedBitSet {
        &self.dense().rows[id]
    }

    fn side_width(&self, side: Side) -> usize {
        match side {
            Side::Left => self.left_size,
            Side::Right => self.right_size,
        }
    }

    fn side_base(&self, side: Side) -> usize {
        match side {
            Side::Left => 0,
            Side::Right => self.left_size,
        }
    }

    /// Writes the graph text format: `m n`, then one `u v` line per edge.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.left_size, self.right_size)?;
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("graph text is ASCII")
    }

    /// Parses the graph text format. Blank lines are ignored.
    pub fn read_text<R: BufRead>(input: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let pair = parse_pair(line, line_no)?;
            match header {
                None => header = Some(pair),
                Some((m, n)) => {
                    if pair.0 >= m || pair.1 >= n {
                        return Err(Error::parse(line_no, format!("edge {line:?} out of range for {m}x{n}")));
                    }
                    edges.push(pair);
                }
            }
        }
        let (m, n) = header.ok_or_else(|| Error::parse(1, "missing `m n` header"))?;
        Self::from_edges(m, n, edges)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        Self::read_text(text.as_bytes())
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        fields
            .next()
            .ok_or_else(|| Error::parse(line_no, "expected two integers"))?
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad integer in {line:?}")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(Error::parse(line_no, "expected exactly two integers"));
    }
    Ok((a, b))
}

fn check_sizes(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        Err(Error::EmptyPartite { m, n })
    } else {
        Ok(())
    }
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// A simple path whose consecutive vertices are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    /// Validates adjacency and simplicity against `g`.
    pub fn new(g: &BipartiteGraph, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath("a path needs at least two vertices".into()));
        }
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        for w in vertices.windows(2) {
            if !g.is_adjacent(w[0], w[1]) {
                return Err(Error::MissingEdge(w[0], w[1]));
            }
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("vertices repeat".into()));
        }
        Ok(Path { vertices })
    }

    pub(crate) fn from_ids(g: &BipartiteGraph, ids: &[usize]) -> Self {
        Path { vertices: ids.iter().map(|&id| g.vertex(id)).collect() }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn internal(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Samples `G(m, n, p)` by geometric skipping over the `m·n` potential edges
/// in row-major `(u, v)` order.
pub fn sample_gnp(m: usize, n: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    check_sizes(m, n)?;
    check_probability(p)?;
    if p == 0.0 {
        return BipartiteGraph::empty(m, n);
    }
    if p == 1.0 {
        return BipartiteGraph::complete(m, n);
    }
    let mut rng = rng::from_seed(seed);
    let skip = Geometric::new(p).expect("p lies in (0, 1)");
    let total = (m as u64) * (n as u64);
    let mut edges = Vec::new();
    let mut next = 0u64;
    loop {
        next = match next.checked_add(skip.sample(&mut rng)) {
            Some(x) if x < total => x,
            _ => break,
        };
        edges.push(((next / n as u64) as usize, (next % n as u64) as usize));
        next += 1;
    }
    Ok(BipartiteGraph::from_sorted_unique(m, n, &edges))
}

/// One uniform draw per potential edge (and optionally one color per
/// potential edge), reusable across edge probabilities.
///
/// `graph_at(p)` keeps exactly the pairs whose draw is below `p`, so the
/// graphs for `p ≤ p'` are nested and colors agree on shared edges.
pub struct CoupledDraws {
    m: usize,
    n: usize,
    uniforms: Vec<f64>,
    colors: Vec<u32>,
    num_colors: u32,
}

impl CoupledDraws {
    pub fn sample(m: usize, n: usize, num_colors: Option<u32>, rng: &mut rng::Rng) -> Result<Self> {
        check_sizes(m, n)?;
        if num_colors == Some(0) {
            return Err(Error::EmptyPalette);
        }
        let total = m * n;
        let uniforms: Vec<f64> = (0..total).map(|_| rng.random::<f64>()).collect();
        let colors = match num_colors {
            Some(c) => (0..total).map(|_| rng.random_range(1..=c)).collect(),
            None => Vec::new(),
        };
        Ok(CoupledDraws { m, n, uniforms, colors, num_colors: num_colors.unwrap_or(0) })
    }

    pub fn graph_at(&self, p: f64) -> Result<BipartiteGraph> {
        check_probability(p)?;
        let edges: Vec<(usize, usize)> = self
            .uniforms
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x < p)
            .map(|(i, _)| (i / self.n, i % self.n))
            .collect();
        Ok(BipartiteGraph::from_sorted_unique(self.m, self.n, &edges))
    }

    /// Coloring of a graph produced by [`graph_at`](Self::graph_at), using the
    /// per-pair color draws.
    pub fn coloring_for(&self, g: &BipartiteGraph) -> Result<crate::coloring::EdgeColoring> {
        if self.colors.is_empty() {
            return Err(Error::InvalidArgument("draws were sampled without colors".into()));
        }
        if g.left_size() != self.m || g.right_size() != self.n {
            return Err(Error::InvalidArgument("graph size does not match the draws".into()));
        }
        let colors = g.edges().map(|(u, v)| self.colors[u * self.n + v]).collect();
        crate::coloring::EdgeColoring::new(g, self.num_colors, colors)
    }
}

/// Hop distances from one source; `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopDistances {
    left_size: usize,
    dist: Vec<Option<usize>>,
}

impl HopDistances {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        let id = match v.side {
            Side::Left => v.index,
            Side::Right => self.left_size + v.index,
        };
        self.dist.get(id).copied().flatten()
    }

    /// `(vertex, distance)` pairs in lexicographic vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Option<usize>)> + '_ {
        self.dist.iter().enumerate().map(move |(id, &d)| {
            let v = if id < self.left_size {
                Vertex::left(id)
            } else {
                Vertex::right(id - self.left_size)
            };
            (v, d)
        })
    }
}

/// Breadth-first hop distances from `source`.
pub fn bfs_distances(g: &BipartiteGraph, source: Vertex) -> Result<HopDistances> {
    let src = g.check_vertex(source)?;
    Ok(HopDistances { left_size: g.left_size(), dist: bfs_ids(g, src) })
}

pub(crate) fn bfs_ids(g: &BipartiteGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].unwrap();
        for &y in g.neighbor_ids(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Level-synchronous BFS over neighbor bitsets.
///
/// Calls `on_level(depth, side, frontier)` for every non-empty level after
/// the source, stopping after `max_depth` levels or when `on_level` returns
/// `false`. Returns the number of vertices reached, source included.
pub(crate) fn bitset_bfs<F>(g: &BipartiteGraph, src: usize, max_depth: usize, mut on_level: F) -> usize
where
    F: FnMut(usize, Side, &FixedBitSet) -> bool,
{
    let src_side = g.side_of(src);
    let mut visited = [
        FixedBitSet::with_capacity(g.left_size),
        FixedBitSet::with_capacity(g.right_size),
    ];
    let slot = |s: Side| match s {
        Side::Left => 0,
        Side::Right => 1,
    };
    let mut frontier = FixedBitSet::with_capacity(g.side_width(src_side));
    frontier.insert(src - g.side_base(src_side));
    visited[slot(src_side)].insert(src - g.side_base(src_side));
    let mut side = src_side;
    let mut reached = 1;
    for depth in 1..=max_depth {
        let next_side = side.opposite();
        let mut next = FixedBitSet::with_capacity(g.side_width(next_side));
        let base = g.side_base(side);
        for x in frontier.ones() {
            next.union_with(g.row(base + x));
        }
        next.difference_with(&visited[slot(next_side)]);
        let count = next.count_ones(..);
        if count == 0 {
            break;
        }
        reached += count;
        visited[slot(next_side)].union_with(&next);
        if !on_level(depth, next_side, &next) {
            break;
        }
        frontier = next;
        side = next_side;
    }
    reached
}

/// Largest finite hop distance over all pairs, or `None` when the graph is
/// disconnected (an isolated vertex counts as disconnected).
pub fn diameter(g: &BipartiteGraph) -> Option<usize> {
    let total = g.vertex_count();
    let mut best = 0;
    for src in 0..total {
        let mut ecc = 0;
        let reached = bitset_bfs(g, src, total, |depth, _, _| {
            ecc = depth;
            true
        });
        if reached < total {
            return None;
        }
        best = best.max(ecc);
    }
    Some(best)
}

/// `diameter(g) <= bound`, stopping at the first source that fails.
pub fn diameter_at_most(g: &BipartiteGraph, bound: usize) -> bool {
    let total = g.vertex_count();
    if (0..total).any(|id| g.neighbor_ids(id).is_empty()) {
        return false;
    }
    (0..total).all(|src| bitset_bfs(g, src, bound, |_, _, _| true) == total)
}

/// `|N(u) ∩ s|` for a set `s` in the partite opposite to `u`.
pub fn neighbors_in_set(g: &BipartiteGraph, u: Vertex, s: &[Vertex]) -> Result<usize> {
    g.check_vertex(u)?;
    let mut set = s.to_vec();
    for &w in &set {
        g.check_vertex(w)?;
        if w.side == u.side {
            return Err(Error::SamePartite(w, u));
        }
    }
    set.sort_unstable();
    set.dedup();
    Ok(set.iter().filter(|&&w| g.is_adjacent(u, w)).count())
}
