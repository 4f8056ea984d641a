//! Rainbow paths and rainbow k-connectivity.
//!
//! A path is rainbow when its edge colors are pairwise distinct. A colored
//! graph is rainbow k-connected (for a length bound `L`) when every vertex
//! pair is joined by `k` internally vertex-disjoint rainbow paths of length
//! at most `L`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{self, BipartiteGraph, Path, Vertex};

/// Default edge cap for [`brute_force_rc_k`].
pub const DEFAULT_EDGE_CAP: usize = 12;

/// `k` pairwise internally vertex-disjoint rainbow paths from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub k: usize,
    pub paths: Vec<Path>,
}

/// Outcome of [`is_rainbow_k_connected`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowVerdict {
    pub rainbow_k_connected: bool,
    pub k: usize,
    /// `None` means unbounded (the edge count).
    pub max_len: Option<usize>,
    /// Lexicographically smallest pair without `k` disjoint rainbow paths.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(Vertex, Vertex)>,
}

/// Smallest palette found by [`brute_force_rc_k`], with a witnessing coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RcWitness {
    pub num_colors: u32,
    pub coloring: EdgeColoring,
}

/// True iff the edge colors along `path` are pairwise distinct.
pub fn is_rainbow(g: &BipartiteGraph, path: &Path, coloring: &EdgeColoring) -> Result<bool> {
    coloring.check_graph(g)?;
    let mut seen = HashSet::with_capacity(path.len());
    for (a, b) in path.edges() {
        let color = coloring.color(g, a, b)?;
        if !seen.insert(color) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Depth-first rainbow path search over dense vertex ids.
struct Search<'a> {
    g: &'a BipartiteGraph,
    colors: &'a [u32],
    on_path: Vec<bool>,
    stack: Vec<usize>,
    used: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a BipartiteGraph, coloring: &'a EdgeColoring) -> Self {
        Search {
            g,
            colors: coloring.colors(),
            on_path: vec![false; g.vertex_count()],
            stack: Vec::new(),
            used: Vec::new(),
        }
    }

    fn color(&self, a: usize, b: usize) -> Option<u32> {
        self.g.edge_id_between(a, b).map(|e| self.colors[e])
    }

    fn push(&mut self, x: usize, color: Option<u32>) {
        self.on_path[x] = true;
        self.stack.push(x);
        if let Some(c) = color {
            self.used.push(c);
        }
    }

    fn pop(&mut self, had_color: bool) {
        let x = self.stack.pop().unwrap();
        self.on_path[x] = false;
        if had_color {
            self.used.pop();
        }
    }

    /// Length budget from `x` to `t` after matching the bipartite parity.
    fn budget(&self, x: usize, t: usize, remaining: usize) -> usize {
        let odd = self.g.side_of(x) != self.g.side_of(t);
        if (remaining % 2 == 1) == odd {
            remaining
        } else {
            remaining.saturating_sub(1)
        }
    }

    fn reachable(dist: Option<&[Option<usize>]>, y: usize, remaining: usize) -> bool {
        match dist {
            Some(d) => d[y].is_some_and(|dy| dy <= remaining),
            None => true,
        }
    }

    /// Is there a rainbow `s`-`t` path with at most `max_len` edges?
    fn exists(&mut self, s: usize, t: usize, max_len: usize, dist_to_t: Option<&[Option<usize>]>) -> bool {
        self.stack.clear();
        self.used.clear();
        self.push(s, None);
        let found = self.exists_from(s, t, max_len, dist_to_t);
        self.pop(false);
        found
    }

    fn exists_from(&mut self, x: usize, t: usize, remaining: usize, dist: Option<&[Option<usize>]>) -> bool {
        let remaining = self.budget(x, t, remaining);
        if remaining == 0 {
            return false;
        }
        if remaining % 2 == 1 {
            if let Some(c) = self.color(x, t) {
                if !self.used.contains(&c) {
                    return true;
                }
            }
            if remaining == 1 {
                return false;
            }
        }
        if remaining == 2 {
            // x and t share a side: try common neighbors only.
            let base = if x < self.g.left_size() { self.g.left_size() } else { 0 };
            let row_x = self.g.row(x);
            let row_t = self.g.row(t);
            for idx in row_x.intersection(row_t) {
                let y = base + idx;
                if self.on_path[y] {
                    continue;
                }
                let c1 = self.color(x, y).unwrap();
                let c2 = self.color(y, t).unwrap();
                if c1 != c2 && !self.used.contains(&c1) && !self.used.contains(&c2) {
                    return true;
                }
            }
            return false;
        }
        let g = self.g;
        for &y in g.neighbor_ids(x) {
            if y == t || self.on_path[y] || !Self::reachable(dist, y, remaining - 1) {
                continue;
            }
            let c = self.color(x, y).unwrap();
            if self.used.contains(&c) {
                continue;
            }
            self.push(y, Some(c));
            let found = self.exists_from(y, t, remaining - 1, dist);
            self.pop(true);
            if found {
                return true;
            }
        }
        false
    }

    /// Every rainbow `s`-`t` path with at most `max_len` edges.
    fn all_paths(&mut self, s: usize, t: usize, max_len: usize, dist_to_t: &[Option<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.stack.clear();
        self.used.clear();
        self.push(s, None);
        self.collect_from(s, t, max_len, dist_to_t, &mut out);
        self.pop(false);
        out
    }

    fn collect_from(
        &mut self,
        x: usize,
        t: usize,
        remaining: usize,
        dist: &[Option<usize>],
        out: &mut Vec<Vec<usize>>,
    ) {
        let g = self.g;
        for &y in g.neighbor_ids(x) {
            if self.on_path[y] || !Self::reachable(Some(dist), y, remaining - 1) {
                continue;
            }
            let c = self.color(x, y).unwrap();
            if self.used.contains(&c) {
                continue;
            }
            if y == t {
                let mut path = self.stack.clone();
                path.push(t);
                out.push(path);
                continue;
            }
            if remaining >= 2 {
                self.push(y, Some(c));
                self.collect_from(y, t, remaining - 1, dist, out);
                self.pop(true);
            }
        }
    }
}

fn check_pair(g: &BipartiteGraph, coloring: &EdgeColoring, u: Vertex, v: Vertex) -> Result<(usize, usize)> {
    coloring.check_graph(g)?;
    let s = g.check_vertex(u)?;
    let t = g.check_vertex(v)?;
    if s == t {
        return Err(Error::InvalidArgument(format!("endpoints must differ (both {u})")));
    }
    Ok((s, t))
}

fn check_max_len(max_len: usize) -> Result<()> {
    if max_len == 0 {
        Err(Error::InvalidArgument("max_len must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// All simple rainbow `u`-`v` paths with at most `max_len` edges, in
/// lexicographic order of their vertex sequences.
pub fn enumerate_rainbow_paths(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    max_len: usize,
) -> Result<Vec<Path>> {
    let (s, t) = check_pair(g, coloring, u, v)?;
    check_max_len(max_len)?;
    let dist = graph::bfs_ids(g, t);
    let mut paths = Search::new(g, coloring).all_paths(s, t, max_len, &dist);
    paths.sort();
    Ok(paths.iter().map(|p| Path::from_ids(g, p)).collect())
}

/// Indices of a pairwise internally disjoint family of `k` paths, or `None`.
///
/// `paths` must already be in search order. The first family found by the
/// backtracking search is returned; the greedy packing along the same order
/// is that search's first branch, so it is tried up front.
fn disjoint_family(paths: &[Vec<usize>], k: usize, vertex_count: usize) -> Option<Vec<usize>> {
    let internal = |i: usize| &paths[i][1..paths[i].len() - 1];

    let mut blocked = vec![false; vertex_count];
    let mut greedy = Vec::new();
    for i in 0..paths.len() {
        if greedy.len() == k {
            break;
        }
        if internal(i).iter().all(|&x| !blocked[x]) {
            internal(i).iter().for_each(|&x| blocked[x] = true);
            greedy.push(i);
        }
    }
    if greedy.len() == k {
        return Some(greedy);
    }

    fn backtrack(
        paths: &[Vec<usize>],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        blocked: &mut [bool],
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        let internal = |i: usize| &paths[i][1..paths[i].len() - 1];
        let compatible: Vec<usize> = (start..paths.len())
            .filter(|&j| internal(j).iter().all(|&x| !blocked[x]))
            .collect();
        // Disjoint paths leave the source through distinct neighbors and
        // enter the target through distinct neighbors; a direct edge uses neither.
        let direct = compatible.iter().filter(|&&j| paths[j].len() == 2).count();
        let firsts: HashSet<usize> = compatible.iter().filter(|&&j| paths[j].len() > 2).map(|&j| paths[j][1]).collect();
        let lasts: HashSet<usize> = compatible
            .iter()
            .filter(|&&j| paths[j].len() > 2)
            .map(|&j| paths[j][paths[j].len() - 2])
            .collect();
        if chosen.len() + direct + firsts.len().min(lasts.len()) < k {
            return false;
        }
        for j in compatible {
            internal(j).iter().for_each(|&x| blocked[x] = true);
            chosen.push(j);
            if backtrack(paths, k, j + 1, chosen, blocked) {
                return true;
            }
            chosen.pop();
            internal(j).iter().for_each(|&x| blocked[x] = false);
        }
        false
    }

    let mut blocked = vec![false; vertex_count];
    let mut chosen = Vec::new();
    backtrack(paths, k, 0, &mut chosen, &mut blocked).then_some(chosen)
}

/// Paths sorted by length, then lexicographically.
fn search_order(paths: &mut [Vec<usize>]) {
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Finds `k` pairwise internally vertex-disjoint rainbow `u`-`v` paths of
/// length at most `max_len`. Returns the first family in (length, lexicographic)
/// search order, or `None` when no such family exists.
pub fn k_disjoint_rainbow_exists(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    k: usize,
    max_len: usize,
) -> Result<Option<DisjointWitness>> {
    let (s, t) = check_pair(g, coloring, u, v)?;
    check_max_len(max_len)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let dist = graph::bfs_ids(g, t);
    let mut paths = Search::new(g, coloring).all_paths(s, t, max_len, &dist);
    search_order(&mut paths);
    Ok(disjoint_family(&paths, k, g.vertex_count()).map(|chosen| DisjointWitness {
        u,
        v,
        k,
        paths: chosen.iter().map(|&i| Path::from_ids(g, &paths[i])).collect(),
    }))
}

/// Palettes up to this size use [`ColorReach`] for `k = 1`.
const REACH_MAX_COLORS: u32 = 8;
/// Memory cap, in bits, for the per-color adjacency rows of [`ColorReach`].
const REACH_MAX_BITS: usize = 1 << 29;

/// Per-color neighbor rows for small palettes.
///
/// A rainbow walk can always be shortened to a rainbow path, so the vertices
/// reachable from `s` by rainbow paths of length at most `L` are those
/// reachable by walks whose edge colors are distinct. These are found by a
/// level-by-level expansion over `(used color set, vertex set)` states.
struct ColorReach {
    colors: usize,
    total: usize,
    /// `rows[x * colors + c]`: neighbors of `x` through edges of color `c + 1`.
    rows: Vec<FixedBitSet>,
}

impl ColorReach {
    fn new(g: &BipartiteGraph, coloring: &EdgeColoring) -> Option<Self> {
        let colors = coloring.num_colors();
        let total = g.vertex_count();
        if colors > REACH_MAX_COLORS || total.saturating_mul(total).saturating_mul(colors as usize) > REACH_MAX_BITS {
            return None;
        }
        let colors = colors as usize;
        let mut rows = vec![FixedBitSet::with_capacity(total); total * colors];
        for (id, (u, v)) in g.edges().enumerate() {
            let c = coloring.colors()[id] as usize - 1;
            let (a, b) = (u, g.left_size() + v);
            rows[a * colors + c].insert(b);
            rows[b * colors + c].insert(a);
        }
        Some(ColorReach { colors, total, rows })
    }

    /// Marks in `reached` every vertex joined to `s` by a rainbow path of
    /// length at most `limit` (including `s` itself).
    fn fill(&self, s: usize, limit: usize, reached: &mut FixedBitSet) {
        reached.clear();
        reached.insert(s);
        let steps = limit.min(self.colors);
        let mut start = FixedBitSet::with_capacity(self.total);
        start.insert(s);
        let mut frontier: Vec<(usize, FixedBitSet)> = vec![(0, start)];
        for step in 1..=steps {
            let last = step == steps;
            let mut next: Vec<Option<FixedBitSet>> = if last { Vec::new() } else { vec![None; 1 << self.colors] };
            for (mask, set) in &frontier {
                for c in (0..self.colors).filter(|c| mask & (1 << c) == 0) {
                    let dest = if last {
                        &mut *reached
                    } else {
                        next[mask | (1 << c)].get_or_insert_with(|| FixedBitSet::with_capacity(self.total))
                    };
                    for x in set.ones() {
                        dest.union_with(&self.rows[x * self.colors + c]);
                    }
                }
            }
            if !last {
                frontier = next
                    .into_iter()
                    .enumerate()
                    .filter_map(|(m, set)| set.filter(|b| !b.is_clear()).map(|b| (m, b)))
                    .collect();
                for (_, set) in &frontier {
                    reached.union_with(set);
                }
            }
            if frontier.is_empty() || reached.count_ones(..) == self.total {
                return;
            }
        }
    }
}

/// Checks every unordered vertex pair (same-partite and cross) for `k`
/// disjoint rainbow paths of length at most `max_len` (`None`: unbounded,
/// i.e. the edge count). Pairs are visited in lexicographic order and the
/// first failure is reported.
pub fn is_rainbow_k_connected(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
    k: usize,
    max_len: Option<usize>,
) -> Result<RainbowVerdict> {
    all_pairs(g, coloring, k, max_len, true)
}

fn all_pairs(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
    k: usize,
    max_len: Option<usize>,
    use_reach: bool,
) -> Result<RainbowVerdict> {
    coloring.check_graph(g)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if let Some(l) = max_len {
        check_max_len(l)?;
    }
    let limit = max_len.unwrap_or(g.edge_count()).max(1);
    let verdict = |failing_pair: Option<(Vertex, Vertex)>| RainbowVerdict {
        rainbow_k_connected: failing_pair.is_none(),
        k,
        max_len,
        failing_pair,
    };

    let total = g.vertex_count();
    if k == 1 && use_reach {
        if let Some(reach) = ColorReach::new(g, coloring) {
            let mut reached = FixedBitSet::with_capacity(total);
            for s in 0..total {
                reach.fill(s, limit, &mut reached);
                if let Some(t) = (s + 1..total).find(|&t| !reached.contains(t)) {
                    return Ok(verdict(Some((g.vertex(s), g.vertex(t)))));
                }
            }
            return Ok(verdict(None));
        }
    }
    let mut search = Search::new(g, coloring);
    let mut dist = vec![None; total];
    for s in 0..total {
        // Distances from s up to the length bound, shared by all pairs (s, t).
        dist.iter_mut().for_each(|d| *d = None);
        dist[s] = Some(0);
        let left = g.left_size();
        graph::bitset_bfs(g, s, limit, |depth, side, level| {
            let base = if side == crate::graph::Side::Left { 0 } else { left };
            for i in level.ones() {
                dist[base + i] = Some(depth);
            }
            true
        });
        for t in s + 1..total {
            if dist[t].is_none() {
                return Ok(verdict(Some((g.vertex(s), g.vertex(t)))));
            }
            let ok = if k == 1 {
                search.exists(t, s, limit, Some(&dist))
            } else {
                let mut paths = search.all_paths(t, s, limit, &dist);
                paths.iter_mut().for_each(|p| p.reverse());
                search_order(&mut paths);
                disjoint_family(&paths, k, total).is_some()
            };
            if !ok {
                return Ok(verdict(Some((g.vertex(s), g.vertex(t)))));
            }
        }
    }
    Ok(verdict(None))
}

/// Checks that `paths` are valid simple paths of `g` from `u` to `v` whose
/// internal vertices are pairwise disjoint.
pub fn check_disjoint_paths(g: &BipartiteGraph, paths: &[Path], u: Vertex, v: Vertex) -> Result<()> {
    let mut seen_internal = HashSet::new();
    for path in paths {
        let checked = Path::new(g, path.vertices().to_vec())?;
        if checked.start() != u || checked.end() != v {
            return Err(Error::InvalidPath(format!("path does not run {u} to {v}")));
        }
        for &x in checked.internal() {
            if !seen_internal.insert(x) {
                return Err(Error::InvalidPath(format!("internal vertex {x} is shared")));
            }
        }
    }
    Ok(())
}

/// Independent check of a witness: valid simple paths with the right
/// endpoints, each rainbow, pairwise internally disjoint, at least `k` of them.
pub fn verify_witness(g: &BipartiteGraph, coloring: &EdgeColoring, witness: &DisjointWitness) -> Result<()> {
    coloring.check_graph(g)?;
    if witness.paths.len() < witness.k {
        return Err(Error::InvalidPath(format!(
            "{} paths for k = {}",
            witness.paths.len(),
            witness.k
        )));
    }
    check_disjoint_paths(g, &witness.paths, witness.u, witness.v)?;
    for path in &witness.paths {
        let colors: Vec<u32> = path
            .edges()
            .map(|(a, b)| coloring.color(g, a, b))
            .collect::<Result<_>>()?;
        let distinct: HashSet<u32> = colors.iter().copied().collect();
        if distinct.len() != colors.len() {
            return Err(Error::InvalidPath("path is not rainbow".into()));
        }
    }
    Ok(())
}

/// Smallest palette `C <= max_colors` for which some `C`-coloring makes `g`
/// rainbow k-connected (paths unbounded), with a witnessing coloring.
///
/// Colorings are enumerated as restricted growth strings: the first edge has
/// color 1 and each new color is the next unused one, so each orbit under
/// color permutation is visited once. Refuses graphs with more than
/// `edge_cap` edges.
pub fn brute_force_rc_k(g: &BipartiteGraph, k: usize, max_colors: u32, edge_cap: usize) -> Result<Option<RcWitness>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let edges = g.edge_count();
    if edges > edge_cap {
        return Err(Error::ResourceGuard { edges, cap: edge_cap });
    }
    if edges == 0 || graph::diameter(g).is_none() {
        return Ok(None);
    }
    for palette in 1..=max_colors {
        // Colorings with fewer colors were rejected at smaller palettes.
        if palette as usize > edges {
            break;
        }
        let mut colors = vec![0u32; edges];
        let mut found = None;
        exact_palette_colorings(&mut colors, 0, 0, palette, &mut |colors| {
            let coloring = EdgeColoring::new(g, palette, colors.to_vec()).expect("colors lie in the palette");
            let ok = is_rainbow_k_connected(g, &coloring, k, None)
                .expect("inputs validated")
                .rainbow_k_connected;
            if ok {
                found = Some(coloring);
            }
            ok
        });
        if let Some(coloring) = found {
            return Ok(Some(RcWitness { num_colors: palette, coloring }));
        }
    }
    Ok(None)
}

/// Visits restricted growth strings using exactly `palette` colors; stops
/// when `visit` returns true. Returns whether it stopped early.
fn exact_palette_colorings(
    colors: &mut [u32],
    pos: usize,
    max_used: u32,
    palette: u32,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    if pos == colors.len() {
        return max_used == palette && visit(colors);
    }
    // The remaining positions must be able to introduce the missing colors.
    if (palette - max_used) as usize > colors.len() - pos {
        return false;
    }
    for c in 1..=(max_used + 1).min(palette) {
        colors[pos] = c;
        if exact_palette_colorings(colors, pos + 1, max_used.max(c), palette, visit) {
            return true;
        }
    }
    false
}
