//! Growing leveled `(s, t)`-ary trees inside a bipartite graph and extracting
//! internally disjoint paths from them.
//!
//! A tree of depth `D` is grown level by level from a root. Every vertex of
//! an even level receives `s` children and every vertex of an odd level
//! receives `t`, each chosen among its neighbors that are neither used
//! already nor forbidden. The leaves are grouped by their level-1 ancestor
//! (the *vice-trees*); paths through leaves of different vice-trees share
//! only the root.

use rand::seq::index;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Path, Side, Vertex};
use crate::rng;
use crate::thresholds::{self, RegimeCheck, RegimeParams};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selection {
    /// Uniformly without replacement among the eligible neighbors.
    #[default]
    SeededRandom,
    /// The smallest eligible neighbors.
    Lexicographic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthPlan {
    /// Children of each even-level vertex (`s`).
    pub even_branch: usize,
    /// Children of each odd-level vertex (`t`).
    pub odd_branch: usize,
    pub depth: usize,
    #[serde(default)]
    pub avoid: Vec<Vertex>,
    #[serde(default)]
    pub selection: Selection,
}

impl GrowthPlan {
    pub fn new(even_branch: usize, odd_branch: usize, depth: usize) -> Self {
        GrowthPlan { even_branch, odd_branch, depth, avoid: Vec::new(), selection: Selection::default() }
    }

    pub fn avoiding(mut self, avoid: impl IntoIterator<Item = Vertex>) -> Self {
        self.avoid.extend(avoid);
        self
    }

    pub fn with_selection(mut self, selection: Selection) -> Self {
        self.selection = selection;
        self
    }

    /// Children per vertex of `level`.
    pub fn branch_at(&self, level: usize) -> usize {
        if level % 2 == 0 {
            self.even_branch
        } else {
            self.odd_branch
        }
    }

    /// Size of level `level` of a complete tree.
    pub fn level_size(&self, level: usize) -> usize {
        (0..level).map(|i| self.branch_at(i)).product()
    }

    fn validate(&self, g: &BipartiteGraph, root: Vertex) -> Result<()> {
        if self.even_branch == 0 || self.odd_branch == 0 || self.depth == 0 {
            return Err(Error::InvalidArgument("branchings and depth must be at least 1".into()));
        }
        g.check_vertex(root)?;
        for &a in &self.avoid {
            g.check_vertex(a)?;
        }
        if self.avoid.contains(&root) {
            return Err(Error::InvalidArgument(format!("root {root} is in the avoid set")));
        }
        Ok(())
    }
}

/// A fully grown tree. `levels[0]` is the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrownTree {
    pub root: Vertex,
    pub plan: GrowthPlan,
    levels: Vec<Vec<Vertex>>,
    /// `parents[i][j]` is the index in `levels[i - 1]` of the parent of `levels[i][j]`.
    #[serde(skip)]
    parents: Vec<Vec<usize>>,
}

impl GrownTree {
    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn leaves(&self) -> &[Vertex] {
        self.levels.last().expect("tree has a root level")
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.levels.iter().any(|l| l.contains(&v))
    }

    /// Parent of `v`, or `None` for the root and for vertices not in the tree.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.levels.iter().enumerate().skip(1).find_map(|(i, level)| {
            level.iter().position(|&x| x == v).map(|j| self.levels[i - 1][self.parents[i][j]])
        })
    }

    /// Root-to-vertex path for `levels[level][index]`.
    fn branch(&self, level: usize, mut index: usize) -> Vec<Vertex> {
        let mut out = vec![self.levels[level][index]];
        for i in (1..=level).rev() {
            index = self.parents[i][index];
            out.push(self.levels[i - 1][index]);
        }
        out.reverse();
        out
    }

    /// For each leaf, the index of its level-1 ancestor.
    fn leaf_ancestors(&self) -> Vec<usize> {
        let mut anc: Vec<usize> = (0..self.levels[1].len()).collect();
        for i in 2..self.levels.len() {
            anc = self.parents[i].iter().map(|&p| anc[p]).collect();
        }
        anc
    }
}

/// The first vertex that could not receive enough fresh children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthFailure {
    /// The level the children would have joined.
    pub level: usize,
    pub stuck_vertex: Vertex,
    pub needed: usize,
    pub available: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Growth {
    Grown(GrownTree),
    Stuck(GrowthFailure),
}

impl Growth {
    pub fn tree(self) -> Option<GrownTree> {
        match self {
            Growth::Grown(t) => Some(t),
            Growth::Stuck(_) => None,
        }
    }
}

/// Grows a tree following `plan` from `root`. Children are always taken
/// from the opposite side, never from `plan.avoid`, and never twice.
/// Running out of fresh neighbors is reported as [`Growth::Stuck`].
pub fn grow_tree(g: &BipartiteGraph, root: Vertex, plan: &GrowthPlan, seed: u64) -> Result<Growth> {
    plan.validate(g, root)?;
    let mut rng = rng::from_seed(seed);
    let mut blocked = vec![false; g.vertex_count()];
    for &a in &plan.avoid {
        blocked[g.id(a)] = true;
    }
    let root_id = g.id(root);
    blocked[root_id] = true;

    let mut levels = vec![vec![root_id]];
    let mut parents: Vec<Vec<usize>> = vec![Vec::new()];
    let mut eligible = Vec::new();
    for level in 1..=plan.depth {
        let branch = plan.branch_at(level - 1);
        let prev = &levels[level - 1];
        let mut next = Vec::with_capacity(prev.len() * branch);
        let mut next_parents = Vec::with_capacity(prev.len() * branch);
        for (pi, &x) in prev.iter().enumerate() {
            eligible.clear();
            eligible.extend(g.neighbor_ids(x).iter().copied().filter(|&y| !blocked[y]));
            if eligible.len() < branch {
                return Ok(Growth::Stuck(GrowthFailure {
                    level,
                    stuck_vertex: g.vertex(x),
                    needed: branch,
                    available: eligible.len(),
                }));
            }
            match plan.selection {
                Selection::Lexicographic => next.extend_from_slice(&eligible[..branch]),
                Selection::SeededRandom => {
                    next.extend(index::sample(&mut rng, eligible.len(), branch).iter().map(|i| eligible[i]))
                }
            }
            for &y in &next[next.len() - branch..] {
                blocked[y] = true;
            }
            next_parents.extend(std::iter::repeat(pi).take(branch));
        }
        levels.push(next);
        parents.push(next_parents);
    }
    Ok(Growth::Grown(GrownTree {
        root,
        plan: plan.clone(),
        levels: levels.into_iter().map(|l| l.into_iter().map(|id| g.vertex(id)).collect()).collect(),
        parents,
    }))
}

/// Leaves grouped under one level-1 vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViceTree {
    pub key: Vertex,
    pub leaves: Vec<Vertex>,
}

/// Partitions the leaves by level-1 ancestor, in level-1 order. Leaves keep
/// their level order within each part.
pub fn vice_trees(tree: &GrownTree) -> Vec<ViceTree> {
    let mut parts: Vec<ViceTree> =
        tree.levels[1].iter().map(|&key| ViceTree { key, leaves: Vec::new() }).collect();
    for (leaf, anc) in tree.leaves().iter().zip(tree.leaf_ancestors()) {
        parts[anc].leaves.push(*leaf);
    }
    parts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViceTreeCount {
    pub key: Vertex,
    pub target_neighbors: usize,
}

/// Which construction [`lemma_paths`] used and how.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaInfo {
    pub case: LemmaCase,
    pub p: f64,
    /// Unfloored branchings from the formulas, `(s, t)`.
    pub raw_branchings: (f64, f64),
    pub overrides_used: bool,
    pub regime: RegimeCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DisjointPathsReport {
    pub root: Vertex,
    pub target: Vertex,
    /// Leaves adjacent to the target.
    pub leaf_neighbor_count: usize,
    pub per_vice_tree_counts: Vec<ViceTreeCount>,
    /// Root to target, each through a leaf of a different vice-tree.
    pub extracted_paths: Vec<Path>,
    pub params_used: GrowthPlan,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<LemmaInfo>,
}

impl DisjointPathsReport {
    pub fn path_count(&self) -> usize {
        self.extracted_paths.len()
    }

    /// Largest number of target neighbors inside one vice-tree.
    pub fn max_vice_tree_count(&self) -> usize {
        self.per_vice_tree_counts.iter().map(|c| c.target_neighbors).max().unwrap_or(0)
    }
}

/// Takes the first target-adjacent leaf of each vice-tree (in level order)
/// until `limit` paths are collected, and closes each root-to-leaf branch
/// with the edge to `target`.
pub fn extract_disjoint_paths(
    g: &BipartiteGraph,
    tree: &GrownTree,
    target: Vertex,
    limit: usize,
) -> Result<DisjointPathsReport> {
    g.check_vertex(target)?;
    if tree.contains(target) {
        return Err(Error::InvalidArgument(format!("target {target} is a tree vertex")));
    }
    let leaf_side = tree.leaves()[0].side;
    if leaf_side == target.side {
        return Err(Error::SamePartite(tree.leaves()[0], target));
    }
    let ancestors = tree.leaf_ancestors();
    let mut counts: Vec<ViceTreeCount> =
        tree.levels[1].iter().map(|&key| ViceTreeCount { key, target_neighbors: 0 }).collect();
    let mut taken = vec![false; counts.len()];
    let mut paths = Vec::new();
    let depth = tree.depth();
    for (j, (&leaf, &anc)) in tree.leaves().iter().zip(&ancestors).enumerate() {
        if !g.is_adjacent(leaf, target) {
            continue;
        }
        counts[anc].target_neighbors += 1;
        if !taken[anc] && paths.len() < limit {
            taken[anc] = true;
            let mut vertices = tree.branch(depth, j);
            vertices.push(target);
            paths.push(Path::new(g, vertices)?);
        }
    }
    Ok(DisjointPathsReport {
        root: tree.root,
        target,
        leaf_neighbor_count: counts.iter().map(|c| c.target_neighbors).sum(),
        per_vice_tree_counts: counts,
        extracted_paths: paths,
        params_used: tree.plan.clone(),
        lemma: None,
    })
}

/// The six tree constructions, by parity of `d` and the sides of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaCase {
    OddLeftPair,
    OddRightPair,
    OddCrossPair,
    EvenLeftPair,
    EvenRightPair,
    EvenCrossPair,
}

impl LemmaCase {
    pub fn classify(d: usize, a: Side, b: Side) -> Self {
        let odd = d % 2 == 1;
        match (odd, a, b) {
            (true, Side::Left, Side::Left) => LemmaCase::OddLeftPair,
            (true, Side::Right, Side::Right) => LemmaCase::OddRightPair,
            (true, _, _) => LemmaCase::OddCrossPair,
            (false, Side::Left, Side::Left) => LemmaCase::EvenLeftPair,
            (false, Side::Right, Side::Right) => LemmaCase::EvenRightPair,
            (false, _, _) => LemmaCase::EvenCrossPair,
        }
    }

    /// Tree depth for this case.
    pub fn depth(self, d: usize) -> usize {
        match self {
            LemmaCase::OddLeftPair | LemmaCase::OddRightPair | LemmaCase::EvenCrossPair => d,
            _ => d - 1,
        }
    }

    /// Length of every extracted path.
    pub fn path_length(self, d: usize) -> usize {
        self.depth(d) + 1
    }

    /// Side of the root in cross-pair cases; `None` means the root is `u`.
    fn cross_root_side(self) -> Option<Side> {
        match self {
            LemmaCase::OddCrossPair => Some(Side::Left),
            LemmaCase::EvenCrossPair => Some(Side::Right),
            _ => None,
        }
    }

    /// Unfloored `(s, t)` for `G(m, n, p)`.
    pub fn raw_branchings(self, m: usize, n: usize, p: f64, d: usize) -> (f64, f64) {
        let (mf, nf) = (m as f64, n as f64);
        let (pm, pn) = (p * mf, p * nf);
        match self {
            LemmaCase::OddLeftPair => (pn / nf.ln(), pm / mf.ln()),
            LemmaCase::OddRightPair => {
                let e = 2.0 / (d as f64 - 1.0);
                (pm / mf.ln().powf(e), pn / nf.ln().powf(e))
            }
            LemmaCase::OddCrossPair | LemmaCase::EvenLeftPair => (pn / 10.0, pm / 10.0),
            LemmaCase::EvenRightPair => (pm / 10.0, pn / 10.0),
            LemmaCase::EvenCrossPair => (pm / mf.ln(), pn / nf.ln()),
        }
    }

    /// `(s, t)` floored, at least 1.
    pub fn branchings(self, m: usize, n: usize, p: f64, d: usize) -> Result<(usize, usize)> {
        let (s, t) = self.raw_branchings(m, n, p, d);
        Ok((floor_branch(s)?, floor_branch(t)?))
    }
}

fn floor_branch(x: f64) -> Result<usize> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Regime(format!("branching {x} is not a usable count")));
    }
    Ok((x.floor() as usize).max(1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOptions {
    /// Explicit `(s, t)` replacing the formula values; the regime check is
    /// then reported but not enforced.
    pub overrides: Option<(usize, usize)>,
    /// Maximum number of paths to extract.
    pub limit: Option<usize>,
    #[serde(default)]
    pub selection: Selection,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LemmaOutcome {
    Paths(DisjointPathsReport),
    Stuck { failure: GrowthFailure, params_used: GrowthPlan, lemma: LemmaInfo },
}

impl LemmaOutcome {
    pub fn path_count(&self) -> usize {
        match self {
            LemmaOutcome::Paths(r) => r.path_count(),
            LemmaOutcome::Stuck { .. } => 0,
        }
    }
}

/// Builds the case-specific tree for the pair `(u, v)` of `g ~ G(m, n, p)`
/// and extracts disjoint paths of the length matching `regime.d`.
///
/// Same-side pairs are rooted at `u`. Cross pairs are rooted at the left
/// vertex for odd `d` and at the right vertex for even `d`.
pub fn lemma_paths(
    g: &BipartiteGraph,
    u: Vertex,
    v: Vertex,
    p: f64,
    regime: &RegimeParams,
    opts: &LemmaOptions,
    seed: u64,
) -> Result<LemmaOutcome> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("u and v must differ".into()));
    }
    let (m, n, d) = (g.left_size(), g.right_size(), regime.d);
    if regime.m != m || regime.n != n {
        return Err(Error::InvalidArgument(format!(
            "regime is for {}x{} but the graph is {m}x{n}",
            regime.m, regime.n
        )));
    }
    let case = LemmaCase::classify(d, u.side, v.side);
    let check = thresholds::regime_valid(m, n, p, d, regime.epsilon);
    let raw = case.raw_branchings(m, n, p, d);
    let (s, t) = match opts.overrides {
        Some(o) => o,
        None => {
            if !check.valid {
                let failing: Vec<&str> =
                    check.inequalities.iter().filter(|i| !i.holds).map(|i| i.name).collect();
                return Err(Error::Regime(format!("violated: {}", failing.join(", "))));
            }
            case.branchings(m, n, p, d)?
        }
    };
    let (root, target) = match case.cross_root_side() {
        Some(side) if v.side == side => (v, u),
        _ => (u, v),
    };
    let plan = GrowthPlan::new(s, t, case.depth(d)).avoiding([target]).with_selection(opts.selection);
    let lemma = LemmaInfo { case, p, raw_branchings: raw, overrides_used: opts.overrides.is_some(), regime: check };
    match grow_tree(g, root, &plan, seed)? {
        Growth::Stuck(failure) => Ok(LemmaOutcome::Stuck { failure, params_used: plan, lemma }),
        Growth::Grown(tree) => {
            let mut report = extract_disjoint_paths(g, &tree, target, opts.limit.unwrap_or(usize::MAX))?;
            report.lemma = Some(lemma);
            Ok(LemmaOutcome::Paths(report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::check_disjoint_paths;

    fn u(i: usize) -> Vertex {
        Vertex::left(i)
    }

    fn v(i: usize) -> Vertex {
        Vertex::right(i)
    }

    #[test]
    fn complete_six_three() {
        let g = BipartiteGraph::complete(6, 3).unwrap();
        let plan = GrowthPlan::new(2, 2, 2).avoiding([u(1)]);
        for sel in [Selection::Lexicographic, Selection::SeededRandom] {
            let tree = grow_tree(&g, u(0), &plan.clone().with_selection(sel), 3).unwrap().tree().unwrap();
            assert_eq!(tree.level_sizes(), vec![1, 2, 4]);
            assert!(!tree.contains(u(1)));
            let parts = vice_trees(&tree);
            assert_eq!(parts.len(), 2);
            assert!(parts.iter().all(|p| p.leaves.len() == 2));
        }
        let lex = grow_tree(&g, u(0), &plan.with_selection(Selection::Lexicographic), 0).unwrap().tree().unwrap();
        assert_eq!(lex.levels()[1], vec![v(0), v(1)]);
        assert_eq!(lex.levels()[2], vec![u(2), u(3), u(4), u(5)]);
        assert_eq!(lex.parent(u(4)), Some(v(1)));
        assert_eq!(lex.parent(u(0)), None);
    }

    #[test]
    fn complete_two_two_gets_stuck() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let plan = GrowthPlan::new(2, 2, 2).avoiding([u(1)]).with_selection(Selection::Lexicographic);
        match grow_tree(&g, u(0), &plan, 1).unwrap() {
            Growth::Stuck(f) => {
                assert_eq!(f.level, 2);
                assert_eq!(f.available, 0);
                assert_eq!(f.needed, 2);
                assert_eq!(f.stuck_vertex, v(0));
            }
            Growth::Grown(_) => panic!("expected failure"),
        }
    }

    #[test]
    fn depth_one_takes_j_neighbors() {
        let g = BipartiteGraph::complete(4, 7).unwrap();
        let tree = grow_tree(&g, u(2), &GrowthPlan::new(5, 1, 1), 9).unwrap().tree().unwrap();
        assert_eq!(tree.levels()[1].len(), 5);
        assert!(tree.levels()[1].iter().all(|x| x.side == Side::Right));
        let parts = vice_trees(&tree);
        assert_eq!(parts.len(), 5);
        assert!(parts.iter().all(|p| p.leaves == vec![p.key]));
    }

    #[test]
    fn invalid_plans_are_faults() {
        let g = BipartiteGraph::complete(3, 3).unwrap();
        assert!(grow_tree(&g, u(0), &GrowthPlan::new(0, 1, 1), 0).is_err());
        assert!(grow_tree(&g, u(0), &GrowthPlan::new(1, 1, 0), 0).is_err());
        assert!(grow_tree(&g, u(0), &GrowthPlan::new(1, 1, 1).avoiding([u(0)]), 0).is_err());
        assert!(grow_tree(&g, u(5), &GrowthPlan::new(1, 1, 1), 0).is_err());
    }

    #[test]
    fn extraction_on_complete_graph() {
        let g = BipartiteGraph::complete(6, 3).unwrap();
        let plan = GrowthPlan::new(2, 1, 1).avoiding([u(1)]).with_selection(Selection::Lexicographic);
        let tree = grow_tree(&g, u(0), &plan, 4).unwrap().tree().unwrap();
        let report = extract_disjoint_paths(&g, &tree, u(1), usize::MAX).unwrap();
        assert_eq!(report.leaf_neighbor_count, 2);
        assert_eq!(report.path_count(), 2);
        assert!(report.extracted_paths.iter().all(|p| p.len() == 2));
        check_disjoint_paths(&g, &report.extracted_paths, u(0), u(1)).unwrap();

        let limited = extract_disjoint_paths(&g, &tree, u(1), 1).unwrap();
        assert_eq!(limited.path_count(), 1);
        assert_eq!(limited.leaf_neighbor_count, 2);

        assert!(matches!(extract_disjoint_paths(&g, &tree, v(2), 5), Err(Error::SamePartite(..))));
        assert!(extract_disjoint_paths(&g, &tree, u(0), 5).is_err());
    }

    #[test]
    fn no_target_neighbors_gives_no_paths() {
        let g = BipartiteGraph::from_edges(3, 2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        let tree = grow_tree(&g, u(0), &GrowthPlan::new(1, 1, 1).with_selection(Selection::Lexicographic), 0)
            .unwrap()
            .tree()
            .unwrap();
        assert_eq!(tree.leaves(), &[v(0)]);
        let report = extract_disjoint_paths(&g, &tree, u(2), 4).unwrap();
        assert_eq!(report.leaf_neighbor_count, 0);
        assert!(report.extracted_paths.is_empty());
    }

    #[test]
    fn one_path_per_vice_tree() {
        // Depth 3 from U0 in K_{8,12}: 2 vice-trees of 4 leaves each, all adjacent to U7.
        let g = BipartiteGraph::complete(8, 12).unwrap();
        let plan = GrowthPlan::new(2, 2, 3).avoiding([u(7)]);
        let tree = grow_tree(&g, u(0), &plan, 11).unwrap().tree().unwrap();
        assert_eq!(tree.level_sizes(), vec![1, 2, 4, 8]);
        let report = extract_disjoint_paths(&g, &tree, u(7), usize::MAX).unwrap();
        assert_eq!(report.leaf_neighbor_count, 8);
        assert_eq!(report.max_vice_tree_count(), 4);
        assert_eq!(report.path_count(), 2);
        assert!(report.extracted_paths.iter().all(|p| p.len() == 4));
        check_disjoint_paths(&g, &report.extracted_paths, u(0), u(7)).unwrap();
    }

    #[test]
    fn lemma_cases_and_lengths() {
        let g = BipartiteGraph::complete(40, 40).unwrap();
        let regime = |d| RegimeParams::new(40, 40, d, 1, 1.0, 0.5).unwrap();
        let opts = LemmaOptions { overrides: Some((2, 2)), ..Default::default() };
        let cases = [
            (3, u(0), u(1), 4),
            (3, v(0), v(1), 4),
            (3, u(0), v(1), 3),
            (3, v(1), u(0), 3),
            (2, u(0), u(1), 2),
            (2, v(0), v(1), 2),
            (2, u(0), v(1), 3),
            (4, u(3), u(5), 4),
            (4, v(3), u(5), 5),
        ];
        for (d, a, b, len) in cases {
            let out = lemma_paths(&g, a, b, 1.0, &regime(d), &opts, 5).unwrap();
            let LemmaOutcome::Paths(r) = out else { panic!("stuck for d={d}") };
            assert!(r.path_count() >= 1);
            assert!(r.extracted_paths.iter().all(|p| p.len() == len), "d={d} {a} {b}");
            check_disjoint_paths(&g, &r.extracted_paths, r.root, r.target).unwrap();
            assert!(r.lemma.as_ref().unwrap().overrides_used);
        }
    }

    #[test]
    fn lemma_cross_roots() {
        let g = BipartiteGraph::complete(30, 30).unwrap();
        let opts = LemmaOptions { overrides: Some((1, 1)), ..Default::default() };
        let odd = RegimeParams::new(30, 30, 3, 1, 1.0, 0.5).unwrap();
        let LemmaOutcome::Paths(r) = lemma_paths(&g, v(2), u(4), 1.0, &odd, &opts, 0).unwrap() else { panic!() };
        assert_eq!((r.root, r.target), (u(4), v(2)));
        let even = RegimeParams::new(30, 30, 2, 1, 1.0, 0.5).unwrap();
        let LemmaOutcome::Paths(r) = lemma_paths(&g, u(4), v(2), 1.0, &even, &opts, 0).unwrap() else { panic!() };
        assert_eq!((r.root, r.target), (v(2), u(4)));
    }

    #[test]
    fn lemma_regime_is_enforced_without_overrides() {
        let g = BipartiteGraph::complete(20, 20).unwrap();
        let regime = RegimeParams::new(20, 20, 3, 1, 1.0, 0.5).unwrap();
        let err = lemma_paths(&g, u(0), u(1), 0.3, &regime, &LemmaOptions::default(), 0).unwrap_err();
        assert!(matches!(err, Error::Regime(_)));
        assert!(lemma_paths(&g, u(0), u(0), 0.3, &regime, &LemmaOptions::default(), 0).is_err());
    }

    #[test]
    fn floored_branchings() {
        let (s, t) = LemmaCase::OddLeftPair.branchings(100, 200, 0.5, 3).unwrap();
        assert_eq!(s, (100.0 / 200f64.ln()).floor() as usize);
        assert_eq!(t, (50.0 / 100f64.ln()).floor() as usize);
        assert_eq!(LemmaCase::EvenLeftPair.branchings(10, 10, 0.1, 2).unwrap(), (1, 1));
        assert!(LemmaCase::OddLeftPair.branchings(1, 1, 0.5, 3).is_err());
    }
}
