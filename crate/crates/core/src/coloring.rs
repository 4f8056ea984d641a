//! Edge colorings with palette `1..=C`.

use std::io::{BufRead, Write};

use rand::Rng as _;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};
use crate::rng;

/// One color per edge of an associated graph, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    num_colors: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// `colors[i]` is the color of edge `i` of `g`.
    pub fn new(g: &BipartiteGraph, num_colors: u32, colors: Vec<u32>) -> Result<Self> {
        if num_colors == 0 {
            return Err(Error::EmptyPalette);
        }
        if colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch { coloring: colors.len(), graph: g.edge_count() });
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > num_colors) {
            return Err(Error::ColorOutOfRange { color, palette: num_colors });
        }
        Ok(EdgeColoring { num_colors, colors })
    }

    /// Every edge gets its own color, in edge-id order.
    pub fn injective(g: &BipartiteGraph) -> Self {
        let colors: Vec<u32> = (1..=g.edge_count() as u32).collect();
        EdgeColoring { num_colors: colors.len().max(1) as u32, colors }
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colors in edge-id order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of_edge(&self, edge_id: usize) -> Option<u32> {
        self.colors.get(edge_id).copied()
    }

    pub fn color(&self, g: &BipartiteGraph, a: Vertex, b: Vertex) -> Result<u32> {
        self.check_graph(g)?;
        let id = g.edge_id(a, b).ok_or(Error::MissingEdge(a, b))?;
        Ok(self.colors[id])
    }

    pub(crate) fn check_graph(&self, g: &BipartiteGraph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch { coloring: self.colors.len(), graph: g.edge_count() });
        }
        Ok(())
    }

    /// Re-labels colors through `map` (1-based input, 1-based output) into a
    /// palette of `num_colors`.
    pub fn relabel(&self, num_colors: u32, map: impl Fn(u32) -> u32) -> Result<Self> {
        let colors: Vec<u32> = self.colors.iter().map(|&c| map(c)).collect();
        if num_colors == 0 {
            return Err(Error::EmptyPalette);
        }
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > num_colors) {
            return Err(Error::ColorOutOfRange { color, palette: num_colors });
        }
        Ok(EdgeColoring { num_colors, colors })
    }

    /// Writes one `u v c` line per edge.
    pub fn write_text<W: Write>(&self, g: &BipartiteGraph, mut out: W) -> Result<()> {
        self.check_graph(g)?;
        for ((u, v), c) in g.edges().zip(&self.colors) {
            writeln!(out, "{u} {v} {c}")?;
        }
        Ok(())
    }

    pub fn to_text(&self, g: &BipartiteGraph) -> Result<String> {
        let mut buf = Vec::new();
        self.write_text(g, &mut buf)?;
        Ok(String::from_utf8(buf).expect("coloring text is ASCII"))
    }

    /// Parses `u v c` lines for the edges of `g`. Every edge must be colored
    /// exactly once. The palette size is the largest color seen unless
    /// `num_colors` is given.
    pub fn read_text<R: BufRead>(g: &BipartiteGraph, input: R, num_colors: Option<u32>) -> Result<Self> {
        let mut colors = vec![0u32; g.edge_count()];
        let mut max_color = 0;
        for (i, line) in input.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::parse(line_no, "expected `u v c`"));
            }
            let num = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::parse(line_no, format!("bad integer {s:?}")))
            };
            let (u, v, c) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
            let c = u32::try_from(c).map_err(|_| Error::parse(line_no, "color too large"))?;
            if c == 0 {
                return Err(Error::parse(line_no, "colors start at 1"));
            }
            let id = g
                .edge_id(Vertex::left(u), Vertex::right(v))
                .ok_or_else(|| Error::parse(line_no, format!("{u} {v} is not an edge of the graph")))?;
            if colors[id] != 0 {
                return Err(Error::parse(line_no, format!("edge {u} {v} colored twice")));
            }
            colors[id] = c;
            max_color = max_color.max(c);
        }
        if let Some((u, v)) = g.edges().zip(&colors).find(|(_, &c)| c == 0).map(|(e, _)| e) {
            return Err(Error::InvalidArgument(format!("edge {u} {v} has no color")));
        }
        EdgeColoring::new(g, num_colors.unwrap_or(max_color.max(1)), colors)
    }

    pub fn from_text(g: &BipartiteGraph, text: &str, num_colors: Option<u32>) -> Result<Self> {
        Self::read_text(g, text.as_bytes(), num_colors)
    }
}

/// Colors every edge independently and uniformly from `1..=num_colors`, in
/// edge-id order.
pub fn random_coloring(g: &BipartiteGraph, num_colors: u32, seed: u64) -> Result<EdgeColoring> {
    if num_colors == 0 {
        return Err(Error::EmptyPalette);
    }
    let mut rng = rng::from_seed(seed);
    let colors = (0..g.edge_count()).map(|_| rng.random_range(1..=num_colors)).collect();
    EdgeColoring::new(g, num_colors, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample_gnp;

    #[test]
    fn singleton_palette() {
        let g = sample_gnp(6, 6, 0.5, 1).unwrap();
        let c = random_coloring(&g, 1, 42).unwrap();
        assert!(c.colors().iter().all(|&x| x == 1));
    }

    #[test]
    fn deterministic_per_seed() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        assert_eq!(random_coloring(&g, 3, 5).unwrap(), random_coloring(&g, 3, 5).unwrap());
    }

    #[test]
    fn rejects_empty_palette() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        assert!(matches!(random_coloring(&g, 0, 5), Err(Error::EmptyPalette)));
    }

    #[test]
    fn colors_are_uniform() {
        // K_{10,10} with 4 colors: each color count ~ Binomial(100, 1/4), mean 25.
        let g = BipartiteGraph::complete(10, 10).unwrap();
        let samples = 10_000u64;
        let mut counts = [0u64; 4];
        for seed in 0..samples {
            for &c in random_coloring(&g, 4, seed).unwrap().colors() {
                counts[c as usize - 1] += 1;
            }
        }
        let se = (100.0f64 * 0.25 * 0.75).sqrt() / (samples as f64).sqrt();
        for count in counts {
            let mean = count as f64 / samples as f64;
            assert!((mean - 25.0).abs() < 3.0 * se, "mean {mean}");
        }
    }

    #[test]
    fn colors_stay_in_range() {
        for seed in 0..20 {
            let g = sample_gnp(7, 5, 0.6, seed).unwrap();
            let c = random_coloring(&g, 3, seed).unwrap();
            assert_eq!(c.len(), g.edge_count());
            assert!(c.colors().iter().all(|&x| (1..=3).contains(&x)));
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = sample_gnp(4, 5, 0.6, 2).unwrap();
        let c = random_coloring(&g, 3, 9).unwrap();
        let text = c.to_text(&g).unwrap();
        assert_eq!(EdgeColoring::from_text(&g, &text, Some(3)).unwrap(), c);

        let g = BipartiteGraph::complete(1, 2).unwrap();
        assert!(EdgeColoring::from_text(&g, "0 0 1\n", None).is_err());
        let err = EdgeColoring::from_text(&g, "0 0 1\n0 0 2\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(EdgeColoring::new(&g, 2, vec![1, 3]).is_err());
    }
}
