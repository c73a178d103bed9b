//! Vertices, edges and complete edge colorings of `K_p`.

use std::fmt;

use crate::error::{invalid, Result};

/// A color in `1..=t`.
pub type Color = u16;

/// A 1-based vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    /// Checked constructor for a vertex of a graph of order `order`.
    pub fn new(index: usize, order: usize) -> Result<Self> {
        if index == 0 || index > order {
            return Err(invalid(format!("vertex {index} outside 1..={order}")));
        }
        Ok(VertexId(index))
    }

    pub(crate) const fn raw(index: usize) -> Self {
        VertexId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(invalid(format!("loop at {a}"))),
        }
    }

    /// Unchecked constructor from raw 1-based indices; the caller guarantees `a != b`.
    pub(crate) fn from_indices(a: usize, b: usize) -> Self {
        debug_assert!(a != b && a > 0 && b > 0);
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Edge {
            u: VertexId(u),
            v: VertexId(v),
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn touches(self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u.0, self.v.0)
    }
}

/// Number of edges of `K_p`.
pub fn edge_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

/// Position of `{u,v}` (1-based, `u < v`) in the lexicographic edge order of `K_p`.
pub fn edge_index(order: usize, u: usize, v: usize) -> usize {
    debug_assert!(0 < u && u < v && v <= order);
    (u - 1) * (2 * order - u) / 2 + (v - u - 1)
}

/// All edges of `K_p` in lexicographic order.
pub fn edges_of(order: usize) -> impl Iterator<Item = Edge> {
    (1..=order).flat_map(move |u| ((u + 1)..=order).map(move |v| Edge::from_indices(u, v)))
}

/// A total `t`-coloring of the edges of `K_p`.
///
/// Colors are stored in lexicographic edge order. Every stored color lies in
/// `1..=t`; not every color has to occur.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    order: usize,
    num_colors: Color,
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Builds a coloring from colors listed in lexicographic edge order.
    pub fn from_colors(order: usize, num_colors: Color, colors: Vec<Color>) -> Result<Self> {
        if num_colors == 0 {
            return Err(invalid("a coloring needs at least one color"));
        }
        if colors.len() != edge_count(order) {
            return Err(invalid(format!(
                "K_{order} has {} edges, got {} colors",
                edge_count(order),
                colors.len()
            )));
        }
        if let Some(pos) = colors.iter().position(|&c| c == 0 || c > num_colors) {
            return Err(invalid(format!(
                "color {} at edge #{pos} outside 1..={num_colors}",
                colors[pos]
            )));
        }
        Ok(EdgeColoring {
            order,
            num_colors,
            colors,
        })
    }

    pub fn from_fn(
        order: usize,
        num_colors: Color,
        mut color_of: impl FnMut(Edge) -> Color,
    ) -> Result<Self> {
        let colors = edges_of(order).map(&mut color_of).collect();
        Self::from_colors(order, num_colors, colors)
    }

    pub fn monochromatic(order: usize, num_colors: Color, color: Color) -> Result<Self> {
        Self::from_fn(order, num_colors, |_| color)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_colors(&self) -> Color {
        self.num_colors
    }

    /// Colors in lexicographic edge order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, edge: Edge) -> Color {
        self.colors[edge_index(self.order, edge.u.0, edge.v.0)]
    }

    /// Color of the edge between two distinct 1-based vertices.
    pub fn color_between(&self, a: usize, b: usize) -> Color {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.colors[edge_index(self.order, u, v)]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        edges_of(self.order).zip(self.colors.iter().copied())
    }

    pub fn profile(&self) -> ColorDegreeProfile {
        ColorDegreeProfile::of(self)
    }

    /// Relabels colors: color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<Self> {
        if perm.len() != self.num_colors as usize {
            return Err(invalid("color permutation has the wrong length"));
        }
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        Self::from_colors(self.order, self.num_colors, colors)
    }

    /// Relabels vertices: vertex `i` becomes `perm[i - 1]` (1-based images).
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(invalid("vertex permutation has the wrong length"));
        }
        let mut colors = vec![0; self.colors.len()];
        for (edge, c) in self.edges() {
            let a = perm[edge.u.0 - 1];
            let b = perm[edge.v.0 - 1];
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            colors[edge_index(self.order, u, v)] = c;
        }
        Self::from_colors(self.order, self.num_colors, colors)
    }
}

/// Per-vertex color degrees: entry `(v, c)` counts edges at `v` with color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorDegreeProfile {
    order: usize,
    num_colors: usize,
    counts: Vec<usize>,
}

impl ColorDegreeProfile {
    pub fn of(coloring: &EdgeColoring) -> Self {
        let t = coloring.num_colors as usize;
        let mut counts = vec![0; coloring.order * t];
        for (edge, c) in coloring.edges() {
            let c = c as usize - 1;
            counts[(edge.u.0 - 1) * t + c] += 1;
            counts[(edge.v.0 - 1) * t + c] += 1;
        }
        ColorDegreeProfile {
            order: coloring.order,
            num_colors: t,
            counts,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// The `t` color degrees of vertex `v` (1-based).
    pub fn row(&self, v: usize) -> &[usize] {
        &self.counts[(v - 1) * self.num_colors..v * self.num_colors]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.counts.chunks(self.num_colors.max(1)).take(self.order)
    }

    /// Count of edges of color `c` at vertex `v`.
    pub fn get(&self, v: usize, c: Color) -> usize {
        self.row(v)[c as usize - 1]
    }
}
