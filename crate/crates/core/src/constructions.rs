//! Explicit colorings that certify lower bounds.
//!
//! Every builder checks its own postcondition on the color-degree profile
//! before returning, so a returned coloring always has the advertised
//! per-vertex color counts.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::formulas::classify_only;
use crate::graph::{edge_count, edge_index, Color, Edge, EdgeColoring, VertexId};
use crate::matching::{near_matching, near_one_factorization, one_factorization};
use crate::verify::{check_certificate, Certificate, Verdict};

/// Which construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecipeTag {
    EqualClasses,
    FloorClasses,
    PartitionedFactorization,
    ThreeClasses,
    TrivialCycle,
}

impl fmt::Display for RecipeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RecipeTag::EqualClasses => "equal-classes",
            RecipeTag::FloorClasses => "floor-classes",
            RecipeTag::PartitionedFactorization => "partitioned-factorization",
            RecipeTag::ThreeClasses => "three-classes",
            RecipeTag::TrivialCycle => "trivial-cycle",
        };
        f.write_str(s)
    }
}

/// A construction together with the arguments it was (or will be) run with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WitnessRecipe {
    /// `K_{tq+1}`, every color exactly `q` times at every vertex.
    EqualClasses {
        t: usize,
        q: usize,
    },
    /// `K_{tq+r}`, every color at least `q` times at every vertex.
    /// `offsets` holds the cyclic shift used on `M_{v_2}..M_{v_{r-1}}`; all
    /// zeros unless the fallback search had to move them.
    FloorClasses {
        t: usize,
        q: usize,
        r: usize,
        offsets: Vec<usize>,
    },
    PartitionedFactorization {
        p: usize,
        class_sizes: Vec<usize>,
    },
    /// `K_{3n-2}` with three colors, each `n - 1` times at every vertex.
    ThreeClasses {
        n: usize,
    },
    TrivialCycle {
        p: usize,
        t: usize,
    },
}

impl WitnessRecipe {
    pub fn tag(&self) -> RecipeTag {
        match self {
            WitnessRecipe::EqualClasses { .. } => RecipeTag::EqualClasses,
            WitnessRecipe::FloorClasses { .. } => RecipeTag::FloorClasses,
            WitnessRecipe::PartitionedFactorization { .. } => RecipeTag::PartitionedFactorization,
            WitnessRecipe::ThreeClasses { .. } => RecipeTag::ThreeClasses,
            WitnessRecipe::TrivialCycle { .. } => RecipeTag::TrivialCycle,
        }
    }

    /// Order of the graph the recipe colors.
    pub fn order(&self) -> usize {
        match self {
            WitnessRecipe::EqualClasses { t, q } => t * q + 1,
            WitnessRecipe::FloorClasses { t, q, r, .. } => t * q + r,
            WitnessRecipe::PartitionedFactorization { p, .. } => *p,
            WitnessRecipe::ThreeClasses { n } => 3 * n - 2,
            WitnessRecipe::TrivialCycle { p, .. } => *p,
        }
    }

    /// True when the offset fallback moved at least one offset.
    pub fn used_fallback(&self) -> bool {
        matches!(self, WitnessRecipe::FloorClasses { offsets, .. } if offsets.iter().any(|&o| o != 0))
    }

    /// Runs the construction.
    pub fn build(&self) -> Result<EdgeColoring> {
        match self {
            WitnessRecipe::EqualClasses { t, q } => equal_classes_coloring(*t, *q),
            WitnessRecipe::FloorClasses { t, q, r, offsets } => {
                let x = t * q + r;
                let c = floor_classes_paint(*t, *q, *r, offsets)?;
                check_floor(&c, *q).map_err(|v| {
                    Error::ConstructionFailed(format!(
                        "floor-classes K_{x} with offsets {offsets:?}: vertex {v} below {q}"
                    ))
                })?;
                Ok(c)
            }
            WitnessRecipe::PartitionedFactorization { p, class_sizes } => {
                partitioned_factorization_coloring(*p, class_sizes)
            }
            WitnessRecipe::ThreeClasses { n } => three_classes_coloring(*n),
            WitnessRecipe::TrivialCycle { p, t } => trivial_cycle_coloring(*p, *t),
        }
    }
}

impl fmt::Display for WitnessRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRecipe::EqualClasses { t, q } => write!(f, "equal-classes(t={t},q={q})"),
            WitnessRecipe::FloorClasses { t, q, r, offsets } => {
                write!(f, "floor-classes(t={t},q={q},r={r}")?;
                if offsets.iter().any(|&o| o != 0) {
                    write!(f, ",offsets={offsets:?}")?;
                }
                write!(f, ")")
            }
            WitnessRecipe::PartitionedFactorization { p, class_sizes } => {
                let sizes: Vec<String> = class_sizes.iter().map(|s| s.to_string()).collect();
                write!(
                    f,
                    "partitioned-factorization(p={p},classes=[{}])",
                    sizes.join(",")
                )
            }
            WitnessRecipe::ThreeClasses { n } => write!(f, "three-classes(n={n})"),
            WitnessRecipe::TrivialCycle { p, t } => write!(f, "trivial-cycle(p={p},t={t})"),
        }
    }
}

/// Circle positions for the equal-class and floor-class vertex partitions.
///
/// `classes[i][j]` is the position of `v_{(i+1)(j+1)}`; a vertex of class
/// column `j` owns color `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLayout {
    pub x: usize,
    pub singletons: Vec<VertexId>,
    pub classes: Vec<Vec<VertexId>>,
}

impl ClassLayout {
    /// `v_x` at position `x`; `T_1..T_{q/2}` on one side and `T_{q/2+1}..T_q`
    /// mirrored on the other, so `v_{ij}` and `v_{(q+1-i)j}` sit at positions
    /// summing to `x`.
    pub fn equal_classes(t: usize, q: usize) -> Self {
        let x = t * q + 1;
        let classes = (1..=q)
            .map(|i| {
                (1..=t)
                    .map(|j| {
                        let pos = if i <= q / 2 {
                            (i - 1) * t + j
                        } else {
                            x - ((q - i) * t + j)
                        };
                        VertexId::raw(pos)
                    })
                    .collect()
            })
            .collect();
        ClassLayout {
            x,
            singletons: vec![VertexId::raw(x)],
            classes,
        }
    }

    /// `v_1..v_r` first, then `T_1..T_q` in order around the circle.
    pub fn floor_classes(t: usize, q: usize, r: usize) -> Self {
        let classes = (1..=q)
            .map(|i| {
                (1..=t)
                    .map(|j| VertexId::raw(r + (i - 1) * t + j))
                    .collect()
            })
            .collect();
        ClassLayout {
            x: t * q + r,
            singletons: (1..=r).map(VertexId::raw).collect(),
            classes,
        }
    }
}

/// Partial edge coloring of `K_p`, filled matching by matching.
struct Canvas {
    order: usize,
    num_colors: usize,
    slots: Vec<Option<Color>>,
}

impl Canvas {
    fn new(order: usize, num_colors: usize) -> Self {
        Canvas {
            order,
            num_colors,
            slots: vec![None; edge_count(order)],
        }
    }

    fn paint(&mut self, e: Edge, color: usize) {
        debug_assert!((1..=self.num_colors).contains(&color));
        let slot = &mut self.slots[edge_index(self.order, e.u().index(), e.v().index())];
        debug_assert!(slot.is_none(), "edge {e} painted twice");
        *slot = Some(color as Color);
    }

    fn finish(self) -> Result<EdgeColoring> {
        let colors: Option<Vec<Color>> = self.slots.into_iter().collect();
        let colors = colors
            .ok_or_else(|| Error::ConstructionFailed("some edge was left uncolored".into()))?;
        let t = Color::try_from(self.num_colors)
            .map_err(|_| invalid(format!("{} colors do not fit", self.num_colors)))?;
        EdgeColoring::from_colors(self.order, t, colors)
    }
}

/// First vertex whose row differs from `expected`, if any.
fn check_rows(c: &EdgeColoring, expected: &[usize]) -> std::result::Result<(), usize> {
    let prof = c.profile();
    let bad = prof.rows().position(|row| row != expected);
    match bad {
        Some(i) => Err(i + 1),
        None => Ok(()),
    }
}

/// First vertex with some color count below `floor`, if any.
fn check_floor(c: &EdgeColoring, floor: usize) -> std::result::Result<(), usize> {
    let prof = c.profile();
    let bad = prof.rows().position(|row| row.iter().any(|&d| d < floor));
    match bad {
        Some(i) => Err(i + 1),
        None => Ok(()),
    }
}

fn color_count(t: usize) -> Result<()> {
    if t == 0 || t > Color::MAX as usize {
        return Err(invalid(format!("color count {t} out of range")));
    }
    Ok(())
}

/// Coloring of `K_{tq+1}` (q even) with every color exactly `q` times at every vertex.
pub fn equal_classes_coloring(t: usize, q: usize) -> Result<EdgeColoring> {
    if t < 2 {
        return Err(invalid(format!("equal-classes needs t >= 2, got {t}")));
    }
    if q < 2 || q % 2 == 1 {
        return Err(invalid(format!("equal-classes needs even q >= 2, got {q}")));
    }
    color_count(t)?;
    let layout = ClassLayout::equal_classes(t, q);
    let x = layout.x;
    let mut canvas = Canvas::new(x, t);
    for class in &layout.classes {
        for (j, &pos) in class.iter().enumerate() {
            for &e in near_matching(x, pos.index()).edges() {
                canvas.paint(e, j + 1);
            }
        }
    }
    // M_{v_x}: its k-th edge joins the positions k and x-k, i.e. v_{ij} with
    // its mirror v_{(q+1-i)j}, and takes that column's color.
    for (k, &e) in near_matching(x, x).edges().iter().enumerate() {
        canvas.paint(e, k % t + 1);
    }
    let c = canvas.finish()?;
    check_rows(&c, &vec![q; t]).map_err(|v| {
        Error::ConstructionFailed(format!(
            "equal-classes K_{x}: vertex {v} is not {q}-balanced"
        ))
    })?;
    Ok(c)
}

fn floor_classes_params(t: usize, q: usize, r: usize) -> Result<usize> {
    if t < 3 {
        return Err(invalid(format!("floor-classes needs t >= 3, got {t}")));
    }
    if q < 1 {
        return Err(invalid("floor-classes needs q >= 1"));
    }
    if !(2..t).contains(&r) {
        return Err(invalid(format!(
            "floor-classes needs 2 <= r <= t-1, got r={r}, t={t}"
        )));
    }
    let x = t * q + r;
    if x.is_multiple_of(2) {
        return Err(invalid(format!("floor-classes needs tq+r odd, got {x}")));
    }
    color_count(t)?;
    Ok(x)
}

fn floor_classes_paint(t: usize, q: usize, r: usize, offsets: &[usize]) -> Result<EdgeColoring> {
    let x = floor_classes_params(t, q, r)?;
    if offsets.len() != r - 2 {
        return Err(invalid(format!("floor-classes needs {} offsets", r - 2)));
    }
    let layout = ClassLayout::floor_classes(t, q, r);
    let mut canvas = Canvas::new(x, t);
    for class in &layout.classes {
        for (j, &pos) in class.iter().enumerate() {
            for &e in near_matching(x, pos.index()).edges() {
                canvas.paint(e, j + 1);
            }
        }
    }
    for (k, &e) in near_matching(x, r).edges().iter().enumerate() {
        canvas.paint(e, k % t + 1);
    }
    for (k, &e) in near_matching(x, 1).edges().iter().enumerate() {
        canvas.paint(e, t - k % t);
    }
    for (m, &offset) in (2..r).zip(offsets) {
        for (k, &e) in near_matching(x, m).edges().iter().enumerate() {
            canvas.paint(e, (k + m + offset) % t + 1);
        }
    }
    canvas.finish()
}

/// Largest number of offset vectors the offset fallback will try.
const OFFSET_SEARCH_LIMIT: usize = 1 << 16;

/// Builds the floor-class coloring and returns the offsets that satisfied the
/// floor. Offsets are searched in odometer order starting from all zeros.
pub fn floor_classes_with_recipe(
    t: usize,
    q: usize,
    r: usize,
) -> Result<(EdgeColoring, WitnessRecipe)> {
    let x = floor_classes_params(t, q, r)?;
    let mut offsets = vec![0; r - 2];
    for _ in 0..OFFSET_SEARCH_LIMIT {
        let c = floor_classes_paint(t, q, r, &offsets)?;
        if check_floor(&c, q).is_ok() {
            return Ok((c, WitnessRecipe::FloorClasses { t, q, r, offsets }));
        }
        // advance the odometer; stop after the last vector
        let mut i = 0;
        loop {
            if i == offsets.len() {
                return Err(Error::ConstructionFailed(format!(
                    "floor-classes K_{x}: no offset choice reaches {q} of every color"
                )));
            }
            offsets[i] += 1;
            if offsets[i] < t {
                break;
            }
            offsets[i] = 0;
            i += 1;
        }
    }
    Err(Error::ConstructionFailed(format!(
        "floor-classes K_{x}: offset search limit reached"
    )))
}

/// Coloring of odd `K_{tq+r}` with every color at least `q` times at every vertex.
pub fn floor_classes_coloring(t: usize, q: usize, r: usize) -> Result<EdgeColoring> {
    floor_classes_with_recipe(t, q, r).map(|(c, _)| c)
}

/// Groups the `p - 1` matchings of a 1-factorization of `K_p` into color
/// classes of the given sizes; every vertex then has exactly
/// `class_sizes[c-1]` edges of color `c`.
pub fn partitioned_factorization_coloring(p: usize, class_sizes: &[usize]) -> Result<EdgeColoring> {
    if p < 2 || p % 2 == 1 {
        return Err(invalid(format!(
            "partitioned factorization needs even p >= 2, got {p}"
        )));
    }
    if class_sizes.is_empty() {
        return Err(invalid("need at least one color class"));
    }
    let total: usize = class_sizes.iter().sum();
    if total != p - 1 {
        return Err(invalid(format!(
            "class sizes sum to {total}, K_{p} has {} matchings",
            p - 1
        )));
    }
    color_count(class_sizes.len())?;
    let class_of: Vec<usize> = class_sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &size)| std::iter::repeat_n(c + 1, size))
        .collect();
    let mut canvas = Canvas::new(p, class_sizes.len());
    for (m, matching) in one_factorization(p)?.into_iter().enumerate() {
        for e in matching {
            canvas.paint(e, class_of[m]);
        }
    }
    let c = canvas.finish()?;
    check_rows(&c, class_sizes).map_err(|v| {
        Error::ConstructionFailed(format!(
            "partitioned K_{p}: vertex {v} misses its class sizes"
        ))
    })?;
    Ok(c)
}

/// Class sizes as equal as possible: `r` classes of `q + 1` first, then
/// `t - r` classes of `q`, where `p - 1 = tq + r`.
pub fn balanced_class_sizes(p: usize, t: usize) -> Vec<usize> {
    let (q, r) = ((p - 1) / t, (p - 1) % t);
    (0..t).map(|c| if c < r { q + 1 } else { q }).collect()
}

/// Three colors on `K_{3n-2}`, each exactly `n - 1` times at every vertex.
pub fn three_classes_coloring(n: usize) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(invalid(format!("three-classes needs n >= 2, got {n}")));
    }
    let p = 3 * n - 2;
    let c = if p.is_multiple_of(2) {
        partitioned_factorization_coloring(p, &[n - 1; 3])?
    } else {
        let mut canvas = Canvas::new(p, 3);
        for m in near_one_factorization(p)? {
            for (k, &e) in m.edges().iter().enumerate() {
                canvas.paint(e, k % 3 + 1);
            }
        }
        canvas.finish()?
    };
    check_rows(&c, &[n - 1; 3]).map_err(|v| {
        Error::ConstructionFailed(format!("three-classes K_{p}: vertex {v} is unbalanced"))
    })?;
    Ok(c)
}

/// Deterministic coloring with no degree guarantee: matching `k` (even
/// order) or edge `k` of each near-matching (odd order) gets color
/// `((k-1) mod t) + 1`.
pub fn trivial_cycle_coloring(p: usize, t: usize) -> Result<EdgeColoring> {
    if t == 0 {
        return Err(invalid("need at least one color"));
    }
    color_count(t)?;
    let mut canvas = Canvas::new(p, t);
    if p >= 3 && p % 2 == 1 {
        for m in near_one_factorization(p)? {
            for (k, &e) in m.edges().iter().enumerate() {
                canvas.paint(e, k % t + 1);
            }
        }
    } else if p >= 2 {
        for (k, matching) in one_factorization(p)?.into_iter().enumerate() {
            for e in matching {
                canvas.paint(e, k % t + 1);
            }
        }
    }
    canvas.finish()
}

/// Picks the construction for a lower-bound witness on `K_order`.
pub fn plan_witness(n: usize, t: usize, s: usize, order: usize) -> WitnessRecipe {
    if t == 3 && s == 1 && n >= 2 && order == 3 * n - 2 {
        return WitnessRecipe::ThreeClasses { n };
    }
    if order < 2 || order - 1 < n {
        return WitnessRecipe::TrivialCycle { p: order, t };
    }
    if order.is_multiple_of(2) {
        return WitnessRecipe::PartitionedFactorization {
            p: order,
            class_sizes: balanced_class_sizes(order, t),
        };
    }
    let m = (order - 1) / t;
    if (order - 1).is_multiple_of(t) && m >= 2 && m.is_multiple_of(2) {
        return WitnessRecipe::EqualClasses { t, q: m };
    }
    let (q, r) = (order / t, order % t);
    if t >= 3 && q >= 1 && (2..t).contains(&r) {
        return WitnessRecipe::FloorClasses {
            t,
            q,
            r,
            offsets: vec![0; r - 2],
        };
    }
    WitnessRecipe::TrivialCycle { p: order, t }
}

/// Builds and checks a coloring of `K_{R-1}` in which every `n`-star uses
/// more than `s` colors, where `R` is the classifier's value for `(n, t, s)`.
pub fn witness_coloring(n: usize, t: usize, s: usize) -> Result<(EdgeColoring, WitnessRecipe)> {
    let verdict = classify_only(n, t, s)?;
    let order = verdict.value - 1;
    let planned = plan_witness(n, t, s, order);
    let (coloring, recipe) = match planned {
        WitnessRecipe::FloorClasses { t, q, r, .. } => floor_classes_with_recipe(t, q, r)?,
        other => (other.build()?, other),
    };
    debug_assert_eq!(coloring.order(), order);
    let cert = check_certificate(coloring, n, s);
    match cert.verdict {
        Verdict::Pass => Ok((cert.coloring, recipe)),
        Verdict::Fail(star) => Err(Error::ConstructionFailed(format!(
            "{recipe} on K_{order} does not certify R_{{{s},{t}}}(K_1,{n}) = {}: vertex {} has a K_1,{n} on colors {:?}",
            verdict.value,
            star.vertex.index(),
            star.colors
        ))),
    }
}

/// `witness_coloring` packaged as a checked certificate.
pub fn witness_certificate(n: usize, t: usize, s: usize) -> Result<Certificate> {
    let (coloring, recipe) = witness_coloring(n, t, s)?;
    let mut cert = check_certificate(coloring, n, s);
    cert.recipe = Some(recipe);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{min_star_colors, StarColors};

    fn assert_rows(c: &EdgeColoring, expected: &[usize]) {
        for row in c.profile().rows() {
            assert_eq!(row, expected);
        }
    }

    #[test]
    fn equal_classes_examples() {
        assert_rows(&equal_classes_coloring(2, 2).unwrap(), &[2, 2]);
        assert_rows(&equal_classes_coloring(3, 2).unwrap(), &[2, 2, 2]);
        assert!(matches!(
            equal_classes_coloring(2, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            equal_classes_coloring(1, 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn equal_classes_layout_mirrors_classes() {
        for t in 2..=6 {
            for q in [2, 4, 6] {
                let layout = ClassLayout::equal_classes(t, q);
                assert_eq!(layout.singletons.len() + t * q, layout.x);
                for i in 0..q {
                    for j in 0..t {
                        let a = layout.classes[i][j].index();
                        let b = layout.classes[q - 1 - i][j].index();
                        assert_eq!((a + b) % layout.x, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn floor_classes_examples() {
        let c = floor_classes_coloring(3, 1, 2).unwrap();
        assert_eq!(c.order(), 5);
        for row in c.profile().rows() {
            assert!(row.iter().all(|&d| d >= 1), "{row:?}");
        }
        let c = floor_classes_coloring(4, 2, 3).unwrap();
        assert_eq!(c.order(), 11);
        for row in c.profile().rows() {
            assert!(row.iter().all(|&d| d >= 2), "{row:?}");
        }
        assert!(matches!(
            floor_classes_coloring(3, 1, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            floor_classes_coloring(4, 1, 4),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            floor_classes_coloring(3, 2, 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn partitioned_examples() {
        assert_rows(
            &partitioned_factorization_coloring(6, &[2, 3]).unwrap(),
            &[2, 3],
        );
        assert_rows(
            &partitioned_factorization_coloring(4, &[1, 1, 1]).unwrap(),
            &[1, 1, 1],
        );
        assert!(matches!(
            partitioned_factorization_coloring(6, &[2, 2]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(partitioned_factorization_coloring(5, &[2, 2]).is_err());
        assert_rows(
            &partitioned_factorization_coloring(6, &[0, 5, 0]).unwrap(),
            &[0, 5, 0],
        );
    }

    #[test]
    fn three_classes_examples() {
        assert_rows(&three_classes_coloring(2).unwrap(), &[1, 1, 1]);
        assert_rows(&three_classes_coloring(3).unwrap(), &[2, 2, 2]);
        assert_rows(&three_classes_coloring(4).unwrap(), &[3, 3, 3]);
        assert!(three_classes_coloring(1).is_err());
    }

    #[test]
    fn three_classes_odd_colors_follow_circular_distance() {
        // 3n-2 odd means n odd
        for n in (3..=15).step_by(2) {
            let p = 3 * n - 2;
            let c = three_classes_coloring(n).unwrap();
            for (e, color) in c.edges() {
                let diff = e.v().index() - e.u().index();
                let d = diff.min(p - diff);
                // an edge at circular distance d is edge k of its matching,
                // where d = 2k or d = p - 2k
                let k = if d % 2 == 0 { d / 2 } else { (p - d) / 2 };
                assert_eq!(color as usize, (k - 1) % 3 + 1, "edge {e} in K_{p}");
            }
        }
    }

    #[test]
    fn trivial_cycle_is_total() {
        for p in 0..12 {
            let c = trivial_cycle_coloring(p, 3).unwrap();
            assert_eq!(c.order(), p);
        }
    }

    #[test]
    fn witness_examples() {
        let (c, recipe) = witness_coloring(3, 3, 1).unwrap();
        assert_eq!(c.order(), 7);
        assert_eq!(recipe.tag(), RecipeTag::ThreeClasses);
        assert!(min_star_colors(&c, 3) >= StarColors::Colors(2));

        let (c, recipe) = witness_coloring(5, 4, 2).unwrap();
        assert_eq!(c.order(), 9);
        assert_eq!(recipe, WitnessRecipe::EqualClasses { t: 4, q: 2 });
        assert!(min_star_colors(&c, 5) >= StarColors::Colors(3));

        let (c, recipe) = witness_coloring(4, 2, 1).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(recipe.tag(), RecipeTag::PartitionedFactorization);
        assert_eq!(min_star_colors(&c, 4), StarColors::Colors(2));
    }

    #[test]
    fn witness_for_single_edge_star() {
        let (c, recipe) = witness_coloring(1, 4, 3).unwrap();
        assert_eq!(c.order(), 1);
        assert_eq!(recipe.tag(), RecipeTag::TrivialCycle);
    }

    #[test]
    fn recipe_build_round_trip() {
        let (c, recipe) = witness_coloring(6, 5, 4).unwrap();
        assert_eq!(recipe.build().unwrap(), c);
        assert_eq!(recipe.order(), c.order());
    }
}
