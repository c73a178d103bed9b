//! Checking colorings and lower-bound certificates.
//!
//! A coloring of `K_p` shows `R_{s,t}(K_{1,n}) > p` when every `n`-edge star
//! sees at least `s + 1` colors. At a single vertex the fewest colors an
//! `n`-star can use is found by taking color classes largest first until
//! they cover `n` edges; the graph-wide minimum is the minimum over vertices.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::WitnessRecipe;
use crate::graph::{edge_count, edge_index, Color, EdgeColoring, VertexId};

/// One `u v c` line of a coloring as read from outside, before validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawEntry {
    pub u: usize,
    pub v: usize,
    pub color: usize,
    /// Source line, when the entry came from a file.
    pub line: Option<usize>,
}

/// An unvalidated coloring: header values plus whatever entries were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawColoring {
    pub order: usize,
    pub num_colors: usize,
    pub entries: Vec<RawEntry>,
}

impl From<&EdgeColoring> for RawColoring {
    fn from(c: &EdgeColoring) -> Self {
        RawColoring {
            order: c.order(),
            num_colors: c.num_colors() as usize,
            entries: c
                .edges()
                .map(|(e, col)| RawEntry {
                    u: e.u().index(),
                    v: e.v().index(),
                    color: col as usize,
                    line: None,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    NoColors,
    TooManyColors {
        num_colors: usize,
    },
    MissingEdge {
        u: usize,
        v: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
        line: Option<usize>,
    },
    VertexOutOfRange {
        u: usize,
        v: usize,
        line: Option<usize>,
    },
    NotCanonical {
        u: usize,
        v: usize,
        line: Option<usize>,
    },
    ColorOutOfRange {
        u: usize,
        v: usize,
        color: usize,
        line: Option<usize>,
    },
}

impl Defect {
    pub fn line(&self) -> Option<usize> {
        match *self {
            Defect::DuplicateEdge { line, .. }
            | Defect::VertexOutOfRange { line, .. }
            | Defect::NotCanonical { line, .. }
            | Defect::ColorOutOfRange { line, .. } => line,
            _ => None,
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line() {
            write!(f, "line {line}: ")?;
        }
        match self {
            Defect::NoColors => write!(f, "color count must be at least 1"),
            Defect::TooManyColors { num_colors } => {
                write!(f, "color count {num_colors} exceeds {}", Color::MAX)
            }
            Defect::MissingEdge { u, v } => write!(f, "missing edge {{{u},{v}}}"),
            Defect::DuplicateEdge { u, v, .. } => write!(f, "duplicate edge {{{u},{v}}}"),
            Defect::VertexOutOfRange { u, v, .. } => {
                write!(f, "vertex out of range in edge {{{u},{v}}}")
            }
            Defect::NotCanonical { u, v, .. } => {
                write!(f, "edge {{{u},{v}}} must be written with u < v")
            }
            Defect::ColorOutOfRange { u, v, color, .. } => {
                write!(f, "color out of range: {color} on edge {{{u},{v}}}")
            }
        }
    }
}

/// Checks that every edge of `K_p` appears exactly once with a color in `1..=t`.
pub fn validate(raw: &RawColoring) -> Result<EdgeColoring, Vec<Defect>> {
    let mut defects = Vec::new();
    if raw.num_colors == 0 {
        defects.push(Defect::NoColors);
    } else if raw.num_colors > Color::MAX as usize {
        defects.push(Defect::TooManyColors {
            num_colors: raw.num_colors,
        });
    }
    let p = raw.order;
    let mut slots: Vec<Option<Color>> = vec![None; edge_count(p)];
    for e in &raw.entries {
        let (u, v, line) = (e.u, e.v, e.line);
        if u == 0 || v == 0 || u > p || v > p || u == v {
            defects.push(Defect::VertexOutOfRange { u, v, line });
            continue;
        }
        if u > v {
            defects.push(Defect::NotCanonical { u, v, line });
            continue;
        }
        if e.color == 0 || e.color > raw.num_colors {
            defects.push(Defect::ColorOutOfRange {
                u,
                v,
                color: e.color,
                line,
            });
        }
        let slot = &mut slots[edge_index(p, u, v)];
        if slot.is_some() {
            defects.push(Defect::DuplicateEdge { u, v, line });
        } else {
            *slot = Some(e.color.min(Color::MAX as usize) as Color);
        }
    }
    for (i, (u, v)) in (1..=p)
        .flat_map(|u| ((u + 1)..=p).map(move |v| (u, v)))
        .enumerate()
    {
        if slots[i].is_none() {
            defects.push(Defect::MissingEdge { u, v });
        }
    }
    if !defects.is_empty() {
        return Err(defects);
    }
    let colors = slots.into_iter().map(|c| c.unwrap_or(0)).collect();
    EdgeColoring::from_colors(p, raw.num_colors as Color, colors)
        .map_err(|_| vec![Defect::NoColors])
}

/// Fewest colors over all `n`-edge stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StarColors {
    Colors(usize),
    /// Every vertex has degree below `n`, so the graph has no `n`-star.
    NoStar,
}

impl StarColors {
    /// True when no `n`-star uses `s` colors or fewer.
    pub fn exceeds(self, s: usize) -> bool {
        match self {
            StarColors::Colors(k) => k > s,
            StarColors::NoStar => true,
        }
    }
}

impl fmt::Display for StarColors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarColors::Colors(k) => write!(f, "{k}"),
            StarColors::NoStar => write!(f, "no-star"),
        }
    }
}

/// Least `k` such that the `k` largest entries of `degrees` sum to at least `n`.
pub fn star_colors_at(degrees: &[usize], n: usize) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut covered = 0;
    for (k, d) in sorted.into_iter().enumerate() {
        if d == 0 {
            break;
        }
        covered += d;
        if covered >= n {
            return Some(k + 1);
        }
    }
    None
}

pub fn min_star_colors(c: &EdgeColoring, n: usize) -> StarColors {
    c.profile()
        .rows()
        .filter_map(|row| star_colors_at(row, n))
        .min()
        .map_or(StarColors::NoStar, StarColors::Colors)
}

/// A vertex together with at most `s` colors that cover `n` of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowColorStar {
    pub vertex: VertexId,
    pub colors: Vec<Color>,
}

/// Finds an `n`-star using at most `s` colors, reporting the first such vertex
/// with the smallest color set the greedy picks.
pub fn find_low_color_star(c: &EdgeColoring, n: usize, s: usize) -> Option<LowColorStar> {
    let prof = c.profile();
    let found = prof.rows().enumerate().find_map(|(i, row)| {
        let k = star_colors_at(row, n)?;
        if k > s {
            return None;
        }
        let mut order: Vec<usize> = (0..row.len()).collect();
        order.sort_by(|&a, &b| row[b].cmp(&row[a]).then(a.cmp(&b)));
        let mut colors: Vec<Color> = order[..k].iter().map(|&c| (c + 1) as Color).collect();
        colors.sort_unstable();
        Some(LowColorStar {
            vertex: VertexId::raw(i + 1),
            colors,
        })
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(LowColorStar),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// A coloring offered as proof that `R_{s,t}(K_{1,n}) > p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coloring: EdgeColoring,
    pub n: usize,
    pub s: usize,
    pub min_star_colors: StarColors,
    pub verdict: Verdict,
    pub recipe: Option<WitnessRecipe>,
}

impl Certificate {
    pub fn claim(&self) -> String {
        format!(
            "every K_1,{} in this {}-coloring of K_{} uses more than {} colors",
            self.n,
            self.coloring.num_colors(),
            self.coloring.order(),
            self.s
        )
    }
}

pub fn check_certificate(coloring: EdgeColoring, n: usize, s: usize) -> Certificate {
    let msc = min_star_colors(&coloring, n);
    let verdict = match find_low_color_star(&coloring, n, s) {
        None => Verdict::Pass,
        Some(star) => Verdict::Fail(star),
    };
    debug_assert_eq!(verdict.passed(), msc.exceeds(s));
    Certificate {
        coloring,
        n,
        s,
        min_star_colors: msc,
        verdict,
        recipe: None,
    }
}

/// Validates a raw coloring and then checks it as a certificate.
pub fn check_raw_certificate(
    raw: &RawColoring,
    n: usize,
    s: usize,
) -> Result<Certificate, Vec<Defect>> {
    validate(raw).map(|c| check_certificate(c, n, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleOutcome {
    /// Every sampled coloring had an `n`-star with at most `s` colors.
    Pass { trials: u64 },
    /// A sampled coloring with no such star, proving `R > p`.
    Counterexample { trial: u64, coloring: EdgeColoring },
}

impl SampleOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, SampleOutcome::Pass { .. })
    }
}

/// Uniform random `t`-coloring of `K_p` for one trial of a seeded run.
pub fn sample_coloring(p: usize, t: Color, seed: u64, trial: u64) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let colors = (0..edge_count(p)).map(|_| rng.gen_range(1..=t)).collect();
    EdgeColoring::from_colors(p, t, colors).expect("sampled colors are in range")
}

/// Draws `trials` random colorings of `K_p` and looks for one without an
/// `n`-star on at most `s` colors. Trial `i` uses stream `i` of a ChaCha
/// generator keyed by `seed`, so the outcome (including which
/// counterexample is reported, the lowest failing trial) does not depend
/// on thread count.
pub fn sample_upper_check(
    p: usize,
    n: usize,
    t: Color,
    s: usize,
    trials: u64,
    seed: u64,
) -> SampleOutcome {
    let found = (0..trials).into_par_iter().find_first(|&trial| {
        let c = sample_coloring(p, t, seed, trial);
        find_low_color_star(&c, n, s).is_none()
    });
    match found {
        None => SampleOutcome::Pass { trials },
        Some(trial) => SampleOutcome::Counterexample {
            trial,
            coloring: sample_coloring(p, t, seed, trial),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::one_factorization;

    fn proper_k4() -> EdgeColoring {
        let f = one_factorization(4).unwrap();
        EdgeColoring::from_fn(4, 3, |e| {
            f.iter().position(|m| m.contains(&e)).unwrap() as Color + 1
        })
        .unwrap()
    }

    #[test]
    fn validate_reports_defects() {
        let good = RawColoring::from(&proper_k4());
        assert!(validate(&good).is_ok());

        let mut missing = good.clone();
        missing.entries.retain(|e| !(e.u == 1 && e.v == 3));
        let d = validate(&missing).unwrap_err();
        assert_eq!(d, vec![Defect::MissingEdge { u: 1, v: 3 }]);
        assert_eq!(d[0].to_string(), "missing edge {1,3}");

        let mut bad_color = good.clone();
        bad_color.num_colors = 4;
        bad_color.entries[0].color = 5;
        let d = validate(&bad_color).unwrap_err();
        assert!(matches!(d[0], Defect::ColorOutOfRange { color: 5, .. }));
        assert!(d[0].to_string().starts_with("color out of range"));

        let mut dup = good.clone();
        dup.entries.push(dup.entries[2]);
        assert!(matches!(
            validate(&dup).unwrap_err()[0],
            Defect::DuplicateEdge { u: 1, v: 4, .. }
        ));
    }

    #[test]
    fn star_colors_examples() {
        let mono = EdgeColoring::monochromatic(5, 2, 1).unwrap();
        assert_eq!(min_star_colors(&mono, 3), StarColors::Colors(1));
        assert_eq!(min_star_colors(&proper_k4(), 3), StarColors::Colors(3));
        let k3 = EdgeColoring::monochromatic(3, 2, 2).unwrap();
        assert_eq!(min_star_colors(&k3, 3), StarColors::NoStar);
        assert!(StarColors::NoStar.exceeds(100));
    }

    #[test]
    fn certificate_verdicts() {
        let mono = EdgeColoring::monochromatic(7, 3, 1).unwrap();
        let cert = check_certificate(mono, 3, 1);
        match cert.verdict {
            Verdict::Fail(star) => {
                assert_eq!(star.vertex.index(), 1);
                assert_eq!(star.colors, vec![1]);
            }
            Verdict::Pass => panic!("monochromatic K_7 cannot pass"),
        }
        assert!(check_certificate(proper_k4(), 3, 2).verdict.passed());
        assert!(!check_certificate(proper_k4(), 3, 3).verdict.passed());
    }

    #[test]
    fn sampling_small_cases() {
        assert!(sample_upper_check(3, 2, 2, 1, 200, 7).passed());
        match sample_upper_check(4, 2, 3, 1, 20_000, 1) {
            SampleOutcome::Counterexample { coloring, .. } => {
                // only proper 3-edge-colorings of K_4 avoid a monochromatic 2-star
                for row in coloring.profile().rows() {
                    assert_eq!(row, &[1, 1, 1]);
                }
            }
            SampleOutcome::Pass { .. } => panic!("expected a proper coloring among samples"),
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = sample_coloring(6, 3, 42, 9);
        let b = sample_coloring(6, 3, 42, 9);
        assert_eq!(a, b);
        assert_ne!(a, sample_coloring(6, 3, 42, 10));
    }
}
