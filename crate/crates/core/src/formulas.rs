//! Closed forms for `R_{t-1,t}(K_{1,n})` and `R_{t-2,t}(K_{1,n})`, and the
//! general bounds for `R_{t-l,t}(K_{1,n})`.
//!
//! Every bracket is a floor. Fractional thresholds such as
//! `t > (2q + 2r + 7) / 3` are compared by cross-multiplying, never in
//! floating point.

use std::fmt;

use crate::constructions::{plan_witness, witness_coloring, WitnessRecipe};
use crate::error::{invalid, Error, Result};
use crate::graph::EdgeColoring;

/// A request for `R_{s,t}(K_{1,n})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Query {
    pub n: usize,
    pub t: usize,
    pub s: usize,
}

impl Query {
    pub fn new(n: usize, t: usize, s: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("star size n must be at least 1"));
        }
        if t < 2 {
            return Err(invalid(format!("need t >= 2 colors, got {t}")));
        }
        if s == 0 || s >= t {
            return Err(invalid(format!("need 1 <= s < t, got s={s}, t={t}")));
        }
        Ok(Query { n, t, s })
    }

    /// Number of colors a star must avoid, `t - s`.
    pub fn l(&self) -> usize {
        self.t - self.s
    }
}

/// Intermediate quantities of the case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseData {
    pub x: i64,
    pub q: i64,
    pub r: i64,
    pub t_prime: i64,
    /// Lower-bound quantity `y = [(t(n-l+1) - l)/(t-l)]`.
    pub y: i64,
    /// 1 when `y` is odd.
    pub epsilon: i64,
}

/// Lettered condition of one of the three `s = t-2` characterisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Clause::A => 'a',
            Clause::B => 'b',
            Clause::C => 'c',
            Clause::D => 'd',
            Clause::E => 'e',
        };
        write!(f, "{c}")
    }
}

/// Which case fixed the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `n = 1`: one edge, one color.
    Trivial,
    /// `s = t-1`, `x` even.
    EvenX,
    /// `s = t-1`, `x = tq+1` with `q` odd: value `x`.
    OddCase1,
    /// `s = t-1`, `x = tq+1` with `q` even: value `x+1`.
    OddCase2,
    /// `s = t-1`, `x = tq+r` with `2 <= r <= t-1`: value `x+1`.
    OddCase3,
    /// `s = 1`, `t = 3`: value `3n-1`.
    ThreeColors,
    ValueXPlus1(Clause),
    ValueX(Clause),
    ValueXMinus1(Clause),
    /// No clause holds: value `x-2`.
    ValueXMinus2,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Trivial => write!(f, "trivial"),
            CaseTag::EvenX => write!(f, "t-1/x-even"),
            CaseTag::OddCase1 => write!(f, "t-1/case-1"),
            CaseTag::OddCase2 => write!(f, "t-1/case-2"),
            CaseTag::OddCase3 => write!(f, "t-1/case-3"),
            CaseTag::ThreeColors => write!(f, "t-2/three-colors"),
            CaseTag::ValueXPlus1(c) => write!(f, "t-2/x+1/{c}"),
            CaseTag::ValueX(c) => write!(f, "t-2/x/{c}"),
            CaseTag::ValueXMinus1(c) => write!(f, "t-2/x-1/{c}"),
            CaseTag::ValueXMinus2 => write!(f, "t-2/x-2/none"),
        }
    }
}

/// Whether the lower-bound witness was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessStatus {
    NotBuilt,
    Verified(EdgeColoring),
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseVerdict {
    pub query: Query,
    pub value: usize,
    pub tag: CaseTag,
    /// Absent for the trivial and three-color shortcuts.
    pub data: Option<CaseData>,
    pub recipe: WitnessRecipe,
    pub witness: WitnessStatus,
}

/// General bounds `lower <= R_{t-l,t}(K_{1,n}) <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsInterval {
    pub lower: i64,
    pub upper: i64,
    pub t_prime: i64,
    pub y: i64,
    pub epsilon: i64,
}

impl BoundsInterval {
    pub fn contains(&self, value: i64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// `y = [(t(n-l+1) - l)/(t-l)]` and its parity flag.
fn lower_quantities(n: i64, t: i64, l: i64) -> (i64, i64) {
    let y = (t * (n - l + 1) - l).div_euclid(t - l);
    (y, y.rem_euclid(2))
}

/// Upper bound from the Turan count and lower bound from a partitioned
/// 1-factorization, for `t' = [t/l] >= 2`.
pub fn general_bounds(n: usize, t: usize, l: usize) -> Result<BoundsInterval> {
    if n < 2 {
        return Err(invalid(format!("bounds need n >= 2, got {n}")));
    }
    if l == 0 || l >= t {
        return Err(invalid(format!("need 1 <= l < t, got l={l}, t={t}")));
    }
    let (n, t, l) = (n as i64, t as i64, l as i64);
    let tp = t / l;
    if tp < 2 {
        return Err(Error::Unsupported(format!(
            "t' = [t/l] = {tp}; the upper bound needs t' >= 2"
        )));
    }
    // smallest p with p > (t'n - 1)/(t' - 1)
    let upper = (tp * n - 1).div_euclid(tp - 1) + 1;
    let (y, epsilon) = lower_quantities(n, t, l);
    Ok(BoundsInterval {
        lower: y - epsilon + 1,
        upper,
        t_prime: tp,
        y,
        epsilon,
    })
}

/// `x - l - 2q < n` rewritten in terms of `t`, `q`, `r`:
/// `t > (2r+4)/l` for even `t`, `t > 1 + (2q+2r+4)/l` for odd `t`.
pub fn threshold_predicate(l: u64, t: u64, q: u64, r: u64) -> bool {
    if t.is_multiple_of(2) {
        t * l > 2 * r + 4
    } else {
        (t - 1) * l > 2 * q + 2 * r + 4
    }
}

fn check_t_minus_1(n: usize, t: usize) -> Result<()> {
    if t < 2 {
        return Err(invalid(format!("s = t-1 needs t >= 2, got {t}")));
    }
    if n == 0 {
        return Err(invalid("star size n must be at least 1"));
    }
    Ok(())
}

fn check_t_minus_2(n: usize, t: usize) -> Result<()> {
    if t < 3 {
        return Err(invalid(format!("s = t-2 needs t >= 3, got {t}")));
    }
    if n == 0 {
        return Err(invalid("star size n must be at least 1"));
    }
    Ok(())
}

fn verdict(query: Query, value: i64, tag: CaseTag, data: Option<CaseData>) -> CaseVerdict {
    let value = value as usize;
    CaseVerdict {
        query,
        value,
        tag,
        data,
        recipe: plan_witness(query.n, query.t, query.s, value - 1),
        witness: WitnessStatus::NotBuilt,
    }
}

fn classify_t_minus_1(n: usize, t: usize) -> CaseVerdict {
    let query = Query { n, t, s: t - 1 };
    if n == 1 {
        return verdict(query, 2, CaseTag::Trivial, None);
    }
    let (ni, ti) = (n as i64, t as i64);
    let x = (ni * ti - 1) / (ti - 1);
    let (q, r) = (x / ti, x % ti);
    let (y, epsilon) = lower_quantities(ni, ti, 1);
    let data = CaseData {
        x,
        q,
        r,
        t_prime: ti,
        y,
        epsilon,
    };
    debug_assert_eq!(ni, x - q);
    let (value, tag) = if x % 2 == 0 {
        (x + 1, CaseTag::EvenX)
    } else if r == 1 && q % 2 == 1 {
        (x, CaseTag::OddCase1)
    } else if r == 1 {
        (x + 1, CaseTag::OddCase2)
    } else {
        (x + 1, CaseTag::OddCase3)
    };
    verdict(query, value, tag, Some(data))
}

/// Quantities for `s = t-2`, `t >= 4`: `t' = [t/2]`, `x = [(nt'-1)/(t'-1)]`,
/// `x - 2 = tq + r`.
pub fn case_data_t_minus_2(n: usize, t: usize) -> CaseData {
    let (ni, ti) = (n as i64, t as i64);
    let tp = ti / 2;
    let x = (ni * tp - 1).div_euclid(tp - 1);
    let (q, r) = ((x - 2).div_euclid(ti), (x - 2).rem_euclid(ti));
    let (y, epsilon) = lower_quantities(ni, ti, 2);
    CaseData {
        x,
        q,
        r,
        t_prime: tp,
        y,
        epsilon,
    }
}

/// Every clause of the three `s = t-2` characterisations that holds, in
/// evaluation order (`x+1`, then `x`, then `x-1`).
pub fn fired_clauses(data: &CaseData, t: usize) -> Vec<CaseTag> {
    let t = t as i64;
    let CaseData { x, q, r, .. } = *data;
    let x_even = x % 2 == 0;
    let t_even = t % 2 == 0;
    let mut fired = Vec::new();
    let mut push = |cond: bool, tag: CaseTag| {
        if cond {
            fired.push(tag);
        }
    };

    push(
        r == t - 1 && t - 1 > 2 * q + 4 && x_even,
        CaseTag::ValueXPlus1(Clause::A),
    );
    push(
        r == t - 1 && t - 1 > 2 * q + 4 && !x_even && !t_even,
        CaseTag::ValueXPlus1(Clause::B),
    );
    push(
        r == t - 1 && !x_even && t_even && (q + 1) % 2 == 0,
        CaseTag::ValueXPlus1(Clause::C),
    );
    push(
        r < t - 2 && t > 2 * r + 4 && t_even,
        CaseTag::ValueXPlus1(Clause::D),
    );
    push(
        r < t - 2 && t > 2 * q + 2 * r + 5 && !t_even,
        CaseTag::ValueXPlus1(Clause::E),
    );

    push(
        r == t - 1 && !x_even && (q + 1) % 2 == 1,
        CaseTag::ValueX(Clause::A),
    );
    push(
        r < t - 2 && t <= 2 * r + 4 && t_even,
        CaseTag::ValueX(Clause::B),
    );
    push(
        r < t - 2 && q + r + 3 < t && t <= 2 * q + 2 * r + 5 && !t_even,
        CaseTag::ValueX(Clause::C),
    );

    // (2q+9)/3 < t  <=>  3t > 2q+9
    let r_is_one = r == 1 && 3 * t > 2 * q + 9 && t <= q + 4 && !t_even;
    push(r_is_one && x_even, CaseTag::ValueXMinus1(Clause::A));
    push(r_is_one && !x_even, CaseTag::ValueXMinus1(Clause::B));
    push(
        1 < r && r < t - 2 && 3 * t > 2 * q + 2 * r + 7 && t <= q + r + 3 && !t_even,
        CaseTag::ValueXMinus1(Clause::C),
    );
    push(
        r == t - 2 && (t_even || 3 * t > 2 * q + 2 * r + 7),
        CaseTag::ValueXMinus1(Clause::D),
    );
    fired
}

fn classify_t_minus_2(n: usize, t: usize) -> CaseVerdict {
    let query = Query { n, t, s: t - 2 };
    if n == 1 {
        return verdict(query, 2, CaseTag::Trivial, None);
    }
    if t == 3 {
        return verdict(query, 3 * n as i64 - 1, CaseTag::ThreeColors, None);
    }
    let data = case_data_t_minus_2(n, t);
    let fired = fired_clauses(&data, t);
    debug_assert!(
        fired.len() <= 1,
        "clauses {fired:?} all hold for n={n}, t={t}"
    );
    let (value, tag) = match fired.first() {
        Some(&tag @ CaseTag::ValueXPlus1(_)) => (data.x + 1, tag),
        Some(&tag @ CaseTag::ValueX(_)) => (data.x, tag),
        Some(&tag @ CaseTag::ValueXMinus1(_)) => (data.x - 1, tag),
        _ => (data.x - 2, CaseTag::ValueXMinus2),
    };
    verdict(query, value, tag, Some(data))
}

fn attach_witness(mut v: CaseVerdict) -> CaseVerdict {
    v.witness = match witness_coloring(v.query.n, v.query.t, v.query.s) {
        Ok((coloring, recipe)) => {
            v.recipe = recipe;
            WitnessStatus::Verified(coloring)
        }
        Err(e) => WitnessStatus::Failed(e.to_string()),
    };
    v
}

/// Exact `R_{t-1,t}(K_{1,n})` with a verified lower-bound witness attached.
pub fn ramsey_star_s_eq_t_minus_1(n: usize, t: usize) -> Result<CaseVerdict> {
    check_t_minus_1(n, t)?;
    Ok(attach_witness(classify_t_minus_1(n, t)))
}

/// Exact `R_{t-2,t}(K_{1,n})` with a verified lower-bound witness attached.
pub fn ramsey_star_s_eq_t_minus_2(n: usize, t: usize) -> Result<CaseVerdict> {
    check_t_minus_2(n, t)?;
    Ok(attach_witness(classify_t_minus_2(n, t)))
}

/// The classifier alone: value, case and planned recipe, no coloring built.
pub fn classify_only(n: usize, t: usize, s: usize) -> Result<CaseVerdict> {
    let query = Query::new(n, t, s)?;
    match query.l() {
        1 => {
            check_t_minus_1(n, t)?;
            Ok(classify_t_minus_1(n, t))
        }
        2 => {
            check_t_minus_2(n, t)?;
            Ok(classify_t_minus_2(n, t))
        }
        l => Err(Error::Unsupported(format!(
            "exact values only for s = t-1 or s = t-2 (got l = {l}); use the general bounds"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_examples() {
        let b = general_bounds(5, 4, 2).unwrap();
        assert_eq!((b.lower, b.upper), (7, 10));
        let b = general_bounds(4, 2, 1).unwrap();
        assert_eq!((b.y, b.epsilon, b.lower, b.upper), (7, 1, 7, 8));
        let b = general_bounds(2, 4, 1).unwrap();
        assert!(b.contains(3));
        assert!(matches!(
            general_bounds(3, 3, 2),
            Err(Error::Unsupported(_))
        ));
        assert!(general_bounds(1, 3, 1).is_err());
        assert!(general_bounds(3, 3, 3).is_err());
    }

    #[test]
    fn threshold_examples() {
        for q in 0..10 {
            assert!(threshold_predicate(2, 4, q, 1));
        }
        assert!(!threshold_predicate(3, 5, 0, 4));
        assert!(!threshold_predicate(1, 2, 3, 1));
    }

    #[test]
    fn t_minus_1_examples() {
        assert_eq!(classify_only(4, 2, 1).unwrap().value, 7);
        assert_eq!(classify_only(4, 2, 1).unwrap().tag, CaseTag::OddCase1);
        let v = classify_only(3, 3, 2).unwrap();
        assert_eq!((v.value, v.tag), (5, CaseTag::EvenX));
        assert_eq!(classify_only(2, 2, 1).unwrap().value, 3);
        let v = classify_only(1, 5, 4).unwrap();
        assert_eq!((v.value, v.tag), (2, CaseTag::Trivial));
    }

    #[test]
    fn t_minus_2_examples() {
        let v = classify_only(3, 3, 1).unwrap();
        assert_eq!((v.value, v.tag), (8, CaseTag::ThreeColors));

        let v = classify_only(3, 4, 2).unwrap();
        let d = v.data.unwrap();
        assert_eq!((d.x, d.q, d.r), (5, 0, 3));
        assert_eq!((v.value, v.tag), (5, CaseTag::ValueX(Clause::A)));

        let v = classify_only(3, 5, 3).unwrap();
        let d = v.data.unwrap();
        assert_eq!((d.x, d.q, d.r), (5, 0, 3));
        assert_eq!((v.value, v.tag), (4, CaseTag::ValueXMinus1(Clause::D)));

        let v = classify_only(5, 4, 2).unwrap();
        let d = v.data.unwrap();
        assert_eq!((d.x, d.q, d.r), (9, 1, 3));
        assert_eq!((v.value, v.tag), (10, CaseTag::ValueXPlus1(Clause::C)));

        let v = classify_only(2, 4, 2).unwrap();
        assert_eq!((v.value, v.tag), (3, CaseTag::ValueX(Clause::B)));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(classify_only(3, 4, 1), Err(Error::Unsupported(_))));
        assert!(classify_only(3, 4, 4).is_err());
        assert!(classify_only(0, 4, 3).is_err());
        assert!(ramsey_star_s_eq_t_minus_1(3, 1).is_err());
        assert!(ramsey_star_s_eq_t_minus_2(3, 2).is_err());
    }

    #[test]
    fn full_classifier_attaches_witness() {
        let v = ramsey_star_s_eq_t_minus_2(5, 4).unwrap();
        match &v.witness {
            WitnessStatus::Verified(c) => assert_eq!(c.order(), 9),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(v.recipe, WitnessRecipe::EqualClasses { t: 4, q: 2 });
    }
}
