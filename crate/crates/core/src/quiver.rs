//! Finite model of a line-type continuum quiver.
//!
//! A [`Grid`] of rational breakpoints discretizes the line; generators of every
//! algebra in this crate are indexed by grid-aligned half-open [`Interval`]s.
//! This module provides the partial operations on intervals (concatenation
//! `⊕`, one-sided difference `⊖`, strict union and strict intersection), the
//! Euler forms, the scalar coefficient functions `p`, `c±`, `b`, `r`, `s±`
//! derived from them, the set `S_X` of pairs subject to same-sign relations,
//! and the ordered decompositions `α = β ⊕ γ`.
//!
//! Undefined partial operations are returned as `None`; they are data, not
//! errors.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffring::{parse_rat, Rat};
use crate::error::{Error, Result};

/// Maximal number of grid cells supported by the compact word encoding.
pub const MAX_CELLS: usize = 8;

/// Half-open interval `[lo, hi)` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    /// Creates `[lo, hi)`; requires `lo < hi`.
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Config(format!("empty interval [{lo},{hi})")));
        }
        Ok(Interval { lo, hi })
    }

    /// Convenience constructor from integers.
    pub fn int(lo: i64, hi: i64) -> Self {
        Interval::new(Rat::from_integer(lo as i128), Rat::from_integer(hi as i128))
            .expect("integer interval must satisfy lo < hi")
    }

    /// `true` when `other ⊆ self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `true` when the two intervals share at least one point.
    pub fn meets(&self, other: &Interval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    /// `true` when the intervals share an endpoint but no point.
    pub fn adjacent(&self, other: &Interval) -> bool {
        self.hi == other.lo || other.hi == self.lo
    }

    /// `true` when the intervals intersect and neither contains the other.
    pub fn properly_overlaps(&self, other: &Interval) -> bool {
        self.meets(other) && !self.contains(other) && !other.contains(self)
    }

    /// `true` when one interval strictly contains the other.
    pub fn nested(&self, other: &Interval) -> bool {
        self != other && (self.contains(other) || other.contains(self))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

/// Concatenation `α ⊕ β`: defined iff the intervals are adjacent.
pub fn osum(a: &Interval, b: &Interval) -> Option<Interval> {
    if a.hi == b.lo {
        Some(Interval { lo: a.lo, hi: b.hi })
    } else if b.hi == a.lo {
        Some(Interval { lo: b.lo, hi: a.hi })
    } else {
        None
    }
}

/// Difference `α ⊖ β`: defined iff `β ⊊ α` shares exactly one endpoint with `α`.
pub fn odiff(a: &Interval, b: &Interval) -> Option<Interval> {
    if a == b || !a.contains(b) {
        return None;
    }
    if a.lo == b.lo {
        Some(Interval { lo: b.hi, hi: a.hi })
    } else if a.hi == b.hi {
        Some(Interval { lo: a.lo, hi: b.lo })
    } else {
        None
    }
}

/// Strict union: defined for properly overlapping or adjacent pairs.
pub fn strict_union(a: &Interval, b: &Interval) -> Option<Interval> {
    if a.properly_overlaps(b) || a.adjacent(b) {
        Some(Interval { lo: a.lo.min(b.lo), hi: a.hi.max(b.hi) })
    } else {
        None
    }
}

/// Strict intersection: defined for properly overlapping pairs only.
pub fn strict_intersection(a: &Interval, b: &Interval) -> Option<Interval> {
    if a.properly_overlaps(b) {
        Some(Interval { lo: a.lo.max(b.lo), hi: a.hi.min(b.hi) })
    } else {
        None
    }
}

/// Choice of the non-symmetric Euler form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum EulerVariant {
    /// `⟨[a,b),[c,d)⟩ = 1(a < d ≤ b) − 1(a < c ≤ b)`: the equioriented line.
    #[default]
    Equioriented,
    /// The transpose of the equioriented form (reversed orientation).
    Opposite,
}

impl EulerVariant {
    /// Parses the identifiers used in configuration files.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "default" | "equioriented" => Ok(EulerVariant::Equioriented),
            "opposite" => Ok(EulerVariant::Opposite),
            other => Err(Error::Config(format!("unknown Euler-form variant `{other}`"))),
        }
    }

    /// Identifier used in reports.
    pub fn name(self) -> &'static str {
        match self {
            EulerVariant::Equioriented => "equioriented",
            EulerVariant::Opposite => "opposite",
        }
    }
}

/// Values of the Euler forms on a pair of intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerData {
    /// Non-symmetric form `⟨α, β⟩`.
    pub nonsym: i64,
    /// Symmetrization `(α|β) = ⟨α,β⟩ + ⟨β,α⟩`.
    pub sym: i64,
}

fn indicator(b: bool) -> i64 {
    i64::from(b)
}

fn euler_raw(a: &Interval, b: &Interval) -> i64 {
    indicator(a.lo < b.hi && b.hi <= a.hi) - indicator(a.lo < b.lo && b.lo <= a.hi)
}

/// The Euler forms of a pair of intervals under the given variant.
pub fn euler(variant: EulerVariant, a: &Interval, b: &Interval) -> EulerData {
    let (ab, ba) = match variant {
        EulerVariant::Equioriented => (euler_raw(a, b), euler_raw(b, a)),
        EulerVariant::Opposite => (euler_raw(b, a), euler_raw(a, b)),
    };
    EulerData { nonsym: ab, sym: ab + ba }
}

/// `p_{αβ} = (−1)^{⟨α,β⟩} (α|β)`.
pub fn p_coeff(variant: EulerVariant, a: &Interval, b: &Interval) -> i64 {
    let e = euler(variant, a, b);
    sign_pow(e.nonsym) * e.sym
}

fn sign_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One row of the coefficient table: every scalar attached to an ordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub p: i64,
    pub cplus: Option<Rat>,
    pub cminus: Option<Rat>,
    pub b: Option<i64>,
    pub r: i64,
    pub splus: Option<Rat>,
    pub sminus: Option<Rat>,
}

/// All coefficients of the ordered pair `(α, β)`.
pub fn coeffs(variant: EulerVariant, a: &Interval, b: &Interval) -> CoeffRow {
    let e = euler(variant, a, b);
    let p = sign_pow(e.nonsym) * e.sym;
    let half = |x: i64| Rat::new(x as i128, 2);
    let cplus = odiff(a, b).map(|d| half(p_coeff(variant, b, &d) - 1));
    let cminus = odiff(b, a).map(|d| half(p_coeff(variant, &d, a) + 1));
    let bval = strict_union(a, b).map(|u| p_coeff(variant, a, &u));
    let r = if a == b { 0 } else { sign_pow(e.nonsym) * e.sym * e.sym };
    let sum = osum(a, b);
    let splus = sum.as_ref().map(|s| half(p_coeff(variant, b, s) + 1));
    let sminus = sum.as_ref().map(|s| half(p_coeff(variant, b, s) - 1));
    CoeffRow { p, cplus, cminus, b: bval, r, splus, sminus }
}

/// Predicate selecting the pairs subject to same-sign relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SerreVariant {
    /// Adjacent pairs, properly overlapping pairs, and orthogonal disjoint
    /// non-adjacent pairs; nested and equal pairs are excluded.
    Conservative,
    /// The conservative set together with all nested (non-equal) pairs.
    #[default]
    WithNested,
}

impl SerreVariant {
    /// Parses the identifiers used in configuration files.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "conservative" => Ok(SerreVariant::Conservative),
            "default" | "with-nested" => Ok(SerreVariant::WithNested),
            other => Err(Error::Config(format!("unknown Serre-pair variant `{other}`"))),
        }
    }

    /// Identifier used in reports.
    pub fn name(self) -> &'static str {
        match self {
            SerreVariant::Conservative => "conservative",
            SerreVariant::WithNested => "with-nested",
        }
    }

    /// Membership of `(α, β)` in `S_X`.
    pub fn contains(self, euler_variant: EulerVariant, a: &Interval, b: &Interval) -> bool {
        if a == b {
            return false;
        }
        let conservative = osum(a, b).is_some()
            || a.properly_overlaps(b)
            || (!a.meets(b) && !a.adjacent(b) && euler(euler_variant, a, b).sym == 0);
        match self {
            SerreVariant::Conservative => conservative,
            SerreVariant::WithNested => conservative || a.nested(b),
        }
    }
}

/// Total order on intervals used to define PBW monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalOrder {
    /// Lexicographic by `(lo, hi)`.
    #[default]
    Lex,
    /// Reverse of the lexicographic order.
    RevLex,
}

impl IntervalOrder {
    /// Parses the identifiers used in configuration files.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "default" | "lex" => Ok(IntervalOrder::Lex),
            "revlex" => Ok(IntervalOrder::RevLex),
            other => Err(Error::Config(format!("unknown interval order `{other}`"))),
        }
    }

    /// Identifier used in reports.
    pub fn name(self) -> &'static str {
        match self {
            IntervalOrder::Lex => "lex",
            IntervalOrder::RevLex => "revlex",
        }
    }
}

/// Strictly increasing finite sequence of rational breakpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Grid {
    breakpoints: Vec<Rat>,
}

impl Grid {
    /// Validates and wraps a breakpoint list.
    pub fn new(breakpoints: Vec<Rat>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Config("a grid needs at least two breakpoints".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("grid breakpoints must be strictly increasing".into()));
        }
        if breakpoints.len() - 1 > MAX_CELLS {
            return Err(Error::Config(format!(
                "grids with more than {} cells are not supported",
                MAX_CELLS
            )));
        }
        Ok(Grid { breakpoints })
    }

    /// Grid `{0, 1, ..., n-1}`.
    pub fn integers(n: usize) -> Result<Self> {
        Grid::new((0..n).map(|i| Rat::from_integer(i as i128)).collect())
    }

    /// Parses a comma-separated list such as `"0,1/2,1"`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let pts = text
            .split(',')
            .map(|s| parse_rat(s.trim()).ok_or_else(|| Error::Config(format!("bad breakpoint `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Grid::new(pts)
    }

    /// The breakpoints.
    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    /// Number of cells (minimal intervals).
    pub fn num_cells(&self) -> usize {
        self.breakpoints.len() - 1
    }

    /// All grid intervals in lexicographic `(lo, hi)` order.
    pub fn intervals(&self) -> Vec<Interval> {
        let n = self.breakpoints.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(Interval { lo: self.breakpoints[i], hi: self.breakpoints[j] });
            }
        }
        out
    }

    /// The minimal intervals, left to right.
    pub fn cells(&self) -> Vec<Interval> {
        self.breakpoints
            .windows(2)
            .map(|w| Interval { lo: w[0], hi: w[1] })
            .collect()
    }

    /// Position of a breakpoint.
    pub fn position(&self, x: &Rat) -> Option<usize> {
        self.breakpoints.binary_search(x).ok()
    }

    /// Checks that both endpoints lie on the grid.
    pub fn check(&self, iv: &Interval) -> Result<()> {
        if self.position(&iv.lo).is_none() || self.position(&iv.hi).is_none() {
            return Err(Error::OffGrid(format!("{iv} is not aligned with the grid")));
        }
        Ok(())
    }

    /// Ordered pairs `(β, γ)` of grid intervals with `β ⊕ γ = α`.
    pub fn decompositions(&self, a: &Interval) -> Vec<(Interval, Interval)> {
        let mut out = Vec::new();
        for x in &self.breakpoints {
            if a.lo < *x && *x < a.hi {
                let left = Interval { lo: a.lo, hi: *x };
                let right = Interval { lo: *x, hi: a.hi };
                out.push((left.clone(), right.clone()));
                out.push((right, left));
            }
        }
        out
    }

    /// Pairs in `S_X` under the given variants.
    pub fn serre_pairs(&self, serre: SerreVariant, euler_variant: EulerVariant) -> Vec<(Interval, Interval)> {
        let ivs = self.intervals();
        let mut out = Vec::new();
        for a in &ivs {
            for b in &ivs {
                if serre.contains(euler_variant, a, b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Breakpoints as canonical strings (the JSON serialization).
    pub fn to_strings(&self) -> Vec<String> {
        self.breakpoints.iter().map(|r| r.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for Grid {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        let pts = v
            .iter()
            .map(|s| parse_rat(s).ok_or_else(|| Error::Config(format!("bad breakpoint `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Grid::new(pts)
    }
}

impl From<Grid> for Vec<String> {
    fn from(g: Grid) -> Self {
        g.to_strings()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(","))
    }
}

/// Compact identifier of a grid interval (its index in lexicographic order).
pub type IvId = u8;

/// Precomputed interval calculus on a fixed grid, indexed by [`IvId`].
///
/// Built once and immutable afterwards; every table lookup is `O(1)`.
#[derive(Clone, Debug)]
pub struct Quiver {
    grid: Grid,
    euler_variant: EulerVariant,
    serre_variant: SerreVariant,
    order: IntervalOrder,
    ivs: Vec<Interval>,
    endpoints: Vec<(usize, usize)>,
    rank: Vec<u16>,
    n: usize,
    nonsym: Vec<i64>,
    sym: Vec<i64>,
    osum: Vec<Option<IvId>>,
    odiff: Vec<Option<IvId>>,
    sunion: Vec<Option<IvId>>,
    sinter: Vec<Option<IvId>>,
    serre: Vec<bool>,
    rows: Vec<CoeffRow>,
    decomps: Vec<Vec<(IvId, IvId)>>,
    cell_ids: Vec<IvId>,
}

impl Quiver {
    /// Builds all tables for a grid and a choice of conventions.
    pub fn new(grid: Grid, euler_variant: EulerVariant, serre_variant: SerreVariant, order: IntervalOrder) -> Self {
        let ivs = grid.intervals();
        let n = ivs.len();
        let endpoints = ivs
            .iter()
            .map(|iv| (grid.position(&iv.lo).unwrap(), grid.position(&iv.hi).unwrap()))
            .collect::<Vec<_>>();
        let rank = (0..n)
            .map(|i| match order {
                IntervalOrder::Lex => i as u16,
                IntervalOrder::RevLex => (n - 1 - i) as u16,
            })
            .collect();
        let find = |iv: Option<Interval>| -> Option<IvId> {
            iv.and_then(|iv| ivs.iter().position(|x| *x == iv).map(|i| i as IvId))
        };
        let mut nonsym = vec![0; n * n];
        let mut sym = vec![0; n * n];
        let mut os = vec![None; n * n];
        let mut od = vec![None; n * n];
        let mut su = vec![None; n * n];
        let mut si = vec![None; n * n];
        let mut serre = vec![false; n * n];
        let mut rows = Vec::with_capacity(n * n);
        for (i, a) in ivs.iter().enumerate() {
            for (j, b) in ivs.iter().enumerate() {
                let k = i * n + j;
                let e = euler(euler_variant, a, b);
                nonsym[k] = e.nonsym;
                sym[k] = e.sym;
                os[k] = find(osum(a, b));
                od[k] = find(odiff(a, b));
                su[k] = find(strict_union(a, b));
                si[k] = find(strict_intersection(a, b));
                serre[k] = serre_variant.contains(euler_variant, a, b);
                rows.push(coeffs(euler_variant, a, b));
            }
        }
        let decomps = ivs
            .iter()
            .map(|a| {
                grid.decompositions(a)
                    .into_iter()
                    .map(|(b, c)| (find(Some(b)).unwrap(), find(Some(c)).unwrap()))
                    .collect()
            })
            .collect();
        let cell_ids = (0..grid.num_cells())
            .map(|k| endpoints.iter().position(|e| *e == (k, k + 1)).unwrap() as IvId)
            .collect();
        Quiver {
            cell_ids,
            grid,
            euler_variant,
            serre_variant,
            order,
            ivs,
            endpoints,
            rank,
            n,
            nonsym,
            sym,
            osum: os,
            odiff: od,
            sunion: su,
            sinter: si,
            serre,
            rows,
            decomps,
        }
    }

    /// Tables with the default conventions.
    pub fn standard(grid: Grid) -> Self {
        Quiver::new(grid, EulerVariant::default(), SerreVariant::default(), IntervalOrder::default())
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn euler_variant(&self) -> EulerVariant {
        self.euler_variant
    }
    pub fn serre_variant(&self) -> SerreVariant {
        self.serre_variant
    }
    pub fn order(&self) -> IntervalOrder {
        self.order
    }
    /// Number of intervals.
    pub fn len(&self) -> usize {
        self.n
    }
    /// Always false: a grid has at least one interval.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
    /// Number of cells.
    pub fn num_cells(&self) -> usize {
        self.grid.num_cells()
    }
    /// All interval ids.
    pub fn ids(&self) -> impl Iterator<Item = IvId> {
        (0..self.n).map(|i| i as IvId)
    }
    /// The interval with a given id.
    pub fn interval(&self, id: IvId) -> &Interval {
        &self.ivs[id as usize]
    }
    /// Id of a grid interval.
    pub fn id_of(&self, iv: &Interval) -> Result<IvId> {
        self.ivs
            .iter()
            .position(|x| x == iv)
            .map(|i| i as IvId)
            .ok_or_else(|| Error::OffGrid(format!("{iv} is not an interval of the grid {}", self.grid)))
    }
    /// Breakpoint indices `(i, j)` of the interval `[x_i, x_j)`.
    pub fn endpoints(&self, id: IvId) -> (usize, usize) {
        self.endpoints[id as usize]
    }
    /// Range of cell indices covered by an interval.
    pub fn cell_range(&self, id: IvId) -> std::ops::Range<usize> {
        let (i, j) = self.endpoints(id);
        i..j
    }
    /// Id of the `k`-th cell.
    pub fn cell_id(&self, k: usize) -> IvId {
        self.cell_ids[k]
    }
    /// Number of cells in an interval.
    pub fn length(&self, id: IvId) -> usize {
        let (i, j) = self.endpoints(id);
        j - i
    }
    /// Position in the PBW interval order.
    pub fn rank(&self, id: IvId) -> u16 {
        self.rank[id as usize]
    }
    fn k(&self, a: IvId, b: IvId) -> usize {
        a as usize * self.n + b as usize
    }
    /// `⟨α, β⟩`.
    pub fn nonsym(&self, a: IvId, b: IvId) -> i64 {
        self.nonsym[self.k(a, b)]
    }
    /// `(α | β)`.
    pub fn sym(&self, a: IvId, b: IvId) -> i64 {
        self.sym[self.k(a, b)]
    }
    /// `(c | β)` for the `k`-th cell `c`.
    pub fn sym_cell(&self, cell: usize, b: IvId) -> i64 {
        self.sym(self.cell_id(cell), b)
    }
    pub fn osum(&self, a: IvId, b: IvId) -> Option<IvId> {
        self.osum[self.k(a, b)]
    }
    pub fn odiff(&self, a: IvId, b: IvId) -> Option<IvId> {
        self.odiff[self.k(a, b)]
    }
    pub fn strict_union(&self, a: IvId, b: IvId) -> Option<IvId> {
        self.sunion[self.k(a, b)]
    }
    pub fn strict_intersection(&self, a: IvId, b: IvId) -> Option<IvId> {
        self.sinter[self.k(a, b)]
    }
    /// Membership in `S_X`.
    pub fn in_serre(&self, a: IvId, b: IvId) -> bool {
        self.serre[self.k(a, b)]
    }
    /// Coefficient row of `(α, β)`.
    pub fn row(&self, a: IvId, b: IvId) -> &CoeffRow {
        &self.rows[self.k(a, b)]
    }
    /// `p_{αβ}`.
    pub fn p(&self, a: IvId, b: IvId) -> i64 {
        self.row(a, b).p
    }
    /// Ordered decompositions of an interval.
    pub fn decompositions(&self, a: IvId) -> &[(IvId, IvId)] {
        &self.decomps[a as usize]
    }
}

/// Integer value of a half-integer table entry that is used as an exponent.
pub fn integral(x: &Rat) -> Option<i64> {
    if x.denom().is_one() {
        i64::try_from(*x.numer()).ok()
    } else {
        None
    }
}

/// Absolute value helper used by tests and reports.
pub fn abs_rat(x: &Rat) -> Rat {
    if x.is_negative() {
        -*x
    } else if x.is_zero() {
        Rat::zero()
    } else {
        *x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::int(a, b)
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(osum(&iv(0, 1), &iv(1, 2)), Some(iv(0, 2)));
        assert_eq!(osum(&iv(1, 2), &iv(0, 1)), Some(iv(0, 2)));
        assert_eq!(osum(&iv(0, 1), &iv(2, 3)), None);
        assert_eq!(osum(&iv(0, 2), &iv(1, 3)), None);
    }

    #[test]
    fn difference_examples() {
        assert_eq!(odiff(&iv(0, 2), &iv(1, 2)), Some(iv(0, 1)));
        assert_eq!(odiff(&iv(0, 2), &iv(0, 1)), Some(iv(1, 2)));
        assert_eq!(odiff(&iv(0, 3), &iv(1, 2)), None);
        assert_eq!(odiff(&iv(0, 1), &iv(0, 1)), None);
    }

    #[test]
    fn strict_operations_examples() {
        assert_eq!(strict_union(&iv(0, 2), &iv(1, 3)), Some(iv(0, 3)));
        assert_eq!(strict_intersection(&iv(0, 2), &iv(1, 3)), Some(iv(1, 2)));
        assert_eq!(strict_union(&iv(0, 1), &iv(1, 2)), Some(iv(0, 2)));
        assert_eq!(strict_intersection(&iv(0, 1), &iv(1, 2)), None);
        assert_eq!(strict_union(&iv(0, 3), &iv(1, 2)), None);
        assert_eq!(strict_union(&iv(0, 1), &iv(2, 3)), None);
    }

    #[test]
    fn euler_examples() {
        let v = EulerVariant::Equioriented;
        assert_eq!(euler(v, &iv(0, 1), &iv(0, 1)), EulerData { nonsym: 1, sym: 2 });
        assert_eq!(euler(v, &iv(0, 1), &iv(1, 2)), EulerData { nonsym: -1, sym: -1 });
        assert_eq!(euler(v, &iv(1, 2), &iv(0, 1)), EulerData { nonsym: 0, sym: -1 });
        assert_eq!(euler(v, &iv(0, 1), &iv(2, 3)), EulerData { nonsym: 0, sym: 0 });
    }

    #[test]
    fn coefficient_examples() {
        let v = EulerVariant::Equioriented;
        assert_eq!(p_coeff(v, &iv(0, 1), &iv(1, 2)), 1);
        assert_eq!(p_coeff(v, &iv(1, 2), &iv(0, 1)), -1);
        assert_eq!(p_coeff(v, &iv(0, 1), &iv(0, 2)), 1);
        assert_eq!(coeffs(v, &iv(0, 1), &iv(1, 2)).b, Some(1));
        assert_eq!(coeffs(v, &iv(0, 1), &iv(0, 1)).r, 0);
        let row = coeffs(v, &iv(0, 1), &iv(1, 2));
        assert_eq!(row.r, -1);
        assert_eq!(row.splus, Some(Rat::from_integer(0)));
        assert_eq!(row.sminus, Some(Rat::from_integer(-1)));
    }

    #[test]
    fn serre_examples() {
        let v = EulerVariant::Equioriented;
        let s = SerreVariant::Conservative;
        assert!(s.contains(v, &iv(0, 1), &iv(1, 2)));
        assert!(!s.contains(v, &iv(0, 1), &iv(0, 1)));
        assert!(!s.contains(v, &iv(0, 3), &iv(1, 2)));
        assert!(s.contains(v, &iv(0, 2), &iv(1, 3)));
        assert!(s.contains(v, &iv(0, 1), &iv(2, 3)));
        assert!(SerreVariant::WithNested.contains(v, &iv(0, 3), &iv(1, 2)));
    }

    #[test]
    fn decomposition_examples() {
        let g = Grid::integers(3).unwrap();
        assert!(g.decompositions(&iv(0, 1)).is_empty());
        assert_eq!(
            g.decompositions(&iv(0, 2)),
            vec![(iv(0, 1), iv(1, 2)), (iv(1, 2), iv(0, 1))]
        );
        let g4 = Grid::integers(4).unwrap();
        assert_eq!(g4.decompositions(&iv(0, 3)).len(), 4);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::parse_list("0").is_err());
        assert!(Grid::parse_list("0,0").is_err());
        assert!(Grid::parse_list("1,0").is_err());
        let g = Grid::parse_list("0,1/2,1,2").unwrap();
        assert_eq!(g.intervals().len(), 6);
        assert_eq!(g.to_strings(), vec!["0", "1/2", "1", "2"]);
        assert!(g.check(&iv(0, 5)).is_err());
    }

    #[test]
    fn quiver_tables_agree_with_interval_functions() {
        let q = Quiver::standard(Grid::integers(4).unwrap());
        for a in q.ids() {
            for b in q.ids() {
                let (ia, ib) = (q.interval(a), q.interval(b));
                assert_eq!(q.osum(a, b).map(|x| q.interval(x).clone()), osum(ia, ib));
                assert_eq!(q.sym(a, b), euler(EulerVariant::Equioriented, ia, ib).sym);
            }
            for k in 0..q.num_cells() {
                let cell = q.cell_id(k);
                assert_eq!(q.sym_cell(k, a), q.sym(cell, a));
            }
        }
    }
}
