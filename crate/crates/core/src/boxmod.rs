//! Box modules: finite direct sums of monomial-supported building blocks.
//!
//! A box assigns each variable one of three exponent ranges,
//!
//! - `NonNeg`  -- polynomial factor `K[X_i]`, exponents >= 0,
//! - `NegOnly` -- inverted factor `X_i^-1 K[X_i^-1]`, exponents <= -1,
//! - `Laurent` -- localized factor `K[X_i, X_i^-1]`, all integers,
//!
//! and its basis consists of all monomials componentwise compatible with
//! those ranges. Local cohomology of a monomial ideal is a finite sum of
//! such boxes ([`GradedModule`]), so graded dimensions reduce to lattice
//! point counts. Counts may be countably infinite (localized factors, or a
//! group mixing `NonNeg` with `NegOnly`); [`ExtendedCount`] makes infinity
//! a first-class value rather than an error.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Bidegree, Multidegree, RingSpec, SignPattern};

/// Per-variable exponent range of a box factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SupportState {
    /// Exponents `>= 0` (a polynomial variable).
    NonNeg,
    /// Exponents `<= -1` (an inverted variable).
    NegOnly,
    /// All integer exponents (a localized variable).
    Laurent,
}

impl SupportState {
    pub fn token(&self) -> &'static str {
        match self {
            SupportState::NonNeg => "pos",
            SupportState::NegOnly => "neg",
            SupportState::Laurent => "lau",
        }
    }

    pub fn admits(&self, exponent: i64) -> bool {
        match self {
            SupportState::NonNeg => exponent >= 0,
            SupportState::NegOnly => exponent <= -1,
            SupportState::Laurent => true,
        }
    }
}

/// A graded dimension count: a non-negative integer or countable infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedCount {
    Finite(BigUint),
    Infinite,
}

impl ExtendedCount {
    pub fn finite(value: u64) -> Self {
        ExtendedCount::Finite(BigUint::from(value))
    }

    pub fn zero() -> Self {
        ExtendedCount::Finite(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedCount::Finite(c) if c.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedCount::Infinite)
    }

    /// Finite value as `u64` if it fits; `None` for infinity or overflow.
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(c) => u64::try_from(c).ok(),
            ExtendedCount::Infinite => None,
        }
    }

    pub fn add(&self, other: &ExtendedCount) -> ExtendedCount {
        match (self, other) {
            (ExtendedCount::Finite(a), ExtendedCount::Finite(b)) => ExtendedCount::Finite(a + b),
            _ => ExtendedCount::Infinite,
        }
    }

    /// Product of counts. `0 * Infinite = 0`: an empty factor kills the
    /// whole product even when the other factor is infinite.
    pub fn mul(&self, other: &ExtendedCount) -> ExtendedCount {
        if self.is_zero() || other.is_zero() {
            return ExtendedCount::zero();
        }
        match (self, other) {
            (ExtendedCount::Finite(a), ExtendedCount::Finite(b)) => ExtendedCount::Finite(a * b),
            _ => ExtendedCount::Infinite,
        }
    }

    pub fn scale(&self, k: u64) -> ExtendedCount {
        self.mul(&ExtendedCount::finite(k))
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(c) => write!(f, "{}", c),
            ExtendedCount::Infinite => write!(f, "inf"),
        }
    }
}

/// `C(t, k)` for integer `t`, zero outside `0 <= k <= t`.
pub fn binomial(t: i64, k: usize) -> BigUint {
    if t < 0 || (t as u64) < k as u64 {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k as u64 {
        num *= BigUint::from(t as u64 - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// How a group of variables counts at a given target sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroupKind {
    /// No variables: count 1 at target 0, else 0.
    Empty,
    /// All `NonNeg`, k variables: `C(t+k-1, k-1)` for `t >= 0`.
    PureNonNeg(usize),
    /// All `NegOnly`, l variables: `C(-t-1, l-1)` for `t <= -l`.
    PureNegOnly(usize),
    /// Exactly one variable, `Laurent`: count 1 at every target.
    SingleLaurent,
    /// Anything else: countably infinite at every target.
    InfiniteEverywhere,
}

fn classify_group(states: &[SupportState]) -> GroupKind {
    let k = states.iter().filter(|s| **s == SupportState::NonNeg).count();
    let l = states.iter().filter(|s| **s == SupportState::NegOnly).count();
    let lau = states.len() - k - l;
    match (k, l, lau) {
        (0, 0, 0) => GroupKind::Empty,
        (_, 0, 0) => GroupKind::PureNonNeg(k),
        (0, _, 0) => GroupKind::PureNegOnly(l),
        (0, 0, 1) => GroupKind::SingleLaurent,
        // A Laurent variable next to anything else, two Laurent variables,
        // or NonNeg mixed with NegOnly: for every target sum the residual
        // can be absorbed in infinitely many ways.
        _ => GroupKind::InfiniteEverywhere,
    }
}

/// Number of exponent vectors compatible with `states` whose sum is `target`.
pub fn group_count(states: &[SupportState], target: i64) -> ExtendedCount {
    match classify_group(states) {
        GroupKind::Empty => ExtendedCount::finite((target == 0) as u64),
        GroupKind::PureNonNeg(k) => {
            ExtendedCount::Finite(binomial(target + k as i64 - 1, k - 1))
        }
        GroupKind::PureNegOnly(l) => ExtendedCount::Finite(binomial(-target - 1, l - 1)),
        GroupKind::SingleLaurent => ExtendedCount::finite(1),
        GroupKind::InfiniteEverywhere => ExtendedCount::Infinite,
    }
}

/// Achievable group sums, as a subset of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportSet {
    /// Only 0 (empty group).
    PointZero,
    /// `t >= bound`.
    Ge(i64),
    /// `t <= bound`.
    Le(i64),
    /// All of `Z`.
    All,
}

impl SupportSet {
    pub fn contains(&self, t: i64) -> bool {
        match self {
            SupportSet::PointZero => t == 0,
            SupportSet::Ge(b) => t >= *b,
            SupportSet::Le(b) => t <= *b,
            SupportSet::All => true,
        }
    }

    fn shifted(self, by: i64) -> SupportSet {
        match self {
            SupportSet::PointZero => {
                if by == 0 {
                    SupportSet::PointZero
                } else {
                    // A shifted point is still a point; encode as a
                    // degenerate interval. Not needed for ring groups
                    // (always nonempty), kept total for sub-boxes.
                    SupportSet::Ge(i64::MAX)
                }
            }
            SupportSet::Ge(b) => SupportSet::Ge(b - by),
            SupportSet::Le(b) => SupportSet::Le(b - by),
            SupportSet::All => SupportSet::All,
        }
    }
}

fn group_support(states: &[SupportState]) -> SupportSet {
    match classify_group(states) {
        GroupKind::Empty => SupportSet::PointZero,
        GroupKind::PureNonNeg(_) => SupportSet::Ge(0),
        GroupKind::PureNegOnly(l) => SupportSet::Le(-(l as i64)),
        GroupKind::SingleLaurent | GroupKind::InfiniteEverywhere => SupportSet::All,
    }
}

/// A box module: one [`SupportState`] per variable plus a bidegree twist.
///
/// The twist follows the convention `M(a,b)_{(u,v)} = M_{(u+a,v+b)}`, so the
/// dimension of a shifted box at `d` is the dimension of the plain box at
/// `d + shift`. Local cohomology of monomial ideals produces unshifted
/// boxes; shifts exist for the cyclic-module dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxModule {
    ring: RingSpec,
    states: Vec<SupportState>,
    shift: Bidegree,
}

impl BoxModule {
    pub fn new(ring: RingSpec, states: Vec<SupportState>) -> Result<Self> {
        if states.len() != ring.vars() {
            return Err(Error::DimensionMismatch {
                expected: ring.vars(),
                got: states.len(),
            });
        }
        Ok(BoxModule {
            ring,
            states,
            shift: Bidegree::ZERO,
        })
    }

    /// The box with every variable in the same state.
    pub fn uniform(ring: RingSpec, state: SupportState) -> Self {
        BoxModule {
            ring,
            states: vec![state; ring.vars()],
            shift: Bidegree::ZERO,
        }
    }

    /// `NegOnly` exactly on `pattern`, `NonNeg` elsewhere: the box shape of a
    /// degreewise Cech class with that sign pattern.
    pub fn from_neg_pattern(ring: RingSpec, pattern: &SignPattern) -> Self {
        let states = (0..ring.vars())
            .map(|j| {
                if pattern.contains(j) {
                    SupportState::NegOnly
                } else {
                    SupportState::NonNeg
                }
            })
            .collect();
        BoxModule {
            ring,
            states,
            shift: Bidegree::ZERO,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn states(&self) -> &[SupportState] {
        &self.states
    }

    pub fn state(&self, index: usize) -> SupportState {
        self.states[index]
    }

    pub fn shift(&self) -> Bidegree {
        self.shift
    }

    pub fn with_shift(mut self, shift: Bidegree) -> Self {
        self.shift = shift;
        self
    }

    pub fn x_states(&self) -> &[SupportState] {
        &self.states[..self.ring.n()]
    }

    pub fn y_states(&self) -> &[SupportState] {
        &self.states[self.ring.n()..]
    }

    /// Flip the states on `vars` to `Laurent` (inverting those variables).
    pub fn localized_at(&self, vars: &SignPattern) -> BoxModule {
        let mut states = self.states.clone();
        for j in vars.iter() {
            if j < states.len() {
                states[j] = SupportState::Laurent;
            }
        }
        BoxModule {
            ring: self.ring,
            states,
            shift: self.shift,
        }
    }

    /// Number of basis monomials at bidegree `d`, honoring the shift.
    pub fn dim(&self, d: Bidegree) -> ExtendedCount {
        let raw = d + self.shift;
        group_count(self.x_states(), raw.u).mul(&group_count(self.y_states(), raw.v))
    }

    /// 1 if the multidegree is a basis monomial of the (unshifted) box.
    ///
    /// The fine `Z^{n+m}` grading does not interact with bidegree twists;
    /// callers only use this on unshifted boxes.
    pub fn fine_dim(&self, a: &Multidegree) -> u64 {
        assert_eq!(
            self.shift,
            Bidegree::ZERO,
            "fine grading is only defined for unshifted boxes"
        );
        assert_eq!(a.len(), self.ring.vars());
        let compatible = a
            .entries()
            .iter()
            .zip(&self.states)
            .all(|(&e, s)| s.admits(e));
        compatible as u64
    }

    /// Achievable `u`-sums (X-group), in module coordinates.
    pub fn x_support(&self) -> SupportSet {
        group_support(self.x_states()).shifted(self.shift.u)
    }

    /// Achievable `v`-sums (Y-group), in module coordinates.
    pub fn y_support(&self) -> SupportSet {
        group_support(self.y_states()).shifted(self.shift.v)
    }

    /// True iff `dim` is nonzero at `d` (support is the product of the two
    /// group support sets).
    pub fn supported_at(&self, d: Bidegree) -> bool {
        self.x_support().contains(d.u) && self.y_support().contains(d.v)
    }

    /// All basis monomials at the exact bidegree `d`; errors when the
    /// component is infinite-dimensional.
    pub fn basis_at(&self, d: Bidegree) -> Result<Vec<Multidegree>> {
        let raw = d + self.shift;
        let xs = enumerate_group(self.x_states(), raw.u)
            .ok_or(Error::InfiniteComponent { u: d.u, v: d.v })?;
        let ys = enumerate_group(self.y_states(), raw.v)
            .ok_or(Error::InfiniteComponent { u: d.u, v: d.v })?;
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                let mut entries = x.clone();
                entries.extend_from_slice(y);
                out.push(Multidegree::new(entries));
            }
        }
        Ok(out)
    }

    /// Basis monomials whose module bidegree lies in the window, with every
    /// exponent clipped to `[-exp_bound, exp_bound]`. Exhaustive whenever
    /// the window components are finite-dimensional; a truncated sample
    /// otherwise.
    pub fn monomials_in_window(&self, window: &Window, exp_bound: i64) -> Vec<Multidegree> {
        let raw_u = (window.umin + self.shift.u, window.umax + self.shift.u);
        let raw_v = (window.vmin + self.shift.v, window.vmax + self.shift.v);
        let xs = enumerate_group_bounded(self.x_states(), raw_u.0, raw_u.1, exp_bound);
        let ys = enumerate_group_bounded(self.y_states(), raw_v.0, raw_v.1, exp_bound);
        let mut out = Vec::new();
        for x in &xs {
            for y in &ys {
                let mut entries = x.clone();
                entries.extend_from_slice(y);
                out.push(Multidegree::new(entries));
            }
        }
        out
    }

    /// Render just the state list, e.g. `[X1:neg X2:neg Y1:pos Y2:pos]`.
    pub fn render_states(&self) -> String {
        let body: Vec<String> = self
            .states
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{}:{}", self.ring.var_name(j), s.token()))
            .collect();
        format!("[{}]", body.join(" "))
    }
}

/// Exponent vectors for one group at an exact sum; `None` when infinite.
fn enumerate_group(states: &[SupportState], target: i64) -> Option<Vec<Vec<i64>>> {
    match classify_group(states) {
        GroupKind::Empty => Some(if target == 0 { vec![vec![]] } else { vec![] }),
        GroupKind::SingleLaurent => Some(vec![vec![target]]),
        GroupKind::PureNonNeg(_) | GroupKind::PureNegOnly(_) => {
            let bound = target.abs() + states.len() as i64;
            Some(enumerate_group_bounded(states, target, target, bound))
        }
        GroupKind::InfiniteEverywhere => {
            if group_count(states, target).is_zero() {
                Some(vec![])
            } else {
                None
            }
        }
    }
}

/// Exponent vectors with sum in `[lo, hi]` and every exponent in
/// `[-exp_bound, exp_bound]`, depth-first with partial-sum pruning.
fn enumerate_group_bounded(
    states: &[SupportState],
    lo: i64,
    hi: i64,
    exp_bound: i64,
) -> Vec<Vec<i64>> {
    let ranges: Vec<(i64, i64)> = states
        .iter()
        .map(|s| match s {
            SupportState::NonNeg => (0, exp_bound.max(0)),
            SupportState::NegOnly => (-exp_bound.max(1), -1),
            SupportState::Laurent => (-exp_bound, exp_bound),
        })
        .collect();
    // Suffix sums of attainable minima/maxima for pruning.
    let mut min_rest = vec![0i64; states.len() + 1];
    let mut max_rest = vec![0i64; states.len() + 1];
    for i in (0..states.len()).rev() {
        min_rest[i] = min_rest[i + 1] + ranges[i].0;
        max_rest[i] = max_rest[i + 1] + ranges[i].1;
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(states.len());
    fn dfs(
        depth: usize,
        partial: i64,
        ranges: &[(i64, i64)],
        min_rest: &[i64],
        max_rest: &[i64],
        lo: i64,
        hi: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if partial + min_rest[depth] > hi || partial + max_rest[depth] < lo {
            return;
        }
        if depth == ranges.len() {
            out.push(current.clone());
            return;
        }
        let (a, b) = ranges[depth];
        for e in a..=b {
            current.push(e);
            dfs(
                depth + 1,
                partial + e,
                ranges,
                min_rest,
                max_rest,
                lo,
                hi,
                current,
                out,
            );
            current.pop();
        }
    }
    dfs(
        0, 0, &ranges, &min_rest, &max_rest, lo, hi, &mut current, &mut out,
    );
    out
}

/// A closed bidegree rectangle `[umin,umax] x [vmin,vmax]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub umin: i64,
    pub umax: i64,
    pub vmin: i64,
    pub vmax: i64,
}

impl Window {
    pub fn new(umin: i64, umax: i64, vmin: i64, vmax: i64) -> Self {
        assert!(umin <= umax && vmin <= vmax, "window bounds out of order");
        Window {
            umin,
            umax,
            vmin,
            vmax,
        }
    }

    pub fn square(radius: i64) -> Self {
        Window::new(-radius, radius, -radius, radius)
    }

    /// Default verification window for a ring: `[-(n+4), n+4] x [-(m+4), m+4]`.
    pub fn default_for(ring: &RingSpec) -> Self {
        let n = ring.n() as i64;
        let m = ring.m() as i64;
        Window::new(-(n + 4), n + 4, -(m + 4), m + 4)
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        self.umin <= d.u && d.u <= self.umax && self.vmin <= d.v && d.v <= self.vmax
    }

    /// Row-major iteration: `u` ascending in the outer loop, `v` inner.
    pub fn iter(&self) -> impl Iterator<Item = Bidegree> + '_ {
        (self.umin..=self.umax)
            .flat_map(move |u| (self.vmin..=self.vmax).map(move |v| Bidegree::new(u, v)))
    }

    pub fn exponent_bound(&self) -> i64 {
        self.umin
            .abs()
            .max(self.umax.abs())
            .max(self.vmin.abs())
            .max(self.vmax.abs())
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            self.umin, self.umax, self.vmin, self.vmax
        )
    }
}

/// One summand of a graded module: a box with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub box_module: BoxModule,
    pub multiplicity: u64,
}

impl Summand {
    pub fn new(box_module: BoxModule, multiplicity: u64) -> Self {
        assert!(multiplicity >= 1, "multiplicity must be positive");
        Summand {
            box_module,
            multiplicity,
        }
    }

    /// Canonical serialization: `[X1:neg ...] shift=(0,0) mult=1`.
    pub fn render(&self) -> String {
        format!(
            "{} shift={} mult={}",
            self.box_module.render_states(),
            self.box_module.shift(),
            self.multiplicity
        )
    }
}

/// A finite direct sum of box modules; the empty sum is the zero module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    ring: RingSpec,
    summands: Vec<Summand>,
}

impl GradedModule {
    pub fn zero(ring: RingSpec) -> Self {
        GradedModule {
            ring,
            summands: Vec::new(),
        }
    }

    pub fn from_summands(ring: RingSpec, summands: Vec<Summand>) -> Self {
        debug_assert!(summands.iter().all(|s| s.box_module.ring() == &ring));
        GradedModule { ring, summands }
    }

    pub fn single(box_module: BoxModule) -> Self {
        let ring = *box_module.ring();
        GradedModule {
            ring,
            summands: vec![Summand::new(box_module, 1)],
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn push(&mut self, summand: Summand) {
        debug_assert_eq!(summand.box_module.ring(), &self.ring);
        self.summands.push(summand);
    }

    /// Direct sum with another module over the same ring.
    pub fn direct_sum(&self, other: &GradedModule) -> GradedModule {
        assert_eq!(self.ring, other.ring);
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        GradedModule {
            ring: self.ring,
            summands,
        }
    }

    /// Graded dimension at a bidegree: sum over summands with multiplicity.
    pub fn dim(&self, d: Bidegree) -> ExtendedCount {
        let mut total = ExtendedCount::zero();
        for s in &self.summands {
            total = total.add(&s.box_module.dim(d).scale(s.multiplicity));
        }
        total
    }

    /// Fine-graded dimension at a multidegree (unshifted summands only).
    pub fn fine_dim(&self, a: &Multidegree) -> u64 {
        self.summands
            .iter()
            .map(|s| s.multiplicity * s.box_module.fine_dim(a))
            .sum()
    }

    pub fn supported_at(&self, d: Bidegree) -> bool {
        self.summands.iter().any(|s| s.box_module.supported_at(d))
    }

    /// Twist every summand by `s`: `dim(shift(M,s), d) = dim(M, d+s)`.
    pub fn shifted(&self, s: Bidegree) -> GradedModule {
        GradedModule {
            ring: self.ring,
            summands: self
                .summands
                .iter()
                .map(|sm| {
                    Summand::new(
                        sm.box_module.clone().with_shift(sm.box_module.shift() + s),
                        sm.multiplicity,
                    )
                })
                .collect(),
        }
    }

    /// Dimensions of the total single grading `r = u + v` over `[r_min, r_max]`.
    pub fn total_grading_dims(&self, r_min: i64, r_max: i64) -> Vec<(i64, ExtendedCount)> {
        assert!(r_min <= r_max);
        (r_min..=r_max)
            .map(|r| (r, self.total_grading_dim(r)))
            .collect()
    }

    fn total_grading_dim(&self, r: i64) -> ExtendedCount {
        let mut total = ExtendedCount::zero();
        for s in &self.summands {
            total = total.add(&summand_diagonal_dim(&s.box_module, r).scale(s.multiplicity));
        }
        total
    }
}

/// Sum of `dim` over the diagonal `u + v = r` for a single box.
fn summand_diagonal_dim(b: &BoxModule, r: i64) -> ExtendedCount {
    let xs = b.x_support();
    let ys = b.y_support();
    // u ranges over the diagonal; v = r - u. Finitely many nonzero points
    // only when both supports bound the diagonal from the same side.
    let range = match (xs, ys) {
        (SupportSet::Ge(a), SupportSet::Ge(c)) => {
            // u >= a and r - u >= c
            Some((a, r - c))
        }
        (SupportSet::Le(a), SupportSet::Le(c)) => Some((r - c, a)),
        (SupportSet::PointZero, _) => Some((0, 0)),
        (_, SupportSet::PointZero) => Some((r, r)),
        _ => None,
    };
    match range {
        Some((lo, hi)) => {
            let mut total = ExtendedCount::zero();
            for u in lo..=hi {
                total = total.add(&b.dim(Bidegree::new(u, r - u)));
            }
            total
        }
        None => {
            // Unbounded overlap: infinite as soon as any diagonal point is
            // supported; the support sets here are half-lines or all of Z,
            // so the overlap is nonempty whenever both are nonempty.
            ExtendedCount::Infinite
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize, m: usize) -> RingSpec {
        RingSpec::new(n, m).unwrap()
    }

    /// Brute-force lattice count with exponents clipped to `[-bound, bound]`.
    fn enumerated_count(states: &[SupportState], target: i64, bound: i64) -> u64 {
        fn rec(states: &[SupportState], target: i64, bound: i64) -> u64 {
            match states.split_first() {
                None => (target == 0) as u64,
                Some((s, rest)) => {
                    let mut total = 0;
                    for e in -bound..=bound {
                        if s.admits(e) {
                            total += rec(rest, target - e, bound);
                        }
                    }
                    total
                }
            }
        }
        rec(states, target, bound)
    }

    /// Enumeration-backed group count: stable under growing the clip bound
    /// means exact; still growing means infinite.
    fn group_count_oracle(states: &[SupportState], target: i64) -> ExtendedCount {
        let b = target.abs() + states.len() as i64 + 2;
        let at_b = enumerated_count(states, target, b);
        let at_b2 = enumerated_count(states, target, b + 3);
        if at_b == at_b2 {
            ExtendedCount::finite(at_b)
        } else {
            ExtendedCount::Infinite
        }
    }

    #[test]
    fn box_dim_paper_examples() {
        let r = ring(2, 2);
        let t = BoxModule::uniform(r, SupportState::NonNeg);
        assert_eq!(t.dim(Bidegree::new(2, 1)), ExtendedCount::finite(6));

        let e = BoxModule::uniform(r, SupportState::NegOnly);
        assert_eq!(e.dim(Bidegree::new(-2, -2)), ExtendedCount::finite(1));

        let mixed = BoxModule::new(
            r,
            vec![
                SupportState::NegOnly,
                SupportState::NegOnly,
                SupportState::Laurent,
                SupportState::NonNeg,
            ],
        )
        .unwrap();
        assert_eq!(mixed.dim(Bidegree::new(-2, 5)), ExtendedCount::Infinite);

        let r11 = ring(1, 1);
        let lau = BoxModule::new(r11, vec![SupportState::Laurent, SupportState::NonNeg]).unwrap();
        assert_eq!(lau.dim(Bidegree::new(7, 0)), ExtendedCount::finite(1));
    }

    #[test]
    fn group_count_matches_enumeration_window() {
        // Exhaustive over all state combinations for small groups and all
        // |target| <= 8; the oracle detects infinity by growth.
        let states = [
            SupportState::NonNeg,
            SupportState::NegOnly,
            SupportState::Laurent,
        ];
        for &a in &states {
            for &b in &states {
                for group in [vec![a], vec![a, b]] {
                    for t in -8..=8 {
                        assert_eq!(
                            group_count(&group, t),
                            group_count_oracle(&group, t),
                            "group {:?} at {}",
                            group,
                            t
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverted_block_closed_form() {
        // All-NegOnly X-factor: C(-u-1, n-1) for u <= -n, else 0.
        for n in 1..=4usize {
            let group = vec![SupportState::NegOnly; n];
            for u in -10..=0i64 {
                let expected = if u <= -(n as i64) {
                    binomial(-u - 1, n - 1)
                } else {
                    BigUint::zero()
                };
                assert_eq!(group_count(&group, u), ExtendedCount::Finite(expected));
                assert_eq!(group_count(&group, u), group_count_oracle(&group, u));
            }
        }
    }

    #[test]
    fn module_dim_examples() {
        let r = ring(1, 1);
        let b = BoxModule::uniform(r, SupportState::NonNeg);
        let m = GradedModule::from_summands(r, vec![Summand::new(b, 2)]);
        assert_eq!(m.dim(Bidegree::ZERO), ExtendedCount::finite(2));

        let z = GradedModule::zero(r);
        assert_eq!(z.dim(Bidegree::new(3, -5)), ExtendedCount::zero());
        assert!(z.is_zero());
    }

    #[test]
    fn shift_examples() {
        let r = ring(1, 1);
        let e = BoxModule::uniform(r, SupportState::NegOnly);
        let m = GradedModule::single(e);

        let s0 = m.shifted(Bidegree::ZERO);
        for d in Window::square(3).iter() {
            assert_eq!(s0.dim(d), m.dim(d));
        }

        let s = m.shifted(Bidegree::new(-1, -1));
        assert_eq!(s.dim(Bidegree::ZERO), m.dim(Bidegree::new(-1, -1)));
        assert_eq!(s.dim(Bidegree::ZERO), ExtendedCount::finite(1));

        let twice = m.shifted(Bidegree::new(2, -3)).shifted(Bidegree::new(-1, 1));
        let once = m.shifted(Bidegree::new(1, -2));
        for d in Window::square(4).iter() {
            assert_eq!(twice.dim(d), once.dim(d));
        }
    }

    #[test]
    fn shift_moves_support() {
        let r = ring(2, 2);
        let e = BoxModule::uniform(r, SupportState::NegOnly);
        let shifted = GradedModule::single(e.clone()).shifted(Bidegree::new(1, -2));
        for d in Window::square(6).iter() {
            let back = Bidegree::new(d.u + 1, d.v - 2);
            assert_eq!(
                shifted.supported_at(d),
                e.supported_at(back),
                "support(shift(M,s)) = support(M) - s at {}",
                d
            );
        }
    }

    #[test]
    fn total_grading_examples() {
        let r = ring(1, 1);
        let e = GradedModule::single(BoxModule::uniform(r, SupportState::NegOnly));
        let dims = e.total_grading_dims(-3, -3);
        assert_eq!(dims[0].1, ExtendedCount::finite(2));

        let t = GradedModule::single(BoxModule::uniform(r, SupportState::NonNeg));
        assert_eq!(t.total_grading_dims(-1, -1)[0].1, ExtendedCount::zero());

        let lau = GradedModule::single(
            BoxModule::new(r, vec![SupportState::Laurent, SupportState::NonNeg]).unwrap(),
        );
        for (_, c) in lau.total_grading_dims(-2, 2) {
            assert_eq!(c, ExtendedCount::Infinite);
        }
    }

    #[test]
    fn total_grading_matches_direct_sum_over_diagonal() {
        // For pure boxes the diagonal sum can be checked directly.
        let r = ring(2, 1);
        let b = BoxModule::from_neg_pattern(r, &SignPattern::from_indices(&[0, 1]));
        let m = GradedModule::single(b);
        for r_val in -6..=6i64 {
            let direct: ExtendedCount = (-40..=40)
                .map(|u| m.dim(Bidegree::new(u, r_val - u)))
                .fold(ExtendedCount::zero(), |acc, c| acc.add(&c));
            assert_eq!(m.total_grading_dims(r_val, r_val)[0].1, direct);
        }
    }

    #[test]
    fn basis_enumeration_matches_dim() {
        let r = ring(2, 2);
        let boxes = [
            BoxModule::uniform(r, SupportState::NonNeg),
            BoxModule::uniform(r, SupportState::NegOnly),
            BoxModule::from_neg_pattern(r, &SignPattern::from_indices(&[0, 1])),
        ];
        for b in &boxes {
            for d in Window::square(5).iter() {
                let basis = b.basis_at(d).unwrap();
                assert_eq!(
                    ExtendedCount::finite(basis.len() as u64),
                    b.dim(d),
                    "box {:?} at {}",
                    b.states(),
                    d
                );
                for a in &basis {
                    assert_eq!(a.total_bidegree(&r).unwrap(), d);
                    assert_eq!(b.fine_dim(a), 1);
                }
            }
        }
        let lau = BoxModule::new(
            r,
            vec![
                SupportState::Laurent,
                SupportState::NonNeg,
                SupportState::NonNeg,
                SupportState::NonNeg,
            ],
        )
        .unwrap();
        assert!(lau.basis_at(Bidegree::ZERO).is_err());
    }

    #[test]
    fn window_enumeration_exhaustive_for_pure_boxes() {
        let r = ring(2, 2);
        let e = BoxModule::uniform(r, SupportState::NegOnly);
        let w = Window::square(4);
        let monomials = e.monomials_in_window(&w, w.exponent_bound());
        let mut per_degree = std::collections::BTreeMap::new();
        for a in &monomials {
            let d = a.total_bidegree(&r).unwrap();
            assert!(w.contains(d));
            *per_degree.entry((d.u, d.v)).or_insert(0u64) += 1;
        }
        for d in w.iter() {
            let expected = e.dim(d).as_u64().unwrap();
            assert_eq!(per_degree.get(&(d.u, d.v)).copied().unwrap_or(0), expected);
        }
    }

    #[test]
    fn extended_count_arithmetic() {
        let inf = ExtendedCount::Infinite;
        let zero = ExtendedCount::zero();
        let two = ExtendedCount::finite(2);
        assert_eq!(two.add(&inf), ExtendedCount::Infinite);
        assert_eq!(zero.mul(&inf), ExtendedCount::zero());
        assert_eq!(two.mul(&inf), ExtendedCount::Infinite);
        assert_eq!(two.mul(&two), ExtendedCount::finite(4));
        assert_eq!(inf.to_string(), "inf");
    }
}
