//! Region geometry of the `uv`-plane and the structural checks that run on
//! computed modules: rigidity, tameness, and the vanishing contrapositive.
//!
//! All regions are cut out by the four lines `u = 0`, `u = -n`, `v = 0`,
//! `v = -m`: four quadrant blocks (`NE`, `NW*`, `S*W*`, `S*E`), four
//! strips (`N`, `W*`, `S*`, `E`), the full plane `C`, the four truncated
//! strips between consecutive blocks, and translated blocks anchored at a
//! corner. The support of an (unshifted) box is always a product of the
//! three X-zones `u >= 0`, `-n < u < 0`, `u <= -n` with the analogous
//! Y-zones, which is what makes exact region classification possible.

use std::fmt;

use crate::boxmod::{BoxModule, GradedModule, SupportSet, SupportState, Window};
use crate::error::{Error, Result};
use crate::ring::{Bidegree, RingSpec};

/// Labels for the distinguished regions of the `uv`-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionLabel {
    /// `u >= 0, v >= 0`
    NE,
    /// `u <= -n, v >= 0`
    NWstar,
    /// `u <= -n, v <= -m`
    SstarWstar,
    /// `u >= 0, v <= -m`
    SstarE,
    /// all of `Z^2`
    C,
    /// `v >= 0`
    N,
    /// `u <= -n`
    Wstar,
    /// `v <= -m`
    Sstar,
    /// `u >= 0`
    E,
    /// `-n < u < 0, v >= 0`
    TrunN,
    /// `u <= -n, -m < v < 0`
    TrunWstar,
    /// `-n < u < 0, v <= -m`
    TrunSstar,
    /// `u >= 0, -m < v < 0`
    TrunE,
    /// Translated block anchored at a corner outside the open strips.
    Block(Bidegree),
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionLabel::NE => write!(f, "NE"),
            RegionLabel::NWstar => write!(f, "NW*"),
            RegionLabel::SstarWstar => write!(f, "S*W*"),
            RegionLabel::SstarE => write!(f, "S*E"),
            RegionLabel::C => write!(f, "C"),
            RegionLabel::N => write!(f, "N"),
            RegionLabel::Wstar => write!(f, "W*"),
            RegionLabel::Sstar => write!(f, "S*"),
            RegionLabel::E => write!(f, "E"),
            RegionLabel::TrunN => write!(f, "Trun(N)"),
            RegionLabel::TrunWstar => write!(f, "Trun(W*)"),
            RegionLabel::TrunSstar => write!(f, "Trun(S*)"),
            RegionLabel::TrunE => write!(f, "Trun(E)"),
            RegionLabel::Block(c) => write!(f, "B{}", c),
        }
    }
}

/// The thirteen named labels in canonical order (blocks, plane, strips,
/// truncated strips). Aggregation and deterministic reports use this order.
pub const NAMED_LABELS: [RegionLabel; 13] = [
    RegionLabel::NE,
    RegionLabel::NWstar,
    RegionLabel::SstarWstar,
    RegionLabel::SstarE,
    RegionLabel::C,
    RegionLabel::N,
    RegionLabel::Wstar,
    RegionLabel::Sstar,
    RegionLabel::E,
    RegionLabel::TrunN,
    RegionLabel::TrunWstar,
    RegionLabel::TrunSstar,
    RegionLabel::TrunE,
];

/// Membership test per the defining inequalities. Block corners inside an
/// open strip are undefined and rejected.
pub fn region_contains(ring: &RingSpec, label: RegionLabel, d: Bidegree) -> Result<bool> {
    let n = ring.n() as i64;
    let m = ring.m() as i64;
    let (u, v) = (d.u, d.v);
    Ok(match label {
        RegionLabel::NE => u >= 0 && v >= 0,
        RegionLabel::NWstar => u <= -n && v >= 0,
        RegionLabel::SstarWstar => u <= -n && v <= -m,
        RegionLabel::SstarE => u >= 0 && v <= -m,
        RegionLabel::C => true,
        RegionLabel::N => v >= 0,
        RegionLabel::Wstar => u <= -n,
        RegionLabel::Sstar => v <= -m,
        RegionLabel::E => u >= 0,
        RegionLabel::TrunN => -n < u && u < 0 && v >= 0,
        RegionLabel::TrunWstar => u <= -n && -m < v && v < 0,
        RegionLabel::TrunSstar => -n < u && u < 0 && v <= -m,
        RegionLabel::TrunE => u >= 0 && -m < v && v < 0,
        RegionLabel::Block(corner) => {
            let u_ok = if corner.u >= 0 {
                Some(u >= corner.u)
            } else if corner.u <= -n {
                Some(u <= corner.u)
            } else {
                None
            };
            let v_ok = if corner.v >= 0 {
                Some(v >= corner.v)
            } else if corner.v <= -m {
                Some(v <= corner.v)
            } else {
                None
            };
            match (u_ok, v_ok) {
                (Some(a), Some(b)) => a && b,
                _ => {
                    return Err(Error::InvalidBlockCorner {
                        u0: corner.u,
                        v0: corner.v,
                    })
                }
            }
        }
    })
}

// ---------------------------------------------------------------------------
// Zone/cell decomposition.
//
// The u-axis splits into three zones (u >= 0, -n < u < 0, u <= -n), and
// likewise the v-axis; every named region is a union of the nine product
// cells. Cells are bits of a u16, bit 3*x + y with x, y in {0: nonneg,
// 1: middle, 2: negative-half}.
// ---------------------------------------------------------------------------

fn x_zone_empty(ring: &RingSpec, zone: usize) -> bool {
    zone == 1 && ring.n() == 1
}

fn y_zone_empty(ring: &RingSpec, zone: usize) -> bool {
    zone == 1 && ring.m() == 1
}

fn cell_bit(x: usize, y: usize) -> u16 {
    1 << (3 * x + y)
}

/// Representative point of a zone pair, `None` when a zone has no integers.
fn cell_point(ring: &RingSpec, x: usize, y: usize) -> Option<Bidegree> {
    let u = match x {
        0 => 0,
        1 if ring.n() > 1 => -1,
        1 => return None,
        _ => -(ring.n() as i64),
    };
    let v = match y {
        0 => 0,
        1 if ring.m() > 1 => -1,
        1 => return None,
        _ => -(ring.m() as i64),
    };
    Some(Bidegree::new(u, v))
}

/// Cell set of a named label, with empty zones masked out.
fn label_cells(ring: &RingSpec, label: RegionLabel) -> u16 {
    let mut cells = 0u16;
    for x in 0..3 {
        if x_zone_empty(ring, x) {
            continue;
        }
        for y in 0..3 {
            if y_zone_empty(ring, y) {
                continue;
            }
            let d = cell_point(ring, x, y).expect("nonempty zones");
            if region_contains(ring, label, d).expect("named label") {
                cells |= cell_bit(x, y);
            }
        }
    }
    cells
}

/// Support class of one variable group, read off the state multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBehavior {
    /// All `NonNeg`: sums `>= 0`.
    NonNegHalf,
    /// All `NegOnly`: sums `<= -(group size)`.
    NegHalf,
    /// Mixed states or any `Laurent`: every integer sum.
    AllZ,
}

fn behavior(states: &[SupportState]) -> GroupBehavior {
    if states.iter().all(|s| *s == SupportState::NonNeg) {
        GroupBehavior::NonNegHalf
    } else if states.iter().all(|s| *s == SupportState::NegOnly) {
        GroupBehavior::NegHalf
    } else {
        GroupBehavior::AllZ
    }
}

fn behavior_label(x: GroupBehavior, y: GroupBehavior) -> RegionLabel {
    use GroupBehavior::*;
    match (x, y) {
        (NonNegHalf, NonNegHalf) => RegionLabel::NE,
        (NegHalf, NonNegHalf) => RegionLabel::NWstar,
        (NegHalf, NegHalf) => RegionLabel::SstarWstar,
        (NonNegHalf, NegHalf) => RegionLabel::SstarE,
        (AllZ, AllZ) => RegionLabel::C,
        (AllZ, NonNegHalf) => RegionLabel::N,
        (NegHalf, AllZ) => RegionLabel::Wstar,
        (AllZ, NegHalf) => RegionLabel::Sstar,
        (NonNegHalf, AllZ) => RegionLabel::E,
    }
}

/// Per-summand support classes plus the minimal exact label cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportClassification {
    pub per_summand: Vec<SummandClass>,
    /// Minimal set of named labels whose union equals the support.
    pub aggregate: Vec<RegionLabel>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummandClass {
    pub x: GroupBehavior,
    pub y: GroupBehavior,
    pub region: RegionLabel,
}

/// Classify the support of one box from its state multisets.
pub fn classify_box(b: &BoxModule) -> SummandClass {
    let x = behavior(b.x_states());
    let y = behavior(b.y_states());
    SummandClass {
        x,
        y,
        region: behavior_label(x, y),
    }
}

/// Classify every summand and compute the minimal exact aggregate cover.
pub fn classify_support(m: &GradedModule) -> SupportClassification {
    let ring = m.ring();
    let per_summand: Vec<SummandClass> = m
        .summands()
        .iter()
        .map(|s| classify_box(&s.box_module))
        .collect();
    let target: u16 = per_summand
        .iter()
        .fold(0, |acc, c| acc | label_cells(ring, c.region));
    let aggregate = minimal_cover(ring, target);
    SupportClassification {
        per_summand,
        aggregate,
    }
}

/// Smallest subset of the thirteen labels whose cell union equals `target`,
/// ties broken by canonical label order.
fn minimal_cover(ring: &RingSpec, target: u16) -> Vec<RegionLabel> {
    if target == 0 {
        return Vec::new();
    }
    let cells: Vec<u16> = NAMED_LABELS
        .iter()
        .map(|&l| label_cells(ring, l))
        .collect();
    let mut masks: Vec<u16> = (0..1u16 << NAMED_LABELS.len() as u32).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let mut union = 0u16;
        for (i, c) in cells.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union |= c;
            }
        }
        if union == target {
            return NAMED_LABELS
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l)
                .collect();
        }
    }
    unreachable!("per-summand labels always cover their own union")
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

/// One PASS/FAIL line of a verification report.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub passed: bool,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{} {}", tag, self.name)
        } else {
            write!(f, "{} {} {}", tag, self.name, self.detail)
        }
    }
}

/// An ordered list of check lines.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn push(&mut self, passed: bool, name: impl Into<String>, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            passed,
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{}", line)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rigidity.
// ---------------------------------------------------------------------------

/// Verify both rigidity statements on a window by direct dimension sweeps:
///
/// 1. on each quadrant block, one nonzero point forces every point nonzero;
/// 2. one nonzero point in a truncated strip forces the whole corresponding
///    strip nonzero, and one nonzero point in the central rectangle forces
///    the whole plane.
///
/// The window must contain the four corners `(0,0)`, `(-n,0)`, `(-n,-m)`,
/// `(0,-m)`.
pub fn verify_rigidity(m: &GradedModule, window: &Window) -> Result<CheckReport> {
    let ring = m.ring();
    let n = ring.n() as i64;
    let mm = ring.m() as i64;
    let corners = [
        Bidegree::ZERO,
        Bidegree::new(-n, 0),
        Bidegree::new(-n, -mm),
        Bidegree::new(0, -mm),
    ];
    if corners.iter().any(|c| !window.contains(*c)) {
        return Err(Error::WindowTooSmall {
            umin: window.umin,
            umax: window.umax,
            vmin: window.vmin,
            vmax: window.vmax,
        });
    }

    let nonzero = |d: Bidegree| !m.dim(d).is_zero();
    let mut report = CheckReport::default();

    for label in [
        RegionLabel::NE,
        RegionLabel::NWstar,
        RegionLabel::SstarWstar,
        RegionLabel::SstarE,
    ] {
        let points: Vec<Bidegree> = window
            .iter()
            .filter(|d| region_contains(ring, label, *d).unwrap())
            .collect();
        let first_nonzero = points.iter().copied().find(|&d| nonzero(d));
        match first_nonzero {
            None => report.push(true, format!("rigidity-1 {}", label), "zero on block".into()),
            Some(witness) => match points.iter().copied().find(|&d| !nonzero(d)) {
                None => report.push(
                    true,
                    format!("rigidity-1 {}", label),
                    format!("nonzero throughout, witness {}", witness),
                ),
                Some(hole) => report.push(
                    false,
                    format!("rigidity-1 {}", label),
                    format!("nonzero at {} but zero at {}", witness, hole),
                ),
            },
        }
    }

    let pairs = [
        (RegionLabel::TrunN, RegionLabel::N),
        (RegionLabel::TrunWstar, RegionLabel::Wstar),
        (RegionLabel::TrunSstar, RegionLabel::Sstar),
        (RegionLabel::TrunE, RegionLabel::E),
    ];
    for (trun, full) in pairs {
        let trigger = window
            .iter()
            .filter(|d| region_contains(ring, trun, *d).unwrap())
            .find(|&d| nonzero(d));
        match trigger {
            None => report.push(
                true,
                format!("rigidity-2 {}->{}", trun, full),
                "zero on truncated strip".into(),
            ),
            Some(witness) => {
                let hole = window
                    .iter()
                    .filter(|d| region_contains(ring, full, *d).unwrap())
                    .find(|&d| !nonzero(d));
                match hole {
                    None => report.push(
                        true,
                        format!("rigidity-2 {}->{}", trun, full),
                        format!("strip filled, witness {}", witness),
                    ),
                    Some(hole) => report.push(
                        false,
                        format!("rigidity-2 {}->{}", trun, full),
                        format!("nonzero at {} but zero at {}", witness, hole),
                    ),
                }
            }
        }
    }

    // Central rectangle: nonzero there spreads to the whole plane.
    let center = window
        .iter()
        .filter(|d| -n < d.u && d.u < 0 && -mm < d.v && d.v < 0)
        .find(|&d| nonzero(d));
    match center {
        None => report.push(true, "rigidity-2 center", "zero on central rectangle"),
        Some(witness) => match window.iter().find(|&d| !nonzero(d)) {
            None => report.push(
                true,
                "rigidity-2 center",
                format!("plane filled, witness {}", witness),
            ),
            Some(hole) => report.push(
                false,
                "rigidity-2 center",
                format!("nonzero at {} but zero at {}", witness, hole),
            ),
        },
    }

    Ok(report)
}

// ---------------------------------------------------------------------------
// Vanishing.
// ---------------------------------------------------------------------------

/// A cross-shaped band: the vertical strip `-b1 <= u <= a1` united with the
/// horizontal strip `-b2 <= v <= a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossBand {
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
}

impl CrossBand {
    pub fn new(a1: i64, b1: i64, a2: i64, b2: i64) -> Self {
        assert!(a1 < b1 && a2 < b2, "band parameters out of order");
        CrossBand { a1, b1, a2, b2 }
    }

    pub fn default_for(ring: &RingSpec) -> Self {
        let n = ring.n() as i64;
        let m = ring.m() as i64;
        CrossBand::new(n + 2, n + 3, m + 2, m + 3)
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        (-self.b1 <= d.u && d.u <= self.a1) || (-self.b2 <= d.v && d.v <= self.a2)
    }
}

/// Check the vanishing theorem's contrapositive on closed-form supports:
/// every nonzero summand must have a support point escaping the cross
/// entirely (outside both strips). Reports one witness per summand.
pub fn verify_vanishing(m: &GradedModule, band: &CrossBand) -> CheckReport {
    let mut report = CheckReport::default();
    if m.is_zero() {
        report.push(true, "vanishing", "zero module, vacuous");
        return report;
    }
    for (k, s) in m.summands().iter().enumerate() {
        let b = &s.box_module;
        let u = escape_coordinate(b.x_support(), band.a1, band.b1);
        let v = escape_coordinate(b.y_support(), band.a2, band.b2);
        match (u, v) {
            (Some(u), Some(v)) => {
                let witness = Bidegree::new(u, v);
                let dim_ok = !b.dim(witness).is_zero();
                debug_assert!(!band.contains(witness));
                report.push(
                    dim_ok,
                    format!("vanishing summand#{}", k),
                    format!("escape witness {}", witness),
                );
            }
            _ => report.push(
                false,
                format!("vanishing summand#{}", k),
                "support trapped in the cross band".into(),
            ),
        }
    }
    report
}

/// A support coordinate outside `[-b, a]`, if one exists.
fn escape_coordinate(support: SupportSet, a: i64, b: i64) -> Option<i64> {
    match support {
        SupportSet::PointZero => None,
        SupportSet::Ge(x0) => Some(x0.max(a + 1)),
        SupportSet::Le(x0) => Some(x0.min(-b - 1)),
        SupportSet::All => Some(a + 1),
    }
}

// ---------------------------------------------------------------------------
// Tameness.
// ---------------------------------------------------------------------------

/// What the tameness search exhibited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TamenessOutcome {
    /// Zero module, nothing to exhibit.
    Vacuous,
    /// One of the nine closed regions is nonzero at every window point.
    Region(RegionLabel),
    /// A translated quadrant anchored at `corner` with growth directions
    /// `(du, dv)` in `{-1, +1}^2` is filled.
    Translate { corner: Bidegree, du: i8, dv: i8 },
    /// No filled region was found.
    Failed,
}

#[derive(Debug, Clone)]
pub struct TamenessReport {
    pub outcome: TamenessOutcome,
    pub report: CheckReport,
}

impl TamenessReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

const TAMENESS_ORDER: [RegionLabel; 9] = [
    RegionLabel::NE,
    RegionLabel::NWstar,
    RegionLabel::SstarWstar,
    RegionLabel::SstarE,
    RegionLabel::N,
    RegionLabel::Wstar,
    RegionLabel::Sstar,
    RegionLabel::E,
    RegionLabel::C,
];

/// Exhibit a region on which the module is nonzero at every window point.
///
/// All nine closed regions are tried (blocks, then strips, then the plane);
/// among those that are filled, regions contained in a larger filled region
/// are dropped, so the report names the widest region the support fills.
/// When no named region is filled (shifted summands), translated quadrants
/// anchored at the first nonzero window point are tried as a fallback.
pub fn verify_tameness(m: &GradedModule, window: &Window) -> TamenessReport {
    let ring = m.ring();
    let mut report = CheckReport::default();
    if m.is_zero() || window.iter().all(|d| m.dim(d).is_zero()) {
        report.push(true, "tameness", "zero module on window, vacuous");
        return TamenessReport {
            outcome: TamenessOutcome::Vacuous,
            report,
        };
    }
    let nonzero = |d: Bidegree| !m.dim(d).is_zero();
    let filled: Vec<RegionLabel> = TAMENESS_ORDER
        .iter()
        .copied()
        .filter(|&label| {
            let mut any = false;
            for d in window.iter() {
                if region_contains(ring, label, d).unwrap() {
                    if !nonzero(d) {
                        return false;
                    }
                    any = true;
                }
            }
            any
        })
        .collect();
    if !filled.is_empty() {
        let maximal: Vec<RegionLabel> = filled
            .iter()
            .copied()
            .filter(|&a| {
                !filled.iter().any(|&b| {
                    a != b && label_cells(ring, a) & !label_cells(ring, b) == 0
                })
            })
            .collect();
        let exhibited = maximal[0];
        report.push(
            true,
            "tameness",
            format!(
                "region {} filled (all filled maximal regions: {})",
                exhibited,
                maximal
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
        return TamenessReport {
            outcome: TamenessOutcome::Region(exhibited),
            report,
        };
    }
    // Fallback: translated quadrants at the first nonzero point.
    let anchor = window.iter().find(|&d| nonzero(d)).expect("nonzero module");
    for (du, dv) in [(1i8, 1i8), (-1, 1), (-1, -1), (1, -1)] {
        let inside = |d: Bidegree| {
            (if du > 0 { d.u >= anchor.u } else { d.u <= anchor.u })
                && (if dv > 0 { d.v >= anchor.v } else { d.v <= anchor.v })
        };
        if window.iter().filter(|&d| inside(d)).all(nonzero) {
            report.push(
                true,
                "tameness",
                format!("translated quadrant at {} direction ({},{})", anchor, du, dv),
            );
            return TamenessReport {
                outcome: TamenessOutcome::Translate {
                    corner: anchor,
                    du,
                    dv,
                },
                report,
            };
        }
    }
    report.push(false, "tameness", "no filled region found".into());
    TamenessReport {
        outcome: TamenessOutcome::Failed,
        report,
    }
}
