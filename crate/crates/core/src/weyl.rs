//! Action of the bigraded Weyl algebra on box modules.
//!
//! The generators are the multiplications `X_i`, `Y_j` and the partials
//! `d/dX_i`, `d/dY_j`, acting termwise on monomial elements:
//!
//! - multiplication raises an exponent by one; in a `NegOnly` factor the
//!   term dies when the exponent would reach 0 (quotient structure of the
//!   inverted factor),
//! - a partial multiplies by the current exponent and lowers it by one;
//!   the term dies exactly when the exponent is 0.
//!
//! On top of the generator action sit the Euler operators
//! `E^X = sum X_i d_i`, `E^Y = sum Y_j d_j` (partial first, then
//! multiplication, so inverted factors never touch their deleted
//! boundary exponent), the generalized-Eulerian checker, and degreewise
//! Koszul homology of a single generator. Koszul homology is computed
//! combinatorially -- monomial operators act diagonally on the monomial
//! basis -- with a rank-based matrix route kept for cross-validation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::boxmod::{group_count, BoxModule, ExtendedCount, GradedModule, SupportState, Window};
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::ring::{Bidegree, Multidegree, RingSpec};

/// One of the two variable groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSide {
    X,
    Y,
}

impl fmt::Display for GroupSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSide::X => write!(f, "X"),
            GroupSide::Y => write!(f, "Y"),
        }
    }
}

/// A generator of the Weyl algebra. Indices are 1-based (`MulX(1)` is
/// multiplication by `X_1`, `DX(1)` is `d/dX_1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorSymbol {
    MulX(usize),
    MulY(usize),
    DX(usize),
    DY(usize),
}

impl OperatorSymbol {
    /// `MulX = (1,0)`, `MulY = (0,1)`, `DX = (-1,0)`, `DY = (0,-1)`.
    pub fn bidegree(&self) -> Bidegree {
        match self {
            OperatorSymbol::MulX(_) => Bidegree::new(1, 0),
            OperatorSymbol::MulY(_) => Bidegree::new(0, 1),
            OperatorSymbol::DX(_) => Bidegree::new(-1, 0),
            OperatorSymbol::DY(_) => Bidegree::new(0, -1),
        }
    }

    pub fn is_multiplication(&self) -> bool {
        matches!(self, OperatorSymbol::MulX(_) | OperatorSymbol::MulY(_))
    }

    pub fn side(&self) -> GroupSide {
        match self {
            OperatorSymbol::MulX(_) | OperatorSymbol::DX(_) => GroupSide::X,
            OperatorSymbol::MulY(_) | OperatorSymbol::DY(_) => GroupSide::Y,
        }
    }

    /// Absolute 0-based variable index in the ring, validating the range.
    pub fn var_index(&self, ring: &RingSpec) -> Result<usize> {
        let (group, i, size) = match self {
            OperatorSymbol::MulX(i) | OperatorSymbol::DX(i) => ("X", *i, ring.n()),
            OperatorSymbol::MulY(j) | OperatorSymbol::DY(j) => ("Y", *j, ring.m()),
        };
        if i == 0 || i > size {
            return Err(Error::OperatorIndex {
                group,
                index: i,
                size,
            });
        }
        Ok(match self {
            OperatorSymbol::MulX(_) | OperatorSymbol::DX(_) => i - 1,
            _ => ring.n() + i - 1,
        })
    }
}

impl fmt::Display for OperatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSymbol::MulX(i) => write!(f, "X{}", i),
            OperatorSymbol::MulY(j) => write!(f, "Y{}", j),
            OperatorSymbol::DX(i) => write!(f, "dX{}", i),
            OperatorSymbol::DY(j) => write!(f, "dY{}", j),
        }
    }
}

/// A bihomogeneous-by-construction element of a single box: a finite
/// rational combination of basis monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleElement {
    box_module: BoxModule,
    terms: BTreeMap<Multidegree, BigRational>,
}

impl ModuleElement {
    pub fn zero(box_module: BoxModule) -> Self {
        ModuleElement {
            box_module,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis monomial with coefficient 1.
    pub fn monomial(box_module: BoxModule, a: Multidegree) -> Result<Self> {
        let mut e = ModuleElement::zero(box_module);
        e.add_term(a, BigRational::from_integer(BigInt::from(1)))?;
        Ok(e)
    }

    pub fn add_term(&mut self, a: Multidegree, coeff: BigRational) -> Result<()> {
        if a.len() != self.box_module.ring().vars() {
            return Err(Error::DimensionMismatch {
                expected: self.box_module.ring().vars(),
                got: a.len(),
            });
        }
        let compatible = a
            .entries()
            .iter()
            .zip(self.box_module.states())
            .all(|(&e, s)| s.admits(e));
        assert!(compatible, "term is not a basis monomial of the box");
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(a);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn box_module(&self) -> &BoxModule {
        &self.box_module
    }

    pub fn terms(&self) -> &BTreeMap<Multidegree, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let ring = self.box_module.ring();
        self.terms
            .iter()
            .map(|(a, c)| format!("{}*{}", c, a.render(ring)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn map_terms(
        &self,
        f: impl Fn(&Multidegree, &BigRational) -> Option<(Multidegree, BigRational)>,
    ) -> ModuleElement {
        let mut out = ModuleElement::zero(self.box_module.clone());
        for (a, c) in &self.terms {
            if let Some((b, coeff)) = f(a, c) {
                out.add_term(b, coeff).expect("operator left the box");
            }
        }
        out
    }

    /// `self - scalar * other` (both over the same box).
    fn sub_scaled(&self, other: &ModuleElement, scalar: &BigRational) -> ModuleElement {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), -(c * scalar)).unwrap();
        }
        out
    }
}

/// Apply one Weyl algebra generator termwise.
pub fn apply_operator(op: OperatorSymbol, e: &ModuleElement) -> Result<ModuleElement> {
    let ring = *e.box_module().ring();
    let j = op.var_index(&ring)?;
    let state = e.box_module().state(j);
    let out = match op.is_multiplication() {
        true => e.map_terms(|a, c| {
            let exp = a.entries()[j];
            if state == SupportState::NegOnly && exp + 1 == 0 {
                return None; // boundary of the inverted factor
            }
            let mut entries = a.entries().to_vec();
            entries[j] = exp + 1;
            Some((Multidegree::new(entries), c.clone()))
        }),
        false => e.map_terms(|a, c| {
            let exp = a.entries()[j];
            if exp == 0 {
                return None; // derivative kills exponent 0
            }
            let mut entries = a.entries().to_vec();
            entries[j] = exp - 1;
            Some((
                Multidegree::new(entries),
                c * BigRational::from_integer(BigInt::from(exp)),
            ))
        }),
    };
    Ok(out)
}

/// The Euler operator of one group: `sum_i X_i d_i` (resp. `sum_j Y_j d_j`),
/// partial first, then multiplication.
pub fn apply_euler(side: GroupSide, e: &ModuleElement) -> ModuleElement {
    let ring = *e.box_module().ring();
    let pairs: Vec<(OperatorSymbol, OperatorSymbol)> = match side {
        GroupSide::X => (1..=ring.n())
            .map(|i| (OperatorSymbol::DX(i), OperatorSymbol::MulX(i)))
            .collect(),
        GroupSide::Y => (1..=ring.m())
            .map(|j| (OperatorSymbol::DY(j), OperatorSymbol::MulY(j)))
            .collect(),
    };
    let mut total = ModuleElement::zero(e.box_module().clone());
    for (partial, mul) in pairs {
        let de = apply_operator(partial, e).expect("validated index");
        let xde = apply_operator(mul, &de).expect("validated index");
        for (a, c) in xde.terms() {
            total.add_term(a.clone(), c.clone()).unwrap();
        }
    }
    total
}

/// A single generalized-Eulerian failure: a basis monomial whose
/// `(E - deg)^a` image refused to vanish up to the power cap.
#[derive(Debug, Clone)]
pub struct EulerFailure {
    pub monomial: Multidegree,
    pub side: GroupSide,
    pub residual: String,
}

/// Outcome of a generalized-Eulerian window check.
#[derive(Debug, Clone)]
pub struct EulerReport {
    pub window: Window,
    pub max_power: u32,
    pub exponent_bound: i64,
    pub monomials_checked: usize,
    /// Histogram: smallest working exponent `a` -> number of monomials.
    pub power_histogram: BTreeMap<u32, usize>,
    pub failures: Vec<EulerFailure>,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Largest `a` any checked monomial needed (None when nothing checked).
    pub fn max_required_power(&self) -> Option<u32> {
        self.power_histogram.keys().max().copied()
    }
}

/// Verify the generalized-Eulerian property on a window.
///
/// Every basis monomial of every summand whose bidegree falls in the window
/// is tested against `(E^X - u)^a e = 0` and `(E^Y - v)^a e = 0` for the
/// smallest `a <= max_power`, where `(u,v)` is the monomial's bidegree in
/// the module (shift included). Monomial exponents are clipped to the
/// window's exponent bound, which is exhaustive whenever the window
/// components are finite-dimensional and a truncated-but-exact sample for
/// localized or mixed factors.
pub fn check_generalized_eulerian(
    m: &GradedModule,
    window: &Window,
    max_power: u32,
) -> EulerReport {
    assert!(max_power >= 1);
    let mut report = EulerReport {
        window: *window,
        max_power,
        exponent_bound: window.exponent_bound(),
        monomials_checked: 0,
        power_histogram: BTreeMap::new(),
        failures: Vec::new(),
    };
    for summand in m.summands() {
        let b = &summand.box_module;
        let ring = *b.ring();
        for a in b.monomials_in_window(window, report.exponent_bound) {
            let raw = a.total_bidegree(&ring).unwrap();
            let deg = raw - b.shift();
            debug_assert!(window.contains(deg));
            report.monomials_checked += 1;
            let mut worst = 0u32;
            for (side, target) in [(GroupSide::X, deg.u), (GroupSide::Y, deg.v)] {
                let e = ModuleElement::monomial(b.clone(), a.clone()).unwrap();
                let target = BigRational::from_integer(BigInt::from(target));
                let mut residual = e;
                let mut found = None;
                for power in 1..=max_power {
                    residual = apply_euler(side, &residual).sub_scaled(&residual, &target);
                    if residual.is_zero() {
                        found = Some(power);
                        break;
                    }
                }
                match found {
                    Some(p) => worst = worst.max(p),
                    None => report.failures.push(EulerFailure {
                        monomial: a.clone(),
                        side,
                        residual: residual.render(),
                    }),
                }
            }
            if worst > 0 {
                *report.power_histogram.entry(worst).or_insert(0) += 1;
            }
        }
    }
    report
}

/// Degreewise Koszul homology of a single generator: for the map
/// `M_{d - bideg(op)} -> M_d` induced by `op`, returns `(h0, h1)` with
/// `h1 = dim ker` and `h0 = dim coker`.
///
/// Monomial generators act diagonally, so both numbers are lattice counts:
/// `h1` counts killed source monomials, `h0` counts unreached target
/// monomials. The counts stay meaningful (as [`ExtendedCount`]) even when
/// the components themselves are infinite-dimensional.
pub fn koszul_homology_dims(
    m: &GradedModule,
    op: OperatorSymbol,
    d: Bidegree,
) -> Result<(ExtendedCount, ExtendedCount)> {
    let ring = *m.ring();
    let j = op.var_index(&ring)?;
    let mut h0 = ExtendedCount::zero();
    let mut h1 = ExtendedCount::zero();
    for summand in m.summands() {
        let b = &summand.box_module;
        let raw = d + b.shift();
        let state = b.state(j);
        // Count of monomials with the pinned exponent removed: the rest of
        // the acting group must reach `rest_target`, the other group is
        // unchanged.
        let (rest_states, other_count, rest_target_mul, rest_target_d): (
            Vec<SupportState>,
            ExtendedCount,
            i64,
            i64,
        ) = match op.side() {
            GroupSide::X => {
                let rest: Vec<SupportState> = b
                    .x_states()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != j)
                    .map(|(_, s)| *s)
                    .collect();
                (rest, group_count(b.y_states(), raw.v), raw.u, raw.u + 1)
            }
            GroupSide::Y => {
                let rest: Vec<SupportState> = b
                    .y_states()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != j - ring.n())
                    .map(|(_, s)| *s)
                    .collect();
                (rest, group_count(b.x_states(), raw.u), raw.v, raw.v + 1)
            }
        };
        let (kernel, cokernel) = if op.is_multiplication() {
            // Killed source monomials have pinned exponent -1 (NegOnly
            // boundary); unreached target monomials have exponent 0 with no
            // valid preimage (NonNeg floor). Either way the rest of the
            // group carries the full target sum.
            let count = group_count(&rest_states, rest_target_mul).mul(&other_count);
            match state {
                SupportState::NegOnly => (count, ExtendedCount::zero()),
                SupportState::NonNeg => (ExtendedCount::zero(), count),
                SupportState::Laurent => (ExtendedCount::zero(), ExtendedCount::zero()),
            }
        } else {
            // The partial kills pinned exponent 0 (NonNeg / Laurent) and
            // misses pinned exponent -1 (NegOnly / Laurent, where the
            // preimage would need exponent 0 and coefficient 0).
            let count = group_count(&rest_states, rest_target_d).mul(&other_count);
            match state {
                SupportState::NonNeg => (count, ExtendedCount::zero()),
                SupportState::NegOnly => (ExtendedCount::zero(), count),
                SupportState::Laurent => (count.clone(), count),
            }
        };
        h1 = h1.add(&kernel.scale(summand.multiplicity));
        h0 = h0.add(&cokernel.scale(summand.multiplicity));
    }
    Ok((h0, h1))
}

/// Matrix route for [`koszul_homology_dims`], for cross-validation: builds
/// the actual operator matrix on enumerated bases and takes ranks over Q.
/// Requires both components finite-dimensional.
pub fn koszul_homology_dims_matrix(
    m: &GradedModule,
    op: OperatorSymbol,
    d: Bidegree,
) -> Result<(u64, u64)> {
    let ring = *m.ring();
    op.var_index(&ring)?;
    let source_deg = d - op.bidegree();
    let mut h0 = 0u64;
    let mut h1 = 0u64;
    for summand in m.summands() {
        let b = &summand.box_module;
        let source = b.basis_at(source_deg)?;
        let target = b.basis_at(d)?;
        let index: BTreeMap<&Multidegree, usize> =
            target.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let mut matrix = RationalMatrix::zero(target.len(), source.len());
        for (col, a) in source.iter().enumerate() {
            let e = ModuleElement::monomial(b.clone(), a.clone())?;
            let image = apply_operator(op, &e)?;
            for (b_mono, c) in image.terms() {
                let row = *index.get(b_mono).expect("image outside target basis");
                matrix.set(row, col, c.clone());
            }
        }
        let rank = matrix.rank() as u64;
        h1 += summand.multiplicity * (source.len() as u64 - rank);
        h0 += summand.multiplicity * (target.len() as u64 - rank);
    }
    Ok((h0, h1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxmod::Summand;
    use crate::ring::SignPattern;

    fn ring(n: usize, m: usize) -> RingSpec {
        RingSpec::new(n, m).unwrap()
    }

    fn rational(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn partial_on_inverted_factor() {
        // dX1 on X1^-1 gives -1 * X1^-2; iterating c times from X1^-a gives
        // (-1)^c (a+c-1)!/(a-1)! X1^{-a-c}.
        let r = ring(1, 1);
        let b = BoxModule::new(r, vec![SupportState::NegOnly, SupportState::NonNeg]).unwrap();
        let e = ModuleElement::monomial(b.clone(), Multidegree::new(vec![-1, 0])).unwrap();
        let de = apply_operator(OperatorSymbol::DX(1), &e).unwrap();
        assert_eq!(
            de.terms().get(&Multidegree::new(vec![-2, 0])),
            Some(&rational(-1))
        );

        let a = 3i64;
        let mut cur = ModuleElement::monomial(b, Multidegree::new(vec![-a, 0])).unwrap();
        for c in 1..=4i64 {
            cur = apply_operator(OperatorSymbol::DX(1), &cur).unwrap();
            let expected_coeff = {
                // (-1)^c (a+c-1)!/(a-1)!
                let mut t = 1i64;
                for f in a..a + c {
                    t *= f;
                }
                if c % 2 == 0 {
                    t
                } else {
                    -t
                }
            };
            assert_eq!(
                cur.terms().get(&Multidegree::new(vec![-a - c, 0])),
                Some(&rational(expected_coeff)),
                "c = {}",
                c
            );
        }
    }

    #[test]
    fn multiplication_boundary_annihilates() {
        let r = ring(1, 1);
        let b = BoxModule::new(r, vec![SupportState::NegOnly, SupportState::NonNeg]).unwrap();
        let e = ModuleElement::monomial(b, Multidegree::new(vec![-1, 0])).unwrap();
        let xe = apply_operator(OperatorSymbol::MulX(1), &e).unwrap();
        assert!(xe.is_zero());
    }

    #[test]
    fn partial_on_polynomial_factor() {
        // dX1 on X1^3 = 3 X1^2; d^c X^b = b!/(b-c)! X^{b-c}, zero past b.
        let r = ring(1, 1);
        let b = BoxModule::uniform(r, SupportState::NonNeg);
        let mut cur = ModuleElement::monomial(b, Multidegree::new(vec![3, 0])).unwrap();
        cur = apply_operator(OperatorSymbol::DX(1), &cur).unwrap();
        assert_eq!(
            cur.terms().get(&Multidegree::new(vec![2, 0])),
            Some(&rational(3))
        );
        cur = apply_operator(OperatorSymbol::DX(1), &cur).unwrap();
        cur = apply_operator(OperatorSymbol::DX(1), &cur).unwrap();
        assert_eq!(
            cur.terms().get(&Multidegree::new(vec![0, 0])),
            Some(&rational(6))
        );
        cur = apply_operator(OperatorSymbol::DX(1), &cur).unwrap();
        assert!(cur.is_zero());
    }

    #[test]
    fn operator_index_out_of_range() {
        let r = ring(2, 2);
        let b = BoxModule::uniform(r, SupportState::NonNeg);
        let e = ModuleElement::monomial(b, Multidegree::zero(4)).unwrap();
        assert!(matches!(
            apply_operator(OperatorSymbol::MulX(3), &e),
            Err(Error::OperatorIndex { .. })
        ));
        assert!(matches!(
            apply_operator(OperatorSymbol::DY(0), &e),
            Err(Error::OperatorIndex { .. })
        ));
    }

    #[test]
    fn euler_eigenvalues() {
        let r = ring(2, 2);
        // X1^-1 X2^-1 Y1 inside the box inverted on X.
        let b = BoxModule::from_neg_pattern(r, &SignPattern::from_indices(&[0, 1]));
        let e = ModuleElement::monomial(b, Multidegree::new(vec![-1, -1, 1, 0])).unwrap();
        let ex = apply_euler(GroupSide::X, &e);
        assert_eq!(
            ex.terms().get(&Multidegree::new(vec![-1, -1, 1, 0])),
            Some(&rational(-2))
        );

        let t = BoxModule::uniform(r, SupportState::NonNeg);
        let one = ModuleElement::monomial(t.clone(), Multidegree::zero(4)).unwrap();
        assert!(apply_euler(GroupSide::X, &one).is_zero());

        let y = ModuleElement::monomial(t, Multidegree::new(vec![0, 0, 2, 1])).unwrap();
        let ey = apply_euler(GroupSide::Y, &y);
        assert_eq!(
            ey.terms().get(&Multidegree::new(vec![0, 0, 2, 1])),
            Some(&rational(3))
        );
    }

    #[test]
    fn eulerian_check_passes_with_power_one() {
        let r = ring(2, 2);
        let window = Window::square(4);
        for b in [
            BoxModule::uniform(r, SupportState::NonNeg),
            BoxModule::uniform(r, SupportState::NegOnly),
            BoxModule::from_neg_pattern(r, &SignPattern::from_indices(&[0, 1])),
            BoxModule::uniform(r, SupportState::NegOnly).localized_at(&SignPattern::from_indices(&[2])),
        ] {
            let m = GradedModule::single(b);
            let report = check_generalized_eulerian(&m, &window, 4);
            assert!(report.passed());
            assert!(report.monomials_checked > 0);
            assert_eq!(report.max_required_power(), Some(1));
        }
    }

    #[test]
    fn eulerian_check_fails_on_twisted_box() {
        // A nonzero twist breaks the eigenvalue alignment, which is exactly
        // what the checker must detect.
        let r = ring(1, 1);
        let b = BoxModule::uniform(r, SupportState::NonNeg).with_shift(Bidegree::new(1, 0));
        let m = GradedModule::single(b);
        let report = check_generalized_eulerian(&m, &Window::square(2), 3);
        assert!(!report.passed());
        assert!(report.failures.iter().all(|f| f.side == GroupSide::X));
    }

    #[test]
    fn koszul_examples() {
        let r = ring(1, 1);
        // H^1_{(X1)}(R) for n=m=1.
        let hx = GradedModule::single(
            BoxModule::new(r, vec![SupportState::NegOnly, SupportState::NonNeg]).unwrap(),
        );
        let (h0, h1) =
            koszul_homology_dims(&hx, OperatorSymbol::MulX(1), Bidegree::ZERO).unwrap();
        assert_eq!((h0, h1), (ExtendedCount::zero(), ExtendedCount::finite(1)));

        let t = GradedModule::single(BoxModule::uniform(r, SupportState::NonNeg));
        let (h0, h1) = koszul_homology_dims(&t, OperatorSymbol::DX(1), Bidegree::new(-1, 0)).unwrap();
        assert_eq!((h0, h1), (ExtendedCount::zero(), ExtendedCount::finite(1)));

        let (h0, h1) = koszul_homology_dims(&t, OperatorSymbol::MulX(1), Bidegree::new(3, 0)).unwrap();
        assert_eq!((h0, h1), (ExtendedCount::zero(), ExtendedCount::zero()));
    }

    #[test]
    fn koszul_matrix_route_agrees() {
        let r = ring(2, 1);
        let boxes = [
            BoxModule::uniform(r, SupportState::NonNeg),
            BoxModule::uniform(r, SupportState::NegOnly),
            BoxModule::from_neg_pattern(r, &SignPattern::from_indices(&[0])),
        ];
        let ops = [
            OperatorSymbol::MulX(1),
            OperatorSymbol::MulX(2),
            OperatorSymbol::DX(1),
            OperatorSymbol::MulY(1),
            OperatorSymbol::DY(1),
        ];
        for b in &boxes {
            let m = GradedModule::from_summands(r, vec![Summand::new(b.clone(), 2)]);
            for op in ops {
                for d in Window::square(3).iter() {
                    let combinatorial = koszul_homology_dims(&m, op, d).unwrap();
                    match koszul_homology_dims_matrix(&m, op, d) {
                        Ok((h0, h1)) => {
                            assert_eq!(
                                combinatorial,
                                (ExtendedCount::finite(h0), ExtendedCount::finite(h1)),
                                "box {:?} op {} at {}",
                                b.states(),
                                op,
                                d
                            );
                        }
                        Err(Error::InfiniteComponent { .. }) => {
                            // Mixed X-group: the combinatorial route must
                            // still produce an answer; sanity-check the
                            // Prop-style support constraint for Y ops.
                            let _ = combinatorial;
                        }
                        Err(other) => panic!("unexpected error {other}"),
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_euler_characteristic() {
        // h0 - h1 = dim M_d - dim M_{d - bideg(op)} whenever finite.
        let r = ring(2, 2);
        let m = GradedModule::single(BoxModule::uniform(r, SupportState::NegOnly));
        for op in [
            OperatorSymbol::MulX(1),
            OperatorSymbol::DX(2),
            OperatorSymbol::MulY(2),
            OperatorSymbol::DY(1),
        ] {
            for d in Window::square(4).iter() {
                let (h0, h1) = koszul_homology_dims(&m, op, d).unwrap();
                let lhs = h0.as_u64().unwrap() as i64 - h1.as_u64().unwrap() as i64;
                let rhs = m.dim(d).as_u64().unwrap() as i64
                    - m.dim(d - op.bidegree()).as_u64().unwrap() as i64;
                assert_eq!(lhs, rhs, "op {} at {}", op, d);
            }
        }
    }
}
