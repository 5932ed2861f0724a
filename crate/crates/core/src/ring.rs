//! The ambient bigraded polynomial ring and its degree bookkeeping.
//!
//! The ring is `K[X_1..X_n, Y_1..Y_m]` over `K = Q`, bigraded by
//! `bideg X_i = (1,0)` and `bideg Y_j = (0,1)`. Elements of the crate work
//! either with coarse [`Bidegree`]s `(u,v)` or with fine [`Multidegree`]s
//! `a` in `Z^{n+m}` (first `n` entries for the X-variables, last `m` for
//! the Y-variables). [`SignPattern`] records the set of coordinates where
//! a multidegree is negative; degreewise Cech cohomology of a monomial
//! ideal depends only on that set.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Variable counts of the ambient ring: `n` X-variables of bidegree (1,0)
/// and `m` Y-variables of bidegree (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    n: usize,
    m: usize,
}

impl RingSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidRing { n, m });
        }
        // Sign patterns are stored as u64 bit masks.
        if n + m > 63 {
            return Err(Error::InvalidRing { n, m });
        }
        Ok(RingSpec { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total number of variables, `n + m`.
    pub fn vars(&self) -> usize {
        self.n + self.m
    }

    /// True if the 0-based variable index belongs to the X-group.
    pub fn is_x(&self, index: usize) -> bool {
        index < self.n
    }

    /// Canonical variable name for a 0-based index: `X1..Xn, Y1..Ym`.
    pub fn var_name(&self, index: usize) -> String {
        if index < self.n {
            format!("X{}", index + 1)
        } else {
            format!("Y{}", index + 1 - self.n)
        }
    }

    /// Resolve a variable token (`X3`, `Y1`) to its 0-based index.
    pub fn var_index(&self, token: &str) -> Result<usize> {
        let err = || Error::UnknownVariable(token.to_string());
        let (group, num) = token.split_at(1);
        let k: usize = num.parse().map_err(|_| err())?;
        if k == 0 {
            return Err(err());
        }
        match group {
            "X" if k <= self.n => Ok(k - 1),
            "Y" if k <= self.m => Ok(self.n + k - 1),
            _ => Err(err()),
        }
    }
}

/// A coarse degree `(u,v)` in `Z^2`.
///
/// The componentwise partial order is exposed through [`Bidegree::le`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub u: i64,
    pub v: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { u: 0, v: 0 };

    pub fn new(u: i64, v: i64) -> Self {
        Bidegree { u, v }
    }

    /// Componentwise order: `(u1,v1) <= (u2,v2)` iff `u1 <= u2` and `v1 <= v2`.
    pub fn le(&self, other: &Bidegree) -> bool {
        self.u <= other.u && self.v <= other.v
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(
            self.u.checked_add(rhs.u).expect("bidegree overflow"),
            self.v.checked_add(rhs.v).expect("bidegree overflow"),
        )
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(
            self.u.checked_sub(rhs.u).expect("bidegree overflow"),
            self.v.checked_sub(rhs.v).expect("bidegree overflow"),
        )
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.u, -self.v)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A fine degree in `Z^{n+m}`: one exponent per variable, X-group first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn new(entries: Vec<i64>) -> Self {
        Multidegree(entries)
    }

    pub fn zero(len: usize) -> Self {
        Multidegree(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Coarsen to `(u,v)`: `u` is the sum of the first `n` entries, `v` the
    /// sum of the last `m`.
    pub fn total_bidegree(&self, ring: &RingSpec) -> Result<Bidegree> {
        if self.len() != ring.vars() {
            return Err(Error::DimensionMismatch {
                expected: ring.vars(),
                got: self.len(),
            });
        }
        let u = self.0[..ring.n()].iter().sum();
        let v = self.0[ring.n()..].iter().sum();
        Ok(Bidegree::new(u, v))
    }

    /// The sign pattern `neg(a) = { j : a_j < 0 }`.
    pub fn neg_support(&self) -> SignPattern {
        let mut mask = 0u64;
        for (j, &e) in self.0.iter().enumerate() {
            if e < 0 {
                mask |= 1 << j;
            }
        }
        SignPattern { mask }
    }

    pub fn render(&self, ring: &RingSpec) -> String {
        let body: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, &e)| {
                if e == 1 {
                    ring.var_name(j)
                } else {
                    format!("{}^{}", ring.var_name(j), e)
                }
            })
            .collect();
        if body.is_empty() {
            "1".to_string()
        } else {
            body.join("*")
        }
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), rhs.len());
        Multidegree(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.checked_add(*b).expect("multidegree overflow"))
                .collect(),
        )
    }
}

/// A subset of the variable indices, stored as a bit mask.
///
/// Bit `j` corresponds to the 0-based variable index `j` (X-group first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignPattern {
    mask: u64,
}

impl SignPattern {
    pub const EMPTY: SignPattern = SignPattern { mask: 0 };

    pub fn from_mask(mask: u64) -> Self {
        SignPattern { mask }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u64;
        for &j in indices {
            mask |= 1 << j;
        }
        SignPattern { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, index: usize) -> bool {
        self.mask >> index & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_subset_of(&self, other: &SignPattern) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &SignPattern) -> SignPattern {
        SignPattern {
            mask: self.mask | other.mask,
        }
    }

    /// Iterate the member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(|j| self.contains(*j))
    }

    /// All `2^vars` sign patterns of a ring, in increasing mask order.
    pub fn all(ring: &RingSpec) -> impl Iterator<Item = SignPattern> {
        (0u64..1 << ring.vars()).map(|mask| SignPattern { mask })
    }

    pub fn render(&self, ring: &RingSpec) -> String {
        let names: Vec<String> = self.iter().map(|j| ring.var_name(j)).collect();
        format!("{{{}}}", names.join(","))
    }
}
