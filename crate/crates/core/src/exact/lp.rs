//! Exact two-phase simplex over rationals with Bland's rule.
//!
//! Small dense tableaux only; every variable is non-negative.

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rel {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coeffs: Vec<(usize, Rational)>,
    pub rel: Rel,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Lp {
    pub vars: usize,
    pub rows: Vec<Row>,
    /// Maximized; empty means a pure feasibility problem.
    pub objective: Vec<(usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

impl Lp {
    pub fn new(vars: usize) -> Self {
        Lp {
            vars,
            ..Default::default()
        }
    }

    pub fn add(&mut self, coeffs: Vec<(usize, Rational)>, rel: Rel, rhs: Rational) {
        self.rows.push(Row { coeffs, rel, rhs });
    }

    pub fn solve(&self) -> Outcome {
        // Small fractions first; redo in arbitrary precision on overflow.
        Tableau::<Small>::build(self)
            .and_then(|t| t.run(self))
            .or_else(|| Tableau::<Rational>::build(self).and_then(|t| t.run(self)))
            .expect("arbitrary precision never overflows")
    }
}

/// Exact field operations that may report overflow with `None`.
trait Num: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(x: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn div(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn lt(&self, other: &Self) -> Option<bool>;

    fn sub(&self, other: &Self) -> Option<Self> {
        self.add(&other.neg()?)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Num for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(x: &Rational) -> Option<Self> {
        Some(x.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn div(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn lt(&self, other: &Self) -> Option<bool> {
        Some(self < other)
    }
}

/// Fraction of two `i128` in lowest terms, denominator positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Small {
    n: i128,
    d: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    // Only gcd(MIN, 0) or gcd(MIN, MIN) exceed i128; both are even.
    i128::try_from(a).unwrap_or(2)
}

impl Small {
    fn new(n: i128, d: i128) -> Option<Self> {
        let g = gcd(n, d);
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            Some(Small {
                n: n.checked_neg()?,
                d: d.checked_neg()?,
            })
        } else {
            Some(Small { n, d })
        }
    }
}

impl Num for Small {
    fn zero() -> Self {
        Small { n: 0, d: 1 }
    }
    fn one() -> Self {
        Small { n: 1, d: 1 }
    }
    fn from_rational(x: &Rational) -> Option<Self> {
        use num_traits::ToPrimitive;
        Some(Small {
            n: x.numer().to_i128()?,
            d: x.denom().to_i128()?,
        })
    }
    fn to_rational(&self) -> Rational {
        Rational::new(self.n.into(), self.d.into())
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        if self.d == o.d {
            return Small::new(self.n.checked_add(o.n)?, self.d);
        }
        let g = gcd(self.d, o.d);
        let (a, b) = (self.d / g, o.d / g);
        let n = self.n.checked_mul(b)?.checked_add(o.n.checked_mul(a)?)?;
        Small::new(n, self.d.checked_mul(b)?)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        let g1 = gcd(self.n, o.d).max(1);
        let g2 = gcd(o.n, self.d).max(1);
        Small::new(
            (self.n / g1).checked_mul(o.n / g2)?,
            (self.d / g2).checked_mul(o.d / g1)?,
        )
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.mul(&Small::new(o.d, o.n)?)
    }
    fn neg(&self) -> Option<Self> {
        Some(Small {
            n: self.n.checked_neg()?,
            d: self.d,
        })
    }
    fn lt(&self, o: &Self) -> Option<bool> {
        Some(self.n.checked_mul(o.d)? < o.n.checked_mul(self.d)?)
    }
}

struct Tableau<T> {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    cols: usize,
    artificial_start: usize,
}

impl<T: Num> Tableau<T> {
    fn build(lp: &Lp) -> Option<Self> {
        let m = lp.rows.len();
        let slacks = lp.rows.iter().filter(|r| r.rel != Rel::Eq).count();
        let mut normalized = Vec::with_capacity(m);
        for row in &lp.rows {
            let flip = Signed::is_negative(&row.rhs);
            let rel = match (row.rel, flip) {
                (Rel::Le, true) => Rel::Ge,
                (Rel::Ge, true) => Rel::Le,
                (rel, _) => rel,
            };
            normalized.push((flip, rel));
        }
        let artificials = normalized.iter().filter(|(_, rel)| *rel != Rel::Le).count();
        let artificial_start = lp.vars + slacks;
        let cols = artificial_start + artificials;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (lp.vars, artificial_start);
        for (row, &(flip, rel)) in lp.rows.iter().zip(&normalized) {
            let mut r = vec![T::zero(); cols + 1];
            for (j, c) in &row.coeffs {
                let c = T::from_rational(c)?;
                r[*j] = r[*j].add(&if flip { c.neg()? } else { c })?;
            }
            let rhs = T::from_rational(&row.rhs)?;
            r[cols] = if flip { rhs.neg()? } else { rhs };
            match rel {
                Rel::Le => {
                    r[slack] = T::one();
                    basis.push(slack);
                    slack += 1;
                }
                Rel::Ge => {
                    r[slack] = T::one().neg()?;
                    slack += 1;
                    r[art] = T::one();
                    basis.push(art);
                    art += 1;
                }
                Rel::Eq => {
                    r[art] = T::one();
                    basis.push(art);
                    art += 1;
                }
            }
            rows.push(r);
        }
        Some(Tableau {
            rows,
            basis,
            cols,
            artificial_start,
        })
    }

    /// Reduced-cost row for maximizing `c`, priced out against the basis.
    fn objective_row(&self, c: Vec<T>) -> Option<Vec<T>> {
        let mut z = c;
        z.resize(self.cols + 1, T::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if !z[b].is_zero() {
                let factor = z[b].clone();
                for (zj, aij) in z.iter_mut().zip(&self.rows[i]) {
                    if !aij.is_zero() {
                        *zj = zj.sub(&factor.mul(aij)?)?;
                    }
                }
            }
        }
        Some(z)
    }

    fn pivot(&mut self, z: &mut [T], row: usize, col: usize) -> Option<()> {
        let p = self.rows[row][col].clone();
        if !p.is_one() {
            for x in self.rows[row].iter_mut() {
                if !x.is_zero() {
                    *x = x.div(&p)?;
                }
            }
        }
        let pivot_row = self.rows[row].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for &j in &nonzero {
                r[j] = r[j].sub(&factor.mul(&pivot_row[j])?)?;
            }
        }
        if !z[col].is_zero() {
            let factor = z[col].clone();
            for &j in &nonzero {
                z[j] = z[j].sub(&factor.mul(&pivot_row[j])?)?;
            }
        }
        self.basis[row] = col;
        Some(())
    }

    /// Maximizes the objective encoded in `z` over columns `< allowed`.
    /// Returns `Some(false)` when unbounded.
    fn optimize(&mut self, z: &mut [T], allowed: usize) -> Option<bool> {
        loop {
            let Some(col) = (0..allowed).find(|&j| z[j].is_positive()) else {
                return Some(true);
            };
            let mut best: Option<(T, usize)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if r[col].is_positive() {
                    let ratio = r[self.cols].div(&r[col])?;
                    let better = match &best {
                        None => true,
                        Some((q, b)) => {
                            ratio.lt(q)? || (ratio == *q && self.basis[i] < self.basis[*b])
                        }
                    };
                    if better {
                        best = Some((ratio, i));
                    }
                }
            }
            match best {
                None => return Some(false),
                Some((_, row)) => self.pivot(z, row, col)?,
            }
        }
    }

    fn run(mut self, lp: &Lp) -> Option<Outcome> {
        let cols = self.cols;
        if self.artificial_start < cols {
            let mut c = vec![T::zero(); cols];
            for x in &mut c[self.artificial_start..] {
                *x = T::one().neg()?;
            }
            let mut z = self.objective_row(c)?;
            self.optimize(&mut z, cols)?;
            if !z[cols].is_zero() {
                return Some(Outcome::Infeasible);
            }
            // Drive remaining artificials out of the basis; rows where that
            // is impossible are redundant.
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.artificial_start {
                    match (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(&mut z, i, j)?;
                            i += 1;
                        }
                        None => {
                            self.rows.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut c = vec![T::zero(); cols];
        for (j, v) in &lp.objective {
            c[*j] = c[*j].add(&T::from_rational(v)?)?;
        }
        let mut z = self.objective_row(c)?;
        if !self.optimize(&mut z, self.artificial_start)? {
            return Some(Outcome::Unbounded);
        }
        let mut x = vec![<Rational as Zero>::zero(); lp.vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < lp.vars {
                x[b] = self.rows[i][cols].to_rational();
            }
        }
        let value = lp
            .objective
            .iter()
            .map(|(j, v)| v * &x[*j])
            .fold(<Rational as Zero>::zero(), |a, b| a + b);
        Some(Outcome::Optimal { value, x })
    }
}
