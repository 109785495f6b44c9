//! Search for the smallest feasible number of trees in one positive
//! component.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::candidates::{Local, Shape};
use super::lp::{Lp, Outcome, Rel};
use super::propagate::{propagate, widest, Bounds};
use super::{Budget, Positivity};
use crate::{edge_key, DensityGraph, Error, MonotoneTree, Rational, Result, Variant};

const LP_COST: u64 = 10;

/// Everything the search needs about one connected graph of positive
/// vertices.
pub(crate) struct Instance<'a> {
    pub local: Local,
    pub f: &'a [Rational],
    scaled: Vec<i64>,
    widest: Vec<Vec<i64>>,
    variant: Variant,
    positivity: Positivity,
    candidates: Vec<Vec<Shape>>,
    /// Supports must be exactly the positive cores (every vertex positive).
    /// Valid whenever all rooted subtrees are candidates: the cores of a
    /// feasible configuration are again candidates with the same roots.
    cores_only: bool,
    /// Vertices as root choices, most promising first.
    root_order: Vec<usize>,
}

impl<'a> Instance<'a> {
    pub fn new(h: &'a DensityGraph, variant: Variant, positivity: Positivity) -> Result<Self> {
        let local = Local::new(h)?;
        let scaled = scale(h.densities())?;
        let widest = (0..local.n).map(|r| widest(&local, &scaled, r)).collect();
        let subtrees = variant == Variant::SM || positivity == Positivity::Strict;
        let candidates = if subtrees {
            if local.n > super::candidates::MAX_SUBSET_VERTICES {
                return Err(Error::TooLarge(format!(
                    "{} positive vertices in one component",
                    local.n
                )));
            }
            let mut per_root = vec![Vec::new(); local.n];
            for s in local.all_subtrees() {
                per_root[s.root].push(s);
            }
            for list in &mut per_root {
                // Large supports leave the LP the most freedom; try them first.
                list.sort_by_key(|s| std::cmp::Reverse(s.vmask.count_ones()));
            }
            per_root
        } else {
            let prune = variant != Variant::CM;
            (0..local.n)
                .map(|r| local.spanning_shapes(r, prune))
                .collect()
        };
        let mut root_order: Vec<usize> = (0..local.n).collect();
        root_order.sort_by(|&a, &b| h.density(b).cmp(h.density(a)).then(a.cmp(&b)));
        Ok(Instance {
            local,
            f: h.densities(),
            scaled,
            widest,
            variant,
            positivity,
            candidates,
            cores_only: subtrees,
            root_order,
        })
    }

    /// A feasible configuration of exactly `k` supports, as positive trees.
    ///
    /// `relaxation` is an instance of the same graph for a weaker variant;
    /// root choices it cannot realize are skipped.
    pub fn search(
        &self,
        k: usize,
        relaxation: Option<&Instance>,
        budget: &mut Budget,
    ) -> Result<Option<Vec<MonotoneTree>>> {
        let distinct = self.variant == Variant::FM;
        if distinct && k > self.local.n {
            return Ok(None);
        }
        for pick in root_multisets(self.local.n, k, distinct) {
            let roots: Vec<usize> = pick.iter().map(|&i| self.root_order[i]).collect();
            if let Some(weaker) = relaxation {
                if weaker.solve_roots(&roots, budget)?.is_none() {
                    continue;
                }
            }
            if let Some(w) = self.solve_roots(&roots, budget)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// A feasible configuration with the given roots.
    fn solve_roots(&self, roots: &[usize], budget: &mut Budget) -> Result<Option<Vec<MonotoneTree>>> {
        budget.spend(1)?;
        let full_root = self.variant == Variant::FM;
        let widest: Vec<&[i64]> = roots.iter().map(|&r| self.widest[r].as_slice()).collect();
        let unknown = vec![None; roots.len()];
        match propagate(&self.local, &self.scaled, roots, &unknown, &widest, full_root) {
            Some(bounds) => {
                let mut chosen = Vec::with_capacity(roots.len());
                self.assign(roots, &widest, &bounds, &mut chosen, budget)
            }
            None => Ok(None),
        }
    }

    fn assign<'s>(
        &'s self,
        roots: &[usize],
        widest: &[&[i64]],
        bounds: &Bounds,
        chosen: &mut Vec<(usize, &'s Shape)>,
        budget: &mut Budget,
    ) -> Result<Option<Vec<MonotoneTree>>> {
        let slot = chosen.len();
        if slot == roots.len() {
            let shapes: Vec<&Shape> = chosen.iter().map(|&(_, s)| s).collect();
            if !self.coverable(&shapes) {
                return Ok(None);
            }
            budget.spend(LP_COST)?;
            return Ok(solve(&self.local, self.f, &shapes, self.variant, self.positivity)
                .map(|values| cores(&shapes, &values)));
        }
        let root = roots[slot];
        let start = match chosen.last() {
            Some(&(idx, _)) if roots[slot - 1] == root => idx + 1,
            _ => 0,
        };
        for (idx, shape) in self.candidates[root].iter().enumerate().skip(start) {
            if self.variant == Variant::SM
                && !chosen.iter().all(|(_, other)| shape.contractible_with(other))
            {
                continue;
            }
            // Vertices that must receive a positive value have to be inside.
            if (0..self.local.n).any(|v| bounds.lower(slot, v) > 0 && !shape.contains(v)) {
                continue;
            }
            if self.cores_only && shape.vertices().any(|v| bounds.upper(slot, v) == 0) {
                continue;
            }
            budget.spend(1)?;
            chosen.push((idx, shape));
            let mut shapes: Vec<Option<&Shape>> = chosen.iter().map(|&(_, s)| Some(s)).collect();
            shapes.resize(roots.len(), None);
            let next = propagate(
                &self.local,
                &self.scaled,
                roots,
                &shapes,
                widest,
                self.variant == Variant::FM,
            );
            let next = next.filter(|b| {
                !self.cores_only || shape.vertices().all(|v| b.upper(slot, v) > 0)
            });
            if let Some(next) = next {
                if let Some(w) = self.assign(roots, widest, &next, chosen, budget)? {
                    return Ok(Some(w));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    /// CM needs every edge inside some support.
    fn coverable(&self, shapes: &[&Shape]) -> bool {
        if self.variant != Variant::CM {
            return true;
        }
        let all = shapes.iter().fold(0u128, |acc, s| acc | s.emask);
        all.count_ones() as usize == self.local.edges.len()
    }
}

/// Nondecreasing index tuples over `0..n` (strictly increasing when
/// `distinct`), those with fewer repeated entries first.
fn root_multisets(n: usize, k: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, distinct: bool, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        let start = match pick.last() {
            Some(&p) if distinct => p + 1,
            Some(&p) => p,
            None => 0,
        };
        for i in start..n {
            pick.push(i);
            rec(n, k, distinct, pick, out);
            pick.pop();
        }
    }
    rec(n, k, distinct, &mut pick, &mut out);
    out.sort_by_key(|p| p.windows(2).filter(|w| w[0] == w[1]).count());
    out
}

fn scale(f: &[Rational]) -> Result<Vec<i64>> {
    let too_large = || Error::TooLarge("densities do not fit in 64-bit integers".into());
    let mut lcm = num_bigint::BigInt::one();
    for x in f {
        lcm = lcm.lcm(x.denom());
    }
    f.iter()
        .map(|x| {
            let scaled = x.numer() * (&lcm / x.denom());
            scaled.to_i64().filter(|v| *v < i64::MAX / 64).ok_or_else(too_large)
        })
        .collect()
}

/// Exact LP over fixed supports. Returns per-support values indexed by
/// vertex when feasible.
pub(crate) fn solve(
    local: &Local,
    f: &[Rational],
    shapes: &[&Shape],
    variant: Variant,
    positivity: Positivity,
) -> Option<Vec<Vec<Rational>>> {
    let n = local.n;
    let mut index = vec![vec![usize::MAX; n]; shapes.len()];
    let mut vars = 0;
    for (s, shape) in shapes.iter().enumerate() {
        for v in shape.vertices() {
            index[s][v] = vars;
            vars += 1;
        }
    }
    let needs_slack = variant == Variant::CM || positivity == Positivity::Strict;
    let t = vars;
    let mut lp = Lp::new(vars + usize::from(needs_slack));
    let one = Rational::one;

    for v in 0..n {
        let terms: Vec<(usize, Rational)> = (0..shapes.len())
            .filter(|&s| index[s][v] != usize::MAX)
            .map(|s| (index[s][v], one()))
            .collect();
        if terms.is_empty() {
            if f[v].is_positive() {
                return None;
            }
            continue;
        }
        lp.add(terms, Rel::Eq, f[v].clone());
    }
    for (s, shape) in shapes.iter().enumerate() {
        for &(c, p) in &shape.order {
            lp.add(vec![(index[s][c], one()), (index[s][p], -one())], Rel::Le, Rational::zero());
        }
        if variant == Variant::FM {
            let r = shape.root;
            lp.add(vec![(index[s][r], one())], Rel::Eq, f[r].clone());
        }
        if positivity == Positivity::Strict {
            for v in shape.vertices() {
                lp.add(vec![(index[s][v], one()), (t, -one())], Rel::Ge, Rational::zero());
            }
        }
    }
    if variant == Variant::CM {
        for (id, &(u, w)) in local.edges.iter().enumerate() {
            if !(f[u].is_positive() && f[w].is_positive()) {
                continue;
            }
            let mut terms: Vec<(usize, Rational)> = shapes
                .iter()
                .enumerate()
                .filter(|(_, shape)| shape.emask >> id & 1 == 1)
                .map(|(s, shape)| {
                    let child = if shape.parent[w] == u { w } else { u };
                    (index[s][child], one())
                })
                .collect();
            if terms.is_empty() {
                return None;
            }
            terms.push((t, -one()));
            lp.add(terms, Rel::Ge, Rational::zero());
        }
    }
    if needs_slack {
        lp.add(vec![(t, one())], Rel::Le, one());
        lp.objective = vec![(t, one())];
    }
    match lp.solve() {
        Outcome::Optimal { value, x } => {
            if needs_slack && !value.is_positive() {
                return None;
            }
            Some(
                index
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|&i| if i == usize::MAX { Rational::zero() } else { x[i].clone() })
                            .collect()
                    })
                    .collect(),
            )
        }
        Outcome::Infeasible | Outcome::Unbounded => None,
    }
}

/// Positive part of each support; supports whose root value is zero vanish.
pub(crate) fn cores(shapes: &[&Shape], values: &[Vec<Rational>]) -> Vec<MonotoneTree> {
    shapes
        .iter()
        .zip(values)
        .filter(|(shape, x)| x[shape.root].is_positive())
        .map(|(shape, x)| {
            MonotoneTree::new(
                shape.root,
                shape
                    .vertices()
                    .filter(|&v| x[v].is_positive())
                    .map(|v| (v, x[v].clone())),
                shape
                    .order
                    .iter()
                    .filter(|&&(c, _)| x[c].is_positive())
                    .map(|&(c, p)| edge_key(c, p)),
            )
        })
        .collect()
}
